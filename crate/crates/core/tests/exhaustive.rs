//! Checks over every relation on universes of up to three worlds.

mod common;

use common::*;
use credence::{classify_class, BeliefState};

/// Member counts per universe size 1, 2, 3, fixed by the oracles in `common`.
const B_COUNTS: [usize; 3] = [2, 10, 74];
const Q_COUNTS: [usize; 3] = [1, 3, 19];
const Q_STRICT_COUNTS: [usize; 3] = [1, 3, 19];
const T_COUNTS: [usize; 3] = [1, 3, 13];

#[test]
fn property_flags_match_oracles() {
    for n in 1..=3 {
        let u = universe(n);
        for r in all_relations(&u) {
            let f = r.classify();
            assert_eq!(f.modular, modular_bf(&r), "{r:?}");
            assert_eq!(f.transitive, transitive_bf(&r), "{r:?}");
            assert_eq!(f.total, total_bf(&r), "{r:?}");
            assert_eq!(f.quasi_transitive, transitive_bf(&strict_bf(&r)), "{r:?}");
            assert_eq!(f.acyclic, acyclic_bf(&r), "{r:?}");
            assert!(!f.transitive || f.quasi_transitive);
            assert!(!f.quasi_transitive || f.acyclic);
            assert_eq!(r.strict_version(), strict_bf(&r));
        }
    }
}

#[test]
fn closure_matches_bfs_and_conflicts_match_paths() {
    for n in 1..=3 {
        let u = universe(n);
        for r in all_relations(&u) {
            let c = r.transitive_closure();
            assert_eq!(c, closure_bfs(&r), "{r:?}");
            assert_eq!(c.transitive_closure(), c);
            assert!(r.is_subset_of(&c));
            if r.is_modular() {
                assert!(c.is_modular(), "{r:?}");
            }
            for x in 0..n {
                for y in 0..n {
                    assert_eq!(r.in_conflict(x, y), conflict_by_paths(&r, x, y), "{r:?} {x} {y}");
                }
            }
        }
    }
}

#[test]
fn closure_is_monotone() {
    let u = universe(2);
    let all: Vec<_> = all_relations(&u).collect();
    for r in &all {
        for s in &all {
            if r.is_subset_of(s) {
                assert!(r.transitive_closure().is_subset_of(&s.transitive_closure()));
            }
        }
    }
}

#[test]
fn choice_function_iff_acyclic() {
    for n in 1..=3 {
        let u = universe(n);
        let subsets: Vec<Vec<usize>> = (1u32..1 << n)
            .map(|m| (0..n).filter(|i| m & (1 << i) != 0).collect())
            .collect();
        for r in all_relations(&u) {
            let mut always_non_empty = true;
            for xs in &subsets {
                let c = r.choice_set(xs).unwrap();
                assert_eq!(c, choice_bf(&r, xs));
                always_non_empty &= !c.is_empty();
            }
            assert_eq!(always_non_empty, r.is_acyclic(), "{r:?}");
        }
    }
}

#[test]
fn class_counts() {
    for n in 1..=3 {
        let u = universe(n);
        let mut counts = [0usize; 4];
        for r in all_relations(&u) {
            let f = classify_class(&r);
            counts[0] += f.in_b as usize;
            counts[1] += f.in_q as usize;
            counts[2] += f.in_q_strict as usize;
            counts[3] += f.in_t as usize;
        }
        let i = n - 1;
        assert_eq!(counts, [B_COUNTS[i], Q_COUNTS[i], Q_STRICT_COUNTS[i], T_COUNTS[i]], "|W| = {n}");
    }
}

#[test]
fn class_flags_match_search() {
    for n in 1..=3 {
        let u = universe(n);
        let members: Vec<_> = all_relations(&u).collect();
        let q_strict: Vec<_> = members.iter().filter(|t| in_q(t)).map(strict_bf).collect();
        let t_strict: Vec<_> = members.iter().filter(|t| in_t(t)).map(strict_bf).collect();
        for r in &members {
            let f = classify_class(r);
            assert_eq!(f.in_b, in_b(r), "{r:?}");
            assert_eq!(f.in_q, in_q(r), "{r:?}");
            assert_eq!(f.in_t, in_t(r), "{r:?}");
            assert_eq!(f.in_q_strict, q_strict.contains(r), "{r:?}");
            assert_eq!(f.in_t_strict, t_strict.contains(r), "{r:?}");
        }
    }
}

#[test]
fn class_relationships() {
    for n in 1..=3 {
        let u = universe(n);
        for r in all_relations(&u) {
            let f = classify_class(&r);
            assert_eq!(f.in_q && f.in_b, f.in_t, "{r:?}");
            assert_eq!(f.in_q_strict && f.in_b, f.in_t_strict, "{r:?}");
            assert_eq!(f.in_b && r.is_irreflexive(), f.in_t_strict, "{r:?}");
            assert_eq!(f.in_b && r.is_reflexive(), f.in_t, "{r:?}");
        }
    }
}

#[test]
fn two_world_classes_are_the_named_relations() {
    let u = universe(2);
    let q: Vec<_> = all_relations(&u).filter(|r| classify_class(r).in_q).collect();
    assert!(q.iter().all(|r| r.is_reflexive()));
    let qs: Vec<_> = all_relations(&u).filter(|r| classify_class(r).in_q_strict).collect();
    assert!(qs.iter().all(|r| r.is_irreflexive()));
    let b: Vec<_> = all_relations(&u).filter(|r| classify_class(r).in_b).collect();
    // Empty, full, and the eight relations that hold a pair xor its reverse.
    assert!(b.iter().any(|r| r.is_empty()));
    assert!(b.iter().any(|r| r.len() == 4));
}

#[test]
fn layered_form_round_trips() {
    for n in 1..=3 {
        let u = universe(n);
        for r in all_relations(&u).filter(in_b) {
            let b = BeliefState::from_relation(r.clone()).unwrap();
            let layers = b.to_layers();
            assert_eq!(BeliefState::from_layers(&layers).relation(), &r);
            // Blocks are the classes of worlds that look the same from everywhere.
            for blk in layers.blocks() {
                for &x in &blk.worlds {
                    for &y in &blk.worlds {
                        assert!((0..n).all(|z| r.contains(x, z) == r.contains(y, z) && r.contains(z, x) == r.contains(z, y)));
                    }
                }
            }
        }
    }
}

#[test]
fn agnosticism_transitive_iff_modular() {
    for n in 1..=3 {
        let u = universe(n);
        for r in all_relations(&u).filter(transitive_bf) {
            let agn = credence::belief::agnosticism_of(&r);
            assert!(agn.is_symmetric());
            assert_eq!(agn.is_transitive(), r.is_modular(), "{r:?}");
        }
    }
}

#[test]
fn total_quasi_transitive_non_transitive_has_non_transitive_symmetric_part() {
    let u = universe(3);
    let mut seen = 0;
    for r in all_relations(&u).filter(|r| in_q(r) && !transitive_bf(r)) {
        seen += 1;
        let sym: Vec<_> = pairs(&r).into_iter().filter(|&(x, y)| r.contains(y, x)).collect();
        let sym = credence::Relation::from_pairs(&u, sym);
        assert!(!sym.is_transitive(), "{r:?}");
    }
    assert!(seen > 0);
}
