mod common;

use common::*;
use credence::{agr, agr_rf, agr_star, agr_un, un, BeliefState, Profile, Relation, Source};
use proptest::prelude::*;

fn three_sources() -> Profile {
    let u = universe(3);
    let s = |id: &str, rank, ps: &[(&str, &str)]| {
        let r = Relation::from_named_pairs(&u, ps.iter().copied()).unwrap();
        Source::new(id, rank, BeliefState::from_relation(r).unwrap())
    };
    Profile::new(
        &u,
        vec![
            s("s0", 1, &[("b", "a"), ("b", "c")]),
            s("s1", 1, &[("a", "b"), ("c", "b")]),
            s("s2", 2, &[("a", "b"), ("c", "b")]),
        ],
    )
    .unwrap()
}

#[test]
fn three_sources_operators_match_literal_oracles() {
    let p = three_sources();
    assert_eq!(agr_rf(&p), agr_rf_literal(&p));
    assert_eq!(agr_star(&p).relation(), &agr_star_literal(&p));
    assert_eq!(un(&p), union_literal(&p));
    assert_eq!(agr_star(&p).relation().len(), 7);
}

#[test]
fn refinement_by_hand() {
    let u = universe(3);
    let hi = BeliefState::from_relation(Relation::from_named_pairs(&u, [("a", "b"), ("a", "c")]).unwrap()).unwrap();
    let lo = BeliefState::from_relation(Relation::from_named_pairs(&u, [("b", "c"), ("b", "a"), ("c", "a")]).unwrap())
        .unwrap();
    let p = Profile::new(&u, vec![Source::new("hi", 2, hi), Source::new("lo", 1, lo)]).unwrap();
    let expected = Relation::from_named_pairs(&u, [("a", "b"), ("a", "c"), ("b", "c")]).unwrap();
    assert_eq!(agr_rf(&p), expected);
    assert_eq!(agr_rf_literal(&p), expected);
}

#[test]
fn empty_profiles_aggregate_to_nothing() {
    let p = Profile::empty(&universe(3));
    assert!(un(&p).is_empty());
    assert!(agr_un(&p).relation().is_empty());
    assert!(agr_rf(&p).is_empty());
    assert!(agr_star(&p).relation().is_empty());
    assert!(agr(&p).relation().is_empty());
}

proptest! {
    #![proptest_config(config(400))]

    #[test]
    fn operators_match_oracles(seed in any::<u64>()) {
        let p = random_case(&mut rng(seed), 5, 5, Ranks::Random);
        prop_assert_eq!(un(&p), union_literal(&p));
        prop_assert_eq!(agr_un(&p).into_relation(), closure_bfs(&union_literal(&p)));
        prop_assert_eq!(agr_rf(&p), agr_rf_literal(&p));
        prop_assert_eq!(agr_star(&p).into_relation(), agr_star_literal(&p));
        prop_assert_eq!(agr(&p).into_relation(), closure_bfs(&agr_rf_literal(&p)));
    }

    #[test]
    fn outputs_are_belief_states(seed in any::<u64>()) {
        let p = random_case(&mut rng(seed), 6, 5, Ranks::Random);
        prop_assert!(in_b(agr_un(&p).relation()));
        prop_assert!(in_b(agr_star(&p).relation()));
        prop_assert!(in_b(agr(&p).relation()));
        prop_assert!(modular_bf(&un(&p)));
        prop_assert!(modular_bf(&agr_rf(&p)));
    }

    #[test]
    fn strict_ranks_make_refinement_a_belief_state(seed in any::<u64>()) {
        let p = random_case(&mut rng(seed), 6, 5, Ranks::Strict);
        prop_assert!(in_b(&agr_rf(&p)));
        prop_assert_eq!(agr(&p).into_relation(), agr_rf(&p));
    }

    #[test]
    fn equal_ranks_collapse_to_union_closure(seed in any::<u64>()) {
        let p = random_case(&mut rng(seed), 6, 5, Ranks::Equal);
        prop_assert_eq!(agr(&p), agr_un(&p));
        prop_assert_eq!(agr_star(&p), agr_un(&p));
    }

    #[test]
    fn single_source_is_fixed(seed in any::<u64>()) {
        let p = random_case(&mut rng(seed), 6, 1, Ranks::Random);
        let state = &p.sources()[0].state;
        prop_assert_eq!(&un(&p), state.relation());
        prop_assert_eq!(&agr_un(&p), state);
        prop_assert_eq!(&agr_rf(&p), state.relation());
        prop_assert_eq!(&agr_star(&p), state);
        prop_assert_eq!(&agr(&p), state);
    }

    #[test]
    fn unanimous_pairs_survive(seed in any::<u64>()) {
        let p = random_case(&mut rng(seed), 6, 5, Ranks::Random);
        let out = agr(&p);
        let n = p.universe().len();
        for x in 0..n {
            for y in 0..n {
                if p.sources().iter().all(|s| s.state.precedes(x, y)) {
                    prop_assert!(out.precedes(x, y));
                }
            }
        }
    }

    #[test]
    fn closure_only_adds_conflicts(seed in any::<u64>()) {
        let p = random_case(&mut rng(seed), 6, 5, Ranks::Random);
        let rf = agr_rf(&p);
        let out = agr(&p);
        for (x, y) in pairs(out.relation()) {
            if !rf.contains(x, y) {
                prop_assert!(out.precedes(y, x), "({}, {}) added without conflict", x, y);
            }
        }
    }

    #[test]
    fn closing_parts_first_changes_nothing(seed in any::<u64>(), k in 1usize..5) {
        let mut g = rng(seed);
        let u = universe(5);
        let rs: Vec<Relation> = (0..k).map(|_| random_relation(&mut g, &u, 0.15)).collect();
        let direct = Relation::union_all(&u, rs.iter()).unwrap().transitive_closure();
        let closed: Vec<Relation> = rs.iter().map(Relation::transitive_closure).collect();
        let staged = Relation::union_all(&u, closed.iter()).unwrap().transitive_closure();
        prop_assert_eq!(direct, staged);
    }
}
