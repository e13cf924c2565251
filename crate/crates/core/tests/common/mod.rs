//! Brute-force oracles and random generators shared by the integration tests.
//!
//! Every oracle here is written directly from the definitions, with no calls
//! into the library's algorithms beyond data access.

#![allow(dead_code)]

use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use credence::{BeliefState, Block, LayeredForm, PedigreedBeliefState, Profile, Rank, Relation, Source, WorldUniverse};
use proptest::test_runner::{Config, RngSeed};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Deterministic proptest configuration.
pub fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x5EED),
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn universe(n: usize) -> Arc<WorldUniverse> {
    const NAMES: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];
    Arc::new(WorldUniverse::new(NAMES[..n].iter().copied()).unwrap())
}

/// All 2^(n*n) relations over a universe of size `n`.
pub fn all_relations(u: &Arc<WorldUniverse>) -> impl Iterator<Item = Relation> + '_ {
    let n = u.len();
    (0u64..1 << (n * n)).map(move |m| Relation::from_bitmask(u, m))
}

pub fn pairs(r: &Relation) -> Vec<(usize, usize)> {
    let n = r.size();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if r.contains(x, y) {
                out.push((x, y));
            }
        }
    }
    out
}

// ---- relation oracles ----

pub fn reachable_from(r: &Relation, x: usize) -> Vec<bool> {
    let n = r.size();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([x]);
    while let Some(v) = queue.pop_front() {
        for (w, done) in seen.iter_mut().enumerate() {
            if r.contains(v, w) && !*done {
                *done = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Closure by breadth-first search from every world.
pub fn closure_bfs(r: &Relation) -> Relation {
    let n = r.size();
    let mut out = Vec::new();
    for x in 0..n {
        for (y, ok) in reachable_from(r, x).into_iter().enumerate() {
            if ok {
                out.push((x, y));
            }
        }
    }
    Relation::from_pairs(r.universe(), out)
}

/// Conflict: a path from x to y and a path from y to x (x may equal y).
pub fn conflict_by_paths(r: &Relation, x: usize, y: usize) -> bool {
    reachable_from(r, x)[y] && reachable_from(r, y)[x]
}

pub fn modular_bf(r: &Relation) -> bool {
    let n = r.size();
    (0..n).all(|x| (0..n).all(|y| !r.contains(x, y) || (0..n).all(|z| r.contains(x, z) || r.contains(z, y))))
}

pub fn transitive_bf(r: &Relation) -> bool {
    let n = r.size();
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| !(r.contains(x, y) && r.contains(y, z)) || r.contains(x, z))))
}

pub fn strict_bf(r: &Relation) -> Relation {
    let keep: Vec<_> = pairs(r).into_iter().filter(|&(x, y)| !r.contains(y, x)).collect();
    Relation::from_pairs(r.universe(), keep)
}

pub fn total_bf(r: &Relation) -> bool {
    let n = r.size();
    (0..n).all(|x| (0..n).all(|y| r.contains(x, y) || r.contains(y, x)))
}

pub fn in_b(r: &Relation) -> bool {
    modular_bf(r) && transitive_bf(r)
}

pub fn in_q(r: &Relation) -> bool {
    total_bf(r) && transitive_bf(&strict_bf(r))
}

pub fn in_t(r: &Relation) -> bool {
    total_bf(r) && transitive_bf(r)
}

/// Choice set from the definition: members of X with no strictly better member.
pub fn choice_bf(r: &Relation, xs: &[usize]) -> Vec<usize> {
    let s = strict_bf(r);
    xs.iter().copied().filter(|&x| !xs.iter().any(|&y| s.contains(y, x))).collect()
}

/// No cycle in the strict version, found by walking paths.
pub fn acyclic_bf(r: &Relation) -> bool {
    let s = strict_bf(r);
    (0..r.size()).all(|x| !conflict_by_paths(&s, x, x))
}

// ---- aggregation oracles ----

pub fn agnostic(r: &Relation, x: usize, y: usize) -> bool {
    !r.contains(x, y) && !r.contains(y, x)
}

/// Refinement read literally: some source asserts x < y and every strictly
/// more credible source is agnostic on {x, y}.
pub fn agr_rf_literal(p: &Profile) -> Relation {
    let n = p.universe().len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let keep = p.sources().iter().any(|s| {
                s.state.relation().contains(x, y)
                    && p.sources()
                        .iter()
                        .filter(|t| t.rank > s.rank)
                        .all(|t| agnostic(t.state.relation(), x, y))
            });
            if keep {
                out.push((x, y));
            }
        }
    }
    Relation::from_pairs(p.universe(), out)
}

/// Labels as defined for pedigreed states: each refined pair gets the
/// highest rank among the sources asserting it.
pub fn pedigree_literal(p: &Profile) -> BTreeMap<(usize, usize), Rank> {
    pairs(&agr_rf_literal(p))
        .into_iter()
        .map(|(x, y)| {
            let r = p
                .sources()
                .iter()
                .filter(|s| s.state.relation().contains(x, y))
                .map(|s| s.rank)
                .max()
                .unwrap();
            ((x, y), r)
        })
        .collect()
}

pub fn labels(p: &PedigreedBeliefState) -> BTreeMap<(usize, usize), Rank> {
    p.pairs().collect()
}

pub fn union_literal(p: &Profile) -> Relation {
    let all: Vec<_> = p.sources().iter().flat_map(|s| pairs(s.state.relation())).collect();
    Relation::from_pairs(p.universe(), all)
}

/// The strawman per-rank construction, written from its definition.
pub fn agr_star_literal(p: &Profile) -> Relation {
    let n = p.universe().len();
    let mut ranks: Vec<Rank> = p.sources().iter().map(|s| s.rank).collect();
    ranks.sort();
    ranks.dedup();
    let per_rank: Vec<(Rank, Relation)> = ranks
        .iter()
        .map(|&r| {
            let sub: Vec<Source> = p.sources().iter().filter(|s| s.rank == r).cloned().collect();
            let sub = Profile::new(p.universe(), sub).unwrap();
            (r, closure_bfs(&union_literal(&sub)))
        })
        .collect();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let keep = per_rank.iter().any(|(r, rel)| {
                rel.contains(x, y) && per_rank.iter().filter(|(r2, _)| r2 > r).all(|(_, hi)| agnostic(hi, x, y))
            });
            if keep {
                out.push((x, y));
            }
        }
    }
    Relation::from_pairs(p.universe(), out)
}

// ---- generators ----

pub fn random_layers(rng: &mut impl Rng, u: &Arc<WorldUniverse>) -> LayeredForm {
    let mut worlds: Vec<usize> = (0..u.len()).collect();
    worlds.shuffle(rng);
    let mut blocks = Vec::new();
    let mut current = Vec::new();
    for w in worlds {
        current.push(w);
        if rng.random_bool(0.5) {
            blocks.push(Block {
                worlds: std::mem::take(&mut current),
                connected: rng.random_bool(0.3),
            });
        }
    }
    if !current.is_empty() {
        blocks.push(Block {
            worlds: current,
            connected: rng.random_bool(0.3),
        });
    }
    LayeredForm::new(u, blocks).unwrap()
}

pub fn random_state(rng: &mut impl Rng, u: &Arc<WorldUniverse>) -> BeliefState {
    if rng.random_bool(0.1) {
        return BeliefState::empty(u);
    }
    BeliefState::from_layers(&random_layers(rng, u))
}

pub fn random_relation(rng: &mut impl Rng, u: &Arc<WorldUniverse>, density: f64) -> Relation {
    let n = u.len();
    let ps: Vec<_> = (0..n * n)
        .filter(|_| rng.random_bool(density))
        .map(|i| (i / n, i % n))
        .collect();
    Relation::from_pairs(u, ps)
}

#[derive(Clone, Copy, Debug)]
pub enum Ranks {
    Random,
    Equal,
    Strict,
}

pub fn random_profile(rng: &mut impl Rng, u: &Arc<WorldUniverse>, max_sources: usize, ranks: Ranks) -> Profile {
    let count = rng.random_range(1..=max_sources);
    let mut strict: Vec<u32> = (0..count as u32 * 2).collect();
    strict.shuffle(rng);
    let equal = rng.random_range(0..4);
    let sources = (0..count)
        .map(|i| {
            let rank = match ranks {
                Ranks::Random => rng.random_range(0..4),
                Ranks::Equal => equal,
                Ranks::Strict => strict[i],
            };
            Source::new(format!("s{i}"), rank, random_state(rng, u))
        })
        .collect();
    Profile::new(u, sources).unwrap()
}

/// A random profile over a random universe of 2 to `max_worlds` worlds.
pub fn random_case(rng: &mut impl Rng, max_worlds: usize, max_sources: usize, ranks: Ranks) -> Profile {
    let u = universe(rng.random_range(2..=max_worlds));
    random_profile(rng, &u, max_sources, ranks)
}

/// Splits a profile among `k` agents; every source goes to at least one
/// agent and may be shared.
pub fn partition(rng: &mut impl Rng, p: &Profile, k: usize) -> Vec<Profile> {
    let mut groups: Vec<Vec<Source>> = vec![Vec::new(); k];
    for s in p.sources() {
        let owner = rng.random_range(0..k);
        groups[owner].push(s.clone());
        for (i, g) in groups.iter_mut().enumerate() {
            if i != owner && rng.random_bool(0.2) {
                g.push(s.clone());
            }
        }
    }
    groups
        .into_iter()
        .map(|g| Profile::new(p.universe(), g).unwrap())
        .collect()
}
