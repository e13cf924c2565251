//! Pedigreed belief states and multi-agent fusion.
//!
//! A pedigreed belief state is the refinement [`agr_rf`] of an agent's
//! informant sources with every pair labeled by the highest rank of a source
//! asserting it. The labels are enough to fuse agents without their sources:
//! merging two pedigrees yields exactly the pedigree of the union of their
//! informants, so [`PedigreedBeliefState::merge`] is idempotent, commutative
//! and associative and any delivery order converges to the same state.
//!
//! [`agr_rf`]: crate::aggregate::agr_rf

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::aggregate::{agr, Profile, Rank};
use crate::belief::BeliefState;
use crate::error::{Error, Result};
use crate::relation::{same_universe, Relation};
use crate::universe::WorldUniverse;

#[derive(Clone, PartialEq, Eq)]
pub struct PedigreedBeliefState {
    universe: Arc<WorldUniverse>,
    labels: Vec<Option<Rank>>,
}

impl PedigreedBeliefState {
    pub fn empty(universe: &Arc<WorldUniverse>) -> Self {
        let n = universe.len();
        Self {
            universe: Arc::clone(universe),
            labels: vec![None; n * n],
        }
    }

    /// Builds a pedigree from explicit labeled pairs. The pair set must be
    /// modular, and a conflicting pair must carry the same label in both
    /// directions, as every pedigree generated from sources does.
    pub fn new<I>(universe: &Arc<WorldUniverse>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), Rank)>,
    {
        let mut out = Self::empty(universe);
        let n = universe.len();
        for ((x, y), r) in pairs {
            if x >= n || y >= n {
                return Err(Error::InvalidPedigree(format!("world index out of range: ({x},{y})")));
            }
            let slot = &mut out.labels[x * n + y];
            if slot.is_some_and(|prev| prev != r) {
                return Err(Error::InvalidPedigree(format!(
                    "pair ({}, {}) labeled twice",
                    universe.name(x),
                    universe.name(y)
                )));
            }
            *slot = Some(r);
        }
        for x in 0..n {
            for y in 0..n {
                if let (Some(a), Some(b)) = (out.label(x, y), out.label(y, x)) {
                    if a != b {
                        return Err(Error::InvalidPedigree(format!(
                            "conflicting pair {} / {} labeled {a} and {b}",
                            universe.name(x),
                            universe.name(y)
                        )));
                    }
                }
            }
        }
        if let Some(t) = out.relation().modularity_witness() {
            let [x, y, z] = out.relation().name_triple(t);
            return Err(Error::InvalidPedigree(format!(
                "pairs are not modular: {x} < {y}, but neither {x} < {z} nor {z} < {y}"
            )));
        }
        Ok(out)
    }

    /// The pedigreed belief state of an agent informed by `profile`.
    pub fn from_sources(profile: &Profile) -> Self {
        let universe = profile.universe();
        let n = universe.len();
        let mut out = Self::empty(universe);
        for x in 0..n {
            for y in 0..n {
                let Some(top) = profile.opinion_rank(x, y) else {
                    continue;
                };
                // The pair survives refinement iff a source at the top opinion
                // rank asserts it, in which case that is also its support rank.
                if profile.support_rank(x, y) == Some(top) {
                    out.labels[x * n + y] = Some(top);
                }
            }
        }
        out
    }

    pub fn universe(&self) -> &Arc<WorldUniverse> {
        &self.universe
    }

    pub fn label(&self, x: usize, y: usize) -> Option<Rank> {
        self.labels[x * self.universe.len() + y]
    }

    /// Labeled pairs sorted by `(x, y)` in universe order.
    pub fn pairs(&self) -> impl Iterator<Item = ((usize, usize), Rank)> + '_ {
        let n = self.universe.len();
        self.labels
            .iter()
            .enumerate()
            .filter_map(move |(i, l)| l.map(|r| ((i / n, i % n), r)))
    }

    pub fn len(&self) -> usize {
        self.labels.iter().flatten().count()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.iter().all(Option::is_none)
    }

    /// The unlabeled pair set.
    pub fn relation(&self) -> Relation {
        Relation::from_pairs(&self.universe, self.pairs().map(|(p, _)| p).collect::<Vec<_>>())
    }

    /// Pairs labeled exactly `rank`.
    pub fn restrict(&self, rank: Rank) -> Relation {
        Relation::from_pairs(
            &self.universe,
            self.pairs()
                .filter(|&(_, r)| r == rank)
                .map(|(p, _)| p)
                .collect::<Vec<_>>(),
        )
    }

    /// Distinct labels, most credible first.
    pub fn ranks(&self) -> Vec<Rank> {
        let set: BTreeSet<Rank> = self.labels.iter().flatten().copied().collect();
        set.into_iter().rev().collect()
    }

    /// The transitive closure of the pair set.
    pub fn induced_state(&self) -> BeliefState {
        BeliefState::new_unchecked(self.relation().transitive_closure())
    }

    /// Fuses two pedigrees: for each pair of worlds the highest label either
    /// state holds on `{x, y}` wins, and `(x, y)` is kept iff some state
    /// holds `(x, y)` at that label.
    pub fn merge(&self, other: &Self) -> Result<Self> {
        if !same_universe(&self.universe, &other.universe) {
            return Err(Error::UniverseMismatch);
        }
        let n = self.universe.len();
        let mut out = Self::empty(&self.universe);
        for x in 0..n {
            for y in 0..n {
                let top = [
                    self.label(x, y),
                    self.label(y, x),
                    other.label(x, y),
                    other.label(y, x),
                ]
                .into_iter()
                .flatten()
                .max();
                let Some(top) = top else { continue };
                if self.label(x, y) == Some(top) || other.label(x, y) == Some(top) {
                    out.labels[x * n + y] = Some(top);
                }
            }
        }
        Ok(out)
    }

    /// Fuses any number of pedigrees; the empty list yields the empty pedigree.
    pub fn fuse<'a, I>(universe: &Arc<WorldUniverse>, states: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a PedigreedBeliefState>,
    {
        states
            .into_iter()
            .try_fold(Self::empty(universe), |acc, s| acc.merge(s))
    }
}

impl std::fmt::Debug for PedigreedBeliefState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set()
            .entries(self.pairs().map(|((x, y), r)| {
                format!("({},{})@{r}", self.universe.name(x), self.universe.name(y))
            }))
            .finish()
    }
}

/// Fusion shortcut for equal-rank sources: the closure of the union of the
/// agents' induced states.
pub fn fuse_equal_rank<'a, I>(universe: &Arc<WorldUniverse>, states: I) -> Result<BeliefState>
where
    I: IntoIterator<Item = &'a BeliefState>,
{
    let union = Relation::union_all(universe, states.into_iter().map(BeliefState::relation))?;
    Ok(BeliefState::new_unchecked(union.transitive_closure()))
}

/// An agent informed by a (possibly empty) profile of sources.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Agent {
    pub id: String,
    pub informants: Profile,
}

impl Agent {
    pub fn new(id: impl Into<String>, informants: Profile) -> Self {
        Self {
            id: id.into(),
            informants,
        }
    }

    pub fn pedigree(&self) -> PedigreedBeliefState {
        PedigreedBeliefState::from_sources(&self.informants)
    }

    pub fn induced_state(&self) -> BeliefState {
        agr(&self.informants)
    }
}

/// The pedigree of an agent informed by every source of every agent.
pub fn global_reference(universe: &Arc<WorldUniverse>, agents: &[Agent]) -> Result<PedigreedBeliefState> {
    let union = agents
        .iter()
        .try_fold(Profile::empty(universe), |acc, a| acc.union(&a.informants))?;
    Ok(PedigreedBeliefState::from_sources(&union))
}
