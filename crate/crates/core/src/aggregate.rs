//! Ranked sources and the operators that aggregate them into belief states.
//!
//! | operator   | result                                                         |
//! |------------|----------------------------------------------------------------|
//! | [`un`]     | union of every source relation (modular, maybe not transitive) |
//! | [`agr_un`] | transitive closure of [`un`]                                   |
//! | [`agr_rf`] | refinement: higher ranks override, lower ranks fill agnosticism |
//! | [`agr_star`] | per-rank [`agr_un`], then refinement across ranks            |
//! | [`agr`]    | transitive closure of [`agr_rf`]                               |
//!
//! [`agr_star`] is kept as the strawman it is: closing each rank before
//! refining lets overridden opinions leak into the result. Use [`agr`].

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::belief::BeliefState;
use crate::error::{Error, Result};
use crate::relation::{same_universe, Relation};
use crate::universe::WorldUniverse;

/// Credibility level of a source. Larger is more credible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank(pub u32);

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Source {
    pub id: String,
    pub rank: Rank,
    pub state: BeliefState,
}

impl Source {
    pub fn new(id: impl Into<String>, rank: u32, state: BeliefState) -> Self {
        Self {
            id: id.into(),
            rank: Rank(rank),
            state,
        }
    }

    /// Whether the source relates `x` and `y` in either direction.
    fn has_opinion(&self, x: usize, y: usize) -> bool {
        self.state.precedes(x, y) || self.state.precedes(y, x)
    }
}

/// A finite set of sources over one universe, pre-ordered by rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    universe: Arc<WorldUniverse>,
    sources: Vec<Source>,
}

impl Profile {
    pub fn new(universe: &Arc<WorldUniverse>, sources: Vec<Source>) -> Result<Self> {
        let mut ids = HashSet::new();
        for s in &sources {
            if !same_universe(universe, s.state.universe()) {
                return Err(Error::UniverseMismatch);
            }
            if !ids.insert(s.id.as_str()) {
                return Err(Error::DuplicateSource(s.id.clone()));
            }
        }
        Ok(Self {
            universe: Arc::clone(universe),
            sources,
        })
    }

    pub fn empty(universe: &Arc<WorldUniverse>) -> Self {
        Self {
            universe: Arc::clone(universe),
            sources: Vec::new(),
        }
    }

    pub fn universe(&self) -> &Arc<WorldUniverse> {
        &self.universe
    }

    pub fn sources(&self) -> &[Source] {
        &self.sources
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&Source> {
        self.sources.iter().find(|s| s.id == id)
    }

    /// The sub-profile with the given ids, in the order given.
    pub fn subset<S: AsRef<str>>(&self, ids: &[S]) -> Result<Profile> {
        let sources = ids
            .iter()
            .map(|id| {
                let id = id.as_ref();
                self.get(id)
                    .cloned()
                    .ok_or_else(|| Error::UnknownSource(id.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Profile::new(&self.universe, sources)
    }

    /// Set union by source id. A shared id must denote the same source.
    pub fn union(&self, other: &Profile) -> Result<Profile> {
        if !same_universe(&self.universe, &other.universe) {
            return Err(Error::UniverseMismatch);
        }
        let mut sources = self.sources.clone();
        for s in &other.sources {
            match self.get(&s.id) {
                Some(existing) if existing == s => {}
                Some(_) => return Err(Error::DuplicateSource(s.id.clone())),
                None => sources.push(s.clone()),
            }
        }
        Ok(Profile {
            universe: Arc::clone(&self.universe),
            sources,
        })
    }

    /// Distinct represented ranks, most credible first.
    pub fn ranks(&self) -> Vec<Rank> {
        let mut ranks: Vec<Rank> = self.sources.iter().map(|s| s.rank).collect();
        ranks.sort_unstable_by(|a, b| b.cmp(a));
        ranks.dedup();
        ranks
    }

    /// All sources share one rank (the credibility pre-order is fully connected).
    pub fn is_equal_rank(&self) -> bool {
        self.ranks().len() <= 1
    }

    /// No two sources share a rank (the credibility pre-order is a total order).
    pub fn is_strictly_ranked(&self) -> bool {
        self.ranks().len() == self.sources.len()
    }

    fn at_rank(&self, rank: Rank) -> impl Iterator<Item = &Source> {
        self.sources.iter().filter(move |s| s.rank == rank)
    }

    /// Highest rank among sources holding any opinion on `{x, y}`.
    pub(crate) fn opinion_rank(&self, x: usize, y: usize) -> Option<Rank> {
        self.sources
            .iter()
            .filter(|s| s.has_opinion(x, y))
            .map(|s| s.rank)
            .max()
    }

    /// Highest rank among sources asserting `x < y`.
    pub(crate) fn support_rank(&self, x: usize, y: usize) -> Option<Rank> {
        self.sources
            .iter()
            .filter(|s| s.state.precedes(x, y))
            .map(|s| s.rank)
            .max()
    }
}

pub fn un(profile: &Profile) -> Relation {
    Relation::union_all(
        profile.universe(),
        profile.sources().iter().map(|s| s.state.relation()),
    )
    .expect("profile sources share the profile universe")
}

pub fn agr_un(profile: &Profile) -> BeliefState {
    BeliefState::new_unchecked(un(profile).transitive_closure())
}

/// `(x, y)` is kept iff some source asserts `x < y` and every strictly more
/// credible source is agnostic on `{x, y}`; equivalently, some source of the
/// highest rank holding an opinion on `{x, y}` asserts `x < y`.
pub fn agr_rf(profile: &Profile) -> Relation {
    let n = profile.universe().len();
    let mut out = Relation::empty(profile.universe());
    for x in 0..n {
        for y in 0..n {
            if let Some(top) = profile.opinion_rank(x, y) {
                if profile.at_rank(top).any(|s| s.state.precedes(x, y)) {
                    out.insert(x, y);
                }
            }
        }
    }
    out
}

pub fn agr_star(profile: &Profile) -> BeliefState {
    let universe = profile.universe();
    let per_rank: Vec<Relation> = profile
        .ranks()
        .into_iter()
        .map(|r| {
            let tier: Vec<&Relation> = profile.at_rank(r).map(|s| s.state.relation()).collect();
            Relation::union_all(universe, tier)
                .expect("profile sources share the profile universe")
                .transitive_closure()
        })
        .collect();
    let n = universe.len();
    let mut out = Relation::empty(universe);
    for x in 0..n {
        for y in 0..n {
            // Tiers are most credible first; the first tier with an opinion decides.
            if let Some(tier) = per_rank
                .iter()
                .find(|t| t.contains(x, y) || t.contains(y, x))
            {
                if tier.contains(x, y) {
                    out.insert(x, y);
                }
            }
        }
    }
    BeliefState::new_unchecked(out)
}

/// Rank-based aggregation: the transitive closure of [`agr_rf`].
pub fn agr(profile: &Profile) -> BeliefState {
    BeliefState::new_unchecked(agr_rf(profile).transitive_closure())
}
