//! Finite binary relations over a [`WorldUniverse`].
//!
//! A relation is stored as a dense `|W| x |W|` membership matrix indexed by
//! world position. Every property predicate is a direct quantifier sweep over
//! the universe; universes are small, and the exhaustive test suites
//! enumerate every relation on up to three worlds.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::universe::WorldUniverse;

/// A set of ordered world pairs.
#[derive(Clone)]
pub struct Relation {
    universe: Arc<WorldUniverse>,
    bits: Vec<bool>,
}

/// Every property of [`Relation::classify`], evaluated independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PropertyFlags {
    pub reflexive: bool,
    pub irreflexive: bool,
    pub symmetric: bool,
    pub asymmetric: bool,
    pub antisymmetric: bool,
    pub total: bool,
    pub modular: bool,
    pub transitive: bool,
    pub quasi_transitive: bool,
    pub acyclic: bool,
}

pub(crate) fn same_universe(a: &Arc<WorldUniverse>, b: &Arc<WorldUniverse>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Relation {
    pub fn empty(universe: &Arc<WorldUniverse>) -> Self {
        let n = universe.len();
        Self {
            universe: Arc::clone(universe),
            bits: vec![false; n * n],
        }
    }

    /// `W x W`, every pair including self-pairs.
    pub fn full(universe: &Arc<WorldUniverse>) -> Self {
        let n = universe.len();
        Self {
            universe: Arc::clone(universe),
            bits: vec![true; n * n],
        }
    }

    /// Builds a relation from world indices. Panics on an out-of-range index.
    pub fn from_pairs<I>(universe: &Arc<WorldUniverse>, pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut r = Self::empty(universe);
        for (x, y) in pairs {
            r.insert(x, y);
        }
        r
    }

    pub fn from_named_pairs<'a, I>(universe: &Arc<WorldUniverse>, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut r = Self::empty(universe);
        for (x, y) in pairs {
            let x = universe.index_of(x)?;
            let y = universe.index_of(y)?;
            r.insert(x, y);
        }
        Ok(r)
    }

    /// Decodes the `bits`-th relation in the enumeration used by the
    /// exhaustive suites: bit `x * n + y` is pair `(x, y)`.
    pub fn from_bitmask(universe: &Arc<WorldUniverse>, mask: u64) -> Self {
        let n = universe.len();
        assert!(n * n <= 64, "bitmask encoding only covers up to 8 worlds");
        let bits = (0..n * n).map(|i| mask >> i & 1 == 1).collect();
        Self {
            universe: Arc::clone(universe),
            bits,
        }
    }

    pub fn universe(&self) -> &Arc<WorldUniverse> {
        &self.universe
    }

    pub fn size(&self) -> usize {
        self.universe.len()
    }

    #[inline]
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.bits[x * self.size() + y]
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        let n = self.size();
        assert!(x < n && y < n, "world index out of range");
        self.bits[x * n + y] = true;
    }

    pub fn remove(&mut self, x: usize, y: usize) {
        let n = self.size();
        self.bits[x * n + y] = false;
    }

    pub fn contains_named(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.contains(self.universe.index_of(x)?, self.universe.index_of(y)?))
    }

    /// Number of pairs.
    pub fn len(&self) -> usize {
        self.bits.iter().filter(|b| **b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|b| *b)
    }

    /// Pairs in row-major order, i.e. sorted by `(x, y)` in universe order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.size();
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, b)| **b)
            .map(move |(i, _)| (i / n, i % n))
    }

    pub fn named_pairs(&self) -> Vec<(&str, &str)> {
        self.pairs()
            .map(|(x, y)| (self.universe.name(x), self.universe.name(y)))
            .collect()
    }

    fn worlds(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    fn check_universe(&self, other: &Relation) -> Result<()> {
        if same_universe(&self.universe, &other.universe) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn is_subset_of(&self, other: &Relation) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| !*a || *b)
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.check_universe(other)?;
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| *a || *b).collect();
        Ok(Relation {
            universe: Arc::clone(&self.universe),
            bits,
        })
    }

    /// Pairs of `self` that are not in `other`.
    pub fn difference(&self, other: &Relation) -> Result<Relation> {
        self.check_universe(other)?;
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| *a && !*b).collect();
        Ok(Relation {
            universe: Arc::clone(&self.universe),
            bits,
        })
    }

    /// Set union of every relation in `rs`; the empty list yields `∅`.
    pub fn union_all<'a, I>(universe: &Arc<WorldUniverse>, rs: I) -> Result<Relation>
    where
        I: IntoIterator<Item = &'a Relation>,
    {
        let mut acc = Relation::empty(universe);
        for r in rs {
            acc = acc.union(r)?;
        }
        Ok(acc)
    }

    pub fn is_reflexive(&self) -> bool {
        self.worlds().all(|x| self.contains(x, x))
    }

    pub fn is_irreflexive(&self) -> bool {
        self.worlds().all(|x| !self.contains(x, x))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(x, y)| self.contains(y, x))
    }

    pub fn is_asymmetric(&self) -> bool {
        self.pairs().all(|(x, y)| !self.contains(y, x))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.pairs().all(|(x, y)| x == y || !self.contains(y, x))
    }

    pub fn is_total(&self) -> bool {
        self.worlds()
            .all(|x| self.worlds().all(|y| self.contains(x, y) || self.contains(y, x)))
    }

    /// A triple `(x, y, z)` with `x < y` but neither `x < z` nor `z < y`.
    pub fn modularity_witness(&self) -> Option<(usize, usize, usize)> {
        self.pairs().find_map(|(x, y)| {
            self.worlds()
                .find(|&z| !self.contains(x, z) && !self.contains(z, y))
                .map(|z| (x, y, z))
        })
    }

    /// A triple `(x, y, z)` with `x < y`, `y < z` and not `x < z`.
    pub fn transitivity_witness(&self) -> Option<(usize, usize, usize)> {
        self.pairs().find_map(|(x, y)| {
            self.worlds()
                .find(|&z| self.contains(y, z) && !self.contains(x, z))
                .map(|z| (x, y, z))
        })
    }

    pub fn is_modular(&self) -> bool {
        self.modularity_witness().is_none()
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity_witness().is_none()
    }

    pub fn is_quasi_transitive(&self) -> bool {
        self.strict_version().is_transitive()
    }

    /// No chain `w0 < ... < wn` of the strict version returns to `w0`.
    pub fn is_acyclic(&self) -> bool {
        let closure = self.strict_version().transitive_closure();
        self.worlds().all(|x| !closure.contains(x, x))
    }

    pub fn classify(&self) -> PropertyFlags {
        PropertyFlags {
            reflexive: self.is_reflexive(),
            irreflexive: self.is_irreflexive(),
            symmetric: self.is_symmetric(),
            asymmetric: self.is_asymmetric(),
            antisymmetric: self.is_antisymmetric(),
            total: self.is_total(),
            modular: self.is_modular(),
            transitive: self.is_transitive(),
            quasi_transitive: self.is_quasi_transitive(),
            acyclic: self.is_acyclic(),
        }
    }

    /// `(x, y)` is kept iff `(y, x)` is absent.
    pub fn strict_version(&self) -> Relation {
        let mut out = Relation::empty(&self.universe);
        for (x, y) in self.pairs() {
            if !self.contains(y, x) {
                out.insert(x, y);
            }
        }
        out
    }

    /// The smallest transitive superset (Warshall).
    pub fn transitive_closure(&self) -> Relation {
        let n = self.size();
        let mut bits = self.bits.clone();
        for k in 0..n {
            for i in 0..n {
                if !bits[i * n + k] {
                    continue;
                }
                for j in 0..n {
                    if bits[k * n + j] {
                        bits[i * n + j] = true;
                    }
                }
            }
        }
        Relation {
            universe: Arc::clone(&self.universe),
            bits,
        }
    }

    /// The elements of `subset` not strictly dominated by another element of
    /// `subset`. The result is sorted in universe order.
    pub fn choice_set(&self, subset: &[usize]) -> Result<Vec<usize>> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let n = self.size();
        let mut members = vec![false; n];
        for &w in subset {
            if w >= n {
                return Err(Error::UnknownWorld(format!("#{w}")));
            }
            members[w] = true;
        }
        let dominated = |x: usize| {
            (0..n).any(|y| members[y] && self.contains(y, x) && !self.contains(x, y))
        };
        Ok((0..n).filter(|&x| members[x] && !dominated(x)).collect())
    }

    /// True iff `y` is reachable from `x` and `x` from `y` along chains of
    /// at least one pair each.
    pub fn in_conflict(&self, x: usize, y: usize) -> bool {
        let closure = self.transitive_closure();
        closure.contains(x, y) && closure.contains(y, x)
    }

    pub fn in_conflict_named(&self, x: &str, y: &str) -> Result<bool> {
        Ok(self.in_conflict(self.universe.index_of(x)?, self.universe.index_of(y)?))
    }

    pub(crate) fn name_triple(&self, (x, y, z): (usize, usize, usize)) -> [String; 3] {
        let name = |w| self.universe.name(w).to_string();
        [name(x), name(y), name(z)]
    }
}

impl PartialEq for Relation {
    fn eq(&self, other: &Self) -> bool {
        same_universe(&self.universe, &other.universe) && self.bits == other.bits
    }
}

impl Eq for Relation {}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(
                self.named_pairs()
                    .into_iter()
                    .map(|(x, y)| format!("({x},{y})")),
            )
            .finish()
    }
}
