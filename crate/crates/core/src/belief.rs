//! Generalized belief states: modular, transitive relations over worlds.
//!
//! `x < y` in a belief state reads "there is reason to consider `x` strictly
//! more likely than `y`". Agnosticism is the absence of both pairs, conflict
//! the presence of both. Every belief state has a unique layered normal form:
//! an ordered partition of the worlds into blocks that are each either fully
//! connected (conflicted) or fully disconnected (agnostic), where every world
//! of an earlier block precedes every world of a later one.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::logic::{Formula, PropUniverse};
use crate::relation::{same_universe, Relation};
use crate::universe::WorldUniverse;

/// The agnosticism relation of an arbitrary relation: pairs related in
/// neither direction.
pub fn agnosticism_of(r: &Relation) -> Relation {
    let n = r.size();
    let mut out = Relation::empty(r.universe());
    for x in 0..n {
        for y in 0..n {
            if !r.contains(x, y) && !r.contains(y, x) {
                out.insert(x, y);
            }
        }
    }
    out
}

/// A relation validated to be modular and transitive.
#[derive(Clone, PartialEq, Eq)]
pub struct BeliefState {
    relation: Relation,
}

impl BeliefState {
    /// Fails with a witness triple when `r` is not modular or not transitive.
    pub fn from_relation(r: Relation) -> Result<Self> {
        if let Some(t) = r.modularity_witness() {
            let [x, y, z] = r.name_triple(t);
            return Err(Error::NotModular { x, y, z });
        }
        if let Some(t) = r.transitivity_witness() {
            let [x, y, z] = r.name_triple(t);
            return Err(Error::NotTransitive { x, y, z });
        }
        Ok(Self { relation: r })
    }

    /// Caller guarantees `r` is modular and transitive.
    pub(crate) fn new_unchecked(r: Relation) -> Self {
        debug_assert!(r.is_modular() && r.is_transitive());
        Self { relation: r }
    }

    pub fn empty(universe: &Arc<WorldUniverse>) -> Self {
        Self {
            relation: Relation::empty(universe),
        }
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn into_relation(self) -> Relation {
        self.relation
    }

    pub fn universe(&self) -> &Arc<WorldUniverse> {
        self.relation.universe()
    }

    pub fn precedes(&self, x: usize, y: usize) -> bool {
        self.relation.contains(x, y)
    }

    /// `x ~ y` iff neither `x < y` nor `y < x`. Includes self-pairs of worlds
    /// that are not self-related.
    pub fn agnosticism(&self) -> Relation {
        agnosticism_of(&self.relation)
    }

    /// `x ∞ y` iff both `x < y` and `y < x`.
    pub fn conflict(&self) -> Relation {
        let r = &self.relation;
        Relation::from_pairs(
            r.universe(),
            r.pairs().filter(|&(x, y)| r.contains(y, x)).collect::<Vec<_>>(),
        )
    }

    pub fn to_layers(&self) -> LayeredForm {
        let r = &self.relation;
        let n = r.size();
        // x ≡ y iff x and y relate identically to every world.
        let signature = |x: usize| -> Vec<bool> {
            (0..n)
                .flat_map(|z| [r.contains(x, z), r.contains(z, x)])
                .collect()
        };
        let sigs: Vec<Vec<bool>> = (0..n).map(signature).collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let members: Vec<usize> = (x..n).filter(|&y| sigs[y] == sigs[x]).collect();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members);
        }
        // A class's position is the number of worlds in other classes that
        // precede it.
        let mut keyed: Vec<(usize, Block)> = classes
            .into_iter()
            .enumerate()
            .map(|(c, worlds)| {
                let rep = worlds[0];
                let above = (0..n)
                    .filter(|&z| class_of[z] != c && r.contains(z, rep))
                    .count();
                let connected = r.contains(rep, rep);
                (above, Block { worlds, connected })
            })
            .collect();
        keyed.sort_by_key(|(above, _)| *above);
        LayeredForm {
            universe: Arc::clone(r.universe()),
            blocks: keyed.into_iter().map(|(_, b)| b).collect(),
        }
    }

    pub fn from_layers(layers: &LayeredForm) -> Self {
        let n = layers.universe.len();
        let mut position = vec![0; n];
        for (i, b) in layers.blocks.iter().enumerate() {
            for &w in &b.worlds {
                position[w] = i;
            }
        }
        let mut r = Relation::empty(&layers.universe);
        for x in 0..n {
            for y in 0..n {
                let (bx, by) = (position[x], position[y]);
                if bx < by || (bx == by && layers.blocks[bx].connected) {
                    r.insert(x, y);
                }
            }
        }
        Self::new_unchecked(r)
    }

    /// Evaluates the conditional `p ? q` against the choice set of the
    /// `p`-worlds.
    pub fn evaluate_conditional(
        &self,
        p: &Formula,
        q: &Formula,
        props: &PropUniverse,
    ) -> Result<ConditionalStatus> {
        if !same_universe(self.universe(), props.universe()) {
            return Err(Error::UniverseMismatch);
        }
        let p_worlds = props.models(p)?;
        let q_worlds = props.models(q)?;
        if p_worlds.is_empty() {
            return Err(Error::VacuousCondition);
        }
        let choice = self.relation.choice_set(&p_worlds)?;
        let satisfies_q = |w: &usize| q_worlds.binary_search(w).is_ok();
        let bel = choice.iter().all(satisfies_q);
        let disbel = !choice.iter().any(satisfies_q);
        let r = &self.relation;
        let connected = choice.iter().all(|&x| choice.iter().all(|&y| r.contains(x, y)));
        let disconnected = choice.iter().all(|&x| choice.iter().all(|&y| !r.contains(x, y)));
        Ok(ConditionalStatus {
            bel,
            disbel,
            agn: disconnected && !bel && !disbel,
            con: connected,
            choice_set: choice,
        })
    }
}

impl fmt::Debug for BeliefState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BeliefState({:?})", self.relation)
    }
}

/// One block of a [`LayeredForm`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// World indices in universe order.
    pub worlds: Vec<usize>,
    /// Every pair inside the block, self-pairs included, is related.
    pub connected: bool,
}

/// Ordered partition of the worlds; block 0 is the most likely.
#[derive(Clone, PartialEq, Eq)]
pub struct LayeredForm {
    universe: Arc<WorldUniverse>,
    blocks: Vec<Block>,
}

impl LayeredForm {
    /// Validates that `blocks` partition the universe. World lists inside a
    /// block are normalized to universe order.
    pub fn new(universe: &Arc<WorldUniverse>, blocks: Vec<Block>) -> Result<Self> {
        let n = universe.len();
        let mut seen = vec![false; n];
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.worlds.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &w in &b.worlds {
                if w >= n {
                    return Err(Error::InvalidPartition(format!("world #{w} out of range")));
                }
                if std::mem::replace(&mut seen[w], true) {
                    return Err(Error::InvalidPartition(format!(
                        "world `{}` appears twice",
                        universe.name(w)
                    )));
                }
            }
            b.worlds.sort_unstable();
        }
        if let Some(w) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!(
                "world `{}` is missing",
                universe.name(w)
            )));
        }
        Ok(Self {
            universe: Arc::clone(universe),
            blocks,
        })
    }

    /// Convenience constructor from world names.
    pub fn from_names(universe: &Arc<WorldUniverse>, blocks: &[(&[&str], bool)]) -> Result<Self> {
        let blocks = blocks
            .iter()
            .map(|(names, connected)| {
                Ok(Block {
                    worlds: names
                        .iter()
                        .map(|n| universe.index_of(n))
                        .collect::<Result<_>>()?,
                    connected: *connected,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(universe, blocks)
    }

    pub fn universe(&self) -> &Arc<WorldUniverse> {
        &self.universe
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block_names(&self, block: &Block) -> Vec<&str> {
        block.worlds.iter().map(|&w| self.universe.name(w)).collect()
    }
}

/// `[a c] > [b]*`: most likely block first, `*` marks connected blocks.
impl fmt::Display for LayeredForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(" > ")?;
            }
            write!(f, "[{}]", self.block_names(b).join(" "))?;
            if b.connected {
                f.write_str("*")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LayeredForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LayeredForm({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionalStatus {
    pub bel: bool,
    pub disbel: bool,
    pub agn: bool,
    pub con: bool,
    pub choice_set: Vec<usize>,
}

/// Membership of a relation in the classes B, T, T<, Q and Q<.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassFlags {
    /// Modular and transitive.
    pub in_b: bool,
    /// Total pre-order.
    pub in_t: bool,
    /// Strict version of a total pre-order.
    pub in_t_strict: bool,
    /// Total and quasi-transitive.
    pub in_q: bool,
    /// Strict version of a total, quasi-transitive relation.
    pub in_q_strict: bool,
}

impl ClassFlags {
    /// Names of the classes the relation belongs to, e.g. `["B", "T<"]`.
    pub fn names(&self) -> Vec<&'static str> {
        [
            (self.in_b, "B"),
            (self.in_t, "T"),
            (self.in_t_strict, "T<"),
            (self.in_q, "Q"),
            (self.in_q_strict, "Q<"),
        ]
        .into_iter()
        .filter_map(|(on, name)| on.then_some(name))
        .collect()
    }
}

/// Classifies `r`.
///
/// The strict members of T are exactly the irreflexive members of B. The
/// strict members of Q are exactly the asymmetric, transitive relations: a
/// total relation whose strict version is a given asymmetric `s` must add
/// both directions of every pair `s` leaves unrelated, so that completion is
/// unique, and its strict version is transitive iff `s` is.
pub fn classify_class(r: &Relation) -> ClassFlags {
    let p = r.classify();
    let in_b = p.modular && p.transitive;
    ClassFlags {
        in_b,
        in_t: p.total && p.transitive,
        in_t_strict: in_b && p.irreflexive,
        in_q: p.total && p.quasi_transitive,
        in_q_strict: p.asymmetric && p.transitive,
    }
}
