use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A finite, non-empty, ordered set of named possible worlds.
///
/// Worlds are addressed by their position in declaration order. Every
/// relation, belief state and pedigree carries a shared handle to the
/// universe it ranges over.
#[derive(Clone)]
pub struct WorldUniverse {
    worlds: Vec<String>,
    index: HashMap<String, usize>,
}

impl WorldUniverse {
    pub fn new<I, S>(worlds: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let worlds: Vec<String> = worlds.into_iter().map(Into::into).collect();
        if worlds.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut index = HashMap::with_capacity(worlds.len());
        for (i, w) in worlds.iter().enumerate() {
            if index.insert(w.clone(), i).is_some() {
                return Err(Error::DuplicateWorld(w.clone()));
            }
        }
        Ok(Self { worlds, index })
    }

    pub fn len(&self) -> usize {
        self.worlds.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.worlds.is_empty()
    }

    pub fn worlds(&self) -> &[String] {
        &self.worlds
    }

    pub fn name(&self, world: usize) -> &str {
        &self.worlds[world]
    }

    pub fn get(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.get(name)
            .ok_or_else(|| Error::UnknownWorld(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }
}

impl PartialEq for WorldUniverse {
    fn eq(&self, other: &Self) -> bool {
        self.worlds == other.worlds
    }
}

impl Eq for WorldUniverse {}

impl fmt::Debug for WorldUniverse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.worlds).finish()
    }
}
