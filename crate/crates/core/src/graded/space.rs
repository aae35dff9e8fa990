use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Deg;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub deg: Deg,
}

/// An ordered list of named homogeneous generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedSpace {
    gens: Vec<Generator>,
    index: BTreeMap<String, usize>,
}

impl GradedSpace {
    pub fn new<S: Into<String>, I: IntoIterator<Item = (S, Deg)>>(gens: I) -> Result<GradedSpace> {
        let mut space = GradedSpace::default();
        for (name, deg) in gens {
            space.push(name, deg)?;
        }
        Ok(space)
    }

    pub fn push(&mut self, name: impl Into<String>, deg: Deg) -> Result<usize> {
        let name = name.into();
        if self.index.contains_key(&name) {
            return Err(Error::DuplicateGenerator(name));
        }
        let i = self.gens.len();
        self.index.insert(name.clone(), i);
        self.gens.push(Generator { name, deg });
        Ok(i)
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.gens[i].name
    }

    pub fn deg(&self, i: usize) -> Deg {
        self.gens[i].deg
    }

    pub fn degs(&self) -> Vec<Deg> {
        self.gens.iter().map(|g| g.deg).collect()
    }

    pub fn names(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.name.clone()).collect()
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    /// Indices of generators of degree `d`.
    pub fn in_degree(&self, d: Deg) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.gens[i].deg == d).collect()
    }

    /// Dimension per degree.
    pub fn dims(&self) -> BTreeMap<i32, usize> {
        let mut out = BTreeMap::new();
        for g in &self.gens {
            *out.entry(g.deg.0).or_insert(0) += 1;
        }
        out
    }

    pub fn min_deg(&self) -> Option<Deg> {
        self.gens.iter().map(|g| g.deg).min()
    }

    pub fn max_deg(&self) -> Option<Deg> {
        self.gens.iter().map(|g| g.deg).max()
    }
}
