//! Ordered graded bases of free modules.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: i64,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: i64) -> Self {
        Generator {
            name: name.into(),
            degree,
        }
    }
}

/// An ordered list of named generators with integer degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    gens: Vec<Generator>,
    index: HashMap<String, usize>,
}

impl GradedBasis {
    pub fn new(gens: Vec<Generator>) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, g) in gens.iter().enumerate() {
            if index.insert(g.name.clone(), i).is_some() {
                return Err(Error::BasisMismatch(format!(
                    "duplicate generator name `{}`",
                    g.name
                )));
            }
        }
        Ok(GradedBasis { gens, index })
    }

    pub fn from_pairs(pairs: &[(&str, i64)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|(n, d)| Generator::new(*n, *d))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generator(&self, i: usize) -> &Generator {
        &self.gens[i]
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.gens[i].degree
    }

    pub fn name(&self, i: usize) -> &str {
        &self.gens[i].name
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Generator)> {
        self.gens.iter().enumerate()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.gens.iter().map(|g| g.degree).max()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.gens.iter().map(|g| g.degree).min()
    }

    /// All degrees lie in `[0, n]`, as for Morse indices on a closed
    /// n-manifold.
    pub fn degrees_within(&self, n: i64) -> bool {
        self.gens.iter().all(|g| 0 <= g.degree && g.degree <= n)
    }

    /// Index of the unique degree-`n` generator, if there is exactly one.
    pub fn single_maximum(&self, n: i64) -> Result<usize> {
        let tops: Vec<usize> = self
            .gens
            .iter()
            .enumerate()
            .filter(|(_, g)| g.degree == n)
            .map(|(i, _)| i)
            .collect();
        match tops.as_slice() {
            [i] => Ok(*i),
            [] => Err(Error::MissingSingleMaximum(format!(
                "no generator of degree {n}"
            ))),
            many => Err(Error::MissingSingleMaximum(format!(
                "{} generators of degree {n}",
                many.len()
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_names_rejected() {
        assert!(GradedBasis::from_pairs(&[("x", 0), ("x", 1)]).is_err());
    }

    #[test]
    fn single_maximum_detection() {
        let b = GradedBasis::from_pairs(&[("x0", 0), ("x1", 1)]).unwrap();
        assert_eq!(b.single_maximum(1).unwrap(), 1);
        let two_tops = GradedBasis::from_pairs(&[("a", 1), ("b", 1)]).unwrap();
        assert!(two_tops.single_maximum(1).is_err());
    }
}
