//! Finite sets of integer vectors with a fixed dimension.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type IntVector = Vec<i64>;

/// A set of distinct integer vectors of one common dimension, kept in
/// ascending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorSet {
    dim: usize,
    elements: Vec<IntVector>,
}

impl VectorSet {
    pub fn empty(dim: usize) -> Self {
        VectorSet {
            dim,
            elements: Vec::new(),
        }
    }

    /// Builds the set, dropping duplicates.
    pub fn new<I: IntoIterator<Item = IntVector>>(dim: usize, vectors: I) -> Result<Self> {
        let mut elements = Vec::new();
        for v in vectors {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: v.len(),
                });
            }
            elements.push(v);
        }
        elements.sort_unstable();
        elements.dedup();
        Ok(VectorSet { dim, elements })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.position(v).is_some()
    }

    /// Index of `v` in the sorted order.
    pub fn position(&self, v: &[i64]) -> Option<usize> {
        self.elements
            .binary_search_by(|e| e.as_slice().cmp(v))
            .ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, IntVector> {
        self.elements.iter()
    }

    pub fn as_slice(&self) -> &[IntVector] {
        &self.elements
    }

    /// `-R`.
    pub fn negated(&self) -> VectorSet {
        let mut elements: Vec<_> = self.elements.iter().map(|v| negate(v)).collect();
        elements.sort_unstable();
        VectorSet {
            dim: self.dim,
            elements,
        }
    }

    /// Whether `R = -R`.
    pub fn centrally_symmetric(&self) -> bool {
        self.elements.iter().all(|v| self.contains(&negate(v)))
    }

    /// Image under a map on vectors, deduplicated.
    pub fn map<F>(&self, dim: usize, f: F) -> Result<VectorSet>
    where
        F: FnMut(&IntVector) -> Result<IntVector>,
    {
        let images = self.elements.iter().map(f).collect::<Result<Vec<_>>>()?;
        VectorSet::new(dim, images)
    }

    /// One vector per line, coordinates separated by single spaces.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for v in &self.elements {
            s.push_str(&format_vector(v));
            s.push('\n');
        }
        s
    }
}

impl Serialize for VectorSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.elements.serialize(s)
    }
}

impl<'a> IntoIterator for &'a VectorSet {
    type Item = &'a IntVector;
    type IntoIter = std::slice::Iter<'a, IntVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

impl fmt::Display for VectorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn negate(v: &[i64]) -> IntVector {
    v.iter().map(|x| -x).collect()
}

/// `a - c * b`, checked.
pub fn sub_scaled(a: &[i64], c: i64, b: &[i64]) -> Result<IntVector> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| {
            c.checked_mul(y)
                .and_then(|cy| x.checked_sub(cy))
                .ok_or(Error::Overflow)
        })
        .collect()
}

pub fn add(a: &[i64], b: &[i64]) -> Result<IntVector> {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| x.checked_add(y).ok_or(Error::Overflow))
        .collect()
}

pub fn format_vector(v: &[i64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Sign of the first nonzero coordinate.
pub fn leading_sign(v: &[i64]) -> i64 {
    v.iter().find(|&&x| x != 0).map_or(0, |x| x.signum())
}
