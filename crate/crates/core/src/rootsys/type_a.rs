//! The standard type-A root system, the linear map carrying cycle facet
//! vectors onto it, and the Weyl orbits of the fundamental weights.

use itertools::Itertools;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{q, qsub, Rational};
use crate::vector::{IntVector, VectorSet};

/// Largest `n` for which [`weyl_orbit`] enumerates all `(n+1)!` permutations.
pub const WEYL_ORBIT_MAX_RANK: usize = 8;

/// `{ +-(e_i - e_j) : 1 <= i < j <= n+1 }` in `Z^{n+1}`.
pub fn standard_an(n: usize) -> Result<VectorSet> {
    if n == 0 {
        return Err(Error::Inconsistent("rank must be positive".into()));
    }
    let dim = n + 1;
    let mut out = Vec::with_capacity(n * (n + 1));
    for i in 0..dim {
        for j in i + 1..dim {
            let mut v = vec![0; dim];
            v[i] = 1;
            v[j] = -1;
            out.push(v.iter().map(|x| -x).collect());
            out.push(v);
        }
    }
    VectorSet::new(dim, out)
}

/// Linear extension of `e_i -> e_i - e_{i+1}` from `Z^n` to `Z^{n+1}`.
pub fn cycle_to_an_map(v: &[i64], n: usize) -> Result<IntVector> {
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: v.len(),
        });
    }
    // image coordinate i is v_i - v_{i-1}, with v_0 = v_{n+1} = 0
    (0..=n)
        .map(|i| {
            let cur = v.get(i).copied().unwrap_or(0);
            let prev = if i == 0 { 0 } else { v[i - 1] };
            cur.checked_sub(prev).ok_or(Error::Overflow)
        })
        .collect()
}

/// `lambda_i = (e_1 + ... + e_i) - i/(n+1) (e_1 + ... + e_{n+1})`.
pub fn fundamental_weight(i: usize, n: usize) -> Result<Vec<Rational>> {
    if i == 0 || i > n {
        return Err(Error::Inconsistent(format!("weight index {i} outside 1..={n}")));
    }
    let shift = Rational::new(i as i64, n as i64 + 1);
    (0..=n)
        .map(|j| qsub(&q((j < i) as i64), &shift))
        .collect()
}

/// Distinct images of `lambda_i` under all permutations of the `n + 1`
/// coordinates, sorted.
pub fn weyl_orbit(i: usize, n: usize) -> Result<Vec<Vec<Rational>>> {
    if n > WEYL_ORBIT_MAX_RANK {
        return Err(Error::TooManyNodes {
            count: n,
            cap: WEYL_ORBIT_MAX_RANK,
        });
    }
    let weight = fundamental_weight(i, n)?;
    let mut orbit: Vec<Vec<Rational>> = (0..=n)
        .permutations(n + 1)
        .map(|perm| perm.iter().map(|&p| weight[p]).collect())
        .collect();
    orbit.sort_unstable();
    orbit.dedup();
    Ok(orbit)
}

/// Reads a vector of the quotient by `e_1 + ... + e_{n+1}` in the basis
/// `e_1, ..., e_n`, i.e. substitutes `e_{n+1} = -(e_1 + ... + e_n)`.
fn project(v: &[Rational]) -> Result<IntVector> {
    let (last, head) = v.split_last().expect("nonempty weight");
    head.iter()
        .map(|x| {
            let c = qsub(x, last)?;
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::Inconsistent("projected weight is not integral".into()))
            }
        })
        .collect()
}

/// Union over `i` of the Weyl orbits of `lambda_i`, projected to `Z^n`.
pub fn weyl_orbit_fundamental_weights(n: usize) -> Result<VectorSet> {
    if n == 0 {
        return Err(Error::Inconsistent("rank must be positive".into()));
    }
    let mut out = Vec::new();
    for i in 1..=n {
        for w in weyl_orbit(i, n)? {
            debug_assert!(w.iter().fold(Rational::zero(), |a, b| a + b).is_zero());
            out.push(project(&w)?);
        }
    }
    VectorSet::new(n, out)
}
