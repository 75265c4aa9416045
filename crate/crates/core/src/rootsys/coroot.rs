//! Reflection witnesses.
//!
//! A coroot of `alpha` in a finite set `R` is a linear functional `f` on the
//! span of `R` with `f(alpha) = 2`, `f(beta)` integral for every `beta` in
//! `R`, and `beta - f(beta) * alpha` in `R` for every `beta`. It encodes the
//! reflection `s_alpha` without reference to any inner product.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, q, qadd, qmul, Rational};
use crate::vector::{sub_scaled, IntVector, VectorSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorootFunctional {
    root: IntVector,
    values: Vec<Rational>,
}

impl CorootFunctional {
    pub fn root(&self) -> &[i64] {
        &self.root
    }

    /// Coefficients in standard coordinates: `f(v) = sum_j values[j] * v[j]`.
    /// Only meaningful on the span of the set the functional was found for.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn eval(&self, v: &[i64]) -> Result<Rational> {
        self.values
            .iter()
            .zip(v)
            .try_fold(Rational::zero(), |acc, (c, &x)| qadd(&acc, &qmul(c, &q(x))?))
    }

    /// `f(beta)` if it is an integer.
    pub fn pairing(&self, beta: &[i64]) -> Result<Option<i64>> {
        let val = self.eval(beta)?;
        Ok(val.is_integer().then(|| val.to_integer()))
    }

    /// `s_alpha(beta) = beta - f(beta) * alpha`, or `None` if `f(beta)` is not
    /// an integer.
    pub fn reflect(&self, beta: &[i64]) -> Result<Option<IntVector>> {
        match self.pairing(beta)? {
            Some(c) => sub_scaled(beta, c, &self.root).map(Some),
            None => Ok(None),
        }
    }
}

/// Checks every defining property of a coroot directly from the functional's
/// standard-coordinate values.
pub fn check_witness(set: &VectorSet, f: &CorootFunctional) -> Result<bool> {
    if !set.contains(f.root()) || f.eval(f.root())? != q(2) {
        return Ok(false);
    }
    for beta in set {
        match f.reflect(beta)? {
            Some(image) if set.contains(&image) => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// Whether applying the reflection twice fixes every element of `set`.
pub fn reflection_is_involution(set: &VectorSet, f: &CorootFunctional) -> Result<bool> {
    for beta in set {
        let Some(once) = f.reflect(beta)? else {
            return Ok(false);
        };
        let Some(twice) = f.reflect(&once)? else {
            return Ok(false);
        };
        if &twice != beta {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Per-set precomputation shared by the coroot searches of all its elements.
///
/// The basis is the first maximal independent run of the set in its sorted
/// order. A functional on the span is fixed by its values on the basis, so
/// the search only assigns those and reads every other value off the basis
/// coordinates.
pub struct CorootSolver<'a> {
    set: &'a VectorSet,
    basis: Vec<usize>,
    pivots: Vec<usize>,
    /// Inverse of the basis restricted to the pivot coordinates.
    pivot_inverse: Vec<Vec<Rational>>,
    /// Coordinates of every element in the basis.
    coords: Vec<Vec<Rational>>,
    /// Elements grouped by the index of their last nonzero basis coordinate.
    by_last: Vec<Vec<usize>>,
}

impl<'a> CorootSolver<'a> {
    pub fn new(set: &'a VectorSet) -> Result<Self> {
        let (basis, pivots) = linalg::independent_prefix(set.iter().map(|v| v.as_slice()))?;
        let r = basis.len();
        let m: Vec<Vec<Rational>> = pivots
            .iter()
            .map(|&p| basis.iter().map(|&b| q(set.as_slice()[b][p])).collect())
            .collect();
        let pivot_inverse = linalg::inverse(&m)?
            .ok_or_else(|| Error::Inconsistent("pivot submatrix is singular".into()))?;

        let mut coords = Vec::with_capacity(set.len());
        let mut by_last = vec![Vec::new(); r];
        for (idx, v) in set.iter().enumerate() {
            let restricted: Vec<Rational> = pivots.iter().map(|&p| q(v[p])).collect();
            let x = linalg::mat_vec(&pivot_inverse, &restricted)?;
            // x must reproduce v on every coordinate, not just the pivots
            for (j, &vj) in v.iter().enumerate() {
                let col: Vec<Rational> = basis.iter().map(|&b| q(set.as_slice()[b][j])).collect();
                if linalg::dot(&col, &x)? != q(vj) {
                    return Err(Error::Inconsistent(
                        "element outside the span of the basis".into(),
                    ));
                }
            }
            match x.iter().rposition(|c| !c.is_zero()) {
                Some(last) => by_last[last].push(idx),
                None => return Err(Error::Inconsistent("zero vector in coroot search".into())),
            }
            coords.push(x);
        }
        Ok(CorootSolver {
            set,
            basis,
            pivots,
            pivot_inverse,
            coords,
            by_last,
        })
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Integers `c`, ascending, with `beta - c * alpha` in the set.
    fn string_values(&self, beta: &[i64], alpha: &[i64]) -> Vec<i64> {
        let lead = alpha
            .iter()
            .position(|&a| a != 0)
            .expect("alpha is nonzero");
        let mut out: Vec<i64> = self
            .set
            .iter()
            .filter_map(|gamma| {
                // i128 cannot overflow on differences and products of i64s
                let diff = beta[lead] as i128 - gamma[lead] as i128;
                let a = alpha[lead] as i128;
                if diff % a != 0 {
                    return None;
                }
                let c = diff / a;
                let on_string = beta
                    .iter()
                    .zip(gamma)
                    .zip(alpha)
                    .all(|((&b, &g), &a)| b as i128 - g as i128 == c * a as i128);
                if on_string {
                    i64::try_from(c).ok()
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Backtracking search for the coroot of `alpha`: candidate values of
    /// `f` on each basis vector come from root strings, and each partial
    /// assignment is checked against every element whose basis coordinates
    /// it already determines. Candidates are tried in ascending order and the
    /// first full witness is returned.
    pub fn find(&self, alpha: &[i64]) -> Result<Option<CorootFunctional>> {
        let alpha_idx = self
            .set
            .position(alpha)
            .ok_or_else(|| Error::NotAMember(alpha.to_vec()))?;
        let candidates: Vec<Vec<i64>> = self
            .basis
            .iter()
            .map(|&b| self.string_values(&self.set.as_slice()[b], alpha))
            .collect();
        let mut assignment = Vec::with_capacity(self.rank());
        if !self.extend(alpha, alpha_idx, &candidates, &mut assignment)? {
            return Ok(None);
        }

        let mut values = vec![Rational::zero(); self.set.dim()];
        for (p, &pivot) in self.pivots.iter().enumerate() {
            let mut acc = Rational::zero();
            for (t, &c) in assignment.iter().enumerate() {
                acc = qadd(&acc, &qmul(&q(c), &self.pivot_inverse[t][p])?)?;
            }
            values[pivot] = acc;
        }
        let f = CorootFunctional {
            root: alpha.to_vec(),
            values,
        };
        if !check_witness(self.set, &f)? {
            return Err(Error::Inconsistent(
                "search accepted a functional that fails the witness check".into(),
            ));
        }
        Ok(Some(f))
    }

    fn extend(
        &self,
        alpha: &[i64],
        alpha_idx: usize,
        candidates: &[Vec<i64>],
        assignment: &mut Vec<i64>,
    ) -> Result<bool> {
        let t = assignment.len();
        if t == self.rank() {
            return Ok(true);
        }
        for &c in &candidates[t] {
            assignment.push(c);
            if self.consistent(alpha, alpha_idx, t, assignment)?
                && self.extend(alpha, alpha_idx, candidates, assignment)?
            {
                return Ok(true);
            }
            assignment.pop();
        }
        Ok(false)
    }

    /// Checks the elements whose last basis coordinate is `t`.
    fn consistent(&self, alpha: &[i64], alpha_idx: usize, t: usize, assignment: &[i64]) -> Result<bool> {
        for &idx in &self.by_last[t] {
            let mut val = Rational::zero();
            for (x, &c) in self.coords[idx].iter().zip(assignment) {
                val = qadd(&val, &qmul(x, &q(c))?)?;
            }
            if !val.is_integer() {
                return Ok(false);
            }
            let val = val.to_integer();
            if idx == alpha_idx && val != 2 {
                return Ok(false);
            }
            let image = sub_scaled(&self.set.as_slice()[idx], val, alpha)?;
            if !self.set.contains(&image) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Coroot of `alpha` in `set`, or `None` when no reflection witness exists.
pub fn find_coroot(set: &VectorSet, alpha: &[i64]) -> Result<Option<CorootFunctional>> {
    if !set.contains(alpha) {
        return Err(Error::NotAMember(alpha.to_vec()));
    }
    CorootSolver::new(set)?.find(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::buildset::{facet_vectors_complete, facet_vectors_cycle};

    fn ints(f: &CorootFunctional) -> Vec<i64> {
        f.values()
            .iter()
            .map(|v| {
                assert!(v.is_integer());
                v.to_integer()
            })
            .collect()
    }

    #[test]
    fn k3_coroot_of_e1() {
        let r = facet_vectors_complete(2).unwrap();
        let f = find_coroot(&r, &[1, 0]).unwrap().unwrap();
        assert_eq!(ints(&f), vec![2, -1]);
        assert!(check_witness(&r, &f).unwrap());
        assert!(reflection_is_involution(&r, &f).unwrap());
    }

    #[test]
    fn k3_rejects_zero_pairing_with_e2() {
        // f = (2, 0) would send e1+e2 to -e1+e2
        let r = facet_vectors_complete(2).unwrap();
        let bad = CorootFunctional {
            root: vec![1, 0],
            values: vec![q(2), q(0)],
        };
        assert!(!check_witness(&r, &bad).unwrap());
    }

    #[test]
    fn k4_top_vector_has_no_coroot() {
        let r = facet_vectors_complete(3).unwrap();
        assert_eq!(find_coroot(&r, &[1, 1, 1]).unwrap(), None);
    }

    #[test]
    fn c4_coroot_of_e1() {
        let r = facet_vectors_cycle(3).unwrap();
        let f = find_coroot(&r, &[1, 0, 0]).unwrap().unwrap();
        assert_eq!(ints(&f), vec![2, -1, 0]);
    }

    #[test]
    fn non_member_is_an_error() {
        let r = facet_vectors_cycle(3).unwrap();
        assert!(matches!(
            find_coroot(&r, &[1, 0, 1]),
            Err(Error::NotAMember(_))
        ));
    }

    #[test]
    fn lower_rank_set_uses_its_span() {
        // A_2 inside the plane x + y + z = 0
        let r = VectorSet::new(
            3,
            vec![
                vec![1, -1, 0],
                vec![-1, 1, 0],
                vec![0, 1, -1],
                vec![0, -1, 1],
                vec![1, 0, -1],
                vec![-1, 0, 1],
            ],
        )
        .unwrap();
        for alpha in &r {
            let f = find_coroot(&r, alpha).unwrap().unwrap();
            assert!(check_witness(&r, &f).unwrap());
            for beta in &r {
                // standard form is invariant here: f(beta) = (beta, alpha)
                let dot: i64 = beta.iter().zip(alpha).map(|(a, b)| a * b).sum();
                assert_eq!(f.pairing(beta).unwrap(), Some(dot));
            }
        }
    }
}
