//! Recognition of finite crystallographic root systems.
//!
//! A finite set `R` of integer vectors is accepted when it has no zero
//! vector, is reduced and centrally symmetric, and every element admits a
//! reflection witness ([`CorootFunctional`]). The witness definition needs no
//! inner product: averaging any inner product over the finite group the
//! reflections generate yields an invariant one, so it agrees with the usual
//! Euclidean definition. The ambient space is the span of `R`.

mod coroot;
mod dynkin;
mod type_a;

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::vector::{format_vector, leading_sign, negate, sub_scaled, IntVector, VectorSet};

pub use coroot::{check_witness, find_coroot, reflection_is_involution, CorootFunctional, CorootSolver};
pub use dynkin::{
    analyze, cartan_matrix, catalog_cartan, classify, irreducible_components, positive_root_obstruction,
    positive_root_count, Analysis, CartanMatrix, Classification, Family, ObstructionReport,
    ObstructionRow, RootSystemType,
};
pub use type_a::{
    cycle_to_an_map, fundamental_weight, standard_an, weyl_orbit, weyl_orbit_fundamental_weights,
    WEYL_ORBIT_MAX_RANK,
};

/// Why a set failed to be a root system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailureReason {
    ZeroVector,
    NotSpanning,
    NonReduced(IntVector),
    NotCentrallySymmetric(IntVector),
    NoCoroot(IntVector),
}

impl FailureReason {
    /// Short machine-readable tag.
    pub fn tag(&self) -> &'static str {
        match self {
            FailureReason::ZeroVector => "zero-vector",
            FailureReason::NotSpanning => "not-spanning",
            FailureReason::NonReduced(_) => "non-reduced",
            FailureReason::NotCentrallySymmetric(_) => "not-centrally-symmetric",
            FailureReason::NoCoroot(_) => "no-coroot",
        }
    }

    /// The offending element, when there is one.
    pub fn witness(&self) -> Option<&[i64]> {
        match self {
            FailureReason::ZeroVector | FailureReason::NotSpanning => None,
            FailureReason::NonReduced(v)
            | FailureReason::NotCentrallySymmetric(v)
            | FailureReason::NoCoroot(v) => Some(v),
        }
    }
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.witness() {
            Some(w) => write!(f, "{}({})", self.tag(), format_vector(w)),
            None => f.write_str(self.tag()),
        }
    }
}

impl Serialize for FailureReason {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemVerdict {
    pub dim: usize,
    pub rank: usize,
    pub failure: Option<FailureReason>,
    /// One witness per element, in [`root_order`], when the set is a root
    /// system; the witnesses found before the first failure otherwise.
    pub coroots: Vec<CorootFunctional>,
}

impl RootSystemVerdict {
    pub fn is_root_system(&self) -> bool {
        self.failure.is_none()
    }

    pub fn coroot(&self, alpha: &[i64]) -> Option<&CorootFunctional> {
        self.coroots.iter().find(|f| f.root() == alpha)
    }
}

/// Order in which elements are examined: descending lexicographic, so every
/// lexicographically positive vector comes before every negative one.
pub fn root_order(r: &VectorSet) -> impl Iterator<Item = &IntVector> {
    r.iter().rev()
}

/// Primitive direction of `v` with positive leading coordinate.
fn direction(v: &[i64]) -> IntVector {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    let s = leading_sign(v);
    v.iter().map(|&x| x / g * s).collect()
}

/// Decides whether `r` is a reduced crystallographic root system in its span.
pub fn is_root_system(r: &VectorSet) -> Result<RootSystemVerdict> {
    let dim = r.dim();
    let rank = linalg::rank(r.iter().map(|v| v.as_slice()))?;
    let verdict = |failure| RootSystemVerdict {
        dim,
        rank,
        failure: Some(failure),
        coroots: Vec::new(),
    };

    if r.iter().any(|v| v.iter().all(|&x| x == 0)) {
        return Ok(verdict(FailureReason::ZeroVector));
    }
    if rank == 0 {
        return Ok(verdict(FailureReason::NotSpanning));
    }

    let mut lines: HashMap<IntVector, Vec<&IntVector>> = HashMap::new();
    for v in r {
        lines.entry(direction(v)).or_default().push(v);
    }
    for v in root_order(r) {
        let on_line = &lines[&direction(v)];
        if on_line.iter().any(|&w| w != v && *w != negate(v)) {
            return Ok(verdict(FailureReason::NonReduced(v.clone())));
        }
    }

    if let Some(v) = root_order(r).find(|v| !r.contains(&negate(v))) {
        return Ok(verdict(FailureReason::NotCentrallySymmetric(v.clone())));
    }

    let solver = CorootSolver::new(r)?;
    let mut coroots = Vec::with_capacity(r.len());
    for alpha in root_order(r) {
        match solver.find(alpha)? {
            Some(f) => coroots.push(f),
            None => {
                return Ok(RootSystemVerdict {
                    dim,
                    rank,
                    failure: Some(FailureReason::NoCoroot(alpha.clone())),
                    coroots,
                })
            }
        }
    }
    Ok(RootSystemVerdict {
        dim,
        rank,
        failure: None,
        coroots,
    })
}

/// Elements whose first nonzero coordinate is positive.
pub fn positive_roots(r: &VectorSet) -> Result<VectorSet> {
    if !r.centrally_symmetric() {
        return Err(Error::NotCentrallySymmetric);
    }
    if r.iter().any(|v| leading_sign(v) == 0) {
        return Err(Error::Inconsistent("zero vector has no sign".into()));
    }
    VectorSet::new(r.dim(), r.iter().filter(|v| leading_sign(v) > 0).cloned())
}

/// Positive roots that are not the sum of two positive roots, in descending
/// lexicographic order (`e_1` before `e_2`).
pub fn simple_roots(positive: &VectorSet) -> Result<Vec<IntVector>> {
    let mut base = Vec::new();
    for alpha in root_order(positive) {
        let mut decomposable = false;
        for beta in positive {
            if positive.contains(&sub_scaled(alpha, 1, beta)?) {
                decomposable = true;
                break;
            }
        }
        if !decomposable {
            base.push(alpha.clone());
        }
    }
    let rank = linalg::rank(positive.iter().map(|v| v.as_slice()))?;
    if base.len() != rank || linalg::rank(base.iter().map(|v| v.as_slice()))? != rank {
        return Err(Error::Inconsistent(format!(
            "{} indecomposable roots for rank {rank}",
            base.len()
        )));
    }
    Ok(base)
}
