//! Cartan matrices, Dynkin types and the positive-root catalog.

use std::fmt;

use serde::{Serialize, Serializer};

use super::{is_root_system, positive_roots, simple_roots, FailureReason, RootSystemVerdict};
use crate::error::{Error, Result};
use crate::vector::{IntVector, VectorSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    /// Ranks at which the family has a catalog entry. The ranges are chosen
    /// so that no diagram is listed twice (`B2 = C2`, `D3 = A3`).
    pub fn in_catalog(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    /// Ranks accepted by [`positive_root_count`]: the catalog plus `D3`.
    pub fn countable(self, rank: usize) -> bool {
        self.in_catalog(rank) || (self == Family::D && rank == 3)
    }
}

/// A multiset of irreducible types, sorted by family letter then rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RootSystemType {
    components: Vec<(Family, usize)>,
}

impl RootSystemType {
    pub fn new(mut components: Vec<(Family, usize)>) -> Result<Self> {
        for &(family, rank) in &components {
            if !family.in_catalog(rank) {
                return Err(Error::InvalidType {
                    family: family.letter(),
                    rank,
                });
            }
        }
        components.sort_unstable();
        Ok(RootSystemType { components })
    }

    pub fn irreducible(family: Family, rank: usize) -> Result<Self> {
        RootSystemType::new(vec![(family, rank)])
    }

    pub fn components(&self) -> &[(Family, usize)] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.1).sum()
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (family, rank)) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{}{}", family.letter(), rank)?;
        }
        Ok(())
    }
}

impl Serialize for RootSystemType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `A[i][j] = f_{alpha_j}(alpha_i)` for a base `alpha_1, ..., alpha_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    /// Validates: square, diagonal 2, off-diagonal nonpositive, zero pattern
    /// symmetric, and `A[i][j] * A[j][i]` in `{0, 1, 2, 3}`.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        let bad = |msg: String| Err(Error::Inconsistent(format!("Cartan matrix: {msg}")));
        if entries.iter().any(|row| row.len() != n) {
            return bad("not square".into());
        }
        for i in 0..n {
            if entries[i][i] != 2 {
                return bad(format!("diagonal entry {i} is {}", entries[i][i]));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (a, b) = (entries[i][j], entries[j][i]);
                if a > 0 {
                    return bad(format!("entry ({i},{j}) is positive"));
                }
                if (a == 0) != (b == 0) {
                    return bad(format!("zero pattern asymmetric at ({i},{j})"));
                }
                if a.checked_mul(b).is_none_or(|p| !(0..=3).contains(&p)) {
                    return bad(format!("bond ({i},{j}) has entries {a}, {b}"));
                }
            }
        }
        Ok(CartanMatrix { entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn submatrix(&self, idx: &[usize]) -> CartanMatrix {
        CartanMatrix {
            entries: idx
                .iter()
                .map(|&i| idx.iter().map(|&j| self.entries[i][j]).collect())
                .collect(),
        }
    }

    /// Off-diagonal nonzero entries of row and column `i`, sorted.
    fn signature(&self, i: usize) -> (Vec<i64>, Vec<i64>) {
        let n = self.rank();
        let mut row: Vec<i64> = (0..n)
            .filter(|&j| j != i && self.entries[i][j] != 0)
            .map(|j| self.entries[i][j])
            .collect();
        let mut col: Vec<i64> = (0..n)
            .filter(|&j| j != i && self.entries[j][i] != 0)
            .map(|j| self.entries[j][i])
            .collect();
        row.sort_unstable();
        col.sort_unstable();
        (row, col)
    }

    /// Whether some relabeling of the indices turns `self` into `other`.
    pub fn isomorphic(&self, other: &CartanMatrix) -> bool {
        let n = self.rank();
        if n != other.rank() {
            return false;
        }
        let sig_a: Vec<_> = (0..n).map(|i| self.signature(i)).collect();
        let sig_b: Vec<_> = (0..n).map(|i| other.signature(i)).collect();
        let mut image = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.extend_iso(other, &sig_a, &sig_b, &mut image, &mut used)
    }

    fn extend_iso(
        &self,
        other: &CartanMatrix,
        sig_a: &[(Vec<i64>, Vec<i64>)],
        sig_b: &[(Vec<i64>, Vec<i64>)],
        image: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = image.len();
        if i == self.rank() {
            return true;
        }
        for j in 0..other.rank() {
            if used[j] || sig_a[i] != sig_b[j] {
                continue;
            }
            let fits = image.iter().enumerate().all(|(p, &q)| {
                self.entries[i][p] == other.entries[j][q] && self.entries[p][i] == other.entries[q][j]
            });
            if !fits {
                continue;
            }
            image.push(j);
            used[j] = true;
            if self.extend_iso(other, sig_a, sig_b, image, used) {
                return true;
            }
            used[j] = false;
            image.pop();
        }
        false
    }
}

/// Cartan matrix of `base` from the coroots in `verdict`.
pub fn cartan_matrix(base: &[IntVector], verdict: &RootSystemVerdict) -> Result<CartanMatrix> {
    let mut entries = vec![vec![0; base.len()]; base.len()];
    for (j, alpha_j) in base.iter().enumerate() {
        let f = verdict
            .coroot(alpha_j)
            .ok_or_else(|| Error::Inconsistent("simple root without coroot".into()))?;
        for (i, alpha_i) in base.iter().enumerate() {
            entries[i][j] = f
                .pairing(alpha_i)?
                .ok_or_else(|| Error::Inconsistent("non-integral Cartan entry".into()))?;
        }
    }
    CartanMatrix::new(entries)
}

/// Connected components of the Dynkin graph (`i ~ j` iff `A[i][j] != 0`),
/// each sorted, ordered by smallest index.
pub fn irreducible_components(a: &CartanMatrix) -> Vec<Vec<usize>> {
    let n = a.rank();
    let mut component = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![start];
        component[start] = id;
        let mut k = 0;
        while k < members.len() {
            let i = members[k];
            for j in 0..n {
                if j != i && a.get(i, j) != 0 && component[j] == usize::MAX {
                    component[j] = id;
                    members.push(j);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Catalog Cartan matrix in Bourbaki numbering, with the same convention
/// `A[i][j] = <alpha_i, alpha_j^vee>` as [`cartan_matrix`].
pub fn catalog_cartan(family: Family, rank: usize) -> Result<CartanMatrix> {
    if !family.in_catalog(rank) {
        return Err(Error::InvalidType {
            family: family.letter(),
            rank,
        });
    }
    let n = rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match family {
        Family::A | Family::B | Family::C | Family::F => {
            for i in 0..n - 1 {
                bond(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                bond(i, i + 1);
            }
            bond(n - 3, n - 1);
        }
        Family::E => {
            bond(0, 2);
            bond(1, 3);
            for i in 2..n - 1 {
                bond(i, i + 1);
            }
        }
        Family::G => bond(0, 1),
    }
    match family {
        // alpha_n short
        Family::B => a[n - 2][n - 1] = -2,
        // alpha_n long
        Family::C => a[n - 1][n - 2] = -2,
        // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        Family::F => a[1][2] = -2,
        // alpha_1 short, alpha_2 long
        Family::G => a[1][0] = -3,
        _ => {}
    }
    CartanMatrix::new(a)
}

fn identify_component(a: &CartanMatrix) -> Result<(Family, usize)> {
    let rank = a.rank();
    for family in Family::ALL {
        if family.in_catalog(rank) && a.isomorphic(&catalog_cartan(family, rank)?) {
            return Ok((family, rank));
        }
    }
    Err(Error::Inconsistent(format!(
        "no catalog diagram matches {:?}",
        a.entries()
    )))
}

/// Everything derived from a vector set on the way to its type.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub verdict: RootSystemVerdict,
    pub positive_roots: Option<VectorSet>,
    pub base: Vec<IntVector>,
    pub cartan: Option<CartanMatrix>,
    pub components: Vec<Vec<usize>>,
    pub root_type: Option<RootSystemType>,
}

pub fn analyze(r: &VectorSet) -> Result<Analysis> {
    let verdict = is_root_system(r)?;
    if !verdict.is_root_system() {
        return Ok(Analysis {
            verdict,
            positive_roots: None,
            base: Vec::new(),
            cartan: None,
            components: Vec::new(),
            root_type: None,
        });
    }
    let positive = positive_roots(r)?;
    let base = simple_roots(&positive)?;
    let cartan = cartan_matrix(&base, &verdict)?;
    let components = irreducible_components(&cartan);
    let types = components
        .iter()
        .map(|c| identify_component(&cartan.submatrix(c)))
        .collect::<Result<Vec<_>>>()?;
    let root_type = RootSystemType::new(types)?;
    Ok(Analysis {
        verdict,
        positive_roots: Some(positive),
        base,
        cartan: Some(cartan),
        components,
        root_type: Some(root_type),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    RootSystem(RootSystemType),
    NotARootSystem(FailureReason),
}

impl Classification {
    pub fn root_type(&self) -> Option<&RootSystemType> {
        match self {
            Classification::RootSystem(t) => Some(t),
            Classification::NotARootSystem(_) => None,
        }
    }
}

pub fn classify(r: &VectorSet) -> Result<Classification> {
    let analysis = analyze(r)?;
    Ok(match (analysis.root_type, analysis.verdict.failure) {
        (Some(t), None) => Classification::RootSystem(t),
        (_, Some(reason)) => Classification::NotARootSystem(reason),
        (None, None) => return Err(Error::Inconsistent("root system without a type".into())),
    })
}

/// Number of positive roots of an irreducible root system.
pub fn positive_root_count(family: Family, rank: usize) -> Result<u64> {
    if !family.countable(rank) {
        return Err(Error::InvalidType {
            family: family.letter(),
            rank,
        });
    }
    let n = rank as u64;
    Ok(match family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match rank {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionRow {
    pub rank: usize,
    /// `2^rank - 1`, the positive-root count `F(K_{rank+1})` would need.
    pub target: u64,
    pub counts: Vec<(String, u64)>,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub rows: Vec<ObstructionRow>,
    pub holds: bool,
}

/// Compares `2^n - 1` against every irreducible positive-root count at rank
/// `n`, for `3 <= n <= n_max`.
pub fn positive_root_obstruction(n_max: usize) -> Result<ObstructionReport> {
    if !(3..=63).contains(&n_max) {
        return Err(Error::Inconsistent(format!(
            "rank bound {n_max} outside 3..=63"
        )));
    }
    let mut rows = Vec::new();
    for rank in 3..=n_max {
        let target = (1u64 << rank) - 1;
        let counts = Family::ALL
            .iter()
            .filter(|f| f.countable(rank))
            .map(|&f| Ok((format!("{}{}", f.letter(), rank), positive_root_count(f, rank)?)))
            .collect::<Result<Vec<_>>>()?;
        let holds = counts.iter().all(|&(_, c)| c != target);
        rows.push(ObstructionRow {
            rank,
            target,
            counts,
            holds,
        });
    }
    let holds = rows.iter().all(|r| r.holds);
    Ok(ObstructionReport { rows, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::buildset::{facet_vectors_complete, facet_vectors_cycle};
    use crate::rootsys::standard_an;

    fn vs(dim: usize, v: Vec<Vec<i64>>) -> VectorSet {
        VectorSet::new(dim, v).unwrap()
    }

    fn type_of(r: &VectorSet) -> String {
        classify(r).unwrap().root_type().unwrap().to_string()
    }

    #[test]
    fn cartan_examples() {
        let a = analyze(&facet_vectors_cycle(3).unwrap()).unwrap();
        assert_eq!(
            a.cartan.unwrap().entries(),
            &[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
        );
        assert_eq!(a.components, vec![vec![0, 1, 2]]);
        let a = analyze(&facet_vectors_complete(2).unwrap()).unwrap();
        assert_eq!(a.cartan.unwrap().entries(), &[vec![2, -1], vec![-1, 2]]);
        let a = analyze(&vs(1, vec![vec![1], vec![-1]])).unwrap();
        assert_eq!(a.cartan.unwrap().entries(), &[vec![2]]);
    }

    #[test]
    fn reducible_a1_a1() {
        let r = vs(2, vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]]);
        let a = analyze(&r).unwrap();
        assert_eq!(a.components, vec![vec![0], vec![1]]);
        assert_eq!(a.root_type.unwrap().to_string(), "A1+A1");
    }

    #[test]
    fn classify_examples() {
        assert_eq!(type_of(&facet_vectors_cycle(3).unwrap()), "A3");
        assert_eq!(type_of(&facet_vectors_complete(2).unwrap()), "A2");
        assert_eq!(type_of(&facet_vectors_cycle(7).unwrap()), "A7");
        assert!(matches!(
            classify(&facet_vectors_complete(3).unwrap()).unwrap(),
            Classification::NotARootSystem(FailureReason::NoCoroot(_))
        ));
    }

    #[test]
    fn type_rendering_sorted() {
        let t = RootSystemType::new(vec![(Family::B, 2), (Family::A, 1), (Family::A, 1)]).unwrap();
        assert_eq!(t.to_string(), "A1+A1+B2");
        assert_eq!(t.rank(), 4);
        assert!(RootSystemType::irreducible(Family::C, 2).is_err());
        assert!(RootSystemType::irreducible(Family::E, 9).is_err());
    }

    #[test]
    fn catalog_has_no_duplicates() {
        for rank in 1..=8 {
            let entries: Vec<_> = Family::ALL
                .iter()
                .filter(|f| f.in_catalog(rank))
                .map(|&f| catalog_cartan(f, rank).unwrap())
                .collect();
            for (i, a) in entries.iter().enumerate() {
                assert_eq!(irreducible_components(a).len(), 1);
                for b in &entries[i + 1..] {
                    assert!(!a.isomorphic(b));
                }
            }
        }
    }

    #[test]
    fn isomorphism_under_relabeling() {
        let e6 = catalog_cartan(Family::E, 6).unwrap();
        let perm = [5, 3, 0, 1, 4, 2];
        let shuffled = CartanMatrix::new(
            (0..6)
                .map(|i| (0..6).map(|j| e6.get(perm[i], perm[j])).collect())
                .collect(),
        )
        .unwrap();
        assert!(shuffled.isomorphic(&e6));
        assert_eq!(identify_component(&shuffled).unwrap(), (Family::E, 6));
        // transposing swaps B and C
        let b3 = catalog_cartan(Family::B, 3).unwrap();
        let c3 = catalog_cartan(Family::C, 3).unwrap();
        let bt: Vec<Vec<i64>> = (0..3).map(|i| (0..3).map(|j| b3.get(j, i)).collect()).collect();
        assert!(CartanMatrix::new(bt).unwrap().isomorphic(&c3));
    }

    #[test]
    fn invalid_cartan_rejected() {
        assert!(CartanMatrix::new(vec![vec![2, -1], vec![0, 2]]).is_err());
        assert!(CartanMatrix::new(vec![vec![2, 1], vec![1, 2]]).is_err());
        assert!(CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).is_err());
        assert!(CartanMatrix::new(vec![vec![1]]).is_err());
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(positive_root_count(Family::A, 3).unwrap(), 6);
        assert_eq!(positive_root_count(Family::B, 3).unwrap(), 9);
        assert_eq!(positive_root_count(Family::G, 2).unwrap(), 6);
        assert_eq!(positive_root_count(Family::D, 3).unwrap(), 6);
        assert_eq!(positive_root_count(Family::E, 8).unwrap(), 120);
        assert!(positive_root_count(Family::F, 5).is_err());
        assert!(positive_root_count(Family::A, 0).is_err());
        // A3 against the positive half of the standard system
        let pos = positive_roots(&standard_an(3).unwrap()).unwrap();
        assert_eq!(pos.len() as u64, positive_root_count(Family::A, 3).unwrap());
    }

    #[test]
    fn obstruction_rows() {
        let rep = positive_root_obstruction(4).unwrap();
        assert!(rep.holds);
        let r3: Vec<u64> = rep.rows[0].counts.iter().map(|c| c.1).collect();
        assert_eq!(rep.rows[0].target, 7);
        assert_eq!(r3, vec![6, 9, 9, 6]);
        let r4: Vec<u64> = rep.rows[1].counts.iter().map(|c| c.1).collect();
        assert_eq!(rep.rows[1].target, 15);
        assert_eq!(r4, vec![10, 16, 16, 12, 24]);
        assert!(positive_root_obstruction(2).is_err());
    }
}
