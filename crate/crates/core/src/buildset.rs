//! Graphical building sets and the facet vectors of graph associahedra.
//!
//! The ambient lattice is `Z^n` with `n = k - 1` for a graph on `k` nodes.
//! Node `i <= n` carries the basis vector `e_i` and node `k` carries
//! `-(e_1 + ... + e_n)`; the facet indexed by a building-set member `I` has
//! normal `sum_{i in I} e_i`.

use std::collections::HashSet;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet, MAX_NODES};
use crate::vector::{IntVector, VectorSet};

/// Largest rank accepted by the closed-form constructions.
pub const CLOSED_FORM_MAX_RANK: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuildingSet {
    node_count: usize,
    members: Vec<NodeSet>,
}

impl BuildingSet {
    /// Builds a building set from an explicit member list and validates it:
    /// members are nonempty subsets of `1..=k`, every singleton and the full
    /// set are present, and intersecting members have their union present.
    pub fn from_members(node_count: usize, members: Vec<NodeSet>) -> Result<Self> {
        if node_count == 0 || node_count > MAX_NODES {
            return Err(Error::BadBuildingSet(format!(
                "node count {node_count} out of range"
            )));
        }
        let ground = NodeSet::full(node_count);
        let mut members = members;
        members.sort_unstable();
        members.dedup();
        let set = BuildingSet {
            node_count,
            members,
        };
        if let Some(bad) = set.members.iter().find(|m| m.is_empty() || !m.is_subset(ground)) {
            return Err(Error::BadBuildingSet(format!("invalid member {bad}")));
        }
        for v in 1..=node_count {
            if !set.contains(NodeSet::singleton(v)) {
                return Err(Error::BadBuildingSet(format!("singleton {{{v}}} missing")));
            }
        }
        if !set.contains(ground) {
            return Err(Error::BadBuildingSet("ground set missing".into()));
        }
        for (i, a) in set.members.iter().enumerate() {
            for b in &set.members[i + 1..] {
                if !a.intersection(*b).is_empty() && !set.contains(a.union(*b)) {
                    return Err(Error::BadBuildingSet(format!(
                        "{a} and {b} intersect but their union is missing"
                    )));
                }
            }
        }
        Ok(set)
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn ground(&self) -> NodeSet {
        NodeSet::full(self.node_count)
    }

    /// Members in ascending mask order.
    pub fn members(&self) -> &[NodeSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: NodeSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    /// Whether `V(G) \ I` is a member for every member `I != V(G)`.
    pub fn complement_closed(&self) -> bool {
        let ground = self.ground();
        self.members
            .iter()
            .filter(|&&m| m != ground)
            .all(|&m| self.contains(ground.difference(m)))
    }

    /// `{ alpha_I : I a member, I != V(G) }`.
    pub fn facet_vectors(&self) -> Result<VectorSet> {
        if self.node_count < 2 {
            return Err(Error::SingleNode);
        }
        let ground = self.ground();
        let vectors = self
            .members
            .iter()
            .filter(|&&m| m != ground)
            .map(|&m| facet_vector(m, self.node_count).map(FacetVector::into_inner))
            .collect::<Result<Vec<_>>>()?;
        VectorSet::new(self.node_count - 1, vectors)
    }
}

impl Serialize for BuildingSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let members: Vec<Vec<usize>> = self.members.iter().map(|m| m.nodes().collect()).collect();
        let mut st = s.serialize_struct("BuildingSet", 2)?;
        st.serialize_field("node_count", &self.node_count)?;
        st.serialize_field("members", &members)?;
        st.end()
    }
}

/// `B(G)`: the nonempty node sets inducing connected subgraphs, grown from
/// singletons by adding one neighbor at a time.
pub fn building_set(g: &Graph) -> Result<BuildingSet> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut seen: HashSet<NodeSet> = HashSet::new();
    let mut stack: Vec<NodeSet> = (1..=g.node_count()).map(NodeSet::singleton).collect();
    seen.extend(stack.iter().copied());
    while let Some(s) = stack.pop() {
        for v in g.neighborhood(s).difference(s).nodes() {
            let grown = s.with(v);
            if seen.insert(grown) {
                stack.push(grown);
            }
        }
    }
    let mut members: Vec<NodeSet> = seen.into_iter().collect();
    members.sort_unstable();
    Ok(BuildingSet {
        node_count: g.node_count(),
        members,
    })
}

/// Primitive inward facet normal. Coordinates lie in `{-1, 0, 1}`, are not
/// all zero and share one sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetVector(IntVector);

impl FacetVector {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> IntVector {
        self.0
    }
}

/// `alpha_I = sum_{i in I} e_i` with `e_k = -(e_1 + ... + e_{k-1})`.
pub fn facet_vector(subset: NodeSet, k: usize) -> Result<FacetVector> {
    if k < 2 {
        return Err(Error::SingleNode);
    }
    if k > MAX_NODES {
        return Err(Error::TooManyNodes {
            count: k,
            cap: MAX_NODES,
        });
    }
    let ground = NodeSet::full(k);
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    if !subset.is_subset(ground) {
        return Err(Error::SubsetOutOfRange {
            mask: subset.mask(),
            node_count: k,
        });
    }
    if subset == ground {
        return Err(Error::FullSubset);
    }
    let n = k - 1;
    // The e_k term contributes -1 everywhere, so the result is the indicator
    // of I without k, or minus the indicator of the complement.
    let coords = if subset.contains(k) {
        let rest = ground.difference(subset);
        (1..=n).map(|i| -(rest.contains(i) as i64)).collect()
    } else {
        (1..=n).map(|i| subset.contains(i) as i64).collect()
    };
    let v = FacetVector(coords);
    debug_assert!(is_signed_indicator(v.coords()));
    Ok(v)
}

/// `F(G)`.
pub fn facet_vectors(g: &Graph) -> Result<VectorSet> {
    if g.node_count() < 2 {
        return Err(Error::SingleNode);
    }
    building_set(g)?.facet_vectors()
}

/// Nonzero with every nonzero coordinate equal to 1, or every one equal to -1.
pub fn is_signed_indicator(v: &[i64]) -> bool {
    let nonzero: Vec<i64> = v.iter().copied().filter(|&x| x != 0).collect();
    !nonzero.is_empty() && (nonzero.iter().all(|&x| x == 1) || nonzero.iter().all(|&x| x == -1))
}

fn check_rank(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::Inconsistent(format!("rank {n} below minimum {min}")));
    }
    if n > CLOSED_FORM_MAX_RANK {
        return Err(Error::TooManyNodes {
            count: n,
            cap: CLOSED_FORM_MAX_RANK,
        });
    }
    Ok(())
}

/// Closed form of `F(K_{n+1})`: `{ +-sum_{i in I} e_i : {} != I <= [n] }`.
pub fn facet_vectors_complete(n: usize) -> Result<VectorSet> {
    check_rank(n, 1)?;
    let mut out = Vec::with_capacity(2 * ((1usize << n) - 1));
    for mask in 1u32..1 << n {
        let v: IntVector = (0..n).map(|i| (mask >> i & 1) as i64).collect();
        out.push(v.iter().map(|x| -x).collect());
        out.push(v);
    }
    VectorSet::new(n, out)
}

/// Closed form of `F(C_{n+1})`: `{ +-(e_i + ... + e_j) : 1 <= i <= j <= n }`.
pub fn facet_vectors_cycle(n: usize) -> Result<VectorSet> {
    if n < 2 {
        return Err(Error::CycleTooSmall(n + 1));
    }
    check_rank(n, 2)?;
    let mut out = Vec::with_capacity(n * (n + 1));
    for i in 0..n {
        for j in i..n {
            let v: IntVector = (0..n).map(|t| (i <= t && t <= j) as i64).collect();
            out.push(v.iter().map(|x| -x).collect());
            out.push(v);
        }
    }
    VectorSet::new(n, out)
}

pub fn centrally_symmetric(r: &VectorSet) -> bool {
    r.centrally_symmetric()
}

/// Whether complement-closure of `b` and central symmetry of `f` agree.
pub fn complement_symmetry_agree(b: &BuildingSet, f: &VectorSet) -> bool {
    b.complement_closed() == f.centrally_symmetric()
}
