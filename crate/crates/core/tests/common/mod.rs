//! Independent reference implementations used by the integration tests.
//! Nothing here calls into the library's algorithms; only plain data types
//! cross the boundary.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use itertools::Itertools;

/// Adjacency matrix of a graph on `k` nodes, 0-based.
pub type Adjacency = Vec<Vec<bool>>;

pub fn adjacency(k: usize, edges: &[(usize, usize)]) -> Adjacency {
    let mut a = vec![vec![false; k]; k];
    for &(u, v) in edges {
        a[u - 1][v - 1] = true;
        a[v - 1][u - 1] = true;
    }
    a
}

/// All `k(k-1)/2` unordered pairs in lexicographic order, 0-based.
pub fn pairs(k: usize) -> Vec<(usize, usize)> {
    (0..k).tuple_combinations().collect()
}

/// The graph whose edges are the pairs selected by `mask`.
pub fn adjacency_from_mask(k: usize, mask: u64) -> Adjacency {
    let mut a = vec![vec![false; k]; k];
    for (bit, (u, v)) in pairs(k).into_iter().enumerate() {
        if mask >> bit & 1 == 1 {
            a[u][v] = true;
            a[v][u] = true;
        }
    }
    a
}

/// Breadth-first search restricted to `subset` (0-based node list).
pub fn connected_within(a: &Adjacency, subset: &[usize]) -> bool {
    let Some(&start) = subset.first() else {
        return false;
    };
    let inside: HashSet<usize> = subset.iter().copied().collect();
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for (v, &adjacent) in a[u].iter().enumerate() {
            if adjacent && inside.contains(&v) && seen.insert(v) {
                queue.push_back(v);
            }
        }
    }
    seen.len() == inside.len()
}

pub fn connected(a: &Adjacency) -> bool {
    connected_within(a, &(0..a.len()).collect::<Vec<_>>())
}

/// Every nonempty node subset inducing a connected subgraph, as sorted
/// 1-based node lists.
pub fn brute_building_set(a: &Adjacency) -> BTreeSet<Vec<usize>> {
    let k = a.len();
    (1..=k)
        .flat_map(|size| (0..k).combinations(size))
        .filter(|s| connected_within(a, s))
        .map(|s| s.into_iter().map(|v| v + 1).collect())
        .collect()
}

/// `alpha_I` as an explicit sum of basis vectors, with the last basis vector
/// replaced by minus the sum of the others.
pub fn brute_facet_vector(subset: &[usize], k: usize) -> Vec<i64> {
    let n = k - 1;
    let mut out = vec![0i64; n];
    for &i in subset {
        if i == k {
            for x in out.iter_mut() {
                *x -= 1;
            }
        } else {
            out[i - 1] += 1;
        }
    }
    out
}

/// Canonical invariant by exhaustive search over every permutation: the
/// lexicographically smallest sorted edge list of any relabeling.
pub fn naive_canonical(a: &Adjacency) -> Vec<(usize, usize)> {
    let k = a.len();
    let edges: Vec<(usize, usize)> = pairs(k).into_iter().filter(|&(u, v)| a[u][v]).collect();
    (0..k)
        .permutations(k)
        .map(|p| {
            let mut e: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap_or_default()
}

/// Number of permutations fixing the graph.
pub fn automorphism_count(a: &Adjacency) -> u64 {
    let k = a.len();
    (0..k)
        .permutations(k)
        .filter(|p| (0..k).all(|u| (0..k).all(|v| a[u][v] == a[p[u]][p[v]])))
        .count() as u64
}

/// Labeled connected graphs on `k` nodes, by testing every edge subset.
pub fn brute_labeled_connected_count(k: usize) -> u64 {
    let m = k * (k - 1) / 2;
    (0..1u64 << m)
        .filter(|&mask| connected(&adjacency_from_mask(k, mask)))
        .count() as u64
}

/// Closes a list of vectors under negation and sorts it.
pub fn symmetric_closure(vectors: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let mut all: BTreeSet<Vec<i64>> = BTreeSet::new();
    for v in vectors {
        all.insert(v.iter().map(|x| -x).collect());
        all.insert(v);
    }
    all.into_iter().collect()
}

fn unit(n: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = c;
    v
}

fn pair_vectors(n: usize, scale: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for (i, j) in (0..n).tuple_combinations() {
        for (si, sj) in [(1, 1), (1, -1)] {
            let mut v = vec![0; n];
            v[i] = si * scale;
            v[j] = sj * scale;
            out.push(v);
        }
    }
    out
}

/// `+-e_i`, `+-e_i +- e_j` in `Z^n`.
pub fn explicit_b(n: usize) -> Vec<Vec<i64>> {
    let mut v = pair_vectors(n, 1);
    v.extend((0..n).map(|i| unit(n, i, 1)));
    symmetric_closure(v)
}

/// `+-2e_i`, `+-e_i +- e_j` in `Z^n`.
pub fn explicit_c(n: usize) -> Vec<Vec<i64>> {
    let mut v = pair_vectors(n, 1);
    v.extend((0..n).map(|i| unit(n, i, 2)));
    symmetric_closure(v)
}

/// `+-e_i +- e_j` in `Z^n`.
pub fn explicit_d(n: usize) -> Vec<Vec<i64>> {
    symmetric_closure(pair_vectors(n, 1))
}

/// F4 scaled by 2: `+-2e_i`, `+-2e_i +- 2e_j`, `(+-1, +-1, +-1, +-1)`.
pub fn explicit_f4() -> Vec<Vec<i64>> {
    let mut v = pair_vectors(4, 2);
    v.extend((0..4).map(|i| unit(4, i, 2)));
    for signs in 0..16u32 {
        v.push((0..4).map(|b| if signs >> b & 1 == 1 { -1 } else { 1 }).collect());
    }
    symmetric_closure(v)
}

/// E8 scaled by 2: `+-2e_i +- 2e_j` and `(+-1)^8` with an even number of
/// minus signs.
pub fn explicit_e8() -> Vec<Vec<i64>> {
    let mut v = pair_vectors(8, 2);
    for signs in 0..256u32 {
        if signs.count_ones() % 2 == 0 {
            v.push((0..8).map(|b| if signs >> b & 1 == 1 { -1 } else { 1 }).collect());
        }
    }
    symmetric_closure(v)
}

/// G2 inside the plane `x + y + z = 0`: short roots `e_i - e_j`, long roots
/// `+-(2e_i - e_j - e_k)`.
pub fn explicit_g2() -> Vec<Vec<i64>> {
    let mut v = Vec::new();
    for (i, j) in (0..3).tuple_combinations() {
        let mut s = vec![0; 3];
        s[i] = 1;
        s[j] = -1;
        v.push(s);
    }
    for i in 0..3 {
        let mut l = vec![-1; 3];
        l[i] = 2;
        v.push(l);
    }
    symmetric_closure(v)
}

/// G2 in simple-root coordinates.
pub fn g2_simple_coordinates() -> Vec<Vec<i64>> {
    symmetric_closure(vec![
        vec![1, 0],
        vec![0, 1],
        vec![1, 1],
        vec![2, 1],
        vec![3, 1],
        vec![3, 2],
    ])
}

/// Positive roots in simple-root coordinates of the simply laced system
/// whose Dynkin diagram has the given edges (0-based), grown by root
/// strings: `beta + alpha_i` is a root iff `p - <beta, alpha_i> > 0`.
pub fn simply_laced_positive_roots(rank: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut cartan = vec![vec![0i64; rank]; rank];
    for (i, row) in cartan.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j) in edges {
        cartan[i][j] = -1;
        cartan[j][i] = -1;
    }
    let mut roots: BTreeSet<Vec<i64>> = (0..rank).map(|i| unit(rank, i, 1)).collect();
    let mut layer: Vec<Vec<i64>> = roots.iter().cloned().collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..rank {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if roots.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..rank).map(|j| beta[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if roots.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    roots.into_iter().collect()
}

/// E6, E7, E8 diagrams: a chain `0-2-3-4-...` with node 1 attached to 3.
pub fn e_diagram(rank: usize) -> Vec<(usize, usize)> {
    let mut edges = vec![(0, 2), (1, 3)];
    edges.extend((2..rank - 1).map(|i| (i, i + 1)));
    edges
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `M v` for an integer matrix.
pub fn apply(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// The pairing `2 (beta, alpha) / (alpha, alpha)` from the standard dot
/// product, or `None` when it is not an integer.
pub fn euclidean_pairing(alpha: &[i64], beta: &[i64]) -> Option<i64> {
    let ab: i64 = alpha.iter().zip(beta).map(|(a, b)| a * b).sum();
    let aa: i64 = alpha.iter().map(|a| a * a).sum();
    (2 * ab % aa == 0).then_some(2 * ab / aa)
}
