//! Simple undirected graphs on nodes `1..=k`, stored as one neighbor mask per
//! node, together with the standard families, connectivity of induced
//! subgraphs and exhaustive enumeration of connected graphs.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest node count a [`Graph`] can hold (one bit per node in a `u32`).
pub const MAX_NODES: usize = 32;
/// Largest node count for labeled enumeration.
pub const LABELED_CAP: usize = 8;
/// Largest node count for enumeration up to isomorphism.
pub const UP_TO_ISO_CAP: usize = 7;
/// Largest node count accepted by [`canonical_form`].
pub const CANONICAL_CAP: usize = 10;

/// A set of nodes. Bit `i - 1` stands for node `i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeSet(u32);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub const fn from_mask(mask: u32) -> Self {
        NodeSet(mask)
    }

    pub const fn mask(self) -> u32 {
        self.0
    }

    /// All of `1..=k`.
    pub fn full(k: usize) -> Self {
        debug_assert!(k <= MAX_NODES);
        if k >= 32 {
            NodeSet(u32::MAX)
        } else {
            NodeSet((1u32 << k) - 1)
        }
    }

    pub fn singleton(node: usize) -> Self {
        debug_assert!((1..=MAX_NODES).contains(&node));
        NodeSet(1 << (node - 1))
    }

    pub fn from_nodes<I: IntoIterator<Item = usize>>(nodes: I) -> Self {
        nodes
            .into_iter()
            .fold(NodeSet::EMPTY, |acc, v| acc.with(v))
    }

    pub fn with(self, node: usize) -> Self {
        NodeSet(self.0 | NodeSet::singleton(node).0)
    }

    pub fn contains(self, node: usize) -> bool {
        (1..=MAX_NODES).contains(&node) && self.0 & (1 << (node - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: NodeSet) -> Self {
        NodeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: NodeSet) -> Self {
        NodeSet(self.0 & other.0)
    }

    pub fn difference(self, other: NodeSet) -> Self {
        NodeSet(self.0 & !other.0)
    }

    /// Smallest node in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Nodes in ascending order.
    pub fn nodes(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let bit = rest.trailing_zeros();
            rest &= rest - 1;
            Some(bit as usize + 1)
        })
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.nodes().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// A simple graph on nodes `1..=k`.
///
/// Adjacency is symmetric and irreflexive; every constructor maintains this.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<NodeSet>,
}

impl Graph {
    /// Edgeless graph on `k` nodes.
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::NoNodes);
        }
        if k > MAX_NODES {
            return Err(Error::TooManyNodes {
                count: k,
                cap: MAX_NODES,
            });
        }
        Ok(Graph {
            adj: vec![NodeSet::EMPTY; k],
        })
    }

    pub fn from_edges(k: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(k)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let k = self.node_count();
        for node in [u, v] {
            if node == 0 || node > k {
                return Err(Error::NodeOutOfRange {
                    line: 0,
                    node: node as i64,
                    node_count: k,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { line: 0, node: u });
        }
        self.adj[u - 1] = self.adj[u - 1].with(v);
        self.adj[v - 1] = self.adj[v - 1].with(u);
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    /// `V(G)` as a node set.
    pub fn nodes(&self) -> NodeSet {
        NodeSet::full(self.node_count())
    }

    pub fn neighbors(&self, node: usize) -> NodeSet {
        self.adj[node - 1]
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u - 1].contains(v)
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adj[node - 1].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|n| n.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 1..=self.node_count() {
            for v in self.neighbors(u).nodes().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Union of neighborhoods of the nodes in `set`.
    pub fn neighborhood(&self, set: NodeSet) -> NodeSet {
        set.nodes()
            .fold(NodeSet::EMPTY, |acc, v| acc.union(self.adj[v - 1]))
    }

    /// Nodes of `within` reachable from `start` without leaving `within`.
    fn reach(&self, start: usize, within: NodeSet) -> NodeSet {
        let mut seen = NodeSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self
                .neighborhood(frontier)
                .intersection(within)
                .difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Whether the induced subgraph `G|S` is connected.
    pub fn is_connected_induced(&self, set: NodeSet) -> Result<bool> {
        if !set.is_subset(self.nodes()) {
            return Err(Error::SubsetOutOfRange {
                mask: set.mask(),
                node_count: self.node_count(),
            });
        }
        let start = set.first().ok_or(Error::EmptySubset)?;
        Ok(self.reach(start, set) == set)
    }

    pub fn is_connected(&self) -> bool {
        self.reach(1, self.nodes()) == self.nodes()
    }

    /// The graph obtained by adding node `k + 1` joined to `attach`.
    pub fn extended(&self, attach: NodeSet) -> Result<Graph> {
        let k = self.node_count();
        let mut g = Graph::new(k + 1)?;
        g.adj[..k].copy_from_slice(&self.adj);
        for v in attach.nodes() {
            g.add_edge(v, k + 1)?;
        }
        Ok(g)
    }

    /// Relabels so that node `order[p]` (1-based) becomes node `p + 1`.
    pub fn relabeled(&self, order: &[usize]) -> Graph {
        debug_assert_eq!(order.len(), self.node_count());
        let mut position = vec![0; self.node_count()];
        for (p, &v) in order.iter().enumerate() {
            position[v - 1] = p + 1;
        }
        let adj = order
            .iter()
            .map(|&v| NodeSet::from_nodes(self.neighbors(v).nodes().map(|u| position[u - 1])))
            .collect();
        Graph { adj }
    }

    /// Renders the graph in the text file format read by [`parse_graph`].
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.node_count());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// Parses the text graph format: the first line holds the node count, each
/// further line one edge `u v`. Blank lines and lines starting with `#` are
/// skipped and repeated edges are merged.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(Error::EmptyInput)?;
    let k: usize = header.parse().map_err(|_| Error::Malformed {
        line,
        message: format!("expected a node count, got {header:?}"),
    })?;
    let mut g = Graph::new(k)?;

    for (line, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Malformed {
                line,
                message: format!("expected two node indices, got {l:?}"),
            });
        }
        let mut ends = [0usize; 2];
        for (slot, field) in ends.iter_mut().zip(&fields) {
            let node: i64 = field.parse().map_err(|_| Error::Malformed {
                line,
                message: format!("{field:?} is not an integer"),
            })?;
            if node < 1 || node as u64 > k as u64 {
                return Err(Error::NodeOutOfRange {
                    line,
                    node,
                    node_count: k,
                });
            }
            *slot = node as usize;
        }
        if ends[0] == ends[1] {
            return Err(Error::SelfLoop {
                line,
                node: ends[0],
            });
        }
        g.add_edge(ends[0], ends[1])?;
    }
    Ok(g)
}

/// Cycle `1-2-...-k-1`.
pub fn cycle_graph(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::CycleTooSmall(k));
    }
    let mut g = path_graph(k)?;
    g.add_edge(k, 1)?;
    Ok(g)
}

pub fn complete_graph(k: usize) -> Result<Graph> {
    let mut g = Graph::new(k)?;
    for u in 1..=k {
        for v in u + 1..=k {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

pub fn path_graph(k: usize) -> Result<Graph> {
    let mut g = Graph::new(k)?;
    for u in 1..k {
        g.add_edge(u, u + 1)?;
    }
    Ok(g)
}

/// Star with center node 1.
pub fn star_graph(k: usize) -> Result<Graph> {
    let mut g = Graph::new(k)?;
    for v in 2..=k {
        g.add_edge(1, v)?;
    }
    Ok(g)
}

/// Isomorphism-invariant key of a graph.
///
/// Byte 0 is the node count; the rest is the upper triangle of the adjacency
/// matrix, read column by column (`(1,2), (1,3), (2,3), (1,4), ...`), packed
/// MSB first and left aligned. The key is the minimum of this bit string over
/// all relabelings, so byte-wise order agrees with numeric order of the code.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    fn from_code(k: usize, code: u64) -> Self {
        let bits = pair_count(k);
        let nbytes = bits.div_ceil(8);
        let aligned = if bits == 0 { 0 } else { code << (8 * nbytes - bits) };
        let mut bytes = Vec::with_capacity(1 + nbytes);
        bytes.push(k as u8);
        bytes.extend((0..nbytes).rev().map(|i| (aligned >> (8 * i)) as u8));
        CanonicalKey(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn node_count(&self) -> usize {
        self.0[0] as usize
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn pair_count(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

struct CanonicalSearch<'a> {
    graph: &'a Graph,
    bits: usize,
    order: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl CanonicalSearch<'_> {
    /// Places a node at position `pos`. `code` holds the adjacency bits among
    /// positions `0..pos`; any branch whose prefix already exceeds the best
    /// code's prefix is cut.
    fn place(&mut self, pos: usize, used: NodeSet, code: u64) {
        let k = self.graph.node_count();
        if pos == k {
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, self.order.clone()));
            }
            return;
        }
        let len = pos * (pos + 1) / 2;
        for v in NodeSet::full(k).difference(used).nodes() {
            let mut next = code;
            for &u in &self.order[..pos] {
                next = (next << 1) | self.graph.is_adjacent(u, v) as u64;
            }
            if let Some((best, _)) = &self.best {
                if next > best >> (self.bits - len) {
                    continue;
                }
            }
            self.order[pos] = v;
            self.place(pos + 1, used.with(v), next);
        }
    }
}

/// Canonical relabeling of `g` together with its key. The returned graph's
/// own adjacency encoding equals the key.
pub fn canonical_relabeling(g: &Graph) -> Result<(Graph, CanonicalKey)> {
    let k = g.node_count();
    if k > CANONICAL_CAP {
        return Err(Error::TooManyNodes {
            count: k,
            cap: CANONICAL_CAP,
        });
    }
    let mut search = CanonicalSearch {
        graph: g,
        bits: pair_count(k),
        order: vec![0; k],
        best: None,
    };
    search.place(0, NodeSet::EMPTY, 0);
    let (code, order) = search.best.expect("at least one ordering exists");
    Ok((g.relabeled(&order), CanonicalKey::from_code(k, code)))
}

/// Minimum adjacency encoding of `g` over all node permutations.
pub fn canonical_form(g: &Graph) -> Result<CanonicalKey> {
    canonical_relabeling(g).map(|(_, key)| key)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumerationMode {
    Labeled,
    UpToIso,
}

impl fmt::Display for EnumerationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnumerationMode::Labeled => "labeled",
            EnumerationMode::UpToIso => "up_to_iso",
        })
    }
}

/// Labeled connected graphs on `k` nodes in ascending edge-mask order, where
/// bit `t` of the mask is the `t`-th pair in `(1,2), (1,3), ..., (k-1,k)`.
pub struct LabeledConnectedGraphs {
    k: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    end: u64,
}

impl Iterator for LabeledConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            let mut g = Graph::new(self.k).expect("k within cap");
            for (t, &(u, v)) in self.pairs.iter().enumerate() {
                if mask >> t & 1 == 1 {
                    g.add_edge(u, v).expect("valid pair");
                }
            }
            if g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

/// Connected graphs on `k` nodes, either every labeling or one canonical
/// representative per isomorphism class.
pub enum ConnectedGraphs {
    Labeled(LabeledConnectedGraphs),
    UpToIso(std::vec::IntoIter<Graph>),
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match self {
            ConnectedGraphs::Labeled(it) => it.next(),
            ConnectedGraphs::UpToIso(it) => it.next(),
        }
    }
}

pub fn enumerate_connected_graphs(k: usize, mode: EnumerationMode) -> Result<ConnectedGraphs> {
    if k == 0 {
        return Err(Error::NoNodes);
    }
    match mode {
        EnumerationMode::Labeled => {
            if k > LABELED_CAP {
                return Err(Error::TooManyNodes {
                    count: k,
                    cap: LABELED_CAP,
                });
            }
            let pairs: Vec<_> = (1..=k)
                .flat_map(|u| (u + 1..=k).map(move |v| (u, v)))
                .collect();
            Ok(ConnectedGraphs::Labeled(LabeledConnectedGraphs {
                k,
                end: 1u64 << pairs.len(),
                pairs,
                next_mask: 0,
            }))
        }
        EnumerationMode::UpToIso => {
            let classes = connected_classes(k)?;
            Ok(ConnectedGraphs::UpToIso(
                classes
                    .into_iter()
                    .map(|(_, g)| g)
                    .collect::<Vec<_>>()
                    .into_iter(),
            ))
        }
    }
}

/// Canonical representatives of the connected graphs on `k` nodes, keyed and
/// sorted by canonical key.
///
/// Every connected graph on `k >= 2` nodes has a node whose removal leaves
/// it connected, so all classes arise from a class on `k - 1` nodes plus one
/// node attached to a nonempty subset.
pub fn connected_classes(k: usize) -> Result<Vec<(CanonicalKey, Graph)>> {
    if k == 0 {
        return Err(Error::NoNodes);
    }
    if k > UP_TO_ISO_CAP {
        return Err(Error::TooManyNodes {
            count: k,
            cap: UP_TO_ISO_CAP,
        });
    }
    let (single, key) = canonical_relabeling(&Graph::new(1)?)?;
    let mut level = vec![(key, single)];
    for size in 1..k {
        let mut next = BTreeMap::new();
        for (_, g) in &level {
            for mask in 1..1u32 << size {
                let (rep, key) = canonical_relabeling(&g.extended(NodeSet::from_mask(mask))?)?;
                next.entry(key).or_insert(rep);
            }
        }
        level = next.into_iter().collect();
    }
    Ok(level)
}
