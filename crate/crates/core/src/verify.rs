//! Exhaustive checks over every connected graph up to a node cap.
//!
//! Each graph is run through building set, facet vectors, symmetry and
//! root-system recognition. Whether a graph is a cycle or complete is read
//! off its degrees and edge count only, so the comparison with the
//! root-system verdict does not depend on the pipeline it checks.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::buildset::{building_set, BuildingSet};
use crate::error::{Error, Result};
use crate::graph::{
    canonical_form, complete_graph, enumerate_connected_graphs, CanonicalKey, EnumerationMode,
    Graph, LABELED_CAP, UP_TO_ISO_CAP,
};
use crate::rootsys::{analyze, Analysis, Family, RootSystemType};
use crate::vector::{IntVector, VectorSet};

const CHUNK: usize = 1 << 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphRecord {
    pub canonical_key: CanonicalKey,
    pub node_count: usize,
    pub edge_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub is_cycle: bool,
    pub is_complete: bool,
    pub building_set_size: usize,
    pub facet_vector_count: usize,
    pub complement_closed: bool,
    pub centrally_symmetric: bool,
    pub is_root_system: bool,
    pub root_type: Option<RootSystemType>,
    pub failure_reason: Option<String>,
    pub failure_witness: Option<IntVector>,
}

impl GraphRecord {
    /// Root system exactly for cycles, and then of type `A_{k-1}`.
    pub fn root_system_iff_cycle(&self) -> bool {
        if self.is_root_system != self.is_cycle {
            return false;
        }
        !self.is_root_system || self.root_type == expected_cycle_type(self.node_count)
    }

    pub fn symmetric_iff_cycle_or_complete(&self) -> bool {
        self.centrally_symmetric == (self.is_cycle || self.is_complete)
    }

    pub fn closure_matches_symmetry(&self) -> bool {
        self.complement_closed == self.centrally_symmetric
            && self.facet_vector_count + 1 == self.building_set_size
    }

    /// Names of the checks this record fails.
    pub fn failed_checks(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.root_system_iff_cycle() {
            out.push("root_system_iff_cycle");
        }
        if !self.symmetric_iff_cycle_or_complete() {
            out.push("symmetric_iff_cycle_or_complete");
        }
        if !self.closure_matches_symmetry() {
            out.push("closure_matches_symmetry");
        }
        out
    }
}

fn expected_cycle_type(k: usize) -> Option<RootSystemType> {
    RootSystemType::irreducible(Family::A, k.checked_sub(1)?).ok()
}

/// Connected, `k >= 3`, `k` edges and every degree 2.
pub fn is_cycle_graph(g: &Graph) -> bool {
    let k = g.node_count();
    k >= 3 && g.edge_count() == k && (1..=k).all(|v| g.degree(v) == 2) && g.is_connected()
}

pub fn is_complete_graph(g: &Graph) -> bool {
    let k = g.node_count();
    g.edge_count() == k * (k - 1) / 2
}

/// Everything computed for one graph.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub record: GraphRecord,
    pub building_set: BuildingSet,
    pub facet_vectors: VectorSet,
    pub analysis: Analysis,
}

pub fn evaluate(g: &Graph) -> Result<Evaluation> {
    let building_set = building_set(g)?;
    let facet_vectors = building_set.facet_vectors()?;
    let analysis = analyze(&facet_vectors)?;
    let failure = analysis.verdict.failure.as_ref();
    let record = GraphRecord {
        canonical_key: canonical_form(g)?,
        node_count: g.node_count(),
        edge_count: g.edge_count(),
        edges: g.edges(),
        is_cycle: is_cycle_graph(g),
        is_complete: is_complete_graph(g),
        building_set_size: building_set.len(),
        facet_vector_count: facet_vectors.len(),
        complement_closed: building_set.complement_closed(),
        centrally_symmetric: facet_vectors.centrally_symmetric(),
        is_root_system: analysis.verdict.is_root_system(),
        root_type: analysis.root_type.clone(),
        failure_reason: failure.map(|f| f.tag().to_string()),
        failure_witness: failure.and_then(|f| f.witness()).map(<[i64]>::to_vec),
    };
    Ok(Evaluation {
        record,
        building_set,
        facet_vectors,
        analysis,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub record: GraphRecord,
    pub failed: Vec<&'static str>,
    pub building_set: BuildingSet,
    pub facet_vectors: VectorSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NodeCount {
    pub node_count: usize,
    pub graphs: usize,
    pub root_systems: usize,
    pub centrally_symmetric: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub node_cap: usize,
    pub mode: EnumerationMode,
    pub counts: Vec<NodeCount>,
    pub records: Vec<GraphRecord>,
    pub theorem_holds: bool,
    pub symmetric_iff_cycle_or_complete: bool,
    pub closure_matches_symmetry: bool,
    pub counterexamples: Vec<CanonicalKey>,
    pub counterexample_details: Vec<Counterexample>,
}

impl VerificationReport {
    pub fn all_hold(&self) -> bool {
        self.theorem_holds && self.symmetric_iff_cycle_or_complete && self.closure_matches_symmetry
    }

    /// One row per graph followed by the verdicts.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:<12} {:>2} {:>5} {:>5} {:>8} {:>4} {:>4} {:>6} {:>9} {:>4}  type",
            "key", "k", "edges", "cycle", "complete", "|B|", "|F|", "closed", "symmetric", "root"
        );
        let yn = |b: bool| if b { "yes" } else { "no" };
        for r in &self.records {
            let kind = match (&r.root_type, &r.failure_reason) {
                (Some(t), _) => t.to_string(),
                (None, Some(reason)) => reason.clone(),
                (None, None) => "-".into(),
            };
            let _ = writeln!(
                s,
                "{:<12} {:>2} {:>5} {:>5} {:>8} {:>4} {:>4} {:>6} {:>9} {:>4}  {}",
                r.canonical_key.to_string(),
                r.node_count,
                r.edge_count,
                yn(r.is_cycle),
                yn(r.is_complete),
                r.building_set_size,
                r.facet_vector_count,
                yn(r.complement_closed),
                yn(r.centrally_symmetric),
                yn(r.is_root_system),
                kind
            );
        }
        for c in &self.counts {
            let _ = writeln!(
                s,
                "k={}: {} graphs, {} root systems, {} centrally symmetric",
                c.node_count, c.graphs, c.root_systems, c.centrally_symmetric
            );
        }
        let _ = writeln!(s, "mode={} node_cap={}", self.mode, self.node_cap);
        let _ = writeln!(s, "theorem_holds={}", self.theorem_holds);
        let _ = writeln!(
            s,
            "symmetric_iff_cycle_or_complete={}",
            self.symmetric_iff_cycle_or_complete
        );
        let _ = writeln!(s, "closure_matches_symmetry={}", self.closure_matches_symmetry);
        let _ = writeln!(s, "counterexamples={}", self.counterexamples.len());
        for key in &self.counterexamples {
            let _ = writeln!(s, "  {key}");
        }
        s
    }
}

fn check_cap(node_cap: usize, min: usize, mode: EnumerationMode) -> Result<()> {
    let cap = match mode {
        EnumerationMode::Labeled => LABELED_CAP,
        EnumerationMode::UpToIso => UP_TO_ISO_CAP,
    };
    if node_cap > cap {
        return Err(Error::TooManyNodes {
            count: node_cap,
            cap,
        });
    }
    if node_cap < min {
        return Err(Error::Inconsistent(format!(
            "node cap {node_cap} below minimum {min}"
        )));
    }
    Ok(())
}

/// Runs `eval` over every connected graph on `min_nodes..=node_cap` nodes in
/// enumeration order, in parallel chunks.
fn for_each_graph<T, F>(min_nodes: usize, node_cap: usize, mode: EnumerationMode, eval: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&Graph) -> Result<T> + Sync,
{
    let mut out = Vec::new();
    for k in min_nodes..=node_cap {
        let mut graphs = enumerate_connected_graphs(k, mode)?;
        loop {
            let chunk: Vec<Graph> = graphs.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            let done = chunk.par_iter().map(&eval).collect::<Result<Vec<_>>>()?;
            out.extend(done);
        }
    }
    Ok(out)
}

/// [`verify_theorem`] with a caller-supplied evaluation, so a faulty
/// pipeline can be substituted.
pub fn verify_theorem_with<F>(node_cap: usize, mode: EnumerationMode, eval: F) -> Result<VerificationReport>
where
    F: Fn(&Graph) -> Result<Evaluation> + Sync,
{
    check_cap(node_cap, 3, mode)?;
    let evaluations = for_each_graph(3, node_cap, mode, eval)?;

    let mut counts: Vec<NodeCount> = (3..=node_cap)
        .map(|k| NodeCount {
            node_count: k,
            graphs: 0,
            root_systems: 0,
            centrally_symmetric: 0,
        })
        .collect();
    let mut records = Vec::with_capacity(evaluations.len());
    let mut counterexample_details = Vec::new();
    for e in evaluations {
        let r = &e.record;
        let c = &mut counts[r.node_count - 3];
        c.graphs += 1;
        c.root_systems += r.is_root_system as usize;
        c.centrally_symmetric += r.centrally_symmetric as usize;
        let failed = r.failed_checks();
        if !failed.is_empty() {
            counterexample_details.push(Counterexample {
                record: e.record.clone(),
                failed,
                building_set: e.building_set,
                facet_vectors: e.facet_vectors,
            });
        }
        records.push(e.record);
    }

    Ok(VerificationReport {
        node_cap,
        mode,
        counts,
        theorem_holds: records.iter().all(GraphRecord::root_system_iff_cycle),
        symmetric_iff_cycle_or_complete: records
            .iter()
            .all(GraphRecord::symmetric_iff_cycle_or_complete),
        closure_matches_symmetry: records.iter().all(GraphRecord::closure_matches_symmetry),
        counterexamples: counterexample_details
            .iter()
            .map(|c| c.record.canonical_key.clone())
            .collect(),
        counterexample_details,
        records,
    })
}

/// Checks, for every connected graph on `3..=node_cap` nodes, that the facet
/// vectors form a root system exactly for cycles (of type `A_{k-1}`) and are
/// centrally symmetric exactly for cycles and complete graphs.
pub fn verify_theorem(node_cap: usize, mode: EnumerationMode) -> Result<VerificationReport> {
    verify_theorem_with(node_cap, mode, evaluate)
}

/// Whether complement-closure of `B(G)` and central symmetry of `F(G)` agree
/// for every connected graph on `2..=node_cap` nodes.
pub fn cross_check_complement_symmetry(node_cap: usize, mode: EnumerationMode) -> Result<bool> {
    check_cap(node_cap, 2, mode)?;
    let agree = for_each_graph(2, node_cap, mode, |g| {
        let b = building_set(g)?;
        let f = b.facet_vectors()?;
        Ok(crate::buildset::complement_symmetry_agree(&b, &f))
    })?;
    Ok(agree.into_iter().all(|a| a))
}

/// `K_2`: its facet vectors `{e_1, -e_1}` form `A_1` although `K_2` is not a
/// cycle, which is why the equivalence is stated for three or more nodes.
pub fn two_node_edge_case() -> Result<GraphRecord> {
    Ok(evaluate(&complete_graph(2)?)?.record)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, path_graph, star_graph};

    #[test]
    fn structural_detection() {
        assert!(is_cycle_graph(&cycle_graph(5).unwrap()));
        assert!(!is_cycle_graph(&path_graph(5).unwrap()));
        assert!(!is_cycle_graph(&complete_graph(2).unwrap()));
        assert!(is_complete_graph(&complete_graph(5).unwrap()));
        assert!(!is_complete_graph(&star_graph(4).unwrap()));
        // two disjoint triangles: 2-regular, 6 edges, not a cycle
        let g = Graph::from_edges(6, &[(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)]).unwrap();
        assert!(!is_cycle_graph(&g));
    }

    #[test]
    fn cap3_report() {
        let rep = verify_theorem(3, EnumerationMode::UpToIso).unwrap();
        assert_eq!(rep.records.len(), 2);
        assert!(rep.theorem_holds && rep.symmetric_iff_cycle_or_complete);
        let tri = rep.records.iter().find(|r| r.is_cycle).unwrap();
        assert!(tri.is_complete && tri.is_root_system);
        assert_eq!(tri.root_type.as_ref().unwrap().to_string(), "A2");
        let path = rep.records.iter().find(|r| !r.is_cycle).unwrap();
        assert!(!path.centrally_symmetric);
        assert_eq!(path.failure_reason.as_deref(), Some("not-centrally-symmetric"));
    }

    #[test]
    fn cap4_report() {
        let rep = verify_theorem(4, EnumerationMode::UpToIso).unwrap();
        let k4: Vec<_> = rep.records.iter().filter(|r| r.node_count == 4).collect();
        assert_eq!(k4.len(), 6);
        assert_eq!(k4.iter().filter(|r| r.is_root_system).count(), 1);
        assert_eq!(k4.iter().filter(|r| r.centrally_symmetric).count(), 2);
        assert!(rep.all_hold());
        assert!(rep.counterexamples.is_empty());
    }

    #[test]
    fn caps_enforced() {
        assert!(verify_theorem(2, EnumerationMode::UpToIso).is_err());
        assert!(verify_theorem(8, EnumerationMode::UpToIso).is_err());
        assert!(verify_theorem(9, EnumerationMode::Labeled).is_err());
        assert!(cross_check_complement_symmetry(1, EnumerationMode::Labeled).is_err());
    }

    #[test]
    fn complement_symmetry_small() {
        assert!(cross_check_complement_symmetry(5, EnumerationMode::UpToIso).unwrap());
        assert!(cross_check_complement_symmetry(4, EnumerationMode::Labeled).unwrap());
    }

    #[test]
    fn two_nodes() {
        let r = two_node_edge_case().unwrap();
        assert!(r.is_root_system && !r.is_cycle);
        assert_eq!(r.root_type.unwrap().to_string(), "A1");
        assert_eq!(r.facet_vector_count, 2);
    }

    #[test]
    fn injected_fault_is_reported() {
        let rep = verify_theorem_with(4, EnumerationMode::UpToIso, |g| {
            let mut e = evaluate(g)?;
            if e.record.is_complete && g.node_count() == 4 {
                e.record.is_root_system = true;
            }
            Ok(e)
        })
        .unwrap();
        assert!(!rep.theorem_holds);
        assert_eq!(rep.counterexamples.len(), 1);
        assert_eq!(rep.counterexample_details[0].failed, vec!["root_system_iff_cycle"]);
        assert_eq!(rep.counterexample_details[0].facet_vectors.len(), 14);
    }
}
