//! Facet vectors of graph associahedra and their root-system structure.
//!
//! For a connected graph `G` on `k` nodes, [`buildset::building_set`] lists
//! the node sets inducing connected subgraphs and
//! [`buildset::facet_vectors`] turns them into the facet normals `F(G)` in
//! `Z^{k-1}`. [`rootsys`] decides whether such a set is a crystallographic
//! root system and names its Dynkin type; [`verify`] runs the whole pipeline
//! over every small connected graph.
//!
//! ```
//! use rootfan::{buildset::facet_vectors, graph::cycle_graph, rootsys::classify};
//!
//! let f = facet_vectors(&cycle_graph(5).unwrap()).unwrap();
//! let t = classify(&f).unwrap();
//! assert_eq!(t.root_type().unwrap().to_string(), "A4");
//! ```

pub mod buildset;
pub mod cli;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod rootsys;
pub mod vector;
pub mod verify;

pub use error::{Error, Result};
