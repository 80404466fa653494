//! Impartial digraphs: digraphs whose number of labeled copies is the same
//! in every tournament of a given order.
//!
//! The crate decides impartiality three ways (structural recognition, a
//! signed subgraph count, and tournament census), evaluates the closed-form
//! counts, and evaluates and probes densities over step tourneyons.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod graph;
pub mod impartiality;
pub mod structure;
pub mod tourneyon;

pub use error::{Error, Result};
pub use graph::{parse_digraph, parse_graph, Digraph, UndirectedGraph};
pub use impartiality::{census, is_impartial, sign_sum_check, CensusMode, CensusReport, Tournament, Verdict};
pub use tourneyon::{probe_extrema, t_density, StepTourneyon};
