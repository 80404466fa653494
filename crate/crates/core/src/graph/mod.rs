//! Digraphs, forests, canonical forms, automorphism signs and subgraph
//! enumeration.

pub mod canon;
pub mod linext;
pub mod sign;
pub mod subgraph;
pub mod text;
mod types;

pub use canon::{
    digraph_forest_isomorphism, digraph_forest_key, forest_isomorphism, forest_iso_key, rooted_code,
    rooted_code_directed, rooted_digraph_iso, Flavor, ForestIsoKey, RootedTreeCode,
};
pub use linext::count_linear_extensions;
pub use sign::{is_odd, sgn_between, sgn_map, Sign};
pub use subgraph::{enumerate_sub_f, sub_copies};
pub use text::{parse_any, parse_digraph, parse_graph, AnyGraph, ParseError};
pub use types::{components, is_forest, underlying, Digraph, UndirectedGraph};
