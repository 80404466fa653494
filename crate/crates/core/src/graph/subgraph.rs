use itertools::Itertools;

use super::canon::forest_iso_key;
use super::{Digraph, UndirectedGraph};
use crate::error::{Error, Result};

pub(crate) const MAX_HOST_EDGES: usize = 63;

fn sorted_degrees(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> Vec<usize> {
    let mut deg = vec![0usize; n];
    for (u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    deg.sort_unstable();
    deg
}

/// Edge masks (bit `i` = `host.edges()[i]`) of every spanning subgraph of
/// `host` isomorphic to `f`, in lexicographic order of the sorted edge-index
/// tuples.
pub fn sub_copies(host: &UndirectedGraph, f: &UndirectedGraph) -> Result<Vec<u64>> {
    if host.n() != f.n() {
        return Err(Error::VertexCountMismatch(host.n(), f.n()));
    }
    if !host.is_forest() || !f.is_forest() {
        return Err(Error::NotAForest);
    }
    if host.edge_count() > MAX_HOST_EDGES {
        return Err(Error::TooLarge { what: "host edge count", value: host.edge_count(), limit: MAX_HOST_EDGES });
    }
    let target = forest_iso_key(f)?;
    let target_deg = sorted_degrees(f.n(), f.edges().iter().copied());
    let edges = host.edges();
    let mut out = Vec::new();
    for combo in (0..edges.len()).combinations(f.edge_count()) {
        if sorted_degrees(host.n(), combo.iter().map(|&i| edges[i])) != target_deg {
            continue;
        }
        let mask = combo.iter().fold(0u64, |m, &i| m | 1 << i);
        let sub = host.spanning_subgraph(mask);
        if forest_iso_key(&sub)? == target {
            out.push(mask);
        }
    }
    Ok(out)
}

/// `Sub_F(h)`: every spanning subdigraph of `h` whose underlying graph is
/// isomorphic to `f`, with orientations inherited from `h`.
pub fn enumerate_sub_f(h: &Digraph, f: &UndirectedGraph) -> Result<Vec<Digraph>> {
    let host = h.underlying();
    let masks = sub_copies(&host, f)?;
    // h's sorted edge list and its underlying sorted list may be in different
    // orders, so map through the undirected edges explicitly.
    masks
        .into_iter()
        .map(|m| h.orient(&host.spanning_subgraph(m)))
        .collect()
}
