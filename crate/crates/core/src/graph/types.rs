use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A directed graph on the vertices `0..n` with no loops and at most one
/// orientation per vertex pair. Edges are kept sorted so that equality is
/// structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Digraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// A simple undirected graph on `0..n`. Each edge is stored as `(u, v)` with
/// `u < v`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawGraph> for Digraph {
    type Error = Error;
    fn try_from(raw: RawGraph) -> Result<Self> {
        Digraph::new(raw.n, raw.edges)
    }
}

impl From<Digraph> for RawGraph {
    fn from(d: Digraph) -> Self {
        RawGraph { n: d.n, edges: d.edges }
    }
}

impl TryFrom<RawGraph> for UndirectedGraph {
    type Error = Error;
    fn try_from(raw: RawGraph) -> Result<Self> {
        UndirectedGraph::new(raw.n, raw.edges)
    }
}

impl From<UndirectedGraph> for RawGraph {
    fn from(g: UndirectedGraph) -> Self {
        RawGraph { n: g.n, edges: g.edges }
    }
}

fn check_endpoints(n: usize, u: usize, v: usize) -> Result<()> {
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange { vertex: w, n });
        }
    }
    if u == v {
        return Err(Error::SelfLoop(u));
    }
    Ok(())
}

impl Digraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (u, v) in edges {
            check_endpoints(n, u, v)?;
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(if out.contains(&(u, v)) {
                    Error::DuplicateEdge(u, v)
                } else {
                    Error::AntiParallel(u, v)
                });
            }
            out.push((u, v));
        }
        out.sort_unstable();
        Ok(Digraph { n, edges: out })
    }

    pub fn empty(n: usize) -> Self {
        Digraph { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u, v)).is_ok()
    }

    /// Forgets orientations.
    pub fn underlying(&self) -> UndirectedGraph {
        let mut edges: Vec<_> = self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        UndirectedGraph { n: self.n, edges }
    }

    /// Every edge reversed.
    pub fn reversed(&self) -> Digraph {
        let mut edges: Vec<_> = self.edges.iter().map(|&(u, v)| (v, u)).collect();
        edges.sort_unstable();
        Digraph { n: self.n, edges }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        if perm.len() != self.n {
            return Err(Error::MapLength { expected: self.n, got: perm.len() });
        }
        Digraph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Digraph) -> Digraph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        edges.sort_unstable();
        Digraph { n: self.n + other.n, edges }
    }

    /// The subdigraph induced on `vertices`, relabelled to `0..k` in the
    /// order given.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        edges.sort_unstable();
        Digraph { n: vertices.len(), edges }
    }

    /// Spanning subdigraph keeping the edges whose index bit is set in `mask`.
    pub fn spanning_subgraph(&self, mask: u64) -> Digraph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Digraph { n: self.n, edges }
    }

    /// The orientation of the undirected pair `{u, v}`, if it is an edge.
    pub fn orientation(&self, u: usize, v: usize) -> Option<(usize, usize)> {
        if self.has_edge(u, v) {
            Some((u, v))
        } else if self.has_edge(v, u) {
            Some((v, u))
        } else {
            None
        }
    }

    /// Inherits orientations from `self` onto the edges of `g`.
    pub fn orient(&self, g: &UndirectedGraph) -> Result<Digraph> {
        let mut edges = Vec::with_capacity(g.edge_count());
        for &(u, v) in g.edges() {
            edges.push(self.orientation(u, v).ok_or(Error::NotASubgraph)?);
        }
        edges.sort_unstable();
        Ok(Digraph { n: g.n(), edges })
    }

    pub fn out_neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
        }
        adj
    }
}

impl UndirectedGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = BTreeSet::new();
        for (u, v) in edges {
            check_endpoints(n, u, v)?;
            if !out.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        Ok(UndirectedGraph { n, edges: out.into_iter().collect() })
    }

    pub fn empty(n: usize) -> Self {
        UndirectedGraph { n, edges: Vec::new() }
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        UndirectedGraph { n, edges: (1..n).map(|v| (v - 1, v)).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Position of `{u, v}` in the sorted edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Connected components, each sorted, listed by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_forest(&self) -> bool {
        // acyclic iff |E| = |V| - #components
        self.edges.len() + self.components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n && self.components().len() == 1
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<UndirectedGraph> {
        let i = self.edge_index(u, v).ok_or(Error::NotAnEdge(u, v))?;
        let mut edges = self.edges.clone();
        edges.remove(i);
        Ok(UndirectedGraph { n: self.n, edges })
    }

    pub fn without_edges(&self, removed: &[(usize, usize)]) -> UndirectedGraph {
        let removed: BTreeSet<_> = removed.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let edges = self.edges.iter().copied().filter(|e| !removed.contains(e)).collect();
        UndirectedGraph { n: self.n, edges }
    }

    /// Spanning subgraph keeping the edges whose index bit is set in `mask`.
    pub fn spanning_subgraph(&self, mask: u64) -> UndirectedGraph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        UndirectedGraph { n: self.n, edges }
    }

    /// Bitmask of the edges of `sub` inside `self`'s edge list.
    pub fn edge_mask(&self, sub: &UndirectedGraph) -> Result<u64> {
        if self.edges.len() > 64 {
            return Err(Error::TooLarge { what: "edge count", value: self.edges.len(), limit: 64 });
        }
        let mut mask = 0u64;
        for &(u, v) in sub.edges() {
            mask |= 1 << self.edge_index(u, v).ok_or(Error::NotASubgraph)?;
        }
        Ok(mask)
    }

    pub fn is_subgraph_of(&self, host: &UndirectedGraph) -> bool {
        self.n == host.n && self.edges.iter().all(|&(u, v)| host.has_edge(u, v))
    }

    pub fn induced(&self, vertices: &[usize]) -> UndirectedGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u].min(index[v]), index[u].max(index[v])))
            .collect();
        edges.sort_unstable();
        UndirectedGraph { n: vertices.len(), edges }
    }

    /// Orients every edge from the smaller to the larger endpoint.
    pub fn to_digraph(&self) -> Digraph {
        Digraph { n: self.n, edges: self.edges.clone() }
    }
}

/// Free-function form of [`Digraph::underlying`].
pub fn underlying(d: &Digraph) -> UndirectedGraph {
    d.underlying()
}

/// Free-function form of [`UndirectedGraph::components`].
pub fn components(g: &UndirectedGraph) -> Vec<Vec<usize>> {
    g.components()
}

pub fn is_forest(g: &UndirectedGraph) -> bool {
    g.is_forest()
}
