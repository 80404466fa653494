use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::canon::{Rooted, TreeAdj};
use crate::graph::UndirectedGraph;

/// Result of repeatedly stripping every leaf from a tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Center {
    Vertex(usize),
    Edge(usize, usize),
}

/// Leaf-strip center of the component of `t` containing `v`.
pub(crate) fn strip_center(t: &TreeAdj, v: usize) -> Center {
    let comp = Rooted::new(t, v, None).order;
    let mut deg = vec![0usize; t.n()];
    for &u in &comp {
        deg[u] = t.adj[u].len();
    }
    let mut alive = vec![false; t.n()];
    for &u in &comp {
        alive[u] = true;
    }
    let mut remaining = comp.len();
    let mut layer: Vec<usize> = comp.iter().copied().filter(|&u| deg[u] <= 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &leaf in &layer {
            alive[leaf] = false;
            remaining -= 1;
        }
        for &leaf in &layer {
            for &(w, _) in &t.adj[leaf] {
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let rest: Vec<usize> = comp.into_iter().filter(|&u| alive[u]).collect();
    match rest[..] {
        [x] => Center::Vertex(x),
        [x, y] => Center::Edge(x.min(y), x.max(y)),
        _ => unreachable!("leaf stripping leaves one or two vertices"),
    }
}

/// Mirror-bridge of the component containing `v`, if any. Only the
/// leaf-strip center edge can be one; it is one exactly when the two sides
/// have equal rooted codes.
pub(crate) fn component_mirror_bridge(t: &TreeAdj, v: usize) -> Option<(usize, usize)> {
    match strip_center(t, v) {
        Center::Vertex(_) => None,
        Center::Edge(x, y) => {
            let a = Rooted::new(t, x, Some((x, y)));
            let b = Rooted::new(t, y, Some((x, y)));
            (a.root_code() == b.root_code()).then_some((x, y))
        }
    }
}

/// The edge of the tree whose endpoint swap extends to an automorphism, if
/// there is one.
pub fn mirror_bridge(t: &UndirectedGraph) -> Result<Option<(usize, usize)>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(component_mirror_bridge(&TreeAdj::undirected(t), 0))
}

/// The component of `T - uv` containing `v`, rooted at `v`. Vertices and
/// edges keep their labels from `T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub root: usize,
    pub cut_edge: (usize, usize),
}

impl Branch {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// The branch as a standalone tree on `0..order`, with its root's new
    /// label.
    pub fn to_graph(&self) -> (UndirectedGraph, usize) {
        let index = |x: usize| self.vertices.binary_search(&x).expect("edge endpoint in branch");
        let g = UndirectedGraph::new(self.order(), self.edges.iter().map(|&(a, b)| (index(a), index(b))))
            .expect("branch edges are simple");
        (g, index(self.root))
    }
}

/// Branch of `t` cut from `uv`. `t` may be any forest; the branch lives in
/// the component of `v`.
pub fn branch(t: &UndirectedGraph, u: usize, v: usize) -> Result<Branch> {
    if !t.is_forest() {
        return Err(Error::NotAForest);
    }
    if !t.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    let r = Rooted::new(&TreeAdj::undirected(t), v, Some((u, v)));
    let mut vertices = r.order.clone();
    vertices.sort_unstable();
    let mut edges: Vec<_> = r
        .order
        .iter()
        .filter(|&&x| x != v)
        .map(|&x| (x.min(r.parent[x]), x.max(r.parent[x])))
        .collect();
    edges.sort_unstable();
    Ok(Branch { vertices, edges, root: v, cut_edge: (u, v) })
}

/// The two components left by deleting the mirror-bridge, rooted at its
/// endpoints (smaller endpoint first).
pub fn half_branches(t: &UndirectedGraph) -> Result<(Branch, Branch)> {
    let (x, y) = mirror_bridge(t)?.ok_or(Error::NoMirrorBridge)?;
    Ok((branch(t, y, x)?, branch(t, x, y)?))
}

/// `m(G, F)`: for each edge `e` of `f_sub`, the order of the smallest
/// component of `g - e`. Sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinMultiset(pub Vec<usize>);

pub fn min_multiset(g: &UndirectedGraph, f_sub: &UndirectedGraph) -> Result<MinMultiset> {
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    if !f_sub.is_subgraph_of(g) {
        return Err(Error::NotASubgraph);
    }
    let mut out: Vec<usize> = f_sub
        .edges()
        .iter()
        .map(|&(u, v)| {
            let cut = g.without_edge(u, v).expect("edge of g");
            cut.components().iter().map(Vec::len).min().expect("nonempty graph")
        })
        .collect();
    out.sort_unstable();
    Ok(MinMultiset(out))
}
