//! Canonical codes for rooted and unrooted trees.
//!
//! A rooted code is the classic bottom-up encoding: a vertex's code is `(`,
//! its children's codes in sorted order, then `)`. The direction-aware flavor
//! prefixes each child code with `>` when the edge points away from the root
//! side and `<` when it points toward it. Unrooted trees are rooted at their
//! centroid (the smaller code wins when there are two centroids).

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Digraph, UndirectedGraph};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Undirected,
    Directed,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootedTreeCode {
    pub flavor: Flavor,
    pub code: String,
}

impl fmt::Display for RootedTreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}

/// Multiset of `(canonical component code, component order)`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ForestIsoKey(pub Vec<(String, usize)>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Arc {
    Plain,
    /// owner -> neighbour
    Out,
    /// neighbour -> owner
    In,
}

impl Arc {
    fn marker(self) -> &'static str {
        match self {
            Arc::Plain => "",
            Arc::Out => ">",
            Arc::In => "<",
        }
    }
}

/// Adjacency lists annotated with orientation markers.
#[derive(Clone, Debug)]
pub(crate) struct TreeAdj {
    pub adj: Vec<Vec<(usize, Arc)>>,
}

impl TreeAdj {
    pub fn undirected(g: &UndirectedGraph) -> Self {
        Self::from_edges(g.n(), g.edges(), false)
    }

    pub fn directed(d: &Digraph, flavor: Flavor) -> Self {
        Self::from_edges(d.n(), d.edges(), flavor == Flavor::Directed)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)], directed: bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            let (fwd, back) = if directed { (Arc::Out, Arc::In) } else { (Arc::Plain, Arc::Plain) };
            adj[u].push((v, fwd));
            adj[v].push((u, back));
        }
        TreeAdj { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }
}

fn same_edge(a: (usize, usize), u: usize, v: usize) -> bool {
    (a.0 == u && a.1 == v) || (a.0 == v && a.1 == u)
}

/// A component of an acyclic graph explored from a root, optionally with one
/// edge treated as deleted.
#[derive(Clone, Debug)]
pub(crate) struct Rooted {
    pub root: usize,
    /// BFS order; parents precede children.
    pub order: Vec<usize>,
    pub parent: Vec<usize>,
    pub children: Vec<Vec<(usize, Arc)>>,
    pub codes: Vec<String>,
}

impl Rooted {
    pub fn new(t: &TreeAdj, root: usize, blocked: Option<(usize, usize)>) -> Self {
        let n = t.n();
        let mut parent = vec![usize::MAX; n];
        let mut children = vec![Vec::new(); n];
        let mut order = vec![root];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &(w, arc) in &t.adj[u] {
                if seen[w] || blocked.is_some_and(|b| same_edge(b, u, w)) {
                    continue;
                }
                seen[w] = true;
                parent[w] = u;
                children[u].push((w, arc));
                order.push(w);
            }
        }
        let mut codes = vec![String::new(); n];
        for &u in order.iter().rev() {
            let mut parts: Vec<String> = children[u]
                .iter()
                .map(|&(c, arc)| format!("{}{}", arc.marker(), codes[c]))
                .collect();
            parts.sort_unstable();
            let mut code = String::with_capacity(2 + parts.iter().map(String::len).sum::<usize>());
            code.push('(');
            for p in parts {
                code.push_str(&p);
            }
            code.push(')');
            codes[u] = code;
        }
        Rooted { root, order, parent, children, codes }
    }

    pub fn root_code(&self) -> &str {
        &self.codes[self.root]
    }

    pub fn size(&self) -> usize {
        self.order.len()
    }

    /// Children of `u` sorted by their marked code.
    fn sorted_children(&self, u: usize) -> Vec<(String, usize)> {
        let mut v: Vec<_> = self.children[u]
            .iter()
            .map(|&(c, arc)| (format!("{}{}", arc.marker(), self.codes[c]), c))
            .collect();
        v.sort();
        v
    }

    /// Centroid vertices of the explored component (one or two).
    pub fn centroids(&self) -> Vec<usize> {
        let total = self.order.len();
        let mut size = vec![1usize; self.parent.len()];
        for &u in self.order.iter().rev() {
            if u != self.root {
                size[self.parent[u]] += size[u];
            }
        }
        let mut out: Vec<usize> = self
            .order
            .iter()
            .copied()
            .filter(|&u| {
                let above = total - size[u];
                self.children[u].iter().all(|&(c, _)| 2 * size[c] <= total) && 2 * above <= total
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// Writes into `map` a rooted isomorphism from `a` (rooted at `a.root`) onto
/// `b`. Codes must match.
pub(crate) fn map_rooted(a: &Rooted, b: &Rooted, map: &mut [usize]) {
    debug_assert_eq!(a.root_code(), b.root_code());
    let mut stack = vec![(a.root, b.root)];
    while let Some((x, y)) = stack.pop() {
        map[x] = y;
        let ca = a.sorted_children(x);
        let cb = b.sorted_children(y);
        debug_assert_eq!(ca.len(), cb.len());
        for ((_, cx), (_, cy)) in ca.into_iter().zip(cb) {
            stack.push((cx, cy));
        }
    }
}

/// Canonical unrooted code of the component containing `v`, with the
/// centroid it was rooted at.
pub(crate) fn canonical_component(t: &TreeAdj, v: usize) -> (Rooted, usize) {
    let probe = Rooted::new(t, v, None);
    probe
        .centroids()
        .into_iter()
        .map(|c| Rooted::new(t, c, None))
        .min_by(|x, y| x.root_code().cmp(y.root_code()).then(x.root.cmp(&y.root)))
        .map(|r| {
            let root = r.root;
            (r, root)
        })
        .expect("a component has a centroid")
}

fn key_of(t: &TreeAdj) -> ForestIsoKey {
    let n = t.n();
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for v in 0..n {
        if seen[v] {
            continue;
        }
        let (r, _) = canonical_component(t, v);
        for &u in &r.order {
            seen[u] = true;
        }
        parts.push((r.root_code().to_owned(), r.size()));
    }
    parts.sort_unstable();
    ForestIsoKey(parts)
}

/// Canonical code of `t` rooted at `root`.
pub fn rooted_code(t: &UndirectedGraph, root: usize) -> Result<RootedTreeCode> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    check_vertex(t.n(), root)?;
    let r = Rooted::new(&TreeAdj::undirected(t), root, None);
    Ok(RootedTreeCode { flavor: Flavor::Undirected, code: r.root_code().to_owned() })
}

/// Canonical code of a directed tree rooted at `root`, either ignoring or
/// recording edge directions.
pub fn rooted_code_directed(d: &Digraph, root: usize, flavor: Flavor) -> Result<RootedTreeCode> {
    if !d.underlying().is_tree() {
        return Err(Error::NotATree);
    }
    check_vertex(d.n(), root)?;
    let r = Rooted::new(&TreeAdj::directed(d, flavor), root, None);
    Ok(RootedTreeCode { flavor, code: r.root_code().to_owned() })
}

fn check_vertex(n: usize, v: usize) -> Result<()> {
    if v >= n {
        Err(Error::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

/// Isomorphism-invariant key of a forest: equal keys iff isomorphic.
pub fn forest_iso_key(g: &UndirectedGraph) -> Result<ForestIsoKey> {
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    Ok(key_of(&TreeAdj::undirected(g)))
}

/// Direction-aware key of a digraph whose underlying graph is a forest:
/// equal keys iff there is a direction-preserving isomorphism.
pub fn digraph_forest_key(d: &Digraph) -> Result<ForestIsoKey> {
    if !d.underlying().is_forest() {
        return Err(Error::NotAForest);
    }
    Ok(key_of(&TreeAdj::directed(d, Flavor::Directed)))
}

/// Whether a direction-preserving isomorphism of the trees `a` and `b`
/// carries `ra` to `rb`.
pub fn rooted_digraph_iso(a: &Digraph, ra: usize, b: &Digraph, rb: usize) -> Result<bool> {
    let ca = rooted_code_directed(a, ra, Flavor::Directed)?;
    let cb = rooted_code_directed(b, rb, Flavor::Directed)?;
    Ok(ca == cb)
}

/// An explicit isomorphism `V(a) -> V(b)` between two forests, if one exists.
pub fn forest_isomorphism(a: &UndirectedGraph, b: &UndirectedGraph) -> Result<Option<Vec<usize>>> {
    if !a.is_forest() || !b.is_forest() {
        return Err(Error::NotAForest);
    }
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    Ok(isomorphism_between(&TreeAdj::undirected(a), &TreeAdj::undirected(b)))
}

/// Direction-preserving variant of [`forest_isomorphism`].
pub fn digraph_forest_isomorphism(a: &Digraph, b: &Digraph) -> Result<Option<Vec<usize>>> {
    if !a.underlying().is_forest() || !b.underlying().is_forest() {
        return Err(Error::NotAForest);
    }
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    Ok(isomorphism_between(
        &TreeAdj::directed(a, Flavor::Directed),
        &TreeAdj::directed(b, Flavor::Directed),
    ))
}

fn canonical_components(t: &TreeAdj) -> Vec<Rooted> {
    let mut seen = vec![false; t.n()];
    let mut out = Vec::new();
    for v in 0..t.n() {
        if seen[v] {
            continue;
        }
        let (r, _) = canonical_component(t, v);
        for &u in &r.order {
            seen[u] = true;
        }
        out.push(r);
    }
    out.sort_by(|x, y| x.root_code().cmp(y.root_code()).then(x.root.cmp(&y.root)));
    out
}

fn isomorphism_between(a: &TreeAdj, b: &TreeAdj) -> Option<Vec<usize>> {
    let ca = canonical_components(a);
    let cb = canonical_components(b);
    if ca.len() != cb.len() || ca.iter().zip(&cb).any(|(x, y)| x.root_code() != y.root_code()) {
        return None;
    }
    let mut map = vec![usize::MAX; a.n()];
    for (x, y) in ca.iter().zip(&cb) {
        map_rooted(x, y, &mut map);
    }
    Some(map)
}
