use std::collections::BTreeMap;

use super::branches::{strip_center, Center};
use super::cutting::recursive_cutting;
use crate::error::{Error, Result};
use crate::graph::canon::{map_rooted, Rooted, TreeAdj};
use crate::graph::{digraph_forest_key, forest_iso_key, Digraph, Flavor, UndirectedGraph};

/// Largest doubling depth accepted by the generators (trees on 16 vertices).
pub const MAX_RBM_DEPTH: u32 = 4;

/// Whether `d` is recursively bridge-mirrored: a single vertex, or two
/// direction-isomorphic rooted copies of a recursively bridge-mirrored digraph
/// joined root to root.
pub fn is_rbm(d: &Digraph) -> bool {
    if d.n() == 1 {
        return true;
    }
    if !d.underlying().is_tree() {
        return false;
    }
    let t = TreeAdj::directed(d, Flavor::Directed);
    let Center::Edge(x, y) = strip_center(&t, 0) else {
        return false;
    };
    let a = Rooted::new(&t, x, Some((x, y)));
    let b = Rooted::new(&t, y, Some((x, y)));
    if a.root_code() != b.root_code() {
        return false;
    }
    let mut half = a.order.clone();
    half.sort_unstable();
    is_rbm(&d.induced(&half))
}

/// Whether the undirected tree `t` is recursively bridge-mirrored, i.e.
/// recursive cutting ends edgeless.
pub fn is_rbm_undirected(t: &UndirectedGraph) -> bool {
    t.is_tree() && recursive_cutting(t).is_ok_and(|trace| trace.result().edge_count() == 0)
}

/// The non-identity automorphism of an undirected recursively
/// bridge-mirrored tree: it swaps the two half-branches and reverses the
/// mirror-bridge.
pub fn odd_automorphism(t: &UndirectedGraph) -> Result<Vec<usize>> {
    if !is_rbm_undirected(t) {
        return Err(Error::NotRbm);
    }
    if t.n() < 2 {
        return Err(Error::InvalidArgument("a single vertex has no odd automorphism".into()));
    }
    let adj = TreeAdj::undirected(t);
    let Center::Edge(x, y) = strip_center(&adj, 0) else {
        return Err(Error::NoMirrorBridge);
    };
    let a = Rooted::new(&adj, x, Some((x, y)));
    let b = Rooted::new(&adj, y, Some((x, y)));
    let mut map = vec![usize::MAX; t.n()];
    map_rooted(&a, &b, &mut map);
    map_rooted(&b, &a, &mut map);
    Ok(map)
}

fn double(d: &Digraph, root: usize) -> Digraph {
    let m = d.n();
    let edges = d
        .edges()
        .iter()
        .copied()
        .chain(d.edges().iter().map(|&(u, v)| (u + m, v + m)))
        .chain(std::iter::once((root, root + m)));
    Digraph::new(2 * m, edges).expect("doubling a tree gives a tree")
}

fn generate(k: u32, flavor: Flavor) -> Result<Vec<Digraph>> {
    if k > MAX_RBM_DEPTH {
        return Err(Error::TooLarge { what: "doubling depth", value: k as usize, limit: MAX_RBM_DEPTH as usize });
    }
    let key = |d: &Digraph| match flavor {
        Flavor::Directed => digraph_forest_key(d),
        Flavor::Undirected => forest_iso_key(&d.underlying()),
    };
    let mut level = vec![Digraph::empty(1)];
    for _ in 0..k {
        let mut next = BTreeMap::new();
        for d in &level {
            let t = TreeAdj::directed(d, flavor);
            // one root per orbit: rooted codes coincide exactly on orbits
            let mut roots = BTreeMap::new();
            for r in 0..d.n() {
                roots.entry(Rooted::new(&t, r, None).root_code().to_owned()).or_insert(r);
            }
            for &r in roots.values() {
                let doubled = double(d, r);
                next.entry(key(&doubled)?).or_insert(doubled);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// All recursively bridge-mirrored digraphs on `2^k` vertices, one per
/// direction-preserving isomorphism class, ordered by canonical key.
pub fn generate_rbm(k: u32) -> Result<Vec<Digraph>> {
    generate(k, Flavor::Directed)
}

/// All undirected recursively bridge-mirrored trees on `2^k` vertices up to
/// isomorphism.
pub fn generate_rbm_undirected(k: u32) -> Result<Vec<UndirectedGraph>> {
    Ok(generate(k, Flavor::Undirected)?.iter().map(Digraph::underlying).collect())
}
