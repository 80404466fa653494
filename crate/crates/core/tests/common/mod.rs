//! Brute-force oracles. They use only graph constructors and accessors from
//! the library, never its algorithms.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use impartial::graph::{parse_any, AnyGraph};
use impartial::{Digraph, Tournament, UndirectedGraph};
pub mod checks;

use itertools::Itertools;
use proptest::prelude::*;
use proptest::sample::Index;

pub fn corpus_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

pub fn corpus(name: &str) -> AnyGraph {
    let text = std::fs::read_to_string(corpus_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    parse_any(&text).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn corpus_digraph(name: &str) -> Digraph {
    match corpus(name) {
        AnyGraph::Directed(d) => d,
        AnyGraph::Undirected(g) => g.to_digraph(),
    }
}

pub fn corpus_graph(name: &str) -> UndirectedGraph {
    corpus(name).underlying()
}

pub fn dg(n: usize, e: &[(usize, usize)]) -> Digraph {
    Digraph::new(n, e.iter().copied()).unwrap()
}

pub fn ug(n: usize, e: &[(usize, usize)]) -> UndirectedGraph {
    UndirectedGraph::new(n, e.iter().copied()).unwrap()
}

fn find(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

pub fn acyclic_undirected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut p: Vec<usize> = (0..n).collect();
    for &(u, v) in edges {
        let (a, b) = (find(&mut p, u), find(&mut p, v));
        if a == b {
            return false;
        }
        p[a] = b;
    }
    true
}

/// Every labeled forest on `n` vertices.
pub fn labeled_forests(n: usize) -> Vec<UndirectedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut out = Vec::new();
    for k in 0..n.max(1) {
        for sub in pairs.iter().copied().combinations(k) {
            if acyclic_undirected(n, &sub) {
                out.push(UndirectedGraph::new(n, sub).unwrap());
            }
        }
    }
    out
}

/// Every labeled tree on `n >= 2` vertices, decoded from Prüfer sequences.
pub fn labeled_trees(n: usize) -> Vec<UndirectedGraph> {
    if n == 1 {
        return vec![UndirectedGraph::empty(1)];
    }
    if n == 2 {
        return vec![ug(2, &[(0, 1)])];
    }
    (0..n - 2)
        .map(|_| 0..n)
        .multi_cartesian_product()
        .map(|seq| {
            let mut degree = vec![1usize; n];
            for &x in &seq {
                degree[x] += 1;
            }
            let mut edges = Vec::with_capacity(n - 1);
            for &x in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push((leaf.min(x), leaf.max(x)));
                degree[leaf] -= 1;
                degree[x] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            UndirectedGraph::new(n, edges).unwrap()
        })
        .collect()
}

/// All `2^|E|` orientations of `g`, bit `i` reversing edge `i`.
pub fn orientations(g: &UndirectedGraph) -> Vec<Digraph> {
    let e = g.edges();
    (0..1u64 << e.len())
        .map(|mask| {
            Digraph::new(
                g.n(),
                e.iter().enumerate().map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) }),
            )
            .unwrap()
        })
        .collect()
}

/// Lexicographically least relabeled edge list over all permutations.
pub fn brute_canon_directed(d: &Digraph) -> Vec<(usize, usize)> {
    (0..d.n())
        .permutations(d.n())
        .map(|p| {
            let mut e: Vec<_> = d.edges().iter().map(|&(u, v)| (p[u], p[v])).collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap_or_default()
}

pub fn brute_canon_undirected(g: &UndirectedGraph) -> Vec<(usize, usize)> {
    (0..g.n())
        .permutations(g.n())
        .map(|p| {
            let mut e: Vec<_> = g.edges().iter().map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v]))).collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap_or_default()
}

/// Every automorphism of an undirected graph.
pub fn automorphisms(g: &UndirectedGraph) -> Vec<Vec<usize>> {
    let edges: BTreeSet<(usize, usize)> = g.edges().iter().copied().collect();
    (0..g.n())
        .permutations(g.n())
        .filter(|p| g.edges().iter().all(|&(u, v)| edges.contains(&(p[u].min(p[v]), p[u].max(p[v])))))
        .collect()
}

/// Edges `(u, v)` with `u < v` that `p` maps to `(x, y)` with `x > y`.
pub fn reversed_edges(g: &UndirectedGraph, p: &[usize]) -> usize {
    g.edges().iter().filter(|&&(u, v)| p[u] > p[v]).count()
}

pub fn brute_is_odd(g: &UndirectedGraph) -> bool {
    automorphisms(g).iter().any(|p| reversed_edges(g, p) % 2 == 1)
}

/// Edges whose endpoints some automorphism swaps.
pub fn brute_mirror_bridges(g: &UndirectedGraph) -> Vec<(usize, usize)> {
    let autos = automorphisms(g);
    g.edges().iter().copied().filter(|&(u, v)| autos.iter().any(|p| p[u] == v && p[v] == u)).collect()
}

pub fn brute_linear_extensions(d: &Digraph) -> u128 {
    (0..d.n())
        .permutations(d.n())
        .filter(|order| {
            let mut pos = vec![0; d.n()];
            for (i, &v) in order.iter().enumerate() {
                pos[v] = i;
            }
            d.edges().iter().all(|&(u, v)| pos[u] < pos[v])
        })
        .count() as u128
}

/// Injective direction-preserving maps, enumerated exhaustively.
pub fn brute_embeddings(h: &Digraph, k: &Tournament) -> u128 {
    (0..k.n())
        .permutations(h.n())
        .filter(|m| h.edges().iter().all(|&(u, v)| k.beats(m[u], m[v])))
        .count() as u128
}

/// Spanning subgraphs of `host` isomorphic to `f`, as sorted edge lists.
pub fn brute_sub_copies(host: &UndirectedGraph, f: &UndirectedGraph) -> Vec<Vec<(usize, usize)>> {
    let target = brute_canon_undirected(f);
    host.edges()
        .iter()
        .copied()
        .combinations(f.edge_count())
        .filter(|sub| brute_canon_undirected(&UndirectedGraph::new(host.n(), sub.iter().copied()).unwrap()) == target)
        .collect()
}

/// `Σ_π Π a_π(v) Π (1 + b_π(u)π(v))`, by direct enumeration in `f64`.
pub fn brute_p(h: &Digraph, a: &[f64], b: &[Vec<f64>]) -> f64 {
    if h.n() == 0 {
        return 1.0;
    }
    (0..h.n())
        .map(|_| 0..a.len())
        .multi_cartesian_product()
        .map(|pi| {
            pi.iter().map(|&i| a[i]).product::<f64>()
                * h.edges().iter().map(|&(u, v)| 1.0 + b[pi[u]][pi[v]]).product::<f64>()
        })
        .sum::<f64>()
}

/// Whether the orientation of each edge agrees with `h` after mapping.
pub fn is_digraph_automorphism(h: &Digraph, p: &[usize]) -> bool {
    h.edges().iter().all(|&(u, v)| h.has_edge(p[u], p[v]))
}

/// A random labeled forest on `n` vertices: vertex `v > 0` attaches to an
/// earlier vertex (always, for trees) or starts a new tree, then labels are
/// shuffled.
pub fn forest_of(n: usize, tree: bool) -> impl Strategy<Value = UndirectedGraph> {
    (
        proptest::collection::vec((any::<Index>(), any::<bool>()), n.saturating_sub(1)),
        Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
    )
        .prop_map(move |(parents, perm)| {
            let edges = parents.iter().enumerate().filter(|(_, (_, keep))| tree || *keep).map(|(i, (p, _))| {
                let v = i + 1;
                let u = p.index(v);
                (perm[u].min(perm[v]), perm[u].max(perm[v]))
            });
            UndirectedGraph::new(n, edges).unwrap()
        })
}

pub fn forest(max_n: usize, tree: bool) -> impl Strategy<Value = UndirectedGraph> {
    (1..=max_n).prop_flat_map(move |n| forest_of(n, tree))
}

pub fn orient_randomly(g: UndirectedGraph) -> impl Strategy<Value = Digraph> {
    let m = g.edge_count();
    proptest::collection::vec(any::<bool>(), m).prop_map(move |flips| {
        Digraph::new(g.n(), g.edges().iter().zip(&flips).map(|(&(u, v), &f)| if f { (v, u) } else { (u, v) })).unwrap()
    })
}

pub fn oriented(max_n: usize) -> impl Strategy<Value = Digraph> {
    forest(max_n, false).prop_flat_map(orient_randomly)
}

pub fn oriented_of(n: usize) -> impl Strategy<Value = Digraph> {
    forest_of(n, false).prop_flat_map(orient_randomly)
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
