//! Checks of structural facts about recursively bridge-mirrored trees.
//! Each returns a description of the first violation.

use std::collections::BTreeMap;

use impartial::graph::{forest_iso_key, is_odd, sub_copies, ForestIsoKey};
use impartial::structure::{branch, cut_minus_edge, mirror_bridge, odd_automorphism, recursive_cutting, s_set};
use impartial::UndirectedGraph;
use itertools::Itertools;

type Edge = (usize, usize);

fn norm((u, v): Edge) -> Edge {
    (u.min(v), u.max(v))
}

fn image(tau: &[usize], (u, v): Edge) -> Edge {
    norm((tau[u], tau[v]))
}

/// Every stage of the cut trace whose components share one order has a
/// single copy in the tree.
pub fn unique_cut(t: &UndirectedGraph) -> Result<(), String> {
    let trace = recursive_cutting(t).map_err(|e| e.to_string())?;
    for (i, stage) in trace.stages.iter().enumerate() {
        let orders: Vec<usize> = stage.components().iter().map(Vec::len).dedup().collect();
        if orders.len() != 1 {
            continue;
        }
        let copies = sub_copies(t, stage).map_err(|e| e.to_string())?.len();
        if copies != 1 {
            return Err(format!("stage {i} has {copies} copies in {t:?}"));
        }
    }
    Ok(())
}

/// For every non-bridge edge `f`: `f, τf ∈ S_{T_f}`, every other member `e`
/// has more edges in `T_e`, and `S_{T_f}` is closed under `τ`.
pub fn triangular_and_symmetric(t: &UndirectedGraph) -> Result<(), String> {
    if t.edge_count() == 0 {
        return Ok(());
    }
    let bridge = mirror_bridge(t).map_err(|e| e.to_string())?.ok_or("no mirror-bridge")?;
    let tau = odd_automorphism(t).map_err(|e| e.to_string())?;
    let mut te_edges = BTreeMap::new();
    for &e in t.edges() {
        te_edges.insert(e, cut_minus_edge(t, e).map_err(|x| x.to_string())?.edge_count());
    }
    for &f in t.edges().iter().filter(|&&f| f != bridge) {
        let tf = cut_minus_edge(t, f).map_err(|e| e.to_string())?;
        let s = s_set(t, &tf).map_err(|e| format!("S for {f:?}: {e}"))?;
        let tf_img = image(&tau, f);
        if !s.contains(&f) || !s.contains(&tf_img) {
            return Err(format!("{f:?} or its image {tf_img:?} missing from S = {s:?} in {t:?}"));
        }
        for &e in s.iter().filter(|&&e| e != f && e != tf_img) {
            if te_edges[&e] <= te_edges[&f] {
                return Err(format!("{e:?} in S for {f:?} but T_e is not larger, in {t:?}"));
            }
        }
        let mut mapped: Vec<Edge> = s.iter().map(|&e| image(&tau, e)).collect();
        mapped.sort_unstable();
        if mapped != s {
            return Err(format!("S for {f:?} not closed under the odd automorphism in {t:?}"));
        }
    }
    Ok(())
}

/// Copy counts of every isomorphism class of spanning subgraph.
pub fn class_counts(g: &UndirectedGraph) -> BTreeMap<ForestIsoKey, (u64, UndirectedGraph)> {
    let m = g.edge_count();
    let mut out: BTreeMap<ForestIsoKey, (u64, UndirectedGraph)> = BTreeMap::new();
    for mask in 0..1u64 << m {
        let sub = g.spanning_subgraph(mask);
        out.entry(forest_iso_key(&sub).unwrap()).or_insert((0, sub)).0 += 1;
    }
    out
}

/// `|Sub_F(G)| ≡ |Sub_F(G_rc)| (mod 2)` for every even `F` that occurs in
/// `G` (classes absent from `G` have zero copies in both).
pub fn parity(g: &UndirectedGraph) -> Result<(), String> {
    let rc = recursive_cutting(g).map_err(|e| e.to_string())?.result().clone();
    let in_rc = class_counts(&rc);
    for (key, (count, sample)) in class_counts(g) {
        if is_odd(&sample).unwrap() {
            continue;
        }
        let c_rc = in_rc.get(&key).map_or(0, |x| x.0);
        if count % 2 != c_rc % 2 {
            return Err(format!("class of {sample:?}: {count} copies in G, {c_rc} in G_rc, G = {g:?}"));
        }
    }
    Ok(())
}

/// Distinct edges with isomorphic `T_e` are swapped by the odd
/// automorphism. Returns the number of flagged pairs that involve the
/// mirror-bridge and deviate.
pub fn cut_isomorphism_forces_symmetry(t: &UndirectedGraph) -> Result<usize, String> {
    if t.edge_count() == 0 {
        return Ok(0);
    }
    let bridge = mirror_bridge(t).map_err(|e| e.to_string())?.ok_or("no mirror-bridge")?;
    let tau = odd_automorphism(t).map_err(|e| e.to_string())?;
    let keys: Vec<(Edge, ForestIsoKey)> = t
        .edges()
        .iter()
        .map(|&e| (e, forest_iso_key(&cut_minus_edge(t, e).unwrap()).unwrap()))
        .collect();
    let mut flagged = 0;
    for ((e1, k1), (e2, k2)) in keys.iter().tuple_combinations() {
        if k1 != k2 || image(&tau, *e1) == *e2 {
            continue;
        }
        if *e1 == bridge || *e2 == bridge {
            flagged += 1;
        } else {
            return Err(format!("T_e isomorphic for {e1:?} and {e2:?} but not swapped, in {t:?}"));
        }
    }
    Ok(flagged)
}

/// Edges removed at stage `i` (1-based) of a tree on `2^k` vertices cut
/// branches whose orders have 2-adic part exactly `2^(k-i)`.
pub fn power_of_two_branches(t: &UndirectedGraph) -> Result<(), String> {
    let k = t.n().trailing_zeros() as usize;
    let trace = recursive_cutting(t).map_err(|e| e.to_string())?;
    for (i, removed) in trace.removed.iter().enumerate() {
        for &(u, v) in removed {
            for (x, y) in [(u, v), (v, u)] {
                let order = branch(t, x, y).map_err(|e| e.to_string())?.order();
                if order.trailing_zeros() as usize != k - (i + 1) {
                    return Err(format!("branch cut from {x} {y} at stage {} has order {order} in {t:?}", i + 1));
                }
            }
        }
    }
    Ok(())
}

/// All the checks above; returns the flagged-pair count.
pub fn all(t: &UndirectedGraph) -> Result<usize, String> {
    unique_cut(t)?;
    triangular_and_symmetric(t)?;
    parity(t)?;
    power_of_two_branches(t)?;
    cut_isomorphism_forces_symmetry(t)
}
