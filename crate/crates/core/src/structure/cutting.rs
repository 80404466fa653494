use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::branches::component_mirror_bridge;
use crate::error::{Error, Result};
use crate::graph::canon::TreeAdj;
use crate::graph::{is_odd, sub_copies, Digraph, UndirectedGraph};

/// Stages of recursive cutting. `removed[i]` holds the mirror-bridges
/// deleted from `stages[i]` to obtain `stages[i + 1]`, sorted; the final
/// stage is even and its list is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutTrace {
    pub stages: Vec<UndirectedGraph>,
    pub removed: Vec<Vec<(usize, usize)>>,
}

impl CutTrace {
    /// The even fixpoint `F_rc`.
    pub fn result(&self) -> &UndirectedGraph {
        self.stages.last().expect("a trace has at least one stage")
    }

    /// One block per stage in the edge-list text format, separated by `---`,
    /// each followed by a `removed:` line. With `orientation`, stages and
    /// removed edges are printed with directions inherited from it.
    pub fn to_text(&self, orientation: Option<&Digraph>) -> Result<String> {
        let mut out = String::new();
        for (i, (stage, removed)) in self.stages.iter().zip(&self.removed).enumerate() {
            if i > 0 {
                out.push_str("---\n");
            }
            let removed: Vec<(usize, usize)> = match orientation {
                Some(d) => {
                    out.push_str(&d.orient(stage)?.to_text());
                    removed
                        .iter()
                        .map(|&(u, v)| d.orientation(u, v).ok_or(Error::NotASubgraph))
                        .collect::<Result<_>>()?
                }
                None => {
                    out.push_str(&stage.to_text());
                    removed.clone()
                }
            };
            out.push_str("removed:");
            for (j, (u, v)) in removed.iter().enumerate() {
                let _ = write!(out, "{} {u} {v}", if j == 0 { "" } else { "," });
            }
            out.push('\n');
        }
        Ok(out)
    }
}

fn odd_component_bridges(g: &UndirectedGraph) -> Vec<(usize, usize)> {
    let t = TreeAdj::undirected(g);
    let mut out: Vec<_> = g
        .components()
        .iter()
        .filter_map(|c| component_mirror_bridge(&t, c[0]))
        .collect();
    out.sort_unstable();
    out
}

/// Repeatedly deletes the mirror-bridge of every odd component until the
/// forest is even.
pub fn recursive_cutting(f: &UndirectedGraph) -> Result<CutTrace> {
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    let mut stages = vec![f.clone()];
    let mut removed = Vec::new();
    loop {
        let current = stages.last().expect("nonempty");
        let bridges = odd_component_bridges(current);
        if bridges.is_empty() {
            removed.push(Vec::new());
            break;
        }
        let next = current.without_edges(&bridges);
        removed.push(bridges);
        stages.push(next);
    }
    Ok(CutTrace { stages, removed })
}

/// `T_f`: delete `f` from the tree (keeping its vertices), then cut
/// recursively.
pub fn cut_minus_edge(t: &UndirectedGraph, f: (usize, usize)) -> Result<UndirectedGraph> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let rest = t.without_edge(f.0, f.1)?;
    Ok(recursive_cutting(&rest)?.result().clone())
}

/// `S_F`: edges of `t` that lie in an odd number of spanning subgraphs of `t`
/// isomorphic to `f_sub`. Equivalently, edges `e` with
/// `|Sub_F(t)| - |Sub_F(t - e)|` odd.
pub fn s_set(t: &UndirectedGraph, f_sub: &UndirectedGraph) -> Result<Vec<(usize, usize)>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if t.n() != f_sub.n() {
        return Err(Error::VertexCountMismatch(t.n(), f_sub.n()));
    }
    if f_sub.edge_count() == 0 {
        return Err(Error::EdgelessPattern);
    }
    if is_odd(f_sub)? {
        return Err(Error::OddPattern);
    }
    let copies = sub_copies(t, f_sub)?;
    Ok(t.edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| copies.iter().filter(|&&m| m >> i & 1 == 1).count() % 2 == 1)
        .map(|(_, &e)| e)
        .collect())
}
