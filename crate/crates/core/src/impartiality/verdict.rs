use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::census::{find_disagreement, CensusMode, DEFAULT_SAMPLES, DEFAULT_SEED};
use super::tournament::Tournament;
use crate::error::{Error, Result};
use crate::graph::{forest_iso_key, is_odd, sgn_between, Digraph, ForestIsoKey};
use crate::structure::is_rbm;

/// Sign-sum enumeration visits every edge subset of the host forest.
pub const MAX_SIGNSUM_EDGES: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Structural,
    SignSum,
    Census,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Structural => "structural",
            Route::SignSum => "signsum",
            Route::Census => "census",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The underlying graph has a cycle.
    NotAForest,
    /// A weakly connected component whose order is not a power of 2.
    ComponentOrder { vertices: Vec<usize> },
    /// A component that is not recursively bridge-mirrored.
    NonRbmComponent { vertices: Vec<usize> },
    /// An even spanning subdigraph whose signed copy count is nonzero.
    SignSum { f: Digraph, sum: i64 },
    /// Two tournaments on the same vertex set with different copy counts.
    Census { first: Tournament, first_count: u128, second: Tournament, second_count: u128 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub impartial: bool,
    pub route: Route,
    pub witness: Option<Witness>,
}

fn edges_json(d: &Digraph) -> Value {
    d.edges().iter().map(|&(u, v)| json!([u, v])).collect()
}

fn count_json(c: u128) -> Value {
    if c < 1u128 << 53 {
        json!(c as u64)
    } else {
        Value::String(c.to_string())
    }
}

impl Witness {
    pub fn to_json(&self) -> Value {
        match self {
            Witness::NotAForest => json!({"kind": "not-a-forest"}),
            Witness::ComponentOrder { vertices } => json!({"kind": "component-order", "vertices": vertices}),
            Witness::NonRbmComponent { vertices } => json!({"kind": "non-rbm-component", "vertices": vertices}),
            Witness::SignSum { f, sum } => json!({"kind": "sign-sum", "n": f.n(), "edges": edges_json(f), "sum": sum}),
            Witness::Census { first, first_count, second, second_count } => json!({
                "kind": "census",
                "n": first.n(),
                "tournaments": [
                    {"edges": edges_json(&first.to_digraph()), "count": count_json(*first_count)},
                    {"edges": edges_json(&second.to_digraph()), "count": count_json(*second_count)},
                ],
            }),
        }
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter().join(" ")
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::NotAForest => write!(f, "underlying graph is not a forest"),
            Witness::ComponentOrder { vertices } => {
                write!(f, "component of order {} is not a power of 2: {}", vertices.len(), join(vertices))
            }
            Witness::NonRbmComponent { vertices } => {
                write!(f, "component is not recursively bridge-mirrored: {}", join(vertices))
            }
            Witness::SignSum { f: sub, sum } => {
                let edges = sub.edges().iter().map(|(u, v)| format!("{u}>{v}")).join(" ");
                write!(f, "signed sum {sum} for even subgraph: {edges}")
            }
            Witness::Census { first, first_count, second, second_count } => {
                let bits = |t: &Tournament| t.bits().iter().map(|w| format!("{w:x}")).join(":");
                write!(
                    f,
                    "tournament {} has {first_count} copies, tournament {} has {second_count}",
                    bits(first),
                    bits(second)
                )
            }
        }
    }
}

impl Verdict {
    fn yes(route: Route) -> Self {
        Verdict { impartial: true, route, witness: None }
    }

    fn no(route: Route, witness: Witness) -> Self {
        Verdict { impartial: false, route, witness: Some(witness) }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "impartial": self.impartial,
            "route": self.route.to_string(),
            "witness": self.witness.as_ref().map(Witness::to_json),
        })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.impartial { "impartial" } else { "not impartial" })?;
        if let Some(w) = &self.witness {
            write!(f, "\nwitness: {w}")?;
        }
        Ok(())
    }
}

/// Decides impartiality from structure: every component must be a tree of
/// power-of-2 order and recursively bridge-mirrored.
pub fn is_impartial(h: &Digraph) -> Verdict {
    let g = h.underlying();
    if !g.is_forest() {
        return Verdict::no(Route::Structural, Witness::NotAForest);
    }
    let comps = g.components();
    if let Some(c) = comps.iter().find(|c| !c.len().is_power_of_two()) {
        return Verdict::no(Route::Structural, Witness::ComponentOrder { vertices: c.clone() });
    }
    if let Some(c) = comps.iter().find(|c| !is_rbm(&h.induced(c))) {
        return Verdict::no(Route::Structural, Witness::NonRbmComponent { vertices: c.clone() });
    }
    Verdict::yes(Route::Structural)
}

/// The signed-copy certificate. For every class of even spanning subgraphs
/// of the underlying forest (with at least one edge), orient a representative
/// like the lexicographically first member and require the signed count of
/// members to vanish. A cyclic underlying graph is rejected without a sum.
pub fn sign_sum_check(h: &Digraph) -> Result<Verdict> {
    let g = h.underlying();
    if !g.is_forest() {
        return Ok(Verdict::no(Route::SignSum, Witness::NotAForest));
    }
    let m = g.edge_count();
    if m > MAX_SIGNSUM_EDGES {
        return Err(Error::TooLarge { what: "edge count for sign-sum check", value: m, limit: MAX_SIGNSUM_EDGES });
    }
    // classes keyed by isomorphism type; members in lexicographic order of
    // their sorted edge-index tuples
    let mut classes: BTreeMap<ForestIsoKey, Vec<u64>> = BTreeMap::new();
    for k in 1..=m {
        for combo in (0..m).combinations(k) {
            let mask = combo.iter().fold(0u64, |acc, &i| acc | 1 << i);
            classes.entry(forest_iso_key(&g.spanning_subgraph(mask))?).or_default().push(mask);
        }
    }
    for members in classes.values() {
        let f_sub = g.spanning_subgraph(members[0]);
        if is_odd(&f_sub)? {
            continue;
        }
        let f = h.orient(&f_sub)?;
        let mut sum = 0i64;
        for &mask in members {
            sum += sgn_between(&f, &h.orient(&g.spanning_subgraph(mask))?)?.value();
        }
        if sum != 0 {
            return Ok(Verdict::no(Route::SignSum, Witness::SignSum { f, sum }));
        }
    }
    Ok(Verdict::yes(Route::SignSum))
}

/// Largest pair count for which the census route enumerates exhaustively
/// on its own. Exact mode itself goes up to [`super::MAX_EXACT_PAIRS`], but on
/// eight vertices that is minutes of work per pattern.
pub const AUTO_EXACT_PAIRS: usize = 21;

/// Census at `n = |V(h)|`: exact up to [`AUTO_EXACT_PAIRS`], otherwise
/// sampled with the default seed and sample count.
pub fn census_verdict(h: &Digraph) -> Result<Verdict> {
    let n = h.n();
    let mode = if Tournament::pair_count(n) <= AUTO_EXACT_PAIRS {
        CensusMode::Exact
    } else {
        CensusMode::Sampled { seed: DEFAULT_SEED, samples: DEFAULT_SAMPLES }
    };
    census_verdict_with(h, n, mode)
}

pub fn census_verdict_with(h: &Digraph, n: usize, mode: CensusMode) -> Result<Verdict> {
    if h.n() > n {
        return Err(Error::PatternTooLarge { pattern: h.n(), host: n });
    }
    Ok(match find_disagreement(h, n, mode)? {
        None => Verdict::yes(Route::Census),
        Some((first, first_count, second, second_count)) => {
            Verdict::no(Route::Census, Witness::Census { first, first_count, second, second_count })
        }
    })
}

/// Dispatches to one of the three routes.
pub fn verdict(h: &Digraph, route: Route) -> Result<Verdict> {
    match route {
        Route::Structural => Ok(is_impartial(h)),
        Route::SignSum => sign_sum_check(h),
        Route::Census => census_verdict(h),
    }
}
