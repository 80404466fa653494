use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use super::canon::{forest_isomorphism, TreeAdj};
use super::{Digraph, UndirectedGraph};
use crate::error::{Error, Result};
use crate::structure::component_mirror_bridge;

/// `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(reversed: usize) -> Sign {
        if reversed.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.value() as i8
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;
    fn try_from(v: i8) -> std::result::Result<Sign, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(format!("sign must be 1 or -1, got {v}")),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// `(-1)^r` where `r` counts the edges of `f` whose orientation `sigma`
/// reverses when carried into `h`.
pub fn sgn_map(sigma: &[usize], f: &Digraph, h: &Digraph) -> Result<Sign> {
    if sigma.len() != f.n() {
        return Err(Error::MapLength { expected: f.n(), got: sigma.len() });
    }
    let mut reversed = 0;
    for &(u, v) in f.edges() {
        let (x, y) = (sigma[u], sigma[v]);
        if x >= h.n() || y >= h.n() {
            return Err(Error::NotAHomomorphism(u, v));
        }
        if h.has_edge(x, y) {
            continue;
        }
        if h.has_edge(y, x) {
            reversed += 1;
        } else {
            return Err(Error::NotAHomomorphism(u, v));
        }
    }
    Ok(Sign::from_parity(reversed))
}

/// Sign of two orientations of isomorphic forests, measured through one
/// explicit isomorphism. Well defined (independent of the isomorphism) when
/// the common undirected structure is even.
pub fn sgn_between(a: &Digraph, b: &Digraph) -> Result<Sign> {
    let sigma = forest_isomorphism(&a.underlying(), &b.underlying())?
        .ok_or(Error::VertexCountMismatch(a.n(), b.n()))?;
    sgn_map(&sigma, a, b)
}

/// Whether the forest has an odd automorphism, i.e. some component has a
/// mirror-bridge.
pub fn is_odd(g: &UndirectedGraph) -> Result<bool> {
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    let t = TreeAdj::undirected(g);
    Ok(g.components().iter().any(|c| component_mirror_bridge(&t, c[0]).is_some()))
}
