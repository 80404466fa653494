use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Digraph;

/// A tournament on `0..n`, one bit per pair `i < j` in lexicographic pair
/// order; a set bit means `i -> j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    orient: Vec<u64>,
}

impl Tournament {
    /// Vertex masks are `u64`.
    pub const MAX_ORDER: usize = 64;

    pub fn pair_count(n: usize) -> usize {
        n * n.saturating_sub(1) / 2
    }

    fn pair_index(n: usize, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < n);
        i * (2 * n - i - 1) / 2 + (j - i - 1)
    }

    fn check_order(n: usize) -> Result<()> {
        if n > Self::MAX_ORDER {
            Err(Error::TooLarge { what: "tournament order", value: n, limit: Self::MAX_ORDER })
        } else {
            Ok(())
        }
    }

    pub fn from_bits(n: usize, mut orient: Vec<u64>) -> Result<Self> {
        Self::check_order(n)?;
        let m = Self::pair_count(n);
        orient.resize(m.div_ceil(64), 0);
        if !m.is_multiple_of(64) {
            if let Some(last) = orient.last_mut() {
                *last &= (1u64 << (m % 64)) - 1;
            }
        }
        Ok(Tournament { n, orient })
    }

    /// The tournament whose pair bits are the binary digits of `index`.
    pub fn from_index(n: usize, index: u64) -> Result<Self> {
        Self::from_bits(n, vec![index])
    }

    /// `i -> j` for every `i < j`.
    pub fn transitive(n: usize) -> Result<Self> {
        Self::from_bits(n, vec![u64::MAX; Self::pair_count(n).div_ceil(64)])
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Self> {
        Self::check_order(n)?;
        let words = (0..Self::pair_count(n).div_ceil(64)).map(|_| rng.gen()).collect();
        Self::from_bits(n, words)
    }

    /// The unique tournament containing `d` whose remaining pairs point from
    /// smaller to larger label.
    pub fn from_digraph(d: &Digraph) -> Result<Self> {
        let n = d.n();
        let mut t = Self::transitive(n)?;
        for &(u, v) in d.edges() {
            t.set(u, v);
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> &[u64] {
        &self.orient
    }

    fn bit(&self, idx: usize) -> bool {
        self.orient[idx / 64] >> (idx % 64) & 1 == 1
    }

    fn set(&mut self, u: usize, v: usize) {
        let (i, j) = (u.min(v), u.max(v));
        let idx = Self::pair_index(self.n, i, j);
        let word = &mut self.orient[idx / 64];
        if u < v {
            *word |= 1 << (idx % 64);
        } else {
            *word &= !(1 << (idx % 64));
        }
    }

    /// Whether `u -> v`. False for `u == v`.
    pub fn beats(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let fwd = self.bit(Self::pair_index(self.n, u.min(v), u.max(v)));
        fwd == (u < v)
    }

    /// `out[v]` has bit `w` set iff `v -> w`.
    pub fn out_masks(&self) -> Vec<u64> {
        let mut out = vec![0u64; self.n];
        let mut idx = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.bit(idx) {
                    out[i] |= 1 << j;
                } else {
                    out[j] |= 1 << i;
                }
                idx += 1;
            }
        }
        out
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Tournament> {
        if perm.len() != self.n {
            return Err(Error::MapLength { expected: self.n, got: perm.len() });
        }
        let mut t = self.clone();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.beats(i, j) {
                    t.set(perm[i], perm[j]);
                } else {
                    t.set(perm[j], perm[i]);
                }
            }
        }
        Ok(t)
    }

    pub fn to_digraph(&self) -> Digraph {
        let mut edges = Vec::with_capacity(Self::pair_count(self.n));
        for i in 0..self.n {
            for j in i + 1..self.n {
                edges.push(if self.beats(i, j) { (i, j) } else { (j, i) });
            }
        }
        Digraph::new(self.n, edges).expect("tournament edges are simple")
    }
}

/// Converts a pair-bit index for `n <= 11` (at most 55 pairs) into out masks
/// without allocating a `Tournament`.
pub(crate) fn out_masks_from_index(n: usize, index: u64, out: &mut [u64]) {
    out[..n].fill(0);
    let mut idx = 0;
    for i in 0..n {
        for j in i + 1..n {
            if index >> idx & 1 == 1 {
                out[i] |= 1 << j;
            } else {
                out[j] |= 1 << i;
            }
            idx += 1;
        }
    }
}
