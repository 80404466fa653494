use std::collections::{BTreeMap, HashMap};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use super::tournament::{out_masks_from_index, Tournament};
use crate::error::{Error, Result};
use crate::graph::Digraph;

/// Exact census enumerates all `2^C(n,2)` labeled tournaments; capped at
/// `n = 8`.
pub const MAX_EXACT_PAIRS: usize = 28;
pub const DEFAULT_SAMPLES: u64 = 10_000;
pub const DEFAULT_SEED: u64 = 0;

/// Counts labeled copies of a fixed digraph: injective vertex maps that send
/// every edge onto a same-direction tournament edge.
#[derive(Clone, Debug)]
pub struct EmbeddingCounter {
    pattern_order: usize,
    /// Constraints per placed vertex: for each earlier position `p`, whether
    /// the edge goes `p -> here` (`true`) or `here -> p`.
    steps: Vec<Vec<(usize, bool)>>,
    /// Isolated vertices, placed last by a falling factorial.
    free: usize,
}

impl EmbeddingCounter {
    pub fn new(h: &Digraph) -> Self {
        let n = h.n();
        let g = h.underlying();
        let adj = g.adjacency();
        let mut position = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut free = 0;
        for comp in g.components() {
            if comp.len() == 1 {
                free += 1;
                continue;
            }
            // BFS so every later vertex has an already-placed neighbour
            let start = comp[0];
            position[start] = order.len();
            order.push(start);
            let mut head = order.len() - 1;
            while head < order.len() {
                let u = order[head];
                head += 1;
                for &w in &adj[u] {
                    if position[w] == usize::MAX {
                        position[w] = order.len();
                        order.push(w);
                    }
                }
            }
        }
        let steps = order
            .iter()
            .enumerate()
            .map(|(pos, &v)| {
                adj[v]
                    .iter()
                    .filter(|&&w| position[w] < pos)
                    .map(|&w| (position[w], h.has_edge(w, v)))
                    .collect()
            })
            .collect();
        EmbeddingCounter { pattern_order: n, steps, free }
    }

    pub fn pattern_order(&self) -> usize {
        self.pattern_order
    }

    /// Count in the tournament given by out/in neighbour masks.
    pub fn count_masks(&self, out: &[u64], inn: &[u64]) -> u128 {
        let n = out.len();
        if self.pattern_order > n {
            return 0;
        }
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut image = [0usize; Tournament::MAX_ORDER];
        let placed = self.place(0, 0, all, out, inn, &mut image);
        let rest = n - self.steps.len();
        let tail: u128 = (0..self.free).map(|i| (rest - i) as u128).product();
        placed * tail
    }

    fn place(&self, depth: usize, used: u64, all: u64, out: &[u64], inn: &[u64], image: &mut [usize]) -> u128 {
        if depth == self.steps.len() {
            return 1;
        }
        let mut cand = all & !used;
        for &(p, into_here) in &self.steps[depth] {
            cand &= if into_here { out[image[p]] } else { inn[image[p]] };
        }
        if depth + 1 == self.steps.len() {
            return cand.count_ones() as u128;
        }
        let mut total = 0;
        while cand != 0 {
            let x = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            image[depth] = x;
            total += self.place(depth + 1, used | 1 << x, all, out, inn, image);
        }
        total
    }

    pub fn count(&self, k: &Tournament) -> u128 {
        let out = k.out_masks();
        let inn = in_masks(&out);
        self.count_masks(&out, &inn)
    }
}

fn in_masks(out: &[u64]) -> Vec<u64> {
    let mut inn = vec![0u64; out.len()];
    for (v, &o) in out.iter().enumerate() {
        let mut m = o;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            inn[w] |= 1 << v;
        }
    }
    inn
}

/// Number of labeled copies of `h` in `k`.
pub fn count_embeddings(h: &Digraph, k: &Tournament) -> Result<u128> {
    if h.n() > k.n() {
        return Err(Error::PatternTooLarge { pattern: h.n(), host: k.n() });
    }
    Ok(EmbeddingCounter::new(h).count(k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusMode {
    Exact,
    /// `samples` tournaments in total: the transitive one first, then
    /// uniform draws from a ChaCha8 stream seeded with `seed`.
    Sampled { seed: u64, samples: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    pub mode: CensusMode,
    /// Embedding count -> number of tournaments attaining it.
    pub distribution: BTreeMap<u128, u64>,
    pub is_constant: bool,
}

fn json_int(x: u128) -> Value {
    if x < 1u128 << 53 {
        json!(x as u64)
    } else {
        Value::String(x.to_string())
    }
}

impl CensusReport {
    pub fn total(&self) -> u64 {
        self.distribution.values().sum()
    }

    pub fn to_json(&self) -> Value {
        let distribution: Map<String, Value> = self
            .distribution
            .iter()
            .map(|(&count, &freq)| (count.to_string(), json_int(freq as u128)))
            .collect();
        let (mode, seed) = match self.mode {
            CensusMode::Exact => ("exact", Value::Null),
            CensusMode::Sampled { seed, .. } => ("sampled", json_int(seed as u128)),
        };
        json!({
            "n": self.n,
            "mode": mode,
            "seed": seed,
            "distribution": distribution,
            "constant": self.is_constant,
        })
    }
}

fn merge(mut a: HashMap<u128, u64>, b: HashMap<u128, u64>) -> HashMap<u128, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

/// Distribution of `h`'s labeled-copy count over tournaments on `n` vertices.
pub fn census(h: &Digraph, n: usize, mode: CensusMode) -> Result<CensusReport> {
    if h.n() > n {
        return Err(Error::PatternTooLarge { pattern: h.n(), host: n });
    }
    let counter = EmbeddingCounter::new(h);
    let hist = match mode {
        CensusMode::Exact => {
            let pairs = Tournament::pair_count(n);
            if pairs > MAX_EXACT_PAIRS {
                return Err(Error::TooLarge { what: "pair count for exact census", value: pairs, limit: MAX_EXACT_PAIRS });
            }
            (0..1u64 << pairs)
                .into_par_iter()
                .fold(
                    || (HashMap::new(), vec![0u64; n], vec![0u64; n]),
                    |(mut acc, mut out, mut inn), index| {
                        out_masks_from_index(n, index, &mut out);
                        fill_in_masks(&out, &mut inn);
                        *acc.entry(counter.count_masks(&out, &inn)).or_insert(0) += 1;
                        (acc, out, inn)
                    },
                )
                .map(|(acc, _, _)| acc)
                .reduce(HashMap::new, merge)
        }
        CensusMode::Sampled { seed, samples } => {
            if samples == 0 {
                return Err(Error::InvalidArgument("sample count must be positive".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut pool = vec![Tournament::transitive(n)?];
            for _ in 1..samples {
                pool.push(Tournament::random(n, &mut rng)?);
            }
            pool.par_iter()
                .fold(HashMap::new, |mut acc, k| {
                    *acc.entry(counter.count(k)).or_insert(0) += 1;
                    acc
                })
                .reduce(HashMap::new, merge)
        }
    };
    let distribution: BTreeMap<u128, u64> = hist.into_iter().collect();
    let is_constant = distribution.len() == 1;
    Ok(CensusReport { n, mode, distribution, is_constant })
}

fn fill_in_masks(out: &[u64], inn: &mut [u64]) {
    inn.fill(0);
    for (v, &o) in out.iter().enumerate() {
        let mut m = o;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            inn[w] |= 1 << v;
        }
    }
}

/// First tournament (in pair-bit index order for exact mode, in draw order
/// for sampled mode) whose count differs from the transitive tournament's.
pub(crate) fn find_disagreement(h: &Digraph, n: usize, mode: CensusMode) -> Result<Option<(Tournament, u128, Tournament, u128)>> {
    let counter = EmbeddingCounter::new(h);
    let base = Tournament::transitive(n)?;
    let base_count = counter.count(&base);
    match mode {
        CensusMode::Exact => {
            let pairs = Tournament::pair_count(n);
            if pairs > MAX_EXACT_PAIRS {
                return Err(Error::TooLarge { what: "pair count for exact census", value: pairs, limit: MAX_EXACT_PAIRS });
            }
            let hit = (0..1u64 << pairs).into_par_iter().find_first(|&index| {
                let mut out = vec![0u64; n];
                out_masks_from_index(n, index, &mut out);
                counter.count_masks(&out, &in_masks(&out)) != base_count
            });
            hit.map(|index| {
                let k = Tournament::from_index(n, index)?;
                let c = counter.count(&k);
                Ok((base, base_count, k, c))
            })
            .transpose()
        }
        CensusMode::Sampled { seed, samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 1..samples {
                let k = Tournament::random(n, &mut rng)?;
                let c = counter.count(&k);
                if c != base_count {
                    return Ok(Some((base, base_count, k, c)));
                }
            }
            Ok(None)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dg(n: usize, e: &[(usize, usize)]) -> Digraph {
        Digraph::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn single_edge_has_one_copy_per_pair() {
        let h = dg(2, &[(0, 1)]);
        for index in 0..8 {
            let k = Tournament::from_index(3, index).unwrap();
            assert_eq!(count_embeddings(&h, &k).unwrap(), 3);
        }
    }

    #[test]
    fn cycle_absent_from_transitive() {
        let c3 = dg(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(count_embeddings(&c3, &Tournament::transitive(3).unwrap()).unwrap(), 0);
    }

    #[test]
    fn intro_example_in_transitive() {
        let h = dg(4, &[(0, 1), (2, 1), (3, 2)]);
        assert_eq!(count_embeddings(&h, &Tournament::transitive(4).unwrap()).unwrap(), 3);
        assert!(count_embeddings(&h, &Tournament::transitive(3).unwrap()).is_err());
    }

    #[test]
    fn census_examples() {
        let h = dg(4, &[(0, 1), (2, 1), (3, 2)]);
        let r = census(&h, 4, CensusMode::Exact).unwrap();
        assert_eq!(r.distribution, BTreeMap::from([(3, 64)]));
        assert!(r.is_constant);

        // transitive tournaments hold one directed 2-path, cyclic ones three
        let aa = dg(3, &[(0, 1), (1, 2)]);
        let r = census(&aa, 3, CensusMode::Exact).unwrap();
        assert_eq!(r.distribution, BTreeMap::from([(1, 6), (3, 2)]));
        assert!(!r.is_constant);

        let r = census(&Digraph::empty(1), 2, CensusMode::Exact).unwrap();
        assert_eq!(r.distribution, BTreeMap::from([(2, 2)]));

        assert!(census(&Digraph::empty(1), 9, CensusMode::Exact).is_err());
    }

    #[test]
    fn sampled_census_is_reproducible() {
        let aa = dg(3, &[(0, 1), (1, 2)]);
        let mode = CensusMode::Sampled { seed: 7, samples: 500 };
        let a = census(&aa, 10, mode).unwrap();
        let b = census(&aa, 10, mode).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.total(), 500);
        assert!(!a.is_constant);
    }

    #[test]
    fn json_shape() {
        let r = census(&Digraph::empty(1), 1, CensusMode::Exact).unwrap();
        assert_eq!(
            serde_json::to_string(&r.to_json()).unwrap(),
            r#"{"constant":true,"distribution":{"1":1},"mode":"exact","n":1,"seed":null}"#
        );
    }
}
