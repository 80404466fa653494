use super::Digraph;
use crate::error::{Error, Result};

/// Largest vertex count accepted by the subset DP (2^n table entries).
pub const MAX_LINEXT_VERTICES: usize = 24;

/// Number of total orders of the vertices compatible with every edge `u -> v`
/// (u placed before v), by dynamic programming over prefix subsets.
pub fn count_linear_extensions(d: &Digraph) -> Result<u128> {
    let n = d.n();
    if n > MAX_LINEXT_VERTICES {
        return Err(Error::TooLarge { what: "vertex count", value: n, limit: MAX_LINEXT_VERTICES });
    }
    if has_cycle(d) {
        return Err(Error::Cyclic);
    }
    let mut preds = vec![0u32; n];
    for &(u, v) in d.edges() {
        preds[v] |= 1 << u;
    }
    let full = (1usize << n) - 1;
    let mut ways = vec![0u128; full + 1];
    ways[0] = 1;
    for mask in 0..full {
        let w = ways[mask];
        if w == 0 {
            continue;
        }
        for v in 0..n {
            let bit = 1usize << v;
            if mask & bit == 0 && preds[v] as usize & !mask == 0 {
                ways[mask | bit] += w;
            }
        }
    }
    Ok(ways[full])
}

pub(crate) fn has_cycle(d: &Digraph) -> bool {
    let n = d.n();
    let out = d.out_neighbors();
    let mut indeg = vec![0usize; n];
    for &(_, v) in d.edges() {
        indeg[v] += 1;
    }
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut visited = 0;
    while let Some(u) = queue.pop() {
        visited += 1;
        for &w in &out[u] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push(w);
            }
        }
    }
    visited < n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_and_antichains() {
        let chain = Digraph::new(5, (1..5).map(|v| (v - 1, v))).unwrap();
        assert_eq!(count_linear_extensions(&chain).unwrap(), 1);
        assert_eq!(count_linear_extensions(&Digraph::empty(5)).unwrap(), 120);
        assert_eq!(count_linear_extensions(&Digraph::empty(0)).unwrap(), 1);
    }

    #[test]
    fn intro_example_has_three() {
        // brute force over the 24 orders: 3 compatible
        let d = Digraph::new(4, [(0, 1), (2, 1), (3, 2)]).unwrap();
        assert_eq!(count_linear_extensions(&d).unwrap(), 3);
    }

    #[test]
    fn cycles_are_rejected() {
        let c = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(count_linear_extensions(&c), Err(Error::Cyclic));
    }
}
