use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::scalar::Scalar;
use super::step::StepTourneyon;
use crate::error::{Error, Result};
use crate::graph::Digraph;

/// Naive evaluation visits `blocks^|V|` maps.
pub const MAX_NAIVE_MAPS: u64 = 1 << 28;

#[derive(Clone, Debug)]
enum Plan {
    /// Leaf-to-root dynamic program. Each non-root vertex records its parent
    /// and whether the edge points parent -> child.
    Forest { order: Vec<usize>, parent: Vec<Option<(usize, bool)>>, roots: Vec<usize> },
    Naive,
}

/// `P(a; b)` for a fixed digraph, precompiled: a tree dynamic program when
/// the underlying graph is a forest, otherwise a sum over all vertex maps.
#[derive(Clone, Debug)]
pub struct Polynomial {
    h: Digraph,
    plan: Plan,
}

impl Polynomial {
    pub fn new(h: &Digraph) -> Self {
        let g = h.underlying();
        let plan = if g.is_forest() {
            let adj = g.adjacency();
            let mut parent = vec![None; h.n()];
            let mut seen = vec![false; h.n()];
            let mut order = Vec::with_capacity(h.n());
            let mut roots = Vec::new();
            for r in 0..h.n() {
                if seen[r] {
                    continue;
                }
                roots.push(r);
                seen[r] = true;
                let start = order.len();
                order.push(r);
                let mut head = start;
                while head < order.len() {
                    let u = order[head];
                    head += 1;
                    for &w in &adj[u] {
                        if !seen[w] {
                            seen[w] = true;
                            parent[w] = Some((u, h.has_edge(u, w)));
                            order.push(w);
                        }
                    }
                }
            }
            Plan::Forest { order, parent, roots }
        } else {
            Plan::Naive
        };
        Polynomial { h: h.clone(), plan }
    }

    pub fn digraph(&self) -> &Digraph {
        &self.h
    }

    /// Checks dimensions and antisymmetry of `b`.
    pub fn check<T: Scalar>(a: &[T], b: &[Vec<T>]) -> Result<()> {
        let n = a.len();
        if b.len() != n || b.iter().any(|row| row.len() != n) {
            return Err(Error::Dimension(format!("{} weights need a {n}x{n} bias matrix", n)));
        }
        for i in 0..n {
            for j in i..n {
                if b[i][j].clone() + b[j][i].clone() != T::zero() {
                    return Err(Error::InvalidArgument(format!("bias matrix not antisymmetric at ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    /// Evaluates without validating `a` and `b`.
    pub fn eval<T: Scalar>(&self, a: &[T], b: &[Vec<T>]) -> Result<T> {
        match &self.plan {
            Plan::Forest { order, parent, roots } => Ok(self.eval_forest(order, parent, roots, a, b)),
            Plan::Naive => eval_naive(&self.h, a, b),
        }
    }

    fn eval_forest<T: Scalar>(
        &self,
        order: &[usize],
        parent: &[Option<(usize, bool)>],
        roots: &[usize],
        a: &[T],
        b: &[Vec<T>],
    ) -> T {
        let k = a.len();
        let mut f: Vec<Vec<T>> = vec![a.to_vec(); self.h.n()];
        for &c in order.iter().rev() {
            let Some((p, down)) = parent[c] else { continue };
            let msg: Vec<T> = (0..k)
                .map(|i| {
                    (0..k).fold(T::zero(), |acc, j| {
                        let bias = if down { b[i][j].clone() } else { b[j][i].clone() };
                        acc + f[c][j].clone() * (T::one() + bias)
                    })
                })
                .collect();
            for (x, m) in f[p].iter_mut().zip(msg) {
                *x = x.clone() * m;
            }
        }
        roots
            .iter()
            .map(|&r| f[r].iter().cloned().fold(T::zero(), |acc, x| acc + x))
            .fold(T::one(), |acc, x| acc * x)
    }
}

/// Sum over all maps `V(h) -> blocks` of `Π a · Π (1 + b)`.
pub fn p_eval_naive<T: Scalar>(h: &Digraph, a: &[T], b: &[Vec<T>]) -> Result<T> {
    Polynomial::check(a, b)?;
    eval_naive(h, a, b)
}

fn eval_naive<T: Scalar>(h: &Digraph, a: &[T], b: &[Vec<T>]) -> Result<T> {
    let (n, k) = (h.n(), a.len());
    let maps = (k as u64).saturating_pow(n as u32);
    if maps > MAX_NAIVE_MAPS {
        return Err(Error::TooLarge { what: "map count for naive evaluation", value: maps as usize, limit: MAX_NAIVE_MAPS as usize });
    }
    if k == 0 {
        return Ok(if n == 0 { T::one() } else { T::zero() });
    }
    let mut pi = vec![0usize; n];
    let mut total = T::zero();
    loop {
        let mut term = pi.iter().fold(T::one(), |acc, &i| acc * a[i].clone());
        for &(u, v) in h.edges() {
            term = term * (T::one() + b[pi[u]][pi[v]].clone());
        }
        total = total + term;
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(total);
            }
            pi[pos] += 1;
            if pi[pos] < k {
                break;
            }
            pi[pos] = 0;
            pos += 1;
        }
    }
}

/// `P(a; b)`, checking dimensions and antisymmetry.
pub fn p_eval<T: Scalar>(h: &Digraph, a: &[T], b: &[Vec<T>]) -> Result<T> {
    Polynomial::check(a, b)?;
    Polynomial::new(h).eval(a, b)
}

fn half_power<T: Scalar>(e: usize) -> T {
    (0..e).fold(T::one(), |acc, _| acc * T::from_ratio(1, 2))
}

/// `2^(-|E|) · P(a; b)` over any scalar type.
pub fn density<T: Scalar>(h: &Digraph, a: &[T], b: &[Vec<T>]) -> Result<T> {
    Ok(p_eval(h, a, b)? * half_power(h.edge_count()))
}

/// The density of `h` in a step tourneyon.
pub fn t_density(h: &Digraph, w: &StepTourneyon) -> Result<f64> {
    density(h, w.a(), w.b())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Arithmetic {
    Exact,
    Float { tol: f64 },
}

/// Random rational point: weights are integers in `1..=1000`, biases
/// `k/1000` with `k` in `-1000..=1000` above the diagonal.
pub fn random_rational_point<R: Rng + ?Sized>(blocks: usize, rng: &mut R) -> (Vec<BigRational>, Vec<Vec<BigRational>>) {
    let a = (0..blocks).map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(1..=1000)))).collect();
    let mut b = vec![vec![BigRational::zero(); blocks]; blocks];
    for i in 0..blocks {
        for j in i + 1..blocks {
            let x = BigRational::new(BigInt::from(rng.gen_range(-1000..=1000)), BigInt::from(1000));
            b[j][i] = -x.clone();
            b[i][j] = x;
        }
    }
    (a, b)
}

/// Tests `P(a; b) = (Σa)^|V|` at `trials` random points with `|V(h)|`
/// blocks. Exact mode uses unnormalized rational weights; float mode
/// rescales them onto the simplex so both sides are near 1.
pub fn identity_test(h: &Digraph, trials: usize, arithmetic: Arithmetic, seed: u64) -> Result<bool> {
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial is required".into()));
    }
    let n = h.n();
    if n == 0 {
        return Ok(true);
    }
    let poly = Polynomial::new(h);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let (a, b) = random_rational_point(n, &mut rng);
        let ok = match arithmetic {
            Arithmetic::Exact => {
                let sum = a.iter().fold(BigRational::zero(), |acc, x| acc + x);
                let rhs = (0..n).fold(BigRational::one(), |acc, _| acc * &sum);
                poly.eval(&a, &b)? == rhs
            }
            Arithmetic::Float { tol } => {
                let to_f = |x: &BigRational| {
                    let (p, q): (i64, i64) = (x.numer().try_into().unwrap_or(0), x.denom().try_into().unwrap_or(1));
                    p as f64 / q as f64
                };
                let raw: Vec<f64> = a.iter().map(to_f).collect();
                let total: f64 = raw.iter().sum();
                let af: Vec<f64> = raw.iter().map(|x| x / total).collect();
                let bf: Vec<Vec<f64>> = b.iter().map(|row| row.iter().map(to_f).collect()).collect();
                (poly.eval(&af, &bf)? - 1.0).abs() <= tol
            }
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dg(n: usize, e: &[(usize, usize)]) -> Digraph {
        Digraph::new(n, e.iter().copied()).unwrap()
    }

    fn point(seed: u64, k: usize) -> StepTourneyon {
        StepTourneyon::random(k, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
    }

    #[test]
    fn zero_bias_gives_power_of_sum() {
        let h = dg(3, &[(0, 1), (1, 2), (0, 2)]);
        let a = [0.2, 0.3, 0.1];
        let b = vec![vec![0.0; 3]; 3];
        assert!((p_eval(&h, &a, &b).unwrap() - 0.6f64.powi(3)).abs() < 1e-15);
    }

    #[test]
    fn single_edge_cancels() {
        let h = dg(2, &[(1, 0)]);
        for seed in 0..5 {
            let w = point(seed, 4);
            assert!((p_eval(&h, w.a(), w.b()).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn forest_plan_matches_naive() {
        let hs = [
            dg(4, &[(0, 1), (2, 1), (3, 2)]),
            dg(5, &[(1, 0), (1, 2), (3, 1), (4, 3)]),
            dg(4, &[(0, 1), (2, 3)]),
            dg(3, &[]),
        ];
        for h in &hs {
            for seed in 0..5 {
                let w = point(seed, 3);
                let fast = p_eval(h, w.a(), w.b()).unwrap();
                let slow = p_eval_naive(h, w.a(), w.b()).unwrap();
                assert!((fast - slow).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn constant_tourneyon() {
        let h = dg(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(t_density(&h, &StepTourneyon::constant()).unwrap(), 0.125);
        let one = [BigRational::one()];
        let zero = vec![vec![BigRational::zero()]];
        assert_eq!(density(&h, &one, &zero).unwrap(), BigRational::new(1.into(), 8.into()));
    }

    #[test]
    fn dimension_checks() {
        let h = dg(2, &[(0, 1)]);
        assert!(matches!(p_eval(&h, &[0.5, 0.5], &[vec![0.0]]), Err(Error::Dimension(_))));
        assert!(p_eval(&h, &[0.5, 0.5], &[vec![0.0, 0.2], vec![0.2, 0.0]]).is_err());
    }

    #[test]
    fn identity_examples() {
        let ex1 = dg(4, &[(0, 1), (2, 1), (3, 2)]);
        assert!(identity_test(&ex1, 20, Arithmetic::Exact, 0).unwrap());
        assert!(identity_test(&ex1, 20, Arithmetic::Float { tol: 1e-9 }, 0).unwrap());
        let aaa = dg(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(!identity_test(&aaa, 20, Arithmetic::Exact, 0).unwrap());
        assert!(identity_test(&Digraph::empty(1), 5, Arithmetic::Exact, 0).unwrap());
        assert!(identity_test(&ex1, 0, Arithmetic::Exact, 0).is_err());
    }
}
