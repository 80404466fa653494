use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::poly::Polynomial;
use super::scalar::Dual;
use super::step::StepTourneyon;
use crate::error::{Error, Result};
use crate::graph::Digraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Min,
    Max,
}

/// Gradient of the density at a step tourneyon. `b[i][j]` for `i < j` is
/// the derivative along `b_ij` with `b_ji = -b_ij` moving with it; the lower
/// triangle holds the negated values and the diagonal is zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Gradient {
    pub value: f64,
    pub a: Vec<f64>,
    pub b: Vec<Vec<f64>>,
}

impl Gradient {
    /// Euclidean norm over the weights and the upper-triangle biases.
    pub fn norm(&self) -> f64 {
        let k = self.a.len();
        let mut s: f64 = self.a.iter().map(|x| x * x).sum();
        for i in 0..k {
            for j in i + 1..k {
                s += self.b[i][j] * self.b[i][j];
            }
        }
        s.sqrt()
    }
}

fn scale(e: usize) -> f64 {
    0.5f64.powi(e as i32)
}

/// Analytic gradient by forward-mode differentiation of the polynomial, one
/// pass per free parameter.
pub fn gradient(poly: &Polynomial, a: &[f64], b: &[Vec<f64>]) -> Result<Gradient> {
    Polynomial::check(a, b)?;
    let k = a.len();
    let c = scale(poly.digraph().edge_count());
    let lift_a = |seed: Option<usize>| -> Vec<Dual> {
        a.iter().enumerate().map(|(i, &x)| Dual::new(x, if seed == Some(i) { 1.0 } else { 0.0 })).collect()
    };
    let lift_b = |seed: Option<(usize, usize)>| -> Vec<Vec<Dual>> {
        (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let d = match seed {
                            Some(s) if s == (i, j) => 1.0,
                            Some(s) if s == (j, i) => -1.0,
                            _ => 0.0,
                        };
                        Dual::new(b[i][j], d)
                    })
                    .collect()
            })
            .collect()
    };
    let plain_b = lift_b(None);
    let mut ga = vec![0.0; k];
    let mut value = 0.0;
    for (i, g) in ga.iter_mut().enumerate() {
        let r = poly.eval(&lift_a(Some(i)), &plain_b)?;
        value = r.v * c;
        *g = r.d * c;
    }
    let plain_a = lift_a(None);
    if k == 0 {
        value = poly.eval(&plain_a, &plain_b)?.v * c;
    }
    let mut gb = vec![vec![0.0; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let r = poly.eval(&plain_a, &lift_b(Some((i, j))))?;
            gb[i][j] = r.d * c;
            gb[j][i] = -r.d * c;
        }
    }
    Ok(Gradient { value, a: ga, b: gb })
}

/// Euclidean projection onto the probability simplex.
pub fn project_simplex(v: &[f64]) -> Vec<f64> {
    if v.is_empty() {
        return Vec::new();
    }
    let mut u = v.to_vec();
    u.sort_unstable_by(|x, y| y.total_cmp(x));
    let mut cum = 0.0;
    let mut theta = 0.0;
    for (i, &x) in u.iter().enumerate() {
        cum += x;
        let t = (cum - 1.0) / (i + 1) as f64;
        if x - t > 0.0 {
            theta = t;
        }
    }
    let mut out: Vec<f64> = v.iter().map(|x| (x - theta).max(0.0)).collect();
    // absorb rounding so the weights sum to 1 within tolerance
    let sum: f64 = out.iter().sum();
    if sum > 0.0 {
        out.iter_mut().for_each(|x| *x /= sum);
    } else {
        let k = out.len() as f64;
        out.iter_mut().for_each(|x| *x = 1.0 / k);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProbeConfig {
    pub blocks: usize,
    pub restarts: usize,
    pub iters: usize,
    pub step: f64,
    pub decay: f64,
    pub seed: u64,
    pub direction: Direction,
}

impl Default for ProbeConfig {
    fn default() -> Self {
        ProbeConfig { blocks: 3, restarts: 32, iters: 2000, step: 0.05, decay: 0.999, seed: 0, direction: Direction::Min }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeReport {
    pub direction: Direction,
    pub best_value: f64,
    pub best_point: StepTourneyon,
    pub blocks: usize,
    pub restarts: usize,
    pub iterations: usize,
    pub step: f64,
    pub decay: f64,
    pub seed: u64,
    pub best_restart: usize,
    pub gradient_norm_at_best: f64,
}

struct Run {
    value: f64,
    point: StepTourneyon,
    grad_norm: f64,
}

fn better(direction: Direction, x: f64, y: f64) -> bool {
    match direction {
        Direction::Min => x < y,
        Direction::Max => x > y,
    }
}

fn run(poly: &Polynomial, cfg: &ProbeConfig, restart: usize) -> Result<Run> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(restart as u64);
    let start = StepTourneyon::random(cfg.blocks, &mut rng)?;
    let (mut a, mut b) = (start.a().to_vec(), start.b().to_vec());
    let sign = match cfg.direction {
        Direction::Min => -1.0,
        Direction::Max => 1.0,
    };
    let k = cfg.blocks;
    let mut best: Option<Run> = None;
    let mut lr = cfg.step;
    for it in 0..=cfg.iters {
        let g = gradient(poly, &a, &b)?;
        if best.as_ref().is_none_or(|r| better(cfg.direction, g.value, r.value)) {
            best = Some(Run { value: g.value, point: StepTourneyon::from_parts(a.clone(), b.clone()), grad_norm: g.norm() });
        }
        if it == cfg.iters {
            break;
        }
        let moved: Vec<f64> = a.iter().zip(&g.a).map(|(x, d)| x + sign * lr * d).collect();
        a = project_simplex(&moved);
        for i in 0..k {
            for j in i + 1..k {
                let x = (b[i][j] + sign * lr * g.b[i][j]).clamp(-1.0, 1.0);
                b[i][j] = x;
                b[j][i] = -x;
            }
        }
        lr *= cfg.decay;
    }
    Ok(best.expect("at least one evaluation"))
}

/// Multi-start projected gradient search for the extreme density of `h`
/// over step tourneyons with `cfg.blocks` blocks. Restarts run in parallel;
/// the reported best is the first restart index attaining the extreme.
pub fn probe_extrema(h: &Digraph, cfg: &ProbeConfig) -> Result<ProbeReport> {
    if cfg.blocks < 2 {
        return Err(Error::InvalidArgument("probing needs at least 2 blocks".into()));
    }
    if cfg.restarts == 0 {
        return Err(Error::InvalidArgument("probing needs at least one restart".into()));
    }
    let poly = Polynomial::new(h);
    let runs = (0..cfg.restarts).into_par_iter().map(|r| run(&poly, cfg, r)).collect::<Result<Vec<_>>>()?;
    let mut best_restart = 0;
    for (i, r) in runs.iter().enumerate() {
        if better(cfg.direction, r.value, runs[best_restart].value) {
            best_restart = i;
        }
    }
    let best = &runs[best_restart];
    Ok(ProbeReport {
        direction: cfg.direction,
        best_value: best.value,
        best_point: best.point.clone(),
        blocks: cfg.blocks,
        restarts: cfg.restarts,
        iterations: cfg.iters,
        step: cfg.step,
        decay: cfg.decay,
        seed: cfg.seed,
        best_restart,
        gradient_norm_at_best: best.grad_norm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tourneyon::t_density;

    fn dg(n: usize, e: &[(usize, usize)]) -> Digraph {
        Digraph::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn simplex_projection() {
        assert_eq!(project_simplex(&[0.2, 0.3, 0.5]), vec![0.2, 0.3, 0.5]);
        assert_eq!(project_simplex(&[2.0, 0.0]), vec![1.0, 0.0]);
        let p = project_simplex(&[0.5, 0.5, 0.5]);
        assert!(p.iter().all(|x| (x - 1.0 / 3.0).abs() < 1e-15));
        let p = project_simplex(&[-1.0, 0.4, 0.9]);
        assert_eq!(p[0], 0.0);
        assert!((p[1] - 0.25).abs() < 1e-12 && (p[2] - 0.75).abs() < 1e-12);
    }

    #[test]
    fn gradient_value_matches_density() {
        let h = dg(3, &[(0, 1), (1, 2)]);
        let w = StepTourneyon::random(3, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        let g = gradient(&Polynomial::new(&h), w.a(), w.b()).unwrap();
        assert!((g.value - t_density(&h, &w).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn short_probe_is_deterministic() {
        let h = dg(3, &[(0, 1), (2, 1)]);
        let cfg = ProbeConfig { restarts: 4, iters: 200, ..ProbeConfig::default() };
        let r1 = probe_extrema(&h, &cfg).unwrap();
        let r2 = probe_extrema(&h, &cfg).unwrap();
        assert_eq!(r1, r2);
        assert!(r1.best_value >= 0.25 - 1e-3);
        assert!(probe_extrema(&h, &ProbeConfig { blocks: 1, ..cfg }).is_err());
    }
}
