use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SUM_TOLERANCE: f64 = 1e-12;

/// A step tourneyon: `[0,1]` split into blocks of lengths `a`, with
/// `W = (1 + b[i][j]) / 2` on block pair `(i, j)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawTourneyon")]
pub struct StepTourneyon {
    a: Vec<f64>,
    b: Vec<Vec<f64>>,
}

#[derive(Deserialize)]
struct RawTourneyon {
    a: Vec<f64>,
    b: Vec<Vec<f64>>,
}

impl TryFrom<RawTourneyon> for StepTourneyon {
    type Error = Error;
    fn try_from(raw: RawTourneyon) -> Result<Self> {
        StepTourneyon::new(raw.a, raw.b)
    }
}

fn invalid(msg: String) -> Error {
    Error::InvalidTourneyon(msg)
}

impl StepTourneyon {
    pub fn new(a: Vec<f64>, b: Vec<Vec<f64>>) -> Result<Self> {
        let n = a.len();
        if n == 0 {
            return Err(invalid("no blocks".into()));
        }
        if let Some(x) = a.iter().find(|x| !x.is_finite() || **x < 0.0) {
            return Err(invalid(format!("block weight {x} is negative or not finite")));
        }
        let sum: f64 = a.iter().sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(invalid(format!("block weights sum to {sum}")));
        }
        if b.len() != n || b.iter().any(|row| row.len() != n) {
            return Err(invalid(format!("bias matrix must be {n}x{n}")));
        }
        for i in 0..n {
            for j in 0..n {
                let x = b[i][j];
                if !x.is_finite() || x.abs() > 1.0 {
                    return Err(invalid(format!("bias b[{i}][{j}] = {x} outside [-1, 1]")));
                }
                if x != -b[j][i] {
                    return Err(invalid(format!("bias matrix not antisymmetric at ({i}, {j})")));
                }
            }
        }
        Ok(StepTourneyon { a, b })
    }

    /// The one-block tourneyon `W ≡ 1/2`.
    pub fn constant() -> Self {
        StepTourneyon { a: vec![1.0], b: vec![vec![0.0]] }
    }

    /// Weights from normalized exponentials; biases uniform on `[-1, 1]`
    /// above the diagonal, mirrored below.
    pub fn random<R: Rng + ?Sized>(blocks: usize, rng: &mut R) -> Result<Self> {
        if blocks == 0 {
            return Err(invalid("no blocks".into()));
        }
        let raw: Vec<f64> = (0..blocks).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
        let total: f64 = raw.iter().sum();
        let a = if total > 0.0 {
            raw.iter().map(|x| x / total).collect()
        } else {
            vec![1.0 / blocks as f64; blocks]
        };
        let mut b = vec![vec![0.0; blocks]; blocks];
        for i in 0..blocks {
            for j in i + 1..blocks {
                let x = rng.gen_range(-1.0..=1.0);
                b[i][j] = x;
                b[j][i] = -x;
            }
        }
        Self::new(a, b)
    }

    pub fn blocks(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn b(&self) -> &[Vec<f64>] {
        &self.b
    }

    /// Kernel value on block pair `(i, j)`.
    pub fn w(&self, i: usize, j: usize) -> f64 {
        (1.0 + self.b[i][j]) / 2.0
    }

    /// Construction without validation, for points already projected.
    pub(crate) fn from_parts(a: Vec<f64>, b: Vec<Vec<f64>>) -> Self {
        StepTourneyon { a, b }
    }
}
