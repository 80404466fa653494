//! Step tourneyons, the copy polynomial `P(a; b)`, densities, identity
//! testing and the extremal-density probe.

mod poly;
mod probe;
mod scalar;
mod step;

pub use poly::{
    density, identity_test, p_eval, p_eval_naive, random_rational_point, t_density, Arithmetic, Polynomial,
    MAX_NAIVE_MAPS,
};
pub use probe::{gradient, probe_extrema, project_simplex, Direction, Gradient, ProbeConfig, ProbeReport};
pub use scalar::{Dual, Scalar};
pub use step::{StepTourneyon, SUM_TOLERANCE};
