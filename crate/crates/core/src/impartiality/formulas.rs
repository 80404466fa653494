use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::linext::has_cycle;
use crate::graph::{count_linear_extensions, Digraph};

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

/// `n! / (k_1! ... k_r! (n - Σk)!)`.
pub fn multinomial(n: usize, parts: &[usize]) -> Result<BigUint> {
    let used: usize = parts.iter().sum();
    if used > n {
        return Err(Error::InvalidArgument(format!("parts sum to {used}, more than {n}")));
    }
    let denom: BigUint = parts.iter().map(|&k| factorial(k)).product::<BigUint>() * factorial(n - used);
    Ok(factorial(n) / denom)
}

fn check_order(h: &Digraph, n: usize) -> Result<()> {
    if h.n() > n {
        Err(Error::PatternTooLarge { pattern: h.n(), host: n })
    } else {
        Ok(())
    }
}

fn component_orders(h: &Digraph) -> Vec<usize> {
    h.underlying().components().iter().map(Vec::len).collect()
}

/// Labeled copies of `h` in the transitive tournament on `n` vertices:
/// the multinomial over component orders times each component's number of
/// linear extensions. Zero when `h` has a directed cycle.
pub fn transitive_count(h: &Digraph, n: usize) -> Result<BigUint> {
    check_order(h, n)?;
    if has_cycle(h) {
        return Ok(BigUint::ZERO);
    }
    let comps = h.underlying().components();
    let orders: Vec<usize> = comps.iter().map(Vec::len).collect();
    let mut total = multinomial(n, &orders)?;
    for c in &comps {
        total *= BigUint::from(count_linear_extensions(&h.induced(c))?);
    }
    Ok(total)
}

/// Expected labeled copies of `h` in a uniform random `n`-vertex tournament:
/// the multinomial over component orders times `2^(-|E|)` times the product
/// of the component order factorials.
pub fn random_expected_count(h: &Digraph, n: usize) -> Result<BigRational> {
    check_order(h, n)?;
    let orders = component_orders(h);
    let mut num = multinomial(n, &orders)?;
    for &k in &orders {
        num *= factorial(k);
    }
    let den = BigUint::one() << h.edge_count();
    Ok(BigRational::new(num.into(), den.into()))
}
