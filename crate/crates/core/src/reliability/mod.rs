//! All-terminal reliability polynomial.
//!
//! Each edge survives independently with probability `p = 1 - q`.
//! `Rel(p)` is the probability that the surviving edges connect the graph:
//!
//! ```text
//! Rel(p) = Σ_{i=0..m} F_i q^i p^(m-i)
//! ```
//!
//! where `F_i` counts the sets of `i` edges whose removal leaves the graph
//! connected. Coefficients are exact integers, computed by subset
//! enumeration for up to 24 edges and by deletion–contraction beyond that.

mod compare;
mod contraction;
mod enumerate;
mod monte_carlo;

pub use compare::{compare_near_one, compare_near_zero, ReliabilityOrder};
pub use contraction::{coefficients_by_contraction, DEFAULT_NODE_BUDGET};
pub use enumerate::{coefficients_by_enumeration, MAX_ENUMERATION_EDGES};
pub use monte_carlo::{reliability_monte_carlo, MonteCarloEstimate};

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::util::{binomial_u128, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReliabilityPolynomial {
    coeffs: Vec<BigUint>,
}

impl ReliabilityPolynomial {
    pub fn from_coefficients(coeffs: Vec<BigUint>) -> Self {
        assert!(!coeffs.is_empty(), "a reliability polynomial has at least F_0");
        ReliabilityPolynomial { coeffs }
    }

    /// `F_0..F_m`.
    pub fn coefficients(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Edge count of the source graph.
    pub fn m(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients `a_k` of `Rel(p) = Σ a_k p^k`.
    pub fn power_basis(&self) -> Vec<BigInt> {
        // q^i p^(m-i) = Σ_j C(i, j) (-1)^j p^(m-i+j)
        let m = self.m();
        let mut out = vec![BigInt::zero(); m + 1];
        for (i, f) in self.coeffs.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let f = BigInt::from(f.clone());
            for j in 0..=i {
                let c = BigInt::from(binomial_u128(i as u64, j as u64)) * &f;
                if j % 2 == 0 {
                    out[m - i + j] += c;
                } else {
                    out[m - i + j] -= c;
                }
            }
        }
        out
    }

    /// Evaluates `Rel(p)`. All terms are non-negative, so Horner is run in
    /// whichever of `q/p` or `p/q` is at most one.
    pub fn eval(&self, p: f64) -> Result<f64> {
        check_probability(p)?;
        let q = 1.0 - p;
        let m = self.m() as i32;
        let f: Vec<f64> = self
            .coeffs
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
            .collect();
        if p >= 0.5 {
            let t = q / p;
            let acc = f.iter().rev().fold(0.0, |acc, &c| acc * t + c);
            Ok(acc * p.powi(m))
        } else {
            let s = p / q;
            let acc = f.iter().fold(0.0, |acc, &c| acc * s + c);
            Ok(acc * q.powi(m))
        }
    }

    /// Exact value at a rational `p`.
    pub fn eval_exact(&self, p: &Rational) -> Result<Rational> {
        let zero = Rational::zero();
        let one = Rational::from_integer(BigInt::from(1));
        if p < &zero || p > &one {
            return Err(Error::domain("probability must lie in [0, 1]"));
        }
        let q = &one - p;
        let m = self.m();
        let mut sum = zero;
        for (i, f) in self.coeffs.iter().enumerate() {
            let term = Rational::from_integer(BigInt::from(f.clone()))
                * num_traits::pow(q.clone(), i)
                * num_traits::pow(p.clone(), m - i);
            sum += term;
        }
        Ok(sum)
    }

    /// CSV with header `p,rel` and `k + 1` evenly spaced samples on
    /// `[0, 1]`, six decimals.
    pub fn curve_csv(&self, k: usize) -> Result<String> {
        if k == 0 {
            return Err(Error::domain("grid needs at least one interval"));
        }
        let mut out = String::from("p,rel\n");
        for i in 0..=k {
            let p = i as f64 / k as f64;
            out.push_str(&csv_row(p, self.eval(p)?));
        }
        Ok(out)
    }
}

pub(crate) fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::domain(format!("probability {p} outside [0, 1]")));
    }
    Ok(())
}

/// One `p,rel` CSV line in six-decimal fixed point.
pub fn csv_row(p: f64, rel: f64) -> String {
    format!("{p:.6},{rel:.6}\n")
}

/// Exact reliability coefficients: enumeration for `m ≤ 24`, otherwise
/// deletion–contraction within [`DEFAULT_NODE_BUDGET`].
pub fn reliability_coefficients(g: &Graph) -> Result<ReliabilityPolynomial> {
    let coeffs = if g.m() <= MAX_ENUMERATION_EDGES {
        coefficients_by_enumeration(g)?
    } else {
        coefficients_by_contraction(g, DEFAULT_NODE_BUDGET)?
    };
    Ok(ReliabilityPolynomial { coeffs })
}

pub fn reliability_at(g: &Graph, p: f64) -> Result<f64> {
    check_probability(p)?;
    reliability_coefficients(g)?.eval(p)
}
