//! Laplacian spectrum, algebraic connectivity, spanning trees and effective
//! resistance.
//!
//! The Laplacian `L = Δ - A` of a simple graph is symmetric positive
//! semidefinite with zero row sums, so its eigenvalues are real,
//! non-negative, and the smallest is 0. The multiplicity of 0 equals the
//! number of connected components.

mod jacobi;
mod matrix_tree;
mod resistance;

pub use jacobi::{symmetric_eigenvalues, DenseMatrix, MAX_SWEEPS};
pub use matrix_tree::spanning_tree_count;
pub use resistance::{
    effective_graph_resistance, effective_graph_resistance_exact, effective_resistance, ResistanceResult,
    EXACT_RESISTANCE_MAX_ORDER, TOTAL_AGREEMENT_TOL,
};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_DENSE_ORDER};

/// Dense graph Laplacian: degrees on the diagonal, `-1` for each edge.
#[derive(Debug, Clone, PartialEq)]
pub struct Laplacian(DenseMatrix);

impl Laplacian {
    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0.get(i, j)
    }

    pub fn row(&self, i: usize) -> &[f64] {
        self.0.row(i)
    }

    pub fn as_matrix(&self) -> &DenseMatrix {
        &self.0
    }
}

pub fn laplacian(g: &Graph) -> Laplacian {
    let mut m = DenseMatrix::zeros(g.n());
    for v in 0..g.n() {
        m.set(v, v, g.degree(v) as f64);
    }
    for &(u, v) in g.edges() {
        m.set(u, v, -1.0);
        m.set(v, u, -1.0);
    }
    Laplacian(m)
}

/// Sorted Laplacian eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// `λ_1 ≤ … ≤ λ_n`, with `λ_1 = 0` exactly.
    pub eigenvalues: Vec<f64>,
    /// Number of eigenvalues clamped to zero.
    pub zero_multiplicity: usize,
}

impl Spectrum {
    /// `λ_2`; 0 for a single vertex.
    pub fn algebraic_connectivity(&self) -> f64 {
        self.eigenvalues.get(1).copied().unwrap_or(0.0)
    }
}

/// Zero-clamping tolerance `1e-10 · n · Δ_max`.
pub fn zero_tolerance(g: &Graph) -> f64 {
    1e-10 * g.n() as f64 * g.max_degree() as f64
}

pub fn spectrum(g: &Graph) -> Result<Spectrum> {
    if g.n() > MAX_DENSE_ORDER {
        return Err(Error::capacity(format!(
            "dense eigensolver is limited to {MAX_DENSE_ORDER} vertices"
        )));
    }
    let mut eigenvalues = symmetric_eigenvalues(laplacian(g).0)?;
    eigenvalues.sort_by(f64::total_cmp);
    let tol = zero_tolerance(g);
    if eigenvalues[0] < -tol || eigenvalues[0] > tol {
        return Err(Error::numeric(format!(
            "smallest Laplacian eigenvalue {} is not zero within {tol}",
            eigenvalues[0]
        )));
    }
    let mut zero_multiplicity = 0;
    for x in eigenvalues.iter_mut() {
        if x.abs() <= tol {
            *x = 0.0;
            zero_multiplicity += 1;
        }
    }
    Ok(Spectrum {
        eigenvalues,
        zero_multiplicity,
    })
}

/// Second-smallest Laplacian eigenvalue; zero iff `g` is disconnected.
pub fn algebraic_connectivity(g: &Graph) -> Result<f64> {
    if g.n() < 2 {
        return Err(Error::domain("algebraic connectivity needs at least 2 vertices"));
    }
    Ok(spectrum(g)?.algebraic_connectivity())
}

/// `(1/n) ∏_{i≥2} λ_i`, the floating-point companion of
/// [`spanning_tree_count`].
pub fn spanning_tree_count_spectral(g: &Graph) -> Result<f64> {
    if g.n() < 2 {
        return Err(Error::domain("spectral tree count needs at least 2 vertices"));
    }
    let sp = spectrum(g)?;
    Ok(sp.eigenvalues[1..].iter().product::<f64>() / g.n() as f64)
}
