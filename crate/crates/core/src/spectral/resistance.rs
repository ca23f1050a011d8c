//! Effective resistance with every edge a unit resistor.
//!
//! Injecting a unit current at `a` and extracting it at `b` gives potentials
//! `v` with `L v = e_a - e_b`. Grounding one vertex of the component removes
//! the null space of `L`; the reduced matrix is symmetric positive definite
//! and is factored once by Cholesky. `R_ab = v_a - v_b`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::jacobi::DenseMatrix;
use super::spectrum;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_DENSE_ORDER};
use crate::util::Rational;

/// Largest order for which [`effective_graph_resistance_exact`] runs.
pub const EXACT_RESISTANCE_MAX_ORDER: usize = 64;

/// Relative agreement required between the pairwise and spectral totals.
pub const TOTAL_AGREEMENT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct ResistanceResult {
    n: usize,
    pairwise: Vec<f64>,
    /// Sum of `R_ab` over unordered pairs; infinite for disconnected graphs.
    pub total: f64,
    /// `n · Σ_{i≥2} 1/λ_i`.
    pub spectral_total: f64,
}

impl ResistanceResult {
    /// `R_ab`; infinite when `a` and `b` lie in different components.
    pub fn pair(&self, a: usize, b: usize) -> f64 {
        self.pairwise[a * self.n + b]
    }

    pub fn totals_agree(&self) -> bool {
        if self.total.is_infinite() || self.spectral_total.is_infinite() {
            return self.total == self.spectral_total;
        }
        (self.total - self.spectral_total).abs() <= TOTAL_AGREEMENT_TOL * self.total.abs()
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Cholesky {
    n: usize,
    l: Vec<f64>,
}

impl Cholesky {
    pub(crate) fn factor(a: &DenseMatrix) -> Result<Self> {
        let n = a.order();
        let mut l = vec![0.0; n * n];
        for j in 0..n {
            let mut d = a.get(j, j);
            for k in 0..j {
                d -= l[j * n + k] * l[j * n + k];
            }
            if d <= 0.0 || !d.is_finite() {
                return Err(Error::numeric("reduced Laplacian is not positive definite"));
            }
            let d = d.sqrt();
            l[j * n + j] = d;
            for i in j + 1..n {
                let mut s = a.get(i, j);
                for k in 0..j {
                    s -= l[i * n + k] * l[j * n + k];
                }
                l[i * n + j] = s / d;
            }
        }
        Ok(Cholesky { n, l })
    }

    pub(crate) fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut y = b.to_vec();
        for i in 0..n {
            for k in 0..i {
                y[i] -= self.l[i * n + k] * y[k];
            }
            y[i] /= self.l[i * n + i];
        }
        for i in (0..n).rev() {
            for k in i + 1..n {
                y[i] -= self.l[k * n + i] * y[k];
            }
            y[i] /= self.l[i * n + i];
        }
        y
    }
}

/// Laplacian of the subgraph induced by `members` with `ground` deleted.
/// Returns the matrix and each member's row (None for the ground).
fn reduced_laplacian(g: &Graph, members: &[usize], ground: usize) -> (DenseMatrix, Vec<Option<usize>>) {
    let mut pos = vec![None; g.n()];
    let mut next = 0;
    for &v in members {
        if v != ground {
            pos[v] = Some(next);
            next += 1;
        }
    }
    let mut mat = DenseMatrix::zeros(next);
    for &v in members {
        if let Some(i) = pos[v] {
            mat.set(i, i, g.degree(v) as f64);
            for &w in g.neighbors(v) {
                if let Some(j) = pos[w] {
                    mat.set(i, j, -1.0);
                }
            }
        }
    }
    (mat, pos)
}

fn component_members(g: &Graph, v: usize) -> Vec<usize> {
    let (comp, _) = g.components();
    (0..g.n()).filter(|&u| comp[u] == comp[v]).collect()
}

/// Effective resistance between `a` and `b`. Returns infinity when they lie
/// in different components. The component's highest-index vertex is
/// grounded.
pub fn effective_resistance(g: &Graph, a: usize, b: usize) -> Result<f64> {
    if a == b {
        return Err(Error::domain("effective resistance needs two distinct vertices"));
    }
    crate::graph::normalize(g.n(), a, b, None)?;
    let members = component_members(g, a);
    if members.binary_search(&b).is_err() {
        return Ok(f64::INFINITY);
    }
    effective_resistance_grounded(g, a, b, *members.last().unwrap())
}

pub(crate) fn effective_resistance_grounded(g: &Graph, a: usize, b: usize, ground: usize) -> Result<f64> {
    if g.n() > MAX_DENSE_ORDER {
        return Err(Error::capacity(format!(
            "resistance solver is limited to {MAX_DENSE_ORDER} vertices"
        )));
    }
    let members = component_members(g, a);
    let (mat, pos) = reduced_laplacian(g, &members, ground);
    let chol = Cholesky::factor(&mat)?;
    let mut rhs = vec![0.0; mat.order()];
    if let Some(i) = pos[a] {
        rhs[i] += 1.0;
    }
    if let Some(i) = pos[b] {
        rhs[i] -= 1.0;
    }
    let v = chol.solve(&rhs);
    let potential = |x: usize| pos[x].map_or(0.0, |i| v[i]);
    Ok(potential(a) - potential(b))
}

/// All pairwise effective resistances and the effective graph resistance,
/// both as the pairwise sum and from the Laplacian spectrum.
pub fn effective_graph_resistance(g: &Graph) -> Result<ResistanceResult> {
    let n = g.n();
    if n > MAX_DENSE_ORDER {
        return Err(Error::capacity(format!(
            "resistance solver is limited to {MAX_DENSE_ORDER} vertices"
        )));
    }
    let mut pairwise = vec![f64::INFINITY; n * n];
    let (comp, count) = g.components();
    for c in 0..count {
        let members: Vec<usize> = (0..n).filter(|&v| comp[v] == c).collect();
        let ground = *members.last().unwrap();
        let (mat, pos) = reduced_laplacian(g, &members, ground);
        let k = mat.order();
        let chol = Cholesky::factor(&mat)?;
        // columns of the inverse of the reduced Laplacian
        let inverse: Vec<Vec<f64>> = (0..k)
            .into_par_iter()
            .map(|j| {
                let mut e = vec![0.0; k];
                e[j] = 1.0;
                chol.solve(&e)
            })
            .collect();
        let entry = |x: usize, y: usize| match (pos[x], pos[y]) {
            (Some(i), Some(j)) => inverse[j][i],
            _ => 0.0,
        };
        for &x in &members {
            for &y in &members {
                let r = if x == y {
                    0.0
                } else {
                    entry(x, x) + entry(y, y) - 2.0 * entry(x, y)
                };
                pairwise[x * n + y] = r;
            }
        }
    }
    let total = if count == 1 {
        let mut s = 0.0;
        for a in 0..n {
            for b in a + 1..n {
                s += pairwise[a * n + b];
            }
        }
        s
    } else {
        f64::INFINITY
    };
    let spectral_total = if n == 1 {
        0.0
    } else {
        let sp = spectrum(g)?;
        if sp.zero_multiplicity > 1 {
            f64::INFINITY
        } else {
            n as f64 * sp.eigenvalues[1..].iter().map(|l| 1.0 / l).sum::<f64>()
        }
    };
    Ok(ResistanceResult {
        n,
        pairwise,
        total,
        spectral_total,
    })
}

/// Exact effective graph resistance in rational arithmetic; `None` when the
/// graph is disconnected.
///
/// With `M` the inverse of the Laplacian grounded at the last vertex (and
/// zero potential there), `R_ab = M_aa + M_bb - 2 M_ab`, which sums over all
/// pairs to `n · tr(M) - Σ_ij M_ij`.
pub fn effective_graph_resistance_exact(g: &Graph) -> Result<Option<Rational>> {
    let n = g.n();
    if n > EXACT_RESISTANCE_MAX_ORDER {
        return Err(Error::capacity(format!(
            "exact resistance is limited to {EXACT_RESISTANCE_MAX_ORDER} vertices"
        )));
    }
    if g.components().1 != 1 {
        return Ok(None);
    }
    let k = n - 1;
    let int = |x: i64| Rational::from_integer(BigInt::from(x));
    // augmented [L_reduced | I], reduced to [I | M] by Gauss-Jordan
    let mut a: Vec<Vec<Rational>> = (0..k)
        .map(|i| {
            let mut row = vec![Rational::zero(); 2 * k];
            row[i] = int(g.degree(i) as i64);
            row[k + i] = Rational::one();
            for &w in g.neighbors(i) {
                if w < k {
                    row[w] = int(-1);
                }
            }
            row
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::numeric("singular reduced Laplacian"))?;
        a.swap(col, pivot);
        let inv = Rational::one() / a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
    }
    let mut trace = Rational::zero();
    let mut total = Rational::zero();
    for (i, row) in a.iter().enumerate() {
        trace += &row[k + i];
        for x in &row[k..] {
            total += x;
        }
    }
    Ok(Some(int(n as i64) * trace - total))
}
