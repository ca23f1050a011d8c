use num_bigint::BigInt;
use num_traits::Zero;

use crate::graph::Graph;
use crate::util::{to_f64, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct ClusteringResult {
    /// Per-vertex coefficient; 0 for vertices of degree at most 1.
    pub local: Vec<f64>,
    /// Sum of local coefficients over vertices of degree > 1, divided by `n`.
    pub global: f64,
    pub global_exact: Rational,
}

/// Number of edges among the neighbours of `v`.
pub fn neighbor_edges(g: &Graph, v: usize) -> usize {
    let nb = g.neighbors(v);
    let mut count = 0;
    for (i, &a) in nb.iter().enumerate() {
        let na = g.neighbors(a);
        // both lists are sorted; count common members beyond position i
        let rest = &nb[i + 1..];
        let (mut p, mut q) = (0, 0);
        while p < rest.len() && q < na.len() {
            match rest[p].cmp(&na[q]) {
                std::cmp::Ordering::Less => p += 1,
                std::cmp::Ordering::Greater => q += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    p += 1;
                    q += 1;
                }
            }
        }
    }
    count
}

pub fn clustering(g: &Graph) -> ClusteringResult {
    let n = g.n();
    let mut local = vec![0.0; n];
    let mut total = Rational::zero();
    for (v, slot) in local.iter_mut().enumerate() {
        let d = g.degree(v);
        if d <= 1 {
            continue;
        }
        let c = Rational::new(BigInt::from(2 * neighbor_edges(g, v)), BigInt::from(d * (d - 1)));
        *slot = to_f64(&c);
        total += c;
    }
    let global_exact = total / Rational::from_integer(BigInt::from(n));
    ClusteringResult {
        local,
        global: to_f64(&global_exact),
        global_exact,
    }
}
