//! Orderings of two graphs by reliability in the limits `p → 1` and `p → 0`.
//!
//! Near `p = 1`, `1 - Rel(p) ≈ s(G) q^κ_e`: the smaller edge connectivity
//! loses, and on equal `κ_e` the graph with more minimum cuts loses. Near
//! `p = 0`, `Rel(p) ≈ ξ p^(n-1)`: on equal order the graph with fewer
//! spanning trees loses. These are limit statements and are applied
//! symbolically, never at a fixed `p`.

use std::cmp::Ordering;

use num_bigint::BigUint;

use crate::connectivity::{count_min_edge_cuts, edge_connectivity, is_connected};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::spanning_tree_count;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReliabilityOrder {
    FirstLessReliable,
    SecondLessReliable,
    /// The asymptotic rule cannot separate the two graphs.
    Undetermined,
}

impl ReliabilityOrder {
    /// Maps "smaller key is less reliable".
    fn from_keys<T: Ord>(first: T, second: T) -> Self {
        match first.cmp(&second) {
            Ordering::Less => ReliabilityOrder::FirstLessReliable,
            Ordering::Greater => ReliabilityOrder::SecondLessReliable,
            Ordering::Equal => ReliabilityOrder::Undetermined,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            ReliabilityOrder::FirstLessReliable => ReliabilityOrder::SecondLessReliable,
            ReliabilityOrder::SecondLessReliable => ReliabilityOrder::FirstLessReliable,
            ReliabilityOrder::Undetermined => ReliabilityOrder::Undetermined,
        }
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.n() < 2 || !is_connected(g) {
        return Err(Error::domain(
            "asymptotic reliability comparison needs connected graphs with at least 2 vertices",
        ));
    }
    Ok(())
}

/// Ordering for `p` close to one: by `κ_e`, then by `s(G)` (more cuts is
/// less reliable).
pub fn compare_near_one(g1: &Graph, g2: &Graph) -> Result<ReliabilityOrder> {
    require_connected(g1)?;
    require_connected(g2)?;
    let (k1, k2) = (edge_connectivity(g1)?, edge_connectivity(g2)?);
    if k1 != k2 {
        return Ok(ReliabilityOrder::from_keys(k1, k2));
    }
    let (s1, s2) = (count_min_edge_cuts(g1)?, count_min_edge_cuts(g2)?);
    Ok(ReliabilityOrder::from_keys(s2, s1))
}

/// Ordering for `p` close to zero: by spanning-tree count. Graphs of
/// different order are separated first, the larger being less reliable
/// since its leading term carries a higher power of `p`.
pub fn compare_near_zero(g1: &Graph, g2: &Graph) -> Result<ReliabilityOrder> {
    require_connected(g1)?;
    require_connected(g2)?;
    if g1.n() != g2.n() {
        return Ok(ReliabilityOrder::from_keys(g2.n(), g1.n()));
    }
    let (x1, x2): (BigUint, BigUint) = (spanning_tree_count(g1)?, spanning_tree_count(g2)?);
    Ok(ReliabilityOrder::from_keys(x1, x2))
}
