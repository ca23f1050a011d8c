use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::check_probability;
use super::enumerate::RollbackUnionFind;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloEstimate {
    pub estimate: f64,
    /// 95% normal-approximation half-width, `1.96 · sqrt(r(1-r)/trials)`.
    pub half_width: f64,
    pub trials: u64,
}

/// Estimates `Rel(p)` by sampling random subgraphs.
///
/// Trial `t` draws from a generator seeded with `seed + t`, so the result is
/// fixed by `(seed, trials)` regardless of how the trials are scheduled.
pub fn reliability_monte_carlo(g: &Graph, p: f64, trials: u64, seed: u64) -> Result<MonteCarloEstimate> {
    check_probability(p)?;
    if trials == 0 {
        return Err(Error::domain("Monte Carlo needs at least one trial"));
    }
    let hits: u64 = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t));
            let mut uf = RollbackUnionFind::new(g.n());
            for &(u, v) in g.edges() {
                if rng.gen::<f64>() < p {
                    uf.union(u, v);
                }
            }
            u64::from(uf.components() == 1)
        })
        .sum();
    let r = hits as f64 / trials as f64;
    Ok(MonteCarloEstimate {
        estimate: r,
        half_width: 1.96 * (r * (1.0 - r) / trials as f64).sqrt(),
        trials,
    })
}
