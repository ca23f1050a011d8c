use std::collections::VecDeque;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::util::{to_f64, Rational};

/// All-pairs hop distances with the derived distance measures.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceSummary {
    n: usize,
    dist: Vec<Option<u32>>,
    /// Number of unordered pairs at each finite distance, indexed by distance.
    histogram: Vec<u64>,
    unreachable_pairs: u64,
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceSummary {
    let n = g.n();
    let mut dist = vec![None; n * n];
    let mut histogram = vec![0u64];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = Some(0);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u].unwrap();
            for &w in g.neighbors(u) {
                if row[w].is_none() {
                    row[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        for d in row[s + 1..].iter().flatten() {
            let d = *d as usize;
            if histogram.len() <= d {
                histogram.resize(d + 1, 0);
            }
            histogram[d] += 1;
        }
    }
    let pairs = (n * (n - 1) / 2) as u64;
    let reachable: u64 = histogram.iter().sum();
    DistanceSummary {
        n,
        dist,
        histogram,
        unreachable_pairs: pairs - reachable,
    }
}

impl DistanceSummary {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Hop distance between `i` and `j`; `None` when unreachable.
    pub fn distance(&self, i: usize, j: usize) -> Option<u32> {
        self.dist[i * self.n + j]
    }

    pub fn is_connected(&self) -> bool {
        self.unreachable_pairs == 0
    }

    /// Sum of distances over unordered pairs; `None` when some pair is
    /// unreachable.
    pub fn wiener_index(&self) -> Option<u64> {
        self.is_connected()
            .then(|| self.histogram.iter().enumerate().map(|(d, &c)| d as u64 * c).sum())
    }

    /// Largest distance; `None` encodes an infinite diameter.
    pub fn diameter(&self) -> Result<Option<u32>> {
        self.require_pairs()?;
        Ok(self.is_connected().then(|| (self.histogram.len() - 1) as u32))
    }

    /// Exact average distance over all unordered pairs; `None` when infinite.
    pub fn avg_distance(&self) -> Result<Option<Rational>> {
        let pairs = self.require_pairs()?;
        Ok(self
            .wiener_index()
            .map(|w| Rational::new(BigInt::from(w), BigInt::from(pairs))))
    }

    pub fn avg_distance_f64(&self) -> Result<f64> {
        Ok(self.avg_distance()?.map_or(f64::INFINITY, |r| to_f64(&r)))
    }

    /// Exact efficiency: average reciprocal distance, unreachable pairs
    /// contributing zero.
    pub fn efficiency(&self) -> Result<Rational> {
        let pairs = self.require_pairs()?;
        let mut sum = Rational::from_integer(BigInt::from(0));
        for (d, &count) in self.histogram.iter().enumerate().skip(1) {
            sum += Rational::new(BigInt::from(count), BigInt::from(d));
        }
        Ok(sum / Rational::from_integer(BigInt::from(pairs)))
    }

    pub fn efficiency_f64(&self) -> Result<f64> {
        Ok(to_f64(&self.efficiency()?))
    }

    fn require_pairs(&self) -> Result<u64> {
        if self.n < 2 {
            return Err(Error::domain("distance averages need at least 2 vertices"));
        }
        Ok((self.n * (self.n - 1) / 2) as u64)
    }
}
