//! Deletion–contraction over an internal multigraph.
//!
//! Parallel edges are kept as bundles with a multiplicity. A bundle of `k`
//! edges survives with probability `1 - q^k`, so
//!
//! ```text
//! Rel(G) = (1 - q^k) · Rel(G / e) + q^k · Rel(G - e)
//! ```
//!
//! All polynomials are kept homogeneous in `(p, q)`: a polynomial for a
//! multigraph with `d` edges stores the coefficient of `q^i p^(d-i)` at
//! index `i`, so the root result is exactly the vector `F_0..F_m`. In this
//! basis `1 - q^k` reads `(p + q)^k - q^k`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
struct Homogeneous(Vec<BigUint>);

impl Homogeneous {
    fn zero(degree: usize) -> Self {
        Homogeneous(vec![BigUint::zero(); degree + 1])
    }

    fn one() -> Self {
        Homogeneous(vec![BigUint::one()])
    }

    /// `(p + q)^k - q^k`: bundle of `k` edges survives.
    fn survive(k: usize) -> Self {
        let mut c = binomial_row(k);
        c[k] = BigUint::zero();
        Homogeneous(c)
    }

    /// `q^k`: all `k` edges of the bundle fail.
    fn fail(k: usize) -> Self {
        let mut c = vec![BigUint::zero(); k + 1];
        c[k] = BigUint::one();
        Homogeneous(c)
    }

    fn mul(&self, other: &Homogeneous) -> Homogeneous {
        let mut out = vec![BigUint::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Homogeneous(out)
    }

    fn add(mut self, other: &Homogeneous) -> Homogeneous {
        debug_assert_eq!(self.0.len(), other.0.len());
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
        self
    }
}

fn binomial_row(k: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for _ in 0..k {
        let mut next = vec![BigUint::one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row
}

/// Loop-free multigraph; `adj[v]` maps each neighbour to the bundle size.
#[derive(Debug, Clone)]
struct Multigraph {
    adj: Vec<BTreeMap<usize, usize>>,
    alive: Vec<bool>,
    vertices: usize,
    edges: usize,
}

impl Multigraph {
    fn from_graph(g: &Graph) -> Self {
        let mut adj = vec![BTreeMap::new(); g.n()];
        for &(u, v) in g.edges() {
            adj[u].insert(v, 1);
            adj[v].insert(u, 1);
        }
        Multigraph {
            adj,
            alive: vec![true; g.n()],
            vertices: g.n(),
            edges: g.m(),
        }
    }

    fn first_alive(&self) -> usize {
        self.alive.iter().position(|&a| a).unwrap()
    }

    /// Whether the alive vertices are connected, optionally ignoring the
    /// bundle `{skip_u, skip_v}`.
    fn connected_without(&self, skip: Option<(usize, usize)>) -> bool {
        let start = self.first_alive();
        let mut seen = vec![false; self.adj.len()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in self.adj[u].keys() {
                if skip == Some((u, w)) || skip == Some((w, u)) {
                    continue;
                }
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.vertices
    }

    fn delete_bundle(&mut self, u: usize, v: usize) -> usize {
        let k = self.adj[u].remove(&v).unwrap();
        self.adj[v].remove(&u);
        self.edges -= k;
        k
    }

    /// Contracts the bundle `{u, v}` into `u`, dropping the bundle itself.
    fn contract(&mut self, u: usize, v: usize) {
        self.delete_bundle(u, v);
        let moved = std::mem::take(&mut self.adj[v]);
        for (w, k) in moved {
            self.adj[w].remove(&v);
            *self.adj[w].entry(u).or_insert(0) += k;
            *self.adj[u].entry(w).or_insert(0) += k;
        }
        self.alive[v] = false;
        self.vertices -= 1;
    }
}

struct Recursion {
    nodes: u64,
    budget: u64,
}

impl Recursion {
    fn rel(&mut self, mut g: Multigraph) -> Result<Homogeneous> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::capacity(format!(
                "deletion-contraction exceeded {} recursion nodes; use Monte Carlo estimation",
                self.budget
            )));
        }
        if g.vertices == 1 {
            return Ok(Homogeneous::one());
        }
        if !g.connected_without(None) {
            return Ok(Homogeneous::zero(g.edges));
        }
        // Pendant bundles are bridges: strip them without branching.
        let mut factor = Homogeneous::one();
        loop {
            let pendant = (0..g.adj.len()).find(|&v| g.alive[v] && g.adj[v].len() == 1);
            let Some(v) = pendant else { break };
            let u = *g.adj[v].keys().next().unwrap();
            let k = g.adj[v][&u];
            g.contract(u, v);
            factor = factor.mul(&Homogeneous::survive(k));
            if g.vertices == 1 {
                return Ok(factor);
            }
        }
        // Branch on a bundle at a vertex of fewest neighbours.
        let v = (0..g.adj.len())
            .filter(|&v| g.alive[v])
            .min_by_key(|&v| g.adj[v].len())
            .unwrap();
        let u = *g.adj[v].keys().next().unwrap();
        let k = g.adj[v][&u];
        let bridge = !g.connected_without(Some((u, v)));

        let mut contracted = g.clone();
        contracted.contract(u, v);
        let mut result = Homogeneous::survive(k).mul(&self.rel(contracted)?);
        if !bridge {
            let mut deleted = g;
            deleted.delete_bundle(u, v);
            result = result.add(&Homogeneous::fail(k).mul(&self.rel(deleted)?));
        }
        Ok(factor.mul(&result))
    }
}

/// `F_0..F_m` by deletion–contraction, failing with a capacity error once
/// more than `node_budget` recursion nodes have been visited.
pub fn coefficients_by_contraction(g: &Graph, node_budget: u64) -> Result<Vec<BigUint>> {
    let mut rec = Recursion {
        nodes: 0,
        budget: node_budget,
    };
    let h = rec.rel(Multigraph::from_graph(g))?;
    debug_assert_eq!(h.0.len(), g.m() + 1);
    Ok(h.0)
}
