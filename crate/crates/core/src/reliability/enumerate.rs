//! Exact reliability coefficients by walking the 2^m keep/remove decisions.
//!
//! The walk keeps a union-find with rollback so each decision costs one
//! union. Once the kept edges already connect the graph, every completion
//! of the remaining decisions is connected and is counted in closed form;
//! once too few edges remain to join the components, the branch is dropped.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::util::binomial_u128;

pub const MAX_ENUMERATION_EDGES: usize = 24;

/// Union-find with union by size and an undo log; no path compression.
#[derive(Debug, Clone)]
pub(crate) struct RollbackUnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<Option<(usize, usize)>>,
    components: usize,
}

impl RollbackUnionFind {
    pub(crate) fn new(n: usize) -> Self {
        RollbackUnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
            components: n,
        }
    }

    pub(crate) fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Records one history entry whether or not a merge happened.
    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        self.history.push(Some((ra, rb)));
    }

    pub(crate) fn undo(&mut self) {
        if let Some(Some((ra, rb))) = self.history.pop() {
            self.parent[rb] = rb;
            self.size[ra] -= self.size[rb];
            self.components += 1;
        }
    }

    pub(crate) fn components(&self) -> usize {
        self.components
    }
}

struct Walk<'a> {
    edges: &'a [(usize, usize)],
    uf: RollbackUnionFind,
    binom: Vec<Vec<u128>>,
    counts: Vec<u128>,
}

impl Walk<'_> {
    fn visit(&mut self, k: usize, removed: usize) {
        let remaining = self.edges.len() - k;
        let comps = self.uf.components();
        if comps == 1 {
            for j in 0..=remaining {
                self.counts[removed + j] += self.binom[remaining][j];
            }
            return;
        }
        if comps - 1 > remaining {
            return;
        }
        let (u, v) = self.edges[k];
        self.uf.union(u, v);
        self.visit(k + 1, removed);
        self.uf.undo();
        self.visit(k + 1, removed + 1);
    }
}

/// `F_i` for `i = 0..=m` by exhaustive enumeration; refused above
/// [`MAX_ENUMERATION_EDGES`] edges.
pub fn coefficients_by_enumeration(g: &Graph) -> Result<Vec<BigUint>> {
    let m = g.m();
    if m > MAX_ENUMERATION_EDGES {
        return Err(Error::capacity(format!(
            "subset enumeration handles at most {MAX_ENUMERATION_EDGES} edges, graph has {m}"
        )));
    }
    let binom = (0..=m as u64)
        .map(|r| (0..=r).map(|j| binomial_u128(r, j)).collect())
        .collect();
    let mut walk = Walk {
        edges: g.edges(),
        uf: RollbackUnionFind::new(g.n()),
        binom,
        counts: vec![0; m + 1],
    };
    walk.visit(0, 0);
    Ok(walk.counts.into_iter().map(BigUint::from).collect())
}
