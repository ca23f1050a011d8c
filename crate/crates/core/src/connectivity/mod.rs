//! Connectedness, vertex and edge connectivity, and the number of minimum
//! disconnecting edge sets.
//!
//! Both connectivities reduce to unit-capacity max-flow computations solved
//! by BFS augmentation. Disconnected graphs report `κ_v = κ_e = 0`; the
//! complete graph `K_n` has `κ_v = n - 1` by convention.

mod flow;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::util::binomial_u128;
use flow::FlowNetwork;
use rayon::prelude::*;

/// Enumeration budget for [`count_min_edge_cuts`].
pub const MIN_CUT_ENUMERATION_BUDGET: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub connected: bool,
    pub kappa_v: usize,
    pub kappa_e: usize,
    /// Number of `κ_e`-sized disconnecting edge sets, when requested.
    pub s_count: Option<u64>,
}

pub fn is_connected(g: &Graph) -> bool {
    g.components().1 == 1
}

/// Minimum number of edges whose removal disconnects `g`.
pub fn edge_connectivity(g: &Graph) -> Result<usize> {
    if g.n() < 2 {
        return Err(Error::domain("edge connectivity needs at least 2 vertices"));
    }
    if !is_connected(g) {
        return Ok(0);
    }
    let bound = g.min_degree() as u32;
    let net = edge_network(g);
    // Any global minimum cut separates vertex 0 from some t.
    let best = (1..g.n())
        .into_par_iter()
        .map(|t| net.clone().max_flow(0, t, bound))
        .min()
        .unwrap_or(bound);
    Ok(best as usize)
}

fn edge_network(g: &Graph) -> FlowNetwork {
    let mut net = FlowNetwork::new(g.n());
    for &(u, v) in g.edges() {
        net.add_arc_pair(u, v, 1, 1);
    }
    net
}

/// Local vertex connectivity between two non-adjacent vertices: the maximum
/// number of internally vertex-disjoint `a`-`b` paths.
fn local_vertex_connectivity(g: &Graph, a: usize, b: usize, limit: u32) -> u32 {
    let n = g.n();
    let big = n as u32;
    let (vin, vout) = (|x: usize| 2 * x, |x: usize| 2 * x + 1);
    let mut net = FlowNetwork::new(2 * n);
    for x in 0..n {
        let cap = if x == a || x == b { big } else { 1 };
        net.add_arc_pair(vin(x), vout(x), cap, 0);
    }
    for &(u, v) in g.edges() {
        net.add_arc_pair(vout(u), vin(v), big, 0);
        net.add_arc_pair(vout(v), vin(u), big, 0);
    }
    net.max_flow(vout(a), vin(b), limit)
}

/// Minimum number of vertices whose removal disconnects `g` (or leaves a
/// single vertex); `n - 1` for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    if g.n() < 2 {
        return Err(Error::domain("vertex connectivity needs at least 2 vertices"));
    }
    if g.is_complete() {
        return Ok(g.n() - 1);
    }
    if !is_connected(g) {
        return Ok(0);
    }
    let degrees = g.degrees();
    let a = (0..g.n()).min_by_key(|&v| degrees[v]).unwrap();
    let delta = degrees[a] as u32;

    // Either some minimum separator misses `a` (then it separates `a` from a
    // non-neighbour) or every one contains `a` (then it separates two
    // non-adjacent neighbours of `a`).
    let mut pairs: Vec<(usize, usize)> = (0..g.n())
        .filter(|&b| b != a && !g.has_edge(a, b))
        .map(|b| (a, b))
        .collect();
    let nb = g.neighbors(a);
    for (i, &x) in nb.iter().enumerate() {
        for &y in &nb[i + 1..] {
            if !g.has_edge(x, y) {
                pairs.push((x, y));
            }
        }
    }
    let best = pairs
        .par_iter()
        .map(|&(x, y)| local_vertex_connectivity(g, x, y, delta))
        .min()
        .unwrap_or(delta);
    Ok(best.min(delta) as usize)
}

/// Counts the edge sets of size `κ_e` whose removal disconnects `g`.
///
/// Exhaustive over all `κ_e`-subsets, refused when there are more than
/// [`MIN_CUT_ENUMERATION_BUDGET`] of them.
pub fn count_min_edge_cuts(g: &Graph) -> Result<u64> {
    if g.n() < 2 {
        return Err(Error::domain("edge cuts need at least 2 vertices"));
    }
    if !is_connected(g) {
        return Err(Error::domain("minimum edge cuts are counted on connected graphs"));
    }
    let k = edge_connectivity(g)?;
    let m = g.m();
    let total = binomial_u128(m as u64, k as u64);
    if total > MIN_CUT_ENUMERATION_BUDGET {
        return Err(Error::capacity(format!(
            "C({m}, {k}) = {total} edge subsets exceeds the enumeration budget"
        )));
    }
    let mut removed = vec![false; m];
    let mut idx: Vec<usize> = (0..k).collect();
    let mut count = 0u64;
    loop {
        idx.iter().for_each(|&i| removed[i] = true);
        if !connected_without(g, &removed) {
            count += 1;
        }
        idx.iter().for_each(|&i| removed[i] = false);
        if !next_combination(&mut idx, m) {
            break;
        }
    }
    Ok(count)
}

/// Advances `idx` to the next k-combination of `0..m` in lexicographic order.
pub(crate) fn next_combination(idx: &mut [usize], m: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < m - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn connected_without(g: &Graph, removed: &[bool]) -> bool {
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] && !removed[g.edge_index(u, w).unwrap()] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == g.n()
}

/// Connectedness plus both connectivities; `s(G)` only when `with_cut_count`
/// is set and the graph is connected. Graphs with one vertex report zeros.
pub fn connectivity_report(g: &Graph, with_cut_count: bool) -> Result<ConnectivityReport> {
    let connected = is_connected(g);
    if g.n() < 2 {
        return Ok(ConnectivityReport {
            connected,
            kappa_v: 0,
            kappa_e: 0,
            s_count: None,
        });
    }
    let s_count = if with_cut_count && connected {
        Some(count_min_edge_cuts(g)?)
    } else {
        None
    };
    Ok(ConnectivityReport {
        connected,
        kappa_v: vertex_connectivity(g)?,
        kappa_e: edge_connectivity(g)?,
        s_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn fam(f: Family, n: usize) -> Graph {
        generate(f, n).unwrap()
    }

    #[test]
    fn connectedness() {
        assert!(is_connected(&fam(Family::Cycle, 4)));
        assert!(!is_connected(&fam(Family::Empty, 4)));
        assert!(is_connected(&fam(Family::Empty, 1)));
    }

    #[test]
    fn four_vertex_connectivities() {
        let cases = [
            (Family::Complete, 3, 3),
            (Family::Cycle, 2, 2),
            (Family::Star, 1, 1),
            (Family::Path, 1, 1),
            (Family::Empty, 0, 0),
        ];
        for (f, kv, ke) in cases {
            let g = fam(f, 4);
            assert_eq!(vertex_connectivity(&g).unwrap(), kv, "{f:?}");
            assert_eq!(edge_connectivity(&g).unwrap(), ke, "{f:?}");
        }
    }

    #[test]
    fn cycle_minus_edge_is_path() {
        let g = fam(Family::Cycle, 4).without_edge(3, 0).unwrap();
        assert_eq!(edge_connectivity(&g).unwrap(), 1);
    }

    #[test]
    fn small_orders_are_rejected() {
        let g = fam(Family::Empty, 1);
        assert!(matches!(edge_connectivity(&g), Err(Error::Domain(_))));
        assert!(matches!(vertex_connectivity(&g), Err(Error::Domain(_))));
        assert_eq!(vertex_connectivity(&fam(Family::Complete, 2)).unwrap(), 1);
    }

    #[test]
    fn min_cut_counts() {
        // K4: the four vertex stars; C4: every pair of cycle edges.
        assert_eq!(count_min_edge_cuts(&fam(Family::Complete, 4)).unwrap(), 4);
        assert_eq!(count_min_edge_cuts(&fam(Family::Cycle, 4)).unwrap(), 6);
        for n in 2..8 {
            let tree = fam(Family::Path, n);
            assert_eq!(count_min_edge_cuts(&tree).unwrap(), tree.m() as u64);
        }
        assert!(matches!(
            count_min_edge_cuts(&fam(Family::Empty, 4)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn min_cut_count_respects_budget() {
        // K_30 has κ_e = 29 and C(435, 29) subsets.
        assert!(matches!(
            count_min_edge_cuts(&fam(Family::Complete, 30)),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn two_triangles_sharing_a_vertex() {
        // bowtie: cut vertex 2, but edge connectivity 2
        let g = Graph::new(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(vertex_connectivity(&g).unwrap(), 1);
        assert_eq!(edge_connectivity(&g).unwrap(), 2);
    }

    #[test]
    fn combinations_enumerate_all() {
        let mut idx = vec![0, 1];
        let mut seen = 1;
        while next_combination(&mut idx, 5) {
            seen += 1;
        }
        assert_eq!(seen, 10);
        let mut empty: Vec<usize> = vec![];
        assert!(!next_combination(&mut empty, 3));
    }
}
