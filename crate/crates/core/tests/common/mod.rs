//! Brute-force oracles and random graph sources shared by the integration
//! tests. Nothing here calls the library's algorithms; graphs are only read
//! through `n()` and `edges()`.

#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use robustnet::Graph;

pub type Q = BigRational;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected graph: a random spanning tree plus each remaining pair with
/// probability `density`.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push((order[i], parent));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Random connected graph with `lo..=hi` vertices and random density.
pub fn random_connected_in(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Graph {
    let n = rng.gen_range(lo..=hi);
    let density = rng.gen_range(0.0..0.6);
    random_connected(rng, n, density)
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; g.n()]; g.n()];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Floyd–Warshall hop distances; `None` when unreachable.
pub fn floyd(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.n();
    let mut d = vec![vec![None; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = Some(0);
    }
    for &(u, v) in g.edges() {
        d[u][v] = Some(1);
        d[v][u] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Connectivity of the vertices not in `removed_vertices`, using only the
/// edges whose bit is clear in `removed_edges`.
pub fn connected_masked(g: &Graph, removed_vertices: u64, removed_edges: u64) -> bool {
    let n = g.n();
    let alive: Vec<usize> = (0..n).filter(|&v| removed_vertices >> v & 1 == 0).collect();
    if alive.len() <= 1 {
        return true;
    }
    // repeated relaxation instead of a queue
    let mut reached = 1u64 << alive[0];
    loop {
        let before = reached;
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if removed_edges >> i & 1 == 1 || removed_vertices >> u & 1 == 1 || removed_vertices >> v & 1 == 1 {
                continue;
            }
            if reached >> u & 1 == 1 || reached >> v & 1 == 1 {
                reached |= 1 << u | 1 << v;
            }
        }
        if reached == before {
            break;
        }
    }
    alive.iter().all(|&v| reached >> v & 1 == 1)
}

/// Smallest vertex set whose removal disconnects; `n - 1` for complete
/// graphs, 0 for disconnected ones.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if !connected_masked(g, 0, 0) {
        return 0;
    }
    let mut best = n - 1;
    for mask in 0u64..(1 << n) {
        let k = mask.count_ones() as usize;
        if k < best && n - k >= 2 && !connected_masked(g, mask, 0) {
            best = k;
        }
    }
    best
}

/// Edge-removal census: `F_i` (connected after removing `i` edges), the
/// edge connectivity and the number of minimum disconnecting sets.
pub struct EdgeCensus {
    pub f: Vec<BigUint>,
    pub kappa_e: usize,
    pub min_cuts: u64,
}

pub fn edge_census(g: &Graph) -> EdgeCensus {
    let m = g.m();
    assert!(m <= 24, "oracle limited to 24 edges");
    let mut f = vec![0u64; m + 1];
    let mut cut_sizes = vec![0u64; m + 1];
    for mask in 0u64..(1 << m) {
        let k = mask.count_ones() as usize;
        if connected_masked(g, 0, mask) {
            f[k] += 1;
        } else {
            cut_sizes[k] += 1;
        }
    }
    let kappa_e = cut_sizes.iter().position(|&c| c > 0).unwrap_or(0);
    EdgeCensus {
        f: f.into_iter().map(BigUint::from).collect(),
        kappa_e,
        min_cuts: cut_sizes[kappa_e],
    }
}

/// Spanning trees by testing every `(n-1)`-edge subset.
pub fn spanning_trees(g: &Graph) -> u64 {
    let (n, m) = (g.n(), g.m());
    if n == 1 {
        return 1;
    }
    let mut count = 0;
    for mask in 0u64..(1 << m) {
        if mask.count_ones() as usize == n - 1 {
            let removed = !mask & ((1u64 << m) - 1);
            if connected_masked(g, 0, removed) {
                count += 1;
            }
        }
    }
    count
}

/// Every shortest path between `s` and `t`, as vertex sequences.
pub fn shortest_paths(g: &Graph, d: &[Vec<Option<u32>>], s: usize, t: usize) -> Vec<Vec<usize>> {
    let adj = adjacency(g);
    let mut out = Vec::new();
    let mut path = vec![s];
    fn walk(adj: &[Vec<bool>], d: &[Vec<Option<u32>>], t: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let u = *path.last().unwrap();
        if u == t {
            out.push(path.clone());
            return;
        }
        for w in 0..adj.len() {
            if adj[u][w] && d[w][t].is_some_and(|x| Some(x + 1) == d[u][t]) {
                path.push(w);
                walk(adj, d, t, path, out);
                path.pop();
            }
        }
    }
    if d[s][t].is_some() {
        walk(&adj, d, t, &mut path, &mut out);
    }
    out
}

/// Betweenness from explicit path enumeration. Vertex scores credit every
/// vertex on a path, endpoints included; edge scores are indexed like
/// `g.edges()`.
pub fn betweenness(g: &Graph) -> (Vec<Q>, Vec<Q>) {
    let n = g.n();
    let d = floyd(g);
    let mut vertex = vec![Q::zero(); n];
    let mut edge = vec![Q::zero(); g.m()];
    let index = |u: usize, v: usize| {
        let key = (u.min(v), u.max(v));
        g.edges().iter().position(|&e| e == key).unwrap()
    };
    for s in 0..n {
        for t in s + 1..n {
            let paths = shortest_paths(g, &d, s, t);
            let w = Q::new(BigInt::one(), BigInt::from(paths.len()));
            for p in &paths {
                for &v in p {
                    vertex[v] += &w;
                }
                for pair in p.windows(2) {
                    edge[index(pair[0], pair[1])] += &w;
                }
            }
        }
    }
    (vertex, edge)
}

/// Clustering from the diagonal of `A³`.
pub fn clustering(g: &Graph) -> Q {
    let n = g.n();
    let a: Vec<Vec<i64>> = adjacency(g)
        .into_iter()
        .map(|r| r.into_iter().map(i64::from).collect())
        .collect();
    let mul = |x: &Vec<Vec<i64>>, y: &Vec<Vec<i64>>| {
        let mut z = vec![vec![0i64; n]; n];
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    z[i][j] += x[i][k] * y[k][j];
                }
            }
        }
        z
    };
    let a3 = mul(&mul(&a, &a), &a);
    let mut sum = Q::zero();
    for (i, row) in a.iter().enumerate() {
        let deg: i64 = row.iter().sum();
        if deg > 1 {
            sum += q(a3[i][i], deg * (deg - 1));
        }
    }
    sum / Q::from_integer(BigInt::from(n))
}

/// Average distance and efficiency from Floyd distances; average distance
/// is `None` when the graph is disconnected.
pub fn distance_measures(g: &Graph) -> (Option<Q>, Q) {
    let n = g.n() as i64;
    let d = floyd(g);
    let pairs = n * (n - 1) / 2;
    let (mut total, mut eff, mut connected) = (0i64, Q::zero(), true);
    for (i, row) in d.iter().enumerate() {
        for cell in &row[i + 1..] {
            match *cell {
                Some(x) => {
                    total += x as i64;
                    eff += q(1, x as i64);
                }
                None => connected = false,
            }
        }
    }
    (
        connected.then(|| q(total, pairs)),
        eff / Q::from_integer(BigInt::from(pairs)),
    )
}

/// All connected graphs on `n` vertices up to isomorphism, each in its
/// canonical (lexicographically smallest edge mask) labelling.
pub fn connected_graphs_up_to_iso(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let pair_index = |u: usize, v: usize| pairs.iter().position(|&p| p == (u.min(v), u.max(v))).unwrap();
    let perms = permutations(n);
    // edge-bit image of every pair under every permutation
    let images: Vec<Vec<u32>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(u, v)| pair_index(p[u], p[v]) as u32).collect())
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let canonical = images.iter().all(|img| {
            let mut image = 0u64;
            for (i, &b) in img.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    image |= 1 << b;
                }
            }
            image >= mask
        });
        if !canonical {
            continue;
        }
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, edges).unwrap();
        if connected_masked(&g, 0, 0) {
            out.push(g);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}
