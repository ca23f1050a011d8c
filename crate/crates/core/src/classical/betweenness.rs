//! Vertex and edge betweenness by shortest-path DAG accumulation.
//!
//! For every source the BFS predecessor DAG gives the number of shortest
//! paths `σ` to each vertex. Walking the DAG backwards, a pair whose `k`
//! shortest paths pass through a vertex or edge credits it `1/k` per path.
//! Paths are never enumerated.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{AddAssign, Div, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::distance::all_pairs_distances;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::util::{to_f64, Rational};

/// Graphs up to this order use exact rational credits by default.
pub const EXACT_BETWEENNESS_MAX_ORDER: usize = 64;

/// Relative tolerance for the floating-point betweenness path.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

/// How a pair `{i, j}` credits its own endpoints in vertex betweenness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum EndpointMode {
    /// Only interior vertices of shortest paths are credited.
    Exclude,
    /// Each endpoint receives a full unit.
    #[default]
    IncludeFull,
    /// Each endpoint receives one half.
    IncludeHalf,
}

impl EndpointMode {
    pub fn as_str(self) -> &'static str {
        match self {
            EndpointMode::Exclude => "exclude",
            EndpointMode::IncludeFull => "full",
            EndpointMode::IncludeHalf => "half",
        }
    }
}

impl fmt::Display for EndpointMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for EndpointMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exclude" => Ok(EndpointMode::Exclude),
            "full" | "include-full" => Ok(EndpointMode::IncludeFull),
            "half" | "include-half" => Ok(EndpointMode::IncludeHalf),
            _ => Err(Error::domain(format!("unknown betweenness mode '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Arithmetic {
    /// Exact up to [`EXACT_BETWEENNESS_MAX_ORDER`] vertices, float beyond.
    #[default]
    Auto,
    Exact,
    Float,
}

/// Exact counterpart of the scores in [`BetweennessResult`].
#[derive(Debug, Clone, PartialEq)]
pub struct ExactBetweenness {
    pub vertex_scores: Vec<Rational>,
    pub edge_scores: Vec<Rational>,
    pub avg_vertex: Rational,
    pub avg_edge: Rational,
    pub max_edge: Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BetweennessResult {
    pub mode: EndpointMode,
    pub vertex_scores: Vec<f64>,
    /// Indexed like [`Graph::edges`].
    pub edge_scores: Vec<f64>,
    pub avg_vertex: f64,
    pub avg_edge: f64,
    pub max_edge: f64,
    /// Present when the computation ran in exact arithmetic.
    pub exact: Option<ExactBetweenness>,
}

pub fn betweenness(g: &Graph, mode: EndpointMode) -> Result<BetweennessResult> {
    betweenness_with(g, mode, Arithmetic::Auto)
}

pub fn betweenness_with(g: &Graph, mode: EndpointMode, arithmetic: Arithmetic) -> Result<BetweennessResult> {
    if g.n() < 2 {
        return Err(Error::domain("betweenness needs at least 2 vertices"));
    }
    if g.components().1 != 1 {
        return Err(Error::domain(
            "betweenness averages are undefined for disconnected graphs",
        ));
    }
    let exact = match arithmetic {
        Arithmetic::Auto => g.n() <= EXACT_BETWEENNESS_MAX_ORDER,
        Arithmetic::Exact => true,
        Arithmetic::Float => false,
    };
    if exact {
        let scores = Scores::<Rational>::compute(g, mode);
        let ex = ExactBetweenness {
            avg_vertex: mean(&scores.vertex),
            avg_edge: mean(&scores.edge),
            max_edge: scores.edge.iter().max().cloned().unwrap_or_else(Rational::zero),
            vertex_scores: scores.vertex,
            edge_scores: scores.edge,
        };
        Ok(BetweennessResult {
            mode,
            vertex_scores: ex.vertex_scores.iter().map(to_f64).collect(),
            edge_scores: ex.edge_scores.iter().map(to_f64).collect(),
            avg_vertex: to_f64(&ex.avg_vertex),
            avg_edge: to_f64(&ex.avg_edge),
            max_edge: to_f64(&ex.max_edge),
            exact: Some(ex),
        })
    } else {
        let scores = Scores::<f64>::compute(g, mode);
        Ok(BetweennessResult {
            mode,
            avg_vertex: scores.vertex.iter().sum::<f64>() / g.n() as f64,
            avg_edge: scores.edge.iter().sum::<f64>() / g.m() as f64,
            max_edge: scores.edge.iter().copied().fold(0.0, f64::max),
            vertex_scores: scores.vertex,
            edge_scores: scores.edge,
            exact: None,
        })
    }
}

fn mean(xs: &[Rational]) -> Rational {
    let sum = xs.iter().fold(Rational::zero(), |acc, x| acc + x);
    sum / Rational::from_integer(BigInt::from(xs.len()))
}

trait Credit:
    Clone + Zero + One + AddAssign + for<'a> AddAssign<&'a Self> + Mul<Output = Self> + Div<Output = Self>
{
    fn from_count(c: usize) -> Self;
}

impl Credit for f64 {
    fn from_count(c: usize) -> Self {
        c as f64
    }
}

impl Credit for Rational {
    fn from_count(c: usize) -> Self {
        Rational::from_integer(BigInt::from(c))
    }
}

struct Scores<T> {
    vertex: Vec<T>,
    edge: Vec<T>,
}

impl<T: Credit> Scores<T> {
    fn compute(g: &Graph, mode: EndpointMode) -> Self {
        let n = g.n();
        let mut vertex = vec![T::zero(); n];
        let mut edge = vec![T::zero(); g.m()];

        let mut order = Vec::with_capacity(n);
        let mut dist = vec![usize::MAX; n];
        let mut sigma = vec![T::zero(); n];
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut delta = vec![T::zero(); n];
        let mut queue = VecDeque::new();

        for s in 0..n {
            order.clear();
            for v in 0..n {
                dist[v] = usize::MAX;
                sigma[v] = T::zero();
                delta[v] = T::zero();
                preds[v].clear();
            }
            dist[s] = 0;
            sigma[s] = T::one();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for &w in g.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    if dist[w] == dist[u] + 1 {
                        let su = sigma[u].clone();
                        sigma[w] += su;
                        preds[w].push(u);
                    }
                }
            }
            for &w in order.iter().rev() {
                let carried = T::one() + delta[w].clone();
                for &v in &preds[w] {
                    let c = sigma[v].clone() / sigma[w].clone() * carried.clone();
                    edge[g.edge_index(v, w).unwrap()] += &c;
                    delta[v] += c;
                }
                if w != s {
                    vertex[w] += &delta[w];
                }
            }
        }

        // Every unordered pair was visited from both ends.
        let two = T::from_count(2);
        for x in vertex.iter_mut().chain(edge.iter_mut()) {
            *x = x.clone() / two.clone();
        }
        let endpoint = match mode {
            EndpointMode::Exclude => None,
            EndpointMode::IncludeFull => Some(T::from_count(n - 1)),
            EndpointMode::IncludeHalf => Some(T::from_count(n - 1) / two),
        };
        if let Some(e) = endpoint {
            for x in vertex.iter_mut() {
                *x += &e;
            }
        }
        Scores { vertex, edge }
    }
}

/// Both sides of the identities linking average betweenness to the average
/// distance on a connected graph.
#[derive(Debug, Clone, PartialEq)]
pub struct RelationReport {
    /// `b̄_v` in include-full mode.
    pub avg_vertex: f64,
    /// `(n - 1)(d̄ + 1) / 2`.
    pub avg_vertex_expected: f64,
    pub avg_edge: f64,
    /// `n(n - 1) d̄ / (2m)`.
    pub avg_edge_expected: f64,
    pub holds: bool,
}

pub const RELATION_TOLERANCE: f64 = 1e-12;

pub fn check_betweenness_relations(g: &Graph) -> Result<RelationReport> {
    let bt = betweenness(g, EndpointMode::IncludeFull)?;
    let dbar = all_pairs_distances(g).avg_distance_f64()?;
    let n = g.n() as f64;
    let m = g.m() as f64;
    let avg_vertex_expected = 0.5 * (n - 1.0) * (dbar + 1.0);
    let avg_edge_expected = n * (n - 1.0) / (2.0 * m) * dbar;
    let close = |a: f64, b: f64| (a - b).abs() <= RELATION_TOLERANCE * a.abs().max(b.abs());
    Ok(RelationReport {
        holds: close(bt.avg_vertex, avg_vertex_expected) && close(bt.avg_edge, avg_edge_expected),
        avg_vertex: bt.avg_vertex,
        avg_vertex_expected,
        avg_edge: bt.avg_edge,
        avg_edge_expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::util::rational;

    fn fig2a() -> Graph {
        // vertices 1..6 of the drawing shifted to 0..5
        Graph::new(6, [(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)]).unwrap()
    }

    fn exact_edge(g: &Graph, r: &BetweennessResult, u: usize, v: usize) -> Rational {
        r.exact.as_ref().unwrap().edge_scores[g.edge_index(u, v).unwrap()].clone()
    }

    #[test]
    fn complete_graph_row() {
        let r = betweenness(&generate(Family::Complete, 4).unwrap(), EndpointMode::IncludeFull).unwrap();
        let ex = r.exact.unwrap();
        assert_eq!(ex.avg_vertex, rational(3, 1));
        assert_eq!(ex.avg_edge, rational(1, 1));
        assert_eq!(ex.max_edge, rational(1, 1));
    }

    #[test]
    fn half_mode_rows() {
        for (f, expect) in [
            (Family::Cycle, rational(2, 1)),
            (Family::Star, rational(9, 4)),
            (Family::Path, rational(5, 2)),
        ] {
            let r = betweenness(&generate(f, 4).unwrap(), EndpointMode::IncludeHalf).unwrap();
            assert_eq!(r.exact.unwrap().avg_vertex, expect, "{f:?}");
        }
    }

    #[test]
    fn max_edge_betweenness_can_grow() {
        let g = fig2a();
        let r = betweenness(&g, EndpointMode::Exclude).unwrap();
        let h = rational(9, 2);
        assert_eq!(exact_edge(&g, &r, 0, 1), rational(5, 1));
        assert_eq!(exact_edge(&g, &r, 1, 2), h);
        assert_eq!(exact_edge(&g, &r, 1, 3), h);
        assert_eq!(exact_edge(&g, &r, 2, 4), h);
        assert_eq!(exact_edge(&g, &r, 3, 4), h);
        assert_eq!(exact_edge(&g, &r, 4, 5), rational(5, 1));

        let g2 = g.with_edge(0, 2).unwrap();
        let r2 = betweenness(&g2, EndpointMode::Exclude).unwrap();
        assert_eq!(exact_edge(&g2, &r2, 0, 1), rational(2, 1));
        assert_eq!(exact_edge(&g2, &r2, 1, 2), rational(5, 2));
        assert_eq!(exact_edge(&g2, &r2, 1, 3), rational(7, 2));
        assert_eq!(exact_edge(&g2, &r2, 2, 4), rational(11, 2));
        assert_eq!(exact_edge(&g2, &r2, 3, 4), rational(7, 2));
        assert_eq!(exact_edge(&g2, &r2, 4, 5), rational(5, 1));
        assert_eq!(exact_edge(&g2, &r2, 0, 2), rational(3, 1));
        assert_eq!(r2.exact.unwrap().max_edge, rational(11, 2));
    }

    #[test]
    fn float_path_agrees_with_exact() {
        let g = fig2a().with_edge(0, 5).unwrap();
        for mode in [
            EndpointMode::Exclude,
            EndpointMode::IncludeFull,
            EndpointMode::IncludeHalf,
        ] {
            let ex = betweenness_with(&g, mode, Arithmetic::Exact).unwrap();
            let fl = betweenness_with(&g, mode, Arithmetic::Float).unwrap();
            assert!(fl.exact.is_none());
            for (a, b) in ex.vertex_scores.iter().zip(&fl.vertex_scores) {
                assert!((a - b).abs() <= FLOAT_TOLERANCE * a.abs().max(1.0));
            }
            for (a, b) in ex.edge_scores.iter().zip(&fl.edge_scores) {
                assert!((a - b).abs() <= FLOAT_TOLERANCE * a.abs().max(1.0));
            }
        }
    }

    #[test]
    fn disconnected_is_undefined() {
        let g = generate(Family::Empty, 4).unwrap();
        assert!(matches!(
            betweenness(&g, EndpointMode::IncludeFull),
            Err(Error::Domain(_))
        ));
        assert!(check_betweenness_relations(&g).is_err());
    }

    #[test]
    fn relations_on_examples() {
        let k4 = check_betweenness_relations(&generate(Family::Complete, 4).unwrap()).unwrap();
        assert!(k4.holds);
        assert_eq!(k4.avg_vertex_expected, 3.0);
        let s4 = check_betweenness_relations(&generate(Family::Star, 4).unwrap()).unwrap();
        assert!(s4.holds);
        assert_eq!(s4.avg_edge_expected, 3.0);
    }

    #[test]
    fn modes_parse() {
        assert_eq!("half".parse::<EndpointMode>().unwrap(), EndpointMode::IncludeHalf);
        assert_eq!(
            "include-full".parse::<EndpointMode>().unwrap(),
            EndpointMode::IncludeFull
        );
        assert!("middle".parse::<EndpointMode>().is_err());
    }
}
