//! Per-graph measure reports, two-graph comparisons and the edge-addition
//! advisor used by the command-line tool.
//!
//! A report holds the thirteen scalar measures. Values follow the reference
//! conventions for disconnected graphs: connectivities 0, diameter, average
//! distance and resistance infinite, spanning trees 0, betweenness
//! undefined.

mod compare;
mod render;
mod suggest;

pub use compare::{compare_graphs, ComparisonRow, Winner};
pub use render::{json_value, render_comparison, render_json, render_suggestions, render_table};
pub use suggest::{suggest_edges, EdgeSuggestion, SuggestMeasure};

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use crate::classical::{all_pairs_distances, betweenness, clustering, EndpointMode};
use crate::connectivity::{edge_connectivity, is_connected, vertex_connectivity};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{
    algebraic_connectivity, effective_graph_resistance, effective_graph_resistance_exact, spanning_tree_count,
    EXACT_RESISTANCE_MAX_ORDER,
};
use crate::util::{format_rational, to_f64, Rational};

/// Relative tolerance when comparing floating-point measure values.
pub const REAL_COMPARISON_TOL: f64 = 1e-9;

/// Whether larger values of a measure indicate a more robust graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    HigherIsBetter,
    LowerIsBetter,
}

/// The thirteen scalar measures, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Measure {
    Connected,
    VertexConnectivity,
    EdgeConnectivity,
    Diameter,
    AvgDistance,
    Efficiency,
    MaxEdgeBetweenness,
    AvgVertexBetweenness,
    AvgEdgeBetweenness,
    Clustering,
    AlgebraicConnectivity,
    SpanningTrees,
    EffectiveResistance,
}

impl Measure {
    pub const ALL: [Measure; 13] = [
        Measure::Connected,
        Measure::VertexConnectivity,
        Measure::EdgeConnectivity,
        Measure::Diameter,
        Measure::AvgDistance,
        Measure::Efficiency,
        Measure::MaxEdgeBetweenness,
        Measure::AvgVertexBetweenness,
        Measure::AvgEdgeBetweenness,
        Measure::Clustering,
        Measure::AlgebraicConnectivity,
        Measure::SpanningTrees,
        Measure::EffectiveResistance,
    ];

    /// JSON key.
    pub fn key(self) -> &'static str {
        match self {
            Measure::Connected => "connected",
            Measure::VertexConnectivity => "kappa_v",
            Measure::EdgeConnectivity => "kappa_e",
            Measure::Diameter => "diameter",
            Measure::AvgDistance => "avg_distance",
            Measure::Efficiency => "efficiency",
            Measure::MaxEdgeBetweenness => "max_edge_betweenness",
            Measure::AvgVertexBetweenness => "avg_vertex_betweenness",
            Measure::AvgEdgeBetweenness => "avg_edge_betweenness",
            Measure::Clustering => "clustering",
            Measure::AlgebraicConnectivity => "algebraic_connectivity",
            Measure::SpanningTrees => "spanning_trees",
            Measure::EffectiveResistance => "effective_resistance",
        }
    }

    /// Conventional symbol.
    pub fn symbol(self) -> &'static str {
        match self {
            Measure::Connected => "κ",
            Measure::VertexConnectivity => "κ_v",
            Measure::EdgeConnectivity => "κ_e",
            Measure::Diameter => "d_max",
            Measure::AvgDistance => "d̄",
            Measure::Efficiency => "E",
            Measure::MaxEdgeBetweenness => "b_e^max",
            Measure::AvgVertexBetweenness => "b̄_v",
            Measure::AvgEdgeBetweenness => "b̄_e",
            Measure::Clustering => "C",
            Measure::AlgebraicConnectivity => "λ₂",
            Measure::SpanningTrees => "ξ",
            Measure::EffectiveResistance => "R",
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            Measure::Diameter
            | Measure::AvgDistance
            | Measure::MaxEdgeBetweenness
            | Measure::AvgVertexBetweenness
            | Measure::AvgEdgeBetweenness
            | Measure::EffectiveResistance => Direction::LowerIsBetter,
            _ => Direction::HigherIsBetter,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl std::str::FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let m = match s {
            "connected" | "kappa" | "κ" => Measure::Connected,
            "kappa_v" | "κ_v" => Measure::VertexConnectivity,
            "kappa_e" | "κ_e" => Measure::EdgeConnectivity,
            "diameter" | "dmax" | "d_max" => Measure::Diameter,
            "avg_distance" | "dbar" | "d̄" => Measure::AvgDistance,
            "efficiency" | "E" => Measure::Efficiency,
            "max_edge_betweenness" | "be_max" | "b_e^max" => Measure::MaxEdgeBetweenness,
            "avg_vertex_betweenness" | "bv" | "b̄_v" => Measure::AvgVertexBetweenness,
            "avg_edge_betweenness" | "be" | "b̄_e" => Measure::AvgEdgeBetweenness,
            "clustering" | "C" => Measure::Clustering,
            "algebraic_connectivity" | "lambda2" | "λ₂" => Measure::AlgebraicConnectivity,
            "spanning_trees" | "xi" | "ξ" => Measure::SpanningTrees,
            "effective_resistance" | "R" => Measure::EffectiveResistance,
            _ => return Err(Error::domain(format!("unknown measure '{s}'"))),
        };
        Ok(m)
    }
}

/// One cell of a report.
#[derive(Debug, Clone, PartialEq)]
pub enum MeasureValue {
    Integer(BigUint),
    Exact(Rational),
    Real(f64),
    Infinite,
    /// Not defined for this graph (betweenness of a disconnected graph).
    Undefined,
    /// Could not be computed; carries the reason.
    Unavailable(String),
}

impl MeasureValue {
    fn int(x: usize) -> Self {
        MeasureValue::Integer(BigUint::from(x))
    }

    fn from_result(r: Result<MeasureValue>) -> Self {
        r.unwrap_or_else(|e| MeasureValue::Unavailable(e.to_string()))
    }

    /// Numeric value; infinite maps to `f64::INFINITY`, non-numeric to None.
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            MeasureValue::Integer(i) => i.to_f64(),
            MeasureValue::Exact(r) => Some(to_f64(r)),
            MeasureValue::Real(x) => Some(*x),
            MeasureValue::Infinite => Some(f64::INFINITY),
            _ => None,
        }
    }

    /// Exact value for integer and rational cells.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            MeasureValue::Integer(i) => Some(Rational::from_integer(BigInt::from(i.clone()))),
            MeasureValue::Exact(r) => Some(r.clone()),
            _ => None,
        }
    }

    /// Orders two values numerically. Exact cells compare exactly; a real
    /// cell compares with relative tolerance [`REAL_COMPARISON_TOL`].
    pub fn compare(&self, other: &MeasureValue) -> Option<Ordering> {
        use MeasureValue::*;
        match (self, other) {
            (Infinite, Infinite) => Some(Ordering::Equal),
            (Infinite, _) if other.as_f64().is_some() => Some(Ordering::Greater),
            (_, Infinite) if self.as_f64().is_some() => Some(Ordering::Less),
            _ => {
                if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
                    return Some(a.cmp(&b));
                }
                let (a, b) = (self.as_f64()?, other.as_f64()?);
                if (a - b).abs() <= REAL_COMPARISON_TOL * a.abs().max(b.abs()).max(1.0) {
                    Some(Ordering::Equal)
                } else {
                    a.partial_cmp(&b)
                }
            }
        }
    }
}

impl fmt::Display for MeasureValue {
    /// Table rendering: integers plainly, rationals as `a/b (decimal)`,
    /// reals to six decimals, `∞`, `-` and `n/a(reason)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasureValue::Integer(i) => write!(f, "{i}"),
            MeasureValue::Exact(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{} ({:.6})", format_rational(r), to_f64(r))
                }
            }
            MeasureValue::Real(x) => write!(f, "{x:.6}"),
            MeasureValue::Infinite => write!(f, "∞"),
            MeasureValue::Undefined => write!(f, "-"),
            MeasureValue::Unavailable(reason) => write!(f, "n/a({reason})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeasureReport {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub bt_mode: EndpointMode,
    values: Vec<MeasureValue>,
}

impl MeasureReport {
    /// Computes every measure. A measure that fails is recorded as
    /// unavailable without affecting the others.
    pub fn compute(g: &Graph, name: impl Into<String>, bt_mode: EndpointMode) -> Self {
        let mut values = Vec::with_capacity(Measure::ALL.len());
        values.push(connected_value(g));
        values.push(MeasureValue::from_result(vertex_connectivity(g).map(MeasureValue::int)));
        values.push(MeasureValue::from_result(edge_connectivity(g).map(MeasureValue::int)));
        values.extend(distance_values(g));
        values.extend(betweenness_values(g, bt_mode));
        values.push(clustering_value(g));
        values.push(algebraic_connectivity_value(g));
        values.push(spanning_tree_value(g));
        values.push(MeasureValue::from_result(resistance_value(g)));
        debug_assert_eq!(values.len(), Measure::ALL.len());
        MeasureReport {
            name: name.into(),
            n: g.n(),
            m: g.m(),
            bt_mode,
            values,
        }
    }

    pub fn value(&self, m: Measure) -> &MeasureValue {
        &self.values[m.index()]
    }

    /// `(measure, value)` pairs in report order.
    pub fn iter(&self) -> impl Iterator<Item = (Measure, &MeasureValue)> {
        Measure::ALL.iter().map(move |&m| (m, &self.values[m.index()]))
    }
}

/// Evaluates a single measure, as [`MeasureReport::compute`] would.
pub fn evaluate(g: &Graph, measure: Measure, bt_mode: EndpointMode) -> MeasureValue {
    match measure {
        Measure::Connected => connected_value(g),
        Measure::VertexConnectivity => MeasureValue::from_result(vertex_connectivity(g).map(MeasureValue::int)),
        Measure::EdgeConnectivity => MeasureValue::from_result(edge_connectivity(g).map(MeasureValue::int)),
        Measure::Diameter | Measure::AvgDistance | Measure::Efficiency => {
            let [d, a, e] = distance_values(g);
            match measure {
                Measure::Diameter => d,
                Measure::AvgDistance => a,
                _ => e,
            }
        }
        Measure::MaxEdgeBetweenness | Measure::AvgVertexBetweenness | Measure::AvgEdgeBetweenness => {
            let [mx, v, e] = betweenness_values(g, bt_mode);
            match measure {
                Measure::MaxEdgeBetweenness => mx,
                Measure::AvgVertexBetweenness => v,
                _ => e,
            }
        }
        Measure::Clustering => clustering_value(g),
        Measure::AlgebraicConnectivity => algebraic_connectivity_value(g),
        Measure::SpanningTrees => spanning_tree_value(g),
        Measure::EffectiveResistance => MeasureValue::from_result(resistance_value(g)),
    }
}

fn connected_value(g: &Graph) -> MeasureValue {
    MeasureValue::int(usize::from(is_connected(g)))
}

fn distance_values(g: &Graph) -> [MeasureValue; 3] {
    let dist = all_pairs_distances(g);
    [
        MeasureValue::from_result(dist.diameter().map(|d| match d {
            Some(d) => MeasureValue::int(d as usize),
            None => MeasureValue::Infinite,
        })),
        MeasureValue::from_result(dist.avg_distance().map(|d| match d {
            Some(r) => MeasureValue::Exact(r),
            None => MeasureValue::Infinite,
        })),
        MeasureValue::from_result(dist.efficiency().map(MeasureValue::Exact)),
    ]
}

/// `[b_e^max, b̄_v, b̄_e]`; undefined on disconnected graphs.
fn betweenness_values(g: &Graph, mode: EndpointMode) -> [MeasureValue; 3] {
    if g.n() >= 2 && !is_connected(g) {
        return [
            MeasureValue::Undefined,
            MeasureValue::Undefined,
            MeasureValue::Undefined,
        ];
    }
    match betweenness(g, mode) {
        Ok(bt) => match bt.exact {
            Some(ex) => [
                MeasureValue::Exact(ex.max_edge),
                MeasureValue::Exact(ex.avg_vertex),
                MeasureValue::Exact(ex.avg_edge),
            ],
            None => [
                MeasureValue::Real(bt.max_edge),
                MeasureValue::Real(bt.avg_vertex),
                MeasureValue::Real(bt.avg_edge),
            ],
        },
        Err(e) => {
            let na = MeasureValue::Unavailable(e.to_string());
            [na.clone(), na.clone(), na]
        }
    }
}

fn clustering_value(g: &Graph) -> MeasureValue {
    MeasureValue::Exact(clustering(g).global_exact)
}

fn algebraic_connectivity_value(g: &Graph) -> MeasureValue {
    MeasureValue::from_result(algebraic_connectivity(g).map(MeasureValue::Real))
}

fn spanning_tree_value(g: &Graph) -> MeasureValue {
    MeasureValue::from_result(spanning_tree_count(g).map(MeasureValue::Integer))
}

fn resistance_value(g: &Graph) -> Result<MeasureValue> {
    if g.n() <= EXACT_RESISTANCE_MAX_ORDER {
        return Ok(match effective_graph_resistance_exact(g)? {
            Some(r) => MeasureValue::Exact(r),
            None => MeasureValue::Infinite,
        });
    }
    let r = effective_graph_resistance(g)?;
    Ok(if r.total.is_infinite() {
        MeasureValue::Infinite
    } else {
        MeasureValue::Real(r.total)
    })
}
