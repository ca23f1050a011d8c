//! Ranking of absent edges by the gain in one robustness measure.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::{evaluate, Direction, Measure, MeasureReport, MeasureValue};
use crate::classical::EndpointMode;
use crate::connectivity::is_connected;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::reliability::reliability_at;

/// Selection criterion: one of the report measures, or `Rel(p)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SuggestMeasure {
    Scalar(Measure),
    Reliability(f64),
}

impl SuggestMeasure {
    pub fn direction(self) -> Direction {
        match self {
            SuggestMeasure::Scalar(m) => m.direction(),
            SuggestMeasure::Reliability(_) => Direction::HigherIsBetter,
        }
    }

    fn evaluate(self, g: &Graph, mode: EndpointMode) -> MeasureValue {
        match self {
            SuggestMeasure::Scalar(m) => evaluate(g, m, mode),
            SuggestMeasure::Reliability(p) => match reliability_at(g, p) {
                Ok(r) => MeasureValue::Real(r),
                Err(e) => MeasureValue::Unavailable(e.to_string()),
            },
        }
    }
}

impl fmt::Display for SuggestMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuggestMeasure::Scalar(m) => write!(f, "{m}"),
            SuggestMeasure::Reliability(p) => write!(f, "relpoly@{p}"),
        }
    }
}

impl FromStr for SuggestMeasure {
    type Err = Error;

    /// A measure name or alias, or `relpoly@p` with `p` in `[0, 1]`.
    fn from_str(s: &str) -> Result<Self> {
        if let Some(p) = s.strip_prefix("relpoly@") {
            let p: f64 = p
                .parse()
                .map_err(|_| Error::domain(format!("bad probability in '{s}'")))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::domain(format!("probability {p} outside [0, 1]")));
            }
            return Ok(SuggestMeasure::Reliability(p));
        }
        s.parse().map(SuggestMeasure::Scalar)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EdgeSuggestion {
    pub edge: Edge,
    /// 1-based position in the ranking.
    pub rank: usize,
    pub before: MeasureValue,
    pub after: MeasureValue,
    /// Signed gain in the selected measure, positive when `g + e` is more
    /// robust. `None` when either value is non-numeric or infinite.
    pub improvement: Option<f64>,
    /// `after - before` for every report measure, in report order.
    pub deltas: Vec<(Measure, Option<f64>)>,
}

fn improvement(direction: Direction, before: &MeasureValue, after: &MeasureValue) -> Option<f64> {
    let (b, a) = (before.as_f64()?, after.as_f64()?);
    if !(a.is_finite() && b.is_finite()) {
        return None;
    }
    Some(match direction {
        Direction::HigherIsBetter => a - b,
        Direction::LowerIsBetter => b - a,
    })
}

/// Best-first ordering of post-addition values; unusable values go last.
fn rank_order(direction: Direction, a: &MeasureValue, b: &MeasureValue) -> Ordering {
    match a.compare(b) {
        Some(ord) => match direction {
            Direction::HigherIsBetter => ord.reverse(),
            Direction::LowerIsBetter => ord,
        },
        None => match (a.as_f64().is_some(), b.as_f64().is_some()) {
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => Ordering::Equal,
        },
    }
}

/// Evaluates the measure on `g + e` for every absent edge `e` and returns
/// the `top` best additions. Ties keep lexicographic `(u, v)` order.
pub fn suggest_edges(
    g: &Graph,
    measure: SuggestMeasure,
    top: usize,
    mode: EndpointMode,
) -> Result<Vec<EdgeSuggestion>> {
    if g.n() >= 2 && !is_connected(g) {
        return Err(Error::domain("edge suggestions need a connected graph"));
    }
    let before = measure.evaluate(g, mode);
    let mut scored: Vec<(Edge, Graph, MeasureValue)> = g
        .complement_nonedges()
        .into_par_iter()
        .map(|(u, v)| {
            let h = g.with_edge(u, v)?;
            let value = measure.evaluate(&h, mode);
            Ok(((u, v), h, value))
        })
        .collect::<Result<_>>()?;
    // stable sort on lexicographically ordered candidates
    scored.sort_by(|a, b| rank_order(measure.direction(), &a.2, &b.2));
    scored.truncate(top);

    let base = MeasureReport::compute(g, "", mode);
    Ok(scored
        .into_iter()
        .enumerate()
        .map(|(i, (edge, h, after))| {
            let report = MeasureReport::compute(&h, "", mode);
            let deltas = report
                .iter()
                .map(|(m, v)| {
                    let d = match (base.value(m).as_f64(), v.as_f64()) {
                        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => Some(b - a),
                        _ => None,
                    };
                    (m, d)
                })
                .collect();
            EdgeSuggestion {
                edge,
                rank: i + 1,
                improvement: improvement(measure.direction(), &before, &after),
                before: before.clone(),
                after,
                deltas,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::util::rational;

    fn suggest(g: &Graph, m: &str, top: usize) -> Vec<EdgeSuggestion> {
        suggest_edges(g, m.parse().unwrap(), top, EndpointMode::IncludeFull).unwrap()
    }

    #[test]
    fn path_closes_into_cycle_for_resistance() {
        let s = suggest(&generate(Family::Path, 4).unwrap(), "R", 10);
        assert_eq!(s.len(), 3);
        assert_eq!(s[0].edge, (0, 3));
        assert_eq!(s[0].after, MeasureValue::Exact(rational(5, 1)));
        assert_eq!(s[0].improvement, Some(5.0));
        assert!(s[1].improvement.unwrap() < 5.0);
        assert_eq!(s.iter().map(|x| x.rank).collect::<Vec<_>>(), [1, 2, 3]);
    }

    #[test]
    fn complete_graph_has_no_candidates() {
        assert!(suggest(&generate(Family::Complete, 4).unwrap(), "xi", 5).is_empty());
    }

    #[test]
    fn max_edge_betweenness_can_worsen() {
        let g = Graph::new(6, [(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)]).unwrap();
        let s = suggest(&g, "be_max", 100);
        let chord = s.iter().find(|x| x.edge == (0, 2)).unwrap();
        assert_eq!(chord.before, MeasureValue::Exact(rational(5, 1)));
        assert_eq!(chord.after, MeasureValue::Exact(rational(11, 2)));
        assert_eq!(chord.improvement, Some(-0.5));
    }

    #[test]
    fn ties_keep_lexicographic_order() {
        // every chord of C5 gives the same spanning-tree count
        let s = suggest(&generate(Family::Cycle, 5).unwrap(), "xi", 10);
        let edges: Vec<Edge> = s.iter().map(|x| x.edge).collect();
        assert_eq!(edges, [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]);
    }

    #[test]
    fn reliability_criterion_and_deltas() {
        let s = suggest(&generate(Family::Star, 4).unwrap(), "relpoly@0.9", 1);
        assert_eq!(s.len(), 1);
        assert!(s[0].improvement.unwrap() > 0.0);
        let xi = s[0].deltas.iter().find(|(m, _)| *m == Measure::SpanningTrees).unwrap();
        assert_eq!(xi.1, Some(2.0));
    }

    #[test]
    fn parse_errors() {
        assert!("volume".parse::<SuggestMeasure>().is_err());
        assert!("relpoly@1.5".parse::<SuggestMeasure>().is_err());
        assert!("relpoly@x".parse::<SuggestMeasure>().is_err());
        let disconnected = generate(Family::Empty, 3).unwrap();
        assert!(suggest_edges(&disconnected, "R".parse().unwrap(), 1, EndpointMode::IncludeFull).is_err());
    }
}
