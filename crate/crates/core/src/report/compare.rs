//! Measure-by-measure comparison of two graphs.

use std::cmp::Ordering;
use std::fmt;

use super::{Direction, Measure, MeasureReport, MeasureValue};
use crate::classical::EndpointMode;
use crate::graph::Graph;
use crate::reliability::{compare_near_one, compare_near_zero, ReliabilityOrder};

/// Which graph a comparison row deems more robust.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Winner {
    First,
    Second,
    Tie,
    /// The measure could not be compared; carries the reason.
    NotApplicable(String),
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Winner::First => f.write_str("first"),
            Winner::Second => f.write_str("second"),
            Winner::Tie => f.write_str("tie"),
            Winner::NotApplicable(reason) => write!(f, "n/a({reason})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub label: String,
    /// `None` for the reliability rows, which are verdicts without a value.
    pub measure: Option<Measure>,
    pub first: String,
    pub second: String,
    pub winner: Winner,
}

/// Verdict for one measure given both values.
pub fn verdict(measure: Measure, a: &MeasureValue, b: &MeasureValue) -> Winner {
    let Some(ord) = a.compare(b) else {
        return match (a, b) {
            (MeasureValue::Undefined, MeasureValue::Undefined) => Winner::Tie,
            (MeasureValue::Unavailable(r), _) | (_, MeasureValue::Unavailable(r)) => Winner::NotApplicable(r.clone()),
            _ => Winner::NotApplicable("undefined for one graph".into()),
        };
    };
    let ord = match measure.direction() {
        Direction::HigherIsBetter => ord,
        Direction::LowerIsBetter => ord.reverse(),
    };
    match ord {
        Ordering::Greater => Winner::First,
        Ordering::Less => Winner::Second,
        Ordering::Equal => Winner::Tie,
    }
}

fn reliability_row(label: &str, order: crate::Result<ReliabilityOrder>) -> ComparisonRow {
    let winner = match order {
        Ok(ReliabilityOrder::FirstLessReliable) => Winner::Second,
        Ok(ReliabilityOrder::SecondLessReliable) => Winner::First,
        Ok(ReliabilityOrder::Undetermined) => Winner::Tie,
        Err(e) => Winner::NotApplicable(e.to_string()),
    };
    ComparisonRow {
        label: label.to_string(),
        measure: None,
        first: String::new(),
        second: String::new(),
        winner,
    }
}

/// Compares two graphs on every report measure, followed by the
/// reliability orderings for `p` near one and near zero.
pub fn compare_graphs(g1: &Graph, g2: &Graph, mode: EndpointMode) -> Vec<ComparisonRow> {
    let r1 = MeasureReport::compute(g1, "first", mode);
    let r2 = MeasureReport::compute(g2, "second", mode);
    let mut rows: Vec<ComparisonRow> = Measure::ALL
        .iter()
        .map(|&m| {
            let (a, b) = (r1.value(m), r2.value(m));
            ComparisonRow {
                label: m.key().to_string(),
                measure: Some(m),
                first: a.to_string(),
                second: b.to_string(),
                winner: verdict(m, a, b),
            }
        })
        .collect();
    rows.push(reliability_row("reliability_near_one", compare_near_one(g1, g2)));
    rows.push(reliability_row("reliability_near_zero", compare_near_zero(g1, g2)));
    rows
}
