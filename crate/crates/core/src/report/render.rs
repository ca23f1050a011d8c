use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use super::{ComparisonRow, EdgeSuggestion, Measure, MeasureReport, MeasureValue};

/// Aligned two-column table, one measure per line.
pub fn render_table(report: &MeasureReport) -> String {
    let mut out = format!("graph {} (n={}, m={})\n", report.name, report.n, report.m);
    for (m, v) in report.iter() {
        let label = if m == Measure::AvgVertexBetweenness {
            format!("{} [{}]", m.key(), report.bt_mode)
        } else {
            m.key().to_string()
        };
        out.push_str(&format!("{label:<32} {:<8} {v}\n", m.symbol()));
    }
    out
}

/// JSON value of one cell: numbers, `"inf"` or `null`. Unavailable
/// measures render as `{"unavailable": reason}`.
pub fn json_value(v: &MeasureValue) -> Value {
    match v {
        MeasureValue::Integer(i) => match i.to_u64() {
            Some(x) => json!(x),
            None => json!(i.to_string()),
        },
        MeasureValue::Exact(r) => {
            if r.is_integer() {
                if let Some(x) = r.numer().to_i64() {
                    return json!(x);
                }
            }
            json!(crate::util::to_f64(r))
        }
        MeasureValue::Real(x) => json!(x),
        MeasureValue::Infinite => json!("inf"),
        MeasureValue::Undefined => Value::Null,
        MeasureValue::Unavailable(reason) => json!({ "unavailable": reason }),
    }
}

/// JSON object with `n`, `m`, the thirteen measure keys and `bt_mode`.
pub fn render_json(report: &MeasureReport) -> String {
    let mut obj = Map::new();
    obj.insert("n".into(), json!(report.n));
    obj.insert("m".into(), json!(report.m));
    for (m, v) in report.iter() {
        obj.insert(m.key().into(), json_value(v));
        if m == Measure::AvgVertexBetweenness {
            obj.insert("bt_mode".into(), json!(report.bt_mode.as_str()));
        }
    }
    serde_json::to_string_pretty(&Value::Object(obj)).expect("report serializes")
}

pub fn render_comparison(rows: &[ComparisonRow], first: &str, second: &str) -> String {
    let mut out = format!("{:<32} {:<24} {:<24} more robust\n", "measure", first, second);
    for r in rows {
        let winner = match &r.winner {
            super::Winner::First => first.to_string(),
            super::Winner::Second => second.to_string(),
            w => w.to_string(),
        };
        out.push_str(&format!("{:<32} {:<24} {:<24} {winner}\n", r.label, r.first, r.second));
    }
    out
}

pub fn render_suggestions(suggestions: &[EdgeSuggestion]) -> String {
    let mut out = String::from("rank edge     before -> after   improvement\n");
    for s in suggestions {
        let imp = match s.improvement {
            Some(x) => format!("{x:+.6}"),
            None => "-".to_string(),
        };
        out.push_str(&format!(
            "{:<4} {:<8} {} -> {}   {imp}\n",
            s.rank,
            format!("{} {}", s.edge.0, s.edge.1),
            s.before,
            s.after
        ));
        let deltas: Vec<String> = s
            .deltas
            .iter()
            .filter_map(|(m, d)| d.filter(|d| *d != 0.0).map(|d| format!("{}={d:+.6}", m.key())))
            .collect();
        if !deltas.is_empty() {
            out.push_str(&format!("     deltas: {}\n", deltas.join(" ")));
        }
    }
    out
}
