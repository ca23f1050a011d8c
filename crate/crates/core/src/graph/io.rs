use super::{normalize, Graph};
use crate::error::{Error, Result};

/// Parses the edge-list text format.
///
/// The first non-comment line holds the vertex count; every following line
/// holds one edge `u v` (0-based). Lines starting with `#` and blank lines
/// are skipped. Duplicate edges in either orientation collapse to one.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match n {
            None => {
                if tokens.len() != 1 {
                    return Err(parse_err(line, "expected a single vertex count"));
                }
                let count = parse_index(tokens[0], line)?;
                if count == 0 {
                    return Err(parse_err(line, "vertex count must be positive"));
                }
                n = Some(count);
            }
            Some(count) => {
                if tokens.len() != 2 {
                    return Err(parse_err(line, "expected two vertex indices 'u v'"));
                }
                let u = parse_index(tokens[0], line)?;
                let v = parse_index(tokens[1], line)?;
                edges.push(normalize(count, u, v, Some(line))?);
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(1, "missing vertex count"))?;
    Graph::new(n, edges)
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| parse_err(line, &format!("malformed token '{token}'")))
}

fn parse_err(line: usize, message: &str) -> Error {
    Error::Parse {
        line,
        message: message.to_string(),
    }
}
