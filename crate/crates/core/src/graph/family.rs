use super::Graph;
use crate::error::{Error, Result};

/// Named graph families used as reference examples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Complete,
    Cycle,
    Star,
    Path,
    Empty,
}

impl Family {
    /// Single-letter symbol: `K`, `C`, `S`, `P` or `O`.
    pub fn symbol(self) -> char {
        match self {
            Family::Complete => 'K',
            Family::Cycle => 'C',
            Family::Star => 'S',
            Family::Path => 'P',
            Family::Empty => 'O',
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "k" | "complete" => Ok(Family::Complete),
            "c" | "cycle" => Ok(Family::Cycle),
            "s" | "star" => Ok(Family::Star),
            "p" | "path" => Ok(Family::Path),
            "o" | "empty" => Ok(Family::Empty),
            _ => Err(Error::InvalidFamily(format!("unknown family '{s}'"))),
        }
    }
}

/// A family together with its order, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphFamily {
    kind: Family,
    order: usize,
}

impl GraphFamily {
    pub fn new(kind: Family, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidFamily("order must be at least 1".into()));
        }
        if kind == Family::Cycle && order < 3 {
            return Err(Error::InvalidFamily(format!(
                "cycle needs at least 3 vertices, got {order}"
            )));
        }
        Ok(GraphFamily { kind, order })
    }

    pub fn kind(&self) -> Family {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Short name such as `K4`.
    pub fn name(&self) -> String {
        format!("{}{}", self.kind.symbol(), self.order)
    }

    /// Builds the graph. Stars are centred on vertex 0, paths and cycles
    /// visit the vertices in index order.
    pub fn generate(&self) -> Graph {
        let n = self.order;
        let edges: Vec<(usize, usize)> = match self.kind {
            Family::Complete => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
            Family::Cycle => (0..n).map(|u| (u, (u + 1) % n)).collect(),
            Family::Star => (1..n).map(|v| (0, v)).collect(),
            Family::Path => (1..n).map(|v| (v - 1, v)).collect(),
            Family::Empty => Vec::new(),
        };
        Graph::new(n, edges).expect("family edges are valid by construction")
    }
}

impl From<GraphFamily> for Graph {
    fn from(f: GraphFamily) -> Graph {
        f.generate()
    }
}

/// Shorthand for `GraphFamily::new(kind, order)?.generate()`.
pub fn generate(kind: Family, order: usize) -> Result<Graph> {
    Ok(GraphFamily::new(kind, order)?.generate())
}
