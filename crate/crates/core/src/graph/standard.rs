use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError, MAX_VERTICES};

/// Named graph families.
///
/// Vertex numbering: cycles and paths run `0..n` in order; `Wheel(n)` has its
/// rim at `0..n` and the hub at `n`; `CompleteBipartite(m, n)` puts the first
/// side at `0..m`; `BW3` is `W3` with its rim edges subdivided: hub `0`, old
/// rim vertices `1..=3`, and subdivision vertex `i + 3` between rim vertices
/// `i` and `i % 3 + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardGraph {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    Wheel(usize),
    BW3,
}

fn bad(msg: impl Into<String>) -> GraphError {
    GraphError::BadParameter(msg.into())
}

pub fn standard_graph(which: StandardGraph) -> Result<Graph, GraphError> {
    use StandardGraph::*;
    let order = match which {
        Complete(n) | Path(n) => n,
        CompleteBipartite(a, b) => a + b,
        Cycle(n) => n,
        Wheel(n) => n + 1,
        BW3 => 7,
    };
    if order > MAX_VERTICES {
        return Err(GraphError::TooLarge(order, MAX_VERTICES));
    }
    let mut g = Graph::new(order);
    match which {
        Complete(n) => {
            if n < 1 {
                return Err(bad("K_n needs n >= 1"));
            }
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v);
                }
            }
        }
        CompleteBipartite(a, b) => {
            if a < 1 || b < 1 {
                return Err(bad("K_m,n needs m, n >= 1"));
            }
            for u in 0..a {
                for v in a..a + b {
                    g.add_edge(u, v);
                }
            }
        }
        Cycle(n) => {
            if n < 3 {
                return Err(bad("C_n needs n >= 3"));
            }
            for u in 0..n {
                g.add_edge(u, (u + 1) % n);
            }
        }
        Path(n) => {
            if n < 1 {
                return Err(bad("P_n needs n >= 1"));
            }
            for u in 1..n {
                g.add_edge(u - 1, u);
            }
        }
        Wheel(n) => {
            if n < 3 {
                return Err(bad("W_n needs n >= 3"));
            }
            for u in 0..n {
                g.add_edge(u, (u + 1) % n);
                g.add_edge(u, n);
            }
        }
        BW3 => {
            for i in 1..=3 {
                g.add_edge(0, i);
                g.add_edge(i, i + 3);
                g.add_edge(i + 3, i % 3 + 1);
            }
        }
    }
    Ok(g)
}

impl FromStr for StandardGraph {
    type Err = GraphError;

    /// Accepts `K4`, `K3,3`, `C5`, `P4`, `W5`, `BW3` (case-insensitive).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_uppercase();
        let num = |x: &str| x.parse::<usize>().map_err(|_| bad(format!("bad graph name {s:?}")));
        if t == "BW3" {
            return Ok(StandardGraph::BW3);
        }
        if let Some(rest) = t.strip_prefix('K') {
            if let Some((a, b)) = rest.split_once(',') {
                return Ok(StandardGraph::CompleteBipartite(num(a)?, num(b)?));
            }
            return Ok(StandardGraph::Complete(num(rest)?));
        }
        if let Some(rest) = t.strip_prefix('C') {
            return Ok(StandardGraph::Cycle(num(rest)?));
        }
        if let Some(rest) = t.strip_prefix('P') {
            return Ok(StandardGraph::Path(num(rest)?));
        }
        if let Some(rest) = t.strip_prefix('W') {
            return Ok(StandardGraph::Wheel(num(rest)?));
        }
        Err(bad(format!("unknown graph name {s:?}")))
    }
}

impl fmt::Display for StandardGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StandardGraph::Complete(n) => write!(f, "K{n}"),
            StandardGraph::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            StandardGraph::Cycle(n) => write!(f, "C{n}"),
            StandardGraph::Path(n) => write!(f, "P{n}"),
            StandardGraph::Wheel(n) => write!(f, "W{n}"),
            StandardGraph::BW3 => write!(f, "BW3"),
        }
    }
}
