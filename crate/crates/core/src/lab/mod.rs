//! Exhaustive checks over small cubic graphs.

mod cycles;
mod enumerate;
mod graph6;
mod sweep;

pub use cycles::{all_realizations, labeled_cycle, verify_cycle_word_uniqueness, MAX_CYCLE};
pub use enumerate::{connected_cubic_classes, enumerate_cubic, MAX_CUBIC_ORDER, MIN_CUBIC_ORDER};
pub use graph6::{ingest_graph6, parse_graph6, parse_graph6_line, to_graph6};
pub use sweep::{
    survey_cubic, verify_no_prime, verify_three_connected_classification, verify_twin_theorem, CubicSurvey,
    GraphRecord, SweepOptions, DEFAULT_N_MAX,
};

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::recognition::RecognitionError;
use crate::splits::SplitError;
use crate::words::WordError;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("cubic graphs need an even order in {MIN_CUBIC_ORDER}..={MAX_CUBIC_ORDER}, got {0}")]
    BadOrder(usize),
    #[error("malformed graph6 on line {line}: {reason}")]
    MalformedGraph6 { line: usize, reason: String },
    #[error("vertex label {0} occurs in more than one component")]
    LabelClash(String),
    #[error("cycle length {0} exceeds the supported {1}")]
    CycleTooLong(usize, usize),
    #[error("cycles need at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("graph has {0} vertices, more than the supported {1}")]
    TooLarge(usize, usize),
    #[error("i/o error: {0}")]
    Io(String),
    #[error(transparent)]
    Recognition(#[from] RecognitionError),
    #[error(transparent)]
    Split(#[from] SplitError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub property: String,
    pub detail: String,
}

/// Outcome of one laboratory run. Everything except `wall_time_ms` is
/// deterministic for a given parameter range.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub property: String,
    pub n_min: usize,
    pub n_max: usize,
    pub graphs_examined: usize,
    pub circle_graphs: usize,
    /// Pass counts per checked property.
    pub verdicts: BTreeMap<String, usize>,
    pub counterexamples: Vec<Counterexample>,
    pub wall_time_ms: u128,
}

impl VerificationReport {
    pub fn new(property: &str, n_min: usize, n_max: usize) -> Self {
        VerificationReport {
            property: property.to_owned(),
            n_min,
            n_max,
            graphs_examined: 0,
            circle_graphs: 0,
            verdicts: BTreeMap::new(),
            counterexamples: Vec::new(),
            wall_time_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub(crate) fn finish(&mut self, start: Instant) {
        self.counterexamples.sort_by(|a, b| (&a.property, &a.graph6, &a.detail).cmp(&(&b.property, &b.graph6, &b.detail)));
        self.wall_time_ms = start.elapsed().as_millis();
    }
}

/// Disjoint union of the components, in order. Unnamed components are
/// renumbered consecutively; named vertices keep their names.
pub fn assemble_disconnected(components: &[Graph]) -> Result<Graph, LabError> {
    let mut out = Graph::new(0);
    for c in components {
        out = out.disjoint_union(c).map_err(|e| match e {
            GraphError::DuplicateLabel(l) => LabError::LabelClash(l),
            other => LabError::Graph(other),
        })?;
    }
    Ok(out)
}
