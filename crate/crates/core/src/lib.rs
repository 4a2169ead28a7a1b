//! Circle-graph toolkit: double occurrence words and their interlacement
//! graphs, local complementation, splits, two independent circle-graph
//! recognizers, and an exhaustive laboratory over small cubic graphs.

pub mod graph;
pub mod lab;
pub mod recognition;
pub mod splits;
pub mod words;

pub use graph::{Connectivity, Graph, GraphError, StandardGraph, TwinPair, Vertex};
pub use recognition::{recognize, RecognitionCertificate, RecognitionError};
pub use splits::{Split, SplitError};
pub use words::{Letter, Word, WordError};
