//! turanlab: a workbench for induced Turán numbers ex(n; H-sub, F-ind).
//!
//! Pipeline: bitset graphs and graph6 I/O (`graph`, `graph6`), pattern
//! containment and clique counting (`patterns`), finite-geometry
//! constructions over GF(q) (`gf`, `constructions`), closed-form bound
//! evaluators (`bounds`), isomorph-free exact search (`canon`,
//! `search`), and end-to-end verification suites (`verify`) behind a
//! CLI (`cli`).

pub mod bounds;
pub mod canon;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod gf;
pub mod graph;
pub mod graph6;
pub mod patterns;
pub mod search;
pub mod verify;

pub use error::{FieldError, Graph6Error, GraphError, SearchError};
pub use graph::{named_graph, Graph, GraphBuilder, VertexSet};
pub use patterns::{ConstraintSet, Mode, PatternSpec};
pub use search::{SearchConfig, SearchResult};
