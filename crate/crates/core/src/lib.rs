//! General Sombor index `SO_alpha` and related degree-based topological
//! indices on finite simple graphs, with executable checkers for their
//! extremal bounds and Nordhaus-Gaddum relations.
//!
//! ```
//! use sombor::graph_io::generators::cycle;
//! use sombor::indices::{closed_form_cycle, general_sombor};
//!
//! let c5 = cycle(5).unwrap();
//! assert_eq!(general_sombor(&c5, 2.0), 40.0);
//! assert_eq!(closed_form_cycle(5, 2.0).unwrap(), 40.0);
//! ```

pub mod bounds;
pub mod classify;
pub mod cli;
pub mod graph;
pub mod graph_io;
pub mod indices;
pub mod report;
pub mod verify;

pub use classify::{classify, GraphClassification, GraphKind};
pub use graph::{DegreeProfile, Graph, GraphError};
