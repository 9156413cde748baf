//! Graph class recognition with certificates.

mod chordal;
pub mod circle;
pub(crate) mod constraints;
mod hereditary;
pub mod lexbfs;
mod report;

pub use chordal::{is_chordal, is_complete, is_strongly_chordal, is_unit_interval};
pub use circle::{unit_circular_arc_realization, CircleRealization};
pub use hereditary::{hamiltonian_hereditary_violation, is_hamiltonian_hereditary};
pub use report::{classify_graph, ClassReport, Flag, FlagValue};
