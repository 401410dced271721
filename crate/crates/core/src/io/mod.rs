//! File formats, generators and exports.

pub mod dot;
pub mod format;
pub mod generate;
pub mod report;

pub use dot::export_dot;
pub use format::{digest, parse_problem, write_problem};
pub use generate::{generate, GeneratorKind};
pub use report::{solve, ReportFile, SolveItem, SolveOptions};
