//! Problem files, reports, and the command runner behind the `lrcoh` binary.

pub mod instance;
pub mod problem;
pub mod report;
pub mod run;

pub use problem::{parse_problem, ParseError, ProblemFile};
pub use report::Report;
pub use run::{grid_points, load_problem, parse_grid, run, Command, GridRange, RunError, RunOptions};
