//! Problem files, reports and subcommands behind the `colorhom` binary.

pub mod problem;
pub mod report;
pub mod run;

pub use problem::{emit_spec, parse_spec, Problem, ProblemSpec, SchemaError};
pub use report::Report;
pub use run::{run, run_args, Outcome};
