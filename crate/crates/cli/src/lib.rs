//! Command-line surface over [`m0n`]: compute, evaluate, verify and export
//! the `γ_n` polynomials.

pub mod commands;
pub mod render;

pub use commands::{cmd_eval, cmd_gamma, cmd_table, cmd_verify, run_verify, Output};
pub use render::{GammaRecord, OutputFormat, TermRecord};
