//! Exhaustive and randomized suites, run sequentially or data-parallel.
//!
//! The `parallel` feature (on by default) runs independent jobs on rayon;
//! without it every `Exec` runs sequentially. Results are identical either
//! way.

pub mod doubles;
pub mod exec;
pub mod linear;

pub use doubles::{check_double, check_doubles, enumerate_doubles, groupoid_round_trips, DoubleVerdict};
pub use exec::Exec;
pub use linear::{linear_suite, vector_hopf_passes, LinearSummary, PROPERTIES};
