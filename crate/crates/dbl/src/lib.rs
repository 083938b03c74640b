//! Finite double groupoids, their cores and induced groupoids, and the
//! hopfoid structure relations in the relation category.

pub mod core;
pub mod double;
pub mod error;
pub mod examples;
pub mod hopfoid;
pub mod induced;
pub mod reconstruct;
pub mod simplicial;
pub mod small;

pub use crate::core::{core, in_core, Core};
pub use double::FinDoubleGroupoid;
pub use error::DblError;
pub use examples::{build_example, example_crossed, example_dinertia, example_dmain, CrossedModule, Example};
pub use hopfoid::{check_core_product, check_hopfoid, group_style_hopfoid, to_hopfoid, Hopfoid};
pub use induced::{check_induced_lemmas, induced_groupoid, orbit_partition, orbits_agree, Induced};
pub use reconstruct::{double_algebra, double_isomorphism, from_hopfoid, from_structures, isomorphic_up_to_transpose, round_trip};
pub use simplicial::{confine, hopfoid_simplicial};
pub use small::{all_doubles, doubles_over, merge_isomorphic, structure_pairs};
