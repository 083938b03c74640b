//! Finite groupoids: validation, standard constructions, nerves, actions,
//! bibundles, and the passage to star monoids in the relation category.

pub mod action;
pub mod bibundle;
pub mod bridge;
pub mod error;
pub mod group;
pub mod groupoid;
pub mod iso;
pub mod nerve;
pub mod small;
pub mod standard;

pub use action::{action_bridge, action_groupoid, extract_action, GroupoidAction};
pub use bibundle::{bibundle_check, morita_invariants_agree, Bibundle, Principality};
pub use bridge::{agree_on_arrows, from_star_monoid, round_trip, to_star_monoid};
pub use error::GrpdError;
pub use group::Group;
pub use groupoid::FinGroupoid;
pub use iso::{find_isomorphism, groupoid_isomorphism, is_isomorphism, isomorphic, PartialAlgebra};
pub use nerve::{nerve, nerve_star};
pub use small::{all_groupoids, connected, disjoint_union, product};
pub use standard::{build_standard, group, group_action, inertia, pair, trivial, Standard};
