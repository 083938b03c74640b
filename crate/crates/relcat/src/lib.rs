//! The category of finite sets and relations.
//!
//! [`Rel`] is the morphism type. [`algebra`] holds monoid, comonoid, star,
//! Hopf and action objects together with brute-force diagram checkers, and
//! [`simplicial`] holds simplicial objects. Checkers are written against
//! the [`Category`] trait so the same code also runs in the linear
//! symplectic category.

pub mod algebra;
pub mod cat;
pub mod rel;
pub mod report;
pub mod set;
pub mod simplicial;

pub use algebra::{
    check_action, check_comonoid, check_hopf, check_monoid, check_star, Comonoid, Monoid, RelComonoid,
    RelMonoid, ShapeError, StarReport, StarStructure,
};
pub use cat::{Category, RelCat};
pub use rel::{Blunt, Rel, RelError, RelFlags};
pub use report::{Check, Note, Report};
pub use set::FinSet;
pub use simplicial::{check_simplicial, check_star_simplicial, SimplicialError, SimplicialRel};
