//! Exact linear symplectic algebra: symplectic spaces over the rationals,
//! lagrangian canonical relations, coisotropic reduction, factorization,
//! cotangent lifts and two-term normal forms of chains.
//!
//! Every relation constructed here is checked to be lagrangian.

pub mod canrel;
pub mod chain;
pub mod cotangent;
pub mod error;
pub mod matrix;
pub mod random;
pub mod reduce;
pub mod space;

pub use canrel::{compose_lin, LinCanRel, LinCat, Transversality};
pub use chain::{ww_compose, ww_two_term, Collapsed, CorrChain, TwoTerm};
pub use cotangent::{
    cotangent_comonoid, cotangent_lift, cotangent_space, cotangent_vector, schwartz, vector_hopf, VectorHopf,
};
pub use error::LinError;
pub use matrix::{parse_rational, q, Matrix, Q};
pub use reduce::{factor, induced_iso, reduce, Factorization, QuotientMap, ReductionData};
pub use space::{SubspaceKind, SympSpace, Subspace};
