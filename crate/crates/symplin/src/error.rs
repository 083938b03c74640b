use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinError {
    #[error("shape: {0}")]
    Shape(String),
    #[error("not a symplectic form: {0}")]
    NotSymplectic(String),
    #[error("endpoint mismatch: {0}")]
    Mismatch(String),
    #[error("subspace is not coisotropic")]
    NotCoisotropic,
    #[error("graph is not lagrangian")]
    NotLagrangian,
    #[error("bad rational {0:?}")]
    Parse(String),
    #[error("invariant violated: {0}")]
    Broken(String),
}
