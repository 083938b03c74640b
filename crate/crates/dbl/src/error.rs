use grpd::GrpdError;
use relcat::Report;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum DblError {
    #[error(transparent)]
    Groupoid(#[from] GrpdError),
    #[error("invalid double groupoid:\n{0}")]
    Invalid(Box<Report>),
    #[error("hopfoid axioms fail:\n{0}")]
    NotAHopfoid(Box<Report>),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("composition {composite} is not sharp: {detail}")]
    NotSharp { composite: String, detail: String },
    #[error("orbit relation is not symmetric at {0:?}")]
    Asymmetric(Vec<String>),
    #[error("not a crossed module: {0}")]
    NotCrossed(String),
}
