use relcat::Report;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum GrpdError {
    #[error("{table} refers to index {index}, outside {set} (size {size})")]
    Dangling { table: &'static str, index: usize, set: String, size: usize },
    #[error("{table} has {got} entries, expected {expected}")]
    Length { table: &'static str, got: usize, expected: usize },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not an action: {0}")]
    NotAnAction(String),
    #[error("invalid groupoid:\n{0}")]
    Invalid(Box<Report>),
    #[error("element {element} has no unique {side} unit")]
    Ambiguous { element: String, side: &'static str },
    #[error("product of {left} and {right} is multi-valued")]
    MultiValued { left: String, right: String },
    #[error("monoid structure fails: {0}")]
    NotAMonoid(String),
    #[error("star structure is not strongly positive")]
    NotStronglyPositive,
    #[error("shape mismatch: {0}")]
    Shape(String),
}
