use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("loop edge ({0}, {0})")]
    Loop(usize),
    #[error("duplicate edge ({0}, {1})")]
    Duplicate(usize, usize),
    #[error("edge ({0}, {1}) has an endpoint >= vertex count {2}")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("invalid vertex {0} (vertex count {1})")]
    InvalidVertex(usize, usize),
    #[error("invalid labels: {0}")]
    InvalidLabels(String),
    #[error("empty factor graph")]
    EmptyFactor,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("coloring does not match host graph: {0}")]
    ColoringMismatch(String),
    #[error("edge cap exceeded: {edges} edges > cap {cap}")]
    CapExceeded { edges: usize, cap: usize },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("formula inapplicable: {0}")]
    Inapplicable(String),
    #[error("no daleth-set: {0}")]
    NoDalethSet(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("invalid network spec: {0}")]
    InvalidSpec(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
