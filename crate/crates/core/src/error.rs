use thiserror::Error;

use crate::exact::ProjPoint;

/// Failures of the exact primitives.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("zero vector has no projective class")]
    ZeroVector,
    #[error("cannot join a point with itself")]
    EqualPoints,
    #[error("cannot meet a line with itself")]
    EqualLines,
    #[error("form vanishes identically on the line")]
    ComponentContained,
    #[error("form has no nonzero coefficient")]
    ZeroForm,
    #[error("monomial of degree {found} in a form of degree {expected}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial has no sign change on the interval")]
    NoSignChange,
    #[error("interval bounds must satisfy lo < hi")]
    EmptyInterval,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("{0} and {1} share a component")]
    SharedComponent(String, String),
}

/// Failures of the construction engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("line {0} is already a component")]
    DuplicateLine(String),
    #[error("anchors must be distinct")]
    EqualAnchors,
    #[error("anchor index {0} is not a recorded singular point")]
    AnchorOutOfRange(usize),
    #[error("anchor {point} does not have the shape {expected}")]
    BadAnchorShape {
        point: ProjPoint,
        expected: &'static str,
    },
    #[error("no curve of the requested degree passes through the points")]
    NoCurve,
    #[error("curves through the points form a family of dimension {0}")]
    NotUnique(usize),
    #[error("anchor {0} does not lie on the curve")]
    AnchorNotOnCurve(usize),
    #[error("anchor index {0} is not a recorded singular point")]
    AnchorNotSingular(usize),
    #[error("expected {expected} anchors, got {got}")]
    AnchorCount { expected: usize, got: usize },
    #[error("uniqueness gate failed: {0}")]
    UniquenessFailure(String),
    #[error("component is already present or shares a component with the divisor")]
    DuplicateComponent,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("interval contains {0} roots, expected exactly one")]
    RootNotIsolated(usize),
    #[error("point {0} does not lie on the curve")]
    PointNotOnCurve(ProjPoint),
    #[error("point {0} is listed twice")]
    DuplicatePoint(ProjPoint),
    #[error("point {0} was expected to be recorded but is not")]
    MissingPoint(ProjPoint),
}

/// A rejected certificate encoding.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {position}: {reason}")]
pub struct ParseError {
    pub position: String,
    pub reason: String,
}

impl ParseError {
    pub fn new(position: impl Into<String>, reason: impl Into<String>) -> Self {
        Self {
            position: position.into(),
            reason: reason.into(),
        }
    }
}

/// The first reason a certificate was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("step {step}: {reason}")]
    StepMismatch { step: usize, reason: String },
    #[error("claim {claim}: {reason}")]
    ClaimFailed { claim: usize, reason: String },
}
