//! Exact construction of rigid plane divisors and independent checking of
//! their construction certificates.
//!
//! The crate is split in three layers:
//!
//! * [`exact`] holds the arithmetic: projective incidence over the integers,
//!   homogeneous forms, binary forms on lines, fraction-free kernels,
//!   resultants and real root isolation.
//! * [`engine`] grows a [`Config`] from the reference quadrilateral using only
//!   two extension rules (a line through two singular points, and a curve that
//!   is the unique member of its degree through `n²+1` singular points).
//! * [`verify`] replays certificates from scratch, and audits arrangements
//!   (singular-locus oracle, Bézout budgets, smoothness, normal crossings).
//!
//! The `parallel` feature (on by default) runs the embarrassingly parallel
//! audits on rayon; without it every loop runs sequentially.

pub mod engine;
pub mod exact;
pub mod par;
pub mod verify;

mod error;

pub use engine::{
    AlgebraicWitness, ComponentId, Config, GadgetKind, SingRecord, StatsReport, Step, Strategy,
};
pub use error::{CoreError, EngineError, ParseError, VerifyError};
pub use exact::{BinaryForm, HomForm, IntervalQ, Monomial, ProjLine, ProjPoint, Rat, UniPoly};
pub use verify::{Certificate, TargetClaim, VerificationReport};
