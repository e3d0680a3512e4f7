//! The construction engine: the reference quadrilateral, the line and
//! curve extension rules, and the gadgets and planner built on them.

mod config;
mod curves;
mod gadgets;
mod planner;
mod stats;

pub use config::{
    quadrilateral_lines, quadrilateral_points, AlgebraicWitness, ComponentId, Config, GadgetKind,
    NonRational, SingRecord, Step, Target, TargetKind,
};
pub use curves::{graph_form, unique_curve_through, EmbeddedRoot};
pub use planner::Strategy;
pub use stats::{StatsReport, TargetStats};
