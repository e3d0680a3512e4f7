//! Certificate format, independent replay, and structural audits.

mod bezout;
mod certificate;
mod nc;
mod oracle;
mod replay;
pub mod rules;
pub mod smooth;
mod wire;

pub use bezout::{bezout_audit, bezout_audit_seq, BezoutEntry};
pub use certificate::{CertStep, Certificate, Counts, TargetClaim, FORMAT_VERSION};
pub use nc::{normal_crossings_report, normal_crossings_report_seq, NcReport, Tangency};
pub use oracle::{singular_locus_oracle, singular_locus_oracle_seq, OracleReport};
pub use replay::{
    replay_certificate, verify_batch, verify_batch_seq, verify_certificate, ClaimResult, Replay,
    VerificationReport,
};
pub use smooth::{smoothness_check, Smoothness};
pub use wire::{emit_certificate, parse_certificate};

use crate::engine::{ComponentId, Config};
use crate::exact::{HomForm, ProjLine, ProjPoint};

/// Read access shared by engine configurations and replayed certificates.
pub trait Arrangement: Sync {
    fn lines(&self) -> &[ProjLine];
    fn curves(&self) -> &[HomForm];
    fn record_count(&self) -> usize;
    fn record_point(&self, index: usize) -> &ProjPoint;
    fn record_witnesses(&self, index: usize) -> &[ComponentId];
    fn record_self_singular(&self, index: usize) -> bool;
    fn find_record(&self, p: &ProjPoint) -> Option<usize>;
}

impl Arrangement for Config {
    fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    fn curves(&self) -> &[HomForm] {
        &self.curves
    }

    fn record_count(&self) -> usize {
        self.records.len()
    }

    fn record_point(&self, index: usize) -> &ProjPoint {
        self.records.get_index(index).unwrap().0
    }

    fn record_witnesses(&self, index: usize) -> &[ComponentId] {
        self.records.get_index(index).unwrap().1
    }

    fn record_self_singular(&self, index: usize) -> bool {
        self.self_singular.contains_key(&index)
    }

    fn find_record(&self, p: &ProjPoint) -> Option<usize> {
        self.records.get_index_of(p)
    }
}
