use crate::engine::{
    AlgebraicWitness, ComponentId, Config, NonRational, SingRecord, Step, Strategy, TargetKind,
};
use crate::exact::{HomForm, ProjLine, ProjPoint};

pub const FORMAT_VERSION: u64 = 1;

/// A step as serialized: derived records are spelled out as they stood
/// right after the step.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CertStep {
    Init,
    AddLine {
        anchors: [usize; 2],
        line: ProjLine,
        derived: Vec<SingRecord>,
    },
    AddCurve {
        anchors: Vec<usize>,
        form: HomForm,
        derived: Vec<SingRecord>,
        nonrational: Vec<NonRational>,
    },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TargetClaim {
    /// `point` is record number `record`.
    RationalPoint {
        point: ProjPoint,
        record: usize,
    },
    AlgebraicPoint(AlgebraicWitness),
    EmbeddedCurve {
        form: HomForm,
        component: ComponentId,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Counts {
    pub lines: usize,
    pub curves: usize,
    pub singular_points: usize,
    pub steps: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Certificate {
    pub version: u64,
    /// Informational; not checked.
    pub strategy: Option<Strategy>,
    pub steps: Vec<CertStep>,
    pub claims: Vec<TargetClaim>,
    pub counts: Counts,
}

impl Certificate {
    pub fn from_config(cfg: &Config, strategy: Option<Strategy>) -> Self {
        let steps = cfg
            .trace()
            .iter()
            .enumerate()
            .map(|(k, s)| {
                let derived = |d: &[usize]| d.iter().map(|&r| cfg.record_at_step(r, k)).collect();
                match s {
                    Step::InitQuadrilateral => CertStep::Init,
                    Step::AddLine {
                        anchors,
                        line,
                        derived: d,
                    } => CertStep::AddLine {
                        anchors: *anchors,
                        line: line.clone(),
                        derived: derived(d),
                    },
                    Step::AddCurve {
                        anchors,
                        form,
                        derived: d,
                        nonrational,
                    } => CertStep::AddCurve {
                        anchors: anchors.clone(),
                        form: form.clone(),
                        derived: derived(d),
                        nonrational: nonrational.clone(),
                    },
                }
            })
            .collect();
        let claims = cfg
            .targets()
            .iter()
            .map(|t| match &t.kind {
                TargetKind::Point(p) => TargetClaim::RationalPoint {
                    point: p.clone(),
                    record: cfg.find(p).expect("targets are recorded"),
                },
                TargetKind::Algebraic(w) => TargetClaim::AlgebraicPoint(w.clone()),
                TargetKind::Curve(id) => TargetClaim::EmbeddedCurve {
                    form: match id {
                        ComponentId::Line(i) => HomForm::from_line(&cfg.lines()[*i]),
                        ComponentId::Curve(i) => cfg.curves()[*i].clone(),
                    },
                    component: *id,
                },
            })
            .collect();
        Certificate {
            version: FORMAT_VERSION,
            strategy,
            steps,
            claims,
            counts: Counts {
                lines: cfg.lines().len(),
                curves: cfg.curves().len(),
                singular_points: cfg.singular_count(),
                steps: cfg.trace().len(),
            },
        }
    }
}
