//! Independent replay of certificates.
//!
//! The replay state is rebuilt from the exact primitives only; nothing is
//! taken from the certificate without being recomputed and compared.

use std::collections::{BTreeMap, HashSet};

use indexmap::IndexMap;

use super::bezout::{bezout_audit, BezoutEntry};
use super::certificate::{CertStep, Certificate, Counts, TargetClaim};
use super::nc::{normal_crossings_report, NcReport};
use super::rules::{
    canonical_curve_anchors, canonical_line_anchors, lowest_curve_with_root, y_axis_polynomial,
};
use super::smooth::smoothness_check;
use super::Arrangement;
use crate::engine::{
    quadrilateral_lines, quadrilateral_points, AlgebraicWitness, ComponentId, NonRational,
    SingRecord,
};
use crate::error::VerifyError;
use crate::exact::{
    incident, join, kernel_basis_int, meet, monomials, point_of_param, restrict_to_line, HomForm,
    ProjLine, ProjPoint,
};
use crate::par;

/// Arrangement rebuilt from a certificate.
#[derive(Clone, Debug, Default)]
pub struct Replay {
    lines: Vec<ProjLine>,
    line_set: HashSet<ProjLine>,
    curves: Vec<HomForm>,
    records: IndexMap<ProjPoint, Vec<ComponentId>>,
    self_singular: Vec<bool>,
    steps: usize,
}

impl Arrangement for Replay {
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
        self.self_singular[index]
    }

    fn find_record(&self, p: &ProjPoint) -> Option<usize> {
        self.records.get_index_of(p)
    }
}

/// Records a step would derive: `(point, witnesses, self_singular)`.
type Hits = BTreeMap<ProjPoint, (Vec<ComponentId>, bool)>;

impl Replay {
    pub fn counts(&self) -> Counts {
        Counts {
            lines: self.lines.len(),
            curves: self.curves.len(),
            singular_points: self.records.len(),
            steps: self.steps,
        }
    }

    fn init(&mut self) {
        for l in quadrilateral_lines() {
            self.line_set.insert(l.clone());
            self.lines.push(l);
        }
        // Indexed in the fixture order; the set is the pairwise meets.
        for p in quadrilateral_points() {
            let w = (0..4)
                .filter(|&k| incident(&p, &self.lines[k]))
                .map(ComponentId::Line)
                .collect();
            self.records.insert(p, w);
            self.self_singular.push(false);
        }
        debug_assert!((0..4).all(|i| (i + 1..4).all(|j| {
            self.records
                .contains_key(&meet(&self.lines[i], &self.lines[j]).unwrap())
        })));
    }

    fn anchor(&self, i: usize) -> Result<&ProjPoint, String> {
        self.records
            .get_index(i)
            .map(|(p, _)| p)
            .ok_or_else(|| format!("anchor {i} is not a recorded singular point"))
    }

    fn expected_records(&self, hits: Hits) -> Vec<SingRecord> {
        hits.into_iter()
            .map(|(point, (mut witnesses, self_singular))| {
                witnesses.sort();
                SingRecord {
                    point,
                    witnesses,
                    self_singular,
                }
            })
            .collect()
    }

    /// Merges new hits with what is already recorded at each point.
    fn with_existing(&self, hits: &mut Hits, new: ComponentId) {
        for (p, (w, s)) in hits.iter_mut() {
            match self.records.get_full(p) {
                Some((r, _, old)) => {
                    *w = old.clone();
                    *s |= self.self_singular[r];
                }
                None => {
                    for (k, c) in self.curves.iter().enumerate() {
                        let id = ComponentId::Curve(k);
                        if !w.contains(&id) && c.vanishes_at(p) {
                            w.push(id);
                        }
                    }
                }
            }
            w.push(new);
        }
    }

    fn add_line(
        &mut self,
        anchors: [usize; 2],
        line: &ProjLine,
        derived: &[SingRecord],
    ) -> Result<(), String> {
        let [i, j] = anchors;
        let computed =
            join(self.anchor(i)?, self.anchor(j)?).map_err(|e| format!("anchors {i}, {j}: {e}"))?;
        if &computed != line {
            return Err(format!("anchors determine {computed}, not {line}"));
        }
        if self.line_set.contains(line) {
            return Err(format!("{line} is already a component"));
        }
        let mut hits = Hits::new();
        for (k, m) in self.lines.iter().enumerate() {
            let p = meet(line, m).expect("lines are distinct");
            hits.entry(p).or_default().0.push(ComponentId::Line(k));
        }
        for (k, c) in self.curves.iter().enumerate() {
            let r = restrict_to_line(c, line).map_err(|_| format!("{line} lies on curve {k}"))?;
            for ([s, t], _) in r.rational_roots() {
                let p = point_of_param(line, &s, &t).expect("nonzero parameter");
                hits.entry(p).or_default().0.push(ComponentId::Curve(k));
            }
        }
        let existing: Vec<usize> = hits
            .keys()
            .filter_map(|p| self.records.get_index_of(p))
            .collect();
        match canonical_line_anchors(&existing) {
            Some(c) if c == anchors => {}
            Some(c) => {
                return Err(format!(
                    "anchors {anchors:?} are not the canonical pair {c:?}"
                ))
            }
            None => return Err("fewer than two recorded points on the line".into()),
        }
        let idx = self.lines.len();
        self.with_existing(&mut hits, ComponentId::Line(idx));
        let expected = self.expected_records(hits);
        compare_records(&expected, derived)?;
        self.line_set.insert(line.clone());
        self.lines.push(line.clone());
        self.apply(expected);
        Ok(())
    }

    fn add_curve(
        &mut self,
        anchors: &[usize],
        form: &HomForm,
        derived: &[SingRecord],
        nonrational: &[NonRational],
    ) -> Result<(), String> {
        let n = form.degree();
        if n < 2 {
            return Err("curves must have degree at least 2".into());
        }
        let need = (n * n + 1) as usize;
        if anchors.len() != need {
            return Err(format!("expected {need} anchors, got {}", anchors.len()));
        }
        let mut points = Vec::with_capacity(need);
        for &a in anchors {
            let p = self.anchor(a)?;
            if !form.vanishes_at(p) {
                return Err(format!("anchor {a} = {p} is not on the curve"));
            }
            points.push(p);
        }
        let rows: Vec<_> = points
            .iter()
            .map(|p| super::rules::vanishing_row(p, n))
            .collect();
        let kernel = kernel_basis_int(&rows, monomials(n).len());
        if kernel.len() != 1 {
            return Err(format!(
                "anchors cut out a family of dimension {}",
                kernel.len()
            ));
        }
        let unique = HomForm::new(n, monomials(n).into_iter().zip(kernel[0].iter().cloned()))
            .map_err(|e| e.to_string())?;
        if &unique != form {
            return Err(format!("anchors determine {unique}, not {form}"));
        }
        if self.curves.contains(form) {
            return Err("curve is already a component".into());
        }
        let mut restrictions = Vec::with_capacity(self.lines.len());
        for (k, l) in self.lines.iter().enumerate() {
            restrictions
                .push(restrict_to_line(form, l).map_err(|_| format!("curve contains line {k}"))?);
        }
        let on_curve: Vec<(usize, &ProjPoint)> = self
            .records
            .keys()
            .enumerate()
            .filter(|(_, p)| form.vanishes_at(p))
            .collect();
        match canonical_curve_anchors(form, &on_curve) {
            Some(c) if c == anchors => {}
            _ => return Err("anchors are not the canonical choice".into()),
        }

        let mut hits = Hits::new();
        for (k, r) in restrictions.iter().enumerate() {
            for ([s, t], _) in r.rational_roots() {
                let p = point_of_param(&self.lines[k], &s, &t).expect("nonzero parameter");
                hits.entry(p).or_default().0.push(ComponentId::Line(k));
            }
        }
        for (_, p) in &on_curve {
            hits.entry((*p).clone()).or_default();
        }
        for p in smoothness_check(form).rational_points() {
            hits.entry(p.clone()).or_default().1 = true;
        }
        let idx = self.curves.len();
        self.with_existing(&mut hits, ComponentId::Curve(idx));
        let expected = self.expected_records(hits);
        compare_records(&expected, derived)?;

        let expected_nr: Vec<NonRational> = restrictions
            .iter()
            .enumerate()
            .filter_map(|(line, r)| {
                r.nonrational_part()
                    .map(|factor| NonRational { line, factor })
            })
            .collect();
        if expected_nr != nonrational {
            return Err("non-rational intersection data differs from recomputation".into());
        }
        self.curves.push(form.clone());
        self.apply(expected);
        Ok(())
    }

    fn apply(&mut self, records: Vec<SingRecord>) {
        for r in records {
            match self.records.get_index_of(&r.point) {
                Some(i) => {
                    self.records[i] = r.witnesses;
                    self.self_singular[i] = r.self_singular;
                }
                None => {
                    self.records.insert(r.point, r.witnesses);
                    self.self_singular.push(r.self_singular);
                }
            }
        }
    }

    fn step(&mut self, index: usize, step: &CertStep) -> Result<(), String> {
        match step {
            CertStep::Init if index == 0 => {
                self.init();
                Ok(())
            }
            CertStep::Init => Err("init may only be the first step".into()),
            _ if index == 0 => Err("the first step must be init".into()),
            CertStep::AddLine {
                anchors,
                line,
                derived,
            } => self.add_line(*anchors, line, derived),
            CertStep::AddCurve {
                anchors,
                form,
                derived,
                nonrational,
            } => self.add_curve(anchors, form, derived, nonrational),
        }
    }

    fn check_claim(&self, claim: &TargetClaim) -> Result<(), String> {
        match claim {
            TargetClaim::RationalPoint { point, record } => {
                let Some((p, w)) = self.records.get_index(*record) else {
                    return Err(format!("record {record} does not exist"));
                };
                if p != point {
                    return Err(format!("record {record} is {p}, not {point}"));
                }
                if w.len() < 2 {
                    return Err(format!("{point} has {} witnesses", w.len()));
                }
                Ok(())
            }
            TargetClaim::AlgebraicPoint(w) => self.check_algebraic(w),
            TargetClaim::EmbeddedCurve { form, component } => {
                let actual = match *component {
                    ComponentId::Line(i) => self.lines.get(i).map(HomForm::from_line),
                    ComponentId::Curve(i) => self.curves.get(i).cloned(),
                };
                match actual {
                    Some(f) if &f == form => Ok(()),
                    Some(_) => Err(format!("{component} is not {form}")),
                    None => Err(format!("{component} does not exist")),
                }
            }
        }
    }

    fn check_algebraic(&self, w: &AlgebraicWitness) -> Result<(), String> {
        let f = &w.minpoly;
        if f.degree().unwrap_or(0) < 1 || !f.is_monic() {
            return Err("minimal polynomial must be monic of positive degree".into());
        }
        if !f.is_squarefree() {
            return Err("minimal polynomial is not squarefree".into());
        }
        let Some(curve) = self.curves.get(w.curve) else {
            return Err(format!("curve {} does not exist", w.curve));
        };
        let (lo, hi) = (w.interval.lo(), w.interval.hi());
        if f.sign_at(lo) == std::cmp::Ordering::Equal
            || f.sign_at(hi) == std::cmp::Ordering::Equal
            || f.sign_at(lo) == f.sign_at(hi)
        {
            return Err(format!("no sign change of {f} on {}", w.interval));
        }
        if f.count_roots_open(lo, hi) != 1 {
            return Err(format!("{} does not isolate a root of {f}", w.interval));
        }
        let h = y_axis_polynomial(curve);
        if h.is_zero() || !f.divides(&h) {
            return Err(format!(
                "{f} does not divide the restriction of curve {} to Y = 0",
                w.curve
            ));
        }
        match lowest_curve_with_root(&self.curves, f, &w.interval) {
            Some(c) if c == w.curve => Ok(()),
            Some(c) => Err(format!("curve {c} is the first curve through the root")),
            None => Err("no curve passes through the root".into()),
        }
    }
}

fn compare_records(expected: &[SingRecord], got: &[SingRecord]) -> Result<(), String> {
    if expected.len() != got.len() {
        return Err(format!(
            "expected {} derived records, got {}",
            expected.len(),
            got.len()
        ));
    }
    for (k, (e, g)) in expected.iter().zip(got).enumerate() {
        if e != g {
            return Err(format!(
                "derived record {k}: expected {} {:?}, got {} {:?}",
                e.point, e.witnesses, g.point, g.witnesses
            ));
        }
    }
    Ok(())
}

/// Outcome of one step or claim check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClaimResult {
    pub ok: bool,
    pub reason: Option<String>,
}

impl ClaimResult {
    fn from(r: Result<(), String>) -> Self {
        match r {
            Ok(()) => Self {
                ok: true,
                reason: None,
            },
            Err(e) => Self {
                ok: false,
                reason: Some(e),
            },
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    pub ok: bool,
    /// One entry per step checked; replay stops at the first failing step.
    pub steps: Vec<ClaimResult>,
    pub claims: Vec<ClaimResult>,
    /// Counts of the replayed arrangement.
    pub counts: Counts,
    /// Present when the replay completed.
    pub normal_crossings: Option<NcReport>,
    pub bezout_audit: Vec<BezoutEntry>,
    pub failure: Option<VerifyError>,
}

/// Replays the steps and checks the declared counts; claims are not
/// examined.
pub fn replay_certificate(cert: &Certificate) -> Result<Replay, VerifyError> {
    let mut replay = Replay::default();
    for (k, s) in cert.steps.iter().enumerate() {
        replay
            .step(k, s)
            .map_err(|reason| VerifyError::StepMismatch { step: k, reason })?;
        replay.steps += 1;
    }
    if replay.counts() != cert.counts {
        return Err(VerifyError::StepMismatch {
            step: cert.steps.len(),
            reason: format!(
                "declared counts {:?} differ from replayed {:?}",
                cert.counts,
                replay.counts()
            ),
        });
    }
    Ok(replay)
}

pub fn verify_certificate(cert: &Certificate) -> VerificationReport {
    let mut replay = Replay::default();
    let mut steps = Vec::with_capacity(cert.steps.len());
    let mut failure = None;
    for (k, s) in cert.steps.iter().enumerate() {
        let r = replay.step(k, s);
        if let Err(reason) = &r {
            failure = Some(VerifyError::StepMismatch {
                step: k,
                reason: reason.clone(),
            });
        }
        steps.push(ClaimResult::from(r));
        if failure.is_some() {
            break;
        }
        replay.steps += 1;
    }
    if failure.is_none() && replay.counts() != cert.counts {
        failure = Some(VerifyError::StepMismatch {
            step: cert.steps.len(),
            reason: format!(
                "declared counts {:?} differ from replayed {:?}",
                cert.counts,
                replay.counts()
            ),
        });
    }
    let mut claims = Vec::new();
    if failure.is_none() {
        if cert.steps.is_empty() {
            failure = Some(VerifyError::StepMismatch {
                step: 0,
                reason: "no steps".into(),
            });
        }
        for (k, c) in cert.claims.iter().enumerate() {
            let r = replay.check_claim(c);
            if let (Err(reason), None) = (&r, &failure) {
                failure = Some(VerifyError::ClaimFailed {
                    claim: k,
                    reason: reason.clone(),
                });
            }
            claims.push(ClaimResult::from(r));
        }
    }
    let complete = steps.len() == cert.steps.len() && steps.iter().all(|s| s.ok);
    let (normal_crossings, bezout) = if complete {
        (
            Some(normal_crossings_report(&replay)),
            bezout_audit(&replay).unwrap_or_default(),
        )
    } else {
        (None, Vec::new())
    };
    VerificationReport {
        ok: failure.is_none(),
        steps,
        claims,
        counts: replay.counts(),
        normal_crossings,
        bezout_audit: bezout,
        failure,
    }
}

/// Verifies independent certificates in parallel.
pub fn verify_batch(certs: &[Certificate]) -> Vec<VerificationReport> {
    par::map(certs, verify_certificate)
}

pub fn verify_batch_seq(certs: &[Certificate]) -> Vec<VerificationReport> {
    certs.iter().map(verify_certificate).collect()
}
