use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Range;

use indexmap::IndexMap;
use num_bigint::BigInt;
use smallvec::SmallVec;

use crate::error::EngineError;
use crate::exact::{
    join, meet, point_of_param, restrict_to_line, BinaryForm, HomForm, IntervalQ, ProjLine,
    ProjPoint, UniPoly,
};
use crate::verify::rules;

/// A divisor component: a line or a curve of degree at least two, by
/// insertion index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum ComponentId {
    Line(usize),
    Curve(usize),
}

impl fmt::Display for ComponentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Line(i) => write!(f, "line {i}"),
            Self::Curve(i) => write!(f, "curve {i}"),
        }
    }
}

pub(crate) type Witnesses = SmallVec<[ComponentId; 2]>;

/// A recorded singular point with the components through it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SingRecord {
    pub point: ProjPoint,
    /// Sorted: lines by index, then curves by index.
    pub witnesses: Vec<ComponentId>,
    pub self_singular: bool,
}

/// Non-rational intersection of a new curve with an existing line.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NonRational {
    pub line: usize,
    /// Squarefree product of the irreducible factors of degree ≥ 2 of the
    /// restriction to the line, in the line's canonical parameters.
    pub factor: BinaryForm,
}

/// One rule application. Derived data lists record indices, in ascending
/// point order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Step {
    InitQuadrilateral,
    AddLine {
        anchors: [usize; 2],
        line: ProjLine,
        derived: Vec<usize>,
    },
    AddCurve {
        anchors: Vec<usize>,
        form: HomForm,
        derived: Vec<usize>,
        nonrational: Vec<NonRational>,
    },
}

impl Step {
    pub fn derived(&self) -> &[usize] {
        match self {
            Step::InitQuadrilateral => &[],
            Step::AddLine { derived, .. } | Step::AddCurve { derived, .. } => derived,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GadgetKind {
    Unit,
    AddIntegers,
    Rational,
    TransferAxis,
    CombineXy,
    Infinity,
    Curve,
}

impl GadgetKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::Unit => "unit",
            Self::AddIntegers => "add_integers",
            Self::Rational => "rational",
            Self::TransferAxis => "transfer_axis",
            Self::CombineXy => "combine_xy",
            Self::Infinity => "infinity",
            Self::Curve => "curve",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct GadgetEvent {
    pub kind: GadgetKind,
    pub steps: Range<usize>,
}

/// Certifies that the real root of `minpoly` inside `interval` is the
/// first coordinate of a point `(u:0:1)` on curve `curve` and on `Y = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraicWitness {
    pub minpoly: UniPoly,
    /// `(k/2^m, (k+1)/2^m)`.
    pub interval: IntervalQ,
    pub curve: usize,
}

/// What a top-level construction was asked to produce.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TargetKind {
    Point(ProjPoint),
    Algebraic(AlgebraicWitness),
    Curve(ComponentId),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Target {
    pub kind: TargetKind,
    pub(crate) steps: Range<usize>,
    pub(crate) gadgets: Range<usize>,
}

/// The growing divisor: components, recorded singular points and the trace
/// of rule applications that produced them.
///
/// Every operation validates before it mutates, so a failed call leaves the
/// configuration untouched.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Config {
    pub(crate) lines: Vec<ProjLine>,
    line_index: HashMap<ProjLine, usize>,
    pub(crate) curves: Vec<HomForm>,
    pub(crate) records: IndexMap<ProjPoint, Witnesses>,
    record_step: Vec<u32>,
    /// Record index to the curves singular at that point.
    pub(crate) self_singular: BTreeMap<usize, SmallVec<[usize; 1]>>,
    pub(crate) trace: Vec<Step>,
    /// Line and curve counts after each step.
    step_counts: Vec<(usize, usize)>,
    pub(crate) gadgets: Vec<GadgetEvent>,
    pub(crate) targets: Vec<Target>,
    target_depth: usize,
}

/// The four lines of the reference quadrilateral.
pub fn quadrilateral_lines() -> [ProjLine; 4] {
    [
        ProjLine::new(1, 0, 0).unwrap(),
        ProjLine::new(0, 1, 0).unwrap(),
        ProjLine::new(0, 0, 1).unwrap(),
        ProjLine::new(1, 1, 1).unwrap(),
    ]
}

/// Its six double points, in the customary order.
pub fn quadrilateral_points() -> [ProjPoint; 6] {
    [
        ProjPoint::new(1, 0, 0).unwrap(),
        ProjPoint::new(0, 1, 0).unwrap(),
        ProjPoint::new(0, 0, 1).unwrap(),
        ProjPoint::new(1, -1, 0).unwrap(),
        ProjPoint::new(1, 0, -1).unwrap(),
        ProjPoint::new(0, 1, -1).unwrap(),
    ]
}

impl Default for Config {
    fn default() -> Self {
        Self::init_quadrilateral()
    }
}

impl Config {
    pub fn init_quadrilateral() -> Self {
        let lines = quadrilateral_lines();
        let mut records = IndexMap::new();
        for p in quadrilateral_points() {
            let w: Witnesses = lines
                .iter()
                .enumerate()
                .filter(|(_, l)| crate::exact::incident(&p, l))
                .map(|(i, _)| ComponentId::Line(i))
                .collect();
            records.insert(p, w);
        }
        Self {
            line_index: lines
                .iter()
                .cloned()
                .enumerate()
                .map(|(i, l)| (l, i))
                .collect(),
            lines: lines.to_vec(),
            curves: Vec::new(),
            record_step: vec![0; records.len()],
            records,
            self_singular: BTreeMap::new(),
            trace: vec![Step::InitQuadrilateral],
            step_counts: vec![(4, 0)],
            gadgets: Vec::new(),
            targets: Vec::new(),
            target_depth: 0,
        }
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    pub fn curves(&self) -> &[HomForm] {
        &self.curves
    }

    pub fn trace(&self) -> &[Step] {
        &self.trace
    }

    pub fn targets(&self) -> &[Target] {
        &self.targets
    }

    pub fn singular_count(&self) -> usize {
        self.records.len()
    }

    pub fn point(&self, index: usize) -> Option<&ProjPoint> {
        self.records.get_index(index).map(|(p, _)| p)
    }

    pub fn find(&self, p: &ProjPoint) -> Option<usize> {
        self.records.get_index_of(p)
    }

    pub fn line_index(&self, l: &ProjLine) -> Option<usize> {
        self.line_index.get(l).copied()
    }

    pub fn curve_index(&self, f: &HomForm) -> Option<usize> {
        self.curves.iter().position(|c| c == f)
    }

    pub fn record(&self, index: usize) -> Option<SingRecord> {
        let (point, w) = self.records.get_index(index)?;
        Some(SingRecord {
            point: point.clone(),
            witnesses: w.to_vec(),
            self_singular: self.self_singular.contains_key(&index),
        })
    }

    pub fn singular_points(&self) -> impl Iterator<Item = SingRecord> + '_ {
        (0..self.records.len()).map(|i| self.record(i).unwrap())
    }

    /// Step that created record `index`.
    pub fn record_step(&self, index: usize) -> usize {
        self.record_step[index] as usize
    }

    /// Record `index` as it stood right after step `step`.
    pub fn record_at_step(&self, index: usize, step: usize) -> SingRecord {
        let (lines, curves) = self.step_counts[step];
        let (point, w) = self.records.get_index(index).expect("record index");
        let alive = |c: &ComponentId| match *c {
            ComponentId::Line(i) => i < lines,
            ComponentId::Curve(i) => i < curves,
        };
        let self_singular = self
            .self_singular
            .get(&index)
            .is_some_and(|cs| cs.iter().any(|&c| c < curves));
        SingRecord {
            point: point.clone(),
            witnesses: w.iter().copied().filter(alive).collect(),
            self_singular,
        }
    }

    pub(crate) fn require(&self, p: &ProjPoint) -> Result<usize, EngineError> {
        self.find(p)
            .ok_or_else(|| EngineError::MissingPoint(p.clone()))
    }

    fn anchor_point(&self, i: usize) -> Result<&ProjPoint, EngineError> {
        self.point(i).ok_or(EngineError::AnchorOutOfRange(i))
    }

    /// Points where `line` meets the existing components, each with the
    /// components through it.
    fn line_hits(&self, line: &ProjLine) -> Result<BTreeMap<ProjPoint, Witnesses>, EngineError> {
        let mut hits: BTreeMap<ProjPoint, Witnesses> = BTreeMap::new();
        for (k, m) in self.lines.iter().enumerate() {
            let p = meet(line, m)?;
            hits.entry(p).or_default().push(ComponentId::Line(k));
        }
        for (k, c) in self.curves.iter().enumerate() {
            let r = restrict_to_line(c, line)
                .map_err(|_| EngineError::DuplicateLine(line.to_string()))?;
            for ([s, t], _) in r.rational_roots() {
                let p = point_of_param(line, &s, &t)?;
                hits.entry(p).or_default().push(ComponentId::Curve(k));
            }
        }
        Ok(hits)
    }

    /// Adds the line through recorded points `i` and `j`.
    pub fn add_line(&mut self, i: usize, j: usize) -> Result<usize, EngineError> {
        let p = self.anchor_point(i)?;
        let q = self.anchor_point(j)?;
        if i == j {
            return Err(EngineError::EqualAnchors);
        }
        let line = join(p, q)?;
        if self.line_index.contains_key(&line) {
            return Err(EngineError::DuplicateLine(line.to_string()));
        }
        let hits = self.line_hits(&line)?;
        Ok(self.push_line(line, hits))
    }

    /// Like [`Config::add_line`], but leaves the configuration unchanged
    /// and returns `None` when the line is already a component.
    pub fn add_line_or_skip(&mut self, i: usize, j: usize) -> Result<Option<usize>, EngineError> {
        let p = self.anchor_point(i)?;
        let q = self.anchor_point(j)?;
        if i == j {
            return Err(EngineError::EqualAnchors);
        }
        if self.line_index.contains_key(&join(p, q)?) {
            return Ok(None);
        }
        self.add_line(i, j).map(Some)
    }

    /// [`Config::add_line_or_skip`] addressed by points.
    pub(crate) fn line_through(
        &mut self,
        p: &ProjPoint,
        q: &ProjPoint,
    ) -> Result<Option<usize>, EngineError> {
        let i = self.require(p)?;
        let j = self.require(q)?;
        self.add_line_or_skip(i, j)
    }

    fn push_line(&mut self, line: ProjLine, hits: BTreeMap<ProjPoint, Witnesses>) -> usize {
        let idx = self.lines.len();
        let step = self.trace.len() as u32;
        let new = ComponentId::Line(idx);
        let mut derived = Vec::with_capacity(hits.len());
        let mut existing = Vec::new();
        for (p, mut comps) in hits {
            match self.records.get_index_of(&p) {
                Some(r) => {
                    let w = &mut self.records[r];
                    let pos = w
                        .iter()
                        .position(|c| matches!(c, ComponentId::Curve(_)))
                        .unwrap_or(w.len());
                    w.insert(pos, new);
                    derived.push(r);
                    existing.push(r);
                }
                None => {
                    comps.sort();
                    let pos = comps
                        .iter()
                        .position(|c| matches!(c, ComponentId::Curve(_)))
                        .unwrap_or(comps.len());
                    comps.insert(pos, new);
                    derived.push(self.records.len());
                    self.records.insert(p, comps);
                    self.record_step.push(step);
                }
            }
        }
        let anchors =
            rules::canonical_line_anchors(&existing).expect("both anchors lie on the line");
        self.line_index.insert(line.clone(), idx);
        self.lines.push(line.clone());
        self.push_step(Step::AddLine {
            anchors,
            line,
            derived,
        });
        idx
    }

    pub(crate) fn push_step(&mut self, step: Step) {
        self.trace.push(step);
        self.step_counts.push((self.lines.len(), self.curves.len()));
    }

    pub(crate) fn next_step(&self) -> u32 {
        self.trace.len() as u32
    }

    pub(crate) fn insert_record(&mut self, p: ProjPoint, w: Witnesses, step: u32) -> usize {
        let idx = self.records.len();
        self.records.insert(p, w);
        self.record_step.push(step);
        idx
    }

    pub(crate) fn push_curve(&mut self, form: HomForm) -> usize {
        self.curves.push(form);
        self.curves.len() - 1
    }

    /// Runs `f` and logs it as one gadget invocation.
    pub(crate) fn gadget<T>(
        &mut self,
        kind: GadgetKind,
        f: impl FnOnce(&mut Self) -> Result<T, EngineError>,
    ) -> Result<T, EngineError> {
        let start = self.trace.len();
        let out = f(self)?;
        self.gadgets.push(GadgetEvent {
            kind,
            steps: start..self.trace.len(),
        });
        Ok(out)
    }

    /// Runs `f` as a top-level target; nested targets are not recorded.
    pub(crate) fn target<T>(
        &mut self,
        f: impl FnOnce(&mut Self) -> Result<T, EngineError>,
        kind: impl FnOnce(&Self, &T) -> TargetKind,
    ) -> Result<T, EngineError> {
        let steps = self.trace.len();
        let gadgets = self.gadgets.len();
        self.target_depth += 1;
        let out = f(self);
        self.target_depth -= 1;
        let out = out?;
        if self.target_depth == 0 {
            let kind = kind(self, &out);
            if self.targets.iter().any(|t| t.kind == kind) {
                return Ok(out);
            }
            self.targets.push(Target {
                kind,
                steps: steps..self.trace.len(),
                gadgets: gadgets..self.gadgets.len(),
            });
        }
        Ok(out)
    }

    /// Value `k` of a recorded point of the form `(0:k:1)`.
    pub(crate) fn y_axis_value(&self, index: usize) -> Result<BigInt, EngineError> {
        let p = self.anchor_point(index)?;
        let [x, y, z] = p.coords();
        if num_traits::Zero::is_zero(x) && (num_traits::One::is_one(z) || *z == BigInt::from(-1)) {
            Ok(y * z)
        } else {
            Err(EngineError::BadAnchorShape {
                point: p.clone(),
                expected: "(0:k:1)",
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::incident;

    fn pt(a: i64, b: i64, c: i64) -> ProjPoint {
        ProjPoint::new(a, b, c).unwrap()
    }

    #[test]
    fn quadrilateral_fixture() {
        let cfg = Config::init_quadrilateral();
        assert_eq!(cfg.lines().len(), 4);
        assert_eq!(cfg.singular_count(), 6);
        for r in cfg.singular_points() {
            assert_eq!(r.witnesses.len(), 2);
            let on: Vec<usize> = (0..4)
                .filter(|&i| incident(&r.point, &cfg.lines()[i]))
                .collect();
            assert_eq!(on.len(), 2);
        }
        assert_eq!(cfg.trace(), &[Step::InitQuadrilateral]);
    }

    #[test]
    fn add_line_preconditions() {
        let mut cfg = Config::init_quadrilateral();
        assert_eq!(cfg.add_line(0, 6), Err(EngineError::AnchorOutOfRange(6)));
        assert_eq!(cfg.add_line(2, 2), Err(EngineError::EqualAnchors));
        // (0:1:0) and (0:0:1) span X = 0.
        assert!(matches!(
            cfg.add_line(1, 2),
            Err(EngineError::DuplicateLine(_))
        ));
        assert_eq!(cfg, Config::init_quadrilateral());
        assert_eq!(cfg.add_line_or_skip(1, 2), Ok(None));
    }

    #[test]
    fn add_line_records_all_meets() {
        let mut cfg = Config::init_quadrilateral();
        // (1:0:0) and (0:1:-1): the line Y + Z = 0.
        let l = cfg.add_line(0, 5).unwrap();
        assert_eq!(cfg.lines()[l], ProjLine::new(0, 1, 1).unwrap());
        // Meets X=0 at (0:1:-1), Y=0 and Z=0 at (1:0:0), X+Y+Z=0 at (0:1:-1).
        assert_eq!(cfg.singular_count(), 6);
        let r = cfg.record(cfg.find(&pt(0, 1, -1)).unwrap()).unwrap();
        assert_eq!(
            r.witnesses,
            vec![
                ComponentId::Line(0),
                ComponentId::Line(3),
                ComponentId::Line(4)
            ]
        );
        let Step::AddLine {
            anchors, derived, ..
        } = &cfg.trace()[1]
        else {
            panic!()
        };
        assert_eq!(anchors, &[0, 5]);
        assert_eq!(derived.len(), 2);
        // The record as it stood before the new line.
        assert_eq!(cfg.record_at_step(5, 0).witnesses.len(), 2);
    }
}
