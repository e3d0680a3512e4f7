use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;

use super::config::{ComponentId, Config, GadgetKind, Step, TargetKind};

/// Per-target measurements. Steps are attributed to the target during
/// whose construction they were taken; work reused from earlier targets is
/// not counted again.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TargetStats {
    pub label: String,
    /// Largest absolute coordinate (points), coefficient (curves) or
    /// integral minimal-polynomial coefficient (algebraic points).
    pub height: BigInt,
    pub lines_added: usize,
    pub curves_added: usize,
    pub steps: usize,
    pub gadgets: BTreeMap<GadgetKind, usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StatsReport {
    pub targets: Vec<TargetStats>,
    pub lines: usize,
    pub curves: usize,
    pub singular_points: usize,
    pub trace_len: usize,
}

impl StatsReport {
    /// Stats of a construction without gadget information, from its steps
    /// and the step range attributed to each target.
    pub fn from_parts(
        steps: &[Step],
        targets: impl IntoIterator<Item = (String, BigInt, std::ops::Range<usize>)>,
        singular_points: usize,
    ) -> Self {
        let count = |r: &std::ops::Range<usize>| {
            let mut lines = 0;
            let mut curves = 0;
            for s in &steps[r.clone()] {
                match s {
                    Step::AddLine { .. } => lines += 1,
                    Step::AddCurve { .. } => curves += 1,
                    Step::InitQuadrilateral => {}
                }
            }
            (lines, curves)
        };
        let targets = targets
            .into_iter()
            .map(|(label, height, range)| {
                let (lines_added, curves_added) = count(&range);
                TargetStats {
                    label,
                    height,
                    lines_added,
                    curves_added,
                    steps: range.len(),
                    gadgets: BTreeMap::new(),
                }
            })
            .collect();
        let (lines, curves) = count(&(0..steps.len()));
        StatsReport {
            targets,
            lines: lines + 4,
            curves,
            singular_points,
            trace_len: steps.len(),
        }
    }
}

pub(crate) fn max_abs<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values
        .into_iter()
        .map(|v| v.abs())
        .max()
        .unwrap_or_default()
}

impl Config {
    pub fn stats(&self) -> StatsReport {
        let parts = self.targets.iter().map(|t| {
            let (label, height) = match &t.kind {
                TargetKind::Point(p) => (p.to_string(), p.height()),
                TargetKind::Algebraic(w) => (
                    format!("root of {} in {}", w.minpoly, w.interval),
                    max_abs(&w.minpoly.primitive_integer_coeffs()),
                ),
                TargetKind::Curve(id) => match id {
                    ComponentId::Line(i) => {
                        (format!("line {}", self.lines[*i]), self.lines[*i].height())
                    }
                    ComponentId::Curve(i) => {
                        let f = &self.curves[*i];
                        (
                            format!("curve {f}"),
                            max_abs(f.terms().iter().map(|(_, c)| c)),
                        )
                    }
                },
            };
            (label, height, t.steps.clone())
        });
        let mut report = StatsReport::from_parts(&self.trace, parts, self.singular_count());
        for (ts, t) in report.targets.iter_mut().zip(&self.targets) {
            for g in &self.gadgets[t.gadgets.clone()] {
                *ts.gadgets.entry(g.kind).or_default() += 1;
            }
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Strategy;
    use crate::exact::ProjPoint;

    #[test]
    fn quadrilateral_totals() {
        let s = Config::init_quadrilateral().stats();
        assert_eq!(
            (s.lines, s.curves, s.singular_points, s.trace_len),
            (4, 0, 6, 1)
        );
        assert!(s.targets.is_empty());
    }

    #[test]
    fn target_height_and_attribution() {
        let mut cfg = Config::init_quadrilateral();
        cfg.construct_point(&ProjPoint::new(3, 0, 5).unwrap(), Strategy::AdditionChain)
            .unwrap();
        cfg.construct_point(&ProjPoint::new(3, 0, 5).unwrap(), Strategy::AdditionChain)
            .unwrap();
        let s = cfg.stats();
        assert_eq!(s.targets.len(), 1);
        let t = &s.targets[0];
        assert_eq!(t.height, BigInt::from(5));
        assert_eq!(t.steps, cfg.trace().len() - 1);
        assert_eq!(t.lines_added, cfg.lines().len() - 4);
        assert_eq!(s.lines, cfg.lines().len());
        assert!(t.gadgets[&GadgetKind::Rational] == 1);
    }
}
