use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::config::{
    AlgebraicWitness, ComponentId, Config, GadgetKind, NonRational, Step, TargetKind, Witnesses,
};
use super::planner::Strategy;
use crate::error::{CoreError, EngineError};
use crate::exact::{
    kernel_basis_int, monomials, point_of_param, restrict_to_line, HomForm, IntervalQ, Monomial,
    ProjPoint, Rat, RootLocation, UniPoly,
};
use crate::verify::rules::{canonical_curve_anchors, lowest_curve_with_root, vanishing_row};
use crate::verify::smooth::smoothness_check;

/// The unique form of degree `n` through `points`.
pub fn unique_curve_through(points: &[ProjPoint], n: u32) -> Result<HomForm, EngineError> {
    if n == 0 {
        return Err(CoreError::ZeroDegree.into());
    }
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            return Err(EngineError::DuplicatePoint(p.clone()));
        }
    }
    let rows: Vec<Vec<BigInt>> = points.iter().map(|p| vanishing_row(p, n)).collect();
    let ker = kernel_basis_int(&rows, monomials(n).len());
    match ker.len() {
        0 => Err(EngineError::NoCurve),
        1 => Ok(HomForm::new(
            n,
            monomials(n).into_iter().zip(ker[0].iter().cloned()),
        )?),
        d => Err(EngineError::NotUnique(d)),
    }
}

/// `Y·Z^(n-1) − Z^n·f(X/Z)` with denominators cleared.
pub fn graph_form(f: &UniPoly) -> Result<HomForm, EngineError> {
    let n = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or(CoreError::ZeroDegree)? as u32;
    let den = f.coeffs().iter().fold(BigInt::one(), |acc, c| {
        num_integer::Integer::lcm(&acc, c.denom())
    });
    let scale = Rat::from_integer(den.clone());
    let mut terms = vec![(Monomial::new(0, 1, n - 1), den)];
    for (i, c) in f.coeffs().iter().enumerate() {
        let i = i as u32;
        terms.push((Monomial::new(i, 0, n - i), -(c * &scale).to_integer()));
    }
    Ok(HomForm::new(n, terms)?)
}

impl Config {
    /// Adds the curve `form`, which must be the unique curve of its degree
    /// through the `n²+1` recorded points `anchors`.
    ///
    /// The step stores canonical anchors (see
    /// [`crate::verify::rules::canonical_curve_anchors`]) rather than the
    /// ones supplied.
    pub fn add_curve(
        &mut self,
        form: &HomForm,
        anchors: &[usize],
    ) -> Result<ComponentId, EngineError> {
        let n = form.degree();
        let need = (n * n + 1) as usize;
        if anchors.len() != need {
            return Err(EngineError::AnchorCount {
                expected: need,
                got: anchors.len(),
            });
        }
        let mut points = Vec::with_capacity(need);
        for &a in anchors {
            let p = self.point(a).ok_or(EngineError::AnchorNotSingular(a))?;
            if !form.vanishes_at(p) {
                return Err(EngineError::AnchorNotOnCurve(a));
            }
            points.push(p.clone());
        }
        match unique_curve_through(&points, n) {
            Ok(g) if &g == form => {}
            Ok(g) => {
                return Err(EngineError::UniquenessFailure(format!(
                    "anchors determine {g}"
                )))
            }
            Err(e) => return Err(EngineError::UniquenessFailure(e.to_string())),
        }
        if n == 1 {
            return self.add_line(anchors[0], anchors[1]).map(ComponentId::Line);
        }
        if self.curves.contains(form) {
            return Err(EngineError::DuplicateComponent);
        }
        let mut restrictions = Vec::with_capacity(self.lines.len());
        for l in &self.lines {
            restrictions
                .push(restrict_to_line(form, l).map_err(|_| EngineError::DuplicateComponent)?);
        }

        let idx = self.curves.len();
        let new = ComponentId::Curve(idx);
        let mut hits: BTreeMap<ProjPoint, Witnesses> = BTreeMap::new();
        for (k, r) in restrictions.iter().enumerate() {
            for ([s, t], _) in r.rational_roots() {
                let p = point_of_param(&self.lines[k], &s, &t)?;
                hits.entry(p).or_default().push(ComponentId::Line(k));
            }
        }
        let on_curve: Vec<(usize, &ProjPoint)> = self
            .records
            .keys()
            .enumerate()
            .filter(|(_, p)| form.vanishes_at(p))
            .collect();
        let canonical = canonical_curve_anchors(form, &on_curve)
            .ok_or_else(|| EngineError::UniquenessFailure("no canonical anchor set".into()))?;
        for (_, p) in &on_curve {
            hits.entry((*p).clone()).or_default();
        }
        let singular = smoothness_check(form);
        for p in singular.rational_points() {
            hits.entry(p.clone()).or_default();
        }

        let step = self.next_step();
        let mut derived = Vec::with_capacity(hits.len());
        for (p, mut comps) in hits {
            let is_singular = singular.rational_points().contains(&p);
            let r = match self.records.get_index_of(&p) {
                Some(r) => {
                    self.records[r].push(new);
                    r
                }
                None => {
                    for (k, c) in self.curves.iter().enumerate() {
                        if c.vanishes_at(&p) {
                            comps.push(ComponentId::Curve(k));
                        }
                    }
                    comps.sort();
                    comps.push(new);
                    self.insert_record(p, comps, step)
                }
            };
            if is_singular {
                self.self_singular.entry(r).or_default().push(idx);
            }
            derived.push(r);
        }
        let nonrational = restrictions
            .iter()
            .enumerate()
            .filter_map(|(line, r)| {
                r.nonrational_part()
                    .map(|factor| NonRational { line, factor })
            })
            .collect();
        self.push_curve(form.clone());
        self.push_step(Step::AddCurve {
            anchors: canonical,
            form: form.clone(),
            derived,
            nonrational,
        });
        Ok(new)
    }

    /// Makes every point singular, then adds `form` through them. A form
    /// that is already a component is not added again.
    pub fn embed_curve(
        &mut self,
        form: &HomForm,
        points: &[ProjPoint],
        strategy: Strategy,
    ) -> Result<ComponentId, EngineError> {
        let n = form.degree();
        let need = (n * n + 1) as usize;
        if points.len() != need {
            return Err(EngineError::AnchorCount {
                expected: need,
                got: points.len(),
            });
        }
        for (i, p) in points.iter().enumerate() {
            if points[..i].contains(p) {
                return Err(EngineError::DuplicatePoint(p.clone()));
            }
            if !form.vanishes_at(p) {
                return Err(EngineError::PointNotOnCurve(p.clone()));
            }
        }
        match unique_curve_through(points, n) {
            Ok(g) if &g == form => {}
            Ok(g) => {
                return Err(EngineError::UniquenessFailure(format!(
                    "points determine {g}"
                )))
            }
            Err(e) => return Err(EngineError::UniquenessFailure(e.to_string())),
        }
        self.target(
            |cfg| {
                let anchors = points
                    .iter()
                    .map(|p| cfg.construct_point(p, strategy))
                    .collect::<Result<Vec<usize>, _>>()?;
                cfg.gadget(GadgetKind::Curve, |cfg| {
                    cfg.add_curve_or_skip(form, &anchors)
                })
            },
            |_, id| TargetKind::Curve(*id),
        )
    }

    fn add_curve_or_skip(
        &mut self,
        form: &HomForm,
        anchors: &[usize],
    ) -> Result<ComponentId, EngineError> {
        if let Some(l) = form.to_line() {
            if let Some(i) = self.line_index(&l) {
                return Ok(ComponentId::Line(i));
            }
        } else if let Some(i) = self.curve_index(form) {
            return Ok(ComponentId::Curve(i));
        }
        self.add_curve(form, anchors)
    }

    /// Encodes the real root of `f` in `root` as `(u:0:1)`: makes the
    /// points `(k : f(k) : 1)`, `k = 0..n²`, singular and adds the curve
    /// `Y·Z^(n-1) = Z^n·f(X/Z)` through them.
    ///
    /// Returns the recorded point when `u` is rational, otherwise a witness
    /// whose interval is the dyadic cell of width at most `width` that
    /// isolates `u`.
    pub fn embed_algebraic(
        &mut self,
        f: &UniPoly,
        root: &IntervalQ,
        width: &Rat,
        strategy: Strategy,
    ) -> Result<EmbeddedRoot, EngineError> {
        let n = match f.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(CoreError::ZeroDegree.into()),
        };
        if !f.is_monic() {
            return Err(EngineError::NotMonic);
        }
        if !f.is_squarefree() {
            return Err(EngineError::NotSquarefree);
        }
        let count = f.count_roots_open(root.lo(), root.hi());
        if count != 1 {
            return Err(EngineError::RootNotIsolated(count));
        }
        if *width <= Rat::zero() {
            return Err(CoreError::EmptyInterval.into());
        }
        let location = f.locate_root_dyadic(root, width)?;
        let form = graph_form(f)?;
        let points: Vec<ProjPoint> = (0..=(n * n) as i64)
            .map(|k| {
                let k = Rat::from_integer(BigInt::from(k));
                let v = f.eval(&k);
                ProjPoint::from_triple([
                    k.numer() * v.denom(),
                    v.numer().clone(),
                    v.denom().clone(),
                ])
                .expect("z = 1 chart")
            })
            .collect();
        self.target(
            |cfg| {
                let anchors = points
                    .iter()
                    .map(|p| cfg.construct_point(p, strategy))
                    .collect::<Result<Vec<usize>, _>>()?;
                let id = cfg.gadget(GadgetKind::Curve, |cfg| {
                    cfg.add_curve_or_skip(&form, &anchors)
                })?;
                Ok(match location {
                    RootLocation::Rational(u) => {
                        let p = ProjPoint::from_triple([
                            u.numer().clone(),
                            BigInt::zero(),
                            u.denom().clone(),
                        ])?;
                        cfg.require(&p)?;
                        EmbeddedRoot::Rational(p)
                    }
                    RootLocation::Interval(interval) => {
                        debug_assert!(matches!(id, ComponentId::Curve(_)));
                        let curve = lowest_curve_with_root(&cfg.curves, f, &interval)
                            .expect("the new curve passes through the root");
                        EmbeddedRoot::Algebraic(AlgebraicWitness {
                            minpoly: f.clone(),
                            interval,
                            curve,
                        })
                    }
                })
            },
            |_, out| match out {
                EmbeddedRoot::Rational(p) => TargetKind::Point(p.clone()),
                EmbeddedRoot::Algebraic(w) => TargetKind::Algebraic(w.clone()),
            },
        )
    }
}

/// Outcome of [`Config::embed_algebraic`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EmbeddedRoot {
    Rational(ProjPoint),
    Algebraic(AlgebraicWitness),
}
