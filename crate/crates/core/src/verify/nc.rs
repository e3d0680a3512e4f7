//! Normal-crossings analysis of a single divisor.

use std::collections::BTreeSet;

use num_traits::Zero;

use super::smooth::{smoothness_check, Smoothness};
use super::Arrangement;
use crate::engine::ComponentId;
use crate::exact::{point_of_param, restrict_to_line, ProjPoint};
use crate::par;

/// A pair of components meeting with multiplicity above one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tangency {
    pub components: (ComponentId, ComponentId),
    /// `None` for a repeated factor without rational roots.
    pub point: Option<ProjPoint>,
    /// Exact for line-curve pairs; a lower bound for two curves.
    pub multiplicity: u32,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NcReport {
    pub normal_crossings: bool,
    /// Recorded points on three or more components, with the count.
    pub multiple_points: Vec<(ProjPoint, usize)>,
    pub tangencies: Vec<Tangency>,
    /// Curves that are not known to be smooth.
    pub singular_components: Vec<(ComponentId, Smoothness)>,
}

impl NcReport {
    /// Every rational point named by some violation.
    pub fn violation_points(&self) -> BTreeSet<ProjPoint> {
        let mut out: BTreeSet<ProjPoint> = self
            .multiple_points
            .iter()
            .map(|(p, _)| p.clone())
            .collect();
        out.extend(self.tangencies.iter().filter_map(|t| t.point.clone()));
        for (_, s) in &self.singular_components {
            out.extend(s.rational_points().iter().cloned());
        }
        out
    }
}

fn line_curve_tangencies<A: Arrangement + ?Sized>(
    a: &A,
    line: usize,
    curve: usize,
) -> Vec<Tangency> {
    let l = &a.lines()[line];
    let components = (ComponentId::Line(line), ComponentId::Curve(curve));
    let Ok(r) = restrict_to_line(&a.curves()[curve], l) else {
        return vec![Tangency {
            components,
            point: None,
            multiplicity: u32::MAX,
        }];
    };
    let mut out = Vec::new();
    for (m, factor) in r.squarefree_decomposition() {
        if m < 2 {
            continue;
        }
        for ([s, t], _) in factor.rational_roots() {
            let p = point_of_param(l, &s, &t).expect("nonzero parameter");
            out.push(Tangency {
                components,
                point: Some(p),
                multiplicity: m,
            });
        }
        if factor.nonrational_part().is_some() {
            out.push(Tangency {
                components,
                point: None,
                multiplicity: m,
            });
        }
    }
    out
}

fn cross_is_zero(u: &[num_bigint::BigInt; 3], v: &[num_bigint::BigInt; 3]) -> bool {
    (&u[1] * &v[2] - &u[2] * &v[1]).is_zero()
        && (&u[2] * &v[0] - &u[0] * &v[2]).is_zero()
        && (&u[0] * &v[1] - &u[1] * &v[0]).is_zero()
}

/// Curve pairs meeting non-transversally at recorded points.
fn curve_curve_tangencies<A: Arrangement + ?Sized>(a: &A) -> Vec<Tangency> {
    let mut out = Vec::new();
    for r in 0..a.record_count() {
        let curves: Vec<usize> = a
            .record_witnesses(r)
            .iter()
            .filter_map(|c| match c {
                ComponentId::Curve(k) => Some(*k),
                ComponentId::Line(_) => None,
            })
            .collect();
        let p = a.record_point(r);
        for (x, &i) in curves.iter().enumerate() {
            for &j in &curves[x + 1..] {
                let gi = a.curves()[i].gradient_at(p);
                let gj = a.curves()[j].gradient_at(p);
                if cross_is_zero(&gi, &gj) {
                    out.push(Tangency {
                        components: (ComponentId::Curve(i), ComponentId::Curve(j)),
                        point: Some(p.clone()),
                        multiplicity: 2,
                    });
                }
            }
        }
    }
    out
}

fn assemble<A: Arrangement + ?Sized>(
    a: &A,
    smoothness: Vec<Smoothness>,
    line_curve: Vec<Vec<Tangency>>,
) -> NcReport {
    let singular_components: Vec<(ComponentId, Smoothness)> = smoothness
        .into_iter()
        .enumerate()
        .filter(|(_, s)| !s.is_smooth())
        .map(|(k, s)| (ComponentId::Curve(k), s))
        .collect();
    let multiple_points: Vec<(ProjPoint, usize)> = (0..a.record_count())
        .filter(|&r| a.record_witnesses(r).len() >= 3)
        .map(|r| (a.record_point(r).clone(), a.record_witnesses(r).len()))
        .collect();
    let mut tangencies: Vec<Tangency> = line_curve.into_iter().flatten().collect();
    tangencies.extend(curve_curve_tangencies(a));
    NcReport {
        normal_crossings: singular_components.is_empty()
            && multiple_points.is_empty()
            && tangencies.is_empty(),
        multiple_points,
        tangencies,
        singular_components,
    }
}

fn line_curve_pairs<A: Arrangement + ?Sized>(a: &A) -> Vec<(usize, usize)> {
    (0..a.lines().len())
        .flat_map(|l| (0..a.curves().len()).map(move |c| (l, c)))
        .collect()
}

/// Violations of normal crossings: non-smooth components, points on three
/// or more components, and tangential meetings. Unknown smoothness counts
/// as a violation.
pub fn normal_crossings_report<A: Arrangement + ?Sized>(a: &A) -> NcReport {
    let smoothness = par::map(a.curves(), smoothness_check);
    let tangencies = par::map(&line_curve_pairs(a), |&(l, c)| {
        line_curve_tangencies(a, l, c)
    });
    assemble(a, smoothness, tangencies)
}

pub fn normal_crossings_report_seq<A: Arrangement + ?Sized>(a: &A) -> NcReport {
    let smoothness = a.curves().iter().map(smoothness_check).collect();
    let tangencies = line_curve_pairs(a)
        .iter()
        .map(|&(l, c)| line_curve_tangencies(a, l, c))
        .collect();
    assemble(a, smoothness, tangencies)
}
