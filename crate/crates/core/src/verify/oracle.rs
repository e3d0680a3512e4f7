//! Brute-force singular locus of the line part: every pairwise meet.

use std::collections::{BTreeMap, BTreeSet};

use super::Arrangement;
use crate::engine::ComponentId;
use crate::exact::{meet, ProjPoint};
use crate::par;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct OracleReport {
    /// Each meet of two lines with the number of lines through it.
    pub points: BTreeMap<ProjPoint, usize>,
    /// Oracle points without a record.
    pub missing: Vec<ProjPoint>,
    /// Records the oracle does not explain.
    pub unexpected: Vec<ProjPoint>,
    /// `(point, recorded line witnesses, oracle multiplicity)`.
    pub count_mismatches: Vec<(ProjPoint, usize, usize)>,
}

impl OracleReport {
    pub fn agrees(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty() && self.count_mismatches.is_empty()
    }
}

fn meets_from<A: Arrangement + ?Sized>(a: &A, i: usize) -> Vec<(ProjPoint, usize, usize)> {
    let lines = a.lines();
    (i + 1..lines.len())
        .map(|j| {
            (
                meet(&lines[i], &lines[j]).expect("components are distinct lines"),
                i,
                j,
            )
        })
        .collect()
}

fn compare<A: Arrangement + ?Sized>(
    a: &A,
    rows: Vec<Vec<(ProjPoint, usize, usize)>>,
) -> OracleReport {
    let mut through: BTreeMap<ProjPoint, BTreeSet<usize>> = BTreeMap::new();
    for (p, i, j) in rows.into_iter().flatten() {
        let s = through.entry(p).or_default();
        s.insert(i);
        s.insert(j);
    }
    let points: BTreeMap<ProjPoint, usize> =
        through.into_iter().map(|(p, s)| (p, s.len())).collect();
    let line_count = |r: usize| {
        a.record_witnesses(r)
            .iter()
            .filter(|c| matches!(c, ComponentId::Line(_)))
            .count()
    };
    let mut report = OracleReport::default();
    for (p, &m) in &points {
        match a.find_record(p) {
            None => report.missing.push(p.clone()),
            Some(r) if line_count(r) != m => {
                report.count_mismatches.push((p.clone(), line_count(r), m))
            }
            Some(_) => {}
        }
    }
    // With curves present, records may be explained by a curve instead.
    let line_only = a.curves().is_empty();
    for r in 0..a.record_count() {
        let p = a.record_point(r);
        if !points.contains_key(p) && (line_only || line_count(r) >= 2) {
            report.unexpected.push(p.clone());
        }
    }
    report.points = points;
    report
}

/// Compares the recorded singular points with all pairwise meets of lines.
pub fn singular_locus_oracle<A: Arrangement + ?Sized>(a: &A) -> OracleReport {
    let rows = par::map_range(a.lines().len(), |i| meets_from(a, i));
    compare(a, rows)
}

pub fn singular_locus_oracle_seq<A: Arrangement + ?Sized>(a: &A) -> OracleReport {
    let rows = (0..a.lines().len()).map(|i| meets_from(a, i)).collect();
    compare(a, rows)
}
