//! Canonical anchor choices. A rule application is valid with many anchor
//! sets; certificates must carry these, so that no anchor can be swapped
//! for another valid one.

use num_bigint::BigInt;

use crate::exact::{monomials, rank, HomForm, IntervalQ, Monomial, ProjPoint, Rat, UniPoly};

/// The two smallest indices among the records that already lay on the new
/// line.
pub fn canonical_line_anchors(existing_on_line: &[usize]) -> Option<[usize; 2]> {
    let mut v = existing_on_line.to_vec();
    v.sort_unstable();
    match v[..] {
        [a, b, ..] => Some([a, b]),
        _ => None,
    }
}

/// Row of the vanishing-condition matrix for `p` in degree `n`.
pub fn vanishing_row(p: &ProjPoint, n: u32) -> Vec<BigInt> {
    let c = p.coords();
    monomials(n)
        .iter()
        .map(|m| c[0].pow(m.x) * c[1].pow(m.y) * c[2].pow(m.z))
        .collect()
}

/// Anchors for a curve of degree `n`, chosen among the records on it
/// (`on_curve`, in ascending index order).
///
/// Scanning in index order, a record is taken when it raises the rank of
/// the vanishing conditions, until the conditions cut out the curve alone;
/// the remaining slots up to `n²+1` go to the earliest records not yet
/// taken. The result is sorted. `None` when the records do not determine
/// the curve or are too few.
pub fn canonical_curve_anchors(
    form: &HomForm,
    on_curve: &[(usize, &ProjPoint)],
) -> Option<Vec<usize>> {
    let n = form.degree();
    let cols = monomials(n).len();
    let need = (n * n + 1) as usize;
    if on_curve.len() < need {
        return None;
    }
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut taken = Vec::new();
    for (idx, p) in on_curve {
        if rows.len() == cols - 1 {
            break;
        }
        rows.push(vanishing_row(p, n));
        if rank(&rows, cols) == rows.len() {
            taken.push(*idx);
        } else {
            rows.pop();
        }
    }
    if rows.len() != cols - 1 || taken.len() > need {
        return None;
    }
    let rest: Vec<usize> = on_curve
        .iter()
        .map(|(i, _)| *i)
        .filter(|i| !taken.contains(i))
        .collect();
    let pad = need - taken.len();
    if rest.len() < pad {
        return None;
    }
    taken.extend_from_slice(&rest[..pad]);
    taken.sort_unstable();
    Some(taken)
}

/// `F(x, 0, 1)`.
pub fn y_axis_polynomial(form: &HomForm) -> UniPoly {
    let n = form.degree();
    UniPoly::new(
        (0..=n)
            .map(|i| Rat::from_integer(form.coefficient(Monomial::new(i, 0, n - i))))
            .collect(),
    )
}

/// The lowest-index curve through `(u:0:1)`, where `u` is the root of
/// `minpoly` isolated by `interval`.
pub fn lowest_curve_with_root(
    curves: &[HomForm],
    minpoly: &UniPoly,
    interval: &IntervalQ,
) -> Option<usize> {
    curves.iter().position(|c| {
        let h = y_axis_polynomial(c);
        !h.is_zero()
            && minpoly
                .gcd(&h)
                .count_roots_open(interval.lo(), interval.hi())
                > 0
    })
}
