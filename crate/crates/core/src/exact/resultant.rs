//! Sylvester resultants, univariate and homogeneous.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::form::RawForm;
use super::linalg::determinant;
use super::upoly::UniPoly;
use super::Rat;

/// Resultant of two polynomials given by ascending coefficients, taken with
/// the formal degrees `a.len() - 1` and `b.len() - 1`.
pub fn resultant(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let m = a.len().saturating_sub(1);
    let n = b.len().saturating_sub(1);
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (i, c) in a.iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (i, c) in b.iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    determinant(&rows)
}

/// `Res_Y(f, g)` for homogeneous forms of degrees `d`, `e` whose `Y^d` and
/// `Y^e` coefficients are nonzero. The result is a binary form of degree
/// `d·e` in `(X, Z)`: entry `i` multiplies `X^i Z^(de-i)`. All entries are
/// zero exactly when `f` and `g` share a component.
pub fn resultant_form(f: &RawForm, g: &RawForm) -> Vec<BigInt> {
    let d = f.degree().unwrap_or(0) as usize;
    let e = g.degree().unwrap_or(0) as usize;
    let n = d * e;
    let xs: Vec<BigInt> = (0..=n).map(BigInt::from).collect();
    let one = BigInt::one();
    let values: Vec<Rat> = xs
        .iter()
        .map(|x| {
            Rat::from_integer(resultant(
                &f.specialize_y(x, &one),
                &g.specialize_y(x, &one),
            ))
        })
        .collect();
    let poly = interpolate(&xs, &values);
    let mut out: Vec<BigInt> = poly.coeffs().iter().map(|c| c.to_integer()).collect();
    out.resize(n + 1, BigInt::zero());
    out
}

/// Lagrange interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[BigInt], ys: &[Rat]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for (i, (xi, yi)) in xs.iter().zip(ys).enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = UniPoly::one();
        let mut denom = Rat::one();
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&UniPoly::new(vec![Rat::from_integer(-xj), Rat::one()]));
            denom *= Rat::from_integer(xi - xj);
        }
        acc = acc.add(&basis.scale(&(yi / denom)));
    }
    acc
}
