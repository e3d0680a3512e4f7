use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::CoreError;

/// Returns the primitive, sign-canonical representative of the ray through `v`:
/// coordinates divided by their gcd, first nonzero coordinate positive.
pub fn normalize(v: [BigInt; 3]) -> Result<[BigInt; 3], CoreError> {
    if let Some(small) = to_small(&v) {
        return normalize_small(small.map(i128::from)).map(|w| w.map(BigInt::from));
    }
    let mut v = v;
    if v.iter().all(Zero::is_zero) {
        return Err(CoreError::ZeroVector);
    }
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g != BigInt::from(1) {
        for x in &mut v {
            *x /= &g;
        }
    }
    if v.iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative())
    {
        for x in &mut v {
            *x = -std::mem::take(x);
        }
    }
    Ok(v)
}

fn to_small(v: &[BigInt; 3]) -> Option<[i64; 3]> {
    Some([v[0].to_i64()?, v[1].to_i64()?, v[2].to_i64()?])
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn normalize_small(mut v: [i128; 3]) -> Result<[i128; 3], CoreError> {
    let g = v.iter().fold(0u128, |g, x| gcd_u128(g, x.unsigned_abs()));
    if g == 0 {
        return Err(CoreError::ZeroVector);
    }
    let g = g as i128;
    for x in &mut v {
        *x /= g;
    }
    if v.iter().find(|x| **x != 0).is_some_and(|x| *x < 0) {
        for x in &mut v {
            *x = -*x;
        }
    }
    Ok(v)
}

/// Cross product of two integer triples, normalized.
fn cross_normalized(a: &[BigInt; 3], b: &[BigInt; 3]) -> Result<[BigInt; 3], CoreError> {
    if let (Some(a), Some(b)) = (to_small(a), to_small(b)) {
        let (a, b) = (a.map(i128::from), b.map(i128::from));
        let c = [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ];
        return normalize_small(c).map(|w| w.map(BigInt::from));
    }
    normalize([
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ])
}

fn dot(a: &[BigInt; 3], b: &[BigInt; 3]) -> BigInt {
    if let (Some(a), Some(b)) = (to_small(a), to_small(b)) {
        let s = a
            .iter()
            .zip(b.iter())
            .fold(0i128, |s, (x, y)| s + i128::from(*x) * i128::from(*y));
        return BigInt::from(s);
    }
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

macro_rules! projective_triple {
    ($name:ident) => {
        impl $name {
            /// Normalizes `(a, b, c)`; fails only for the zero vector.
            pub fn new(
                a: impl Into<BigInt>,
                b: impl Into<BigInt>,
                c: impl Into<BigInt>,
            ) -> Result<Self, CoreError> {
                Self::from_triple([a.into(), b.into(), c.into()])
            }

            pub fn from_triple(v: [BigInt; 3]) -> Result<Self, CoreError> {
                normalize(v).map(Self)
            }

            /// Accepts `v` only if it is already normalized.
            pub fn from_normalized(v: [BigInt; 3]) -> Option<Self> {
                match normalize(v.clone()) {
                    Ok(n) if n == v => Some(Self(v)),
                    _ => None,
                }
            }

            pub fn coords(&self) -> &[BigInt; 3] {
                &self.0
            }

            pub fn height(&self) -> BigInt {
                self.0.iter().map(|x| x.abs()).max().unwrap_or_default()
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }
    };
}

/// A point of the projective plane with primitive, sign-canonical integer
/// coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint([BigInt; 3]);

/// The line `aX + bY + cZ = 0`, normalized like [`ProjPoint`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjLine([BigInt; 3]);

projective_triple!(ProjPoint);
projective_triple!(ProjLine);

impl ProjPoint {
    pub fn is_at_infinity(&self) -> bool {
        self.0[2].is_zero()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.0[0], self.0[1], self.0[2])
    }
}

/// The line through two distinct points.
pub fn join(p: &ProjPoint, q: &ProjPoint) -> Result<ProjLine, CoreError> {
    if p == q {
        return Err(CoreError::EqualPoints);
    }
    cross_normalized(&p.0, &q.0).map(ProjLine)
}

/// The intersection point of two distinct lines.
pub fn meet(l: &ProjLine, m: &ProjLine) -> Result<ProjPoint, CoreError> {
    if l == m {
        return Err(CoreError::EqualLines);
    }
    cross_normalized(&l.0, &m.0).map(ProjPoint)
}

pub fn incident(p: &ProjPoint, l: &ProjLine) -> bool {
    dot(&p.0, &l.0).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(a: i64, b: i64, c: i64) -> ProjPoint {
        ProjPoint::new(a, b, c).unwrap()
    }

    fn ln(a: i64, b: i64, c: i64) -> ProjLine {
        ProjLine::new(a, b, c).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let n = |a: i64, b: i64, c: i64| normalize([a.into(), b.into(), c.into()]);
        assert_eq!(n(2, 4, 6).unwrap(), [1, 2, 3].map(BigInt::from));
        assert_eq!(n(0, -3, 3).unwrap(), [0, 1, -1].map(BigInt::from));
        assert_eq!(n(0, 0, 0), Err(CoreError::ZeroVector));
    }

    #[test]
    fn normalize_big_path() {
        let big = BigInt::from(i64::MAX) * 4;
        let v = normalize([&big * -2, &big * 4, &big * 6]).unwrap();
        assert_eq!(v, [1, -2, -3].map(BigInt::from));
    }

    #[test]
    fn join_examples() {
        assert_eq!(join(&pt(1, 0, 0), &pt(0, 1, 0)).unwrap(), ln(0, 0, 1));
        assert_eq!(join(&pt(0, 1, 0), &pt(-1, 0, 1)).unwrap(), ln(1, 0, 1));
        assert_eq!(join(&pt(0, 0, 1), &pt(-1, 2, 1)).unwrap(), ln(2, 1, 0));
        assert_eq!(
            join(&pt(1, 2, 3), &pt(2, 4, 6)),
            Err(CoreError::EqualPoints)
        );
    }

    #[test]
    fn meet_examples() {
        assert_eq!(meet(&ln(1, 0, 1), &ln(1, 1, 0)).unwrap(), pt(-1, 1, 1));
        assert_eq!(meet(&ln(0, 1, -1), &ln(1, 0, 0)).unwrap(), pt(0, 1, 1));
        assert_eq!(meet(&ln(1, 0, 0), &ln(0, 1, 0)).unwrap(), pt(0, 0, 1));
        assert_eq!(
            meet(&ln(1, 0, 0), &ln(-2, 0, 0)),
            Err(CoreError::EqualLines)
        );
    }

    #[test]
    fn incidence_examples() {
        assert!(incident(&pt(1, -1, 0), &ln(1, 1, 1)));
        assert!(!incident(&pt(1, 1, 1), &ln(1, 0, 0)));
        // 0*0 + 1*1 + (-1)*0 = 1
        assert!(!incident(&pt(0, 1, -1), &ln(0, 1, 0)));
    }

    fn triple() -> impl Strategy<Value = [i64; 3]> {
        prop::array::uniform3(-20i64..=20).prop_filter("nonzero", |v| v.iter().any(|x| *x != 0))
    }

    proptest! {
        #[test]
        fn join_is_incident_and_symmetric(a in triple(), b in triple()) {
            let (p, q) = (pt(a[0], a[1], a[2]), pt(b[0], b[1], b[2]));
            prop_assume!(p != q);
            let l = join(&p, &q).unwrap();
            prop_assert!(incident(&p, &l));
            prop_assert!(incident(&q, &l));
            prop_assert_eq!(l, join(&q, &p).unwrap());
        }

        #[test]
        fn duality(a in triple(), b in triple(), c in triple()) {
            let (p, q, r) = (pt(a[0], a[1], a[2]), pt(b[0], b[1], b[2]), pt(c[0], c[1], c[2]));
            prop_assume!(p != q && p != r);
            let pq = join(&p, &q).unwrap();
            prop_assume!(!incident(&r, &pq));
            let pr = join(&p, &r).unwrap();
            prop_assert_eq!(meet(&pq, &pr).unwrap(), p);
        }

        #[test]
        fn normalize_idempotent_and_scale_invariant(a in triple(), k in -9i64..=9) {
            prop_assume!(k != 0);
            let v = a.map(BigInt::from);
            let n = normalize(v.clone()).unwrap();
            prop_assert_eq!(normalize(n.clone()).unwrap(), n.clone());
            let scaled = v.map(|x| x * k);
            prop_assert_eq!(normalize(scaled).unwrap(), n);
        }
    }
}
