use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{int_rat, primitive_integers, Rat};
use crate::error::CoreError;

/// Open interval `(lo, hi)` with rational endpoints.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntervalQ {
    lo: Rat,
    hi: Rat,
}

impl IntervalQ {
    pub fn new(lo: Rat, hi: Rat) -> Result<Self, CoreError> {
        if lo < hi {
            Ok(Self { lo, hi })
        } else {
            Err(CoreError::EmptyInterval)
        }
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo < x && x < &self.hi
    }

    pub fn contains_interval(&self, other: &IntervalQ) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// True when the endpoints are `k/2^m` and `(k+1)/2^m` for some `m ≥ 0`.
    pub fn is_adjacent_dyadic(&self) -> bool {
        let w = self.width();
        if !w.numer().is_one() || !is_power_of_two(w.denom()) {
            return false;
        }
        (&self.lo * Rat::from_integer(w.denom().clone())).is_integer()
    }
}

impl fmt::Display for IntervalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

fn is_power_of_two(n: &BigInt) -> bool {
    n.is_positive() && (n & (n - BigInt::one())).is_zero()
}

/// Where a root singled out by an isolating interval lives.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RootLocation {
    Rational(Rat),
    Interval(IntervalQ),
}

/// Univariate polynomial over `Q`, coefficients ascending, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|c| Rat::from_integer(BigInt::from(*c)))
                .collect(),
        )
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rat::from_integer).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn sign_at(&self, x: &Rat) -> Ordering {
        self.eval(x).cmp(&Rat::zero())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int_rat(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_default();
                    let b = other.coeffs.get(i).cloned().unwrap_or_default();
                    a + b
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / &lead;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &c * d;
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_rem(self).1.is_zero()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_constant()
    }

    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Yun's decomposition: monic squarefree, pairwise coprime factors with
    /// their multiplicities, so that `f = lc · Π aᵢ^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(u32, UniPoly)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a = f.gcd(&df);
        let mut b = f.div_rem(&a).0;
        let c = df.div_rem(&a).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            b = b.div_rem(&a).0;
            let c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            if !a.is_constant() {
                out.push((i, a));
            }
            i += 1;
        }
        out
    }

    /// Primitive integer multiple with positive leading coefficient.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        let mut ints = primitive_integers(&self.coeffs).unwrap_or_default();
        if ints.last().is_some_and(Signed::is_negative) {
            for c in &mut ints {
                *c = -std::mem::take(c);
            }
        }
        ints
    }

    pub fn sturm_chain(&self) -> Vec<UniPoly> {
        let mut chain = vec![self.clone()];
        let mut next = self.derivative();
        while !next.is_zero() {
            let rem = chain.last().unwrap().div_rem(&next).1;
            chain.push(next);
            next = rem.scale(&-Rat::one());
        }
        chain
    }

    fn variations(chain: &[UniPoly], x: &Rat) -> usize {
        let signs: Vec<Ordering> = chain
            .iter()
            .map(|p| p.sign_at(x))
            .filter(|s| *s != Ordering::Equal)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_roots_in(&self, chain: &[UniPoly], a: &Rat, b: &Rat) -> usize {
        Self::variations(chain, a).saturating_sub(Self::variations(chain, b))
    }

    /// Number of distinct real roots in the open interval `(a, b)`.
    pub fn count_roots_open(&self, a: &Rat, b: &Rat) -> usize {
        if a >= b {
            return 0;
        }
        let chain = self.squarefree_part().sturm_chain();
        let n = self.count_roots_in(&chain, a, b);
        if self.eval(b).is_zero() {
            n - 1
        } else {
            n
        }
    }

    /// A power of two strictly larger than every root modulus.
    pub fn root_bound(&self) -> Rat {
        let lead = self.leading().expect("nonzero polynomial").abs();
        let max = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_default();
        let cauchy = max + Rat::one();
        let mut b = Rat::one();
        while b <= cauchy {
            b *= int_rat(BigInt::from(2));
        }
        b
    }

    /// Splits `(a, b)` near its midpoint at a point that is not a root.
    fn split_point(&self, a: &Rat, b: &Rat) -> Rat {
        let w = b - a;
        let mut k = 1i64;
        loop {
            let m = a + &w * Rat::new(BigInt::from(k), BigInt::from(k + 1));
            if !self.eval(&m).is_zero() {
                return m;
            }
            k += 1;
        }
    }

    /// One open interval per real root, in increasing order; each contains
    /// exactly one root, has width at most 1 and non-root endpoints.
    pub fn sturm_isolate(&self) -> Result<Vec<IntervalQ>, CoreError> {
        if self.is_zero() {
            return Err(CoreError::ZeroPolynomial);
        }
        if !self.is_squarefree() {
            return Err(CoreError::NotSquarefree);
        }
        if self.is_constant() {
            return Ok(Vec::new());
        }
        let chain = self.sturm_chain();
        let bound = self.root_bound();
        let mut out = Vec::new();
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((a, b)) = stack.pop() {
            match self.count_roots_in(&chain, &a, &b) {
                0 => {}
                1 if &b - &a <= Rat::one() => out.push(IntervalQ { lo: a, hi: b }),
                _ => {
                    let m = self.split_point(&a, &b);
                    stack.push((m.clone(), b));
                    stack.push((a, m));
                }
            }
        }
        out.sort_by(|x, y| x.lo.cmp(&y.lo));
        Ok(out)
    }

    /// Bisects an interval whose endpoints bracket a sign change down to the
    /// requested width.
    pub fn refine_root(&self, interval: &IntervalQ, width: &Rat) -> Result<IntervalQ, CoreError> {
        let (mut lo, mut hi) = (interval.lo.clone(), interval.hi.clone());
        let s_lo = self.sign_at(&lo);
        let s_hi = self.sign_at(&hi);
        if s_lo == Ordering::Equal || s_hi == Ordering::Equal || s_lo == s_hi {
            return Err(CoreError::NoSignChange);
        }
        let two = int_rat(BigInt::from(2));
        while &hi - &lo > *width {
            let mid = (&lo + &hi) / &two;
            match self.sign_at(&mid) {
                Ordering::Equal => {
                    let eps = width / int_rat(BigInt::from(4));
                    return IntervalQ::new(&mid - &eps, &mid + &eps);
                }
                s if s == s_lo => lo = mid,
                _ => hi = mid,
            }
        }
        IntervalQ::new(lo, hi)
    }

    /// Distinct rational roots, ascending.
    pub fn rational_roots(&self) -> Vec<Rat> {
        if self.is_constant() {
            return Vec::new();
        }
        let sqf = self.squarefree_part();
        let ints = sqf.primitive_integer_coeffs();
        let lead = ints.last().unwrap().abs();
        if !has_root_mod_primes(&ints) {
            return Vec::new();
        }
        let sqf = UniPoly::from_bigints(&ints);
        // Distinct rationals with denominators dividing `lead` are at least
        // 1/lead² apart.
        let width = Rat::new(BigInt::one(), &lead * &lead + BigInt::one());
        let mut out = Vec::new();
        for iv in sqf.sturm_isolate().expect("squarefree by construction") {
            let small = sqf.refine_root(&iv, &width).expect("isolating interval");
            let cand = simplest_rational_between(small.lo(), small.hi());
            if sqf.eval(&cand).is_zero() {
                out.push(cand);
            }
        }
        out
    }

    fn compare_root(&self, chain: &[UniPoly], iv: &IntervalQ, c: &Rat) -> Ordering {
        if c <= &iv.lo {
            return Ordering::Greater;
        }
        if c >= &iv.hi {
            return Ordering::Less;
        }
        if self.count_roots_in(chain, &iv.lo, c) == 1 {
            if self.eval(c).is_zero() {
                Ordering::Equal
            } else {
                Ordering::Less
            }
        } else {
            Ordering::Greater
        }
    }

    /// Locates the unique root of a squarefree polynomial inside `interval`,
    /// either exactly (if rational and hit) or as an isolating interval
    /// `(k/2^m, (k+1)/2^m)` of width at most `min(width, 1)`.
    pub fn locate_root_dyadic(
        &self,
        interval: &IntervalQ,
        width: &Rat,
    ) -> Result<RootLocation, CoreError> {
        if !self.is_squarefree() {
            return Err(CoreError::NotSquarefree);
        }
        let chain = self.sturm_chain();
        let inside = self.count_roots_in(&chain, &interval.lo, &interval.hi)
            - usize::from(self.eval(&interval.hi).is_zero());
        if inside != 1 {
            return Err(CoreError::NoSignChange);
        }
        let mut klo = interval.lo.floor().to_integer();
        let mut khi = interval.hi.ceil().to_integer();
        while &khi - &klo > BigInt::one() {
            let mid: BigInt = (&klo + &khi).div_floor(&BigInt::from(2));
            match self.compare_root(&chain, interval, &int_rat(mid.clone())) {
                Ordering::Equal => return Ok(RootLocation::Rational(int_rat(mid))),
                Ordering::Less => khi = mid,
                Ordering::Greater => klo = mid,
            }
        }
        let target = width.clone().min(Rat::one());
        let mut lo = int_rat(klo);
        let mut step = Rat::one();
        let two = int_rat(BigInt::from(2));
        loop {
            let hi = &lo + &step;
            let isolated = !self.eval(&lo).is_zero()
                && !self.eval(&hi).is_zero()
                && self.count_roots_in(&chain, &lo, &hi) == 1;
            if step <= target && isolated {
                return Ok(RootLocation::Interval(IntervalQ { lo, hi }));
            }
            step = &step / &two;
            let mid = &lo + &step;
            match self.compare_root(&chain, interval, &mid) {
                Ordering::Equal => return Ok(RootLocation::Rational(mid)),
                Ordering::Less => {}
                Ordering::Greater => lo = mid,
            }
        }
    }
}

/// False only when some prime `p ∤ lead` gives no root mod `p`; a rational
/// root `s/t` has `t | lead`, so it would reduce to one.
fn has_root_mod_primes(ints: &[BigInt]) -> bool {
    const PRIMES: [u64; 6] = [251, 257, 263, 269, 271, 277];
    for p in PRIMES {
        let bp = BigInt::from(p);
        let coeffs: Vec<u64> = ints
            .iter()
            .map(|c| c.mod_floor(&bp).to_u64().expect("reduced below p"))
            .collect();
        if coeffs.last() == Some(&0) {
            continue;
        }
        let root = (0..p).any(|x| coeffs.iter().rev().fold(0, |acc, c| (acc * x + c) % p) == 0);
        if !root {
            return false;
        }
    }
    true
}

/// The rational with the smallest denominator in `[lo, hi]`.
pub fn simplest_rational_between(lo: &Rat, hi: &Rat) -> Rat {
    debug_assert!(lo <= hi);
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    let next = &fl + Rat::one();
    if &next <= hi {
        return next;
    }
    let inner = simplest_rational_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}t", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}t^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}
