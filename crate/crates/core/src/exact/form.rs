use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::proj::{ProjLine, ProjPoint};
use crate::error::CoreError;

/// `X^x Y^y Z^z`.
///
/// Ordered graded-lexicographically with `X > Y > Z`, so the greatest
/// monomial of a form is its leading one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Monomial {
    pub const fn new(x: u32, y: u32, z: u32) -> Self {
        Self { x, y, z }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y + self.z
    }

    pub fn exponents(&self) -> [u32; 3] {
        [self.x, self.y, self.z]
    }

    fn from_exponents(e: [u32; 3]) -> Self {
        Self::new(e[0], e[1], e[2])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.x.cmp(&other.x))
            .then(self.y.cmp(&other.y))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of the given degree, leading first.
pub fn monomials(degree: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(((degree + 1) * (degree + 2) / 2) as usize);
    for x in (0..=degree).rev() {
        for y in (0..=degree - x).rev() {
            out.push(Monomial::new(x, y, degree - x - y));
        }
    }
    out
}

fn powers(base: &BigInt, up_to: u32) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(up_to as usize + 1);
    out.push(BigInt::one());
    for i in 0..up_to as usize {
        let next = &out[i] * base;
        out.push(next);
    }
    out
}

/// Unnormalized integer polynomial in `X, Y, Z`, used as scratch space for
/// derivatives, products and coordinate changes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawForm {
    terms: BTreeMap<Monomial, BigInt>,
}

impl RawForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut f = Self::zero();
        f.add_term(Monomial::new(0, 0, 0), c.into());
        f
    }

    /// The linear form `a X + b Y + c Z`.
    pub fn linear(coeffs: &[BigInt; 3]) -> Self {
        let mut f = Self::zero();
        f.add_term(Monomial::new(1, 0, 0), coeffs[0].clone());
        f.add_term(Monomial::new(0, 1, 0), coeffs[1].clone());
        f.add_term(Monomial::new(0, 0, 1), coeffs[2].clone());
        f
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms, leading first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn mul(&self, other: &RawForm) -> RawForm {
        let mut out = RawForm::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = Monomial::new(ma.x + mb.x, ma.y + mb.y, ma.z + mb.z);
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> RawForm {
        let mut out = RawForm::constant(1);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Partial derivative with respect to coordinate `var` (0 = X, 1 = Y, 2 = Z).
    pub fn partial(&self, var: usize) -> RawForm {
        let mut out = RawForm::zero();
        for (m, c) in &self.terms {
            let mut e = m.exponents();
            if e[var] == 0 {
                continue;
            }
            let factor = BigInt::from(e[var]);
            e[var] -= 1;
            out.add_term(Monomial::from_exponents(e), c * factor);
        }
        out
    }

    pub fn evaluate(&self, v: &[BigInt; 3]) -> BigInt {
        let d = self.degree().unwrap_or(0);
        let px = powers(&v[0], d);
        let py = powers(&v[1], d);
        let pz = powers(&v[2], d);
        self.terms.iter().fold(BigInt::zero(), |acc, (m, c)| {
            acc + c * &px[m.x as usize] * &py[m.y as usize] * &pz[m.z as usize]
        })
    }

    /// `F(M·v)`: substitutes row `r` of `rows` for coordinate `r`.
    pub fn substitute_linear(&self, rows: &[[BigInt; 3]; 3]) -> RawForm {
        let d = self.degree().unwrap_or(0);
        let tables: Vec<Vec<RawForm>> = rows
            .iter()
            .map(|row| {
                let lin = RawForm::linear(row);
                let mut table = vec![RawForm::constant(1)];
                for i in 0..d as usize {
                    let next = table[i].mul(&lin);
                    table.push(next);
                }
                table
            })
            .collect();
        let mut out = RawForm::zero();
        for (m, c) in &self.terms {
            let prod = tables[0][m.x as usize]
                .mul(&tables[1][m.y as usize])
                .mul(&tables[2][m.z as usize]);
            for (pm, pc) in prod.terms {
                out.add_term(pm, pc * c);
            }
        }
        out
    }

    /// Coefficients in `Y` (ascending) after fixing `X = x`, `Z = z`.
    pub fn specialize_y(&self, x: &BigInt, z: &BigInt) -> Vec<BigInt> {
        let d = self.degree().unwrap_or(0);
        let px = powers(x, d);
        let pz = powers(z, d);
        let mut out = vec![BigInt::zero(); d as usize + 1];
        for (m, c) in &self.terms {
            out[m.y as usize] += c * &px[m.x as usize] * &pz[m.z as usize];
        }
        out
    }
}

/// A nonzero homogeneous form with primitive integer coefficients whose
/// leading coefficient (graded lex, `X > Y > Z`) is positive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomForm {
    degree: u32,
    /// Nonzero terms, leading first.
    terms: Vec<(Monomial, BigInt)>,
}

impl HomForm {
    /// Collects like terms and normalizes.
    pub fn new(
        degree: u32,
        terms: impl IntoIterator<Item = (Monomial, BigInt)>,
    ) -> Result<Self, CoreError> {
        if degree == 0 {
            return Err(CoreError::ZeroDegree);
        }
        let mut raw = RawForm::zero();
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(CoreError::DegreeMismatch {
                    expected: degree,
                    found: m.degree(),
                });
            }
            raw.add_term(m, c);
        }
        Self::from_raw(&raw)
    }

    /// Normalizes a homogeneous raw form.
    pub fn from_raw(raw: &RawForm) -> Result<Self, CoreError> {
        let degree = raw.degree().ok_or(CoreError::ZeroForm)?;
        if degree == 0 {
            return Err(CoreError::ZeroDegree);
        }
        if let Some((m, _)) = raw.terms().find(|(m, _)| m.degree() != degree) {
            return Err(CoreError::DegreeMismatch {
                expected: degree,
                found: m.degree(),
            });
        }
        let g = raw.terms().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
        let lead_negative = raw.terms().next().is_some_and(|(_, c)| c.is_negative());
        let g = if lead_negative { -g } else { g };
        let terms = raw.terms().map(|(m, c)| (*m, c / &g)).collect();
        Ok(Self { degree, terms })
    }

    /// Accepts only input that is already in normal form: strictly
    /// descending monomials of the stated degree, nonzero primitive
    /// coefficients, positive leading coefficient.
    pub fn from_normalized(degree: u32, terms: Vec<(Monomial, BigInt)>) -> Option<Self> {
        if degree == 0 || terms.is_empty() {
            return None;
        }
        let sorted = terms.windows(2).all(|w| w[0].0 > w[1].0);
        let degrees = terms.iter().all(|(m, _)| m.degree() == degree);
        let nonzero = terms.iter().all(|(_, c)| !c.is_zero());
        let g = terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
        (sorted && degrees && nonzero && g.is_one() && terms[0].1.is_positive())
            .then_some(Self { degree, terms })
    }

    pub fn from_line(l: &ProjLine) -> Self {
        let c = l.coords();
        Self::new(
            1,
            [
                (Monomial::new(1, 0, 0), c[0].clone()),
                (Monomial::new(0, 1, 0), c[1].clone()),
                (Monomial::new(0, 0, 1), c[2].clone()),
            ],
        )
        .expect("a line has a nonzero coefficient")
    }

    pub fn to_line(&self) -> Option<ProjLine> {
        if self.degree != 1 {
            return None;
        }
        ProjLine::from_triple([
            self.coefficient(Monomial::new(1, 0, 0)),
            self.coefficient(Monomial::new(0, 1, 0)),
            self.coefficient(Monomial::new(0, 0, 1)),
        ])
        .ok()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Nonzero terms, leading first.
    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn coefficient(&self, m: Monomial) -> BigInt {
        self.terms
            .iter()
            .find(|(t, _)| *t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn to_raw(&self) -> RawForm {
        let mut raw = RawForm::zero();
        for (m, c) in &self.terms {
            raw.add_term(*m, c.clone());
        }
        raw
    }

    /// Value at the primitive representative of `p`.
    pub fn evaluate(&self, p: &ProjPoint) -> BigInt {
        self.eval_coords(p.coords())
    }

    pub fn eval_coords(&self, v: &[BigInt; 3]) -> BigInt {
        let px = powers(&v[0], self.degree);
        let py = powers(&v[1], self.degree);
        let pz = powers(&v[2], self.degree);
        self.terms.iter().fold(BigInt::zero(), |acc, (m, c)| {
            acc + c * &px[m.x as usize] * &py[m.y as usize] * &pz[m.z as usize]
        })
    }

    pub fn vanishes_at(&self, p: &ProjPoint) -> bool {
        self.evaluate(p).is_zero()
    }

    pub fn gradient_at(&self, p: &ProjPoint) -> [BigInt; 3] {
        let raw = self.to_raw();
        [0, 1, 2].map(|v| raw.partial(v).evaluate(p.coords()))
    }
}

impl fmt::Display for HomForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mut factors = Vec::new();
            if !mag.is_one() {
                factors.push(mag.to_string());
            }
            for (name, e) in [("X", m.x), ("Y", m.y), ("Z", m.z)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            if factors.is_empty() {
                factors.push("1".into());
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for HomForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomForm({self})")
    }
}
