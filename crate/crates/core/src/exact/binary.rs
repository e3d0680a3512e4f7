//! Binary forms in `(s, t)`: restrictions of plane curves to lines.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::form::{HomForm, Monomial};
use super::proj::{incident, ProjLine, ProjPoint};
use super::upoly::UniPoly;
use super::Rat;
use crate::error::CoreError;

/// Nonzero binary form of fixed degree; `coeffs[i]` multiplies `s^i t^(d-i)`.
///
/// Stored primitive, with the highest nonzero coefficient positive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    coeffs: Vec<BigInt>,
}

impl BinaryForm {
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<Self, CoreError> {
        let g = coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return Err(CoreError::ZeroForm);
        }
        let lead_negative = coeffs
            .iter()
            .rev()
            .find(|c| !c.is_zero())
            .unwrap()
            .is_negative();
        let g = if lead_negative { -g } else { g };
        for c in &mut coeffs {
            *c = &*c / &g;
        }
        Ok(Self { coeffs })
    }

    /// Accepts only coefficient lists that are already normalized.
    pub fn from_normalized(coeffs: Vec<BigInt>) -> Option<Self> {
        let f = Self::new(coeffs.clone()).ok()?;
        (f.coeffs == coeffs).then_some(f)
    }

    /// Homogenizes `p(s)` to degree `degree` (which must be at least `deg p`).
    pub fn from_dehomogenized(p: &UniPoly, degree: usize) -> Result<Self, CoreError> {
        let mut ints = p.primitive_integer_coeffs();
        if ints.is_empty() {
            return Err(CoreError::ZeroForm);
        }
        assert!(
            ints.len() <= degree + 1,
            "degree below the polynomial degree"
        );
        ints.resize(degree + 1, BigInt::zero());
        Self::new(ints)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval(&self, s: &BigInt, t: &BigInt) -> BigInt {
        let d = self.degree();
        let mut sp = vec![BigInt::one()];
        let mut tp = vec![BigInt::one()];
        for i in 0..d {
            sp.push(&sp[i] * s);
            tp.push(&tp[i] * t);
        }
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * &sp[i] * &tp[d - i])
            .sum()
    }

    /// `f(s, 1)`.
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::from_bigints(&self.coeffs)
    }

    /// Multiplicity of the root `(1:0)`.
    pub fn multiplicity_at_infinity(&self) -> usize {
        self.degree() - self.dehomogenize().degree().unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out).expect("product of nonzero forms")
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.multiplicity_at_infinity() <= other.multiplicity_at_infinity()
            && self.dehomogenize().divides(&other.dehomogenize())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let g = self.dehomogenize().gcd(&other.dehomogenize());
        let inf = self
            .multiplicity_at_infinity()
            .min(other.multiplicity_at_infinity());
        Self::from_dehomogenized(&g, g.degree().unwrap_or(0) + inf).expect("gcd is nonzero")
    }

    pub fn is_squarefree(&self) -> bool {
        self.multiplicity_at_infinity() <= 1 && self.dehomogenize().is_squarefree()
    }

    /// Pairwise coprime squarefree factors with multiplicities, ascending in
    /// multiplicity; the product of `factor^m` is the form up to a constant.
    pub fn squarefree_decomposition(&self) -> Vec<(u32, BinaryForm)> {
        let mut parts: Vec<(u32, BinaryForm)> = self
            .dehomogenize()
            .squarefree_decomposition()
            .into_iter()
            .map(|(m, p)| {
                let d = p.degree().unwrap();
                (m, Self::from_dehomogenized(&p, d).unwrap())
            })
            .collect();
        let inf = self.multiplicity_at_infinity() as u32;
        if inf > 0 {
            let t = Self::new(vec![BigInt::one(), BigInt::zero()]).unwrap();
            match parts.iter_mut().find(|(m, _)| *m == inf) {
                Some((_, f)) => *f = f.mul(&t),
                None => {
                    parts.push((inf, t));
                    parts.sort_by_key(|(m, _)| *m);
                }
            }
        }
        parts
    }

    /// `(multiplicity, factor degree)` pairs, highest multiplicity first.
    pub fn multiplicity_profile(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = self
            .squarefree_decomposition()
            .into_iter()
            .map(|(m, f)| (m, f.degree()))
            .collect();
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    /// Rational roots `(s:t)`, primitive with `t ≥ 0` (and `s = 1` when
    /// `t = 0`), with multiplicities; finite roots ascending, then infinity.
    pub fn rational_roots(&self) -> Vec<([BigInt; 2], u32)> {
        let p = self.dehomogenize();
        let mut out: Vec<([BigInt; 2], u32)> = p
            .rational_roots()
            .into_iter()
            .map(|r| {
                let m = root_multiplicity_uni(&p, &r);
                ([r.numer().clone(), r.denom().clone()], m)
            })
            .collect();
        let inf = self.multiplicity_at_infinity() as u32;
        if inf > 0 {
            out.push(([BigInt::one(), BigInt::zero()], inf));
        }
        out
    }

    /// Multiplicity of the root `(s:t)` (zero when it is not a root).
    pub fn root_multiplicity(&self, s: &BigInt, t: &BigInt) -> u32 {
        if t.is_zero() {
            return self.multiplicity_at_infinity() as u32;
        }
        root_multiplicity_uni(&self.dehomogenize(), &Rat::new(s.clone(), t.clone()))
    }

    /// The squarefree part with every rational linear factor removed; `None`
    /// when all roots are rational.
    pub fn nonrational_part(&self) -> Option<BinaryForm> {
        let mut p = self.dehomogenize().squarefree_part();
        for r in p.rational_roots() {
            let lin = UniPoly::new(vec![-r, Rat::one()]);
            p = p.div_rem(&lin).0;
        }
        let d = p.degree()?;
        (d > 0).then(|| Self::from_dehomogenized(&p, d).unwrap())
    }
}

fn root_multiplicity_uni(p: &UniPoly, r: &Rat) -> u32 {
    let lin = UniPoly::new(vec![-r.clone(), Rat::one()]);
    let mut q = p.clone();
    let mut m = 0;
    while !q.is_zero() && q.eval(r).is_zero() {
        q = q.div_rem(&lin).0;
        m += 1;
    }
    m
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let vars: Vec<String> = [("s", i), ("t", d - i)]
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(v, e)| {
                    if *e == 1 {
                        v.to_string()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryForm({self})")
    }
}

/// The two canonical points `A`, `B` spanning `l`; `l` is parametrized as
/// `s·A + t·B`.
///
/// With `k` the first nonzero coefficient of `l`, the generators are
/// `l_k e_f − l_f e_k` for the two other indices `f`, normalized, smaller
/// index first.
pub fn line_basis(l: &ProjLine) -> [ProjPoint; 2] {
    let c = l.coords();
    let k = c.iter().position(|x| !x.is_zero()).expect("nonzero line");
    let free: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    let gen = |f: usize| {
        let mut v = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
        v[f] = c[k].clone();
        v[k] = -&c[f];
        ProjPoint::from_triple(v).expect("generator is nonzero")
    };
    [gen(free[0]), gen(free[1])]
}

/// `s·A + t·B` on the canonical parametrization of `l`.
pub fn point_of_param(l: &ProjLine, s: &BigInt, t: &BigInt) -> Result<ProjPoint, CoreError> {
    let [a, b] = line_basis(l);
    let (a, b) = (a.coords(), b.coords());
    ProjPoint::from_triple([0, 1, 2].map(|i| s * &a[i] + t * &b[i]))
}

/// Parameters `(s:t)` of a point on `l` (primitive, sign as in
/// [`BinaryForm::rational_roots`]); `None` when the point is off the line.
pub fn param_of_point(l: &ProjLine, p: &ProjPoint) -> Option<[BigInt; 2]> {
    if !incident(p, l) {
        return None;
    }
    let k = l.coords().iter().position(|x| !x.is_zero()).unwrap();
    let free: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    let [a, b] = line_basis(l);
    let (fa, fb) = (&a.coords()[free[0]], &b.coords()[free[1]]);
    let pc = p.coords();
    let mut s = &pc[free[0]] * fb;
    let mut t = &pc[free[1]] * fa;
    let g = s.gcd(&t);
    s /= &g;
    t /= &g;
    if t.is_negative() || (t.is_zero() && s.is_negative()) {
        s = -s;
        t = -t;
    }
    Some([s, t])
}

/// `F(s·A + t·B)` for the canonical parametrization of `l`.
pub fn restrict_to_line(f: &HomForm, l: &ProjLine) -> Result<BinaryForm, CoreError> {
    let [a, b] = line_basis(l);
    let (a, b) = (a.coords(), b.coords());
    let rows = [0, 1, 2].map(|i| [a[i].clone(), b[i].clone(), BigInt::zero()]);
    let sub = f.to_raw().substitute_linear(&rows);
    let d = f.degree();
    let coeffs: Vec<BigInt> = (0..=d)
        .map(|i| sub.coefficient(Monomial::new(i, d - i, 0)))
        .collect();
    BinaryForm::new(coeffs).map_err(|_| CoreError::ComponentContained)
}
