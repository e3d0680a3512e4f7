//! Exact smoothness test for plane curves.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{
    kernel_basis_int, resultant_form, BinaryForm, HomForm, Monomial, ProjPoint, RawForm, UniPoly,
};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Smoothness {
    Smooth,
    /// `points` lists every rational singular point unless
    /// `along_component` is set (a repeated component).
    Singular {
        points: Vec<ProjPoint>,
        along_component: bool,
    },
    /// Elimination left candidates over a number field that were not
    /// decided; `points` are the rational singular points found.
    Unknown {
        points: Vec<ProjPoint>,
    },
}

impl Smoothness {
    pub fn is_smooth(&self) -> bool {
        matches!(self, Smoothness::Smooth)
    }

    pub fn rational_points(&self) -> &[ProjPoint] {
        match self {
            Smoothness::Smooth => &[],
            Smoothness::Singular { points, .. } | Smoothness::Unknown { points } => points,
        }
    }
}

/// True for `c·Y·Z^(n-1) − G(X, Z)` with `G` containing `X^n`.
fn graph_shape(f: &HomForm) -> bool {
    let n = f.degree();
    let y_terms: Vec<&(Monomial, BigInt)> = f.terms().iter().filter(|(m, _)| m.y > 0).collect();
    y_terms.len() == 1
        && y_terms[0].0 == Monomial::new(0, 1, n - 1)
        && !f.coefficient(Monomial::new(n, 0, 0)).is_zero()
}

pub fn smoothness_check(f: &HomForm) -> Smoothness {
    match f.degree() {
        1 => Smoothness::Smooth,
        _ if graph_shape(f) => {
            // Singular points lie on Z = 0 (from the Y partial), then X = 0.
            let p = ProjPoint::new(0, 1, 0).unwrap();
            if f.gradient_at(&p).iter().all(Zero::is_zero) {
                Smoothness::Singular {
                    points: vec![p],
                    along_component: false,
                }
            } else {
                Smoothness::Smooth
            }
        }
        2 => conic(f),
        _ => general(f),
    }
}

fn conic(f: &HomForm) -> Smoothness {
    let raw = f.to_raw();
    let hessian: Vec<Vec<BigInt>> = (0..3)
        .map(|i| {
            let di = raw.partial(i);
            (0..3)
                .map(|j| {
                    let dij = di.partial(j);
                    dij.coefficient(Monomial::new(0, 0, 0))
                })
                .collect()
        })
        .collect();
    let ker = kernel_basis_int(&hessian, 3);
    if ker.is_empty() {
        return Smoothness::Smooth;
    }
    let points = ker
        .iter()
        .map(|v| ProjPoint::from_triple([v[0].clone(), v[1].clone(), v[2].clone()]).unwrap())
        .collect();
    Smoothness::Singular {
        points,
        along_component: ker.len() > 1,
    }
}

/// Substitution `X → X + aY`, `Z → Z + bY` moving `(0:1:0)` off the curve.
/// Shear `X -> X + aY, Z -> Z + bY` moving `(0:1:0)` off every form in
/// `fs`: returns `(a, b)` and the substitution rows.
pub(crate) fn shear(fs: &[&HomForm]) -> (BigInt, BigInt, [[BigInt; 3]; 3]) {
    for r in 0i64.. {
        for a in -r..=r {
            for b in [-(r - a.abs()), r - a.abs()] {
                let v = [BigInt::from(a), BigInt::one(), BigInt::from(b)];
                if fs.iter().all(|f| !f.eval_coords(&v).is_zero()) {
                    let (a, b) = (BigInt::from(a), BigInt::from(b));
                    let rows = [
                        [BigInt::one(), a.clone(), BigInt::zero()],
                        [BigInt::zero(), BigInt::one(), BigInt::zero()],
                        [BigInt::zero(), b.clone(), BigInt::one()],
                    ];
                    return (a, b, rows);
                }
            }
        }
    }
    unreachable!()
}

fn general(f: &HomForm) -> Smoothness {
    let (a, b, rows) = shear(&[f]);
    let g = f.to_raw().substitute_linear(&rows);
    let partials: Vec<RawForm> = (0..3).map(|i| g.partial(i)).collect();
    let mut common: Option<BinaryForm> = None;
    for p in &partials {
        if p.is_zero() {
            continue;
        }
        let r = resultant_form(&g, p);
        if let Ok(r) = BinaryForm::new(r) {
            common = Some(match common {
                None => r,
                Some(c) => c.gcd(&r),
            });
        }
    }
    let Some(common) = common else {
        return Smoothness::Singular {
            points: Vec::new(),
            along_component: true,
        };
    };
    let mut points = Vec::new();
    let mut exact_irrational = false;
    for ([x, z], _) in common.rational_roots() {
        let mut gcd = UniPoly::from_bigints(&g.specialize_y(&x, &z));
        for p in &partials {
            gcd = gcd.gcd(&UniPoly::from_bigints(&p.specialize_y(&x, &z)));
        }
        let roots = gcd.rational_roots();
        if gcd.degree().unwrap_or(0) > roots.len() {
            exact_irrational = true;
        }
        for y in roots {
            let (num, den) = (y.numer().clone(), y.denom().clone());
            let (xn, zn) = (&x * &den, &z * &den);
            let old = [&xn + &a * &num, num.clone(), &zn + &b * &num];
            points.push(ProjPoint::from_triple(old).unwrap());
        }
    }
    points.sort();
    points.dedup();
    if !points.is_empty() || exact_irrational {
        Smoothness::Singular {
            points,
            along_component: false,
        }
    } else if common.nonrational_part().is_some() {
        Smoothness::Unknown { points }
    } else {
        Smoothness::Smooth
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::form::tests::sqrt2_conic;
    use crate::exact::ProjLine;

    fn form(n: u32, terms: &[((u32, u32, u32), i64)]) -> HomForm {
        HomForm::new(
            n,
            terms
                .iter()
                .map(|((x, y, z), c)| (Monomial::new(*x, *y, *z), BigInt::from(*c))),
        )
        .unwrap()
    }

    /// Brute-force oracle: does every partial vanish at `p`?
    fn singular_at(f: &HomForm, p: &ProjPoint) -> bool {
        f.gradient_at(p).iter().all(Zero::is_zero)
    }

    #[test]
    fn examples() {
        assert_eq!(smoothness_check(&sqrt2_conic()), Smoothness::Smooth);
        let cubic = form(3, &[((0, 1, 2), 1), ((3, 0, 0), -1), ((0, 0, 3), 2)]);
        assert_eq!(
            smoothness_check(&cubic),
            Smoothness::Singular {
                points: vec![ProjPoint::new(0, 1, 0).unwrap()],
                along_component: false
            }
        );
        assert_eq!(
            smoothness_check(&HomForm::from_line(&ProjLine::new(1, 2, 3).unwrap())),
            Smoothness::Smooth
        );
    }

    #[test]
    fn conics() {
        // X^2 + Y^2 - Z^2
        assert!(
            smoothness_check(&form(2, &[((2, 0, 0), 1), ((0, 2, 0), 1), ((0, 0, 2), -1)]))
                .is_smooth()
        );
        // X Y: two lines crossing at (0:0:1)
        assert_eq!(
            smoothness_check(&form(2, &[((1, 1, 0), 1)])).rational_points(),
            &[ProjPoint::new(0, 0, 1).unwrap()]
        );
        // X^2: a double line
        assert!(matches!(
            smoothness_check(&form(2, &[((2, 0, 0), 1)])),
            Smoothness::Singular {
                along_component: true,
                ..
            }
        ));
    }

    #[test]
    fn general_cubics() {
        // Nodal cubic Y^2 Z - X^3 - X^2 Z, node at (0:0:1).
        let nodal = form(3, &[((0, 2, 1), 1), ((3, 0, 0), -1), ((2, 0, 1), -1)]);
        let s = smoothness_check(&nodal);
        assert_eq!(s.rational_points(), &[ProjPoint::new(0, 0, 1).unwrap()]);
        assert!(singular_at(&nodal, &ProjPoint::new(0, 0, 1).unwrap()));
        // Fermat cubic X^3 + Y^3 + Z^3 is smooth.
        let fermat = form(3, &[((3, 0, 0), 1), ((0, 3, 0), 1), ((0, 0, 3), 1)]);
        assert!(smoothness_check(&fermat).is_smooth());
        // Three concurrent lines X Y (X - Y): one triple point.
        let three = form(3, &[((2, 1, 0), 1), ((1, 2, 0), -1)]);
        assert_eq!(
            smoothness_check(&three).rational_points(),
            &[ProjPoint::new(0, 0, 1).unwrap()]
        );
        // X^2 Y: repeated component.
        assert!(matches!(
            smoothness_check(&form(3, &[((2, 1, 0), 1)])),
            Smoothness::Singular {
                along_component: true,
                ..
            }
        ));
    }
}
