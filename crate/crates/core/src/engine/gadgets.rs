use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::config::{Config, GadgetKind};
use super::planner::Strategy;
use crate::error::{CoreError, EngineError};
use crate::exact::ProjPoint;

fn pt(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> ProjPoint {
    ProjPoint::from_triple([x.into(), y.into(), z.into()]).expect("nonzero point")
}

impl Config {
    /// Makes `(0:1:1)` singular from the quadrilateral: `X+Z=0` and `X+Y=0`
    /// meet at `(-1:1:1)`, whose horizontal `Y=Z` crosses `X=0` there.
    pub fn gadget_unit(&mut self) -> Result<usize, EngineError> {
        let target = pt(0, 1, 1);
        if let Some(i) = self.find(&target) {
            return Ok(i);
        }
        self.gadget(GadgetKind::Unit, |cfg| {
            cfg.line_through(&pt(0, 1, 0), &pt(-1, 0, 1))?;
            cfg.line_through(&pt(-1, 1, 0), &pt(0, 0, 1))?;
            cfg.line_through(&pt(-1, 1, 1), &pt(1, 0, 0))?;
            cfg.require(&target)
        })
    }

    /// From singular `(0:p:1)` and `(0:q:1)` (record indices), makes
    /// `(0:p+q:1)` singular.
    pub fn gadget_add_integers(&mut self, sp_p: usize, sp_q: usize) -> Result<usize, EngineError> {
        let p = self.y_axis_value(sp_p)?;
        let q = self.y_axis_value(sp_q)?;
        let sum = &p + &q;
        self.gadget(GadgetKind::AddIntegers, |cfg| {
            let origin = pt(0, 0, 1);
            let x_inf = pt(1, 0, 0);
            cfg.line_through(&pt(0, p.clone(), 1), &x_inf)?;
            cfg.line_through(&pt(-1, 0, 1), &pt(0, 1, 0))?;
            let m1_anchor = pt(-1, p.clone(), 1);
            cfg.line_through(&origin, &m1_anchor)?;
            cfg.line_through(&pt(-1, p.clone(), 0), &pt(0, q.clone(), 1))?;
            cfg.line_through(&x_inf, &pt(-1, sum.clone(), 1))?;
            cfg.require(&pt(0, sum.clone(), 1))
        })
    }

    /// Makes `(0:p:1)` singular.
    pub fn construct_integer(
        &mut self,
        p: &BigInt,
        strategy: Strategy,
    ) -> Result<usize, EngineError> {
        if let Some(i) = self.find(&pt(0, p.clone(), 1)) {
            return Ok(i);
        }
        let step = if p.is_positive() {
            self.gadget_unit()?
        } else {
            self.require(&pt(0, -1, 1))?
        };
        let unit: BigInt = if p.is_positive() {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        match strategy {
            Strategy::Naive => {
                let mut k = unit.clone();
                let mut acc = step;
                while &k != p {
                    let next = &k + &unit;
                    acc = match self.find(&pt(0, next.clone(), 1)) {
                        Some(i) => i,
                        None => self.gadget_add_integers(acc, step)?,
                    };
                    k = next;
                }
                Ok(acc)
            }
            Strategy::AdditionChain => {
                let mag = p.magnitude();
                let mut acc = step;
                let mut k = unit.clone();
                for bit in (0..mag.bits() - 1).rev() {
                    let doubled = &k + &k;
                    acc = match self.find(&pt(0, doubled.clone(), 1)) {
                        Some(i) => i,
                        None => self.gadget_add_integers(acc, acc)?,
                    };
                    k = doubled;
                    if mag.bit(bit) {
                        let next = &k + &unit;
                        acc = match self.find(&pt(0, next.clone(), 1)) {
                            Some(i) => i,
                            None => self.gadget_add_integers(acc, step)?,
                        };
                        k = next;
                    }
                }
                Ok(acc)
            }
        }
    }

    /// Makes `(p:0:q)` singular, for `q > 0`.
    pub fn construct_rational(
        &mut self,
        p: &BigInt,
        q: &BigInt,
        strategy: Strategy,
    ) -> Result<usize, EngineError> {
        if !q.is_positive() {
            return Err(CoreError::ZeroVector.into());
        }
        let g = p.gcd(q);
        let (p, q) = (p / &g, q / &g);
        let target = pt(p.clone(), 0, q.clone());
        if let Some(i) = self.find(&target) {
            return Ok(i);
        }
        self.construct_integer(&p, strategy)?;
        self.construct_integer(&-&q, strategy)?;
        if let Some(i) = self.find(&target) {
            return Ok(i);
        }
        self.gadget(GadgetKind::Rational, |cfg| {
            let at_infinity = pt(1, -&q, 0);
            cfg.line_through(&pt(1, 0, -1), &pt(0, -&q, 1))?;
            cfg.line_through(&pt(0, p.clone(), 1), &at_infinity)?;
            cfg.require(&target)
        })
    }

    /// From singular `(v:0:1)`, makes `(0:v:1)` singular.
    pub fn transfer_axis(&mut self, sp: usize) -> Result<usize, EngineError> {
        let p = self
            .point(sp)
            .ok_or(EngineError::AnchorOutOfRange(sp))?
            .clone();
        let [a, y, b] = p.coords();
        if !y.is_zero() || b.is_zero() {
            return Err(EngineError::BadAnchorShape {
                point: p,
                expected: "(v:0:1)",
            });
        }
        let target = pt(0, a.clone(), b.clone());
        if let Some(i) = self.find(&target) {
            return Ok(i);
        }
        self.gadget(GadgetKind::TransferAxis, |cfg| {
            cfg.line_through(&p, &pt(1, -1, 0))?;
            cfg.require(&target)
        })
    }

    /// From singular `(u:0:1)` and `(0:v:1)`, makes `(u:v:1)` singular.
    pub fn combine_xy(&mut self, sp_u: usize, sp_v: usize) -> Result<usize, EngineError> {
        let u = self
            .point(sp_u)
            .ok_or(EngineError::AnchorOutOfRange(sp_u))?
            .clone();
        let v = self
            .point(sp_v)
            .ok_or(EngineError::AnchorOutOfRange(sp_v))?
            .clone();
        let [a, uy, b] = u.coords();
        if !uy.is_zero() || b.is_zero() {
            return Err(EngineError::BadAnchorShape {
                point: u,
                expected: "(u:0:1)",
            });
        }
        let [vx, c, d] = v.coords();
        if !vx.is_zero() || d.is_zero() {
            return Err(EngineError::BadAnchorShape {
                point: v,
                expected: "(0:v:1)",
            });
        }
        let target = pt(a * d, c * b, b * d);
        if let Some(i) = self.find(&target) {
            return Ok(i);
        }
        self.gadget(GadgetKind::CombineXy, |cfg| {
            cfg.line_through(&u, &pt(0, 1, 0))?;
            cfg.line_through(&v, &pt(1, 0, 0))?;
            cfg.require(&target)
        })
    }

    /// From singular `(a:b:1)`, makes `(a:b:0)` singular through the line to
    /// `(0:0:1)`.
    pub(crate) fn push_to_infinity(
        &mut self,
        finite: usize,
        target: &ProjPoint,
    ) -> Result<usize, EngineError> {
        if let Some(i) = self.find(target) {
            return Ok(i);
        }
        let p = self
            .point(finite)
            .ok_or(EngineError::AnchorOutOfRange(finite))?
            .clone();
        self.gadget(GadgetKind::Infinity, |cfg| {
            cfg.line_through(&p, &pt(0, 0, 1))?;
            cfg.require(target)
        })
    }
}
