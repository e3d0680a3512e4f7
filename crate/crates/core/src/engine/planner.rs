use num_bigint::BigInt;
use num_traits::Zero;

use super::config::{Config, TargetKind};
use crate::error::EngineError;
use crate::exact::{ProjPoint, Rat};

/// How integers on the axis `X = 0` are reached.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Strategy {
    /// One addition of `±1` per unit of `|p|`.
    Naive,
    /// Double-and-add over the binary expansion of `|p|`.
    #[default]
    AdditionChain,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Naive => "naive",
            Strategy::AdditionChain => "chain",
        }
    }
}

impl Config {
    /// Makes `t` a recorded singular point and returns its record index.
    /// Does nothing when `t` is already recorded.
    pub fn construct_point(
        &mut self,
        t: &ProjPoint,
        strategy: Strategy,
    ) -> Result<usize, EngineError> {
        self.target(
            |cfg| cfg.construct_point_inner(t, strategy),
            |_, _| TargetKind::Point(t.clone()),
        )
    }

    fn construct_point_inner(
        &mut self,
        t: &ProjPoint,
        strategy: Strategy,
    ) -> Result<usize, EngineError> {
        if let Some(i) = self.find(t) {
            return Ok(i);
        }
        let [x, y, z] = t.coords();
        if z.is_zero() {
            let finite = ProjPoint::from_triple([x.clone(), y.clone(), BigInt::from(1)])?;
            let f = self.construct_point_inner(&finite, strategy)?;
            return self.push_to_infinity(f, t);
        }
        let u = Rat::new(x.clone(), z.clone());
        let v = Rat::new(y.clone(), z.clone());
        let su = self.construct_rational(u.numer(), u.denom(), strategy)?;
        let sv = if v.is_integer() {
            self.construct_integer(&v.to_integer(), strategy)?
        } else {
            let on_x = self.construct_rational(v.numer(), v.denom(), strategy)?;
            self.transfer_axis(on_x)?
        };
        if let Some(i) = self.find(t) {
            return Ok(i);
        }
        self.combine_xy(su, sv)
    }
}
