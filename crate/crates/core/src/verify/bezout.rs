//! Intersection budgets: every pair of components must meet in exactly
//! `deg · deg` points counted with multiplicity.

use num_traits::Zero;

use super::smooth::shear;
use super::Arrangement;
use crate::engine::ComponentId;
use crate::error::CoreError;
use crate::exact::{meet, restrict_to_line, resultant_form, BinaryForm, HomForm};
use crate::par;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BezoutEntry {
    pub pair: (ComponentId, ComponentId),
    pub total: u64,
    pub expected: u64,
}

impl BezoutEntry {
    pub fn passes(&self) -> bool {
        self.total == self.expected
    }
}

fn profile_total(f: &BinaryForm) -> u64 {
    f.squarefree_decomposition()
        .iter()
        .map(|(m, g)| u64::from(*m) * g.degree() as u64)
        .sum()
}

fn form_of<A: Arrangement + ?Sized>(a: &A, c: ComponentId) -> HomForm {
    match c {
        ComponentId::Line(i) => HomForm::from_line(&a.lines()[i]),
        ComponentId::Curve(i) => a.curves()[i].clone(),
    }
}

fn entry<A: Arrangement + ?Sized>(
    a: &A,
    p: ComponentId,
    q: ComponentId,
) -> Result<BezoutEntry, CoreError> {
    let shared = || CoreError::SharedComponent(p.to_string(), q.to_string());
    let total = match (p, q) {
        (ComponentId::Line(i), ComponentId::Line(j)) => {
            meet(&a.lines()[i], &a.lines()[j]).map_err(|_| shared())?;
            1
        }
        (ComponentId::Line(i), ComponentId::Curve(k))
        | (ComponentId::Curve(k), ComponentId::Line(i)) => {
            let r = restrict_to_line(&a.curves()[k], &a.lines()[i]).map_err(|_| shared())?;
            profile_total(&r)
        }
        (ComponentId::Curve(k), ComponentId::Curve(l)) => {
            let (f, g) = (&a.curves()[k], &a.curves()[l]);
            let (_, _, rows) = shear(&[f, g]);
            let r = resultant_form(
                &f.to_raw().substitute_linear(&rows),
                &g.to_raw().substitute_linear(&rows),
            );
            if r.iter().all(Zero::is_zero) {
                return Err(shared());
            }
            profile_total(&BinaryForm::new(r)?)
        }
    };
    let deg = |c: ComponentId| u64::from(form_of(a, c).degree());
    Ok(BezoutEntry {
        pair: (p, q),
        total,
        expected: deg(p) * deg(q),
    })
}

fn pairs<A: Arrangement + ?Sized>(a: &A) -> Vec<(ComponentId, ComponentId)> {
    let ids: Vec<ComponentId> = (0..a.lines().len())
        .map(ComponentId::Line)
        .chain((0..a.curves().len()).map(ComponentId::Curve))
        .collect();
    let mut out = Vec::with_capacity(ids.len() * ids.len().saturating_sub(1) / 2);
    for (i, &p) in ids.iter().enumerate() {
        for &q in &ids[i + 1..] {
            out.push((p, q));
        }
    }
    out
}

/// One entry per pair of components, lines first.
pub fn bezout_audit<A: Arrangement + ?Sized>(a: &A) -> Result<Vec<BezoutEntry>, CoreError> {
    par::map(&pairs(a), |&(p, q)| entry(a, p, q))
        .into_iter()
        .collect()
}

pub fn bezout_audit_seq<A: Arrangement + ?Sized>(a: &A) -> Result<Vec<BezoutEntry>, CoreError> {
    pairs(a).into_iter().map(|(p, q)| entry(a, p, q)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Config;
    use crate::exact::{form::tests::sqrt2_conic, ProjLine};

    #[test]
    fn conic_against_axes() {
        let f = sqrt2_conic();
        // Y = 0 restricts to s² − 2t², X = 0 to a product of two linear factors.
        for l in [
            ProjLine::new(0, 1, 0).unwrap(),
            ProjLine::new(1, 0, 0).unwrap(),
        ] {
            assert_eq!(profile_total(&restrict_to_line(&f, &l).unwrap()), 2);
        }
    }

    #[test]
    fn quadrilateral_pairs() {
        let cfg = Config::init_quadrilateral();
        let audit = bezout_audit(&cfg).unwrap();
        assert_eq!(audit.len(), 6);
        assert!(audit.iter().all(|e| e.passes() && e.expected == 1));
        assert_eq!(audit, bezout_audit_seq(&cfg).unwrap());
    }

    #[test]
    fn two_conics_meet_in_four() {
        let mut cfg = Config::init_quadrilateral();
        let c1 = sqrt2_conic();
        let c2 = HomForm::new(
            2,
            [((2, 0, 0), 1), ((0, 2, 0), 1), ((0, 0, 2), -1)].map(|((i, j, k), c)| {
                (
                    crate::exact::Monomial::new(i, j, k),
                    num_bigint::BigInt::from(c),
                )
            }),
        )
        .unwrap();
        cfg.curves = vec![c1.clone(), c2];
        let audit = bezout_audit(&cfg).unwrap();
        let cc = audit
            .iter()
            .find(|e| e.pair == (ComponentId::Curve(0), ComponentId::Curve(1)))
            .unwrap();
        assert_eq!((cc.total, cc.expected), (4, 4));
        cfg.curves = vec![c1.clone(), c1];
        assert!(matches!(
            bezout_audit(&cfg),
            Err(CoreError::SharedComponent(..))
        ));
    }
}
