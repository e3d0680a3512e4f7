//! Exact integer and rational primitives.

mod binary;
pub(crate) mod form;
mod linalg;
mod proj;
mod resultant;
mod upoly;

pub use binary::{line_basis, param_of_point, point_of_param, restrict_to_line, BinaryForm};
pub use form::{monomials, HomForm, Monomial, RawForm};
pub use linalg::{determinant, kernel_basis, kernel_basis_int, rank};
pub use proj::{incident, join, meet, normalize, ProjLine, ProjPoint};
pub use resultant::{resultant, resultant_form};
pub use upoly::{simplest_rational_between, IntervalQ, RootLocation, UniPoly};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational number.
pub type Rat = BigRational;

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn int_rat(n: BigInt) -> Rat {
    Rat::from_integer(n)
}

/// Least common multiple of the denominators.
pub(crate) fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Scales a rational vector to a primitive integer vector (same direction,
/// positive scale). Returns `None` for the zero vector.
pub(crate) fn primitive_integers(values: &[Rat]) -> Option<Vec<BigInt>> {
    use num_integer::Integer;
    if values.iter().all(Zero::is_zero) {
        return None;
    }
    let den = common_denominator(values);
    let ints: Vec<BigInt> = values.iter().map(|r| (r * &den).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    Some(ints.into_iter().map(|x| x / &g).collect())
}
