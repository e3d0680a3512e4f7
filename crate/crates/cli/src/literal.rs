//! Text literals accepted on the command line: points, rationals,
//! intervals, univariate polynomials and ternary forms.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rigidplane::{HomForm, IntervalQ, Monomial, ProjPoint, Rat, UniPoly};

/// A literal that did not parse. `column` counts characters from 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiteralError {
    pub column: usize,
    pub reason: String,
}

impl fmt::Display for LiteralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.reason)
    }
}

impl std::error::Error for LiteralError {}

type Result<T> = std::result::Result<T, LiteralError>;

struct Scanner {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Scanner {
    fn new(src: &str) -> Self {
        Self {
            chars: src.chars().enumerate().collect(),
            pos: 0,
        }
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.chars.len(), |c| c.0) + 1
    }

    fn error<T>(&self, reason: impl Into<String>) -> Result<T> {
        Err(LiteralError {
            column: self.column(),
            reason: reason.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(got) => self.error(format!("expected '{c}', found '{got}'")),
                None => self.error(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected '{c}'")),
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        s.parse().ok()
    }

    /// `[-] digits [/ digits]`
    fn rational(&mut self) -> Result<Rat> {
        let neg = self.eat('-');
        if !neg {
            self.eat('+');
        }
        let Some(n) = self.digits() else {
            return self.error("expected a number");
        };
        let d = if self.eat('/') {
            match self.digits() {
                Some(d) if !d.is_zero() => d,
                Some(_) => return self.error("zero denominator"),
                None => return self.error("expected a denominator"),
            }
        } else {
            BigInt::one()
        };
        let r = Rat::new(n, d);
        Ok(if neg { -r } else { r })
    }
}

/// Parses `( a : b : c )` with integer or fractional entries and scales it
/// to a primitive integer triple.
pub fn parse_point(src: &str) -> Result<ProjPoint> {
    let mut s = Scanner::new(src);
    s.expect('(')?;
    let mut v = Vec::with_capacity(3);
    for k in 0..3 {
        if k > 0 {
            s.expect(':')?;
        }
        v.push(s.rational()?);
    }
    s.expect(')')?;
    s.finish()?;
    let l = v.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|r| (r * Rat::from_integer(l.clone())).to_integer())
        .collect();
    let [a, b, c]: [BigInt; 3] = ints.try_into().expect("three entries");
    ProjPoint::from_triple([a, b, c]).map_err(|e| LiteralError {
        column: 1,
        reason: e.to_string(),
    })
}

pub fn parse_rational(src: &str) -> Result<Rat> {
    let mut s = Scanner::new(src);
    let r = s.rational()?;
    s.finish()?;
    Ok(r)
}

/// Parses `lo,hi`.
pub fn parse_interval(src: &str) -> Result<IntervalQ> {
    let mut s = Scanner::new(src);
    let lo = s.rational()?;
    s.expect(',')?;
    let hi = s.rational()?;
    s.finish()?;
    IntervalQ::new(lo, hi).map_err(|e| LiteralError {
        column: 1,
        reason: e.to_string(),
    })
}

/// Sums of terms `c·v1^e1·v2^e2…` over the variables in `vars`. `*` between
/// factors is optional.
fn parse_terms(src: &str, vars: &[char]) -> Result<BTreeMap<Vec<u32>, Rat>> {
    let mut s = Scanner::new(src);
    let mut out: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
    let mut first = true;
    loop {
        s.skip_ws();
        if s.peek().is_none() {
            if first {
                return s.error("empty polynomial");
            }
            break;
        }
        let neg = if s.eat('-') {
            true
        } else if s.eat('+') || first {
            false
        } else {
            let c = s.peek().unwrap_or(' ');
            return s.error(format!("expected '+' or '-', found '{c}'"));
        };
        first = false;
        s.skip_ws();
        let mut coeff = Rat::one();
        let mut have_factor = false;
        if s.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = s.rational()?;
            have_factor = true;
        }
        let mut exps = vec![0u32; vars.len()];
        loop {
            if have_factor {
                s.eat('*');
            }
            s.skip_ws();
            let Some(c) = s.peek() else { break };
            let Some(v) = vars.iter().position(|&x| x == c) else {
                if c.is_alphabetic() {
                    let names: String = vars.iter().collect();
                    return s.error(format!("unknown variable '{c}', expected one of {names}"));
                }
                break;
            };
            s.pos += 1;
            let e = if s.eat('^') {
                match s.digits() {
                    Some(e) => u32::try_from(e).or_else(|_| s.error("exponent too large"))?,
                    None => return s.error("expected an exponent"),
                }
            } else {
                1
            };
            exps[v] += e;
            have_factor = true;
        }
        if !have_factor {
            return s.error("expected a coefficient or a variable");
        }
        let slot = out.entry(exps).or_insert_with(Rat::zero);
        *slot += if neg { -coeff } else { coeff };
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// A polynomial in one variable, `t` or `x`.
pub fn parse_unipoly(src: &str) -> Result<UniPoly> {
    let var = if src.contains('x') { 'x' } else { 't' };
    let terms = parse_terms(src, &[var])?;
    let n = terms.keys().map(|e| e[0] as usize).max().unwrap_or(0);
    let mut coeffs = vec![Rat::zero(); n + 1];
    for (e, c) in terms {
        coeffs[e[0] as usize] = c;
    }
    Ok(UniPoly::new(coeffs))
}

/// A form in `X, Y, Z` (either case) with integer coefficients, e.g.
/// `X^2 + Y^2 - Z^2` or `2XY - Z^2`.
pub fn parse_form(src: &str) -> Result<HomForm> {
    let upper: String = src
        .chars()
        .map(|c| {
            if "xyz".contains(c) {
                c.to_ascii_uppercase()
            } else {
                c
            }
        })
        .collect();
    let terms = parse_terms(&upper, &['X', 'Y', 'Z'])?;
    let err = |reason: String| LiteralError { column: 1, reason };
    let degree = match terms.keys().map(|e| e.iter().sum::<u32>()).max() {
        Some(d) => d,
        None => return Err(err("form is zero".into())),
    };
    let mut out = Vec::with_capacity(terms.len());
    for (e, c) in terms {
        if e.iter().sum::<u32>() != degree {
            return Err(err(format!(
                "term X^{}Y^{}Z^{} is not of degree {degree}",
                e[0], e[1], e[2]
            )));
        }
        if !c.is_integer() {
            return Err(err(format!("coefficient {c} is not an integer")));
        }
        out.push((Monomial::new(e[0], e[1], e[2]), c.to_integer()));
    }
    HomForm::new(degree, out).map_err(|e| err(e.to_string()))
}

/// Formats an exact rational with `places` decimals, rounding half away
/// from zero.
pub fn fixed(r: &Rat, places: u32) -> String {
    let scale = BigInt::from(10).pow(places);
    let n = (r * Rat::from_integer(scale.clone())).round().to_integer();
    if places == 0 {
        return n.to_string();
    }
    let (q, m) = n.abs().div_rem(&scale);
    let sign = if n.is_negative() { "-" } else { "" };
    format!(
        "{sign}{q}.{:0>width$}",
        m.to_string(),
        width = places as usize
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n.into(), d.into())
    }

    #[test]
    fn point_literals_normalize() {
        assert_eq!(
            parse_point("(3/5 : -2 : 1)").unwrap(),
            ProjPoint::new(3, -10, 5).unwrap()
        );
        assert_eq!(
            parse_point("(-2:4:0)").unwrap(),
            ProjPoint::new(1, -2, 0).unwrap()
        );
        assert_eq!(
            parse_point(" ( 1/2:1/3 : 1/6 ) ").unwrap(),
            ProjPoint::new(3, 2, 1).unwrap()
        );
    }

    #[test]
    fn point_literal_errors_have_columns() {
        assert!(parse_point("(0:0:0)").unwrap_err().reason.contains("zero"));
        assert_eq!(parse_point("(1:2)").unwrap_err().column, 5);
        assert_eq!(parse_point("(1:2:3").unwrap_err().column, 7);
        assert_eq!(parse_point("(1:x:3)").unwrap_err().column, 4);
        assert!(parse_point("(1/0:1:1)").is_err());
        assert!(parse_point("(1:2:3) z").is_err());
    }

    #[test]
    fn polynomials() {
        assert_eq!(
            parse_unipoly("t^2-2").unwrap(),
            UniPoly::from_ints(&[-2, 0, 1])
        );
        assert_eq!(
            parse_unipoly("t^2 - 4t + 4").unwrap(),
            UniPoly::from_ints(&[4, -4, 1])
        );
        assert_eq!(
            parse_unipoly("x^3-1/2").unwrap(),
            UniPoly::new(vec![rat(-1, 2), rat(0, 1), rat(0, 1), rat(1, 1)])
        );
        assert_eq!(parse_unipoly("t + t").unwrap(), UniPoly::from_ints(&[0, 2]));
        assert!(parse_unipoly("t^").is_err());
        assert!(parse_unipoly("").is_err());
        assert!(parse_unipoly("t s").is_err());
    }

    #[test]
    fn forms() {
        let f = parse_form("X^2+Y^2-Z^2").unwrap();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.coefficient(Monomial::new(0, 0, 2)), BigInt::from(-1));
        let g = parse_form("-x^2 + y*z + 2z^2").unwrap();
        assert_eq!(g, parse_form("X^2 - YZ - 2Z^2").unwrap());
        assert!(parse_form("X^2 + Y").unwrap_err().reason.contains("degree"));
        assert!(parse_form("X/2").is_err());
        assert!(parse_form("X - X").is_err());
    }

    #[test]
    fn intervals_and_decimals() {
        let iv = parse_interval("1, 3/2").unwrap();
        assert_eq!((iv.lo(), iv.hi()), (&rat(1, 1), &rat(3, 2)));
        assert!(parse_interval("2,1").is_err());
        assert_eq!(fixed(&rat(-1, 3), 2), "-0.33");
        assert_eq!(fixed(&rat(5, 1000), 2), "0.01");
        assert_eq!(fixed(&rat(7, 2), 0), "4");
        assert_eq!(fixed(&rat(12, 1), 2), "12.00");
    }
}
