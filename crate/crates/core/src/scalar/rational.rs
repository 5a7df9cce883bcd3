use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{KzError, Result};

/// Arbitrary-precision rational; always stored reduced with a positive
/// denominator, zero as `0/1`.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p`, `p/q` or `-p/q` with integer `p`, `q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = |position: usize, message: &str| KzError::Syntax {
        position,
        message: message.to_string(),
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| bad(0, "expected an integer numerator"))?;
    let den: BigInt = match den {
        Some(d) => {
            if d.starts_with('-') || d.starts_with('+') {
                return Err(bad(text.find('/').unwrap_or(0) + 1, "denominator must be unsigned"));
            }
            d.parse()
                .map_err(|_| bad(text.find('/').unwrap_or(0) + 1, "expected an integer denominator"))?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(KzError::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// `p` for integers, `p/q` otherwise.
pub fn render_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
