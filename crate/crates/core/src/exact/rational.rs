//! Rational scalars.
//!
//! Backed by `num_rational::BigRational`, which keeps every value in lowest
//! terms with a positive denominator (zero is `0/1`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::MathError;

pub type Rational = BigRational;

/// Shorthand for `num/den` with machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"n"`, `"-n"`, `"n/d"` or `"-n/d"`.
pub fn parse_rational(text: &str) -> Result<Rational, MathError> {
    let bad = || MathError::Parse {
        input: text.to_string(),
        reason: "expected an integer or num/den".to_string(),
    };
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(MathError::Parse {
            input: text.to_string(),
            reason: "zero denominator".to_string(),
        });
    }
    Ok(Rational::new(num, den))
}

/// Formats as `n` for integers and `n/d` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True if stored in lowest terms with a positive denominator.
pub fn is_normalized(r: &Rational) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Gcd of the integers, zero for an empty or all-zero input.
pub fn content<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    let mut g = BigInt::zero();
    for v in values {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    g
}
