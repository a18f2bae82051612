//! Exact rational coefficients and their `p/q` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient field used everywhere in the crate.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `p/q` with `q > 0` and `gcd(p, q) = 1`; integers are written `p/1`.
pub fn format_q(value: &Q) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Accepts `p/q` (any sign placement, reduced on parse) or a bare integer.
pub fn parse_q(text: &str) -> Result<Q> {
    let text = text.trim();
    let bad = || Error::Parse(format!("invalid rational {text:?}"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => {
            let n: BigInt = text.parse().map_err(|_| bad())?;
            Ok(Q::from_integer(n))
        }
    }
}

pub fn factorial(n: usize) -> Q {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Q::from_integer(acc)
}

pub fn binomial(n: usize, k: usize) -> Q {
    if k > n {
        return Q::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `value^exp` for a possibly negative integer exponent.
pub fn pow_q(value: &Q, exp: i64) -> Q {
    let mut acc = Q::one();
    for _ in 0..exp.unsigned_abs() {
        acc *= value;
    }
    if exp < 0 {
        acc.recip()
    } else {
        acc
    }
}

pub fn sign_q(negate: bool, value: Q) -> Q {
    if negate {
        -value
    } else {
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_is_reduced_with_positive_denominator() {
        assert_eq!(format_q(&q_frac(2, -4)), "-1/2");
        assert_eq!(format_q(&q(3)), "3/1");
        assert_eq!(format_q(&Q::zero()), "0/1");
    }

    #[test]
    fn parse_round_trips() {
        for text in ["1/12", "-7/3", "5/1", "0/1"] {
            assert_eq!(format_q(&parse_q(text).unwrap()), text);
        }
        assert_eq!(parse_q("4").unwrap(), q(4));
        assert_eq!(parse_q("6/-4").unwrap(), q_frac(-3, 2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("1.5").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), q(15));
        assert_eq!(binomial(2, 3), Q::zero());
    }
}
