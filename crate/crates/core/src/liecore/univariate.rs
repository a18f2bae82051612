use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::UnivariateWire;
use crate::liecore::LieElement;
use crate::rational::{format_q, parse_q, q, Q};

/// Truncated power series in one formal variable `t`, dense in exponents
/// `0..=order`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "UnivariateWire", into = "UnivariateWire")]
pub struct RationalUnivariateSeries {
    coeffs: Vec<Q>,
}

impl RationalUnivariateSeries {
    pub fn zero(order: usize) -> Self {
        RationalUnivariateSeries {
            coeffs: vec![Q::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, Q::one())
    }

    /// `c t^k`.
    pub fn monomial(order: usize, exponent: usize, coeff: Q) -> Self {
        let mut out = Self::zero(order);
        if exponent <= order {
            out.coeffs[exponent] = coeff;
        }
        out
    }

    /// Coefficients beyond `order` are dropped, missing ones are zero.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = Q>) -> Self {
        let mut out = Self::zero(order);
        for (k, c) in coeffs.into_iter().take(order + 1).enumerate() {
            out.coeffs[k] = c;
        }
        out
    }

    /// `sum_k t^k / (k + shift)!`, the building block of every kernel.
    pub(crate) fn exp_tail(order: usize, shift: usize, sign: i64) -> Self {
        let mut out = Self::zero(order);
        let mut fact = crate::rational::factorial(shift);
        let mut s = Q::one();
        for k in 0..=order {
            out.coeffs[k] = &s / &fact;
            fact *= q((k + shift + 1) as i64);
            s *= q(sign);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn truncated(&self, order: usize) -> Self {
        Self::from_coeffs(order.min(self.order()), self.coeffs.iter().cloned())
    }

    fn zip(&self, other: &Self, f: impl Fn(&Q, &Q) -> Q) -> Self {
        let order = self.order().min(other.order());
        Self::from_coeffs(order, (0..=order).map(|k| f(&self.coeffs[k], &other.coeffs[k])))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    pub fn scaled(&self, factor: &Q) -> Self {
        Self::from_coeffs(self.order(), self.coeffs.iter().map(|c| c * factor))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                out.coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        out
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::Domain(
                "series with zero constant term is not invertible".into(),
            ));
        }
        let order = self.order();
        let inv0 = c0.recip();
        let mut out = Self::zero(order);
        out.coeffs[0] = inv0.clone();
        for n in 1..=order {
            let mut acc = Q::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &out.coeffs[n - k];
            }
            out.coeffs[n] = -acc * &inv0;
        }
        Ok(out)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Division by `t`; the constant term must vanish. Lowers the order by one.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order() == 0 {
            return Err(Error::Domain("cannot divide by t".into()));
        }
        Ok(Self::from_coeffs(self.order() - 1, self.coeffs[1..].iter().cloned()))
    }

    /// Multiplication by `t`; raises the order by one.
    pub fn shift_up(&self) -> Self {
        Self::from_coeffs(
            self.order() + 1,
            std::iter::once(Q::zero()).chain(self.coeffs.iter().cloned()),
        )
    }

    pub fn derivative(&self) -> Self {
        let order = self.order().saturating_sub(1);
        Self::from_coeffs(
            order,
            (1..=self.order()).map(|k| &self.coeffs[k] * q(k as i64)),
        )
    }

    /// `phi(-t)`.
    pub fn reflected(&self) -> Self {
        Self::from_coeffs(
            self.order(),
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() }),
        )
    }

    /// `(phi(t) - phi(-t)) / 2`.
    pub fn odd_part(&self) -> Self {
        Self::from_coeffs(
            self.order(),
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { c.clone() } else { Q::zero() }),
        )
    }

    pub fn even_part(&self) -> Self {
        self.sub(&self.odd_part())
    }

    /// First exponent where the two series differ, over the common order.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, Q)> {
        let order = self.order().min(other.order());
        (0..=order)
            .find(|&k| self.coeffs[k] != other.coeffs[k])
            .map(|k| (k, &self.coeffs[k] - &other.coeffs[k]))
    }

    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }
}

/// `sum_k phi_k (ad_{x_letter})^k a`, evaluated by nested brackets.
pub fn apply_operator_series(
    phi: &RationalUnivariateSeries,
    letter: usize,
    a: &LieElement,
) -> Result<LieElement> {
    if letter >= a.arity() {
        return Err(Error::LetterOutOfRange {
            letter,
            arity: a.arity(),
        });
    }
    // (ad)^k a starts in degree k + 1, so phi_k beyond phi.order() only reaches
    // degrees above phi.order() + 1.
    let order = a.order().min(phi.order() + 1);
    let mut current = a.truncated(order).to_assoc();
    let mut acc = current.scaled(&phi.coeff(0));
    for k in 1..=phi.order() {
        current = current.ad_letter(letter);
        if current.is_zero() {
            break;
        }
        acc = acc.linear_combination(&current, &phi.coeff(k))?;
    }
    LieElement::from_assoc_unchecked(&acc)
}

impl fmt::Debug for RationalUnivariateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalUnivariateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{k}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0 + O(t^{})", self.order() + 1)
        } else {
            write!(f, "{} + O(t^{})", parts.join(" + "), self.order() + 1)
        }
    }
}

impl From<RationalUnivariateSeries> for UnivariateWire {
    fn from(s: RationalUnivariateSeries) -> Self {
        UnivariateWire {
            order: s.order(),
            coeffs: s.coeffs.iter().map(format_q).collect(),
        }
    }
}

impl TryFrom<UnivariateWire> for RationalUnivariateSeries {
    type Error = Error;

    fn try_from(wire: UnivariateWire) -> Result<Self> {
        if wire.coeffs.len() > wire.order + 1 {
            return Err(Error::Parse("more coefficients than order + 1".into()));
        }
        let coeffs = wire
            .coeffs
            .iter()
            .map(|c| parse_q(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(wire.order, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_frac;
    use crate::wordcore::Word;

    #[test]
    fn inverse_and_division() {
        let s = RationalUnivariateSeries::from_coeffs(5, [q(1), q(-1)]);
        let inv = s.inverse().unwrap();
        assert!(inv.coeffs().iter().all(|c| *c == q(1)));
        assert!(s.mul(&inv).agrees_with(&RationalUnivariateSeries::one(5)));
        assert!(RationalUnivariateSeries::zero(3).inverse().is_err());
    }

    #[test]
    fn calculus_helpers() {
        let s = RationalUnivariateSeries::from_coeffs(3, [q(1), q(2), q(3), q(4)]);
        assert_eq!(s.derivative().coeffs(), &[q(2), q(6), q(12)]);
        assert_eq!(s.odd_part().coeffs(), &[q(0), q(2), q(0), q(4)]);
        assert_eq!(s.reflected().coeffs(), &[q(1), q(-2), q(3), q(-4)]);
        assert_eq!(s.shift_up().order(), 4);
        assert!(s.shift_down().is_err());
        let e = RationalUnivariateSeries::exp_tail(3, 1, 1);
        assert_eq!(e.coeffs(), &[q(1), q_frac(1, 2), q_frac(1, 6), q_frac(1, 24)]);
    }

    #[test]
    fn operator_identity_and_single_ad() {
        let y = LieElement::generator(2, 1, 4).unwrap();
        let one = RationalUnivariateSeries::one(4);
        assert_eq!(apply_operator_series(&one, 0, &y).unwrap(), y);
        let t = RationalUnivariateSeries::monomial(4, 1, q(1));
        let r = apply_operator_series(&t, 0, &y).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r.coeff(&Word::decode("ab").unwrap()), q(1));
    }

    #[test]
    fn json_shape() {
        let s = RationalUnivariateSeries::from_coeffs(2, [q(1), q_frac(1, 2)]);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"order":2,"coeffs":["1/1","1/2","0/1"]}"#);
        let back: RationalUnivariateSeries = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
    }
}
