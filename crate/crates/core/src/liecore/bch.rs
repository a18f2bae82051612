use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::liecore::LieElement;
use crate::rational::Q;
use crate::wordcore::AssocSeries;

/// `ch(x_1, .., x_n) = log(e^{x_1} .. e^{x_n})` through degree `order`,
/// computed in the associative algebra and projected to the Lyndon basis.
pub fn bch_multi(arity: usize, order: usize) -> Result<LieElement> {
    if order == 0 {
        return Err(Error::Usage("BCH series needs order >= 1".into()));
    }
    if arity == 0 {
        return Err(Error::Usage("BCH series needs at least one generator".into()));
    }
    let mut product = AssocSeries::one(arity, order);
    for i in 0..arity {
        product = product.mul(&AssocSeries::generator(arity, i, order)?.exp()?)?;
    }
    LieElement::from_assoc(&product.log()?)
}

/// `ch(x, y)`.
pub fn bch(order: usize) -> Result<LieElement> {
    bch_multi(2, order)
}

/// `ch_t(x_1, .., x_n) = t^{-1} ch(t x_1, .., t x_n)`: the degree-`k` part is
/// `t^{k-1}` times that of `ch`.
pub fn ch_t_multi(arity: usize, t: &Q, order: usize) -> Result<LieElement> {
    if t.is_zero() {
        return Err(Error::Domain("ch_t is defined for t != 0".into()));
    }
    Ok(bch_multi(arity, order)?.scale(t).scaled(&t.recip()))
}

pub fn ch_t(t: &Q, order: usize) -> Result<LieElement> {
    ch_t_multi(2, t, order)
}

/// `d/dt ch_t`: degree-`k` part `(k - 1) t^{k-2} ch^{(k)}`.
pub fn ch_t_derivative(arity: usize, t: &Q, order: usize) -> Result<LieElement> {
    if t.is_zero() {
        return Err(Error::Domain("ch_t is defined for t != 0".into()));
    }
    let ch = bch_multi(arity, order)?;
    let mut out = LieElement::zero(arity, order);
    for (l, c) in ch.terms() {
        let k = l.len() as i64;
        if k < 2 {
            continue;
        }
        let mut power = Q::one();
        for _ in 0..k - 2 {
            power *= t;
        }
        out.add_term(l.clone(), c * Q::from_integer((k - 1).into()) * power);
    }
    Ok(out)
}
