//! Named operator kernels `phi(t)` that get applied as `phi(ad_x)`.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::liecore::RationalUnivariateSeries as Series;
use crate::rational::{parse_q, q_frac, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Kernel {
    /// `t/(e^t - 1) - 1 + t/2`, the Bernoulli generating series without its
    /// first two terms.
    F,
    /// `t/(1 - e^{-t})`.
    TOverOneMinusExpNeg,
    /// `t/(e^t - 1)`.
    TOverExpMinusOne,
    /// `(1 - e^{-t})/t`.
    OneMinusExpNegOverT,
    /// `(e^t - 1)/t`.
    ExpMinusOneOverT,
    /// `1 - e^{-t}`.
    OneMinusExpNeg,
    /// `e^t - 1`.
    ExpMinusOne,
    /// `b t/(1-e^{-t}) - t/((e^t-1)(1-e^{-t})) + 1/(1-e^{-t})`.
    Alpha(Q),
    /// `b t/2 - t/(2 (e^t-1)(1-e^{-t})) + (e^t+1)/(4 (e^t-1))`.
    BetaOdd(Q),
}

impl Kernel {
    pub fn name(&self) -> String {
        match self {
            Kernel::F => "f".into(),
            Kernel::TOverOneMinusExpNeg => "t/(1-exp(-t))".into(),
            Kernel::TOverExpMinusOne => "t/(exp(t)-1)".into(),
            Kernel::OneMinusExpNegOverT => "(1-exp(-t))/t".into(),
            Kernel::ExpMinusOneOverT => "(exp(t)-1)/t".into(),
            Kernel::OneMinusExpNeg => "1-exp(-t)".into(),
            Kernel::ExpMinusOne => "exp(t)-1".into(),
            Kernel::Alpha(b) => format!("alpha:{}", crate::rational::format_q(b)),
            Kernel::BetaOdd(b) => format!("beta_odd:{}", crate::rational::format_q(b)),
        }
    }
}

impl FromStr for Kernel {
    type Err = Error;

    /// Names as printed by [`Kernel::name`]; the parametric kernels take
    /// their rational parameter after a colon, e.g. `alpha:1/2`.
    fn from_str(name: &str) -> Result<Self> {
        let name = name.trim();
        let kernel = match name {
            "f" => Kernel::F,
            "t/(1-exp(-t))" => Kernel::TOverOneMinusExpNeg,
            "t/(exp(t)-1)" => Kernel::TOverExpMinusOne,
            "(1-exp(-t))/t" => Kernel::OneMinusExpNegOverT,
            "(exp(t)-1)/t" => Kernel::ExpMinusOneOverT,
            "1-exp(-t)" => Kernel::OneMinusExpNeg,
            "exp(t)-1" => Kernel::ExpMinusOne,
            _ => match name.split_once(':') {
                Some(("alpha", b)) => Kernel::Alpha(parse_q(b)?),
                Some(("beta_odd", b)) => Kernel::BetaOdd(parse_q(b)?),
                _ => return Err(Error::Usage(format!("unknown kernel {name:?}"))),
            },
        };
        Ok(kernel)
    }
}

/// Exact coefficients of `kernel` through `t^order`.
pub fn kernel_series(kernel: &Kernel, order: usize) -> Series {
    match kernel {
        Kernel::OneMinusExpNegOverT => Series::exp_tail(order, 1, -1),
        Kernel::ExpMinusOneOverT => Series::exp_tail(order, 1, 1),
        Kernel::TOverOneMinusExpNeg => invert(&Series::exp_tail(order, 1, -1)),
        Kernel::TOverExpMinusOne => invert(&Series::exp_tail(order, 1, 1)),
        Kernel::OneMinusExpNeg => Series::exp_tail(order.saturating_sub(1), 1, -1)
            .shift_up()
            .truncated(order),
        Kernel::ExpMinusOne => Series::exp_tail(order.saturating_sub(1), 1, 1)
            .shift_up()
            .truncated(order),
        Kernel::F => {
            let mut s = kernel_series(&Kernel::TOverExpMinusOne, order);
            s = s.sub(&Series::one(order));
            s.add(&Series::monomial(order, 1, q_frac(1, 2)))
        }
        Kernel::Alpha(b) => {
            // (1 - t/(e^t-1)) / (1 - e^{-t}) = [(1 - t/(e^t-1)) / t] / [(1-e^{-t})/t]
            let n = order + 1;
            let numer = Series::one(n)
                .sub(&kernel_series(&Kernel::TOverExpMinusOne, n))
                .shift_down()
                .expect("constant term cancels");
            let rest = numer.mul(&kernel_series(&Kernel::TOverOneMinusExpNeg, order));
            kernel_series(&Kernel::TOverOneMinusExpNeg, order)
                .scaled(b)
                .add(&rest)
        }
        Kernel::BetaOdd(b) => {
            // (1/t) [ -1/2 t^2/((e^t-1)(1-e^{-t})) + 1/4 (e^t+1) t/(e^t-1) ]
            let n = order + 1;
            let t_over_d = two_sided(n);
            let coth_part = Series::exp_tail(n, 0, 1)
                .add(&Series::one(n))
                .mul(&kernel_series(&Kernel::TOverExpMinusOne, n));
            let bracket = t_over_d
                .scaled(&q_frac(-1, 2))
                .add(&coth_part.scaled(&q_frac(1, 4)));
            let pole_free = bracket.shift_down().expect("poles cancel");
            pole_free.add(&Series::monomial(order, 1, b * q_frac(1, 2)))
        }
    }
}

/// `t^2 / ((e^t - 1)(1 - e^{-t}))`.
fn two_sided(order: usize) -> Series {
    kernel_series(&Kernel::TOverExpMinusOne, order)
        .mul(&kernel_series(&Kernel::TOverOneMinusExpNeg, order))
}

fn invert(s: &Series) -> Series {
    s.inverse().expect("constant term 1")
}

/// Parses a kernel name and evaluates it.
pub fn kernel_series_by_name(name: &str, order: usize) -> Result<Series> {
    Ok(kernel_series(&name.parse()?, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{binomial, factorial, q};
    use num_traits::Zero;

    /// Bernoulli numbers from `sum_{k<=n} C(n+1, k) B_k = 0`.
    fn bernoulli(n: usize) -> Vec<Q> {
        let mut b = vec![q(1)];
        for m in 1..=n {
            let mut acc = Q::zero();
            for (k, bk) in b.iter().enumerate() {
                acc += binomial(m + 1, k) * bk;
            }
            b.push(-acc / q((m + 1) as i64));
        }
        b
    }

    #[test]
    fn f_matches_bernoulli_oracle() {
        let f = kernel_series(&Kernel::F, 10);
        let b = bernoulli(10);
        assert!(f.coeff(0).is_zero());
        assert!(f.coeff(1).is_zero());
        for k in 2..=10 {
            assert_eq!(f.coeff(k), &b[k] / factorial(k), "k = {k}");
        }
        assert_eq!(f.coeff(2), q_frac(1, 12));
        assert!(f.coeff(3).is_zero());
    }

    #[test]
    fn kernel_pairs_are_inverse() {
        let order = 9;
        let pairs = [
            (Kernel::TOverOneMinusExpNeg, Kernel::OneMinusExpNegOverT),
            (Kernel::TOverExpMinusOne, Kernel::ExpMinusOneOverT),
        ];
        for (a, b) in pairs {
            let prod = kernel_series(&a, order).mul(&kernel_series(&b, order));
            assert!(prod.agrees_with(&Series::one(order)));
        }
        assert_eq!(kernel_series(&Kernel::TOverOneMinusExpNeg, 3).coeff(0), q(1));
        assert_eq!(kernel_series(&Kernel::TOverOneMinusExpNeg, 3).coeff(1), q_frac(1, 2));
    }

    #[test]
    fn alpha_satisfies_its_defining_equation() {
        // (1 - e^{-t}) alpha(t) = 1 - t/(e^t-1) + b t
        let order = 8;
        let b = q_frac(-3, 7);
        let alpha = kernel_series(&Kernel::Alpha(b.clone()), order);
        let lhs = kernel_series(&Kernel::OneMinusExpNeg, order + 1)
            .mul(&Series::from_coeffs(order + 1, alpha.coeffs().iter().cloned()));
        let rhs = Series::one(order + 1)
            .sub(&kernel_series(&Kernel::TOverExpMinusOne, order + 1))
            .add(&Series::monomial(order + 1, 1, b));
        assert!(lhs.truncated(order).agrees_with(&rhs.truncated(order)));
    }

    #[test]
    fn beta_odd_is_odd() {
        let s = kernel_series(&Kernel::BetaOdd(q(2)), 9);
        assert!(s.agrees_with(&s.odd_part()));
        // b/2 from the linear term plus 1/12 from t^2/D = 1 - t^2/12 and
        // t coth(t/2) = 2 + t^2/6
        assert_eq!(s.coeff(1), q_frac(13, 12));
    }

    #[test]
    fn names_round_trip() {
        for k in [
            Kernel::F,
            Kernel::TOverExpMinusOne,
            Kernel::Alpha(q_frac(1, 2)),
            Kernel::BetaOdd(q(-1)),
        ] {
            assert_eq!(k.name().parse::<Kernel>().unwrap(), k);
        }
        assert!(matches!("g".parse::<Kernel>(), Err(Error::Usage(_))));
    }
}
