//! Solutions `(A, B)` of
//! `(1 - e^{-ad_x}) A + (e^{ad_y} - 1) B = x + y - ch(y, x)`.
//!
//! Writing `a = (1 - e^{-ad_x})/ad_x A` and `b = (e^{ad_y} - 1)/ad_y B` turns
//! the equation into `[x, a] + [y, b] = x + y - ch(y, x)`, which is solved by
//! sorting the right-normed Dynkin rewriting of the right-hand side by its
//! outermost letter.

use std::collections::HashSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{check_arity, Error, Result};
use crate::liecore::{
    apply_operator_series, bch, ch_t, ch_t_derivative, dynkin_right_normed, kernel_series, Kernel,
    LieElement,
};
use crate::rational::{format_q, q, Q};
use crate::tangential::{drinfeld_tuple, TangentialDerivation};
use crate::traces::trace_pairing;
use crate::wordcore::{AssocSeries, Word};

/// Method tag of solutions built by [`solve_kv`].
pub const CANONICAL_METHOD: &str = "dynkin-right-normed";

/// A pair `(A, B)` of Lie series in `x, y`.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SolutionWire", into = "SolutionWire")]
pub struct KvSolution {
    pub a: LieElement,
    pub b: LieElement,
    pub method: String,
}

#[derive(Serialize, Deserialize)]
struct SolutionWire {
    order: usize,
    #[serde(rename = "A")]
    a: LieElement,
    #[serde(rename = "B")]
    b: LieElement,
    method: String,
}

/// `(a, b)` with `[x, a] + [y, b]` equal to a prescribed Lie series.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub a: LieElement,
    pub b: LieElement,
}

impl KvSolution {
    pub fn new(a: LieElement, b: LieElement, method: impl Into<String>) -> Result<Self> {
        check_arity(a.arity(), 2)?;
        check_arity(b.arity(), 2)?;
        let order = a.order().min(b.order());
        Ok(KvSolution {
            a: a.truncated(order),
            b: b.truncated(order),
            method: method.into(),
        })
    }

    pub fn order(&self) -> usize {
        self.a.order().min(self.b.order())
    }

    pub fn truncated(&self, order: usize) -> Self {
        KvSolution {
            a: self.a.truncated(order),
            b: self.b.truncated(order),
            method: self.method.clone(),
        }
    }

    /// The tangential derivation `x -> [x, A], y -> [y, B]`.
    pub fn derivation(&self) -> Result<TangentialDerivation> {
        TangentialDerivation::new(vec![self.a.clone(), self.b.clone()])
    }

    /// Coefficients of `x` in `A` and in `B`.
    pub fn linear_coefficients(&self) -> (Q, Q) {
        let x = Word::letter(0);
        (self.a.coeff(&x), self.b.coeff(&x))
    }

    /// `A = ad_x/(1 - e^{-ad_x}) a`, `B = ad_y/(e^{ad_y} - 1) b`.
    pub fn from_factorization(f: &Factorization, method: impl Into<String>) -> Result<Self> {
        let order = f.a.order().min(f.b.order());
        let a = apply_operator_series(
            &kernel_series(&Kernel::TOverOneMinusExpNeg, order),
            0,
            &f.a,
        )?;
        let b = apply_operator_series(&kernel_series(&Kernel::TOverExpMinusOne, order), 1, &f.b)?;
        Self::new(a, b, method)
    }

    /// Inverse of [`KvSolution::from_factorization`].
    pub fn factorization(&self) -> Result<Factorization> {
        let order = self.order();
        let a = apply_operator_series(
            &kernel_series(&Kernel::OneMinusExpNegOverT, order),
            0,
            &self.a,
        )?;
        let b = apply_operator_series(
            &kernel_series(&Kernel::ExpMinusOneOverT, order),
            1,
            &self.b,
        )?;
        Ok(Factorization { a, b })
    }
}

/// `x + y - ch(y, x)` through degree `order`.
pub fn kv_rhs(order: usize) -> Result<LieElement> {
    if order < 2 {
        return Err(Error::Usage("the KV right-hand side needs order >= 2".into()));
    }
    let [x, y]: [LieElement; 2] = LieElement::generators(2, order)
        .try_into()
        .expect("two generators");
    let ch_yx = bch(order)?.substitute(&[y.clone(), x.clone()])?;
    x.add(&y)?.sub(&ch_yx)
}

/// Parts `p_i` with `sum_i [x_i, p_i] = r`, for `r` without constant or
/// linear terms: a degree-`k` word `x_i w` with coefficient `c` contributes
/// `c/k` times the right-normed bracketing of `w` to `p_i`.
pub fn factorize_lie(r: &LieElement) -> Result<Vec<LieElement>> {
    if let Some((l, _)) = r.leading_term() {
        if l.len() < 2 {
            return Err(Error::Domain(
                "factorization needs a series starting in degree 2".into(),
            ));
        }
    }
    let arity = r.arity();
    let inner = r.order().saturating_sub(1);
    let mut words = vec![AssocSeries::zero(arity, inner); arity];
    for (w, c) in r.to_assoc().terms() {
        let k = w.len() as i64;
        let first = w.first().expect("degree >= 2");
        words[first].add_term(w.slice(1, w.len()), c / q(k));
    }
    words
        .iter()
        .map(|s| LieElement::from_assoc(&dynkin_right_normed(s)))
        .collect()
}

/// Arity-2 form of [`factorize_lie`].
pub fn factorize(r: &LieElement) -> Result<Factorization> {
    check_arity(r.arity(), 2)?;
    let mut parts = factorize_lie(r)?;
    let b = parts.pop().expect("two parts");
    let a = parts.pop().expect("two parts");
    Ok(Factorization { a, b })
}

/// `[x, a] + [y, b]`.
pub fn factorization_value(f: &Factorization) -> Result<LieElement> {
    let order = f.a.order().min(f.b.order()) + 1;
    let xa = f.a.with_order(order).ad_generator(0)?;
    let yb = f.b.with_order(order).ad_generator(1)?;
    xa.add(&yb)
}

/// The canonical solution through degree `order`.
pub fn solve_kv(order: usize) -> Result<KvSolution> {
    if order == 0 {
        return Err(Error::Usage("solve-kv needs order >= 1".into()));
    }
    let f = factorize(&kv_rhs(order + 1)?)?;
    KvSolution::from_factorization(&f, CANONICAL_METHOD)
}

/// Left side minus right side of the first KV equation. Terms of degree
/// `k` in `A`, `B` enter from degree `k + 1`, so the residual is exact
/// through degree `order + 1`.
pub fn kv1_residual(s: &KvSolution) -> Result<LieElement> {
    let order = s.order() + 1;
    let lhs_a = apply_operator_series(
        &kernel_series(&Kernel::OneMinusExpNeg, order),
        0,
        &s.a.with_order(order),
    )?;
    let lhs_b = apply_operator_series(
        &kernel_series(&Kernel::ExpMinusOne, order),
        1,
        &s.b.with_order(order),
    )?;
    lhs_a.add(&lhs_b)?.sub(&kv_rhs(order.max(2))?.truncated(order))
}

/// The solution itself followed by one gauge-shifted solution per pair:
/// `(a, b) + (a', b')` where `(a', b')` is the tuple attached to
/// `tr(p q)` and therefore satisfies `[x, a'] + [y, b'] = 0`.
pub fn gauge_family(
    s: &KvSolution,
    pairs: &[(LieElement, LieElement)],
) -> Result<Vec<KvSolution>> {
    let order = s.order();
    let base = s.factorization()?;
    let mut out = vec![s.clone()];
    for (k, (p, r)) in pairs.iter().enumerate() {
        let trace = trace_pairing(&p.with_order(order + 1), &r.with_order(order + 1))?;
        let shift = drinfeld_tuple(&trace)?;
        let f = Factorization {
            a: base.a.add(&shift[0])?,
            b: base.b.add(&shift[1])?,
        };
        out.push(KvSolution::from_factorization(
            &f,
            format!("{}+gauge{}", s.method, k + 1),
        )?);
    }
    Ok(out)
}

/// Result of [`flow_check`] at one sample.
#[derive(Clone, Debug, PartialEq)]
pub struct FlowWitness {
    pub t: Q,
    pub word: Word,
    pub delta: Q,
}

/// Checks `u_t(ch_t(x, y)) = d/dt ch_t(x, y)` at every sample, where
/// `u_t = (t^{-1} A(tx, ty), t^{-1} B(tx, ty))`.
///
/// Each homogeneous component of the difference is a polynomial in `t` of
/// degree at most `order - 2`, so `order` distinct samples certify the
/// identity.
pub fn flow_check(s: &KvSolution, samples: &[Q]) -> Result<bool> {
    Ok(flow_witness(s, samples)?.is_none())
}

/// Like [`flow_check`] but returns the first failing coefficient.
pub fn flow_witness(s: &KvSolution, samples: &[Q]) -> Result<Option<FlowWitness>> {
    let order = s.order();
    let needed = order.max(1);
    if samples.len() < needed {
        return Err(Error::Usage(format!(
            "flow check at order {order} needs at least {needed} samples, got {}",
            samples.len()
        )));
    }
    let mut seen = HashSet::new();
    for t in samples {
        if t.is_zero() {
            return Err(Error::Usage("flow samples must be nonzero".into()));
        }
        if !seen.insert(format_q(t)) {
            return Err(Error::Usage("flow samples must be distinct".into()));
        }
    }
    for t in samples {
        let inv = t.recip();
        let ut = TangentialDerivation::new(vec![
            s.a.scale(t).scaled(&inv),
            s.b.scale(t).scaled(&inv),
        ])?;
        let cht = ch_t(t, order)?;
        let lhs = ut.act(&cht)?;
        let rhs = ch_t_derivative(2, t, order)?;
        if let Some((word, delta)) = lhs.first_difference(&rhs) {
            return Ok(Some(FlowWitness {
                t: t.clone(),
                word,
                delta,
            }));
        }
    }
    Ok(None)
}

impl std::fmt::Debug for KvSolution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "KvSolution[{}]{{ A = {}, B = {} }}", self.method, self.a, self.b)
    }
}

impl From<KvSolution> for SolutionWire {
    fn from(s: KvSolution) -> Self {
        SolutionWire {
            order: s.order(),
            a: s.a,
            b: s.b,
            method: s.method,
        }
    }
}

impl TryFrom<SolutionWire> for KvSolution {
    type Error = Error;

    fn try_from(w: SolutionWire) -> Result<Self> {
        if w.a.order() < w.order || w.b.order() < w.order {
            return Err(Error::Parse("component order below solution order".into()));
        }
        KvSolution::new(w.a.truncated(w.order), w.b.truncated(w.order), w.method)
    }
}
