use crate::error::{Error, Result};
use crate::liecore::LieElement;
use crate::tangential::TangentialDerivation;
use crate::traces::{trace_pairing, TraceSeries};
use crate::wordcore::AssocSeries;

/// `sum_k tr(a_k b_k)` for a list of Lie pairs.
pub fn quadratic_trace(pairs: &[(LieElement, LieElement)]) -> Result<Option<TraceSeries>> {
    let mut acc: Option<TraceSeries> = None;
    for (a, b) in pairs {
        let p = trace_pairing(a, b)?;
        acc = Some(match acc {
            None => p,
            Some(s) => s.add(&p)?,
        });
    }
    Ok(acc)
}

/// The tuple `(a_1, .., a_n)` with `d/ds p(.., x_i + s z, ..) = tr(z a_i)`.
///
/// Rotating the fresh letter `z` to the front of each cyclic word leaves
/// `a_i` as the remaining linear word. The tuple is returned as extracted
/// (no normalization), after checking every `a_i` is Lie and
/// `sum_i [x_i, a_i] = 0`.
pub fn drinfeld_tuple(p: &TraceSeries) -> Result<Vec<LieElement>> {
    let arity = p.arity();
    let order = p.order().saturating_sub(1);
    let mut tuple = Vec::with_capacity(arity);
    for i in 0..arity {
        let mut a = AssocSeries::zero(arity, order);
        for (class, c) in p.terms() {
            let w = class.representative();
            for (pos, &l) in w.letters().iter().enumerate() {
                if l as usize == i {
                    let rest = w.slice(pos + 1, w.len()).concat(&w.slice(0, pos));
                    a.add_term(rest, c.clone());
                }
            }
        }
        let lie = LieElement::from_assoc(&a).map_err(|e| {
            Error::Consistency(format!(
                "component {i} extracted from the trace is not Lie ({e}); input lies outside tr^2"
            ))
        })?;
        tuple.push(lie);
    }
    let mut sum = AssocSeries::zero(arity, order + 1);
    for (i, a) in tuple.iter().enumerate() {
        let a = a.to_assoc();
        sum = sum.add(&a.mul_letter_left(i).sub(&a.mul_letter_right(i))?)?;
    }
    if let Some((w, c)) = sum.terms().next() {
        return Err(Error::Consistency(format!(
            "sum of [x_i, a_i] is nonzero at {w} (coefficient {c})"
        )));
    }
    Ok(tuple)
}

/// The normalized tangential derivation attached to `p`.
pub fn derivation_from_quadratic_trace(p: &TraceSeries) -> Result<TangentialDerivation> {
    TangentialDerivation::new(drinfeld_tuple(p)?)
}
