use crate::error::{check_arity, Result};
use crate::tangential::TangentialDerivation;
use crate::traces::{Plain, Quad, QuadTraceSeries, TraceSeries, TraceSeriesIn, TraceSpace};
use crate::wordcore::AssocSeries;

/// `sum_i x_i (d_i a_i)` projected to the trace space `S`.
pub fn divergence_in<S: TraceSpace>(u: &TangentialDerivation) -> TraceSeriesIn<S> {
    let mut acc = AssocSeries::zero(u.arity(), u.order());
    for (i, a) in u.tuple().iter().enumerate() {
        let partial = a.to_assoc().decompose().partials.swap_remove(i);
        acc = acc.add(&partial.mul_letter_left(i)).expect("same arity");
    }
    TraceSeriesIn::<S>::from_assoc(&acc)
}

/// The divergence cocycle with values in `tr_n`.
pub fn div(u: &TangentialDerivation) -> TraceSeries {
    divergence_in::<Plain>(u)
}

/// The divergence cocycle with values in `tr_n^quad`.
pub fn div_quad(u: &TangentialDerivation) -> QuadTraceSeries {
    divergence_in::<Quad>(u)
}

/// Action of `u` on a trace series through any representative.
pub fn act_on_trace<S: TraceSpace>(
    u: &TangentialDerivation,
    g: &TraceSeriesIn<S>,
) -> Result<TraceSeriesIn<S>> {
    check_arity(u.arity(), g.arity())?;
    let image = u.act_assoc(&g.lift().truncated(u.order()))?;
    Ok(TraceSeriesIn::<S>::from_assoc(&image))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::{parse_lie, LieElement};
    use crate::rational::q;
    use crate::wordcore::Word;

    fn lie(text: &str) -> LieElement {
        parse_lie(text, 2, 5).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::decode(s).unwrap()
    }

    #[test]
    fn divergence_examples() {
        let u = TangentialDerivation::new(vec![lie("y"), lie("x")]).unwrap();
        assert!(div(&u).is_zero());

        let u = TangentialDerivation::new(vec![lie("[x,y]"), LieElement::zero(2, 5)]).unwrap();
        let d = div(&u);
        assert_eq!(d.len(), 1);
        assert_eq!(d.coeff_of_word(&w("ab")), q(-1));
        let dq = div_quad(&u);
        assert_eq!(dq.len(), 1);
        assert_eq!(dq.coeff_of_word(&w("ab")), q(-1));
    }

    #[test]
    fn action_on_traces() {
        let u = TangentialDerivation::new(vec![lie("y"), LieElement::zero(2, 5)]).unwrap();
        let one = TraceSeries::from_words(2, 5, [(Word::empty(), q(1))]).unwrap();
        assert!(act_on_trace(&u, &one).unwrap().is_zero());
        let tx = TraceSeries::from_words(2, 5, [(w("a"), q(1))]).unwrap();
        assert!(act_on_trace(&u, &tx).unwrap().is_zero());

        let u = TangentialDerivation::new(vec![lie("y + [x,y]"), lie("[x,[x,y]]")]).unwrap();
        let from_xy = AssocSeries::monomial(2, 5, w("ab"), q(1)).unwrap();
        let from_yx = AssocSeries::monomial(2, 5, w("ba"), q(1)).unwrap();
        let a = TraceSeries::from_assoc(&u.act_assoc(&from_xy).unwrap());
        let b = TraceSeries::from_assoc(&u.act_assoc(&from_yx).unwrap());
        assert_eq!(a, b);
        assert!(!a.is_zero());
    }
}
