use super::report::VerificationReport;
use super::suites::require_solution;
use crate::error::Result;
use crate::kvsolver::KvSolution;
use crate::liecore::bch_multi;
use crate::tangential::{div_quad, SimplicialPattern, TangentialDerivation};
use crate::traces::QuadTraceSeries;

/// `U = u^{1,2} + u^{12,3} - u^{1,23} - u^{2,3}`.
pub fn prop_u_derivation(u: &TangentialDerivation) -> Result<TangentialDerivation> {
    use SimplicialPattern::*;
    u.simplicial(OneTwo)?
        .add(&u.simplicial(OneTwoThree)?)?
        .sub(&u.simplicial(OneTwentyThree)?)?
        .sub(&u.simplicial(TwoThree)?)
}

/// Per-degree check of `u(ch(x_1, .., x_n)) = 0`.
pub fn annihilation_report(check: &str, u: &TangentialDerivation) -> Result<VerificationReport> {
    let order = u.order();
    let ch = bch_multi(u.arity(), order)?;
    let image = u.act(&ch)?;
    let mut report = VerificationReport::new(check, order);
    report.record_vanishing(&image, 1..=order, None);
    Ok(report)
}

pub fn verify_prop_u(s: &KvSolution) -> Result<VerificationReport> {
    require_solution("propU", s)?;
    annihilation_report("propU", &prop_u_derivation(&s.derivation()?)?)
}

/// `div_quad(u) = 0` for every instance with `u(ch) = 0`; instances failing
/// that hypothesis are reported as skipped.
pub fn verify_prop_last(instances: &[TangentialDerivation]) -> Result<VerificationReport> {
    let order = instances.iter().map(TangentialDerivation::order).max().unwrap_or(0);
    let mut report = VerificationReport::new("propLast", order);
    for (n, u) in instances.iter().enumerate() {
        let label = format!("instance {n}");
        let hyp = annihilation_report("hypothesis", u)?;
        if let Some(fail) = hyp.first_failure() {
            let w = fail.witness.clone().expect("failing outcome has a witness");
            report.skip(fail.degree, Some(&label), w);
            continue;
        }
        let g = div_quad(u);
        report.record_vanishing(&g, 1..=g.order(), Some(&label));
    }
    Ok(report)
}

/// `g(x,y) + g(ch(x,y),z) - g(x,ch(y,z)) - g(y,z)` in arity 3.
pub fn inhomo_combination(g: &QuadTraceSeries) -> Result<QuadTraceSeries> {
    use SimplicialPattern::*;
    let order = g.order();
    let term = |p: SimplicialPattern| -> Result<QuadTraceSeries> {
        g.substitute(&p.arguments(order)?)
    };
    term(OneTwo)?
        .add(&term(OneTwoThree)?)?
        .sub(&term(OneTwentyThree)?)?
        .sub(&term(TwoThree)?)
}

pub fn cocycle_report(check: &str, g: &QuadTraceSeries) -> Result<VerificationReport> {
    let combo = inhomo_combination(g)?;
    let mut report = VerificationReport::new(check, g.order());
    report.record_vanishing(&combo, 1..=g.order(), None);
    Ok(report)
}

/// The inhomogeneous cocycle equation for `g = div_quad(u)`, `u = (A, B)`.
pub fn verify_cocycle_equation(s: &KvSolution) -> Result<VerificationReport> {
    require_solution("cocycle", s)?;
    cocycle_report("cocycle", &div_quad(&s.derivation()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kvsolver::solve_kv;
    use crate::rational::q;
    use crate::traces::tr_quad;
    use crate::wordcore::{AssocSeries, Word};

    #[test]
    fn prop_u_and_last_order_four() {
        let s = solve_kv(4).unwrap();
        assert!(verify_prop_u(&s).unwrap().passed());
        let u = s.derivation().unwrap();
        let big_u = prop_u_derivation(&u).unwrap();
        let r = verify_prop_last(&[big_u, TangentialDerivation::zero(3, 4)]).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.count(super::super::report::Status::Skip), 0);
    }

    #[test]
    fn partial_u_is_caught() {
        let s = solve_kv(4).unwrap();
        let u12 = s.derivation().unwrap().simplicial(SimplicialPattern::OneTwo).unwrap();
        assert!(!annihilation_report("anti", &u12).unwrap().passed());
        let r = verify_prop_last(&[u12]).unwrap();
        assert_eq!(r.count(super::super::report::Status::Skip), 1);
        assert!(r.passed());
    }

    #[test]
    fn cocycle_coboundary_and_anti() {
        let s = solve_kv(4).unwrap();
        assert!(verify_cocycle_equation(&s).unwrap().passed());
        // h(x) + h(y) - h(ch(x, y)) with h = tr_quad(X^4)
        let order = 5;
        let x = AssocSeries::generator(2, 0, order).unwrap();
        let y = AssocSeries::generator(2, 1, order).unwrap();
        let ch = crate::liecore::bch(order).unwrap().to_assoc();
        let cob = tr_quad(&x.pow(4).add(&y.pow(4)).unwrap().sub(&ch.pow(4)).unwrap());
        assert!(cocycle_report("coboundary", &cob).unwrap().passed());
        let xy = tr_quad(&AssocSeries::monomial(2, order, Word::from_letters([0, 1]), q(1)).unwrap());
        assert!(!cocycle_report("anti", &xy).unwrap().passed());
    }
}
