//! Tangential derivations, div and the cocycle property.

use kvquad::liecore::parse_lie;
use kvquad::tangential::{act_on_trace, div, div_quad, SimplicialPattern, TangentialDerivation};

fn main() -> kvquad::Result<()> {
    let order = 5;
    let u = TangentialDerivation::new(vec![parse_lie("y + [x,y]", 2, order)?, parse_lie("[x,[x,y]]", 2, order)?])?;
    let v = TangentialDerivation::new(vec![parse_lie("[y,[x,y]]", 2, order)?, parse_lie("x", 2, order)?])?;

    println!("div(u)      = {}", div(&u));
    println!("div_quad(u) = {}", div_quad(&u));

    let lhs = div(&u.bracket(&v)?);
    let rhs = act_on_trace(&u, &div(&v))?.sub(&act_on_trace(&v, &div(&u))?)?;
    println!("div([u,v]) = u.div(v) - v.div(u): {}", lhs.agrees_with(&rhs));

    for p in SimplicialPattern::ALL {
        let lhs = div(&u.simplicial(p)?);
        let rhs = div(&u).substitute(&p.arguments(order)?)?;
        println!("div(u^{{{}}}) matches substitution: {}", p.label(), lhs.agrees_with(&rhs));
    }
    Ok(())
}
