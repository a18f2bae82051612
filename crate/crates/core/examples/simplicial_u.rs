//! U = u^{1,2} + u^{12,3} - u^{1,23} - u^{2,3} kills ch(x, y, z), hence
//! div_quad(U) = 0 and the inhomogeneous cocycle equation holds.

use kvquad::kvsolver::solve_kv;
use kvquad::tangential::SimplicialPattern;
use kvquad::verifier::{
    annihilation_report, prop_u_derivation, verify_cocycle_equation, verify_prop_last, verify_prop_u,
};

fn main() -> kvquad::Result<()> {
    let s = solve_kv(6)?;
    println!("{}", verify_prop_u(&s)?);
    let u = s.derivation()?;
    let big_u = prop_u_derivation(&u)?;
    println!("{}", verify_prop_last(&[big_u])?);
    println!("{}", verify_cocycle_equation(&s)?);

    // u^{1,2} alone does not annihilate ch
    let partial = u.simplicial(SimplicialPattern::OneTwo)?;
    println!("{}", annihilation_report("u12 only", &partial)?);
    Ok(())
}
