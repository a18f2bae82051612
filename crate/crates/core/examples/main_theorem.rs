//! Both sides of the quadratic KV equation, degree by degree.

use kvquad::kvsolver::solve_kv;
use kvquad::verifier::{eq3_lhs, eq3_rhs, verify_theorem};

fn main() -> kvquad::Result<()> {
    let order = 8;
    let s = solve_kv(order)?;
    let lhs = eq3_lhs(&s)?;
    let rhs = eq3_rhs(order)?;
    for k in 2..=order {
        println!("degree {k}: {} classes, lhs {}", lhs.degree_part(k).len(), lhs.degree_part(k));
        assert!(lhs.degree_part(k).agrees_with(&rhs.degree_part(k)));
    }
    println!("{}", verify_theorem(&s)?);
    Ok(())
}
