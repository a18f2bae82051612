//! Gauge shifts by elements of tr^2, each checked against both KV equations.

use kvquad::kvsolver::{gauge_family, kv1_residual, solve_kv};
use kvquad::rational::format_q;
use kvquad::verifier::{parse_gauge_spec, verify_theorem};

fn main() -> kvquad::Result<()> {
    let order = 6;
    let s = solve_kv(order)?;
    let pairs = parse_gauge_spec("x,y; [x,y],[x,y]; [x,[x,y]],[y,[x,y]]", order)?;
    for m in gauge_family(&s, &pairs)? {
        let (_, b) = m.linear_coefficients();
        let theorem = verify_theorem(&m)?;
        println!(
            "{:<28} b = {:>5}  residual zero: {}  theorem: {}",
            m.method,
            format_q(&b),
            kv1_residual(&m)?.is_zero(),
            theorem.passed()
        );
    }
    Ok(())
}
