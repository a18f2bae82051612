//! The canonical solution of the first KV equation.
//!
//! `cargo run --example solve_kv -- 6`

use kvquad::kvsolver::{flow_check, kv1_residual, kv_rhs, solve_kv};
use kvquad::rational::{format_q, q};

fn main() -> kvquad::Result<()> {
    let order: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    println!("x + y - ch(y, x) = {}", kv_rhs(order)?);

    let s = solve_kv(order)?;
    println!("A = {}", s.a);
    println!("B = {}", s.b);
    let (a, b) = s.linear_coefficients();
    println!("linear coefficients: a = {}, b = {}", format_q(&a), format_q(&b));

    let r = kv1_residual(&s)?;
    println!("residual through degree {}: {}", r.order(), if r.is_zero() { "0" } else { "nonzero" });

    let samples: Vec<_> = (1..=order as i64 + 1).map(q).collect();
    println!("u_t(ch_t) = d/dt ch_t at t = 1..{}: {}", order + 1, flow_check(&s, &samples)?);
    println!("{}", serde_json::to_string_pretty(&s).expect("serializable"));
    Ok(())
}
