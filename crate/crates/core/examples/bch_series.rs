//! Campbell-Hausdorff series in two and three variables.
//!
//! `cargo run --example bch_series -- 5`

use kvquad::liecore::{bch, bch_multi, ch_t};
use kvquad::rational::q;

fn main() -> kvquad::Result<()> {
    let order: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);

    let ch = bch(order)?;
    println!("ch(x, y) = {ch}");
    for k in 1..=order {
        println!("  degree {k}: {} Lyndon terms", ch.degree_part(k).len());
    }

    let ch3 = bch_multi(3, order.min(4))?;
    println!("ch(x, y, z) has {} terms through degree {}", ch3.len(), ch3.order());

    // ch_t(x, y) = t^{-1} ch(tx, ty)
    let half = ch_t(&q(2), 3)?;
    println!("ch_2(x, y) = {half}");
    Ok(())
}
