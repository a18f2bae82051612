//! alpha(t), beta(t) read off a solution and compared with closed forms.

use kvquad::kvsolver::solve_kv;
use kvquad::liecore::{kernel_series, Kernel};
use kvquad::rational::format_q;
use kvquad::verifier::{series_data, verify_series_identities};

fn main() -> kvquad::Result<()> {
    let order = 8;
    let s = solve_kv(order)?;
    let data = series_data(&s);
    println!("b = {}", format_q(&data.b));
    println!("alpha(t)        = {}", data.alpha);
    println!("closed form     = {}", kernel_series(&Kernel::Alpha(data.b.clone()), order - 1));
    println!("beta_odd(t)     = {}", data.beta.odd_part());
    println!("closed form     = {}", kernel_series(&Kernel::BetaOdd(data.b.clone()), order - 1));
    println!("f(t)            = {}", kernel_series(&Kernel::F, order));
    println!("{}", verify_series_identities(&s)?);
    Ok(())
}
