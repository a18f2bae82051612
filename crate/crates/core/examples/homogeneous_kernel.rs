//! Exact kernel of g(x,y) + g(x+y,z) - g(x,y+z) - g(y,z) = 0.

use kvquad::verifier::homo_kernel;

fn main() -> kvquad::Result<()> {
    for n in 2..=8 {
        let k = homo_kernel(n)?;
        print!("n = {n}: {:>2} unknowns, kernel dimension {}", k.unknowns.len(), k.basis.len());
        if let Some(v) = k.basis.first() {
            print!(", spanned by {v}");
        }
        println!("  [{}]", if k.report.passed() { "coboundary" } else { "FAIL" });
    }
    Ok(())
}
