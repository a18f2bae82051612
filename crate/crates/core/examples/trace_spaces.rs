//! Cyclic words, tr and tr^quad.

use kvquad::liecore::parse_lie;
use kvquad::rational::q;
use kvquad::traces::{tr, tr_quad, trace_pairing, QuadCyclicClass};
use kvquad::{AssocSeries, Word};

fn main() -> kvquad::Result<()> {
    for w in ["xyy", "yxy", "xxyy", "xyxy", "xxyxyy"] {
        let word = Word::from_letters(w.bytes().map(|b| (b - b'x') as usize));
        let s = AssocSeries::monomial(2, 6, word.clone(), q(1))?;
        let quad = match QuadCyclicClass::canonical(&word) {
            Some((c, neg)) => format!("{}{}", if neg { "-" } else { "" }, c.representative().encode()),
            None => "0".into(),
        };
        println!("{w:>7}: tr -> {}, tr^quad -> {quad}", tr(&s));
    }

    let a = parse_lie("[x,y]", 2, 5)?;
    for k in 1..=5 {
        let p = tr_quad(&a.to_assoc().pow(k));
        println!("tr^quad([x,y]^{k}) = {p}");
    }

    let p = trace_pairing(&parse_lie("x", 2, 4)?, &parse_lie("[y,[x,y]]", 2, 4)?)?;
    println!("tr(x [y,[x,y]]) = {p}");
    Ok(())
}
