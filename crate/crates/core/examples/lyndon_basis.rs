//! Lyndon words, their bracketings, and coordinates of Lie polynomials.

use kvquad::liecore::{lyndon_words, necklace_lyndon_count, parse_lie, LieElement};
use kvquad::wordcore::AssocSeries;

fn main() -> kvquad::Result<()> {
    for n in 1..=6 {
        let words: Vec<String> = lyndon_words(2, n)
            .into_iter()
            .filter(|l| l.len() == n)
            .map(|l| format!("{} = {}", l.word().encode(), l.bracketed()))
            .collect();
        println!("degree {n} ({} = Witt count {}):", words.len(), necklace_lyndon_count(2, n));
        for w in words {
            println!("  {w}");
        }
    }

    let p = parse_lie("[x,[x,y]] - 1/2*[[x,y],y]", 2, 4)?;
    let expanded: AssocSeries = p.to_assoc();
    println!("\n{} expands to {expanded}", p.pretty());
    let back = LieElement::from_assoc(&expanded)?;
    println!("recovered coordinates: {}", back.pretty());

    let sym = parse_lie("x", 2, 2)?.to_assoc().mul(&parse_lie("y", 2, 2)?.to_assoc())?;
    match LieElement::from_assoc(&sym) {
        Ok(_) => println!("xy is Lie?"),
        Err(e) => println!("xy rejected: {e}"),
    }
    Ok(())
}
