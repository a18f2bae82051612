use std::collections::HashMap;


use crate::error::{check_arity, Result};
use crate::liecore::LieElement;
use crate::wordcore::{AssocSeries, Word};

/// The algebra homomorphism `ad: Ass_n -> End(lie_n)` applied to `z`:
/// `ad(x_{i1} .. x_{ik}) z = [x_{i1}, [x_{i2}, .., [x_{ik}, z]..]]`.
pub fn ad_apply(a: &AssocSeries, z: &LieElement) -> Result<LieElement> {
    check_arity(a.arity(), z.arity())?;
    // Lie elements have no constant term, so unknown terms of `a` only
    // reach degrees above a.order() + 1.
    let order = z.order().min(a.order() + 1);
    let base = z.truncated(order).to_assoc();
    let mut memo: HashMap<Word, AssocSeries> = HashMap::new();
    memo.insert(Word::empty(), base.clone());
    let mut acc = AssocSeries::zero(a.arity(), order);
    for (w, c) in a.terms() {
        if !w.is_empty() && w.len() + 1 > order {
            break;
        }
        let image = suffix_image(w, &mut memo);
        acc = acc.linear_combination(&image, c)?;
    }
    if acc.is_zero() {
        return Ok(LieElement::zero(a.arity(), order));
    }
    LieElement::from_assoc_unchecked(&acc)
}

fn suffix_image(word: &Word, memo: &mut HashMap<Word, AssocSeries>) -> AssocSeries {
    if let Some(hit) = memo.get(word) {
        return hit.clone();
    }
    let tail = word.slice(1, word.len());
    let inner = suffix_image(&tail, memo);
    let image = inner.ad_letter(word.first().expect("nonempty"));
    memo.insert(word.clone(), image.clone());
    image
}
