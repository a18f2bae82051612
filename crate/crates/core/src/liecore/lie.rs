use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_arity, Error, Result};
use crate::json::LieWire;
use crate::liecore::lyndon::{is_lyndon, LyndonWord};
use crate::rational::{q, Q};
use crate::wordcore::{AssocSeries, Word};

/// Truncated Lie series in the Lyndon basis.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "LieWire", into = "LieWire")]
pub struct LieElement {
    arity: usize,
    order: usize,
    terms: BTreeMap<LyndonWord, Q>,
}

impl LieElement {
    pub fn zero(arity: usize, order: usize) -> Self {
        LieElement {
            arity,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn generator(arity: usize, index: usize, order: usize) -> Result<Self> {
        if index >= arity {
            return Err(Error::LetterOutOfRange {
                letter: index,
                arity,
            });
        }
        let mut out = Self::zero(arity, order);
        out.add_term(LyndonWord::letter(index), Q::one());
        Ok(out)
    }

    /// The generators `x_0, .., x_{arity-1}`.
    pub fn generators(arity: usize, order: usize) -> Vec<LieElement> {
        (0..arity)
            .map(|i| Self::generator(arity, i, order).expect("index in range"))
            .collect()
    }

    /// Builds from Lyndon coordinates; every word must be Lyndon.
    pub fn from_terms<I>(arity: usize, order: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, Q)>,
    {
        let mut out = Self::zero(arity, order);
        for (w, c) in terms {
            w.check_arity(arity)?;
            out.add_term(LyndonWord::new(w)?, c);
        }
        Ok(out)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LyndonWord, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, word: &Word) -> Q {
        if !is_lyndon(word) {
            return Q::zero();
        }
        let key = LyndonWord::new(word.clone()).expect("checked");
        self.terms.get(&key).cloned().unwrap_or_else(Q::zero)
    }

    pub(crate) fn add_term(&mut self, word: LyndonWord, coeff: Q) {
        if word.len() > self.order || coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Overwrites the coefficient of a Lyndon word.
    pub fn set_coeff(&mut self, word: &Word, coeff: Q) -> Result<()> {
        word.check_arity(self.arity)?;
        if word.len() > self.order {
            return Err(Error::WordTooLong {
                len: word.len(),
                order: self.order,
            });
        }
        let key = LyndonWord::new(word.clone())?;
        if coeff.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, coeff);
        }
        Ok(())
    }

    pub fn degree_part(&self, degree: usize) -> LieElement {
        LieElement {
            arity: self.arity,
            order: self.order,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == degree)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn truncated(&self, order: usize) -> LieElement {
        self.with_order(order.min(self.order))
    }

    /// Reinterprets the stored terms at a new order; raising it treats the
    /// element as the Lie polynomial it stores.
    pub fn with_order(&self, order: usize) -> LieElement {
        LieElement {
            arity: self.arity,
            order,
            terms: self
                .terms
                .iter()
                .take_while(|(w, _)| w.len() <= order)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn with_arity(&self, arity: usize) -> Result<LieElement> {
        if arity < self.arity {
            for w in self.terms.keys() {
                w.word().check_arity(arity)?;
            }
        }
        Ok(LieElement {
            arity,
            order: self.order,
            terms: self.terms.clone(),
        })
    }

    pub fn add(&self, other: &LieElement) -> Result<LieElement> {
        self.linear_combination(other, &Q::one())
    }

    pub fn sub(&self, other: &LieElement) -> Result<LieElement> {
        self.linear_combination(other, &-Q::one())
    }

    /// `self + factor * other`.
    pub fn linear_combination(&self, other: &LieElement, factor: &Q) -> Result<LieElement> {
        check_arity(self.arity, other.arity)?;
        let order = self.order.min(other.order);
        let mut out = self.truncated(order);
        for (w, c) in other.terms.iter().take_while(|(w, _)| w.len() <= order) {
            out.add_term(w.clone(), c * factor);
        }
        Ok(out)
    }

    pub fn neg(&self) -> LieElement {
        self.scaled(&-Q::one())
    }

    pub fn scaled(&self, factor: &Q) -> LieElement {
        let mut out = Self::zero(self.arity, self.order);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * factor);
        }
        out
    }

    /// Multiplies the degree-`k` part by `t^k`, i.e. `a(t x_1, .., t x_n)`.
    pub fn scale(&self, t: &Q) -> LieElement {
        let mut out = Self::zero(self.arity, self.order);
        for (w, c) in &self.terms {
            let mut f = c.clone();
            for _ in 0..w.len() {
                f *= t;
            }
            out.add_term(w.clone(), f);
        }
        out
    }

    /// Embedding into the free associative algebra.
    pub fn to_assoc(&self) -> AssocSeries {
        let mut out = AssocSeries::zero(self.arity, self.order);
        for (l, c) in &self.terms {
            for (w, k) in l.expansion().iter() {
                out.add_term(w.clone(), c * q(*k));
            }
        }
        out
    }

    /// Inverse of [`LieElement::to_assoc`] on Lie series. Every homogeneous
    /// component is first checked against the Dynkin criterion.
    pub fn from_assoc(series: &AssocSeries) -> Result<LieElement> {
        check_dynkin(series)?;
        Self::from_assoc_unchecked(series)
    }

    /// Coordinates by triangular elimination: the lexicographically least
    /// word of a homogeneous Lie polynomial is Lyndon, and the bracketing of
    /// a Lyndon word `w` is `w` plus lexicographically larger words.
    pub(crate) fn from_assoc_unchecked(series: &AssocSeries) -> Result<LieElement> {
        let mut residual: BTreeMap<Word, Q> =
            series.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut out = Self::zero(series.arity(), series.order());
        while let Some((w, c)) = residual.pop_first() {
            if !is_lyndon(&w) {
                return Err(Error::NotLie { degree: w.len() });
            }
            let l = LyndonWord::new(w).expect("checked");
            for (u, k) in l.expansion().iter().filter(|(u, _)| u != l.word()) {
                let delta = &c * q(*k);
                match residual.entry(u.clone()) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
            out.add_term(l, c);
        }
        Ok(out)
    }

    pub fn bracket(&self, other: &LieElement) -> Result<LieElement> {
        let comm = self.to_assoc().commutator(&other.to_assoc())?;
        Self::from_assoc_unchecked(&comm)
    }

    /// `[x_letter, self]`.
    pub fn ad_generator(&self, letter: usize) -> Result<LieElement> {
        if letter >= self.arity {
            return Err(Error::LetterOutOfRange {
                letter,
                arity: self.arity,
            });
        }
        Self::from_assoc_unchecked(&self.to_assoc().ad_letter(letter))
    }

    /// Derivative of `a(.., x_i + s z, ..)` at `s = 0`; `z` may live in a
    /// larger alphabet.
    pub fn directional_derivative(&self, letter: usize, z: &LieElement) -> Result<LieElement> {
        let d = self.to_assoc().directional_derivative(letter, &z.to_assoc())?;
        Self::from_assoc_unchecked(&d)
    }

    /// The Lie homomorphism sending generator `i` to `args[i]`.
    pub fn substitute(&self, args: &[LieElement]) -> Result<LieElement> {
        check_arity(args.len(), self.arity)?;
        let Some(first) = args.first() else {
            return Ok(self.clone());
        };
        let arity = first.arity;
        let mut order = self.order;
        for a in args {
            check_arity(a.arity, arity)?;
            order = order.min(a.order);
        }
        let images: Vec<AssocSeries> = args.iter().map(|a| a.truncated(order).to_assoc()).collect();
        let mut memo: std::collections::HashMap<Word, AssocSeries> = Default::default();
        let mut out = AssocSeries::zero(arity, order);
        for (l, c) in self.terms.iter().take_while(|(l, _)| l.len() <= order) {
            let image = bracket_image(l, &images, &mut memo)?;
            out = out.linear_combination(&image, c)?;
        }
        Self::from_assoc_unchecked(&out)
    }

    pub fn agrees_with(&self, other: &LieElement) -> bool {
        if self.arity != other.arity {
            return false;
        }
        let order = self.order.min(other.order);
        let lhs = self.terms.iter().take_while(|(w, _)| w.len() <= order);
        let rhs = other.terms.iter().take_while(|(w, _)| w.len() <= order);
        lhs.eq(rhs)
    }

    /// First Lyndon word where `self - other` is nonzero, with the difference.
    pub fn first_difference(&self, other: &LieElement) -> Option<(Word, Q)> {
        let diff = self.sub(other).ok()?;
        diff.terms
            .into_iter()
            .next()
            .map(|(w, c)| (w.word().clone(), c))
    }

    /// Lowest-degree nonzero term.
    pub fn leading_term(&self) -> Option<(&LyndonWord, &Q)> {
        self.terms.iter().next()
    }

    /// Human-readable form with bracketed Lyndon monomials over `x, y, z`.
    pub fn pretty(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(l, c)| format!("{c}*{}", crate::liecore::parse::bracket_with_xyz(l)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

fn bracket_image(
    l: &LyndonWord,
    images: &[AssocSeries],
    memo: &mut std::collections::HashMap<Word, AssocSeries>,
) -> Result<AssocSeries> {
    if let Some(hit) = memo.get(l.word()) {
        return Ok(hit.clone());
    }
    let image = match l.factors() {
        None => images[l.word().first().expect("letter")].clone(),
        Some((u, v)) => {
            let iu = bracket_image(&u, images, memo)?;
            let iv = bracket_image(&v, images, memo)?;
            iu.commutator(&iv)?
        }
    };
    memo.insert(l.word().clone(), image.clone());
    Ok(image)
}

/// Left-normed bracketing `x_{i1} .. x_{ik} -> [..[x_{i1}, x_{i2}], .., x_{ik}]`,
/// extended linearly. On a homogeneous Lie polynomial of degree `k` it acts
/// as multiplication by `k`.
pub fn dynkin_left_normed(series: &AssocSeries) -> AssocSeries {
    let d = series.decompose();
    let order = series.order();
    let mut out = AssocSeries::zero(series.arity(), order);
    for (i, part) in d.partials.iter().enumerate() {
        out.add_term(Word::letter(i), part.constant_term());
        let mut rest = part.clone();
        let _ = rest.set_coeff(Word::empty(), Q::zero());
        if rest.is_zero() {
            continue;
        }
        let inner = dynkin_left_normed(&rest);
        for (w, c) in inner.terms() {
            out.add_term(w.with_suffix_letter(i), c.clone());
            out.add_term(w.with_prefix_letter(i), -c.clone());
        }
    }
    out
}

/// Right-normed bracketing `x_{i1} .. x_{ik} -> [x_{i1}, [x_{i2}, .., x_{ik}]..]`.
/// Also multiplication by `k` on homogeneous Lie polynomials of degree `k`.
pub fn dynkin_right_normed(series: &AssocSeries) -> AssocSeries {
    let (_, parts) = series.decompose_left();
    let order = series.order();
    let mut out = AssocSeries::zero(series.arity(), order);
    for (i, part) in parts.iter().enumerate() {
        out.add_term(Word::letter(i), part.constant_term());
        let mut rest = part.clone();
        let _ = rest.set_coeff(Word::empty(), Q::zero());
        if rest.is_zero() {
            continue;
        }
        let inner = dynkin_right_normed(&rest);
        for (w, c) in inner.terms() {
            out.add_term(w.with_prefix_letter(i), c.clone());
            out.add_term(w.with_suffix_letter(i), -c.clone());
        }
    }
    out
}

/// Dynkin-Specht-Wever criterion, degree by degree.
pub fn check_dynkin(series: &AssocSeries) -> Result<()> {
    if !series.constant_term().is_zero() {
        return Err(Error::NotLie { degree: 0 });
    }
    let delta = dynkin_left_normed(series);
    let expected = {
        let mut e = AssocSeries::zero(series.arity(), series.order());
        for (w, c) in series.terms() {
            e.add_term(w.clone(), c * q(w.len() as i64));
        }
        e
    };
    match delta.first_difference(&expected) {
        None => Ok(()),
        Some((w, _)) => Err(Error::NotLie { degree: w.len() }),
    }
}

impl PartialEq for LieElement {
    fn eq(&self, other: &Self) -> bool {
        self.agrees_with(other)
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O({})", self.pretty(), self.order + 1)
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieElement[arity {}] {}", self.arity, self)
    }
}

impl From<LieElement> for LieWire {
    fn from(a: LieElement) -> Self {
        LieWire::from_terms(a.arity, a.order, a.terms.iter().map(|(l, c)| (l.word(), c)))
    }
}

impl TryFrom<LieWire> for LieElement {
    type Error = Error;

    fn try_from(wire: LieWire) -> Result<Self> {
        if wire.basis != "lyndon" {
            return Err(Error::Parse(format!("unsupported basis {:?}", wire.basis)));
        }
        let mut out = LieElement::zero(wire.arity, wire.order);
        for (w, c) in wire.decode_terms()? {
            out.set_coeff(&w, c)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_frac;

    fn w(s: &str) -> Word {
        Word::decode(s).unwrap()
    }

    fn x(order: usize) -> LieElement {
        LieElement::generator(2, 0, order).unwrap()
    }

    fn y(order: usize) -> LieElement {
        LieElement::generator(2, 1, order).unwrap()
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(x(3).to_assoc(), AssocSeries::generator(2, 0, 3).unwrap());
        let xy = LieElement::from_terms(2, 3, [(w("ab"), q(1))]).unwrap();
        let expected = AssocSeries::from_terms(2, 3, [(w("ab"), q(1)), (w("ba"), q(-1))]).unwrap();
        assert_eq!(xy.to_assoc(), expected);
        // [x,[x,y]] by hand: xxy - 2xyx + yxx
        let xxy = LieElement::from_terms(2, 3, [(w("aab"), q(1))]).unwrap();
        let expected = AssocSeries::from_terms(
            2,
            3,
            [(w("aab"), q(1)), (w("aba"), q(-2)), (w("baa"), q(1))],
        )
        .unwrap();
        assert_eq!(xxy.to_assoc(), expected);
    }

    #[test]
    fn inverse_embedding_examples() {
        let comm = AssocSeries::from_terms(2, 3, [(w("ab"), q(1)), (w("ba"), q(-1))]).unwrap();
        let lie = LieElement::from_assoc(&comm).unwrap();
        assert_eq!(lie.len(), 1);
        assert_eq!(lie.coeff(&w("ab")), q(1));

        let sym = AssocSeries::from_terms(2, 3, [(w("ab"), q(1)), (w("ba"), q(1))]).unwrap();
        assert_eq!(LieElement::from_assoc(&sym).unwrap_err(), Error::NotLie { degree: 2 });
        assert_eq!(
            LieElement::from_assoc(&AssocSeries::one(2, 3)).unwrap_err(),
            Error::NotLie { degree: 0 }
        );
        // the unchecked path also rejects it
        assert!(LieElement::from_assoc_unchecked(&sym).is_err());
    }

    #[test]
    fn bracket_antisymmetry() {
        let a = x(4).add(&LieElement::from_terms(2, 4, [(w("ab"), q(2))]).unwrap()).unwrap();
        let b = y(4);
        let ab = a.bracket(&b).unwrap();
        let ba = b.bracket(&a).unwrap();
        assert_eq!(ab, ba.neg());
        assert_eq!(ab.coeff(&w("ab")), q(1));
        // 2[[x,y],y] is the bracketing of the Lyndon word abb
        assert_eq!(ab.coeff(&w("abb")), q(2));
    }

    #[test]
    fn substitute_examples() {
        let z3 = LieElement::generator(3, 2, 4).unwrap();
        let x1 = LieElement::generator(1, 0, 4).unwrap();
        assert_eq!(x1.substitute(std::slice::from_ref(&z3)).unwrap(), z3);

        let xy = LieElement::from_terms(2, 4, [(w("ab"), q(1))]).unwrap();
        let gens = LieElement::generators(2, 4);
        assert_eq!(xy.substitute(&gens).unwrap(), xy);
        assert!(xy.substitute(&gens[..1]).is_err());
    }

    #[test]
    fn scale_examples() {
        let a = LieElement::from_terms(2, 4, [(w("a"), q(1)), (w("ab"), q(3))]).unwrap();
        assert_eq!(a.scale(&q(1)), a);
        let s = a.scale(&q_frac(1, 2));
        assert_eq!(s.coeff(&w("a")), q_frac(1, 2));
        assert_eq!(s.coeff(&w("ab")), q_frac(3, 4));
    }

    #[test]
    fn non_lyndon_coefficients_rejected() {
        assert!(LieElement::from_terms(2, 3, [(w("ba"), q(1))]).is_err());
        assert!(LieElement::from_terms(2, 3, [(w("ac"), q(1))]).is_err());
    }
}
