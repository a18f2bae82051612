use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_arity, Error, Result};
use crate::json::SeriesWire;
use crate::rational::{factorial, q, Q};
use crate::wordcore::Word;

/// Truncated series in the free associative algebra on `arity` generators.
///
/// Only nonzero coefficients of words of length at most `order` are stored.
/// Binary operations truncate to the smaller of the two orders.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "SeriesWire", into = "SeriesWire")]
pub struct AssocSeries {
    arity: usize,
    order: usize,
    terms: BTreeMap<Word, Q>,
}

/// `alpha = constant + sum_i partials[i] * x_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub constant: Q,
    pub partials: Vec<AssocSeries>,
    /// Truncation order of the decomposed series.
    pub order: usize,
}

impl Decomposition {
    pub fn reconstruct(&self) -> AssocSeries {
        let arity = self.partials.len();
        let mut out = AssocSeries::constant(arity, self.order, self.constant.clone());
        for (i, partial) in self.partials.iter().enumerate() {
            for (w, c) in partial.terms() {
                out.add_term(w.with_suffix_letter(i), c.clone());
            }
        }
        out
    }
}

impl AssocSeries {
    pub fn zero(arity: usize, order: usize) -> Self {
        AssocSeries {
            arity,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize, order: usize) -> Self {
        Self::constant(arity, order, Q::one())
    }

    pub fn constant(arity: usize, order: usize, value: Q) -> Self {
        let mut out = Self::zero(arity, order);
        out.add_term(Word::empty(), value);
        out
    }

    /// The generator `x_index`; empty when `order == 0`.
    pub fn generator(arity: usize, index: usize, order: usize) -> Result<Self> {
        if index >= arity {
            return Err(Error::LetterOutOfRange {
                letter: index,
                arity,
            });
        }
        let mut out = Self::zero(arity, order);
        out.add_term(Word::letter(index), Q::one());
        Ok(out)
    }

    pub fn monomial(arity: usize, order: usize, word: Word, coeff: Q) -> Result<Self> {
        word.check_arity(arity)?;
        if word.len() > order {
            return Err(Error::WordTooLong {
                len: word.len(),
                order,
            });
        }
        let mut out = Self::zero(arity, order);
        out.add_term(word, coeff);
        Ok(out)
    }

    /// Builds a series from arbitrary terms: repeated words are summed and
    /// words longer than `order` are dropped.
    pub fn from_terms<I>(arity: usize, order: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, Q)>,
    {
        let mut out = Self::zero(arity, order);
        for (w, c) in terms {
            w.check_arity(arity)?;
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub(crate) fn from_map(arity: usize, order: usize, map: HashMap<Word, Q>) -> Self {
        let terms = map
            .into_iter()
            .filter(|(w, c)| !c.is_zero() && w.len() <= order)
            .collect();
        AssocSeries {
            arity,
            order,
            terms,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, word: &Word) -> Q {
        self.terms.get(word).cloned().unwrap_or_else(Q::zero)
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(&Word::empty())
    }

    /// Lowest degree carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.terms.keys().next().map(Word::len)
    }

    /// Adds `coeff * word`, ignoring words beyond the truncation order.
    pub(crate) fn add_term(&mut self, word: Word, coeff: Q) {
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

    /// Overwrites a single coefficient (zero removes the term).
    pub fn set_coeff(&mut self, word: Word, coeff: Q) -> Result<()> {
        word.check_arity(self.arity)?;
        if word.len() > self.order {
            return Err(Error::WordTooLong {
                len: word.len(),
                order: self.order,
            });
        }
        if coeff.is_zero() {
            self.terms.remove(&word);
        } else {
            self.terms.insert(word, coeff);
        }
        Ok(())
    }

    pub fn degree_part(&self, degree: usize) -> AssocSeries {
        let terms = self
            .terms
            .iter()
            .filter(|(w, _)| w.len() == degree)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        AssocSeries {
            arity: self.arity,
            order: self.order,
            terms,
        }
    }

    pub fn truncated(&self, order: usize) -> AssocSeries {
        let order = order.min(self.order);
        self.with_order(order)
    }

    /// Reinterprets the stored terms at a new truncation order. Raising the
    /// order treats the series as the polynomial it stores.
    pub fn with_order(&self, order: usize) -> AssocSeries {
        let terms = self
            .terms
            .iter()
            .take_while(|(w, _)| w.len() <= order)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        AssocSeries {
            arity: self.arity,
            order,
            terms,
        }
    }

    /// Embeds into a larger alphabet.
    pub fn with_arity(&self, arity: usize) -> Result<AssocSeries> {
        if arity < self.arity {
            for w in self.terms.keys() {
                w.check_arity(arity)?;
            }
        }
        Ok(AssocSeries {
            arity,
            order: self.order,
            terms: self.terms.clone(),
        })
    }

    pub fn add(&self, other: &AssocSeries) -> Result<AssocSeries> {
        self.linear_combination(other, &Q::one())
    }

    pub fn sub(&self, other: &AssocSeries) -> Result<AssocSeries> {
        self.linear_combination(other, &-Q::one())
    }

    /// `self + factor * other`.
    pub fn linear_combination(&self, other: &AssocSeries, factor: &Q) -> Result<AssocSeries> {
        check_arity(self.arity, other.arity)?;
        let order = self.order.min(other.order);
        let mut out = self.truncated(order);
        for (w, c) in other.terms.iter().take_while(|(w, _)| w.len() <= order) {
            out.add_term(w.clone(), c * factor);
        }
        Ok(out)
    }

    pub fn neg(&self) -> AssocSeries {
        self.scaled(&-Q::one())
    }

    pub fn scaled(&self, factor: &Q) -> AssocSeries {
        if factor.is_zero() {
            return Self::zero(self.arity, self.order);
        }
        AssocSeries {
            arity: self.arity,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * factor))
                .collect(),
        }
    }

    /// Multiplies the degree-`k` part by `t^k`.
    pub fn graded_scaled(&self, t: &Q) -> AssocSeries {
        let mut power = Q::one();
        let mut degree = 0;
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            while degree < w.len() {
                power *= t;
                degree += 1;
            }
            let v = c * &power;
            if !v.is_zero() {
                terms.insert(w.clone(), v);
            }
        }
        AssocSeries {
            arity: self.arity,
            order: self.order,
            terms,
        }
    }

    pub fn mul(&self, other: &AssocSeries) -> Result<AssocSeries> {
        check_arity(self.arity, other.arity)?;
        let order = self.order.min(other.order);
        let mut acc: HashMap<Word, Q> = HashMap::new();
        for (u, cu) in &self.terms {
            if u.len() > order {
                break;
            }
            let room = order - u.len();
            for (v, cv) in &other.terms {
                if v.len() > room {
                    break;
                }
                *acc.entry(u.concat(v)).or_insert_with(Q::zero) += cu * cv;
            }
        }
        Ok(Self::from_map(self.arity, order, acc))
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &AssocSeries) -> Result<AssocSeries> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn pow(&self, exponent: usize) -> AssocSeries {
        let mut acc = Self::one(self.arity, self.order);
        for _ in 0..exponent {
            acc = acc.mul(self).expect("same arity");
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// `x_i * self`, known one degree further than `self`.
    pub fn mul_letter_left(&self, letter: usize) -> AssocSeries {
        AssocSeries {
            arity: self.arity,
            order: self.order + 1,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.with_prefix_letter(letter), c.clone()))
                .collect(),
        }
    }

    /// `self * x_i`, known one degree further than `self`.
    pub fn mul_letter_right(&self, letter: usize) -> AssocSeries {
        AssocSeries {
            arity: self.arity,
            order: self.order + 1,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.with_suffix_letter(letter), c.clone()))
                .collect(),
        }
    }

    /// `[x_i, self]` truncated at the current order.
    pub(crate) fn ad_letter(&self, letter: usize) -> AssocSeries {
        let mut out = Self::zero(self.arity, self.order);
        for (w, c) in self.terms.iter().take_while(|(w, _)| w.len() < self.order) {
            out.add_term(w.with_prefix_letter(letter), c.clone());
            out.add_term(w.with_suffix_letter(letter), -c.clone());
        }
        out
    }

    /// Sum of `a^k / k!` up to the truncation order.
    pub fn exp(&self) -> Result<AssocSeries> {
        if !self.constant_term().is_zero() {
            return Err(Error::Domain(
                "exp requires a series with zero constant term".into(),
            ));
        }
        let mut out = Self::one(self.arity, self.order);
        let mut power = Self::one(self.arity, self.order);
        for k in 1..=self.order {
            power = power.mul(self)?;
            if power.is_zero() {
                break;
            }
            out = out.linear_combination(&power, &factorial(k).recip())?;
        }
        Ok(out)
    }

    /// `log(1 + u) = sum (-1)^(k+1) u^k / k` up to the truncation order.
    pub fn log(&self) -> Result<AssocSeries> {
        if !self.constant_term().is_one() {
            return Err(Error::Domain(
                "log requires a series with constant term 1".into(),
            ));
        }
        let mut u = self.clone();
        u.terms.remove(&Word::empty());
        let mut out = Self::zero(self.arity, self.order);
        let mut power = Self::one(self.arity, self.order);
        for k in 1..=self.order {
            power = power.mul(&u)?;
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.linear_combination(&power, &(q(sign) / q(k as i64)))?;
        }
        Ok(out)
    }

    /// The anti-involution `w -> (-1)^|w| reverse(w)`.
    pub fn tau(&self) -> AssocSeries {
        AssocSeries {
            arity: self.arity,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| {
                    let c = if w.len() % 2 == 1 { -c.clone() } else { c.clone() };
                    (w.reversed(), c)
                })
                .collect(),
        }
    }

    /// Splits off the last letter of every word.
    pub fn decompose(&self) -> Decomposition {
        let inner = self.order.saturating_sub(1);
        let mut partials = vec![Self::zero(self.arity, inner); self.arity];
        for (w, c) in &self.terms {
            if let Some(last) = w.last() {
                partials[last].add_term(w.slice(0, w.len() - 1), c.clone());
            }
        }
        Decomposition {
            constant: self.constant_term(),
            partials,
            order: self.order,
        }
    }

    /// Splits off the first letter: `alpha = constant + sum_i x_i * parts[i]`.
    pub(crate) fn decompose_left(&self) -> (Q, Vec<AssocSeries>) {
        let inner = self.order.saturating_sub(1);
        let mut parts = vec![Self::zero(self.arity, inner); self.arity];
        for (w, c) in &self.terms {
            if let Some(first) = w.first() {
                parts[first].add_term(w.slice(1, w.len()), c.clone());
            }
        }
        (self.constant_term(), parts)
    }

    /// Derivative of `s -> alpha(x_1, .., x_i + s z, .., x_n)` at `s = 0`:
    /// every occurrence of `x_i` is replaced in turn by `z`.
    ///
    /// `z` may live in a larger alphabet; the result has `z`'s arity.
    pub fn directional_derivative(&self, letter: usize, z: &AssocSeries) -> Result<AssocSeries> {
        if z.arity < self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: z.arity,
            });
        }
        if letter >= self.arity {
            return Err(Error::LetterOutOfRange {
                letter,
                arity: self.arity,
            });
        }
        let order = self.order.min(z.order);
        let mut acc: HashMap<Word, Q> = HashMap::new();
        for (w, c) in &self.terms {
            if w.is_empty() {
                continue;
            }
            let letters = w.letters();
            let base = w.len() - 1;
            if base > order {
                break;
            }
            for (pos, &l) in letters.iter().enumerate() {
                if l as usize != letter {
                    continue;
                }
                for (zw, zc) in z.terms.iter().take_while(|(zw, _)| base + zw.len() <= order) {
                    let mut word = Word::from_slice(&letters[..pos]);
                    for &m in zw.letters() {
                        word.push(m as usize);
                    }
                    for &m in &letters[pos + 1..] {
                        word.push(m as usize);
                    }
                    *acc.entry(word).or_insert_with(Q::zero) += c * zc;
                }
            }
        }
        Ok(Self::from_map(z.arity, order, acc))
    }

    /// Applies the algebra homomorphism sending `x_i` to `images[i]`.
    /// Images must have zero constant term so degrees only grow.
    pub fn substitute_letters(&self, images: &[AssocSeries]) -> Result<AssocSeries> {
        check_arity(images.len(), self.arity)?;
        let Some(first) = images.first() else {
            return Ok(self.clone());
        };
        let arity = first.arity;
        let mut order = self.order;
        for img in images {
            check_arity(img.arity, arity)?;
            if !img.constant_term().is_zero() {
                return Err(Error::Domain(
                    "substitution images must have zero constant term".into(),
                ));
            }
            order = order.min(img.order);
        }
        let images: Vec<AssocSeries> = images.iter().map(|i| i.truncated(order)).collect();
        // Memoised prefix products keyed by word.
        let mut memo: HashMap<Word, AssocSeries> = HashMap::new();
        memo.insert(Word::empty(), Self::one(arity, order));
        let mut out = Self::zero(arity, order);
        for (w, c) in self.terms.iter().take_while(|(w, _)| w.len() <= order) {
            let image = prefix_image(w, &images, &mut memo)?;
            out = out.linear_combination(&image, c)?;
        }
        Ok(out)
    }

    /// Equality over the common truncation order.
    pub fn agrees_with(&self, other: &AssocSeries) -> bool {
        if self.arity != other.arity {
            return false;
        }
        let order = self.order.min(other.order);
        let lhs = self.terms.iter().take_while(|(w, _)| w.len() <= order);
        let rhs = other.terms.iter().take_while(|(w, _)| w.len() <= order);
        lhs.eq(rhs)
    }

    /// Lowest word (in graded order) where the two series differ, with
    /// `self - other` there.
    pub fn first_difference(&self, other: &AssocSeries) -> Option<(Word, Q)> {
        let diff = self.sub(other).ok()?;
        diff.terms.into_iter().next()
    }
}

fn prefix_image(
    word: &Word,
    images: &[AssocSeries],
    memo: &mut HashMap<Word, AssocSeries>,
) -> Result<AssocSeries> {
    if let Some(hit) = memo.get(word) {
        return Ok(hit.clone());
    }
    let head = word.slice(0, word.len() - 1);
    let last = word.last().expect("nonempty");
    let prefix = prefix_image(&head, images, memo)?;
    let image = prefix.mul(&images[last])?;
    memo.insert(word.clone(), image.clone());
    Ok(image)
}

impl PartialEq for AssocSeries {
    fn eq(&self, other: &Self) -> bool {
        self.agrees_with(other)
    }
}

impl fmt::Display for AssocSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter())?;
        write!(f, " + O({})", self.order + 1)
    }
}

impl fmt::Debug for AssocSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AssocSeries[arity {}] {}", self.arity, self)
    }
}

pub(crate) fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (&'a Word, &'a Q)>,
{
    let mut empty = true;
    for (w, c) in terms {
        if empty {
            write!(f, "{c}*{w}")?;
        } else {
            write!(f, " + {c}*{w}")?;
        }
        empty = false;
    }
    if empty {
        f.write_str("0")?;
    }
    Ok(())
}

impl From<AssocSeries> for SeriesWire {
    fn from(s: AssocSeries) -> Self {
        SeriesWire::from_terms(s.arity, s.order, s.terms.iter())
    }
}

impl TryFrom<SeriesWire> for AssocSeries {
    type Error = Error;

    fn try_from(wire: SeriesWire) -> Result<Self> {
        let terms = wire.decode_terms()?;
        let mut out = AssocSeries::zero(wire.arity, wire.order);
        for (w, c) in terms {
            out.set_coeff(w, c)?;
        }
        Ok(out)
    }
}
