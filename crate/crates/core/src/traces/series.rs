use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_arity, Error, Result};
use crate::json::TraceWire;
use crate::liecore::LieElement;
use crate::rational::Q;
use crate::traces::{CyclicWord, QuadCyclicClass};
use crate::wordcore::{AssocSeries, Word};

/// A quotient of `Ass_n` spanned by equivalence classes of words.
pub trait TraceSpace: Clone + fmt::Debug + 'static {
    type Class: Clone + Ord + Eq + Hash + fmt::Debug;
    /// Value of the `"space"` field in JSON.
    const NAME: &'static str;

    /// Class of a word and whether its image is the negated class; `None`
    /// when the word projects to zero.
    fn project(word: &Word) -> Option<(Self::Class, bool)>;

    fn representative(class: &Self::Class) -> &Word;
}

/// Plain cyclic words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Plain;

/// Cyclic words modulo signed reversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Quad;

impl TraceSpace for Plain {
    type Class = CyclicWord;
    const NAME: &'static str = "tr";

    fn project(word: &Word) -> Option<(CyclicWord, bool)> {
        Some((CyclicWord::canonical(word), false))
    }

    fn representative(class: &CyclicWord) -> &Word {
        class.representative()
    }
}

impl TraceSpace for Quad {
    type Class = QuadCyclicClass;
    const NAME: &'static str = "trquad";

    fn project(word: &Word) -> Option<(QuadCyclicClass, bool)> {
        QuadCyclicClass::canonical(word)
    }

    fn representative(class: &QuadCyclicClass) -> &Word {
        class.representative()
    }
}

/// Truncated series of trace classes.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "TraceWire", into = "TraceWire")]
#[serde(bound = "")]
pub struct TraceSeriesIn<S: TraceSpace> {
    arity: usize,
    order: usize,
    terms: BTreeMap<S::Class, Q>,
    space: PhantomData<S>,
}

/// Series in `tr_n`.
pub type TraceSeries = TraceSeriesIn<Plain>;
/// Series in `tr_n^quad`.
pub type QuadTraceSeries = TraceSeriesIn<Quad>;

impl<S: TraceSpace> TraceSeriesIn<S> {
    pub fn zero(arity: usize, order: usize) -> Self {
        TraceSeriesIn {
            arity,
            order,
            terms: BTreeMap::new(),
            space: PhantomData,
        }
    }

    /// Projection of an associative series.
    pub fn from_assoc(series: &AssocSeries) -> Self {
        let mut out = Self::zero(series.arity(), series.order());
        for (w, c) in series.terms() {
            out.add_word(w, c.clone());
        }
        out
    }

    /// Builds from `(word, coeff)` pairs; any word may stand for its class.
    pub fn from_words<I: IntoIterator<Item = (Word, Q)>>(
        arity: usize,
        order: usize,
        terms: I,
    ) -> Result<Self> {
        let mut out = Self::zero(arity, order);
        for (w, c) in terms {
            w.check_arity(arity)?;
            out.add_word(&w, c);
        }
        Ok(out)
    }

    /// Adds the projection of `coeff * word`.
    pub fn add_word(&mut self, word: &Word, coeff: Q) {
        if word.len() > self.order || coeff.is_zero() {
            return;
        }
        if let Some((class, negate)) = S::project(word) {
            let coeff = if negate { -coeff } else { coeff };
            self.add_class(class, coeff);
        }
    }

    fn add_class(&mut self, class: S::Class, coeff: Q) {
        match self.terms.entry(class) {
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

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&S::Class, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, class: &S::Class) -> Q {
        self.terms.get(class).cloned().unwrap_or_else(Q::zero)
    }

    /// Coefficient of the class of `word`, signed so that the term reads
    /// `coeff * [word]`.
    pub fn coeff_of_word(&self, word: &Word) -> Q {
        match S::project(word) {
            None => Q::zero(),
            Some((class, negate)) => {
                let c = self.coeff(&class);
                if negate {
                    -c
                } else {
                    c
                }
            }
        }
    }

    pub fn degree_part(&self, degree: usize) -> Self {
        let mut out = Self::zero(self.arity, self.order);
        for (c, v) in &self.terms {
            if S::representative(c).len() == degree {
                out.add_class(c.clone(), v.clone());
            }
        }
        out
    }

    pub fn truncated(&self, order: usize) -> Self {
        let order = order.min(self.order);
        let mut out = Self::zero(self.arity, order);
        for (c, v) in &self.terms {
            if S::representative(c).len() <= order {
                out.add_class(c.clone(), v.clone());
            }
        }
        out
    }

    /// Raises or lowers the order, keeping the stored terms.
    pub fn with_order(&self, order: usize) -> Self {
        let mut out = Self::zero(self.arity, order);
        for (c, v) in &self.terms {
            if S::representative(c).len() <= order {
                out.add_class(c.clone(), v.clone());
            }
        }
        out
    }

    pub fn linear_combination(&self, other: &Self, factor: &Q) -> Result<Self> {
        check_arity(self.arity, other.arity)?;
        let order = self.order.min(other.order);
        let mut out = self.truncated(order);
        for (c, v) in &other.terms {
            if S::representative(c).len() <= order {
                out.add_class(c.clone(), v * factor);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.linear_combination(other, &Q::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.linear_combination(other, &-Q::one())
    }

    pub fn scaled(&self, factor: &Q) -> Self {
        let mut out = Self::zero(self.arity, self.order);
        for (c, v) in &self.terms {
            out.add_class(c.clone(), v * factor);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scaled(&-Q::one())
    }

    /// `sum coeff * representative` as an associative series.
    pub fn lift(&self) -> AssocSeries {
        let mut out = AssocSeries::zero(self.arity, self.order);
        for (c, v) in &self.terms {
            out.add_term(S::representative(c).clone(), v.clone());
        }
        out
    }

    /// Replaces generator `i` by `args[i]` in a representative of every
    /// class and projects back. Lie arguments make this independent of the
    /// representative.
    pub fn substitute(&self, args: &[LieElement]) -> Result<Self> {
        let images = lie_images(self.arity, args)?;
        Ok(Self::from_assoc(&self.lift().substitute_letters(&images)?))
    }

    /// Substitution applied to one linear word, for representative checks.
    pub fn substitute_word(word: &Word, order: usize, args: &[LieElement]) -> Result<Self> {
        let arity = args.len();
        let w = AssocSeries::monomial(arity, order.max(word.len()), word.clone(), Q::one())?
            .with_order(order);
        let images = lie_images(arity, args)?;
        Ok(Self::from_assoc(&w.substitute_letters(&images)?))
    }

    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_difference(other).is_none() && self.arity == other.arity
    }

    /// Lowest class where `self - other` is nonzero.
    pub fn first_difference(&self, other: &Self) -> Option<(Word, Q)> {
        let diff = self.sub(other).ok()?;
        diff.terms
            .iter()
            .min_by(|a, b| S::representative(a.0).cmp(S::representative(b.0)))
            .map(|(c, v)| (S::representative(c).clone(), v.clone()))
    }

    /// Classes sorted in graded order, for display and serialisation.
    fn sorted_terms(&self) -> Vec<(&Word, &Q)> {
        let mut v: Vec<(&Word, &Q)> = self
            .terms
            .iter()
            .map(|(c, q)| (S::representative(c), q))
            .collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }
}

impl TraceSeries {
    /// Further projection `tr_n -> tr_n^quad`.
    pub fn to_quad(&self) -> QuadTraceSeries {
        QuadTraceSeries::from_assoc(&self.lift())
    }
}

fn lie_images(arity: usize, args: &[LieElement]) -> Result<Vec<AssocSeries>> {
    check_arity(args.len(), arity)?;
    if let Some(first) = args.first() {
        for a in args {
            check_arity(a.arity(), first.arity())?;
        }
    }
    Ok(args.iter().map(LieElement::to_assoc).collect())
}

/// `tr: Ass_n -> tr_n`.
pub fn tr(series: &AssocSeries) -> TraceSeries {
    TraceSeries::from_assoc(series)
}

/// `tr^quad: Ass_n -> tr_n^quad`.
pub fn tr_quad(series: &AssocSeries) -> QuadTraceSeries {
    QuadTraceSeries::from_assoc(series)
}

/// `tr(a b)` for Lie elements `a`, `b`.
pub fn trace_pairing(a: &LieElement, b: &LieElement) -> Result<TraceSeries> {
    Ok(tr(&a.to_assoc().mul(&b.to_assoc())?))
}

impl<S: TraceSpace> PartialEq for TraceSeriesIn<S> {
    fn eq(&self, other: &Self) -> bool {
        self.agrees_with(other)
    }
}

impl<S: TraceSpace> fmt::Display for TraceSeriesIn<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", S::NAME)?;
        crate::wordcore::write_terms(f, self.sorted_terms().into_iter())?;
        write!(f, "] + O({})", self.order + 1)
    }
}

impl<S: TraceSpace> fmt::Debug for TraceSeriesIn<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<S: TraceSpace> From<TraceSeriesIn<S>> for TraceWire {
    fn from(s: TraceSeriesIn<S>) -> Self {
        TraceWire::from_terms(s.arity, s.order, S::NAME, s.sorted_terms().into_iter())
    }
}

impl<S: TraceSpace> TryFrom<TraceWire> for TraceSeriesIn<S> {
    type Error = Error;

    fn try_from(wire: TraceWire) -> Result<Self> {
        if wire.space != S::NAME {
            return Err(Error::Parse(format!(
                "expected space {:?}, found {:?}",
                S::NAME,
                wire.space
            )));
        }
        let terms = wire.decode_terms()?;
        let mut out = Self::zero(wire.arity, wire.order);
        for (w, c) in terms {
            w.check_arity(wire.arity)?;
            if w.len() > wire.order {
                return Err(Error::WordTooLong {
                    len: w.len(),
                    order: wire.order,
                });
            }
            match S::project(&w) {
                Some((class, false)) if S::representative(&class) == &w => out.add_class(class, c),
                _ => {
                    return Err(Error::Parse(format!(
                        "{} is not a canonical {} representative",
                        w,
                        S::NAME
                    )))
                }
            }
        }
        Ok(out)
    }
}
