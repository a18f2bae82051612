//! Wire formats shared by every serialisable type.
//!
//! Words are letter strings (`a` is generator 0, `b` generator 1, ...) and
//! coefficients are reduced `p/q` strings.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::rational::{format_q, parse_q, Q};
use crate::wordcore::Word;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermWire {
    pub word: String,
    pub coeff: String,
}

impl TermWire {
    pub fn new(word: &Word, coeff: &Q) -> Self {
        TermWire {
            word: word.encode(),
            coeff: format_q(coeff),
        }
    }

    pub fn decode(&self) -> Result<(Word, Q)> {
        Ok((Word::decode(&self.word)?, parse_q(&self.coeff)?))
    }
}

fn encode_terms<'a, I: Iterator<Item = (&'a Word, &'a Q)>>(terms: I) -> Vec<TermWire> {
    terms.map(|(w, c)| TermWire::new(w, c)).collect()
}

fn decode_terms(terms: &[TermWire]) -> Result<Vec<(Word, Q)>> {
    terms.iter().map(TermWire::decode).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeriesWire {
    pub arity: usize,
    pub order: usize,
    pub terms: Vec<TermWire>,
}

impl SeriesWire {
    pub fn from_terms<'a, I: Iterator<Item = (&'a Word, &'a Q)>>(
        arity: usize,
        order: usize,
        terms: I,
    ) -> Self {
        SeriesWire {
            arity,
            order,
            terms: encode_terms(terms),
        }
    }

    pub fn decode_terms(&self) -> Result<Vec<(Word, Q)>> {
        decode_terms(&self.terms)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LieWire {
    pub arity: usize,
    pub order: usize,
    pub basis: String,
    pub terms: Vec<TermWire>,
}

impl LieWire {
    pub fn from_terms<'a, I: Iterator<Item = (&'a Word, &'a Q)>>(
        arity: usize,
        order: usize,
        terms: I,
    ) -> Self {
        LieWire {
            arity,
            order,
            basis: "lyndon".into(),
            terms: encode_terms(terms),
        }
    }

    pub fn decode_terms(&self) -> Result<Vec<(Word, Q)>> {
        decode_terms(&self.terms)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct UnivariateWire {
    pub order: usize,
    pub coeffs: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TraceWire {
    pub arity: usize,
    pub order: usize,
    pub space: String,
    pub terms: Vec<TermWire>,
}

impl TraceWire {
    pub fn from_terms<'a, I: Iterator<Item = (&'a Word, &'a Q)>>(
        arity: usize,
        order: usize,
        space: &str,
        terms: I,
    ) -> Self {
        TraceWire {
            arity,
            order,
            space: space.into(),
            terms: encode_terms(terms),
        }
    }

    pub fn decode_terms(&self) -> Result<Vec<(Word, Q)>> {
        decode_terms(&self.terms)
    }
}
