use std::fmt;

use crate::error::{Error, Result};
use crate::wordcore::Word;

/// A cyclic word, stored as its lexicographically least rotation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord(Word);

impl CyclicWord {
    pub fn canonical(word: &Word) -> CyclicWord {
        CyclicWord(word.rotations().min().expect("at least one rotation"))
    }

    /// Accepts only words that already are the least rotation.
    pub fn new(word: Word) -> Result<CyclicWord> {
        let c = Self::canonical(&word);
        if c.0 == word {
            Ok(c)
        } else {
            Err(Error::Domain(format!("{word} is not a least rotation")))
        }
    }

    pub fn representative(&self) -> &Word {
        &self.0
    }
}

/// A class of `tr^quad`: `w ~ rotations(w) ~ (-1)^|w| rotations(reverse(w))`.
/// Zero classes (odd words equivalent to their own reversal) never exist as
/// values of this type.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadCyclicClass(Word);

impl QuadCyclicClass {
    /// Class of `word` and whether the projection carries a minus sign;
    /// `None` for the zero class.
    pub fn canonical(word: &Word) -> Option<(QuadCyclicClass, bool)> {
        let direct = word.rotations().min().expect("rotation");
        let reversed = word.reversed().rotations().min().expect("rotation");
        let odd = word.len() % 2 == 1;
        if odd && direct == reversed {
            return None;
        }
        if reversed < direct {
            Some((QuadCyclicClass(reversed), odd))
        } else {
            Some((QuadCyclicClass(direct), false))
        }
    }

    pub fn new(word: Word) -> Result<QuadCyclicClass> {
        match Self::canonical(&word) {
            Some((c, _)) if c.0 == word => Ok(c),
            Some(_) => Err(Error::Domain(format!("{word} is not a least representative"))),
            None => Err(Error::Domain(format!("{word} spans the zero class"))),
        }
    }

    pub fn representative(&self) -> &Word {
        &self.0
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "tr({})", self.0)
    }
}

impl fmt::Debug for QuadCyclicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "trquad({})", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::decode(s).unwrap()
    }

    #[test]
    fn cyclic_canonical_form() {
        assert_eq!(CyclicWord::canonical(&w("ba")).representative(), &w("ab"));
        assert_eq!(CyclicWord::canonical(&w("bca")).representative(), &w("abc"));
        assert!(CyclicWord::new(w("ba")).is_err());
        assert!(CyclicWord::new(Word::empty()).is_ok());
    }

    #[test]
    fn quad_classes() {
        // odd palindromic orbits vanish
        assert!(QuadCyclicClass::canonical(&w("aaa")).is_none());
        assert!(QuadCyclicClass::canonical(&w("a")).is_none());
        assert!(QuadCyclicClass::canonical(&w("aab")).is_none());
        // abc and acb are reversals of each other: odd length gives a sign
        let (c, neg) = QuadCyclicClass::canonical(&w("acb")).unwrap();
        assert_eq!(c.representative(), &w("abc"));
        assert!(neg);
        let (c, neg) = QuadCyclicClass::canonical(&w("bca")).unwrap();
        assert_eq!(c.representative(), &w("abc"));
        assert!(!neg);
        // even length: reversal is sign-free
        assert!(QuadCyclicClass::canonical(&w("aabab")).is_none());
        let (c, neg) = QuadCyclicClass::canonical(&w("aacb")).unwrap();
        assert_eq!(c.representative(), &w("aabc"));
        assert!(!neg);
        assert!(QuadCyclicClass::new(Word::empty()).is_ok());
        assert!(QuadCyclicClass::new(w("aaa")).is_err());
    }
}
