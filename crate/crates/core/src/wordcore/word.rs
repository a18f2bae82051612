use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest alphabet representable by the `a`..`z` text encoding.
pub const MAX_ARITY: usize = 26;

/// A monomial of the free associative algebra: a finite sequence of
/// generator indices.
///
/// Words are ordered by length first and lexicographically within a length,
/// so a sorted map of words is also graded by degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[u8; 16]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn letter(index: usize) -> Self {
        debug_assert!(index < MAX_ARITY);
        Word(SmallVec::from_slice(&[index as u8]))
    }

    pub fn from_letters<I: IntoIterator<Item = usize>>(letters: I) -> Self {
        Word(letters.into_iter().map(|l| l as u8).collect())
    }

    pub fn from_slice(letters: &[u8]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().map(|&l| l as usize)
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().map(|&l| l as usize)
    }

    /// One past the largest letter used; 0 for the empty word.
    pub fn min_arity(&self) -> usize {
        self.0.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    pub fn check_arity(&self, arity: usize) -> Result<()> {
        match self.0.iter().find(|&&l| l as usize >= arity) {
            Some(&l) => Err(Error::LetterOutOfRange {
                letter: l as usize,
                arity,
            }),
            None => Ok(()),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn push(&mut self, letter: usize) {
        self.0.push(letter as u8);
    }

    pub fn with_prefix_letter(&self, letter: usize) -> Word {
        let mut out: SmallVec<[u8; 16]> = SmallVec::with_capacity(self.len() + 1);
        out.push(letter as u8);
        out.extend_from_slice(&self.0);
        Word(out)
    }

    pub fn with_suffix_letter(&self, letter: usize) -> Word {
        let mut out = self.0.clone();
        out.push(letter as u8);
        Word(out)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word::from_slice(&self.0[start..end])
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Rotation moving the first `shift` letters to the back.
    pub fn rotated(&self, shift: usize) -> Word {
        let n = self.len();
        if n == 0 {
            return self.clone();
        }
        let shift = shift % n;
        let mut out: SmallVec<[u8; 16]> = SmallVec::with_capacity(n);
        out.extend_from_slice(&self.0[shift..]);
        out.extend_from_slice(&self.0[..shift]);
        Word(out)
    }

    pub fn rotations(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.len().max(1)).map(move |s| self.rotated(s))
    }

    /// Plain lexicographic comparison of the letter sequences.
    pub fn lex_cmp(&self, other: &Word) -> Ordering {
        self.0.cmp(&other.0)
    }

    /// Letter string in the `a`..`z` encoding used by the JSON schemas.
    pub fn encode(&self) -> String {
        self.0.iter().map(|&l| (b'a' + l) as char).collect()
    }

    pub fn decode(text: &str) -> Result<Word> {
        text.chars()
            .map(|c| {
                if c.is_ascii_lowercase() {
                    Ok(c as u8 - b'a')
                } else {
                    Err(Error::Parse(format!("invalid letter {c:?} in word {text:?}")))
                }
            })
            .collect::<Result<SmallVec<[u8; 16]>>>()
            .map(Word)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&self.encode())
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_order() {
        let a = Word::decode("b").unwrap();
        let b = Word::decode("aa").unwrap();
        assert!(a < b);
        assert!(Word::decode("ab").unwrap() < Word::decode("ba").unwrap());
        assert!(Word::empty() < a);
    }

    #[test]
    fn encode_decode() {
        let w = Word::from_letters([0, 1, 2, 0]);
        assert_eq!(w.encode(), "abca");
        assert_eq!(Word::decode("abca").unwrap(), w);
        assert!(Word::decode("aB").is_err());
        assert_eq!(w.min_arity(), 3);
        assert!(w.check_arity(2).is_err());
    }

    #[test]
    fn rotations_and_reversal() {
        let w = Word::decode("abc").unwrap();
        let rots: Vec<String> = w.rotations().map(|r| r.encode()).collect();
        assert_eq!(rots, ["abc", "bca", "cab"]);
        assert_eq!(w.reversed().encode(), "cba");
        assert_eq!(Word::empty().rotations().count(), 1);
    }
}
