use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use crate::error::{Error, Result};
use crate::wordcore::Word;

/// A Lyndon word with its cached standard factorization `w = u v`, where `v`
/// is the longest proper Lyndon suffix.
#[derive(Clone)]
pub struct LyndonWord {
    word: Word,
    split: usize,
}

pub fn is_lyndon(word: &Word) -> bool {
    let n = word.len();
    if n == 0 {
        return false;
    }
    let letters = word.letters();
    (1..n).all(|s| {
        let rotated = letters[s..].iter().chain(&letters[..s]);
        letters.iter().cmp(rotated) == Ordering::Less
    })
}

impl LyndonWord {
    pub fn new(word: Word) -> Result<Self> {
        if !is_lyndon(&word) {
            return Err(Error::Domain(format!("{word} is not a Lyndon word")));
        }
        let split = (1..word.len())
            .find(|&i| is_lyndon(&word.slice(i, word.len())))
            .unwrap_or(0);
        Ok(LyndonWord { word, split })
    }

    pub fn letter(index: usize) -> Self {
        LyndonWord {
            word: Word::letter(index),
            split: 0,
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `(u, v)` for words of length at least two.
    pub fn factors(&self) -> Option<(LyndonWord, LyndonWord)> {
        if self.split == 0 {
            return None;
        }
        let n = self.word.len();
        let u = LyndonWord::new(self.word.slice(0, self.split)).expect("left factor is Lyndon");
        let v = LyndonWord::new(self.word.slice(self.split, n)).expect("right factor is Lyndon");
        Some((u, v))
    }

    /// Expansion of the standard bracketing in the free associative algebra.
    /// The coefficients are integers and independent of the ambient arity.
    pub fn expansion(&self) -> Arc<Vec<(Word, i64)>> {
        if let Some(hit) = EXPANSIONS.read().expect("cache lock").get(&self.word) {
            return hit.clone();
        }
        let expanded = match self.factors() {
            None => vec![(self.word.clone(), 1)],
            Some((u, v)) => {
                let pu = u.expansion();
                let pv = v.expansion();
                let mut acc: HashMap<Word, i64> = HashMap::new();
                for (a, ca) in pu.iter() {
                    for (b, cb) in pv.iter() {
                        *acc.entry(a.concat(b)).or_insert(0) += ca * cb;
                        *acc.entry(b.concat(a)).or_insert(0) -= ca * cb;
                    }
                }
                let mut terms: Vec<(Word, i64)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
                terms.sort();
                terms
            }
        };
        let expanded = Arc::new(expanded);
        EXPANSIONS
            .write()
            .expect("cache lock")
            .insert(self.word.clone(), expanded.clone());
        expanded
    }

    /// Standard bracketing written with `x, y, z, ...` style letters.
    pub fn bracketed(&self) -> String {
        match self.factors() {
            None => self.word.encode(),
            Some((u, v)) => format!("[{},{}]", u.bracketed(), v.bracketed()),
        }
    }
}

static EXPANSIONS: LazyLock<RwLock<HashMap<Word, Arc<Vec<(Word, i64)>>>>> =
    LazyLock::new(Default::default);

impl PartialEq for LyndonWord {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
    }
}

impl Eq for LyndonWord {}

impl PartialOrd for LyndonWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LyndonWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word.cmp(&other.word)
    }
}

impl std::hash::Hash for LyndonWord {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.word.hash(state);
    }
}

impl fmt::Display for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

impl fmt::Debug for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lyndon({})", self.word)
    }
}

/// All Lyndon words over `arity` letters of length `1..=max_len`, in
/// lexicographic order (Duval's generation algorithm).
pub fn lyndon_words(arity: usize, max_len: usize) -> Vec<LyndonWord> {
    let mut out = Vec::new();
    if arity == 0 || max_len == 0 {
        return out;
    }
    let mut w: Vec<usize> = vec![0];
    loop {
        let word = Word::from_letters(w.iter().copied());
        out.push(LyndonWord::new(word).expect("Duval emits Lyndon words"));
        let n = w.len();
        let mut next: Vec<usize> = (0..max_len).map(|i| w[i % n]).collect();
        while next.last() == Some(&(arity - 1)) {
            next.pop();
        }
        match next.last_mut() {
            None => break,
            Some(last) => *last += 1,
        }
        w = next;
    }
    out
}

/// Number of Lyndon words of length exactly `n` (Witt's formula).
pub fn necklace_lyndon_count(arity: usize, n: usize) -> usize {
    fn mobius(mut n: usize) -> i64 {
        let mut result = 1;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                n /= p;
                if n % p == 0 {
                    return 0;
                }
                result = -result;
            }
            p += 1;
        }
        if n > 1 {
            result = -result;
        }
        result
    }
    let total: i64 = (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| mobius(n / d) * (arity as i64).pow(d as u32))
        .sum();
    (total / n as i64) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::decode(s).unwrap()
    }

    #[test]
    fn lyndon_property() {
        assert!(is_lyndon(&w("a")));
        assert!(is_lyndon(&w("ab")));
        assert!(is_lyndon(&w("aab")));
        assert!(is_lyndon(&w("abb")));
        assert!(!is_lyndon(&w("aa")));
        assert!(!is_lyndon(&w("ba")));
        assert!(!is_lyndon(&w("abab")));
        assert!(!is_lyndon(&Word::empty()));
    }

    #[test]
    fn standard_factorization() {
        let l = LyndonWord::new(w("aab")).unwrap();
        let (u, v) = l.factors().unwrap();
        assert_eq!((u.word().encode(), v.word().encode()), ("a".into(), "ab".into()));
        let l = LyndonWord::new(w("aabab")).unwrap();
        let (u, v) = l.factors().unwrap();
        assert_eq!((u.word().encode(), v.word().encode()), ("aab".into(), "ab".into()));
        assert_eq!(l.bracketed(), "[[a,[a,b]],[a,b]]");
    }

    #[test]
    fn generation_matches_witt_formula() {
        for arity in 1..=3 {
            let words = lyndon_words(arity, 7);
            for n in 1..=7 {
                let count = words.iter().filter(|l| l.len() == n).count();
                assert_eq!(count, necklace_lyndon_count(arity, n), "arity {arity} n {n}");
            }
            let mut sorted: Vec<Word> = words.iter().map(|l| l.word().clone()).collect();
            let before = sorted.clone();
            sorted.sort_by(|a, b| a.lex_cmp(b));
            assert_eq!(before, sorted);
        }
    }

    #[test]
    fn bracket_expansion_of_xxy() {
        // [x,[x,y]] = xxy - 2xyx + yxx
        let l = LyndonWord::new(w("aab")).unwrap();
        let e = l.expansion();
        let expected = vec![(w("aab"), 1), (w("aba"), -2), (w("baa"), 1)];
        assert_eq!(*e, expected);
    }

    #[test]
    fn expansion_is_triangular() {
        for l in lyndon_words(3, 6) {
            let e = l.expansion();
            let min = e.iter().min_by(|a, b| a.0.lex_cmp(&b.0)).unwrap();
            assert_eq!(&min.0, l.word());
            assert_eq!(min.1, 1);
        }
    }
}
