//! Seeded generators for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::liecore::{lyndon_words, LieElement, LyndonWord};
use crate::rational::{q_frac, Q};
use crate::wordcore::{AssocSeries, Word};

pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Nonzero `p/q` with `|p| <= 4`, `1 <= q <= 3`.
    pub fn rational(&mut self) -> Q {
        let mut p = 0;
        while p == 0 {
            p = self.rng.gen_range(-4..=4);
        }
        q_frac(p, self.rng.gen_range(1..=3))
    }

    pub fn degree(&mut self, min: usize, max: usize) -> usize {
        self.rng.gen_range(min..=max)
    }

    /// Up to `terms` random Lyndon monomials of degree in `min..=max`.
    pub fn lie(&mut self, arity: usize, min: usize, max: usize, order: usize, terms: usize) -> LieElement {
        let pool: Vec<LyndonWord> = lyndon_words(arity, max.min(order))
            .into_iter()
            .filter(|l| l.len() >= min)
            .collect();
        let mut out = LieElement::zero(arity, order);
        for _ in 0..terms {
            if let Some(l) = pool.choose(&mut self.rng) {
                let c = self.rational();
                out.add_term(l.clone(), c);
            }
        }
        out
    }

    /// Up to `terms` random words of length in `min..=max`.
    pub fn assoc(&mut self, arity: usize, min: usize, max: usize, order: usize, terms: usize) -> AssocSeries {
        let mut out = AssocSeries::zero(arity, order);
        for _ in 0..terms {
            let len = self.rng.gen_range(min..=max.min(order));
            let w = Word::from_letters((0..len).map(|_| self.rng.gen_range(0..arity)));
            let c = self.rational();
            out.add_term(w, c);
        }
        out
    }

    /// A pair whose trace pairing has degree at most `max_total`.
    pub fn lie_pair(&mut self, arity: usize, max_total: usize, order: usize) -> (LieElement, LieElement) {
        let dp = self.degree(1, max_total - 1);
        let dq = self.degree(1, max_total - dp);
        let p = self.lie(arity, 1, dp, order, 3);
        let q = self.lie(arity, 1, dq, order, 3);
        (p, q)
    }
}
