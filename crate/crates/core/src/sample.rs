//! Seeded random samples for property checks. Every sampler is driven by a
//! `ChaCha8Rng` from an explicit seed so reports are reproducible.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{all_generators, normal_order, rational, Generator, UPoly};
use crate::error::Result;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_601;

pub struct Sampler {
    rng: ChaCha8Rng,
    pool: Vec<Generator>,
}

impl Sampler {
    /// Samples generators with `|index2| <= bound`.
    pub fn new(seed: u64, bound: i64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            pool: all_generators(bound),
        }
    }

    pub fn generator(&mut self) -> Generator {
        *self.pool.choose(&mut self.rng).expect("generator pool is empty")
    }

    /// A word of `min_len..=max_len` generators (not normal ordered).
    pub fn word(&mut self, min_len: usize, max_len: usize) -> Vec<Generator> {
        let len = self.rng.gen_range(min_len..=max_len);
        (0..len).map(|_| self.generator()).collect()
    }

    /// The normal-ordered product of `1..=max_degree` random generators.
    pub fn product(&mut self, max_degree: usize, order: u32) -> Result<UPoly> {
        let word = self.word(1, max_degree);
        normal_order(&word, order)
    }

    /// A small random element: a few normal-ordered words with nonzero
    /// rational coefficients and random `t`-degrees up to `order`.
    pub fn upoly(&mut self, order: u32, max_terms: usize, max_word: usize) -> Result<UPoly> {
        let mut acc = UPoly::zero(order);
        let terms = self.rng.gen_range(0..=max_terms);
        for _ in 0..terms {
            let word = self.word(0, max_word);
            let num = loop {
                let n = self.rng.gen_range(-5i64..=5);
                if n != 0 {
                    break n;
                }
            };
            let den = self.rng.gen_range(1i64..=4);
            let d = self.rng.gen_range(0..=order);
            let term = normal_order(&word, order)?.shift_t(d).scale(&rational(num, den));
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }
}
