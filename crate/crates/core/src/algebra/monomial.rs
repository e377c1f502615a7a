use std::fmt;

use super::generator::Generator;

/// A PBW monomial: generators with positive exponents, strictly increasing
/// in the PBW order. The empty monomial is the unit.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<(Generator, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(g: Generator) -> Self {
        Monomial(vec![(g, 1)])
    }

    pub fn power(g: Generator, k: u32) -> Self {
        if k == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(g, k)])
        }
    }

    /// Builds a monomial from factors that must already be in PBW order.
    /// Returns `None` if the factors are unsorted, repeated, or have a zero
    /// exponent.
    pub fn from_factors(factors: Vec<(Generator, u32)>) -> Option<Self> {
        if factors.iter().any(|&(_, k)| k == 0) {
            return None;
        }
        if factors.windows(2).any(|w| w[0].0 >= w[1].0) {
            return None;
        }
        Some(Monomial(factors))
    }

    /// Collapses a sorted (non-decreasing) word into a monomial.
    pub(crate) fn from_sorted_word(word: &[Generator]) -> Self {
        let mut out: Vec<(Generator, u32)> = Vec::new();
        for &g in word {
            match out.last_mut() {
                Some((h, k)) if *h == g => *k += 1,
                _ => out.push((g, 1)),
            }
        }
        debug_assert!(out.windows(2).all(|w| w[0].0 < w[1].0));
        Monomial(out)
    }

    pub fn factors(&self) -> &[(Generator, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Total word length.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, k)| k).sum()
    }

    /// The monomial written out as a word of generators.
    pub fn word(&self) -> Vec<Generator> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for &(g, k) in &self.0 {
            w.extend(std::iter::repeat_n(g, k as usize));
        }
        w
    }

    pub fn first(&self) -> Option<Generator> {
        self.0.first().map(|&(g, _)| g)
    }

    pub fn last(&self) -> Option<Generator> {
        self.0.last().map(|&(g, _)| g)
    }

    /// Drops one copy of the last generator.
    pub(crate) fn pop_last(&self) -> Monomial {
        let mut f = self.0.clone();
        if let Some(last) = f.last_mut() {
            if last.1 > 1 {
                last.1 -= 1;
            } else {
                f.pop();
            }
        }
        Monomial(f)
    }

    /// Appends `g`, which must be `>=` the last generator.
    pub(crate) fn push_sorted(&self, g: Generator) -> Monomial {
        let mut f = self.0.clone();
        match f.last_mut() {
            Some((h, k)) if *h == g => *k += 1,
            Some((h, _)) => {
                debug_assert!(*h < g);
                f.push((g, 1));
            }
            None => f.push((g, 1)),
        }
        Monomial(f)
    }

    /// Concatenation when every factor of `self` precedes every factor of
    /// `other`; `None` otherwise.
    pub(crate) fn concat_sorted(&self, other: &Monomial) -> Option<Monomial> {
        match (self.last(), other.first()) {
            (None, _) => Some(other.clone()),
            (_, None) => Some(self.clone()),
            (Some(a), Some(b)) if a < b => {
                let mut f = self.0.clone();
                f.extend_from_slice(&other.0);
                Some(Monomial(f))
            }
            (Some(a), Some(b)) if a == b => {
                let mut f = self.0.clone();
                f.last_mut().unwrap().1 += other.0[0].1;
                f.extend_from_slice(&other.0[1..]);
                Some(Monomial(f))
            }
            _ => None,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, &(g, k)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if k == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{k}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_must_be_sorted() {
        let (m, y, n, l) = (Generator::m(0), Generator::y(1), Generator::n(0), Generator::l(1));
        assert!(Monomial::from_factors(vec![(m, 1), (y, 2), (n, 1), (l, 3)]).is_some());
        assert!(Monomial::from_factors(vec![(l, 1), (m, 1)]).is_none());
        assert!(Monomial::from_factors(vec![(y, 1), (y, 1)]).is_none());
        assert!(Monomial::from_factors(vec![(y, 0)]).is_none());
        assert!(Monomial::from_factors(vec![]).unwrap().is_one());
    }

    #[test]
    fn word_roundtrip() {
        let mono = Monomial::from_factors(vec![(Generator::y(1), 2), (Generator::n(0), 1)]).unwrap();
        assert_eq!(mono.degree(), 3);
        assert_eq!(Monomial::from_sorted_word(&mono.word()), mono);
        assert_eq!(mono.to_string(), "Y_{1/2}^2*N_0");
        assert_eq!(mono.pop_last().to_string(), "Y_{1/2}^2");
    }
}
