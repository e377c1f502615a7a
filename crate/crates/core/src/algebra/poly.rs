use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::coeff::Coeff;
use super::generator::Generator;
use super::monomial::Monomial;
use super::normal::mul_monomials;
use crate::error::{AlgebraError, Result};

/// An element of `U(L)[[t]]` truncated at `t^order`: a sparse map from
/// `(t-degree, PBW monomial)` to a nonzero rational coefficient.
///
/// Canonical: no zero coefficients are stored and no degree exceeds
/// `order`, so structural equality is algebraic equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UPoly {
    order: u32,
    terms: BTreeMap<(u32, Monomial), Coeff>,
}

pub(crate) fn add_into<K: Ord>(map: &mut BTreeMap<K, Coeff>, key: K, c: Coeff) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl UPoly {
    pub fn zero(order: u32) -> Self {
        UPoly {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::constant(Coeff::one(), order)
    }

    pub fn constant(c: Coeff, order: u32) -> Self {
        Self::term(0, Monomial::one(), c, order)
    }

    pub fn from_generator(g: Generator, order: u32) -> Self {
        Self::term(0, Monomial::generator(g), Coeff::one(), order)
    }

    /// `c · mono · t^degree`; zero if the degree exceeds the order.
    pub fn term(degree: u32, mono: Monomial, c: Coeff, order: u32) -> Self {
        Self::from_terms(order, std::iter::once((degree, mono, c)))
    }

    /// `t^degree` alone.
    pub fn t_power(degree: u32, order: u32) -> Self {
        Self::term(degree, Monomial::one(), Coeff::one(), order)
    }

    /// Sums the given terms, dropping zeros and degrees above `order`.
    pub fn from_terms(order: u32, terms: impl IntoIterator<Item = (u32, Monomial, Coeff)>) -> Self {
        let mut map = BTreeMap::new();
        for (d, m, c) in terms {
            if d <= order {
                add_into(&mut map, (d, m), c);
            }
        }
        UPoly { order, terms: map }
    }

    pub(crate) fn from_map(order: u32, terms: BTreeMap<(u32, Monomial), Coeff>) -> Self {
        debug_assert!(terms.iter().all(|((d, _), c)| *d <= order && !c.is_zero()));
        UPoly { order, terms }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in `(degree, monomial)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Monomial, &Coeff)> {
        self.terms.iter().map(|((d, m), c)| (*d, m, c))
    }

    pub fn coeff(&self, degree: u32, mono: &Monomial) -> Coeff {
        self.terms
            .get(&(degree, mono.clone()))
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }

    /// The single generator this element equals, if it is exactly `1·g`.
    pub fn as_generator(&self) -> Option<Generator> {
        let mut it = self.terms.iter();
        match (it.next(), it.next()) {
            (Some(((0, m), c)), None) if c.is_one() => match m.factors() {
                [(g, 1)] => Some(*g),
                _ => None,
            },
            _ => None,
        }
    }

    fn check_order(&self, other: &UPoly) -> Result<()> {
        if self.order != other.order {
            return Err(AlgebraError::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &UPoly) -> Result<UPoly> {
        self.check_order(other)?;
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            add_into(&mut terms, k.clone(), c.clone());
        }
        Ok(UPoly::from_map(self.order, terms))
    }

    pub fn sub(&self, other: &UPoly) -> Result<UPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UPoly {
        UPoly {
            order: self.order,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> UPoly {
        if c.is_zero() {
            return UPoly::zero(self.order);
        }
        UPoly {
            order: self.order,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by `t^k`, dropping what falls past the order.
    pub fn shift_t(&self, k: u32) -> UPoly {
        UPoly::from_terms(
            self.order,
            self.terms.iter().map(|((d, m), c)| (d + k, m.clone(), c.clone())),
        )
    }

    /// Re-truncates (or widens) to a new order.
    pub fn with_order(&self, order: u32) -> UPoly {
        UPoly::from_terms(order, self.terms().map(|(d, m, c)| (d, m.clone(), c.clone())))
    }

    /// Product in `U(L)[[t]]`, normal-ordered and truncated.
    pub fn mul(&self, other: &UPoly) -> Result<UPoly> {
        self.check_order(other)?;
        let mut acc = BTreeMap::new();
        for ((d1, m1), c1) in &self.terms {
            for ((d2, m2), c2) in &other.terms {
                let d = d1 + d2;
                if d > self.order {
                    continue;
                }
                let c12 = c1 * c2;
                for (m, c) in mul_monomials(m1, m2)?.iter() {
                    add_into(&mut acc, (d, m.clone()), &c12 * c);
                }
            }
        }
        Ok(UPoly::from_map(self.order, acc))
    }

    pub fn pow(&self, k: u32) -> Result<UPoly> {
        let mut acc = UPoly::one(self.order);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Product of a list of factors, left to right.
    pub fn product<'a>(order: u32, factors: impl IntoIterator<Item = &'a UPoly>) -> Result<UPoly> {
        let mut acc = UPoly::one(order);
        for f in factors {
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }

    /// First `(degree, monomial)` where the two differ, with both
    /// coefficients.
    pub fn first_difference(&self, other: &UPoly) -> Option<(u32, Monomial, Coeff, Coeff)> {
        let mut keys: Vec<&(u32, Monomial)> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|k| {
            let a = self.terms.get(k).cloned().unwrap_or_else(Coeff::zero);
            let b = other.terms.get(k).cloned().unwrap_or_else(Coeff::zero);
            (a != b).then(|| (k.0, k.1.clone(), a, b))
        })
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::upoly_text(self))
    }
}
