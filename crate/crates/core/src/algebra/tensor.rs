use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::coeff::Coeff;
use super::monomial::Monomial;
use super::normal::mul_monomials;
use super::poly::{add_into, UPoly};
use crate::error::{AlgebraError, Result};

type Key = (u32, Vec<Monomial>);

/// A 2- or 3-fold tensor over `U(L)[[t]]`, truncated at `t^order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorPoly {
    arity: usize,
    order: u32,
    terms: BTreeMap<Key, Coeff>,
}

fn check_arity(arity: usize) -> Result<()> {
    if arity == 2 || arity == 3 {
        Ok(())
    } else {
        Err(AlgebraError::BadArity(arity))
    }
}

impl TensorPoly {
    pub fn zero(arity: usize, order: u32) -> Result<Self> {
        check_arity(arity)?;
        Ok(TensorPoly {
            arity,
            order,
            terms: BTreeMap::new(),
        })
    }

    pub fn one(arity: usize, order: u32) -> Result<Self> {
        Self::from_terms(
            arity,
            order,
            [(0, vec![Monomial::one(); arity], Coeff::one())],
        )
    }

    pub fn from_terms(
        arity: usize,
        order: u32,
        terms: impl IntoIterator<Item = (u32, Vec<Monomial>, Coeff)>,
    ) -> Result<Self> {
        check_arity(arity)?;
        let mut map = BTreeMap::new();
        for (d, slots, c) in terms {
            if slots.len() != arity {
                return Err(AlgebraError::ArityMismatch(arity, slots.len()));
            }
            if d <= order {
                add_into(&mut map, (d, slots), c);
            }
        }
        Ok(TensorPoly {
            arity,
            order,
            terms: map,
        })
    }

    /// `x₁ ⊗ x₂ (⊗ x₃)`; `t`-degrees add across slots.
    pub fn tensor(factors: &[&UPoly]) -> Result<Self> {
        let arity = factors.len();
        check_arity(arity)?;
        let order = factors[0].order();
        if let Some(f) = factors.iter().find(|f| f.order() != order) {
            return Err(AlgebraError::OrderMismatch(order, f.order()));
        }
        let mut partial: Vec<(u32, Vec<Monomial>, Coeff)> = vec![(0, Vec::new(), Coeff::one())];
        for f in factors {
            let mut next = Vec::new();
            for (d, slots, c) in &partial {
                for (d2, m, c2) in f.terms() {
                    if d + d2 > order {
                        continue;
                    }
                    let mut s = slots.clone();
                    s.push(m.clone());
                    next.push((d + d2, s, c * c2));
                }
            }
            partial = next;
        }
        Self::from_terms(arity, order, partial)
    }

    pub fn arity(&self) -> usize {
        self.arity
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

    pub fn terms(&self) -> impl Iterator<Item = (u32, &[Monomial], &Coeff)> {
        self.terms.iter().map(|((d, s), c)| (*d, s.as_slice(), c))
    }

    pub fn coeff(&self, degree: u32, slots: &[Monomial]) -> Coeff {
        self.terms
            .get(&(degree, slots.to_vec()))
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }

    fn check_compatible(&self, other: &TensorPoly) -> Result<()> {
        if self.arity != other.arity {
            return Err(AlgebraError::ArityMismatch(self.arity, other.arity));
        }
        if self.order != other.order {
            return Err(AlgebraError::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorPoly) -> Result<TensorPoly> {
        self.check_compatible(other)?;
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            add_into(&mut terms, k.clone(), c.clone());
        }
        Ok(self.with_terms(terms))
    }

    pub fn sub(&self, other: &TensorPoly) -> Result<TensorPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TensorPoly {
        self.with_terms(self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect())
    }

    pub fn scale(&self, c: &Coeff) -> TensorPoly {
        if c.is_zero() {
            return self.with_terms(BTreeMap::new());
        }
        self.with_terms(self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect())
    }

    pub fn shift_t(&self, k: u32) -> TensorPoly {
        let terms = self
            .terms
            .iter()
            .filter(|((d, _), _)| d + k <= self.order)
            .map(|((d, s), c)| ((d + k, s.clone()), c.clone()))
            .collect();
        self.with_terms(terms)
    }

    pub fn with_order(&self, order: u32) -> TensorPoly {
        let terms = self
            .terms
            .iter()
            .filter(|((d, _), _)| *d <= order)
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        TensorPoly {
            arity: self.arity,
            order,
            terms,
        }
    }

    fn with_terms(&self, terms: BTreeMap<Key, Coeff>) -> TensorPoly {
        TensorPoly {
            arity: self.arity,
            order: self.order,
            terms,
        }
    }

    /// Slot-wise product; each slot is normal-ordered, degrees add.
    pub fn mul(&self, other: &TensorPoly) -> Result<TensorPoly> {
        self.check_compatible(other)?;
        let mut acc = BTreeMap::new();
        for ((d1, s1), c1) in &self.terms {
            for ((d2, s2), c2) in &other.terms {
                let d = d1 + d2;
                if d > self.order {
                    continue;
                }
                let mut partial: Vec<(Vec<Monomial>, Coeff)> = vec![(Vec::new(), c1 * c2)];
                for (a, b) in s1.iter().zip(s2) {
                    let prod = mul_monomials(a, b)?;
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (slots, c) in &partial {
                        for (m, c2) in prod.iter() {
                            let mut s = slots.clone();
                            s.push(m.clone());
                            next.push((s, c * c2));
                        }
                    }
                    partial = next;
                }
                for (slots, c) in partial {
                    add_into(&mut acc, (d, slots), c);
                }
            }
        }
        Ok(self.with_terms(acc))
    }

    /// Replaces slot `slot` by the 2-fold tensor `f(monomial)`, raising the
    /// arity by one. Used for `(Δ⊗Id)` and `(Id⊗Δ)`.
    pub fn expand_slot(
        &self,
        slot: usize,
        mut f: impl FnMut(&Monomial) -> Result<TensorPoly>,
    ) -> Result<TensorPoly> {
        let arity = self.arity + 1;
        check_arity(arity)?;
        let mut acc = BTreeMap::new();
        for ((d, s), c) in &self.terms {
            let image = f(&s[slot])?;
            for ((d2, pair), c2) in &image.terms {
                let deg = d + d2;
                if deg > self.order {
                    continue;
                }
                let mut slots = Vec::with_capacity(arity);
                slots.extend_from_slice(&s[..slot]);
                slots.extend_from_slice(pair);
                slots.extend_from_slice(&s[slot + 1..]);
                add_into(&mut acc, (deg, slots), c * c2);
            }
        }
        Ok(TensorPoly {
            arity,
            order: self.order,
            terms: acc,
        })
    }

    /// Applies a scalar-valued map (per-degree coefficients) to one slot of a
    /// 3-fold tensor, giving a 2-fold tensor. Used for counits.
    pub fn contract_slot(&self, slot: usize, f: impl Fn(&Monomial) -> Vec<Coeff>) -> Result<TensorPoly> {
        let arity = self.arity - 1;
        check_arity(arity)?;
        let mut acc = BTreeMap::new();
        for ((d, s), c) in &self.terms {
            for (d2, k) in f(&s[slot]).into_iter().enumerate() {
                let deg = d + d2 as u32;
                if deg > self.order || k.is_zero() {
                    continue;
                }
                let mut slots = s.clone();
                slots.remove(slot);
                add_into(&mut acc, (deg, slots), c * k);
            }
        }
        Ok(TensorPoly {
            arity,
            order: self.order,
            terms: acc,
        })
    }

    /// Same as [`contract_slot`](Self::contract_slot) for a 2-fold tensor,
    /// giving an element of `U(L)[[t]]`.
    pub fn contract_to_upoly(&self, slot: usize, f: impl Fn(&Monomial) -> Vec<Coeff>) -> Result<UPoly> {
        if self.arity != 2 {
            return Err(AlgebraError::ArityMismatch(2, self.arity));
        }
        let mut acc = BTreeMap::new();
        for ((d, s), c) in &self.terms {
            for (d2, k) in f(&s[slot]).into_iter().enumerate() {
                let deg = d + d2 as u32;
                if deg > self.order || k.is_zero() {
                    continue;
                }
                add_into(&mut acc, (deg, s[1 - slot].clone()), c * k);
            }
        }
        Ok(UPoly::from_map(self.order, acc))
    }

    /// `m ∘ (f ⊗ g)` on a 2-fold tensor.
    pub fn multiply_out(
        &self,
        mut left: impl FnMut(&Monomial) -> Result<UPoly>,
        mut right: impl FnMut(&Monomial) -> Result<UPoly>,
    ) -> Result<UPoly> {
        if self.arity != 2 {
            return Err(AlgebraError::ArityMismatch(2, self.arity));
        }
        let mut acc = UPoly::zero(self.order);
        for ((d, s), c) in &self.terms {
            let a = left(&s[0])?;
            let b = right(&s[1])?;
            acc = acc.add(&a.mul(&b)?.shift_t(*d).scale(c))?;
        }
        Ok(acc)
    }

    pub fn first_difference(&self, other: &TensorPoly) -> Option<(u32, Vec<Monomial>, Coeff, Coeff)> {
        let mut keys: Vec<&Key> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|k| {
            let a = self.terms.get(k).cloned().unwrap_or_else(Coeff::zero);
            let b = other.terms.get(k).cloned().unwrap_or_else(Coeff::zero);
            (a != b).then(|| (k.0, k.1.clone(), a, b))
        })
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::tensor_text(self))
    }
}
