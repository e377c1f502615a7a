//! The undeformed Hopf structure: `Δ₀(X) = X⊗1 + 1⊗X`, `S₀(X) = -X`,
//! `ε(X) = 0` on generators, extended as (anti)morphisms.

use num_traits::{One, Zero};

use super::coeff::{binomial, Coeff};
use super::monomial::Monomial;
use super::normal::normal_order_terms;
use super::poly::UPoly;
use super::tensor::TensorPoly;
use crate::error::Result;

/// `Δ₀` of a PBW monomial. The slot factors `g⊗1` and `1⊗g` commute, so
/// `Δ₀(g^k) = Σ C(k,j) g^j ⊗ g^{k-j}`, and both slots of every product stay
/// PBW-sorted.
pub fn delta0_monomial(mono: &Monomial) -> Vec<((Monomial, Monomial), Coeff)> {
    let mut partial: Vec<(Vec<_>, Vec<_>, Coeff)> = vec![(Vec::new(), Vec::new(), Coeff::one())];
    for &(g, k) in mono.factors() {
        let mut next = Vec::with_capacity(partial.len() * (k as usize + 1));
        for (left, right, c) in &partial {
            for j in 0..=k {
                let mut l = left.clone();
                let mut r = right.clone();
                if j > 0 {
                    l.push((g, j));
                }
                if j < k {
                    r.push((g, k - j));
                }
                next.push((l, r, c * binomial(k, j)));
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|(l, r, c)| {
            let l = Monomial::from_factors(l).expect("subsequence of a PBW word is sorted");
            let r = Monomial::from_factors(r).expect("subsequence of a PBW word is sorted");
            ((l, r), c)
        })
        .collect()
}

pub fn delta0(x: &UPoly) -> TensorPoly {
    let terms = x.terms().flat_map(|(d, m, c)| {
        delta0_monomial(m)
            .into_iter()
            .map(move |((l, r), k)| (d, vec![l, r], c * k))
    });
    TensorPoly::from_terms(2, x.order(), terms).expect("arity 2 is valid")
}

/// `S₀` of a monomial: reverse the word, sign `(-1)^length`, normal-order.
pub fn s0_monomial(mono: &Monomial) -> Result<Vec<(Monomial, Coeff)>> {
    let mut word = mono.word();
    word.reverse();
    let sign = if word.len().is_multiple_of(2) { Coeff::one() } else { -Coeff::one() };
    Ok(normal_order_terms(&word)?
        .into_iter()
        .map(|(m, c)| (m, c * &sign))
        .collect())
}

pub fn s0(x: &UPoly) -> Result<UPoly> {
    let mut terms = Vec::new();
    for (d, m, c) in x.terms() {
        for (m2, k) in s0_monomial(m)? {
            terms.push((d, m2, c * k));
        }
    }
    Ok(UPoly::from_terms(x.order(), terms))
}

/// `ε` of a monomial as a one-entry degree series.
pub fn eps_monomial(mono: &Monomial) -> Vec<Coeff> {
    vec![if mono.is_one() { Coeff::one() } else { Coeff::zero() }]
}

/// `ε(x)` as a scalar series: entry `d` is the coefficient of `t^d`.
pub fn eps(x: &UPoly) -> Vec<Coeff> {
    let mut out = vec![Coeff::zero(); x.order() as usize + 1];
    for (d, m, c) in x.terms() {
        if m.is_one() {
            out[d as usize] += c;
        }
    }
    out
}
