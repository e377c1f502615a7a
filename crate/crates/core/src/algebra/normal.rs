//! PBW normal ordering.
//!
//! The fast path multiplies a monomial by one generator on the right,
//! rewriting `x·g = g·x + [x,g]` whenever `g` precedes the last factor `x`.
//! Results are memoized per thread. An independent word-rewriting engine
//! with a selectable strategy exists for confluence checks.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_traits::{One, Zero};

use super::coeff::Coeff;
use super::generator::{bracket_terms, Generator};
use super::monomial::Monomial;
use super::poly::UPoly;
use crate::error::Result;

pub(crate) type Lin = Vec<(Monomial, Coeff)>;

const CACHE_LIMIT: usize = 1 << 20;

thread_local! {
    static RIGHT_MUL: RefCell<HashMap<(Monomial, Generator), Rc<Lin>>> = RefCell::new(HashMap::new());
    static PRODUCTS: RefCell<HashMap<(Monomial, Monomial), Rc<Lin>>> = RefCell::new(HashMap::new());
}

/// Empties this thread's memo tables.
pub fn clear_cache() {
    RIGHT_MUL.with(|c| c.borrow_mut().clear());
    PRODUCTS.with(|c| c.borrow_mut().clear());
}

fn collect(acc: HashMap<Monomial, Coeff>) -> Lin {
    let mut out: Lin = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

fn accumulate(acc: &mut HashMap<Monomial, Coeff>, m: &Monomial, c: Coeff) {
    match acc.get_mut(m) {
        Some(d) => *d += c,
        None => {
            acc.insert(m.clone(), c);
        }
    }
}

fn right_mul(a: &Monomial, g: Generator) -> Result<Rc<Lin>> {
    let x = match a.last() {
        Some(x) if x > g => x,
        _ => return Ok(Rc::new(vec![(a.push_sorted(g), Coeff::one())])),
    };
    let key = (a.clone(), g);
    if let Some(hit) = RIGHT_MUL.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(hit);
    }

    // a = prefix·x and x > g:  prefix·x·g = (prefix·g)·x + prefix·[x,g]
    let prefix = a.pop_last();
    let mut acc = HashMap::new();
    for (m, c) in right_mul(&prefix, g)?.iter() {
        for (m2, c2) in right_mul(m, x)?.iter() {
            accumulate(&mut acc, m2, c * c2);
        }
    }
    if let Some((c, z)) = bracket_terms(x, g)? {
        for (m, c2) in right_mul(&prefix, z)?.iter() {
            accumulate(&mut acc, m, &c * c2);
        }
    }
    let out = Rc::new(collect(acc));
    RIGHT_MUL.with(|cache| {
        let mut cache = cache.borrow_mut();
        if cache.len() > CACHE_LIMIT {
            cache.clear();
        }
        cache.insert(key, out.clone());
    });
    Ok(out)
}

/// PBW normal form of the product `a·b`.
pub fn mul_monomials(a: &Monomial, b: &Monomial) -> Result<Rc<Lin>> {
    if let Some(m) = a.concat_sorted(b) {
        return Ok(Rc::new(vec![(m, Coeff::one())]));
    }
    let key = (a.clone(), b.clone());
    if let Some(hit) = PRODUCTS.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(hit);
    }
    let mut current: Lin = vec![(a.clone(), Coeff::one())];
    for g in b.word() {
        let mut acc = HashMap::new();
        for (m, c) in &current {
            for (m2, c2) in right_mul(m, g)?.iter() {
                accumulate(&mut acc, m2, c * c2);
            }
        }
        current = collect(acc);
    }
    let out = Rc::new(current);
    PRODUCTS.with(|cache| {
        let mut cache = cache.borrow_mut();
        if cache.len() > CACHE_LIMIT {
            cache.clear();
        }
        cache.insert(key, out.clone());
    });
    Ok(out)
}

/// Normal form of a word as a list of `(monomial, coefficient)`, sorted by
/// monomial.
pub fn normal_order_terms(word: &[Generator]) -> Result<Vec<(Monomial, Coeff)>> {
    let mut current: Lin = vec![(Monomial::one(), Coeff::one())];
    for &g in word {
        let mut acc = HashMap::new();
        for (m, c) in &current {
            for (m2, c2) in right_mul(m, g)?.iter() {
                accumulate(&mut acc, m2, c * c2);
            }
        }
        current = collect(acc);
    }
    Ok(current)
}

/// The unique PBW normal form of a word of generators.
pub fn normal_order(word: &[Generator], order: u32) -> Result<UPoly> {
    let terms = normal_order_terms(word)?;
    Ok(UPoly::from_terms(
        order,
        terms.into_iter().map(|(m, c)| (0, m, c)),
    ))
}

/// Which out-of-order adjacent pair the rewriting engine resolves first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteStrategy {
    LeftmostFirst,
    RightmostFirst,
}

/// Normal ordering by plain word rewriting, `xy -> yx + [x,y]` on an
/// adjacent pair with `x > y`, until every word is sorted. Shares nothing
/// with the memoized path except the bracket table.
pub fn normal_order_by_rewriting(
    word: &[Generator],
    strategy: RewriteStrategy,
) -> Result<Vec<(Monomial, Coeff)>> {
    let mut pending: BTreeMap<Vec<Generator>, Coeff> = BTreeMap::new();
    pending.insert(word.to_vec(), Coeff::one());
    let mut done: HashMap<Monomial, Coeff> = HashMap::new();

    while let Some((w, c)) = pending.pop_last() {
        if c.is_zero() {
            continue;
        }
        let mut inversions = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]);
        let pos = match strategy {
            RewriteStrategy::LeftmostFirst => inversions.next(),
            RewriteStrategy::RightmostFirst => inversions.next_back(),
        };
        let Some(i) = pos else {
            accumulate(&mut done, &Monomial::from_sorted_word(&w), c);
            continue;
        };
        let (x, y) = (w[i], w[i + 1]);
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        *pending.entry(swapped).or_insert_with(Coeff::zero) += &c;
        if let Some((k, z)) = bracket_terms(x, y)? {
            let mut shorter = Vec::with_capacity(w.len() - 1);
            shorter.extend_from_slice(&w[..i]);
            shorter.push(z);
            shorter.extend_from_slice(&w[i + 2..]);
            *pending.entry(shorter).or_insert_with(Coeff::zero) += c * k;
        }
    }
    Ok(collect(done))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::rational;

    fn lin(terms: &[(Monomial, i64)]) -> Lin {
        let mut v: Lin = terms.iter().map(|(m, c)| (m.clone(), rational(*c, 1))).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    #[test]
    fn one_step_rewrite() {
        // L_1·M_2 = M_2·L_1 + 2·M_3
        let got = normal_order_terms(&[Generator::l(1), Generator::m(2)]).unwrap();
        let m2l1 = Monomial::from_factors(vec![(Generator::m(2), 1), (Generator::l(1), 1)]).unwrap();
        assert_eq!(got, lin(&[(m2l1, 1), (Monomial::generator(Generator::m(3)), 2)]));
    }

    #[test]
    fn sorted_word_is_fixed() {
        let w = [Generator::m(0), Generator::y(1), Generator::n(0)];
        let got = normal_order_terms(&w).unwrap();
        assert_eq!(got, lin(&[(Monomial::from_sorted_word(&w), 1)]));
    }

    #[test]
    fn y_pair() {
        // Y_{3/2}·Y_{1/2} = Y_{1/2}·Y_{3/2} - M_2
        let got = normal_order_terms(&[Generator::y(3), Generator::y(1)]).unwrap();
        let sorted = Monomial::from_sorted_word(&[Generator::y(1), Generator::y(3)]);
        assert_eq!(got, lin(&[(Monomial::generator(Generator::m(2)), -1), (sorted, 1)]));
    }

    #[test]
    fn strategies_agree_with_fast_path() {
        let w = [
            Generator::l(2),
            Generator::y(-1),
            Generator::n(1),
            Generator::y(3),
            Generator::m(-1),
        ];
        let fast = normal_order_terms(&w).unwrap();
        let left = normal_order_by_rewriting(&w, RewriteStrategy::LeftmostFirst).unwrap();
        let right = normal_order_by_rewriting(&w, RewriteStrategy::RightmostFirst).unwrap();
        assert_eq!(fast, left);
        assert_eq!(fast, right);
    }

    #[test]
    fn cache_is_transparent() {
        let w = [Generator::l(1), Generator::y(1), Generator::n(0), Generator::y(-1)];
        let warm = normal_order_terms(&w).unwrap();
        clear_cache();
        assert_eq!(normal_order_terms(&w).unwrap(), warm);
        let threaded = std::thread::spawn(move || normal_order_terms(&w).unwrap())
            .join()
            .unwrap();
        assert_eq!(threaded, warm);
    }
}
