use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::coeff::{rational_i128, Coeff};
use super::poly::UPoly;
use crate::error::{AlgebraError, Result};

/// Generator family. The declaration order is the PBW rank: `M < Y < N < L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    M,
    Y,
    N,
    L,
}

impl Family {
    pub fn symbol(self) -> char {
        match self {
            Family::M => 'M',
            Family::Y => 'Y',
            Family::N => 'N',
            Family::L => 'L',
        }
    }

    /// `Y` carries half-integer indices; the other families carry integers.
    pub fn is_half_integral(self) -> bool {
        self == Family::Y
    }
}

/// A basis element of `L`. The index is stored doubled so `Y_{1/2}` has
/// `index2 == 1` and `L_3` has `index2 == 6`.
///
/// The derived ordering (family rank, then `index2`) is the PBW order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    family: Family,
    index2: i64,
}

impl Generator {
    pub fn new(family: Family, index2: i64) -> Result<Self> {
        let odd = index2.rem_euclid(2) == 1;
        if family.is_half_integral() != odd {
            return Err(AlgebraError::Parity {
                family,
                index2,
                expected: if family.is_half_integral() { "an odd" } else { "an even" },
            });
        }
        Ok(Generator { family, index2 })
    }

    /// Builds an integer-indexed generator from its (undoubled) index.
    pub fn integral(family: Family, n: i64) -> Result<Self> {
        let index2 = n.checked_mul(2).ok_or(AlgebraError::IndexOverflow)?;
        Generator::new(family, index2)
    }

    /// `L_n`. Panics if `2n` overflows.
    pub fn l(n: i64) -> Self {
        Self::integral(Family::L, n).expect("L index out of range")
    }

    /// `M_n`. Panics if `2n` overflows.
    pub fn m(n: i64) -> Self {
        Self::integral(Family::M, n).expect("M index out of range")
    }

    /// `N_n`. Panics if `2n` overflows.
    pub fn n(n: i64) -> Self {
        Self::integral(Family::N, n).expect("N index out of range")
    }

    /// `Y_{k/2}` for odd `k`. Panics on even `k`.
    pub fn y(k: i64) -> Self {
        Generator::new(Family::Y, k).expect("Y requires an odd doubled index")
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn index2(self) -> i64 {
        self.index2
    }

    /// The index as an exact rational.
    pub fn index(self) -> Coeff {
        rational_i128(self.index2 as i128, 2)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = self.family.symbol();
        if self.family.is_half_integral() {
            write!(f, "{}_{{{}/2}}", sym, self.index2)
        } else {
            let n = self.index2 / 2;
            if (0..10).contains(&n) {
                write!(f, "{}_{}", sym, n)
            } else {
                write!(f, "{}_{{{}}}", sym, n)
            }
        }
    }
}

fn shifted(family: Family, a: i64, b: i64) -> Result<Generator> {
    let index2 = a.checked_add(b).ok_or(AlgebraError::IndexOverflow)?;
    Generator::new(family, index2)
}

/// The Lie bracket `[a, b]` of two basis elements as `Some((c, g))` meaning
/// `c·g`, or `None` when it vanishes.
pub fn bracket_terms(a: Generator, b: Generator) -> Result<Option<(Coeff, Generator)>> {
    use Family::*;
    // Doubled indices: x2 = 2x.
    let (x2, y2) = (a.index2 as i128, b.index2 as i128);
    let term = |num: i128, den: i128, g: Generator| -> Option<(Coeff, Generator)> {
        let c = rational_i128(num, den);
        if c.is_zero() {
            None
        } else {
            Some((c, g))
        }
    };
    let out = match (a.family, b.family) {
        // [L_m, L_n] = (n - m) L_{m+n}
        (L, L) => term(y2 - x2, 2, shifted(L, a.index2, b.index2)?),
        // [L_m, N_n] = n N_{m+n}
        (L, N) => term(y2, 2, shifted(N, a.index2, b.index2)?),
        (N, L) => term(-x2, 2, shifted(N, a.index2, b.index2)?),
        // [L_m, M_n] = n M_{m+n}
        (L, M) => term(y2, 2, shifted(M, a.index2, b.index2)?),
        (M, L) => term(-x2, 2, shifted(M, a.index2, b.index2)?),
        // [L_n, Y_p] = (p - n/2) Y_{p+n}
        (L, Y) => term(2 * y2 - x2, 4, shifted(Y, a.index2, b.index2)?),
        (Y, L) => term(-(2 * x2 - y2), 4, shifted(Y, a.index2, b.index2)?),
        // [N_m, Y_p] = Y_{m+p}
        (N, Y) => term(1, 1, shifted(Y, a.index2, b.index2)?),
        (Y, N) => term(-1, 1, shifted(Y, a.index2, b.index2)?),
        // [N_m, M_n] = 2 M_{m+n}
        (N, M) => term(2, 1, shifted(M, a.index2, b.index2)?),
        (M, N) => term(-2, 1, shifted(M, a.index2, b.index2)?),
        // [Y_p, Y_q] = (q - p) M_{p+q}
        (Y, Y) => term(y2 - x2, 2, shifted(M, a.index2, b.index2)?),
        (M, Y) | (Y, M) | (N, N) | (M, M) => None,
    };
    Ok(out)
}

/// `[a, b]` as an element of `U(L)[[t]]` at the given truncation order.
pub fn bracket(a: Generator, b: Generator, order: u32) -> Result<UPoly> {
    Ok(match bracket_terms(a, b)? {
        Some((c, g)) => UPoly::from_generator(g, order).scale(&c),
        None => UPoly::zero(order),
    })
}

/// Every generator with `|index2| <= bound`, in PBW order.
pub fn all_generators(bound: i64) -> Vec<Generator> {
    let mut out = Vec::new();
    for family in [Family::M, Family::Y, Family::N, Family::L] {
        for k in -bound..=bound {
            if let Ok(g) = Generator::new(family, k) {
                out.push(g);
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct JacobiReport {
    pub triples_checked: usize,
    pub first_violation: Option<(Generator, Generator, Generator)>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

type LinGen = Vec<(Generator, Coeff)>;

fn nested(x: Generator, y: Generator, z: Generator, acc: &mut LinGen) -> Result<()> {
    if let Some((c, w)) = bracket_terms(y, z)? {
        if let Some((c2, v)) = bracket_terms(x, w)? {
            acc.push((v, c * c2));
        }
    }
    Ok(())
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]` collected per generator.
pub fn jacobiator(x: Generator, y: Generator, z: Generator) -> Result<LinGen> {
    let mut acc = Vec::new();
    nested(x, y, z, &mut acc)?;
    nested(y, z, x, &mut acc)?;
    nested(z, x, y, &mut acc)?;
    acc.sort_by_key(|a| a.0);
    let mut out: LinGen = Vec::new();
    for (g, c) in acc {
        match out.last_mut() {
            Some((h, d)) if *h == g => *d += c,
            _ => out.push((g, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    Ok(out)
}

/// Checks the Jacobi identity on every ordered triple of generators with
/// `|index2| <= bound`.
pub fn jacobi_check(bound: i64) -> Result<JacobiReport> {
    let gens = all_generators(bound);
    let mut checked = 0;
    for &x in &gens {
        for &y in &gens {
            for &z in &gens {
                checked += 1;
                if !jacobiator(x, y, z)?.is_empty() {
                    return Ok(JacobiReport {
                        triples_checked: checked,
                        first_violation: Some((x, y, z)),
                    });
                }
            }
        }
    }
    Ok(JacobiReport {
        triples_checked: checked,
        first_violation: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coeff::rational;

    #[test]
    fn table_examples() {
        assert_eq!(
            bracket_terms(Generator::l(1), Generator::l(2)).unwrap(),
            Some((rational(1, 1), Generator::l(3)))
        );
        assert_eq!(bracket_terms(Generator::y(1), Generator::y(1)).unwrap(), None);
        assert_eq!(
            bracket_terms(Generator::n(0), Generator::y(1)).unwrap(),
            Some((rational(1, 1), Generator::y(1)))
        );
        assert_eq!(
            bracket_terms(Generator::l(2), Generator::n(3)).unwrap(),
            Some((rational(3, 1), Generator::n(5)))
        );
        // [L_1, Y_{1/2}] = (1/2 - 1/2) Y_{3/2} = 0
        assert_eq!(bracket_terms(Generator::l(1), Generator::y(1)).unwrap(), None);
        // [L_{-1}, Y_{1/2}] = (1/2 + 1/2) Y_{-1/2}
        assert_eq!(
            bracket_terms(Generator::l(-1), Generator::y(1)).unwrap(),
            Some((rational(1, 1), Generator::y(-1)))
        );
        // [Y_{3/2}, Y_{1/2}] = (1/2 - 3/2) M_2
        assert_eq!(
            bracket_terms(Generator::y(3), Generator::y(1)).unwrap(),
            Some((rational(-1, 1), Generator::m(2)))
        );
    }

    #[test]
    fn parity_is_validated() {
        assert!(Generator::new(Family::Y, 2).is_err());
        assert!(Generator::new(Family::L, 1).is_err());
        assert!(Generator::new(Family::M, -4).is_ok());
        assert!(Generator::integral(Family::L, i64::MAX).is_err());
    }

    #[test]
    fn overflow_fails_loudly() {
        let big = Generator::new(Family::L, i64::MAX - 1).unwrap();
        assert_eq!(
            bracket_terms(big, Generator::l(5)),
            Err(AlgebraError::IndexOverflow)
        );
    }

    #[test]
    fn antisymmetry() {
        let gens = all_generators(6);
        for &a in &gens {
            for &b in &gens {
                let ab = bracket_terms(a, b).unwrap();
                let ba = bracket_terms(b, a).unwrap();
                match (ab, ba) {
                    (None, None) => {}
                    (Some((c, g)), Some((d, h))) => {
                        assert_eq!(g, h);
                        assert_eq!(c, -d);
                    }
                    other => panic!("antisymmetry fails for {a} {b}: {other:?}"),
                }
            }
        }
    }

    #[test]
    fn jacobi_examples() {
        assert!(jacobiator(Generator::l(1), Generator::l(2), Generator::l(-1))
            .unwrap()
            .is_empty());
        assert!(jacobiator(Generator::m(0), Generator::m(1), Generator::m(2))
            .unwrap()
            .is_empty());
        assert!(jacobiator(Generator::l(1), Generator::n(2), Generator::y(1))
            .unwrap()
            .is_empty());
        assert!(jacobi_check(2).unwrap().passed());
    }

    #[test]
    fn display() {
        assert_eq!(Generator::l(1).to_string(), "L_1");
        assert_eq!(Generator::l(-2).to_string(), "L_{-2}");
        assert_eq!(Generator::m(12).to_string(), "M_{12}");
        assert_eq!(Generator::y(1).to_string(), "Y_{1/2}");
        assert_eq!(Generator::y(-3).to_string(), "Y_{-3/2}");
    }
}
