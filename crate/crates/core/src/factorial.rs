//! Shifted rising/falling factorials in `h = N_0` and the rules that move
//! generators past powers of `h` and `e = Y_p`.

use num_traits::{One, Zero};

use crate::algebra::{
    bracket_terms, factorial as fact, normal_order_by_rewriting, Coeff, Family, Generator,
    Monomial, RewriteStrategy, UPoly,
};
use crate::error::Result;
use crate::report::{Check, Report};
use crate::twist::TwistContext;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorialKind {
    /// `h^{(n)}_a = (h+a)(h+a+1)⋯(h+a+n-1)`
    Rising,
    /// `h^{[n]}_a = (h+a)(h+a-1)⋯(h+a-n+1)`
    Falling,
}

fn h_polynomial(coeffs: &[Coeff], order: u32) -> UPoly {
    let h = Generator::n(0);
    UPoly::from_terms(
        order,
        coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (0, Monomial::power(h, k as u32), c.clone())),
    )
}

/// Expands `h^{(n)}_a` or `h^{[n]}_a` into powers of `N_0`.
pub fn shifted_factorial(kind: FactorialKind, a: &Coeff, n: u32, order: u32) -> UPoly {
    // coefficient of h^k at index k
    let mut coeffs = vec![Coeff::one()];
    for i in 0..n {
        let shift = match kind {
            FactorialKind::Rising => a + Coeff::from_integer(i.into()),
            FactorialKind::Falling => a - Coeff::from_integer(i.into()),
        };
        let mut next = vec![Coeff::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] += c * &shift;
        }
        coeffs = next;
    }
    h_polynomial(&coeffs, order)
}

pub fn rising(a: &Coeff, n: u32, order: u32) -> UPoly {
    shifted_factorial(FactorialKind::Rising, a, n, order)
}

pub fn falling(a: &Coeff, n: u32, order: u32) -> UPoly {
    shifted_factorial(FactorialKind::Falling, a, n, order)
}

/// `a(a-1)⋯(a-r+1) / r!`
pub fn gen_binomial(a: &Coeff, r: u32) -> Coeff {
    let mut acc = Coeff::one();
    for i in 0..r {
        acc *= a - Coeff::from_integer(i.into());
    }
    acc / fact(r)
}

fn int(i: i64) -> Coeff {
    Coeff::from_integer(i.into())
}

fn sign(k: u32) -> Coeff {
    if k.is_multiple_of(2) {
        Coeff::one()
    } else {
        -Coeff::one()
    }
}

/// The three product rules for shifted factorials at `(a, s, t)`.
pub fn check_factorial_products(a: &Coeff, s: u32, t: u32, order: u32) -> Result<Report> {
    let mut report = Report::new("factorial-products");
    let label = |what: &str| format!("{what} a={a} s={s} t={t}");

    let lhs = rising(a, s, order).mul(&rising(&(a + int(s as i64)), t, order))?;
    report.push(Check::compare_upoly(label("rising split"), &lhs, &rising(a, s + t, order)));

    let lhs = falling(a, s, order).mul(&falling(&(a - int(s as i64)), t, order))?;
    report.push(Check::compare_upoly(label("falling split"), &lhs, &falling(a, s + t, order)));

    let shifted = a - int(s as i64) + int(1);
    report.push(Check::compare_upoly(
        label("falling as rising"),
        &falling(a, s, order),
        &rising(&shifted, s, order),
    ));
    Ok(report)
}

/// The two alternating sums of products of factorials, each of which must
/// collapse to a scalar binomial coefficient.
pub fn check_binomial_identities(a: &Coeff, b: &Coeff, r: u32, order: u32) -> Result<Report> {
    let mut report = Report::new("binomial-identities");
    let mut falling_rising = UPoly::zero(order);
    let mut falling_falling = UPoly::zero(order);
    for s in 0..=r {
        let t = r - s;
        let w = sign(t) / (fact(s) * fact(t));
        let left = falling(a, s, order);
        falling_rising = falling_rising.add(&left.mul(&rising(b, t, order))?.scale(&w))?;
        let shifted = b - int(s as i64);
        falling_falling = falling_falling.add(&left.mul(&falling(&shifted, t, order))?.scale(&w))?;
    }
    let target1 = UPoly::constant(gen_binomial(&(a - b), r), order);
    let target2 = UPoly::constant(gen_binomial(&(a - b + int(r as i64) - int(1)), r), order);
    report.push(Check::compare_upoly(
        format!("falling*rising sum a={a} b={b} r={r}"),
        &falling_rising,
        &target1,
    ));
    report.push(Check::compare_upoly(
        format!("falling*falling sum a={a} b={b} r={r}"),
        &falling_falling,
        &target2,
    ));
    Ok(report)
}

/// `(ad y)^k (x)` as a multiple of one generator, or `None` once it vanishes.
fn ad_power(x: Generator, y: Generator, k: u32) -> Result<Option<(Coeff, Generator)>> {
    let mut cur = (Coeff::one(), x);
    for _ in 0..k {
        match bracket_terms(y, cur.1)? {
            Some((c, g)) => cur = (cur.0 * c, g),
            None => return Ok(None),
        }
    }
    Ok(Some(cur))
}

/// `x·y^m = Σ_k (-1)^k C(m,k) y^{m-k} (ad y)^k(x)`, evaluated from the right
/// hand side.
pub fn ad_power_expand(x: Generator, y: Generator, m: u32, order: u32) -> Result<UPoly> {
    let mut acc = UPoly::zero(order);
    for k in 0..=m {
        let Some((c, g)) = ad_power(x, y, k)? else {
            break;
        };
        let weight = sign(k) * crate::algebra::binomial(m, k) * c;
        let term = UPoly::term(0, Monomial::power(y, m - k), Coeff::one(), order)
            .mul(&UPoly::from_generator(g, order))?;
        acc = acc.add(&term.scale(&weight))?;
    }
    Ok(acc)
}

/// Normal form of a word by the plain rewriting engine; the independent
/// oracle for the closed commutation rules below.
pub fn rewrite_oracle(word: &[Generator], order: u32) -> Result<UPoly> {
    let terms = normal_order_by_rewriting(word, RewriteStrategy::LeftmostFirst)?;
    Ok(UPoly::from_terms(order, terms.into_iter().map(|(m, c)| (0, m, c))))
}

/// `g·e^r` rewritten with the `e`-powers on the left:
///
/// - `L_n e^r = e^r L_n + (p-n/2)(r e^{r-1} Y_{p+n} - n r(r-1)/2 e^{r-2} M_{2p+n})`
/// - `N_n e^r = e^r N_n + r e^{r-1} Y_{p+n} - n r(r-1)/2 e^{r-2} M_{2p+n}`
/// - `Y_q e^r = e^r Y_q + r(p-q) e^{r-1} M_{p+q}`
/// - `M_n e^r = e^r M_n`
pub fn commute_past_e_power(g: Generator, r: u32, ctx: &TwistContext) -> Result<UPoly> {
    let order = ctx.order();
    let e_pow = |k: u32| ctx.e_power(k);
    let gen = |x: Generator| UPoly::from_generator(x, order);
    let lead = e_pow(r).mul(&gen(g))?;
    let rr = int(r as i64);
    let pairs = int(r as i64 * (r as i64 - 1) / 2);

    let tail = match g.family() {
        Family::L | Family::N => {
            let n = g.index();
            let first = if r >= 1 {
                e_pow(r - 1).mul(&gen(ctx.y_shift(g)?))?.scale(&rr)
            } else {
                UPoly::zero(order)
            };
            let second = if r >= 2 {
                e_pow(r - 2).mul(&gen(ctx.m_shift_twice(g)?))?.scale(&(&n * &pairs))
            } else {
                UPoly::zero(order)
            };
            let inner = first.sub(&second)?;
            if g.family() == Family::L {
                inner.scale(&(ctx.p() - n / int(2)))
            } else {
                inner
            }
        }
        Family::Y => {
            if r >= 1 {
                let c = rr * (ctx.p() - g.index());
                e_pow(r - 1).mul(&gen(ctx.m_shift(g)?))?.scale(&c)
            } else {
                UPoly::zero(order)
            }
        }
        Family::M => UPoly::zero(order),
    };
    lead.add(&tail)
}

/// What is moved past a shifted factorial of `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftTarget {
    Gen(Generator),
    /// `e^n` for the context's `e`.
    EPower(u32),
}

impl ShiftTarget {
    /// The shift `a -> a'` in `g·h^{(i)}_a = h^{(i)}_{a'}·g`.
    pub fn shift(self) -> Coeff {
        match self {
            ShiftTarget::Gen(g) => match g.family() {
                Family::L | Family::N => Coeff::zero(),
                Family::M => int(-2),
                Family::Y => int(-1),
            },
            ShiftTarget::EPower(n) => int(-(n as i64)),
        }
    }

    fn as_upoly(self, ctx: &TwistContext) -> UPoly {
        match self {
            ShiftTarget::Gen(g) => UPoly::from_generator(g, ctx.order()),
            ShiftTarget::EPower(n) => ctx.e_power(n),
        }
    }

    fn word(self, ctx: &TwistContext) -> Vec<Generator> {
        match self {
            ShiftTarget::Gen(g) => vec![g],
            ShiftTarget::EPower(n) => vec![ctx.e(); n as usize],
        }
    }
}

/// `g·h^{(i)}_a` (or the falling variant) rewritten as `h^{(i)}_{a'}·g`.
pub fn commute_h_shift(
    target: ShiftTarget,
    kind: FactorialKind,
    a: &Coeff,
    i: u32,
    ctx: &TwistContext,
) -> Result<UPoly> {
    let order = ctx.order();
    shifted_factorial(kind, &(a + target.shift()), i, order).mul(&target.as_upoly(ctx))
}

/// Compares [`commute_h_shift`] against rewriting the literal word
/// `g·(h+a)(h+a±1)⋯`.
pub fn check_commute_h_shift(
    target: ShiftTarget,
    kind: FactorialKind,
    a: &Coeff,
    i: u32,
    ctx: &TwistContext,
) -> Result<Check> {
    let order = ctx.order();
    let closed = commute_h_shift(target, kind, a, i, ctx)?;
    // g·h^{(i)}_a = Σ_k c_k g·h^k, each word normal-ordered by rewriting.
    let poly = shifted_factorial(kind, a, i, order);
    let mut oracle = UPoly::zero(order);
    for (_, m, c) in poly.terms() {
        let mut word = target.word(ctx);
        word.extend(m.word());
        oracle = oracle.add(&rewrite_oracle(&word, order)?.scale(c))?;
    }
    let what = match target {
        ShiftTarget::Gen(g) => g.to_string(),
        ShiftTarget::EPower(n) => format!("e^{n}"),
    };
    let sym = match kind {
        FactorialKind::Rising => format!("h^({i})_{a}"),
        FactorialKind::Falling => format!("h^[{i}]_{a}"),
    };
    Ok(Check::compare_upoly(format!("{what}*{sym}"), &closed, &oracle))
}

pub fn check_commute_past_e_power(g: Generator, r: u32, ctx: &TwistContext) -> Result<Check> {
    let closed = commute_past_e_power(g, r, ctx)?;
    let mut word = vec![g];
    word.extend(std::iter::repeat_n(ctx.e(), r as usize));
    let oracle = rewrite_oracle(&word, ctx.order())?;
    Ok(Check::compare_upoly(
        format!("{g}*e^{r} p={}", ctx.p()),
        &closed,
        &oracle,
    ))
}

pub fn check_ad_power_expand(x: Generator, y: Generator, m: u32, order: u32) -> Result<Check> {
    let lhs = ad_power_expand(x, y, m, order)?;
    let mut word = vec![x];
    word.extend(std::iter::repeat_n(y, m as usize));
    let oracle = rewrite_oracle(&word, order)?;
    Ok(Check::compare_upoly(format!("{x}*{y}^{m}"), &lhs, &oracle))
}
