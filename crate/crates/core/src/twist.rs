//! The twist pair `𝓕_a = Σ (-1)^r/r! h^{[r]}_a ⊗ e^r t^r` and
//! `F_a = Σ 1/r! h^{(r)}_a ⊗ e^r t^r`, the elements `u_a`, `v_a`, the series
//! `(1-et)^a`, and checkers for every identity the quantization relies on.

use num_traits::{One, Zero};

use crate::algebra::{
    delta0, delta0_monomial, eps_monomial, factorial as fact, s0, Coeff, Family, Generator,
    Monomial, TensorPoly, UPoly,
};
use crate::error::{AlgebraError, Result};
use crate::factorial::{falling, gen_binomial, rising};
use crate::report::{Check, Report};

/// Global configuration: `p = p2/2` selects `e = Y_p`, `h = N_0` is fixed,
/// and every series is truncated at `t^order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwistContext {
    p2: i64,
    order: u32,
}

impl Default for TwistContext {
    fn default() -> Self {
        TwistContext { p2: 1, order: 3 }
    }
}

impl TwistContext {
    pub fn new(p2: i64, order: u32) -> Result<Self> {
        if p2.rem_euclid(2) != 1 {
            return Err(AlgebraError::EvenP(p2));
        }
        Ok(TwistContext { p2, order })
    }

    pub fn p2(&self) -> i64 {
        self.p2
    }

    pub fn p(&self) -> Coeff {
        Coeff::new(self.p2.into(), 2.into())
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn with_order(&self, order: u32) -> Self {
        TwistContext { order, ..*self }
    }

    pub fn h(&self) -> Generator {
        Generator::n(0)
    }

    pub fn e(&self) -> Generator {
        Generator::y(self.p2)
    }

    pub fn h_poly(&self) -> UPoly {
        UPoly::from_generator(self.h(), self.order)
    }

    pub fn e_power(&self, r: u32) -> UPoly {
        UPoly::term(0, Monomial::power(self.e(), r), Coeff::one(), self.order)
    }

    /// `Y_{n+p}` for `g = L_n` or `N_n`.
    pub fn y_shift(&self, g: Generator) -> Result<Generator> {
        let i = g.index2().checked_add(self.p2).ok_or(AlgebraError::IndexOverflow)?;
        Generator::new(Family::Y, i)
    }

    /// `M_{p+q}` for `g = Y_q`.
    pub fn m_shift(&self, g: Generator) -> Result<Generator> {
        let i = g.index2().checked_add(self.p2).ok_or(AlgebraError::IndexOverflow)?;
        Generator::new(Family::M, i)
    }

    /// `M_{2p+n}` for `g = L_n` or `N_n`.
    pub fn m_shift_twice(&self, g: Generator) -> Result<Generator> {
        let i = self
            .p2
            .checked_mul(2)
            .and_then(|p| p.checked_add(g.index2()))
            .ok_or(AlgebraError::IndexOverflow)?;
        Generator::new(Family::M, i)
    }
}

fn sign(r: u32) -> Coeff {
    if r.is_multiple_of(2) {
        Coeff::one()
    } else {
        -Coeff::one()
    }
}

fn twist_series(a: &Coeff, ctx: &TwistContext, curly: bool) -> TensorPoly {
    let order = ctx.order();
    let mut terms = Vec::new();
    for r in 0..=order {
        let (poly, w) = if curly {
            (falling(a, r, order), sign(r) / fact(r))
        } else {
            (rising(a, r, order), Coeff::one() / fact(r))
        };
        let e_r = Monomial::power(ctx.e(), r);
        for (_, m, c) in poly.terms() {
            terms.push((r, vec![m.clone(), e_r.clone()], c * &w));
        }
    }
    TensorPoly::from_terms(2, order, terms).expect("arity 2 is valid")
}

/// `𝓕_a = Σ_r (-1)^r/r! h^{[r]}_a ⊗ e^r t^r`
pub fn build_curly_f(a: &Coeff, ctx: &TwistContext) -> TensorPoly {
    twist_series(a, ctx, true)
}

/// `F_a = Σ_r 1/r! h^{(r)}_a ⊗ e^r t^r`
pub fn build_f(a: &Coeff, ctx: &TwistContext) -> TensorPoly {
    twist_series(a, ctx, false)
}

/// `u_a = Σ_r (-1)^r/r! h^{[r]}_{-a} e^r t^r`
pub fn build_u(a: &Coeff, ctx: &TwistContext) -> Result<UPoly> {
    let order = ctx.order();
    let mut acc = UPoly::zero(order);
    for r in 0..=order {
        let term = falling(&-a, r, order).mul(&ctx.e_power(r))?;
        acc = acc.add(&term.shift_t(r).scale(&(sign(r) / fact(r))))?;
    }
    Ok(acc)
}

/// `v_a = Σ_r 1/r! h^{[r]}_a e^r t^r`
pub fn build_v(a: &Coeff, ctx: &TwistContext) -> Result<UPoly> {
    let order = ctx.order();
    let mut acc = UPoly::zero(order);
    for r in 0..=order {
        let term = falling(a, r, order).mul(&ctx.e_power(r))?;
        acc = acc.add(&term.shift_t(r).scale(&(Coeff::one() / fact(r))))?;
    }
    Ok(acc)
}

/// `u_a` computed as `m∘(S₀⊗Id)(F_a)`.
pub fn u_from_twist(a: &Coeff, ctx: &TwistContext) -> Result<UPoly> {
    let order = ctx.order();
    build_f(a, ctx).multiply_out(
        |m| s0(&UPoly::term(0, m.clone(), Coeff::one(), order)),
        |m| Ok(UPoly::term(0, m.clone(), Coeff::one(), order)),
    )
}

/// `v_a` computed as `m∘(Id⊗S₀)(𝓕_a)`.
pub fn v_from_twist(a: &Coeff, ctx: &TwistContext) -> Result<UPoly> {
    let order = ctx.order();
    build_curly_f(a, ctx).multiply_out(
        |m| Ok(UPoly::term(0, m.clone(), Coeff::one(), order)),
        |m| s0(&UPoly::term(0, m.clone(), Coeff::one(), order)),
    )
}

/// `(1 - e t)^a = Σ_m C(a,m) (-1)^m e^m t^m`, truncated.
pub fn series_power(a: &Coeff, ctx: &TwistContext) -> UPoly {
    let order = ctx.order();
    UPoly::from_terms(
        order,
        (0..=order).map(|m| {
            (
                m,
                Monomial::power(ctx.e(), m),
                gen_binomial(a, m) * sign(m),
            )
        }),
    )
}

/// `𝓕_a F_b = 1⊗(1-et)^{a-b}`, `v_a u_b = (1-et)^{-(a+b)}`, and the two-sided
/// inverse statements at `a = b`.
pub fn verify_inverses(a: &Coeff, b: &Coeff, ctx: &TwistContext) -> Result<Report> {
    let order = ctx.order();
    let mut report = Report::new("inverses");
    let one = UPoly::one(order);

    let cf_a = build_curly_f(a, ctx);
    let f_b = build_f(b, ctx);
    let expect = TensorPoly::tensor(&[&one, &series_power(&(a - b), ctx)])?;
    report.push(Check::compare_tensor(
        format!("curlyF_{a} F_{b} = 1(x)(1-et)^({})", a - b),
        &cf_a.mul(&f_b)?,
        &expect,
    ));

    let v_a = build_v(a, ctx)?;
    let u_b = build_u(b, ctx)?;
    let expect = series_power(&-(a + b), ctx);
    report.push(Check::compare_upoly(
        format!("v_{a} u_{b} = (1-et)^({})", -(a + b)),
        &v_a.mul(&u_b)?,
        &expect,
    ));

    if a == b {
        let f_a = build_f(a, ctx);
        let unit2 = TensorPoly::one(2, order)?;
        report.push(Check::compare_tensor(
            format!("curlyF_{a} F_{a} = 1(x)1"),
            &cf_a.mul(&f_a)?,
            &unit2,
        ));
        report.push(Check::compare_tensor(
            format!("F_{a} curlyF_{a} = 1(x)1"),
            &f_a.mul(&cf_a)?,
            &unit2,
        ));
        let u_a = build_u(a, ctx)?;
        let v_neg = build_v(&-a, ctx)?;
        report.push(Check::compare_upoly(
            format!("v_{} u_{a} = 1", -a),
            &v_neg.mul(&u_a)?,
            &one,
        ));
        report.push(Check::compare_upoly(
            format!("u_{a} v_{} = 1", -a),
            &u_a.mul(&v_neg)?,
            &one,
        ));
    }
    Ok(report)
}

/// `Δ₀(h^{[r]}) = Σ_i C(r,i) h^{[i]}_{-a} ⊗ h^{[r-i]}_a`.
pub fn delta0_falling(r: u32, a: &Coeff, order: u32) -> Result<Check> {
    let lhs = delta0(&falling(&Coeff::zero(), r, order));
    let mut rhs = TensorPoly::zero(2, order)?;
    for i in 0..=r {
        let left = falling(&-a, i, order);
        let right = falling(a, r - i, order);
        rhs = rhs.add(&TensorPoly::tensor(&[&left, &right])?.scale(&crate::algebra::binomial(r, i)))?;
    }
    Ok(Check::compare_tensor(
        format!("Delta0(h^[{r}]) split at a={a}"),
        &lhs,
        &rhs,
    ))
}

/// Inserts a unit slot at `pos` in a 2-fold tensor.
pub fn pad_unit(x: &TensorPoly, pos: usize) -> Result<TensorPoly> {
    TensorPoly::from_terms(
        3,
        x.order(),
        x.terms().map(|(d, s, c)| {
            let mut slots = s.to_vec();
            slots.insert(pos, Monomial::one());
            (d, slots, c.clone())
        }),
    )
}

fn delta0_as_tensor(m: &Monomial, order: u32) -> Result<TensorPoly> {
    TensorPoly::from_terms(
        2,
        order,
        delta0_monomial(m)
            .into_iter()
            .map(|((l, r), c)| (0, vec![l, r], c)),
    )
}

/// The two sides `(𝓕⊗1)(Δ₀⊗Id)(𝓕)` and `(1⊗𝓕)(Id⊗Δ₀)(𝓕)` for any 2-tensor.
pub fn cocycle_sides(cf: &TensorPoly) -> Result<(TensorPoly, TensorPoly)> {
    let order = cf.order();
    let lhs = pad_unit(cf, 2)?.mul(&cf.expand_slot(0, |m| delta0_as_tensor(m, order))?)?;
    let rhs = pad_unit(cf, 0)?.mul(&cf.expand_slot(1, |m| delta0_as_tensor(m, order))?)?;
    Ok((lhs, rhs))
}

/// [`cocycle_sides`] for `𝓕 = 𝓕_0`.
pub fn twist_equation_sides(ctx: &TwistContext) -> Result<(TensorPoly, TensorPoly)> {
    cocycle_sides(&build_curly_f(&Coeff::zero(), ctx))
}

/// The cocycle equation and both counit conditions for `𝓕 = 𝓕_0`.
pub fn verify_twist_equation(ctx: &TwistContext) -> Result<Report> {
    let order = ctx.order();
    let mut report = Report::new("twist");
    let (lhs, rhs) = twist_equation_sides(ctx)?;
    report.push(Check::compare_tensor(
        format!("cocycle p={} N={order}", ctx.p()),
        &lhs,
        &rhs,
    ));
    let cf = build_curly_f(&Coeff::zero(), ctx);
    let one = UPoly::one(order);
    report.push(Check::compare_upoly(
        format!("(eps(x)Id)(curlyF) = 1 p={}", ctx.p()),
        &cf.contract_to_upoly(0, eps_monomial)?,
        &one,
    ));
    report.push(Check::compare_upoly(
        format!("(Id(x)eps)(curlyF) = 1 p={}", ctx.p()),
        &cf.contract_to_upoly(1, eps_monomial)?,
        &one,
    ));
    Ok(report)
}

fn gen_poly(g: Generator, ctx: &TwistContext) -> UPoly {
    UPoly::from_generator(g, ctx.order())
}

fn int(i: i64) -> Coeff {
    Coeff::from_integer(i.into())
}

/// `(g⊗1) F_a = F_{a'} (g⊗1)` with `a' = a` for `L, N`, `a-2` for `M`,
/// `a-1` for `Y`.
pub fn check_slot1_commutation(g: Generator, a: &Coeff, ctx: &TwistContext) -> Result<Check> {
    let one = UPoly::one(ctx.order());
    let g1 = TensorPoly::tensor(&[&gen_poly(g, ctx), &one])?;
    let shift = match g.family() {
        Family::L | Family::N => int(0),
        Family::M => int(-2),
        Family::Y => int(-1),
    };
    let lhs = g1.mul(&build_f(a, ctx))?;
    let rhs = build_f(&(a + shift), ctx).mul(&g1)?;
    Ok(Check::compare_tensor(
        format!("({g}(x)1)F_{a} p={}", ctx.p()),
        &lhs,
        &rhs,
    ))
}

/// Right-hand side of `(1⊗g) F_a = F_a (1⊗g) + …`.
pub fn slot2_commutation_rhs(g: Generator, a: &Coeff, ctx: &TwistContext) -> Result<TensorPoly> {
    let order = ctx.order();
    let one = UPoly::one(order);
    let base = build_f(a, ctx).mul(&TensorPoly::tensor(&[&one, &gen_poly(g, ctx)])?)?;
    let correction = match g.family() {
        Family::L | Family::N => {
            let n = g.index();
            // F_{a+1}(h^{(1)}_a ⊗ Y_{n+p}) t - n/2 F_{a+2}(h^{(2)}_a ⊗ M_{2p+n}) t²
            let first = build_f(&(a + int(1)), ctx)
                .mul(&TensorPoly::tensor(&[&rising(a, 1, order), &gen_poly(ctx.y_shift(g)?, ctx)])?)?
                .shift_t(1);
            let second = build_f(&(a + int(2)), ctx)
                .mul(&TensorPoly::tensor(&[
                    &rising(a, 2, order),
                    &gen_poly(ctx.m_shift_twice(g)?, ctx),
                ])?)?
                .shift_t(2)
                .scale(&(&n / int(2)));
            let inner = first.sub(&second)?;
            if g.family() == Family::L {
                inner.scale(&(ctx.p() - n / int(2)))
            } else {
                inner
            }
        }
        Family::Y => build_f(&(a + int(1)), ctx)
            .mul(&TensorPoly::tensor(&[&rising(a, 1, order), &gen_poly(ctx.m_shift(g)?, ctx)])?)?
            .shift_t(1)
            .scale(&(ctx.p() - g.index())),
        Family::M => TensorPoly::zero(2, order)?,
    };
    base.add(&correction)
}

pub fn check_slot2_commutation(g: Generator, a: &Coeff, ctx: &TwistContext) -> Result<Check> {
    let one = UPoly::one(ctx.order());
    let lhs = TensorPoly::tensor(&[&one, &gen_poly(g, ctx)])?.mul(&build_f(a, ctx))?;
    let rhs = slot2_commutation_rhs(g, a, ctx)?;
    Ok(Check::compare_tensor(
        format!("(1(x){g})F_{a} p={}", ctx.p()),
        &lhs,
        &rhs,
    ))
}

/// Right-hand side of `g u_a = …`:
///
/// - `L_n u_a = u_a L_n - (p-n/2) t u_a h^{(1)}_{-a} (Y_{p+n} + t n/2 h^{(1)}_{-a-1} M_{2p+n})`
/// - `N_n u_a = u_a N_n - t u_a h^{(1)}_{-a} (Y_{p+n} + t n/2 h^{(1)}_{-a-1} M_{2p+n})`
/// - `Y_q u_a = u_{a+1} Y_q + (q-p) t u_{a+1} h^{(1)}_{-a-1} M_{p+q}`
/// - `M_n u_a = u_{a+2} M_n`
pub fn u_commutation_rhs(g: Generator, a: &Coeff, ctx: &TwistContext) -> Result<UPoly> {
    let order = ctx.order();
    let gp = gen_poly(g, ctx);
    match g.family() {
        Family::L | Family::N => {
            let n = g.index();
            let u_a = build_u(a, ctx)?;
            let m_part = rising(&(-a - int(1)), 1, order)
                .mul(&gen_poly(ctx.m_shift_twice(g)?, ctx))?
                .shift_t(1)
                .scale(&(&n / int(2)));
            let bracket = gen_poly(ctx.y_shift(g)?, ctx).add(&m_part)?;
            let mut corr = u_a.mul(&rising(&-a, 1, order))?.mul(&bracket)?.shift_t(1);
            if g.family() == Family::L {
                corr = corr.scale(&(ctx.p() - n / int(2)));
            }
            u_a.mul(&gp)?.sub(&corr)
        }
        Family::Y => {
            let u_next = build_u(&(a + int(1)), ctx)?;
            let corr = u_next
                .mul(&rising(&(-a - int(1)), 1, order))?
                .mul(&gen_poly(ctx.m_shift(g)?, ctx))?
                .shift_t(1)
                .scale(&(g.index() - ctx.p()));
            u_next.mul(&gp)?.add(&corr)
        }
        Family::M => build_u(&(a + int(2)), ctx)?.mul(&gp),
    }
}

pub fn check_u_commutation(g: Generator, a: &Coeff, ctx: &TwistContext) -> Result<Check> {
    let lhs = gen_poly(g, ctx).mul(&build_u(a, ctx)?)?;
    let rhs = u_commutation_rhs(g, a, ctx)?;
    Ok(Check::compare_upoly(
        format!("{g} u_{a} p={}", ctx.p()),
        &lhs,
        &rhs,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;

    fn ctx(p2: i64, order: u32) -> TwistContext {
        TwistContext::new(p2, order).unwrap()
    }

    #[test]
    fn context_validation() {
        assert_eq!(TwistContext::new(2, 3), Err(AlgebraError::EvenP(2)));
        assert!(TwistContext::new(-3, 0).is_ok());
        assert_eq!(TwistContext::default().p(), rational(1, 2));
    }

    #[test]
    fn curly_f_first_order() {
        let c = ctx(1, 1);
        let h = c.h_poly();
        let e = c.e_power(1);
        let expect = TensorPoly::one(2, 1)
            .unwrap()
            .sub(&TensorPoly::tensor(&[&h, &e]).unwrap().shift_t(1))
            .unwrap();
        assert_eq!(build_curly_f(&rational(0, 1), &c), expect);
        assert_eq!(
            build_curly_f(&rational(5, 2), &ctx(1, 0)),
            TensorPoly::one(2, 0).unwrap()
        );
    }

    #[test]
    fn f_second_order_term() {
        let c = ctx(1, 2);
        let f = build_f(&rational(0, 1), &c);
        let h = Generator::n(0);
        let e2 = Monomial::power(c.e(), 2);
        assert_eq!(f.coeff(2, &[Monomial::power(h, 2), e2.clone()]), rational(1, 2));
        assert_eq!(f.coeff(2, &[Monomial::generator(h), e2]), rational(1, 2));
    }

    #[test]
    fn u_and_v_first_order() {
        let c = ctx(1, 1);
        let he = c.h_poly().mul(&c.e_power(1)).unwrap().shift_t(1);
        let z = rational(0, 1);
        assert_eq!(build_u(&z, &c).unwrap(), UPoly::one(1).sub(&he).unwrap());
        assert_eq!(build_v(&z, &c).unwrap(), UPoly::one(1).add(&he).unwrap());
        assert_eq!(build_u(&rational(3, 1), &ctx(1, 0)).unwrap(), UPoly::one(0));
    }

    #[test]
    fn u_v_match_antipode_definition() {
        for a in [0, 1, -1] {
            let c = ctx(1, 3);
            let a = rational(a, 1);
            assert_eq!(build_u(&a, &c).unwrap(), u_from_twist(&a, &c).unwrap());
            assert_eq!(build_v(&a, &c).unwrap(), v_from_twist(&a, &c).unwrap());
        }
    }

    #[test]
    fn series_examples() {
        let c = ctx(1, 2);
        let e = c.e();
        let series = |coeffs: [i64; 3]| {
            UPoly::from_terms(
                2,
                (0..3).map(|m| (m as u32, Monomial::power(e, m as u32), rational(coeffs[m], 1))),
            )
        };
        assert_eq!(series_power(&rational(-1, 1), &c), series([1, 1, 1]));
        assert_eq!(series_power(&rational(2, 1), &c), series([1, -2, 1]));
        assert_eq!(series_power(&rational(2, 1), &ctx(1, 5)).len(), 3);
        let half = series_power(&rational(1, 2), &c);
        assert_eq!(half.coeff(1, &Monomial::power(e, 1)), rational(-1, 2));
        assert_eq!(half.coeff(2, &Monomial::power(e, 2)), rational(-1, 8));
    }

    #[test]
    fn inverse_examples() {
        let c = ctx(1, 3);
        for (a, b) in [(0, 0), (1, 0), (1, 1)] {
            let rep = verify_inverses(&rational(a, 1), &rational(b, 1), &c).unwrap();
            assert!(rep.passed(), "{:?}", rep.first_failure());
        }
    }

    #[test]
    fn delta0_falling_examples() {
        for (r, a) in [(1, 0), (1, 3), (2, 0)] {
            assert!(delta0_falling(r, &rational(a, 1), 3).unwrap().passed);
        }
    }

    #[test]
    fn twist_equation_low_order() {
        assert!(verify_twist_equation(&ctx(1, 0)).unwrap().passed());
        let rep = verify_twist_equation(&ctx(1, 3)).unwrap();
        assert!(rep.passed(), "{:?}", rep.first_failure());
    }

    #[test]
    fn commutation_checks_sample() {
        let c = ctx(1, 3);
        for g in [Generator::l(1), Generator::n(-1), Generator::y(3), Generator::m(2)] {
            for a in [0, 1] {
                let a = rational(a, 1);
                assert!(check_slot1_commutation(g, &a, &c).unwrap().passed);
                assert!(check_slot2_commutation(g, &a, &c).unwrap().passed);
                let chk = check_u_commutation(g, &a, &c).unwrap();
                assert!(chk.passed, "{chk}");
            }
        }
    }
}
