//! Factorial calculus and twist identities over the full parameter grids.

use esvq_core::algebra::rational;
use esvq_core::factorial::{falling, gen_binomial, rising};
use esvq_core::suites::{run_suite, shift_grid, Suite, SuiteConfig};
use esvq_core::twist::{build_curly_f, build_f, series_power, verify_twist_equation};
use esvq_core::{Coeff, TwistContext, UPoly};
use num_traits::{One, Zero};

/// `h^{(n)}_a` evaluated at an integer `h` directly from its definition.
fn rising_at(h: i64, a: &Coeff, n: u32) -> Coeff {
    (0..n).fold(Coeff::one(), |acc, k| acc * (Coeff::from_integer(h.into()) + a + Coeff::from_integer(k.into())))
}

/// Evaluates a polynomial in `h = N_0` (no `t`) at an integer point.
fn eval_h(x: &UPoly, h: i64) -> Coeff {
    let mut acc = Coeff::zero();
    for (d, m, c) in x.terms() {
        assert_eq!(d, 0);
        let k = m.degree();
        assert!(m.factors().iter().all(|(g, _)| g.family() == esvq_core::Family::N && g.index2() == 0));
        acc += c * Coeff::from_integer(h.pow(k).into());
    }
    acc
}

#[test]
fn factorials_evaluate_pointwise() {
    for a in shift_grid() {
        for n in 0..=5 {
            let r = rising(&a, n, 0);
            let f = falling(&a, n, 0);
            for h in -3..=3 {
                assert_eq!(eval_h(&r, h), rising_at(h, &a, n));
                // h^{[n]}_a = h^{(n)}_{a-n+1}
                let shifted = &a - Coeff::from_integer((n as i64 - 1).into());
                assert_eq!(eval_h(&f, h), rising_at(h, &shifted, n));
            }
        }
    }
}

#[test]
fn gen_binomial_matches_pascal() {
    for a in -4..=6i64 {
        let a = Coeff::from_integer(a.into());
        for r in 1..=5 {
            let lhs = gen_binomial(&(&a + Coeff::one()), r);
            let rhs = gen_binomial(&a, r) + gen_binomial(&a, r - 1);
            assert_eq!(lhs, rhs);
        }
    }
    assert_eq!(gen_binomial(&rational(1, 2), 2), rational(-1, 8));
}

#[test]
fn identity_suite_over_all_p() {
    for p2 in [1, -1, 3] {
        let cfg = SuiteConfig { p2, order: 3, ..SuiteConfig::default() };
        let rep = run_suite(Suite::Identities, &cfg, &mut |_| {}).unwrap();
        assert!(rep.passed(), "{}", rep.summary_line());
    }
}

#[test]
fn twist_equation_at_order_4() {
    for p2 in [1, -1, 3] {
        let rep = verify_twist_equation(&TwistContext::new(p2, 4).unwrap()).unwrap();
        assert!(rep.passed(), "{}", rep.summary_line());
    }
}

#[test]
fn twist_pair_is_mutually_inverse() {
    let ctx = TwistContext::new(1, 4).unwrap();
    let zero = Coeff::zero();
    let one = esvq_core::TensorPoly::one(2, 4).unwrap();
    let cf = build_curly_f(&zero, &ctx);
    let f = build_f(&zero, &ctx);
    assert_eq!(cf.mul(&f).unwrap(), one);
    assert_eq!(f.mul(&cf).unwrap(), one);
}

#[test]
fn series_power_laws() {
    let ctx = TwistContext::new(1, 5).unwrap();
    for a in shift_grid() {
        for b in shift_grid() {
            let lhs = series_power(&a, &ctx).mul(&series_power(&b, &ctx)).unwrap();
            assert_eq!(lhs, series_power(&(&a + &b), &ctx));
        }
    }
    // (1-et)^1 as a literal
    let e = ctx.e_power(1).shift_t(1);
    assert_eq!(series_power(&rational(1, 1), &ctx), UPoly::one(5).sub(&e).unwrap());
}

#[test]
fn cocycle_check_rejects_a_truncated_twist() {
    use esvq_core::twist::cocycle_sides;
    let ctx = TwistContext::new(1, 3).unwrap();
    // 1⊗1 - h⊗e t agrees with the twist to first order only
    let h = ctx.h_poly();
    let e = ctx.e_power(1);
    let first = esvq_core::TensorPoly::tensor(&[&h, &e]).unwrap().shift_t(1);
    let broken = esvq_core::TensorPoly::one(2, 3).unwrap().sub(&first).unwrap();
    let (l, r) = cocycle_sides(&broken).unwrap();
    assert_ne!(l, r);
    assert_eq!(l.with_order(1), r.with_order(1));
    let (l, r) = cocycle_sides(&build_curly_f(&Coeff::zero(), &ctx)).unwrap();
    assert_eq!(l, r);
    assert!(l.len() > 10);
}
