//! Undeformed Hopf structure, twisted homomorphism properties and the
//! closed-form comparison.

use esvq_core::algebra::{
    delta0, eps, eps_monomial, normal_order, s0, s0_monomial, Coeff, Family, Generator, Monomial,
    TensorPoly, UPoly,
};
use esvq_core::hopf::{
    antipode_finding, classical_limit, closed_form_antipode_variant, closed_form_coproduct,
    compare_closed_vs_twisted, AntipodeVariant, Quantization, Route,
};
use esvq_core::sample::Sampler;
use esvq_core::TwistContext;
use num_traits::One;
use proptest::prelude::*;

fn generator() -> impl Strategy<Value = Generator> {
    (0usize..4, -3i64..=3).prop_map(|(f, k)| {
        let family = [Family::M, Family::Y, Family::N, Family::L][f];
        let index2 = if family == Family::Y { 2 * k + 1 } else { 2 * k };
        Generator::new(family, index2).unwrap()
    })
}

fn scalar(series: &[Coeff], order: u32) -> UPoly {
    UPoly::from_terms(
        order,
        series.iter().enumerate().map(|(d, c)| (d as u32, Monomial::one(), c.clone())),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn undeformed_hopf_axioms(word in prop::collection::vec(generator(), 0..4)) {
        let order = 1;
        let x = normal_order(&word, order).unwrap();
        let d = delta0(&x);
        let ident = |m: &Monomial| Ok(UPoly::term(0, m.clone(), Coeff::one(), order));
        let s = |m: &Monomial| {
            Ok(UPoly::from_terms(order, s0_monomial(m)?.into_iter().map(|(m, c)| (0, m, c))))
        };
        let target = scalar(&eps(&x), order);
        prop_assert_eq!(d.multiply_out(s, ident).unwrap(), target.clone());
        prop_assert_eq!(d.multiply_out(ident, s).unwrap(), target);
        prop_assert_eq!(d.contract_to_upoly(0, eps_monomial).unwrap(), x.clone());
        prop_assert_eq!(d.contract_to_upoly(1, eps_monomial).unwrap(), x.clone());
        let co = |m: &Monomial| {
            TensorPoly::from_terms(
                2,
                order,
                esvq_core::algebra::delta0_monomial(m).into_iter().map(|((a, b), c)| (0, vec![a, b], c)),
            )
        };
        prop_assert_eq!(d.expand_slot(0, co).unwrap(), d.expand_slot(1, co).unwrap());
    }

    #[test]
    fn undeformed_maps_respect_products(a in prop::collection::vec(generator(), 1..3),
                                         b in prop::collection::vec(generator(), 1..3)) {
        let order = 1;
        let x = normal_order(&a, order).unwrap();
        let y = normal_order(&b, order).unwrap();
        let xy = x.mul(&y).unwrap();
        prop_assert_eq!(delta0(&xy), delta0(&x).mul(&delta0(&y)).unwrap());
        prop_assert_eq!(s0(&xy).unwrap(), s0(&y).unwrap().mul(&s0(&x).unwrap()).unwrap());
    }
}

#[test]
fn twisted_structure_is_multiplicative_on_random_pairs() {
    let q = Quantization::new(TwistContext::new(1, 3).unwrap()).unwrap();
    let mut s = Sampler::new(5, 4);
    for _ in 0..50 {
        let x = s.product(2, 3).unwrap();
        let y = s.product(2, 3).unwrap();
        let xy = x.mul(&y).unwrap();
        assert_eq!(
            q.coproduct(&xy).unwrap(),
            q.coproduct(&x).unwrap().mul(&q.coproduct(&y).unwrap()).unwrap(),
            "x={x} y={y}"
        );
        assert_eq!(
            q.antipode(&xy).unwrap(),
            q.antipode(&y).unwrap().mul(&q.antipode(&x).unwrap()).unwrap(),
            "x={x} y={y}"
        );
        for c in classical_limit(&q, &x).unwrap() {
            assert!(c.passed, "{c}");
        }
    }
}

#[test]
fn coproduct_closed_forms_agree_with_twist() {
    for p2 in [1, -1, 3] {
        let q = Quantization::new(TwistContext::new(p2, 3).unwrap()).unwrap();
        let families = [Family::L, Family::N, Family::M, Family::Y];
        let rep = compare_closed_vs_twisted(&q, &families, 6, &[Route::Coproduct]).unwrap();
        assert!(rep.passed(), "{}", rep.summary_line());
    }
}

#[test]
fn m_and_n_antipodes_agree_with_twist() {
    let q = Quantization::new(TwistContext::new(1, 3).unwrap()).unwrap();
    let rep = compare_closed_vs_twisted(&q, &[Family::M, Family::N], 6, &[Route::Antipode]).unwrap();
    assert!(rep.passed(), "{}", rep.summary_line());
}

#[test]
fn twisted_antipode_of_l_and_y_takes_the_derived_coefficients() {
    for p2 in [1, -1, 3] {
        let ctx = TwistContext::new(p2, 3).unwrap();
        let q = Quantization::new(ctx).unwrap();
        for g in esvq_core::algebra::all_generators(6) {
            if !matches!(g.family(), Family::L | Family::Y) {
                continue;
            }
            let f = antipode_finding(&q, g).unwrap();
            assert!(f.axiom_holds, "{}", f.describe());
            assert!(f.matches_derived, "{}", f.describe());
            let derived = closed_form_antipode_variant(g, &ctx, AntipodeVariant::Derived).unwrap();
            assert_eq!(derived, q.antipode(&UPoly::from_generator(g, 3)).unwrap());
        }
    }
}

#[test]
fn coproduct_of_m5_at_order_2() {
    let ctx = TwistContext::new(1, 2).unwrap();
    let q = Quantization::new(ctx).unwrap();
    let m5 = UPoly::from_generator(Generator::m(5), 2);
    assert_eq!(q.coproduct(&m5).unwrap(), closed_form_coproduct(Generator::m(5), &ctx).unwrap());
}
