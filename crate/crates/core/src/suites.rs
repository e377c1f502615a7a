//! Named verification suites. Each suite streams its checks through a
//! callback in a fixed order and returns the collected [`Report`].

use std::fmt;
use std::str::FromStr;

use crate::algebra::{
    all_generators, jacobi_check, normal_order_by_rewriting, normal_order_terms, rational, Coeff,
    Family, RewriteStrategy, UPoly,
};
use crate::error::Result;
use crate::factorial::{
    check_ad_power_expand, check_binomial_identities, check_commute_h_shift,
    check_commute_past_e_power, check_factorial_products, FactorialKind, ShiftTarget,
};
use crate::hopf::{
    classical_limit, compare_closed_vs_twisted, verify_cybe, verify_hopf_axioms, HopfSamples,
    Quantization, Route,
};
use crate::report::{Check, Report};
use crate::sample::{Sampler, DEFAULT_SEED};
use crate::twist::{
    check_slot1_commutation, check_slot2_commutation, check_u_commutation, delta0_falling,
    verify_inverses, verify_twist_equation, TwistContext,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Jacobi,
    Pbw,
    Identities,
    Twist,
    Inverses,
    Theorem,
    Axioms,
    Cybe,
    All,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Jacobi,
        Suite::Pbw,
        Suite::Identities,
        Suite::Twist,
        Suite::Inverses,
        Suite::Theorem,
        Suite::Axioms,
        Suite::Cybe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Jacobi => "jacobi",
            Suite::Pbw => "pbw",
            Suite::Identities => "identities",
            Suite::Twist => "twist",
            Suite::Inverses => "inverses",
            Suite::Theorem => "theorem",
            Suite::Axioms => "axioms",
            Suite::Cybe => "cybe",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .iter()
            .chain([Suite::All].iter())
            .find(|x| x.name() == s)
            .copied()
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    /// `2p`, odd.
    pub p2: i64,
    pub order: u32,
    /// Bound on `|index2|` for generator grids.
    pub index_range: i64,
    pub seed: u64,
    /// Random words/triples for the PBW suite.
    pub pbw_samples: usize,
    /// Random products added to the Hopf axiom samples.
    pub product_samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            p2: 1,
            order: 3,
            index_range: 4,
            seed: DEFAULT_SEED,
            pbw_samples: 200,
            product_samples: 50,
        }
    }
}

impl SuiteConfig {
    pub fn ctx(&self) -> Result<TwistContext> {
        TwistContext::new(self.p2, self.order)
    }
}

/// Shift parameters used by the identity grids.
pub fn shift_grid() -> Vec<Coeff> {
    vec![
        rational(0, 1),
        rational(1, 1),
        rational(-1, 1),
        rational(2, 1),
        rational(-2, 1),
        rational(1, 2),
    ]
}

/// Largest `r`, `s`, `t` in the factorial grids.
pub const FACTORIAL_MAX: u32 = 5;

struct Sink<'a> {
    report: Report,
    on_check: &'a mut dyn FnMut(&Check),
}

impl Sink<'_> {
    fn push(&mut self, check: Check) {
        (self.on_check)(&check);
        self.report.push(check);
    }

    fn extend(&mut self, report: Report) {
        for c in report.checks {
            self.push(c);
        }
    }
}

/// Runs `suite`, calling `on_check` for each check as it completes.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig, on_check: &mut dyn FnMut(&Check)) -> Result<Report> {
    let mut sink = Sink { report: Report::new(suite.name()), on_check };
    run_into(suite, cfg, &mut sink)?;
    Ok(sink.report)
}

fn run_into(suite: Suite, cfg: &SuiteConfig, sink: &mut Sink<'_>) -> Result<()> {
    let ctx = cfg.ctx()?;
    match suite {
        Suite::All => {
            for s in Suite::ALL {
                run_into(s, cfg, sink)?;
            }
        }
        Suite::Jacobi => sink.push(jacobi(cfg.index_range)?),
        Suite::Pbw => pbw(cfg, sink)?,
        Suite::Identities => identities(&ctx, cfg.index_range, sink)?,
        Suite::Twist => sink.extend(verify_twist_equation(&ctx)?),
        Suite::Inverses => {
            for a in shift_grid() {
                for b in shift_grid() {
                    sink.extend(verify_inverses(&a, &b, &ctx)?);
                }
            }
        }
        Suite::Theorem => {
            let q = Quantization::new(ctx)?;
            let families = [Family::L, Family::N, Family::M, Family::Y];
            let routes = [Route::Coproduct, Route::Antipode];
            sink.extend(compare_closed_vs_twisted(&q, &families, cfg.index_range, &routes)?);
        }
        Suite::Axioms => {
            let q = Quantization::new(ctx)?;
            let samples = hopf_samples(cfg)?;
            sink.extend(verify_hopf_axioms(&q, &samples)?);
            for x in &samples.singles {
                for c in classical_limit(&q, x)? {
                    sink.push(c);
                }
            }
        }
        Suite::Cybe => sink.extend(verify_cybe(&ctx)?),
    }
    Ok(())
}

pub fn jacobi(bound: i64) -> Result<Check> {
    let rep = jacobi_check(bound)?;
    let label = format!("Jacobi identity on {} triples |index2|<={bound}", rep.triples_checked);
    Ok(match rep.first_violation {
        None => Check::pass(label),
        Some((x, y, z)) => Check::fail(label, format!("violated at ({x}, {y}, {z})")),
    })
}

/// Confluence (two rewriting strategies and the memoized path agree) on
/// random words, and associativity on random triples.
fn pbw(cfg: &SuiteConfig, sink: &mut Sink<'_>) -> Result<()> {
    let mut s = Sampler::new(cfg.seed, cfg.index_range);
    let order = cfg.order;
    let mut bad_confluence = None;
    for i in 0..cfg.pbw_samples {
        let word = s.word(2, 7);
        let mut left = normal_order_by_rewriting(&word, RewriteStrategy::LeftmostFirst)?;
        let mut right = normal_order_by_rewriting(&word, RewriteStrategy::RightmostFirst)?;
        let mut fast = normal_order_terms(&word)?;
        left.sort();
        right.sort();
        fast.sort();
        if bad_confluence.is_none() && !(left == right && right == fast) {
            let text: Vec<String> = word.iter().map(|g| g.to_string()).collect();
            bad_confluence = Some(format!("sample {i}: word {}", text.join("*")));
        }
    }
    let label = format!("confluence on {} random words", cfg.pbw_samples);
    sink.push(match bad_confluence {
        None => Check::pass(label),
        Some(note) => Check::fail(label, note),
    });

    let mut first_bad = None;
    for i in 0..cfg.pbw_samples {
        let x = s.upoly(order, 2, 2)?;
        let y = s.upoly(order, 2, 2)?;
        let z = s.upoly(order, 2, 2)?;
        let c = Check::compare_upoly(
            format!("associativity sample {i}"),
            &x.mul(&y)?.mul(&z)?,
            &x.mul(&y.mul(&z)?)?,
        );
        if !c.passed && first_bad.is_none() {
            first_bad = Some(c);
        }
    }
    sink.push(first_bad.unwrap_or_else(|| {
        Check::pass(format!("associativity on {} random triples", cfg.pbw_samples))
    }));
    Ok(())
}

/// Every commutation and factorial identity used by the twist construction,
/// over the shift grid, `r, s, t <= 5` and generators with
/// `|index2| <= bound`.
fn identities(ctx: &TwistContext, bound: i64, sink: &mut Sink<'_>) -> Result<()> {
    let order = ctx.order();
    let grid = shift_grid();
    let gens = all_generators(bound);

    for a in &grid {
        for s in 0..=FACTORIAL_MAX {
            for t in 0..=FACTORIAL_MAX {
                sink.extend(check_factorial_products(a, s, t, order)?);
            }
        }
        for b in &grid {
            for r in 0..=FACTORIAL_MAX {
                sink.extend(check_binomial_identities(a, b, r, order)?);
            }
        }
    }

    for &x in &gens {
        for &y in &gens {
            for m in 0..=3 {
                sink.push(check_ad_power_expand(x, y, m, order)?);
            }
        }
    }

    let targets = gens
        .iter()
        .map(|&g| ShiftTarget::Gen(g))
        .chain((0..=3).map(ShiftTarget::EPower));
    for target in targets {
        for kind in [FactorialKind::Rising, FactorialKind::Falling] {
            for a in &grid {
                for i in 0..=FACTORIAL_MAX {
                    sink.push(check_commute_h_shift(target, kind, a, i, ctx)?);
                }
            }
        }
    }

    for a in &grid {
        for b in &grid {
            sink.extend(verify_inverses(a, b, ctx)?);
        }
        for r in 0..=FACTORIAL_MAX {
            sink.push(delta0_falling(r, a, order)?);
        }
    }

    for &g in &gens {
        for r in 0..=FACTORIAL_MAX {
            sink.push(check_commute_past_e_power(g, r, ctx)?);
        }
        for a in &grid {
            sink.push(check_slot1_commutation(g, a, ctx)?);
            sink.push(check_slot2_commutation(g, a, ctx)?);
            sink.push(check_u_commutation(g, a, ctx)?);
        }
    }
    Ok(())
}

/// All generators in the grid plus `product_samples` random products of
/// degree at most two as singles; pairs of random generators and products
/// for the homomorphism checks.
pub fn hopf_samples(cfg: &SuiteConfig) -> Result<HopfSamples> {
    let order = cfg.order;
    let mut s = Sampler::new(cfg.seed, cfg.index_range);
    let mut singles: Vec<UPoly> = vec![UPoly::one(order)];
    singles.extend(all_generators(cfg.index_range).into_iter().map(|g| UPoly::from_generator(g, order)));
    let mut pairs = Vec::new();
    for _ in 0..cfg.product_samples {
        let x = s.product(2, order)?;
        let y = UPoly::from_generator(s.generator(), order);
        singles.push(x.clone());
        pairs.push((x, y));
    }
    Ok(HopfSamples { singles, pairs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn cybe_streams_one_check() {
        let mut seen = Vec::new();
        let rep = run_suite(Suite::Cybe, &SuiteConfig::default(), &mut |c| seen.push(c.label.clone()))
            .unwrap();
        assert!(rep.passed());
        assert_eq!(seen.len(), rep.len());
        assert!(rep.summary_line().starts_with("PASS"));
    }

    #[test]
    fn small_pbw() {
        let cfg = SuiteConfig { pbw_samples: 20, ..SuiteConfig::default() };
        let rep = run_suite(Suite::Pbw, &cfg, &mut |_| {}).unwrap();
        assert!(rep.passed(), "{}", rep.summary_line());
    }
}
