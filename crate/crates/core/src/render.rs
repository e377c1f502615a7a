//! Text, JSON and LaTeX serialization.
//!
//! Every format lists terms by ascending `t`-degree, then by descending
//! lexicographic monomial tuple (so the unit monomial comes last). Output is
//! reproducible byte for byte.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::algebra::{Coeff, Generator, Monomial, TensorPoly, UPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Latex,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            other => Err(format!("unknown format '{other}'")),
        }
    }
}

pub fn render_upoly(x: &UPoly, format: Format) -> String {
    match format {
        Format::Text => upoly_text(x),
        Format::Json => upoly_json(x),
        Format::Latex => upoly_latex(x),
    }
}

pub fn render_tensor(x: &TensorPoly, format: Format) -> String {
    match format {
        Format::Text => tensor_text(x),
        Format::Json => tensor_json(x),
        Format::Latex => tensor_latex(x),
    }
}

fn upoly_terms(x: &UPoly) -> Vec<(u32, &Monomial, &Coeff)> {
    let mut v: Vec<_> = x.terms().collect();
    v.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(a.1)));
    v
}

fn tensor_terms(x: &TensorPoly) -> Vec<(u32, &[Monomial], &Coeff)> {
    let mut v: Vec<_> = x.terms().collect();
    v.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(a.1)));
    v
}

// ---- text ----

fn join_signed(parts: Vec<(bool, String)>) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (negative, body)) in parts.into_iter().enumerate() {
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

fn t_text(d: u32) -> Option<String> {
    match d {
        0 => None,
        1 => Some("t".to_string()),
        _ => Some(format!("t^{d}")),
    }
}

pub fn upoly_text(x: &UPoly) -> String {
    let parts = upoly_terms(x)
        .into_iter()
        .map(|(d, m, c)| {
            let mut factors = Vec::new();
            let abs = c.abs();
            if !m.is_one() {
                factors.push(m.to_string());
            }
            factors.extend(t_text(d));
            let body = if factors.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                factors.join("*")
            } else {
                format!("{}*{}", abs, factors.join("*"))
            };
            (c.is_negative(), body)
        })
        .collect();
    join_signed(parts)
}

pub fn tensor_text(x: &TensorPoly) -> String {
    let parts = tensor_terms(x)
        .into_iter()
        .map(|(d, slots, c)| {
            let abs = c.abs();
            let mut prefix = Vec::new();
            if !abs.is_one() {
                prefix.push(abs.to_string());
            }
            prefix.extend(t_text(d));
            let body: Vec<String> = slots.iter().map(|m| m.to_string()).collect();
            let body = body.join(" (x) ");
            let text = if prefix.is_empty() {
                body
            } else {
                format!("{}*{}", prefix.join("*"), body)
            };
            (c.is_negative(), text)
        })
        .collect();
    join_signed(parts)
}

// ---- JSON ----

#[derive(Serialize)]
struct GenJson {
    fam: String,
    num: i64,
    den: i64,
}

#[derive(Serialize)]
struct TermJson {
    t: u32,
    monos: Vec<Vec<(GenJson, u32)>>,
    coeff: String,
}

#[derive(Serialize)]
struct PolyJson {
    order: u32,
    terms: Vec<TermJson>,
}

fn gen_json(g: Generator) -> GenJson {
    let (num, den) = if g.index2() % 2 == 0 {
        (g.index2() / 2, 1)
    } else {
        (g.index2(), 2)
    };
    GenJson {
        fam: g.family().symbol().to_string(),
        num,
        den,
    }
}

fn mono_json(m: &Monomial) -> Vec<(GenJson, u32)> {
    m.factors().iter().map(|&(g, k)| (gen_json(g), k)).collect()
}

fn coeff_json(c: &Coeff) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn upoly_json(x: &UPoly) -> String {
    let doc = PolyJson {
        order: x.order(),
        terms: upoly_terms(x)
            .into_iter()
            .map(|(d, m, c)| TermJson {
                t: d,
                monos: vec![mono_json(m)],
                coeff: coeff_json(c),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("plain structs serialize")
}

pub fn tensor_json(x: &TensorPoly) -> String {
    let doc = PolyJson {
        order: x.order(),
        terms: tensor_terms(x)
            .into_iter()
            .map(|(d, slots, c)| TermJson {
                t: d,
                monos: slots.iter().map(mono_json).collect(),
                coeff: coeff_json(c),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("plain structs serialize")
}

// ---- LaTeX ----

fn int_latex(n: &BigInt) -> String {
    n.to_string()
}

fn coeff_latex(abs: &Coeff) -> String {
    if abs.denom().is_one() {
        int_latex(abs.numer())
    } else {
        format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
    }
}

fn gen_latex(g: Generator) -> String {
    let sym = g.family().symbol();
    let i2 = g.index2();
    if i2.is_even() {
        format!("{}_{{{}}}", sym, i2 / 2)
    } else {
        format!("{}_{{{}/2}}", sym, i2)
    }
}

fn mono_latex(m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    m.factors()
        .iter()
        .map(|&(g, k)| {
            if k == 1 {
                gen_latex(g)
            } else {
                format!("{}^{{{}}}", gen_latex(g), k)
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn t_latex(d: u32) -> Option<String> {
    match d {
        0 => None,
        1 => Some("t".to_string()),
        _ => Some(format!("t^{{{d}}}")),
    }
}

fn latex_term(c: &Coeff, d: u32, body: String, body_is_unit: bool) -> (bool, String) {
    let abs = c.abs();
    let mut parts = Vec::new();
    if !abs.is_one() || (body_is_unit && d == 0) {
        parts.push(coeff_latex(&abs));
    }
    if !body_is_unit {
        parts.push(body);
    }
    parts.extend(t_latex(d));
    (c.is_negative(), parts.join(" \\, "))
}

pub fn upoly_latex(x: &UPoly) -> String {
    let parts = upoly_terms(x)
        .into_iter()
        .map(|(d, m, c)| latex_term(c, d, mono_latex(m), m.is_one()))
        .collect();
    join_signed(parts)
}

pub fn tensor_latex(x: &TensorPoly) -> String {
    let parts = tensor_terms(x)
        .into_iter()
        .map(|(d, slots, c)| {
            let body: Vec<String> = slots.iter().map(mono_latex).collect();
            latex_term(c, d, format!("\\left({}\\right)", body.join(" \\otimes ")), false)
        })
        .collect();
    join_signed(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{delta0, rational};

    #[test]
    fn text_of_delta0() {
        let l1 = UPoly::from_generator(Generator::l(1), 3);
        assert_eq!(tensor_text(&delta0(&l1)), "L_1 (x) 1 + 1 (x) L_1");
    }

    #[test]
    fn json_of_zero() {
        assert_eq!(upoly_json(&UPoly::zero(3)), r#"{"order":3,"terms":[]}"#);
    }

    #[test]
    fn json_term_layout() {
        let x = UPoly::term(
            1,
            Monomial::from_factors(vec![(Generator::y(-3), 2), (Generator::l(2), 1)]).unwrap(),
            rational(-1, 2),
            2,
        );
        assert_eq!(
            upoly_json(&x),
            r#"{"order":2,"terms":[{"t":1,"monos":[[[{"fam":"Y","num":-3,"den":2},2],[{"fam":"L","num":2,"den":1},1]]],"coeff":"-1/2"}]}"#
        );
    }

    #[test]
    fn text_signs_and_powers() {
        let x = UPoly::from_terms(
            3,
            [
                (0, Monomial::one(), rational(-2, 1)),
                (1, Monomial::generator(Generator::y(1)), rational(1, 3)),
                (2, Monomial::power(Generator::n(0), 2), rational(-1, 1)),
            ],
        );
        assert_eq!(upoly_text(&x), "-2 + 1/3*Y_{1/2}*t - N_0^2*t^2");
        assert_eq!(
            upoly_latex(&x),
            "-2 + \\frac{1}{3} \\, Y_{1/2} \\, t - N_{0}^{2} \\, t^{2}"
        );
    }
}
