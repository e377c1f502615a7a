//! The Lie algebra `L`, its enveloping algebra in PBW form, and truncated
//! series over it.

mod coeff;
mod generator;
mod monomial;
mod normal;
mod poly;
mod standard;
mod tensor;

pub use coeff::{binomial, factorial, half, quarter, rational, Coeff};
pub use generator::{all_generators, bracket, bracket_terms, jacobi_check, Family, Generator, JacobiReport};
pub use monomial::Monomial;
pub use normal::{
    clear_cache, mul_monomials, normal_order, normal_order_by_rewriting, normal_order_terms,
    RewriteStrategy,
};
pub use poly::UPoly;
pub use standard::{delta0, delta0_monomial, eps, eps_monomial, s0, s0_monomial};
pub use tensor::TensorPoly;
