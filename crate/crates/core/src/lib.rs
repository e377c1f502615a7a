//! Exact symbolic engine for the Drinfeld-twist quantization of the extended
//! Schrödinger–Virasoro Lie algebra.
//!
//! The crate works in `U(L)[[t]]` truncated at a fixed `t`-order:
//!
//! - [`algebra`]: generators and structure constants, PBW monomials, normal
//!   ordering, and the truncated series types [`UPoly`] and [`TensorPoly`]
//!   with the undeformed Hopf maps `Δ₀`, `S₀`, `ε`.
//! - [`factorial`]: shifted rising/falling factorials in `h = N_0` and the
//!   commutation rules that move generators past powers of `h` and `e = Y_p`.
//! - [`twist`]: the twist pair `𝓕_a`/`F_a`, the elements `u_a`/`v_a`, the
//!   series `(1-et)^a`, and checkers for the twist and inversion identities.
//! - [`hopf`]: the twisted coproduct and antipode, their closed forms, Hopf
//!   axiom verification and the classical Yang–Baxter check.
//! - [`expr`] and [`render`]: expression parsing and text/JSON/LaTeX output.
//! - [`suites`]: named verification suites shared by the CLI and tests.
//!
//! All coefficients are exact rationals; every identity is checked with zero
//! tolerance.

pub mod algebra;
pub mod error;
pub mod expr;
pub mod factorial;
pub mod hopf;
pub mod render;
pub mod report;
pub mod sample;
pub mod suites;
pub mod twist;

pub use algebra::{
    bracket, jacobi_check, normal_order, Coeff, Family, Generator, Monomial, TensorPoly, UPoly,
};
pub use error::AlgebraError;
pub use report::{Check, Mismatch, Report};
pub use twist::TwistContext;

