//! Python bindings: `Poly`, `Tensor`, `Quantization` and the verification
//! suites.

use pyo3::basic::CompareOp;
use pyo3::exceptions::{PyNotImplementedError, PyValueError};
use pyo3::prelude::*;

use esvq_core::expr::{parse_expression, parse_generator, parse_half_integer};
use esvq_core::hopf::{self, closed_form_antipode, closed_form_coproduct};
use esvq_core::render::{render_tensor, render_upoly, Format};
use esvq_core::suites::{run_suite, Suite, SuiteConfig};
use esvq_core::{TensorPoly, TwistContext, UPoly};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn context(p: &str, order: u32) -> PyResult<TwistContext> {
    let p2 = parse_half_integer(p)
        .ok_or_else(|| PyValueError::new_err(format!("p must be a/2 with a odd, got '{p}'")))?;
    TwistContext::new(p2, order).map_err(value_err)
}

/// An element of the enveloping algebra over `Q[[t]]`, truncated at `order`.
#[pyclass(name = "Poly", frozen)]
struct PyPoly(UPoly);

#[pymethods]
impl PyPoly {
    /// Parses an expression such as `"L[1]*M[2] + 1/2*t*Y[-1/2]"`.
    #[new]
    #[pyo3(signature = (expr, order=3))]
    fn new(expr: &str, order: u32) -> PyResult<Self> {
        parse_expression(expr, order).map(PyPoly).map_err(value_err)
    }

    #[getter]
    fn order(&self) -> u32 {
        self.0.order()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `(t_degree, monomial, coefficient)` triples in canonical order.
    fn terms(&self) -> Vec<(u32, String, String)> {
        self.0.terms().map(|(d, m, c)| (d, m.to_string(), c.to_string())).collect()
    }

    fn text(&self) -> String {
        render_upoly(&self.0, Format::Text)
    }

    fn json(&self) -> String {
        render_upoly(&self.0, Format::Json)
    }

    fn latex(&self) -> String {
        render_upoly(&self.0, Format::Latex)
    }

    fn __str__(&self) -> String {
        self.text()
    }

    fn __repr__(&self) -> String {
        format!("Poly({:?}, order={})", self.text(), self.0.order())
    }

    fn __add__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        self.0.add(&other.0).map(PyPoly).map_err(value_err)
    }

    fn __sub__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        self.0.sub(&other.0).map(PyPoly).map_err(value_err)
    }

    fn __mul__(&self, other: &PyPoly) -> PyResult<PyPoly> {
        self.0.mul(&other.0).map(PyPoly).map_err(value_err)
    }

    fn __neg__(&self) -> PyPoly {
        PyPoly(self.0.neg())
    }

    fn __pow__(&self, k: u32, modulo: Option<u32>) -> PyResult<PyPoly> {
        if modulo.is_some() {
            return Err(PyNotImplementedError::new_err("modular power"));
        }
        self.0.pow(k).map(PyPoly).map_err(value_err)
    }

    fn __richcmp__(&self, other: &PyPoly, op: CompareOp) -> PyResult<bool> {
        match op {
            CompareOp::Eq => Ok(self.0 == other.0),
            CompareOp::Ne => Ok(self.0 != other.0),
            _ => Err(PyNotImplementedError::new_err("Poly is not ordered")),
        }
    }
}

/// An element of the 2- or 3-fold tensor power.
#[pyclass(name = "Tensor", frozen)]
struct PyTensor(TensorPoly);

#[pymethods]
impl PyTensor {
    #[getter]
    fn arity(&self) -> usize {
        self.0.arity()
    }

    #[getter]
    fn order(&self) -> u32 {
        self.0.order()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn text(&self) -> String {
        render_tensor(&self.0, Format::Text)
    }

    fn json(&self) -> String {
        render_tensor(&self.0, Format::Json)
    }

    fn latex(&self) -> String {
        render_tensor(&self.0, Format::Latex)
    }

    fn __str__(&self) -> String {
        self.text()
    }

    fn __repr__(&self) -> String {
        format!("Tensor({:?})", self.text())
    }

    fn __richcmp__(&self, other: &PyTensor, op: CompareOp) -> PyResult<bool> {
        match op {
            CompareOp::Eq => Ok(self.0 == other.0),
            CompareOp::Ne => Ok(self.0 != other.0),
            _ => Err(PyNotImplementedError::new_err("Tensor is not ordered")),
        }
    }
}

/// Twisted coproduct and antipode at `(p, order)`.
#[pyclass(name = "Quantization", frozen)]
struct PyQuantization(hopf::Quantization);

#[pymethods]
impl PyQuantization {
    #[new]
    #[pyo3(signature = (p="1/2", order=3))]
    fn new(p: &str, order: u32) -> PyResult<Self> {
        let ctx = context(p, order)?;
        hopf::Quantization::new(ctx).map(PyQuantization).map_err(value_err)
    }

    fn coproduct(&self, x: &PyPoly) -> PyResult<PyTensor> {
        self.0.coproduct(&x.0).map(PyTensor).map_err(value_err)
    }

    fn antipode(&self, x: &PyPoly) -> PyResult<PyPoly> {
        self.0.antipode(&x.0).map(PyPoly).map_err(value_err)
    }

    /// The closed-form coproduct of a single generator such as `"L[2]"`.
    fn closed_coproduct(&self, generator: &str) -> PyResult<PyTensor> {
        let g = parse_generator(generator).map_err(value_err)?;
        closed_form_coproduct(g, self.0.ctx()).map(PyTensor).map_err(value_err)
    }

    fn closed_antipode(&self, generator: &str) -> PyResult<PyPoly> {
        let g = parse_generator(generator).map_err(value_err)?;
        closed_form_antipode(g, self.0.ctx()).map(PyPoly).map_err(value_err)
    }
}

/// `[a, b] = ab - ba`.
#[pyfunction]
fn bracket(a: &PyPoly, b: &PyPoly) -> PyResult<PyPoly> {
    let ab = a.0.mul(&b.0).map_err(value_err)?;
    let ba = b.0.mul(&a.0).map_err(value_err)?;
    ab.sub(&ba).map(PyPoly).map_err(value_err)
}

/// Runs a named suite; returns `(passed, summary, failing check lines)`.
#[pyfunction]
#[pyo3(signature = (suite, p="1/2", order=3, index_range=4, seed=esvq_core::sample::DEFAULT_SEED))]
fn verify(
    py: Python<'_>,
    suite: &str,
    p: &str,
    order: u32,
    index_range: i64,
    seed: u64,
) -> PyResult<(bool, String, Vec<String>)> {
    let suite: Suite = suite.parse().map_err(PyValueError::new_err)?;
    let ctx = context(p, order)?;
    let cfg = SuiteConfig { p2: ctx.p2(), order, index_range, seed, ..SuiteConfig::default() };
    let report = py.detach(|| run_suite(suite, &cfg, &mut |_| {})).map_err(value_err)?;
    let failures = report.checks.iter().filter(|c| !c.passed).map(|c| c.to_string()).collect();
    Ok((report.passed(), report.summary_line(), failures))
}

#[pymodule]
fn esvq(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoly>()?;
    m.add_class::<PyTensor>()?;
    m.add_class::<PyQuantization>()?;
    m.add_function(wrap_pyfunction!(bracket, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
