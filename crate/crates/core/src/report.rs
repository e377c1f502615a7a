//! Check outcomes and per-term mismatch diagnostics.

use std::fmt;

use crate::algebra::{Coeff, Monomial, TensorPoly, UPoly};

/// First differing term between two sides of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub degree: u32,
    pub slots: Vec<Monomial>,
    pub lhs: Coeff,
    pub rhs: Coeff,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slots: Vec<String> = self.slots.iter().map(|m| m.to_string()).collect();
        write!(
            f,
            "t^{} [{}]: lhs={} rhs={}",
            self.degree,
            slots.join(" (x) "),
            self.lhs,
            self.rhs
        )
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub mismatch: Option<Mismatch>,
    pub note: Option<String>,
}

impl Check {
    pub fn pass(label: impl Into<String>) -> Self {
        Check {
            label: label.into(),
            passed: true,
            mismatch: None,
            note: None,
        }
    }

    pub fn fail(label: impl Into<String>, note: impl Into<String>) -> Self {
        Check {
            label: label.into(),
            passed: false,
            mismatch: None,
            note: Some(note.into()),
        }
    }

    pub fn from_bool(label: impl Into<String>, ok: bool) -> Self {
        Check {
            passed: ok,
            ..Check::pass(label)
        }
    }

    pub fn compare_upoly(label: impl Into<String>, lhs: &UPoly, rhs: &UPoly) -> Self {
        let mismatch = lhs.first_difference(rhs).map(|(degree, m, l, r)| Mismatch {
            degree,
            slots: vec![m],
            lhs: l,
            rhs: r,
        });
        Check {
            label: label.into(),
            passed: mismatch.is_none() && lhs.order() == rhs.order(),
            mismatch,
            note: None,
        }
    }

    pub fn compare_tensor(label: impl Into<String>, lhs: &TensorPoly, rhs: &TensorPoly) -> Self {
        let mismatch = lhs.first_difference(rhs).map(|(degree, slots, l, r)| Mismatch {
            degree,
            slots,
            lhs: l,
            rhs: r,
        });
        Check {
            label: label.into(),
            passed: mismatch.is_none() && lhs.arity() == rhs.arity(),
            mismatch,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", if self.passed { "PASS" } else { "FAIL" }, self.label)?;
        if let Some(m) = &self.mismatch {
            write!(f, ": {m}")?;
        }
        if let Some(n) = &self.note {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    /// `PASS n=<checks>` or `FAIL at <label> (<failed>/<checks> failed)`.
    pub fn summary_line(&self) -> String {
        match self.first_failure() {
            None => format!("PASS n={}", self.checks.len()),
            Some(c) => {
                let failed = self.checks.iter().filter(|c| !c.passed).count();
                format!("FAIL at {} ({}/{} failed)", c.label, failed, self.checks.len())
            }
        }
    }
}
