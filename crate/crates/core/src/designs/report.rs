use std::fmt;

use crate::algebra::{Polynomial, VarRegistry};

/// Evidence for a failed verification: either the offending matrix entry or
/// the identifier of the violated condition.
#[derive(Debug, Clone)]
pub enum Witness {
    Entry {
        row: usize,
        col: usize,
        entry: Polynomial,
    },
    Condition {
        id: String,
    },
}

/// Outcome of one verification. A failing report always carries a witness;
/// the constructors enforce that.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    claim: String,
    witness: Option<Witness>,
}

impl VerificationReport {
    pub fn pass(claim: impl Into<String>) -> Self {
        VerificationReport {
            claim: claim.into(),
            witness: None,
        }
    }

    pub fn fail(claim: impl Into<String>, witness: Witness) -> Self {
        VerificationReport {
            claim: claim.into(),
            witness: Some(witness),
        }
    }

    pub fn fail_entry(
        claim: impl Into<String>,
        row: usize,
        col: usize,
        entry: &Polynomial,
    ) -> Self {
        Self::fail(
            claim,
            Witness::Entry {
                row,
                col,
                entry: entry.clone(),
            },
        )
    }

    pub fn fail_condition(claim: impl Into<String>, id: impl Into<String>) -> Self {
        Self::fail(claim, Witness::Condition { id: id.into() })
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub fn claim(&self) -> &str {
        &self.claim
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    /// Prefixes the claim with the name of an enclosing verification.
    pub fn in_context(mut self, context: &str) -> Self {
        self.claim = format!("{context}: {}", self.claim);
        self
    }

    /// Rendering with registry display names for witness polynomials.
    pub fn display(&self, reg: &VarRegistry) -> String {
        match &self.witness {
            None => format!("PASS {}", self.claim),
            Some(Witness::Entry { row, col, entry }) => format!(
                "FAIL {}: entry ({row}, {col}) = {}",
                self.claim,
                entry.display(reg)
            ),
            Some(Witness::Condition { id }) => format!("FAIL {}: {id}", self.claim),
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "PASS {}", self.claim),
            Some(Witness::Entry { row, col, entry }) => {
                write!(f, "FAIL {}: entry ({row}, {col}) = {entry}", self.claim)
            }
            Some(Witness::Condition { id }) => write!(f, "FAIL {}: {id}", self.claim),
        }
    }
}
