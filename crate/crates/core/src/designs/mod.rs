//! Axiom verifiers for orthogonal designs and their relatives.
//!
//! Verifiers never panic on bad designs: every failure comes back as a
//! [`VerificationReport`] carrying the first violated axiom and a witness.
//! Checks run in a fixed order (entry shape, then Gram, then type match) so
//! reports are deterministic and usable as golden values.

mod report;
mod split;
mod typevector;
mod verify;

pub use report::{VerificationReport, Witness};
pub use split::AodSplit;
pub use typevector::TypeVector;
pub use verify::{
    collapse, is_full, verify_amicable, verify_antiamicable, verify_aod, verify_disjoint,
    verify_od, verify_pairwise_amicable, verify_pd,
};

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::algebra::{AlgebraError, PolyMatrix, VarId, VarRegistry};

#[derive(Debug, Clone, Error)]
pub enum DesignError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("invalid type vector: {0}")]
    InvalidTypeVector(String),
    #[error("variable sets overlap")]
    OverlappingVariables,
    #[error("{context} requires a verified design: {report}")]
    Unverified {
        context: &'static str,
        report: VerificationReport,
    },
}

/// Injective renaming of `vars` onto fresh registry ids.
pub fn fresh_renaming(vars: &BTreeSet<VarId>, reg: &mut VarRegistry) -> BTreeMap<VarId, VarId> {
    vars.iter()
        .map(|&v| {
            let base = reg.name(v).to_string();
            (v, reg.fresh(&base))
        })
        .collect()
}

/// Copy of `a` with every variable renamed onto ids unused so far.
pub fn fresh_vars(a: &PolyMatrix, reg: &mut VarRegistry) -> PolyMatrix {
    let map = fresh_renaming(&a.vars(), reg);
    a.rename_vars(&map)
}
