//! Named builders for the design catalog.
//!
//! Every builder post-verifies its output through the [`crate::designs`]
//! verifiers before returning it; an assembled candidate that fails
//! verification is an error, never a silent return value.

mod blocks;
mod builders;
mod catalog;
mod combine;
mod tables;
mod wolfe;

pub use blocks::{base2_blocks, sylvester_hadamard, BaseBlocks};
pub use builders::{
    aod168_circulant, aod16_vars, aod24_vars, aod48_circulant, aod72_circulant, aod_2, aod_2_split,
    pd12, pd8, PdTriple,
};
pub use catalog::{catalog, catalog_entry, CatalogEntry, Design};
pub use combine::{combine_pd_aod, combined_type_weights, double_aod, CombineVariant};
pub use tables::{construction_16n, construction_24n, BuildMode, OctetInputs};
pub use wolfe::{aod512, od1024, wolfe_sets, WolfeSets};

use num_traits::{One, Signed};
use thiserror::Error;

use crate::algebra::{AlgebraError, PolyMatrix};
use crate::designs::{verify_aod, DesignError, TypeVector, VerificationReport};

#[derive(Debug, Clone, Error)]
pub enum ConstructionError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("precondition violated: {condition}")]
    Precondition { condition: String },
    #[error("assembled {design} failed verification: {report}")]
    PostVerification {
        design: String,
        report: VerificationReport,
    },
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl ConstructionError {
    fn precondition(condition: impl Into<String>) -> Self {
        ConstructionError::Precondition {
            condition: condition.into(),
        }
    }

    fn failed_report(condition: &str, report: &VerificationReport) -> Self {
        ConstructionError::Precondition {
            condition: format!("{condition}: {report}"),
        }
    }
}

/// A verified amicable orthogonal design pair.
#[derive(Debug, Clone)]
pub struct AodPair {
    pub c: PolyMatrix,
    pub d: PolyMatrix,
    pub type_c: TypeVector,
    pub type_d: TypeVector,
}

impl AodPair {
    /// Runs the full AOD verification on the stored pair.
    pub fn verify(&self) -> Result<VerificationReport, DesignError> {
        verify_aod(&self.c, &self.d, &self.type_c, &self.type_d)
    }

    pub fn order(&self) -> usize {
        self.c.order()
    }

    /// The order-2n matrix [[C, D], [D, -C]] with the concatenated type.
    pub fn doubled_od(&self) -> Result<(PolyMatrix, TypeVector), DesignError> {
        let m = PolyMatrix::stack2(&self.c, &self.d, &self.d, &(-&self.c))
            .map_err(DesignError::Algebra)?;
        let t = self.type_c.concat(&self.type_d)?;
        Ok((m, t))
    }
}

/// Reads the type of an OD off its Gram form: `gram = (sum c_v v^2) I`
/// with positive integer weights. Pairs come back ascending by weight.
pub(crate) fn infer_od_type(m: &PolyMatrix) -> Result<TypeVector, ConstructionError> {
    let gram = m.gram();
    let q = gram.is_scalar_identity().ok_or_else(|| {
        ConstructionError::precondition("gram matrix is not a scalar multiple of the identity")
    })?;
    let mut pairs = Vec::new();
    for (mono, coeff) in q.terms() {
        let var = match mono.factors() {
            [(v, 2)] => *v,
            _ => {
                return Err(ConstructionError::precondition(format!(
                    "gram form {q} is not a sum of squares"
                )))
            }
        };
        if !coeff.denom().is_one() || !coeff.is_positive() {
            return Err(ConstructionError::precondition(format!(
                "gram form {q} has a non-positive-integer weight"
            )));
        }
        pairs.push((*coeff.numer() as u64, var));
    }
    pairs.sort_unstable();
    TypeVector::new(pairs).map_err(ConstructionError::Design)
}
