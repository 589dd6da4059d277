use std::collections::BTreeMap;

use crate::algebra::{PolyMatrix, VarId, VarRegistry};

use super::typevector::TypeVector;
use super::verify::{verify_aod, verify_od};
use super::DesignError;

/// An AOD `(C; D1 + D2)` with the D side split into a one-variable part and
/// the rest, the shape consumed by the product-design combiner.
#[derive(Debug, Clone)]
pub struct AodSplit {
    c: PolyMatrix,
    d1: PolyMatrix,
    d2: PolyMatrix,
    type_c: TypeVector,
    type_d1: TypeVector,
    type_d2: TypeVector,
}

impl AodSplit {
    /// Validates the split: `d1` is an OD in a single variable, `d1 + d2`
    /// together with `c` forms an AOD, and the variable sets are disjoint.
    pub fn new(
        c: PolyMatrix,
        d1: PolyMatrix,
        d2: PolyMatrix,
        type_c: TypeVector,
        type_d1: TypeVector,
        type_d2: TypeVector,
    ) -> Result<Self, DesignError> {
        if type_d1.len() != 1 {
            return Err(DesignError::InvalidTypeVector(
                "D1 must carry exactly one variable".into(),
            ));
        }
        let rd1 = verify_od(&d1, &type_d1);
        if !rd1.passed() {
            return Err(DesignError::Unverified {
                context: "aod split: D1",
                report: rd1,
            });
        }
        let d = &d1 + &d2;
        let type_d = type_d1.concat(&type_d2)?;
        let r = verify_aod(&c, &d, &type_c, &type_d)?;
        if !r.passed() {
            return Err(DesignError::Unverified {
                context: "aod split",
                report: r,
            });
        }
        Ok(AodSplit {
            c,
            d1,
            d2,
            type_c,
            type_d1,
            type_d2,
        })
    }

    pub fn c(&self) -> &PolyMatrix {
        &self.c
    }

    pub fn d1(&self) -> &PolyMatrix {
        &self.d1
    }

    pub fn d2(&self) -> &PolyMatrix {
        &self.d2
    }

    pub fn d(&self) -> PolyMatrix {
        &self.d1 + &self.d2
    }

    pub fn type_c(&self) -> &TypeVector {
        &self.type_c
    }

    pub fn type_d1(&self) -> &TypeVector {
        &self.type_d1
    }

    pub fn type_d2(&self) -> &TypeVector {
        &self.type_d2
    }

    pub fn order(&self) -> usize {
        self.c.order()
    }

    /// Weight of the single D1 variable.
    pub fn v_weight(&self) -> u64 {
        self.type_d1.weights()[0]
    }

    /// Copy with all variables renamed onto fresh registry ids.
    pub fn with_fresh_vars(&self, reg: &mut VarRegistry) -> AodSplit {
        let mut vars = self.type_c.var_set();
        vars.extend(self.type_d1.var_set());
        vars.extend(self.type_d2.var_set());
        let map: BTreeMap<VarId, VarId> = super::fresh_renaming(&vars, reg);
        AodSplit {
            c: self.c.rename_vars(&map),
            d1: self.d1.rename_vars(&map),
            d2: self.d2.rename_vars(&map),
            type_c: self.type_c.rename(&map),
            type_d1: self.type_d1.rename(&map),
            type_d2: self.type_d2.rename(&map),
        }
    }
}
