use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::VarId;

use super::DesignError;

/// The claimed type of an orthogonal design: positive integer weights paired
/// with the distinct variables that carry them, in a significant order (the
/// first entry is the distinguished variable for the doubling construction).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeVector {
    weights: Vec<u64>,
    vars: Vec<VarId>,
}

impl TypeVector {
    pub fn new(pairs: Vec<(u64, VarId)>) -> Result<Self, DesignError> {
        if pairs.is_empty() {
            return Err(DesignError::InvalidTypeVector(
                "type vector must be nonempty".into(),
            ));
        }
        let mut seen = BTreeSet::new();
        for &(w, v) in &pairs {
            if w == 0 {
                return Err(DesignError::InvalidTypeVector(
                    "weights must be positive".into(),
                ));
            }
            if !seen.insert(v) {
                return Err(DesignError::InvalidTypeVector(
                    "variables must be pairwise distinct".into(),
                ));
            }
        }
        let (weights, vars) = pairs.into_iter().unzip();
        Ok(TypeVector { weights, vars })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn vars(&self) -> &[VarId] {
        &self.vars
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u64, VarId)> + '_ {
        self.weights.iter().copied().zip(self.vars.iter().copied())
    }

    pub fn weight_sum(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn var_set(&self) -> BTreeSet<VarId> {
        self.vars.iter().copied().collect()
    }

    /// Weights in ascending order, for order-insensitive comparisons.
    pub fn weight_multiset(&self) -> Vec<u64> {
        let mut w = self.weights.clone();
        w.sort_unstable();
        w
    }

    /// Concatenation; the variable sets must stay disjoint.
    pub fn concat(&self, other: &TypeVector) -> Result<TypeVector, DesignError> {
        if !self.var_set().is_disjoint(&other.var_set()) {
            return Err(DesignError::OverlappingVariables);
        }
        TypeVector::new(self.pairs().chain(other.pairs()).collect())
    }

    pub fn rename(&self, map: &BTreeMap<VarId, VarId>) -> TypeVector {
        TypeVector {
            weights: self.weights.clone(),
            vars: self.vars.iter().map(|v| *map.get(v).unwrap_or(v)).collect(),
        }
    }

    /// Same pairs reordered ascending by weight (ties by variable id).
    pub fn sorted_ascending(&self) -> TypeVector {
        let mut pairs: Vec<(u64, VarId)> = self.pairs().collect();
        pairs.sort();
        let (weights, vars) = pairs.into_iter().unzip();
        TypeVector { weights, vars }
    }
}
