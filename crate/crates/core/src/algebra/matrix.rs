use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Neg, Sub};

use rayon::prelude::*;

use super::decompose::decompose_by_variable;
use super::poly::{Coeff, Polynomial};
use super::vars::VarId;
use super::AlgebraError;

/// Orders at and above this run row-parallel products and route Gram
/// computations through the integer decomposition when entries are linear.
const PAR_MIN_ORDER: usize = 64;

/// Square matrix over [`Polynomial`], the carrier of every design matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    order: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(order: usize) -> Self {
        assert!(order > 0, "matrix order must be positive");
        PolyMatrix {
            order,
            entries: vec![Polynomial::zero(); order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zero(order);
        for i in 0..order {
            m.set(i, i, Polynomial::one());
        }
        m
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Self {
        assert!(order > 0, "matrix order must be positive");
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { order, entries }
    }

    /// Builds from integer rows, handy for the fixed order-2 blocks.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let order = rows.len();
        Self::from_fn(order, |i, j| {
            assert_eq!(rows[i].len(), order, "matrix must be square");
            Polynomial::integer(rows[i][j])
        })
    }

    /// Circulant matrix: entry (i, j) is `entries[(j - i) mod n]`.
    pub fn circ(entries: &[Polynomial]) -> Result<Self, AlgebraError> {
        if entries.is_empty() {
            return Err(AlgebraError::EmptyCirculant);
        }
        let n = entries.len();
        Ok(Self::from_fn(n, |i, j| entries[(n + j - i) % n].clone()))
    }

    /// Back-circulant matrix: entry (i, j) is `entries[(i + j) mod n]`.
    pub fn backcirc(entries: &[Polynomial]) -> Result<Self, AlgebraError> {
        if entries.is_empty() {
            return Err(AlgebraError::EmptyCirculant);
        }
        let n = entries.len();
        Ok(Self::from_fn(n, |i, j| entries[(i + j) % n].clone()))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.order + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn has_zero_entry(&self) -> bool {
        self.entries.iter().any(|p| p.is_zero())
    }

    pub fn transpose(&self) -> PolyMatrix {
        Self::from_fn(self.order, |i, j| self.get(j, i).clone())
    }

    /// Exact polynomial matrix product.
    pub fn mat_mul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix, AlgebraError> {
        self.check_order(rhs)?;
        let n = self.order;
        let compute_row = |i: usize, out: &mut [Polynomial]| {
            for (k, p) in self.row(i).iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                for (j, q) in rhs.row(k).iter().enumerate() {
                    if !q.is_zero() {
                        out[j].add_mul_assign(p, q);
                    }
                }
            }
        };
        Ok(self.build_rows(n, compute_row))
    }

    /// `self * rhs^T` without materialising the transpose.
    pub fn mul_transpose(&self, rhs: &PolyMatrix) -> Result<PolyMatrix, AlgebraError> {
        self.check_order(rhs)?;
        let n = self.order;
        let compute_row = |i: usize, out: &mut [Polynomial]| {
            for (j, cell) in out.iter_mut().enumerate().take(n) {
                for (a, b) in self.row(i).iter().zip(rhs.row(j)) {
                    if !a.is_zero() && !b.is_zero() {
                        cell.add_mul_assign(a, b);
                    }
                }
            }
        };
        Ok(self.build_rows(n, compute_row))
    }

    fn build_rows(
        &self,
        n: usize,
        compute_row: impl Fn(usize, &mut [Polynomial]) + Sync,
    ) -> PolyMatrix {
        let mut entries = vec![Polynomial::zero(); n * n];
        if n >= PAR_MIN_ORDER {
            entries
                .par_chunks_mut(n)
                .enumerate()
                .for_each(|(i, out)| compute_row(i, out));
        } else {
            for (i, out) in entries.chunks_mut(n).enumerate() {
                compute_row(i, out);
            }
        }
        PolyMatrix { order: n, entries }
    }

    /// Kronecker product with the usual block structure.
    pub fn kron(&self, rhs: &PolyMatrix) -> PolyMatrix {
        let (n, m) = (self.order, rhs.order);
        let mut out = PolyMatrix::zero(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * m + k, j * m + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Entrywise (Hadamard) product.
    pub fn hadamard_product(&self, rhs: &PolyMatrix) -> Result<PolyMatrix, AlgebraError> {
        self.check_order(rhs)?;
        Ok(PolyMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    /// `self * self^T`, the Gram matrix of the rows.
    ///
    /// When every entry is an integer linear form the product routes through
    /// [`decompose_by_variable`] and integer matrix arithmetic; the result is
    /// identical to [`Self::gram_direct`] either way.
    pub fn gram(&self) -> PolyMatrix {
        if self.order >= PAR_MIN_ORDER {
            if let Ok(dec) = decompose_by_variable(self) {
                return dec.gram();
            }
        }
        self.gram_direct()
    }

    /// Gram matrix by direct polynomial multiplication.
    pub fn gram_direct(&self) -> PolyMatrix {
        let n = self.order;
        // The Gram matrix is symmetric entry-for-entry, so compute i <= j.
        let dot = |i: usize, j: usize| {
            let mut cell = Polynomial::zero();
            for (a, b) in self.row(i).iter().zip(self.row(j)) {
                if !a.is_zero() && !b.is_zero() {
                    cell.add_mul_assign(a, b);
                }
            }
            cell
        };
        let upper: Vec<Vec<Polynomial>> = if n >= PAR_MIN_ORDER {
            (0..n)
                .into_par_iter()
                .map(|i| (i..n).map(|j| dot(i, j)).collect())
                .collect()
        } else {
            (0..n)
                .map(|i| (i..n).map(|j| dot(i, j)).collect())
                .collect()
        };
        let mut out = PolyMatrix::zero(n);
        for (i, row) in upper.into_iter().enumerate() {
            for (off, cell) in row.into_iter().enumerate() {
                let j = i + off;
                if j > i {
                    out.set(j, i, cell.clone());
                }
                out.set(i, j, cell);
            }
        }
        out
    }

    /// Gram matrix through the integer-decomposition fast path.
    pub fn gram_via_decomposition(&self) -> Result<PolyMatrix, AlgebraError> {
        Ok(decompose_by_variable(self)?.gram())
    }

    /// `q` such that the matrix equals `q * I`, if it does.
    pub fn is_scalar_identity(&self) -> Option<Polynomial> {
        let q = self.get(0, 0);
        for i in 0..self.order {
            for j in 0..self.order {
                let e = self.get(i, j);
                if i == j {
                    if e != q {
                        return None;
                    }
                } else if !e.is_zero() {
                    return None;
                }
            }
        }
        Some(q.clone())
    }

    /// Entrywise substitution of variables by polynomials.
    pub fn substitute(&self, assignment: &BTreeMap<VarId, Polynomial>) -> PolyMatrix {
        PolyMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .map(|p| p.substitute(assignment))
                .collect(),
        }
    }

    /// Injective variable renaming.
    pub fn rename_vars(&self, map: &BTreeMap<VarId, VarId>) -> PolyMatrix {
        PolyMatrix {
            order: self.order,
            entries: self.entries.iter().map(|p| p.rename(map)).collect(),
        }
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        let mut out = BTreeSet::new();
        for p in &self.entries {
            p.collect_vars(&mut out);
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> PolyMatrix {
        PolyMatrix {
            order: self.order,
            entries: self.entries.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn scale_poly(&self, q: &Polynomial) -> PolyMatrix {
        PolyMatrix {
            order: self.order,
            entries: self.entries.iter().map(|p| p * q).collect(),
        }
    }

    /// Order-2n block matrix [[tl, tr], [bl, br]].
    pub fn stack2(
        tl: &PolyMatrix,
        tr: &PolyMatrix,
        bl: &PolyMatrix,
        br: &PolyMatrix,
    ) -> Result<PolyMatrix, AlgebraError> {
        tl.check_order(tr)?;
        tl.check_order(bl)?;
        tl.check_order(br)?;
        let n = tl.order;
        Ok(Self::from_fn(2 * n, |i, j| {
            let block = match (i < n, j < n) {
                (true, true) => tl,
                (true, false) => tr,
                (false, true) => bl,
                (false, false) => br,
            };
            block.get(i % n, j % n).clone()
        }))
    }

    fn check_order(&self, rhs: &PolyMatrix) -> Result<(), AlgebraError> {
        if self.order != rhs.order {
            return Err(AlgebraError::DimensionMismatch {
                left: self.order,
                right: rhs.order,
            });
        }
        Ok(())
    }
}

impl Add for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.order, rhs.order, "matrix orders differ");
        PolyMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.order, rhs.order, "matrix orders differ");
        PolyMatrix {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &PolyMatrix {
    type Output = PolyMatrix;
    fn neg(self) -> PolyMatrix {
        PolyMatrix {
            order: self.order,
            entries: self.entries.iter().map(|p| -p).collect(),
        }
    }
}
