use std::collections::BTreeMap;

use num_traits::One;
use rayon::prelude::*;

use super::matrix::PolyMatrix;
use super::poly::{Coeff, Monomial, Polynomial};
use super::vars::VarId;
use super::AlgebraError;

const PAR_MIN_ORDER: usize = 64;

/// Dense square integer matrix, the fast carrier for Gram computation on
/// large designs. Products skip zero entries, so the signed-permutation and
/// design-coefficient matrices that show up here stay cheap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(order: usize) -> Self {
        assert!(order > 0, "matrix order must be positive");
        IntMatrix {
            order,
            data: vec![0; order * order],
        }
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self::zero(order);
        for i in 0..order {
            m.data[i * order + i] = 1;
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.order + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.order;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j];
            }
        }
        out
    }

    fn sparse_cols(&self) -> Vec<Vec<(usize, i64)>> {
        let n = self.order;
        let mut cols = vec![Vec::new(); n];
        for i in 0..n {
            for (j, &v) in self.row(i).iter().enumerate() {
                if v != 0 {
                    cols[j].push((i, v));
                }
            }
        }
        cols
    }

    /// `self * rhs^T` by sparse scatter over the nonzeros of both factors.
    pub fn mul_transpose(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.order, rhs.order, "matrix orders differ");
        let n = self.order;
        // Column k of rhs^T is row k of rhs; scatter needs rhs by column of
        // the untransposed factor, i.e. rhs columns indexed by k.
        let rhs_cols = rhs.sparse_cols();
        let mut data = vec![0i64; n * n];
        let fill_row = |i: usize, out: &mut [i64]| {
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for &(j, b) in &rhs_cols[k] {
                    let prod = a.checked_mul(b).expect("integer matrix overflow");
                    out[j] = out[j].checked_add(prod).expect("integer matrix overflow");
                }
            }
        };
        if n >= PAR_MIN_ORDER {
            data.par_chunks_mut(n)
                .enumerate()
                .for_each(|(i, out)| fill_row(i, out));
        } else {
            for (i, out) in data.chunks_mut(n).enumerate() {
                fill_row(i, out);
            }
        }
        IntMatrix { order: n, data }
    }

    pub fn to_poly(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.order, |i, j| Polynomial::integer(self.get(i, j)))
    }
}

/// Split of a linear-form matrix into integer coefficient matrices:
/// `source = constant + sum_v v * part(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarDecomposition {
    order: usize,
    constant: IntMatrix,
    parts: Vec<(VarId, IntMatrix)>,
}

impl VarDecomposition {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn constant(&self) -> &IntMatrix {
        &self.constant
    }

    /// Per-variable coefficient matrices, ascending by [`VarId`].
    pub fn parts(&self) -> &[(VarId, IntMatrix)] {
        &self.parts
    }

    /// Rebuilds the source matrix exactly.
    pub fn reassemble(&self) -> PolyMatrix {
        let mut out = self.constant.to_poly();
        for (v, m) in &self.parts {
            let vp = Polynomial::var(*v);
            out = &out + &m.to_poly().scale_poly(&vp);
        }
        out
    }

    /// Gram matrix of the source: for `A = C0 + sum_i x_i A_i`,
    /// `A A^T = C0 C0^T + sum_i x_i (A_i C0^T + C0 A_i^T)
    ///  + sum_i x_i^2 A_i A_i^T + sum_{i<j} x_i x_j (A_i A_j^T + A_j A_i^T)`.
    pub fn gram(&self) -> PolyMatrix {
        let n = self.order;
        let mut out = PolyMatrix::zero(n);
        let mut accumulate = |mono: Monomial, g: &IntMatrix| {
            for i in 0..n {
                for (j, &v) in g.row(i).iter().enumerate() {
                    if v != 0 {
                        let mut cell = out.get(i, j).clone();
                        cell.add_term(mono.clone(), Coeff::from_integer(v));
                        out.set(i, j, cell);
                    }
                }
            }
        };
        let has_const = !self.constant.is_zero();
        if has_const {
            accumulate(
                Monomial::one(),
                &self.constant.mul_transpose(&self.constant),
            );
        }
        for (idx, (v, m)) in self.parts.iter().enumerate() {
            if has_const {
                let cross = add_int(
                    &m.mul_transpose(&self.constant),
                    &self.constant.mul_transpose(m),
                );
                accumulate(Monomial::var(*v), &cross);
            }
            accumulate(
                Monomial::var(*v).mul(&Monomial::var(*v)),
                &m.mul_transpose(m),
            );
            for (w, other) in &self.parts[idx + 1..] {
                let cross = add_int(&m.mul_transpose(other), &other.mul_transpose(m));
                accumulate(Monomial::var(*v).mul(&Monomial::var(*w)), &cross);
            }
        }
        out
    }
}

fn add_int(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let mut out = a.clone();
    for (o, &v) in out.data.iter_mut().zip(&b.data) {
        *o = o.checked_add(v).expect("integer matrix overflow");
    }
    out
}

/// Splits a matrix of integer linear forms by variable.
///
/// Fails on the first entry that has degree above one or a non-integer
/// coefficient, reporting its position.
pub fn decompose_by_variable(a: &PolyMatrix) -> Result<VarDecomposition, AlgebraError> {
    let n = a.order();
    let mut constant = IntMatrix::zero(n);
    let mut parts: BTreeMap<VarId, IntMatrix> = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            for (m, c) in a.get(i, j).terms() {
                if m.total_degree() > 1 {
                    return Err(AlgebraError::NonlinearEntry { row: i, col: j });
                }
                if !c.denom().is_one() {
                    return Err(AlgebraError::NonIntegerCoefficient { row: i, col: j });
                }
                let value = *c.numer();
                match m.as_single_var() {
                    Some(v) => parts
                        .entry(v)
                        .or_insert_with(|| IntMatrix::zero(n))
                        .set(i, j, value),
                    None => constant.set(i, j, value),
                }
            }
        }
    }
    Ok(VarDecomposition {
        order: n,
        constant,
        parts: parts.into_iter().collect(),
    })
}
