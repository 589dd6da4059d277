use crate::algebra::PolyMatrix;

/// The four order-2 building blocks. `I` is the identity, `P` the swap
/// permutation, `Q` the diagonal sign flip and `R` the rotation; the pairs
/// (P, Q) and (I, R) are anti-amicable, all other pairs amicable.
#[derive(Debug, Clone)]
pub struct BaseBlocks {
    pub i: PolyMatrix,
    pub p: PolyMatrix,
    pub q: PolyMatrix,
    pub r: PolyMatrix,
}

pub fn base2_blocks() -> BaseBlocks {
    BaseBlocks {
        i: PolyMatrix::from_int_rows(&[&[1, 0], &[0, 1]]),
        p: PolyMatrix::from_int_rows(&[&[0, 1], &[1, 0]]),
        q: PolyMatrix::from_int_rows(&[&[1, 0], &[0, -1]]),
        r: PolyMatrix::from_int_rows(&[&[0, 1], &[-1, 0]]),
    }
}

/// Sylvester Hadamard matrix of order 2^k: the k-fold Kronecker power of
/// `[[1, 1], [1, -1]]`, with the empty power being `[1]`.
pub fn sylvester_hadamard(k: u32) -> PolyMatrix {
    let core = PolyMatrix::from_int_rows(&[&[1, 1], &[1, -1]]);
    let mut h = PolyMatrix::identity(1);
    for _ in 0..k {
        h = h.kron(&core);
    }
    h
}
