//! Exact symbolic construction and verification of orthogonal designs.
//!
//! The crate works entirely over matrices of sparse multivariate polynomials
//! with rational coefficients, so every verification is bit-exact: an
//! orthogonal design either satisfies its defining Gram identity or the
//! verifier produces a concrete witness entry that violates it.
//!
//! Modules:
//! - [`algebra`]: polynomials, polynomial matrices, Kronecker/Hadamard/Gram
//!   products, circulant generators, and the integer fast path for Gram
//!   computations of large designs.
//! - [`designs`]: axiom verifiers for orthogonal designs (OD), amicable
//!   orthogonal designs (AOD), product designs (PD), and the amicability /
//!   disjointness relations.
//! - [`constructions`]: named builders for the catalog of designs, the
//!   PD x AOD combiner, AOD doubling, Wolfe's signed-permutation sets, and
//!   the order-512/1024 designs.
//! - [`numtheory`]: Legendre and Hilbert symbols, rational-family existence
//!   tests, the Radon-Hurwitz / Wolfe / Kawada-Iwahori bounds, and the
//!   executable non-existence decision for PD(n; 1,1,1; 1,1,1; n-3).

pub mod algebra;
pub mod constructions;
pub mod designs;
pub mod numtheory;

pub use algebra::{
    decompose_by_variable, AlgebraError, Coeff, IntMatrix, Monomial, PolyMatrix, Polynomial,
    VarDecomposition, VarId, VarRegistry,
};
pub use designs::{
    collapse, fresh_vars, is_full, verify_amicable, verify_antiamicable, verify_aod,
    verify_disjoint, verify_od, verify_pairwise_amicable, verify_pd, AodSplit, DesignError,
    TypeVector, VerificationReport, Witness,
};
