use std::collections::BTreeMap;

use crate::algebra::{PolyMatrix, Polynomial, VarRegistry};
use crate::designs::{collapse, verify_od, AodSplit, TypeVector};

use super::blocks::base2_blocks;
use super::builders::PdTriple;
use super::{AodPair, ConstructionError};

/// The four type lists produced by combining a product design with a split
/// AOD. Writing the PD as (M1; M2; N) with weight lists a, b, u and the AOD
/// as (C; D1 + D2) with weight lists c, (v), w, each variant keeps the
/// variables of one factor per Kronecker term and collapses the other:
///
/// - `I`:   (v a_1..a_r, w b_1..b_s, c u_1..u_t)
/// - `II`:  (v a_1..a_r, w b_1..b_s, u c_1..c_k)
/// - `III`: (v a_1..a_r, b w_1..w_l, c u_1..u_t)
/// - `IV`:  (v a_1..a_r, b w_1..w_l, u c_1..c_k)
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineVariant {
    I,
    II,
    III,
    IV,
}

impl CombineVariant {
    fn m2_keeps_vars(self) -> bool {
        matches!(self, CombineVariant::I | CombineVariant::II)
    }

    fn n_keeps_vars(self) -> bool {
        matches!(self, CombineVariant::I | CombineVariant::III)
    }
}

/// Pure weight arithmetic of the four variants; also used by the
/// number-theory module where the combination is applied to a hypothetical
/// design that is never materialised.
pub fn combined_type_weights(
    variant: CombineVariant,
    pd_weights: (&[u64], &[u64], &[u64]),
    aod_weights: (&[u64], u64, &[u64]),
) -> Vec<u64> {
    let (a, b, u) = pd_weights;
    let (c, v, w) = aod_weights;
    let sum = |xs: &[u64]| xs.iter().sum::<u64>();
    let mut out: Vec<u64> = a.iter().map(|ai| v * ai).collect();
    if variant.m2_keeps_vars() {
        out.extend(b.iter().map(|bi| sum(w) * bi));
    } else {
        out.extend(w.iter().map(|wj| sum(b) * wj));
    }
    if variant.n_keeps_vars() {
        out.extend(u.iter().map(|ul| sum(c) * ul));
    } else {
        out.extend(c.iter().map(|cj| sum(u) * cj));
    }
    out
}

/// Combines a verified product design with a split AOD into an OD of order
/// `m * n` whose type is the chosen variant's list.
///
/// The assembled candidate is `M1' (x) D1' + M2' (x) D2' + N' (x) C'` where
/// the primed factor either keeps its variables or is collapsed to a
/// +-1 matrix, as dictated by the variant. The result is re-verified as an
/// OD before it is returned.
pub fn combine_pd_aod(
    pd: &PdTriple,
    split: &AodSplit,
    variant: CombineVariant,
    reg: &mut VarRegistry,
) -> Result<(PolyMatrix, TypeVector), ConstructionError> {
    let pd_report = pd.verify();
    if !pd_report.passed() {
        return Err(ConstructionError::failed_report(
            "combine requires a verified PD",
            &pd_report,
        ));
    }
    // Renaming the AOD side onto fresh ids keeps its variables disjoint
    // from the PD's.
    let split = split.with_fresh_vars(reg);
    let v = split.v_weight();
    let d1c = collapse(split.d1(), split.type_d1())?;

    let mut pairs: Vec<(u64, _)> = pd
        .type_m1
        .pairs()
        .map(|(weight, var)| (v * weight, var))
        .collect();
    let t1 = pd.m1.kron(&d1c);

    let t2 = if variant.m2_keeps_vars() {
        let w = split.type_d2().weight_sum();
        pairs.extend(pd.type_m2.pairs().map(|(weight, var)| (w * weight, var)));
        pd.m2.kron(&collapse(split.d2(), split.type_d2())?)
    } else {
        let b = pd.type_m2.weight_sum();
        pairs.extend(
            split
                .type_d2()
                .pairs()
                .map(|(weight, var)| (b * weight, var)),
        );
        collapse(&pd.m2, &pd.type_m2)?.kron(split.d2())
    };

    let t3 = if variant.n_keeps_vars() {
        let c = split.type_c().weight_sum();
        pairs.extend(pd.type_n.pairs().map(|(weight, var)| (c * weight, var)));
        pd.n.kron(&collapse(split.c(), split.type_c())?)
    } else {
        let u = pd.type_n.weight_sum();
        pairs.extend(
            split
                .type_c()
                .pairs()
                .map(|(weight, var)| (u * weight, var)),
        );
        collapse(&pd.n, &pd.type_n)?.kron(split.c())
    };

    let candidate = &(&t1 + &t2) + &t3;
    let od_type = TypeVector::new(pairs)?;
    let report = verify_od(&candidate, &od_type);
    if !report.passed() {
        return Err(ConstructionError::PostVerification {
            design: format!("combined OD of order {}", candidate.order()),
            report,
        });
    }
    Ok((candidate, od_type))
}

/// Doubles an AOD `t` times. One doubling step sends an
/// AOD(n; u1, u2..ur; v1..vs) to an AOD(2n; u1, u1, 2u2..2ur; 2v1..2vs),
/// so `t` steps produce the type
/// (u1, u1, 2u1, .., 2^(t-1)u1, 2^t u2, .., 2^t ur; 2^t v1, .., 2^t vs).
/// The distinguished variable u1 is the first entry of the C-side type.
pub fn double_aod(
    pair: &AodPair,
    t: u32,
    reg: &mut VarRegistry,
) -> Result<AodPair, ConstructionError> {
    if t < 1 {
        return Err(ConstructionError::InvalidParameter(
            "doubling count must be at least 1".into(),
        ));
    }
    let mut current = pair.clone();
    for _ in 0..t {
        current = double_once(&current, reg)?;
    }
    Ok(current)
}

/// One doubling step via amicable order-2 blocks: writing C = x1 C1 + Crest,
/// the candidate is
///   C' = a (C1 (x) Xa) + b (C1 (x) Xb) + Crest (x) W,
///   D' = D (x) W,
/// where (Xa, Xb) is an anti-amicable pair of the order-2 blocks with
/// disjoint supports and W satisfies W W^T = 2I and is amicable with both.
/// A small list of block choices is tried in order; the first candidate
/// that verifies wins.
fn double_once(pair: &AodPair, reg: &mut VarRegistry) -> Result<AodPair, ConstructionError> {
    let u1_var = pair.type_c.vars()[0];
    let u1_weight = pair.type_c.weights()[0];
    let zero_u1: BTreeMap<_, _> = [(u1_var, Polynomial::zero())].into_iter().collect();
    let one_u1: BTreeMap<_, _> = [(u1_var, Polynomial::one())].into_iter().collect();
    let c_rest = pair.c.substitute(&zero_u1);
    let c1 = (&pair.c - &c_rest).substitute(&one_u1);

    let base = reg.name(u1_var).to_string();
    let var_a = reg.fresh(&base);
    let var_b = reg.fresh(&base);

    let mut type_c_pairs = vec![(u1_weight, var_a), (u1_weight, var_b)];
    type_c_pairs.extend(pair.type_c.pairs().skip(1).map(|(w, v)| (2 * w, v)));
    let type_c = TypeVector::new(type_c_pairs)?;
    let type_d = TypeVector::new(pair.type_d.pairs().map(|(w, v)| (2 * w, v)).collect())?;

    let blocks = base2_blocks();
    let candidates = [
        (&blocks.q, &blocks.p, &blocks.i + &blocks.r),
        (&blocks.p, &blocks.q, &blocks.i + &blocks.r),
        (&blocks.r, &blocks.i, &blocks.p + &blocks.q),
        (&blocks.i, &blocks.r, &blocks.p + &blocks.q),
    ];
    for (xa, xb, w) in candidates {
        let c_new = &(&c1.kron(xa).scale_poly(&Polynomial::var(var_a))
            + &c1.kron(xb).scale_poly(&Polynomial::var(var_b)))
            + &c_rest.kron(&w);
        let d_new = pair.d.kron(&w);
        let candidate = AodPair {
            c: c_new,
            d: d_new,
            type_c: type_c.clone(),
            type_d: type_d.clone(),
        };
        if candidate.verify()?.passed() {
            return Ok(candidate);
        }
    }
    Err(ConstructionError::PostVerification {
        design: format!("doubled AOD of order {}", 2 * pair.order()),
        report: crate::designs::VerificationReport::fail_condition(
            "aod doubling",
            "no block candidate verified",
        ),
    })
}
