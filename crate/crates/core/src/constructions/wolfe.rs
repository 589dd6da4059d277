use num_rational::Rational64;

use crate::algebra::{decompose_by_variable, IntMatrix, PolyMatrix, Polynomial, VarRegistry};
use crate::designs::{is_full, verify_od, TypeVector, VerificationReport};

use super::blocks::{base2_blocks, sylvester_hadamard};
use super::builders::expect_pass;
use super::{AodPair, ConstructionError};

/// Two families of signed permutation matrices of order 2^s * d: the `a`
/// family is mutually anti-amicable and disjoint, so is the `b` family, and
/// every cross pair is amicable.
#[derive(Debug, Clone)]
pub struct WolfeSets {
    pub a: Vec<PolyMatrix>,
    pub b: Vec<PolyMatrix>,
    order: usize,
}

/// Builds the two signed-permutation families for n = 2^s * d (d odd).
///
/// With I, P, Q, R the order-2 blocks and empty Kronecker products reading
/// as the 1x1 identity:
///   A_1 = I^(x)s (x) I_d,  A_k = I^(x)(k-2) (x) R (x) P^(x)(s-k+1) (x) I_d,
///   B_1 = P^(x)s (x) I_d,  B_k = I^(x)(k-2) (x) Q (x) P^(x)(s-k+1) (x) I_d,
/// for 2 <= k <= s+1.
pub fn wolfe_sets(s: u32, d: usize) -> Result<WolfeSets, ConstructionError> {
    if s < 1 {
        return Err(ConstructionError::InvalidParameter(
            "s must be at least 1".into(),
        ));
    }
    if d.is_multiple_of(2) {
        return Err(ConstructionError::InvalidParameter("d must be odd".into()));
    }
    let blocks = base2_blocks();
    let id_d = PolyMatrix::identity(d);
    let pow = |m: &PolyMatrix, count: u32| -> PolyMatrix {
        let mut out = PolyMatrix::identity(1);
        for _ in 0..count {
            out = out.kron(m);
        }
        out
    };
    let chain = |mid: &PolyMatrix, k: u32| -> PolyMatrix {
        pow(&blocks.i, k - 2)
            .kron(mid)
            .kron(&pow(&blocks.p, s + 1 - k))
            .kron(&id_d)
    };
    let mut a = vec![pow(&blocks.i, s).kron(&id_d)];
    let mut b = vec![pow(&blocks.p, s).kron(&id_d)];
    for k in 2..=s + 1 {
        a.push(chain(&blocks.r, k));
        b.push(chain(&blocks.q, k));
    }
    let order = (1usize << s) * d;
    let sets = WolfeSets { a, b, order };
    let report = sets.verify();
    if !report.passed() {
        return Err(ConstructionError::PostVerification {
            design: format!("signed permutation families of order {order}"),
            report,
        });
    }
    Ok(sets)
}

impl WolfeSets {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Checks all defining properties pair-exhaustively on the integer fast
    /// path: every matrix is a signed permutation, each family is mutually
    /// anti-amicable and disjoint, and cross pairs are amicable.
    pub fn verify(&self) -> VerificationReport {
        let claim = "signed permutation families";
        let to_int = |m: &PolyMatrix| -> Option<IntMatrix> {
            let dec = decompose_by_variable(m).ok()?;
            dec.parts().is_empty().then(|| dec.constant().clone())
        };
        let mut a_int = Vec::new();
        let mut b_int = Vec::new();
        for (family, ints, label) in [(&self.a, &mut a_int, "A"), (&self.b, &mut b_int, "B")] {
            for (k, m) in family.iter().enumerate() {
                let Some(im) = to_int(m) else {
                    return VerificationReport::fail_condition(
                        claim,
                        format!("{label}{} is not a constant integer matrix", k + 1),
                    );
                };
                if let Some(why) = not_signed_permutation(&im) {
                    return VerificationReport::fail_condition(
                        claim,
                        format!("{label}{} is not a signed permutation: {why}", k + 1),
                    );
                }
                ints.push(im);
            }
        }
        for (ints, label) in [(&a_int, "A"), (&b_int, "B")] {
            for i in 0..ints.len() {
                for j in i + 1..ints.len() {
                    if !int_anti_amicable(&ints[i], &ints[j]) {
                        return VerificationReport::fail_condition(
                            claim,
                            format!(
                                "{label}{} and {label}{} are not anti-amicable",
                                i + 1,
                                j + 1
                            ),
                        );
                    }
                    if !int_disjoint(&ints[i], &ints[j]) {
                        return VerificationReport::fail_condition(
                            claim,
                            format!("{label}{} and {label}{} are not disjoint", i + 1, j + 1),
                        );
                    }
                }
            }
        }
        for (i, ai) in a_int.iter().enumerate() {
            for (j, bj) in b_int.iter().enumerate() {
                if ai.mul_transpose(bj) != bj.mul_transpose(ai) {
                    return VerificationReport::fail_condition(
                        claim,
                        format!("A{} and B{} are not amicable", i + 1, j + 1),
                    );
                }
            }
        }
        VerificationReport::pass(claim)
    }
}

fn not_signed_permutation(m: &IntMatrix) -> Option<String> {
    let n = m.order();
    let mut col_seen = vec![false; n];
    for i in 0..n {
        let mut row_hits = 0;
        for (j, seen) in col_seen.iter_mut().enumerate() {
            let v = m.get(i, j);
            if v == 0 {
                continue;
            }
            if v.abs() != 1 {
                return Some(format!("entry ({i}, {j}) = {v}"));
            }
            row_hits += 1;
            if *seen {
                return Some(format!("column {j} hit twice"));
            }
            *seen = true;
        }
        if row_hits != 1 {
            return Some(format!("row {i} has {row_hits} nonzeros"));
        }
    }
    None
}

fn int_anti_amicable(a: &IntMatrix, b: &IntMatrix) -> bool {
    let left = a.mul_transpose(b);
    let right = b.mul_transpose(a);
    let n = left.order();
    (0..n).all(|i| (0..n).all(|j| left.get(i, j) == -right.get(i, j)))
}

fn int_disjoint(a: &IntMatrix, b: &IntMatrix) -> bool {
    let n = a.order();
    (0..n).all(|i| (0..n).all(|j| a.get(i, j) == 0 || b.get(i, j) == 0))
}

/// Full AOD(2^9; 64 repeated 8; 64 repeated 8) in sixteen variables.
///
/// From the order-128 families {A_k} and {B_k} and a Hadamard matrix H of
/// order 128, each variable pair (x_{2j-1}, x_{2j}) is folded into
///   X_j = 1/2 x_{2j-1} (A_{2j-1} - A_{2j}) H + 1/2 x_{2j} (A_{2j-1} + A_{2j}) H,
/// a full order-128 block (the two halves have complementary supports, so
/// the 1/2 factors cancel exactly). The sides are
///   C = I(x)I(x)X1 + I(x)P(x)X2 + P(x)I(x)X3 + P(x)P(x)X4
/// and the same pattern in Y_j for D.
pub fn aod512(reg: &mut VarRegistry) -> Result<AodPair, ConstructionError> {
    let sets = wolfe_sets(7, 1)?;
    let h = sylvester_hadamard(7);
    let xs = fold_pairs(&sets.a, &h, reg, "x")?;
    let ys = fold_pairs(&sets.b, &h, reg, "y")?;
    let blocks = base2_blocks();
    let spread = [
        (&blocks.i, &blocks.i),
        (&blocks.i, &blocks.p),
        (&blocks.p, &blocks.i),
        (&blocks.p, &blocks.p),
    ];
    let mut c = PolyMatrix::zero(512);
    let mut d = PolyMatrix::zero(512);
    for (k, (outer, inner)) in spread.iter().enumerate() {
        c = &c + &outer.kron(inner).kron(&xs[k].matrix);
        d = &d + &outer.kron(inner).kron(&ys[k].matrix);
    }
    let type_c = TypeVector::new(
        xs.iter()
            .flat_map(|f| [(64, f.vars.0), (64, f.vars.1)])
            .collect(),
    )?;
    let type_d = TypeVector::new(
        ys.iter()
            .flat_map(|f| [(64, f.vars.0), (64, f.vars.1)])
            .collect(),
    )?;
    let pair = AodPair {
        c,
        d,
        type_c,
        type_d,
    };
    expect_pass(pair.verify()?, "AOD of order 512")?;
    expect_pass(is_full(&pair.c), "AOD of order 512, C side fullness")?;
    expect_pass(is_full(&pair.d), "AOD of order 512, D side fullness")?;
    Ok(pair)
}

pub(crate) struct FoldedBlock {
    pub(crate) matrix: PolyMatrix,
    pub(crate) vars: (crate::algebra::VarId, crate::algebra::VarId),
}

pub(crate) fn fold_pairs(
    family: &[PolyMatrix],
    h: &PolyMatrix,
    reg: &mut VarRegistry,
    stem: &str,
) -> Result<Vec<FoldedBlock>, ConstructionError> {
    let half = Rational64::new(1, 2);
    (0..family.len() / 2)
        .map(|j| {
            let odd = &family[2 * j];
            let even = &family[2 * j + 1];
            let v1 = reg.var(&format!("{stem}{}", 2 * j + 1));
            let v2 = reg.var(&format!("{stem}{}", 2 * j + 2));
            let diff = (odd - even)
                .mat_mul(h)?
                .scale(&half)
                .scale_poly(&Polynomial::var(v1));
            let sum = (odd + even)
                .mat_mul(h)?
                .scale(&half)
                .scale_poly(&Polynomial::var(v2));
            Ok(FoldedBlock {
                matrix: &diff + &sum,
                vars: (v1, v2),
            })
        })
        .collect()
}

/// Full OD(2^10; 64 repeated 16): [[C, D], [D, -C]] over [`aod512`].
pub fn od1024(reg: &mut VarRegistry) -> Result<(PolyMatrix, TypeVector), ConstructionError> {
    let pair = aod512(reg)?;
    let (matrix, od_type) = pair.doubled_od()?;
    expect_pass(verify_od(&matrix, &od_type), "OD of order 1024")?;
    expect_pass(is_full(&matrix), "OD of order 1024 fullness")?;
    Ok((matrix, od_type))
}
