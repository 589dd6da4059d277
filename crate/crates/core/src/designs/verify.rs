use std::collections::BTreeMap;

use num_rational::Rational64;

use crate::algebra::{decompose_by_variable, IntMatrix, Monomial, PolyMatrix, Polynomial, VarId};

use super::report::VerificationReport;
use super::typevector::TypeVector;
use super::DesignError;

/// Verifies the orthogonal-design axioms of `a` against the claimed type.
///
/// Checks run in a fixed order so the first violation is deterministic:
/// 1. entry shape: every entry is 0 or +-x for a variable x of `t`;
/// 2. Gram: `a * a^T` is a scalar multiple of the identity;
/// 3. type match: the scalar equals `sum c_j x_j^2` per variable, i.e. the
///    coefficient of `x_j^2` is exactly the weight bound to `x_j`.
pub fn verify_od(a: &PolyMatrix, t: &TypeVector) -> VerificationReport {
    let claimed = t.var_set();
    for i in 0..a.order() {
        for j in 0..a.order() {
            let e = a.get(i, j);
            if e.is_zero() {
                continue;
            }
            match e.as_signed_var() {
                Some((v, _)) if claimed.contains(&v) => {}
                _ => return VerificationReport::fail_entry("od entry shape", i, j, e),
            }
        }
    }
    let gram = a.gram();
    if let Some(report) = check_scalar_identity(&gram, "od gram") {
        return report;
    }
    let q = gram.get(0, 0);
    let expected = type_gram_form(t);
    if *q != expected {
        return VerificationReport::fail_condition(
            "od type match",
            format!("gram form is {q}, claimed type gives {expected}"),
        );
    }
    VerificationReport::pass("od")
}

/// The quadratic form `sum c_j x_j^2` of a type vector.
pub(crate) fn type_gram_form(t: &TypeVector) -> Polynomial {
    let mut q = Polynomial::zero();
    for (w, v) in t.pairs() {
        let m = Monomial::var(v).mul(&Monomial::var(v));
        q.add_term(m, Rational64::from_integer(w as i64));
    }
    q
}

fn check_scalar_identity(gram: &PolyMatrix, claim: &str) -> Option<VerificationReport> {
    let q = gram.get(0, 0);
    for i in 0..gram.order() {
        for j in 0..gram.order() {
            let e = gram.get(i, j);
            if i == j {
                if e != q {
                    return Some(VerificationReport::fail_entry(
                        format!("{claim} diagonal not constant"),
                        i,
                        j,
                        e,
                    ));
                }
            } else if !e.is_zero() {
                return Some(VerificationReport::fail_entry(
                    format!("{claim} off-diagonal"),
                    i,
                    j,
                    e,
                ));
            }
        }
    }
    None
}

/// Passes iff no entry is the zero polynomial.
pub fn is_full(a: &PolyMatrix) -> VerificationReport {
    for i in 0..a.order() {
        for j in 0..a.order() {
            if a.get(i, j).is_zero() {
                return VerificationReport::fail_entry("full", i, j, a.get(i, j));
            }
        }
    }
    VerificationReport::pass("full")
}

/// `a * b^T = b * a^T`.
pub fn verify_amicable(a: &PolyMatrix, b: &PolyMatrix) -> Result<VerificationReport, DesignError> {
    product_symmetry(a, b, 1, "amicable")
}

/// `a * b^T = -(b * a^T)`.
pub fn verify_antiamicable(
    a: &PolyMatrix,
    b: &PolyMatrix,
) -> Result<VerificationReport, DesignError> {
    product_symmetry(a, b, -1, "anti-amicable")
}

/// Compares `a b^T` against `sign * (b a^T)`, witnessing the first cell of
/// the difference. Matrices of integer linear forms take an integer fast
/// path: grouping `a b^T - sign * b a^T` by monomial turns the comparison
/// into integer matrix products, which is what makes amicability checks on
/// the order-512 designs cheap.
fn product_symmetry(
    a: &PolyMatrix,
    b: &PolyMatrix,
    sign: i64,
    claim: &str,
) -> Result<VerificationReport, DesignError> {
    if a.order() != b.order() {
        return Err(DesignError::Algebra(
            crate::algebra::AlgebraError::DimensionMismatch {
                left: a.order(),
                right: b.order(),
            },
        ));
    }
    if a.order() >= 64 {
        if let (Ok(da), Ok(db)) = (decompose_by_variable(a), decompose_by_variable(b)) {
            return Ok(product_symmetry_int(
                &da_parts(&da),
                &da_parts(&db),
                sign,
                claim,
            ));
        }
    }
    let left = a.mul_transpose(b)?;
    let right = b.mul_transpose(a)?;
    let right = if sign == 1 { right } else { -&right };
    Ok(first_difference(&left, &right, claim))
}

fn da_parts(d: &crate::algebra::VarDecomposition) -> Vec<(Monomial, IntMatrix)> {
    let mut parts = Vec::new();
    if !d.constant().is_zero() {
        parts.push((Monomial::one(), d.constant().clone()));
    }
    for (v, m) in d.parts() {
        parts.push((Monomial::var(*v), m.clone()));
    }
    parts
}

fn product_symmetry_int(
    a_parts: &[(Monomial, IntMatrix)],
    b_parts: &[(Monomial, IntMatrix)],
    sign: i64,
    claim: &str,
) -> VerificationReport {
    // Group pair products by the monomial they carry; each group's
    // difference must vanish on its own because monomials are independent.
    let mut groups: BTreeMap<Monomial, Vec<(usize, usize)>> = BTreeMap::new();
    for (i, (ma, _)) in a_parts.iter().enumerate() {
        for (j, (mb, _)) in b_parts.iter().enumerate() {
            groups.entry(ma.mul(mb)).or_default().push((i, j));
        }
    }
    for (mono, pairs) in groups {
        let n = a_parts[0].1.order();
        let mut diff = IntMatrix::zero(n);
        for (i, j) in pairs {
            let left = a_parts[i].1.mul_transpose(&b_parts[j].1);
            let right = b_parts[j].1.mul_transpose(&a_parts[i].1);
            for r in 0..n {
                for c in 0..n {
                    let d = diff
                        .get(r, c)
                        .checked_add(left.get(r, c))
                        .and_then(|v| v.checked_sub(sign * right.get(r, c)))
                        .expect("integer matrix overflow");
                    diff.set(r, c, d);
                }
            }
        }
        for r in 0..n {
            for c in 0..n {
                if diff.get(r, c) != 0 {
                    let entry =
                        Polynomial::term(mono.clone(), Rational64::from_integer(diff.get(r, c)));
                    return VerificationReport::fail_entry(
                        format!("{claim}: difference of transposed products"),
                        r,
                        c,
                        &entry,
                    );
                }
            }
        }
    }
    VerificationReport::pass(claim)
}

fn first_difference(left: &PolyMatrix, right: &PolyMatrix, claim: &str) -> VerificationReport {
    for i in 0..left.order() {
        for j in 0..left.order() {
            if left.get(i, j) != right.get(i, j) {
                let diff = left.get(i, j) - right.get(i, j);
                return VerificationReport::fail_entry(
                    format!("{claim}: difference of transposed products"),
                    i,
                    j,
                    &diff,
                );
            }
        }
    }
    VerificationReport::pass(claim)
}

/// Entrywise product is the zero matrix.
pub fn verify_disjoint(a: &PolyMatrix, b: &PolyMatrix) -> Result<VerificationReport, DesignError> {
    let had = a.hadamard_product(b).map_err(DesignError::Algebra)?;
    for i in 0..had.order() {
        for j in 0..had.order() {
            if !had.get(i, j).is_zero() {
                return Ok(VerificationReport::fail_entry(
                    "disjoint",
                    i,
                    j,
                    had.get(i, j),
                ));
            }
        }
    }
    Ok(VerificationReport::pass("disjoint"))
}

/// All unordered pairs of `ms` are amicable.
pub fn verify_pairwise_amicable(ms: &[&PolyMatrix]) -> Result<VerificationReport, DesignError> {
    for (i, a) in ms.iter().enumerate() {
        for (j, b) in ms.iter().enumerate().skip(i + 1) {
            let r = verify_amicable(a, b)?;
            if !r.passed() {
                return Ok(r.in_context(&format!("pairwise amicable: matrices {i} and {j}")));
            }
        }
    }
    Ok(VerificationReport::pass("pairwise amicable"))
}

/// Amicable orthogonal design: both sides are ODs of their claimed types on
/// disjoint variable sets and `c d^T = d c^T`.
pub fn verify_aod(
    c: &PolyMatrix,
    d: &PolyMatrix,
    tc: &TypeVector,
    td: &TypeVector,
) -> Result<VerificationReport, DesignError> {
    if !tc.var_set().is_disjoint(&td.var_set()) {
        return Err(DesignError::OverlappingVariables);
    }
    let rc = verify_od(c, tc);
    if !rc.passed() {
        return Ok(rc.in_context("aod C side"));
    }
    let rd = verify_od(d, td);
    if !rd.passed() {
        return Ok(rd.in_context("aod D side"));
    }
    let ra = verify_amicable(c, d)?;
    if !ra.passed() {
        return Ok(ra.in_context("aod"));
    }
    Ok(VerificationReport::pass("aod"))
}

/// Product design (m1; m2; n): all three are ODs of their claimed types on
/// pairwise disjoint variable sets, m1 and m2 are each disjoint from n,
/// m1 + n and m2 + n are ODs of the concatenated types, and
/// `m1 m2^T = m2 m1^T`.
pub fn verify_pd(
    m1: &PolyMatrix,
    m2: &PolyMatrix,
    n: &PolyMatrix,
    t1: &TypeVector,
    t2: &TypeVector,
    tn: &TypeVector,
) -> VerificationReport {
    if m1.order() != m2.order() || m1.order() != n.order() {
        return VerificationReport::fail_condition("pd", "matrix orders differ");
    }
    let (v1, v2, vn) = (t1.var_set(), t2.var_set(), tn.var_set());
    if !v1.is_disjoint(&v2) || !v1.is_disjoint(&vn) || !v2.is_disjoint(&vn) {
        return VerificationReport::fail_condition(
            "pd",
            "variable sets of M1, M2, N must be pairwise disjoint",
        );
    }
    for (m, t, label) in [(m1, t1, "M1"), (m2, t2, "M2"), (n, tn, "N")] {
        let r = verify_od(m, t);
        if !r.passed() {
            return r.in_context(&format!("pd component {label}"));
        }
    }
    for (m, label) in [(m1, "M1"), (m2, "M2")] {
        match verify_disjoint(m, n) {
            Ok(r) if !r.passed() => {
                return r.in_context(&format!("pd condition (i): {label} * N = 0"))
            }
            Err(e) => return VerificationReport::fail_condition("pd", e.to_string()),
            _ => {}
        }
    }
    for (m, t, label) in [(m1, t1, "M1"), (m2, t2, "M2")] {
        let sum = m + n;
        let combined = match t.concat(tn) {
            Ok(c) => c,
            Err(e) => return VerificationReport::fail_condition("pd", e.to_string()),
        };
        let r = verify_od(&sum, &combined);
        if !r.passed() {
            return r.in_context(&format!("pd condition (ii): {label} + N is an OD"));
        }
    }
    match verify_amicable(m1, m2) {
        Ok(r) if !r.passed() => return r.in_context("pd condition (iii): M1 M2^T = M2 M1^T"),
        Err(e) => return VerificationReport::fail_condition("pd", e.to_string()),
        _ => {}
    }
    VerificationReport::pass("pd")
}

/// Sets every variable of a verified OD to one; the result `W` satisfies
/// `W W^T = (sum c_j) I`.
pub fn collapse(a: &PolyMatrix, t: &TypeVector) -> Result<PolyMatrix, DesignError> {
    let report = verify_od(a, t);
    if !report.passed() {
        return Err(DesignError::Unverified {
            context: "collapse",
            report,
        });
    }
    let ones: BTreeMap<VarId, Polynomial> =
        t.vars().iter().map(|&v| (v, Polynomial::one())).collect();
    Ok(a.substitute(&ones))
}
