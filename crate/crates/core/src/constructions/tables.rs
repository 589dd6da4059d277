use std::collections::BTreeMap;

use crate::algebra::{PolyMatrix, Polynomial};
use crate::designs::{
    is_full, verify_amicable, verify_antiamicable, verify_disjoint, verify_pairwise_amicable,
};

use super::blocks::{base2_blocks, sylvester_hadamard};
use super::{infer_od_type, AodPair, ConstructionError};

/// Block layouts of the two amicable-design constructions, one table per
/// matrix. These tables are the single source of truth for the sign
/// patterns; the block identities asserted in `construct_family` act as a
/// transcription checksum.
const M1_8: [&str; 8] = [
    " 0  D  B  C    0  0  0  0",
    "-D  0 -C  B    0  0  0  0",
    " B -C  0  D    0  0  0  0",
    " C  B -D  0    0  0  0  0",
    " 0  0  0  0    0 -D  B  C",
    " 0  0  0  0    D  0 -C  B",
    " 0  0  0  0    B -C  0 -D",
    " 0  0  0  0    C  B  D  0",
];

const M2_8: [&str; 8] = [
    " 0  G  E  F    0  0  0  0",
    "-G  0  F -E    0  0  0  0",
    " E  F  0 -G    0  0  0  0",
    " F -E  G  0    0  0  0  0",
    " 0  0  0  0    0 -E  F  G",
    " 0  0  0  0    E  0  G -F",
    " 0  0  0  0    F  G  0  E",
    " 0  0  0  0    G -F -E  0",
];

const N_8: [&str; 8] = [
    " A  0  0  0    A -A  A  A",
    " 0  A  0  0    A  A  A -A",
    " 0  0 -A  0   -A -A  A -A",
    " 0  0  0 -A   -A  A  A  A",
    "-A -A -A -A    A  0  0  0",
    " A -A -A  A    0  A  0  0",
    " A  A -A -A    0  0 -A  0",
    " A -A  A -A    0  0  0 -A",
];

const M1_12: [&str; 12] = [
    " B  C  D  0    0  0  0  0    0  0  0  0",
    "-C  B  0 -D    0  0  0  0    0  0  0  0",
    "-D  0  B  C    0  0  0  0    0  0  0  0",
    " 0  D -C  B    0  0  0  0    0  0  0  0",
    " 0  0  0  0    B  C  D  0    0  0  0  0",
    " 0  0  0  0   -C  B  0 -D    0  0  0  0",
    " 0  0  0  0   -D  0  B  C    0  0  0  0",
    " 0  0  0  0    0  D -C  B    0  0  0  0",
    " 0  0  0  0    0  0  0  0    B  C  D  0",
    " 0  0  0  0    0  0  0  0   -C  B  0 -D",
    " 0  0  0  0    0  0  0  0   -D  0  B  C",
    " 0  0  0  0    0  0  0  0    0  D -C  B",
];

const M2_12: [&str; 12] = [
    " E  F  G  0    0  0  0  0    0  0  0  0",
    " F -E  0 -G    0  0  0  0    0  0  0  0",
    " G  0 -E  F    0  0  0  0    0  0  0  0",
    " 0 -G  F  E    0  0  0  0    0  0  0  0",
    " 0  0  0  0    F  G  E  0    0  0  0  0",
    " 0  0  0  0    G -F  0 -E    0  0  0  0",
    " 0  0  0  0    E  0 -F  G    0  0  0  0",
    " 0  0  0  0    0 -E  G  F    0  0  0  0",
    " 0  0  0  0    0  0  0  0    G -E -F  0",
    " 0  0  0  0    0  0  0  0   -E -G  0  F",
    " 0  0  0  0    0  0  0  0   -F  0 -G -E",
    " 0  0  0  0    0  0  0  0    0  F -E  G",
];

const N_12: [&str; 12] = [
    " 0  0  0 -A    A  A  A -A    A -A  A -A",
    " 0  0 -A  0    A -A -A -A   -A -A -A -A",
    " 0  A  0  0    A  A -A  A    A  A -A -A",
    " A  0  0  0    A -A  A  A    A -A -A  A",
    "-A -A -A -A    0  0  0 -A    A  A -A  A",
    "-A  A -A  A    0  0 -A  0    A -A  A  A",
    "-A  A  A -A    0  A  0  0   -A -A -A  A",
    " A  A -A -A    A  0  0  0   -A  A  A  A",
    "-A  A -A -A   -A -A  A  A    0  0  0 -A",
    " A  A -A  A   -A  A  A -A    0  0 -A  0",
    "-A  A  A  A    A -A  A -A    0  A  0  0",
    " A  A  A -A   -A -A -A -A    A  0  0  0",
];

/// Expands a block table: each cell names a letter with a sign, `0` is the
/// zero block. All letter matrices must share one order.
fn assemble(table: &[&str], letters: &BTreeMap<char, &PolyMatrix>) -> PolyMatrix {
    let rows: Vec<Vec<(i64, Option<char>)>> = table
        .iter()
        .map(|row| {
            row.split_whitespace()
                .map(|cell| match cell.strip_prefix('-') {
                    Some(rest) => (-1, parse_letter(rest)),
                    None => (1, parse_letter(cell)),
                })
                .collect()
        })
        .collect();
    let k = rows.len();
    let n = letters
        .values()
        .next()
        .expect("letter map is empty")
        .order();
    let mut out = PolyMatrix::zero(k * n);
    for (bi, row) in rows.iter().enumerate() {
        assert_eq!(row.len(), k, "block table must be square");
        for (bj, &(sign, letter)) in row.iter().enumerate() {
            let Some(letter) = letter else { continue };
            let block = letters[&letter];
            for i in 0..n {
                for j in 0..n {
                    let e = block.get(i, j);
                    if !e.is_zero() {
                        let e = if sign < 0 { -e } else { e.clone() };
                        out.set(bi * n + i, bj * n + j, e);
                    }
                }
            }
        }
    }
    out
}

fn parse_letter(cell: &str) -> Option<char> {
    match cell {
        "0" => None,
        s => {
            debug_assert_eq!(s.len(), 1);
            s.chars().next()
        }
    }
}

/// The eight order-n inputs of the amicable-design constructions.
#[derive(Debug, Clone)]
pub struct OctetInputs {
    pub a1: PolyMatrix,
    pub a2: PolyMatrix,
    pub b: PolyMatrix,
    pub c: PolyMatrix,
    pub d: PolyMatrix,
    pub e: PolyMatrix,
    pub f: PolyMatrix,
    pub g: PolyMatrix,
}

impl OctetInputs {
    fn all(&self) -> [&PolyMatrix; 8] {
        [
            &self.a1, &self.a2, &self.b, &self.c, &self.d, &self.e, &self.f, &self.g,
        ]
    }

    fn order(&self) -> usize {
        self.a1.order()
    }
}

/// Which of the two assembled pairs to produce: `Disjoint` keeps the two
/// designs entrywise disjoint, `Full` multiplies the order-2 blocks by a
/// Hadamard matrix so neither design has a zero entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuildMode {
    Disjoint,
    Full,
}

/// Amicable orthogonal design of order 16n from eight pairwise amicable
/// order-n inputs satisfying `5 A1 A1^T + B B^T + C C^T + D D^T = k I` and
/// `5 A2 A2^T + E E^T + F F^T + G G^T = s I`.
pub fn construction_16n(
    inputs: &OctetInputs,
    mode: BuildMode,
) -> Result<AodPair, ConstructionError> {
    construct_family(inputs, mode, 5, &M1_8, &M2_8, &N_8)
}

/// Amicable orthogonal design of order 24n; same contract as
/// [`construction_16n`] with weight 9 on the A-blocks and 12x12 block
/// layouts.
pub fn construction_24n(
    inputs: &OctetInputs,
    mode: BuildMode,
) -> Result<AodPair, ConstructionError> {
    construct_family(inputs, mode, 9, &M1_12, &M2_12, &N_12)
}

fn construct_family(
    inputs: &OctetInputs,
    mode: BuildMode,
    a_weight: i64,
    m1_table: &[&str],
    m2_table: &[&str],
    n_table: &[&str],
) -> Result<AodPair, ConstructionError> {
    let n = inputs.order();
    if inputs.all().iter().any(|m| m.order() != n) {
        return Err(ConstructionError::precondition(
            "all eight inputs must have the same order",
        ));
    }
    let pairwise = verify_pairwise_amicable(&inputs.all())?;
    if !pairwise.passed() {
        return Err(ConstructionError::failed_report(
            "inputs must be pairwise amicable",
            &pairwise,
        ));
    }
    check_weighted_gram(
        a_weight,
        &inputs.a1,
        [&inputs.b, &inputs.c, &inputs.d],
        "A1",
    )?;
    check_weighted_gram(
        a_weight,
        &inputs.a2,
        [&inputs.e, &inputs.f, &inputs.g],
        "A2",
    )?;
    if mode == BuildMode::Full {
        for (m, name) in inputs
            .all()
            .iter()
            .zip(["A1", "A2", "B", "C", "D", "E", "F", "G"])
        {
            if m.has_zero_entry() {
                return Err(ConstructionError::precondition(format!(
                    "full mode requires inputs with no zero entries, {name} has one"
                )));
            }
        }
    }

    let m1 = assemble(
        m1_table,
        &[('B', &inputs.b), ('C', &inputs.c), ('D', &inputs.d)]
            .into_iter()
            .collect(),
    );
    let m2 = assemble(
        m2_table,
        &[('E', &inputs.e), ('F', &inputs.f), ('G', &inputs.g)]
            .into_iter()
            .collect(),
    );
    let n1 = assemble(n_table, &[('A', &inputs.a1)].into_iter().collect());
    let n2 = assemble(n_table, &[('A', &inputs.a2)].into_iter().collect());

    check_block_identities(&m1, &m2, &n1, &n2)?;

    let blocks = base2_blocks();
    let (u, v) = match mode {
        BuildMode::Disjoint => (
            &n1.kron(&blocks.i) + &m1.kron(&blocks.q),
            &n2.kron(&blocks.p) + &m2.kron(&blocks.r.transpose()),
        ),
        BuildMode::Full => {
            let h = sylvester_hadamard(1);
            let qh = blocks.q.mat_mul(&h)?;
            let ph = blocks.p.mat_mul(&h)?;
            let rth = blocks.r.transpose().mat_mul(&h)?;
            (&n1.kron(&h) + &m1.kron(&qh), &n2.kron(&ph) + &m2.kron(&rth))
        }
    };

    let type_u = infer_od_type(&u)?;
    let type_v = infer_od_type(&v)?;
    let pair = AodPair {
        c: u,
        d: v,
        type_c: type_u,
        type_d: type_v,
    };
    let report = pair.verify()?;
    if !report.passed() {
        return Err(ConstructionError::PostVerification {
            design: format!("AOD of order {}", pair.order()),
            report,
        });
    }
    match mode {
        BuildMode::Disjoint => {
            let r = verify_disjoint(&pair.c, &pair.d)?;
            if !r.passed() {
                return Err(ConstructionError::PostVerification {
                    design: "disjoint pair".into(),
                    report: r,
                });
            }
        }
        BuildMode::Full => {
            for side in [&pair.c, &pair.d] {
                let r = is_full(side);
                if !r.passed() {
                    return Err(ConstructionError::PostVerification {
                        design: "full pair".into(),
                        report: r,
                    });
                }
            }
        }
    }
    Ok(pair)
}

/// `w * A A^T + B B^T + C C^T + D D^T` must be a scalar multiple of I.
fn check_weighted_gram(
    w: i64,
    a: &PolyMatrix,
    rest: [&PolyMatrix; 3],
    name: &str,
) -> Result<(), ConstructionError> {
    let mut sum = a.gram().scale(&num_rational::Rational64::from_integer(w));
    for m in rest {
        sum = &sum + &m.gram();
    }
    if sum.is_scalar_identity().is_none() {
        return Err(ConstructionError::precondition(format!(
            "{w}*{name}*{name}^T + (gram sum of its three companions) is not a scalar multiple of I"
        )));
    }
    Ok(())
}

/// Transcription checksum: the assembled blocks must satisfy the amicability,
/// anti-amicability and disjointness identities the construction relies on.
fn check_block_identities(
    m1: &PolyMatrix,
    m2: &PolyMatrix,
    n1: &PolyMatrix,
    n2: &PolyMatrix,
) -> Result<(), ConstructionError> {
    let checks = [
        (verify_amicable(n1, n2)?, "N1 N2^T = N2 N1^T"),
        (verify_amicable(m1, m2)?, "M1 M2^T = M2 M1^T"),
    ];
    for (r, label) in checks {
        if !r.passed() {
            return Err(ConstructionError::failed_report(label, &r));
        }
    }
    for (j, m) in [(1, m1), (2, m2)] {
        for (i, nn) in [(1, n1), (2, n2)] {
            let r = verify_antiamicable(m, nn)?;
            if !r.passed() {
                return Err(ConstructionError::failed_report(
                    &format!("M{j} N{i}^T = -N{i} M{j}^T"),
                    &r,
                ));
            }
            let r = verify_disjoint(m, nn)?;
            if !r.passed() {
                return Err(ConstructionError::failed_report(
                    &format!("M{j} * N{i} = 0"),
                    &r,
                ));
            }
        }
    }
    Ok(())
}

/// Instantiates every letter with a distinct single variable; used by the
/// product designs and the all-variable amicable designs.
pub(crate) fn single_var_matrix(p: Polynomial) -> PolyMatrix {
    let mut m = PolyMatrix::zero(1);
    m.set(0, 0, p);
    m
}

pub(crate) mod layout {
    use super::*;

    /// Assembled block matrices for the product designs: `(M1, M2, N1)`
    /// with the letters replaced by the seven given 1x1 variable blocks.
    pub(crate) fn pd_blocks(
        size: PdSize,
        a: &PolyMatrix,
        bcd: [&PolyMatrix; 3],
        efg: [&PolyMatrix; 3],
    ) -> (PolyMatrix, PolyMatrix, PolyMatrix) {
        let (m1t, m2t, nt): (&[&str], &[&str], &[&str]) = match size {
            PdSize::Eight => (&M1_8, &M2_8, &N_8),
            PdSize::Twelve => (&M1_12, &M2_12, &N_12),
        };
        let m1 = assemble(
            m1t,
            &[('B', bcd[0]), ('C', bcd[1]), ('D', bcd[2])]
                .into_iter()
                .collect(),
        );
        let m2 = assemble(
            m2t,
            &[('E', efg[0]), ('F', efg[1]), ('G', efg[2])]
                .into_iter()
                .collect(),
        );
        let n1 = assemble(nt, &[('A', a)].into_iter().collect());
        (m1, m2, n1)
    }

    #[derive(Debug, Clone, Copy)]
    pub(crate) enum PdSize {
        Eight,
        Twelve,
    }
}
