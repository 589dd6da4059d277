use crate::algebra::{PolyMatrix, Polynomial, VarRegistry};
use crate::designs::{verify_pd, AodSplit, TypeVector, VerificationReport};

use super::tables::{
    construction_16n, construction_24n, layout, single_var_matrix, BuildMode, OctetInputs,
};
use super::{AodPair, ConstructionError};

/// The order-2 amicable pair: C = a*Q + b*P, D = c*I + d*R, an
/// AOD(2; 1,1; 1,1).
pub fn aod_2(reg: &mut VarRegistry) -> Result<AodPair, ConstructionError> {
    let (a, b, c, d) = (reg.var("a"), reg.var("b"), reg.var("c"), reg.var("d"));
    let (pa, pb, pc, pd) = (
        Polynomial::var(a),
        Polynomial::var(b),
        Polynomial::var(c),
        Polynomial::var(d),
    );
    let cm = PolyMatrix::from_fn(2, |i, j| match (i, j) {
        (0, 0) => pa.clone(),
        (0, 1) | (1, 0) => pb.clone(),
        _ => -&pa,
    });
    let dm = PolyMatrix::from_fn(2, |i, j| match (i, j) {
        (0, 0) | (1, 1) => pc.clone(),
        (0, 1) => pd.clone(),
        _ => -&pd,
    });
    let pair = AodPair {
        c: cm,
        d: dm,
        type_c: TypeVector::new(vec![(1, a), (1, b)])?,
        type_d: TypeVector::new(vec![(1, c), (1, d)])?,
    };
    expect_pass(pair.verify()?, "AOD(2; 1,1; 1,1)")?;
    Ok(pair)
}

/// [`aod_2`] with its D side split as D1 = c*I (the single-variable part)
/// and D2 = d*R.
pub fn aod_2_split(reg: &mut VarRegistry) -> Result<AodSplit, ConstructionError> {
    let pair = aod_2(reg)?;
    let c_var = pair.type_d.vars()[0];
    let d_var = pair.type_d.vars()[1];
    let d1 = PolyMatrix::identity(2).scale_poly(&Polynomial::var(c_var));
    let d2 = &pair.d - &d1;
    Ok(AodSplit::new(
        pair.c,
        d1,
        d2,
        pair.type_c,
        TypeVector::new(vec![(1, c_var)])?,
        TypeVector::new(vec![(1, d_var)])?,
    )?)
}

/// A verified product design triple (M1; M2; N).
#[derive(Debug, Clone)]
pub struct PdTriple {
    pub m1: PolyMatrix,
    pub m2: PolyMatrix,
    pub n: PolyMatrix,
    pub type_m1: TypeVector,
    pub type_m2: TypeVector,
    pub type_n: TypeVector,
}

impl PdTriple {
    pub fn verify(&self) -> VerificationReport {
        verify_pd(
            &self.m1,
            &self.m2,
            &self.n,
            &self.type_m1,
            &self.type_m2,
            &self.type_n,
        )
    }

    pub fn order(&self) -> usize {
        self.m1.order()
    }
}

/// PD(8; 1,1,1; 1,1,1; 5): the order-8 block layout with its seven letters
/// replaced by distinct variables.
pub fn pd8(reg: &mut VarRegistry) -> Result<PdTriple, ConstructionError> {
    build_pd(reg, layout::PdSize::Eight, 5)
}

/// PD(12; 1,1,1; 1,1,1; 9): the order-12 block layout with its seven
/// letters replaced by distinct variables.
pub fn pd12(reg: &mut VarRegistry) -> Result<PdTriple, ConstructionError> {
    build_pd(reg, layout::PdSize::Twelve, 9)
}

fn build_pd(
    reg: &mut VarRegistry,
    size: layout::PdSize,
    n_weight: u64,
) -> Result<PdTriple, ConstructionError> {
    let names = ["a", "b", "c", "d", "e", "f", "g"];
    let vars: Vec<_> = names.iter().map(|n| reg.var(n)).collect();
    let cells: Vec<PolyMatrix> = vars
        .iter()
        .map(|&v| single_var_matrix(Polynomial::var(v)))
        .collect();
    let (m1, m2, n) = layout::pd_blocks(
        size,
        &cells[0],
        [&cells[1], &cells[2], &cells[3]],
        [&cells[4], &cells[5], &cells[6]],
    );
    let triple = PdTriple {
        m1,
        m2,
        n,
        type_m1: TypeVector::new(vec![(1, vars[1]), (1, vars[2]), (1, vars[3])])?,
        type_m2: TypeVector::new(vec![(1, vars[4]), (1, vars[5]), (1, vars[6])])?,
        type_n: TypeVector::new(vec![(n_weight, vars[0])])?,
    };
    let report = triple.verify();
    if !report.passed() {
        return Err(ConstructionError::PostVerification {
            design: format!("PD of order {}", triple.order()),
            report,
        });
    }
    Ok(triple)
}

/// Full AOD(16; 2,2,2,10; 2,2,2,10) from single-variable inputs. The
/// heavy variable comes first in each type vector; the doubling
/// construction duplicates the leading variable.
pub fn aod16_vars(reg: &mut VarRegistry) -> Result<AodPair, ConstructionError> {
    all_vars_aod(reg, construction_16n)
}

/// Full AOD(24; 2,2,2,18; 2,2,2,18) from single-variable inputs.
pub fn aod24_vars(reg: &mut VarRegistry) -> Result<AodPair, ConstructionError> {
    all_vars_aod(reg, construction_24n)
}

fn all_vars_aod(
    reg: &mut VarRegistry,
    construct: fn(&OctetInputs, BuildMode) -> Result<AodPair, ConstructionError>,
) -> Result<AodPair, ConstructionError> {
    let names = ["a", "b", "c", "d", "e", "f", "g", "h"];
    let vars: Vec<_> = names.iter().map(|n| reg.var(n)).collect();
    let cell = |k: usize| single_var_matrix(Polynomial::var(vars[k]));
    let inputs = OctetInputs {
        a1: cell(0),
        b: cell(1),
        c: cell(2),
        d: cell(3),
        a2: cell(4),
        e: cell(5),
        f: cell(6),
        g: cell(7),
    };
    let pair = construct(&inputs, BuildMode::Full)?;
    // Reorder both claimed types heavy-first (the A-slot variable carries
    // the large weight); the pairs are unchanged, so the design still
    // verifies against them.
    let reorder = |t: &TypeVector| -> Result<TypeVector, ConstructionError> {
        let mut pairs: Vec<(u64, _)> = t.pairs().collect();
        pairs.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        Ok(TypeVector::new(pairs)?)
    };
    let pair = AodPair {
        type_c: reorder(&pair.type_c)?,
        type_d: reorder(&pair.type_d)?,
        c: pair.c,
        d: pair.d,
    };
    expect_pass(pair.verify()?, "all-variable AOD")?;
    Ok(pair)
}

/// Full AOD(48; 4,10,34; 4,44) built from order-3 circulant and
/// back-circulant inputs; `BuildMode::Disjoint` yields the disjoint
/// AOD(48; 2,5,17; 2,22) variant instead.
pub fn aod48_circulant(
    reg: &mut VarRegistry,
    mode: BuildMode,
) -> Result<AodPair, ConstructionError> {
    let [a, b, c, d, x] = ["a", "b", "c", "d", "x"].map(|n| Polynomial::var(reg.var(n)));
    let inputs = OctetInputs {
        a1: PolyMatrix::backcirc(&[x.clone(), -&b, b.clone()])?,
        a2: PolyMatrix::circ(&[-&d, d.clone(), d.clone()])?,
        b: PolyMatrix::circ(&[b.clone(), b.clone(), b.clone()])?,
        c: PolyMatrix::circ(&[-&a, b.clone(), b.clone()])?,
        d: PolyMatrix::circ(&[a.clone(), b.clone(), b.clone()])?,
        e: PolyMatrix::circ(&[d.clone(), d.clone(), d.clone()])?,
        f: PolyMatrix::circ(&[-&c, d.clone(), d.clone()])?,
        g: PolyMatrix::circ(&[c.clone(), d.clone(), d.clone()])?,
    };
    construction_16n(&inputs, mode)
}

/// Full AOD(72; 18,54; 72) from order-3 circulants in two variables per
/// side; `BuildMode::Disjoint` yields the disjoint order-72 variant.
pub fn aod72_circulant(
    reg: &mut VarRegistry,
    mode: BuildMode,
) -> Result<AodPair, ConstructionError> {
    let [b, d, x] = ["b", "d", "x"].map(|n| Polynomial::var(reg.var(n)));
    let circ3 = |p: &Polynomial| PolyMatrix::circ(&[p.clone(), p.clone(), p.clone()]);
    let inputs = OctetInputs {
        a1: PolyMatrix::backcirc(&[x.clone(), -&b, b.clone()])?,
        a2: PolyMatrix::circ(&[-&d, d.clone(), d.clone()])?,
        b: circ3(&b)?,
        c: circ3(&b)?,
        d: circ3(&b)?,
        e: circ3(&d)?,
        f: circ3(&d)?,
        g: circ3(&d)?,
    };
    construction_24n(&inputs, mode)
}

/// Full AOD(168; 4,164; 4,164) from order-7 circulant and back-circulant
/// inputs; `BuildMode::Disjoint` yields the disjoint order-168 variant.
///
/// The alternating-pattern inputs A2, D, G must be back-circulant: the
/// pattern satisfies f(z^-1) = 2 - f(z), so as circulants they would not be
/// amicable with the head-and-tail circulants B, C, E, F, while
/// back-circulants pair with circulants unconditionally and the Gram sums
/// are unchanged.
pub fn aod168_circulant(
    reg: &mut VarRegistry,
    mode: BuildMode,
) -> Result<AodPair, ConstructionError> {
    let [a, b, c, d] = ["a", "b", "c", "d"].map(|n| Polynomial::var(reg.var(n)));
    let alternating = |p: &Polynomial| -> Vec<Polynomial> {
        // (p, -p, -p, p, -p, p, p)
        vec![p.clone(), -p, -p, p.clone(), -p, p.clone(), p.clone()]
    };
    let headed = |head: Polynomial, tail: &Polynomial| -> Vec<Polynomial> {
        let mut v = vec![head];
        v.extend(std::iter::repeat_with(|| tail.clone()).take(6));
        v
    };
    let inputs = OctetInputs {
        a1: PolyMatrix::backcirc(&alternating(&a))?,
        a2: PolyMatrix::backcirc(&alternating(&c))?,
        b: PolyMatrix::circ(&headed(b.clone(), &a))?,
        c: PolyMatrix::circ(&headed(-&b, &a))?,
        d: PolyMatrix::backcirc(&alternating(&a))?,
        e: PolyMatrix::circ(&headed(d.clone(), &c))?,
        f: PolyMatrix::circ(&headed(-&d, &c))?,
        g: PolyMatrix::backcirc(&alternating(&c))?,
    };
    construction_24n(&inputs, mode)
}

pub(crate) fn expect_pass(
    report: VerificationReport,
    design: &str,
) -> Result<(), ConstructionError> {
    if report.passed() {
        Ok(())
    } else {
        Err(ConstructionError::PostVerification {
            design: design.into(),
            report,
        })
    }
}
