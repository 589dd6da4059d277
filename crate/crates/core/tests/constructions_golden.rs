//! Golden tests for the catalog builders: claimed orders and types, the
//! stated precondition failures, and the invariants of the combiner, the
//! doubling, and the signed-permutation families.

use od_core::algebra::{Coeff, PolyMatrix, Polynomial, VarRegistry};
use od_core::constructions::{
    aod168_circulant, aod16_vars, aod24_vars, aod48_circulant, aod72_circulant, aod_2, aod_2_split,
    base2_blocks, catalog, combine_pd_aod, combined_type_weights, construction_16n, double_aod,
    pd12, pd8, sylvester_hadamard, wolfe_sets, BuildMode, CombineVariant, ConstructionError,
    Design, OctetInputs,
};
use od_core::designs::{is_full, verify_amicable, verify_antiamicable, verify_disjoint, verify_od};

fn weights(pair: &od_core::constructions::AodPair) -> (Vec<u64>, Vec<u64>) {
    (pair.type_c.weight_multiset(), pair.type_d.weight_multiset())
}

#[test]
fn order48_circulant_pair_has_the_golden_type() {
    let mut reg = VarRegistry::new();
    let pair = aod48_circulant(&mut reg, BuildMode::Full).unwrap();
    assert_eq!(pair.order(), 48);
    assert_eq!(weights(&pair), (vec![4, 10, 34], vec![4, 44]));
    assert!(is_full(&pair.c).passed() && is_full(&pair.d).passed());
    // The weight binding comes from the computed Gram form:
    // 4a^2 + 10x^2 + 34b^2 and 4c^2 + 44d^2.
    let names: Vec<(u64, &str)> = pair.type_c.pairs().map(|(w, v)| (w, reg.name(v))).collect();
    assert_eq!(names, vec![(4, "a"), (10, "x"), (34, "b")]);
}

#[test]
fn order48_disjoint_pair() {
    let pair = aod48_circulant(&mut VarRegistry::new(), BuildMode::Disjoint).unwrap();
    assert!(verify_disjoint(&pair.c, &pair.d).unwrap().passed());
    assert!(!is_full(&pair.c).passed());
    assert_eq!(weights(&pair), (vec![2, 5, 17], vec![2, 22]));
}

#[test]
fn order72_and_order168_pairs() {
    let pair = aod72_circulant(&mut VarRegistry::new(), BuildMode::Full).unwrap();
    assert_eq!(pair.order(), 72);
    assert_eq!(weights(&pair), (vec![18, 54], vec![72]));
    assert!(is_full(&pair.c).passed() && is_full(&pair.d).passed());

    let disjoint = aod72_circulant(&mut VarRegistry::new(), BuildMode::Disjoint).unwrap();
    assert!(verify_disjoint(&disjoint.c, &disjoint.d).unwrap().passed());

    let pair = aod168_circulant(&mut VarRegistry::new(), BuildMode::Full).unwrap();
    assert_eq!(pair.order(), 168);
    assert_eq!(weights(&pair), (vec![4, 164], vec![4, 164]));
    assert!(is_full(&pair.c).passed() && is_full(&pair.d).passed());
}

#[test]
fn scalar_constraint_violations_are_reported_with_the_equation() {
    // Replacing B = circ(b,b,b) by circ(a,b,b) breaks the weighted Gram
    // identity on the first side.
    let mut reg = VarRegistry::new();
    let [a, b, c, d, x] = ["a", "b", "c", "d", "x"].map(|n| Polynomial::var(reg.var(n)));
    let inputs = OctetInputs {
        a1: PolyMatrix::backcirc(&[x.clone(), -&b, b.clone()]).unwrap(),
        a2: PolyMatrix::circ(&[-&d, d.clone(), d.clone()]).unwrap(),
        b: PolyMatrix::circ(&[a.clone(), b.clone(), b.clone()]).unwrap(),
        c: PolyMatrix::circ(&[-&a, b.clone(), b.clone()]).unwrap(),
        d: PolyMatrix::circ(&[a.clone(), b.clone(), b.clone()]).unwrap(),
        e: PolyMatrix::circ(&[d.clone(), d.clone(), d.clone()]).unwrap(),
        f: PolyMatrix::circ(&[-&c, d.clone(), d.clone()]).unwrap(),
        g: PolyMatrix::circ(&[c.clone(), d.clone(), d.clone()]).unwrap(),
    };
    match construction_16n(&inputs, BuildMode::Full) {
        Err(ConstructionError::Precondition { condition }) => {
            assert!(
                condition.contains("A1"),
                "wrong equation named: {condition}"
            );
        }
        other => panic!("expected a precondition failure, got {other:?}"),
    }
}

#[test]
fn product_design_types() {
    let t8 = pd8(&mut VarRegistry::new()).unwrap();
    assert_eq!(t8.order(), 8);
    assert_eq!(t8.type_n.weights(), &[5]);
    let t12 = pd12(&mut VarRegistry::new()).unwrap();
    assert_eq!(t12.order(), 12);
    assert_eq!(t12.type_n.weights(), &[9]);
    for t in [&t8, &t12] {
        assert_eq!(t.type_m1.weights(), &[1, 1, 1]);
        assert_eq!(t.type_m2.weights(), &[1, 1, 1]);
        assert!(t.verify().passed());
    }
}

#[test]
fn all_variable_aods_and_the_wolfe_bound() {
    let pair16 = aod16_vars(&mut VarRegistry::new()).unwrap();
    assert_eq!(weights(&pair16), (vec![2, 2, 2, 10], vec![2, 2, 2, 10]));
    assert!(is_full(&pair16.c).passed());
    // 4 + 4 = 8 variables, within the total-variable bound 2*4 + 2 = 10
    // at order 16.
    let total_vars = pair16.type_c.len() + pair16.type_d.len();
    assert!(total_vars as u64 <= od_core::numtheory::wolfe_bound(16));

    let pair24 = aod24_vars(&mut VarRegistry::new()).unwrap();
    assert_eq!(weights(&pair24), (vec![2, 2, 2, 18], vec![2, 2, 2, 18]));
    assert!(is_full(&pair24.c).passed());
}

#[test]
fn combiner_reproduces_the_small_ods() {
    let mut reg = VarRegistry::new();
    let pd = pd12(&mut reg).unwrap();
    let split = aod_2_split(&mut reg).unwrap();
    let (od, t) = combine_pd_aod(&pd, &split, CombineVariant::II, &mut reg).unwrap();
    assert_eq!(od.order(), 24);
    assert_eq!(t.weight_multiset(), vec![1, 1, 1, 1, 1, 1, 9, 9]);
    assert!(verify_od(&od, &t).passed());

    let mut reg = VarRegistry::new();
    let pd = pd8(&mut reg).unwrap();
    let split = aod_2_split(&mut reg).unwrap();
    let (od, t) = combine_pd_aod(&pd, &split, CombineVariant::I, &mut reg).unwrap();
    assert_eq!(od.order(), 16);
    assert_eq!(t.weight_multiset(), vec![1, 1, 1, 1, 1, 1, 10]);
    assert_eq!(t.weight_sum(), 16, "type sum equals the order: full");
    assert!(is_full(&od).passed());
}

#[test]
fn combiner_type_arithmetic_matches_the_four_variants() {
    let pd = (&[1u64, 1, 1][..], &[1u64, 1, 1][..], &[17u64][..]);
    let aod = (&[1u64, 1, 2][..], 1u64, &[1u64, 2][..]);
    assert_eq!(
        combined_type_weights(CombineVariant::II, pd, aod),
        vec![1, 1, 1, 3, 3, 3, 17, 17, 34],
    );
    assert_eq!(
        combined_type_weights(CombineVariant::I, pd, aod),
        vec![1, 1, 1, 3, 3, 3, 4 * 17],
    );
    assert_eq!(
        combined_type_weights(CombineVariant::III, pd, aod),
        vec![1, 1, 1, 3, 6, 4 * 17],
    );
    assert_eq!(
        combined_type_weights(CombineVariant::IV, pd, aod),
        vec![1, 1, 1, 3, 6, 17, 17, 34],
    );
}

#[test]
fn all_four_variants_verify_on_pd8() {
    for variant in [
        CombineVariant::I,
        CombineVariant::II,
        CombineVariant::III,
        CombineVariant::IV,
    ] {
        let mut reg = VarRegistry::new();
        let pd = pd8(&mut reg).unwrap();
        let split = aod_2_split(&mut reg).unwrap();
        let (od, t) = combine_pd_aod(&pd, &split, variant, &mut reg).unwrap();
        assert_eq!(od.order(), 16);
        assert!(verify_od(&od, &t).passed(), "variant {variant:?}");
    }
}

#[test]
fn doubling_chain_matches_the_golden_types() {
    let mut reg = VarRegistry::new();
    let base = aod24_vars(&mut reg).unwrap();
    let once = double_aod(&base, 1, &mut reg).unwrap();
    assert_eq!(once.order(), 48);
    assert_eq!(weights(&once), (vec![4, 4, 4, 18, 18], vec![4, 4, 4, 36]));
    let twice = double_aod(&base, 2, &mut reg).unwrap();
    assert_eq!(twice.order(), 96);
    assert_eq!(
        weights(&twice),
        (vec![8, 8, 8, 18, 18, 36], vec![8, 8, 8, 72])
    );
    // Doubling aod16 lands in the order-32 family: (10,10,4,4,4; 4,4,4,20).
    let mut reg = VarRegistry::new();
    let base16 = aod16_vars(&mut reg).unwrap();
    let once16 = double_aod(&base16, 1, &mut reg).unwrap();
    assert_eq!(weights(&once16), (vec![4, 4, 4, 10, 10], vec![4, 4, 4, 20]));
    // Doubled designs of full inputs stay full.
    assert!(is_full(&once.c).passed() && is_full(&once.d).passed());
}

#[test]
fn doubling_preserves_verification_not_just_types() {
    let mut reg = VarRegistry::new();
    let base = aod_2(&mut reg).unwrap();
    let doubled = double_aod(&base, 3, &mut reg).unwrap();
    assert_eq!(doubled.order(), 16);
    assert!(doubled.verify().unwrap().passed());
    assert_eq!(
        weights(&doubled),
        (vec![1, 1, 2, 4, 8], vec![8, 8]),
        "t = 3 type list (u1, u1, 2u1, 4u1, 8u2; 8v1, 8v2)"
    );
}

#[test]
fn wolfe_set_small_cases() {
    let blocks = base2_blocks();
    let sets = wolfe_sets(1, 1).unwrap();
    assert_eq!(sets.a, vec![blocks.i.clone(), blocks.r.clone()]);
    assert_eq!(sets.b, vec![blocks.p.clone(), blocks.q.clone()]);
    // s = 2, d = 3: the leading members expand to the stated products.
    let id3 = PolyMatrix::identity(3);
    let sets2 = wolfe_sets(2, 3).unwrap();
    assert_eq!(sets2.a[0], PolyMatrix::identity(12));
    assert_eq!(sets2.b[0], blocks.p.kron(&blocks.p).kron(&id3));
    assert_eq!(sets2.a[1], blocks.r.kron(&blocks.p).kron(&id3));
    assert_eq!(sets2.a[2], blocks.i.kron(&blocks.r).kron(&id3));
    assert_eq!(sets2.b[2], blocks.i.kron(&blocks.q).kron(&id3));
    for s in 1..=4u32 {
        for d in [1usize, 3] {
            let sets = wolfe_sets(s, d).unwrap();
            assert_eq!(sets.order(), (1 << s) * d);
            assert_eq!(sets.a.len(), s as usize + 1);
            assert!(sets.verify().passed());
        }
    }
}

#[test]
fn folded_blocks_of_the_order512_construction() {
    // Rebuild the X_j blocks from the public pieces and check the stated
    // identities at order 128: X_j X_j^T = 64 (x_{2j-1}^2 + x_{2j}^2) I,
    // anti-amicability within the family, amicability across families,
    // and fullness (the 1/2 factors cancel because the supports split).
    let mut reg = VarRegistry::new();
    let sets = wolfe_sets(7, 1).unwrap();
    let h = sylvester_hadamard(7);
    let half = Coeff::new(1, 2);
    let fold = |family: &[PolyMatrix],
                stem: &str,
                reg: &mut VarRegistry|
     -> Vec<(PolyMatrix, Polynomial)> {
        (0..4)
            .map(|j| {
                let v1 = Polynomial::var(reg.var(&format!("{stem}{}", 2 * j + 1)));
                let v2 = Polynomial::var(reg.var(&format!("{stem}{}", 2 * j + 2)));
                let diff = (&family[2 * j] - &family[2 * j + 1])
                    .mat_mul(&h)
                    .unwrap()
                    .scale(&half)
                    .scale_poly(&v1);
                let sum = (&family[2 * j] + &family[2 * j + 1])
                    .mat_mul(&h)
                    .unwrap()
                    .scale(&half)
                    .scale_poly(&v2);
                let q = &(&v1 * &v1) + &(&v2 * &v2);
                (&diff + &sum, q.scale(&Coeff::from_integer(64)))
            })
            .collect()
    };
    let xs = fold(&sets.a, "x", &mut reg);
    let ys = fold(&sets.b, "y", &mut reg);
    for (x, expected_gram) in &xs {
        assert!(is_full(x).passed());
        assert_eq!(x.gram().is_scalar_identity().as_ref(), Some(expected_gram));
    }
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                assert!(verify_antiamicable(&xs[i].0, &xs[j].0).unwrap().passed());
                assert!(verify_antiamicable(&ys[i].0, &ys[j].0).unwrap().passed());
            }
            assert!(verify_amicable(&xs[i].0, &ys[j].0).unwrap().passed());
        }
    }
}

#[test]
fn light_catalog_entries_build_and_verify() {
    for entry in catalog().into_iter().filter(|e| e.order <= 200) {
        let mut reg = VarRegistry::new();
        let design = (entry.build)(&mut reg)
            .unwrap_or_else(|e| panic!("{} failed to build: {e}", entry.name));
        assert_eq!(design.order(), entry.order, "{}", entry.name);
        let report = design.verify().unwrap();
        assert!(report.passed(), "{}: {report}", entry.name);
        if let Design::Od { matrix, od_type } = &design {
            if !matrix.has_zero_entry() {
                assert_eq!(
                    od_type.weight_sum() as usize,
                    matrix.order(),
                    "{}: full ODs have type sum equal to the order",
                    entry.name
                );
            }
        }
    }
}

#[test]
fn gram_routes_agree_on_light_catalog_designs() {
    for entry in catalog().into_iter().filter(|e| e.order <= 48) {
        let mut reg = VarRegistry::new();
        let design = (entry.build)(&mut reg).unwrap();
        let matrices: Vec<&PolyMatrix> = match &design {
            Design::Od { matrix, .. } => vec![matrix],
            Design::Aod(p) => vec![&p.c, &p.d],
            Design::Pd(t) => vec![&t.m1, &t.m2, &t.n],
        };
        for m in matrices {
            assert_eq!(
                m.gram_direct(),
                m.gram_via_decomposition().unwrap(),
                "{}",
                entry.name
            );
        }
    }
}

#[test]
fn catalog_aods_double_and_collapse() {
    // Every light catalog AOD folds into an OD of the concatenated type,
    // and full ones collapse to Hadamard matrices.
    for entry in catalog().into_iter().filter(|e| e.order <= 200) {
        let mut reg = VarRegistry::new();
        let Design::Aod(pair) = (entry.build)(&mut reg).unwrap() else {
            continue;
        };
        let (m, t) = pair.doubled_od().unwrap();
        assert!(verify_od(&m, &t).passed(), "{} doubled", entry.name);
        if is_full(&pair.c).passed() && is_full(&pair.d).passed() {
            for (side, st) in [(&pair.c, &pair.type_c), (&pair.d, &pair.type_d)] {
                let h = od_core::designs::collapse(side, st).unwrap();
                assert_eq!(
                    h.gram().is_scalar_identity(),
                    Some(Polynomial::integer(entry.order as i64)),
                    "{} collapse",
                    entry.name
                );
            }
        }
    }
}

#[test]
fn catalog_names_are_unique_and_contain_the_required_entries() {
    let names: Vec<&str> = catalog().iter().map(|e| e.name).collect();
    let mut dedup = names.clone();
    dedup.sort_unstable();
    dedup.dedup();
    assert_eq!(dedup.len(), names.len(), "duplicate catalog names");
    for required in ["aod48_example_3_2", "od1024"] {
        assert!(names.contains(&required), "missing {required}");
    }
}
