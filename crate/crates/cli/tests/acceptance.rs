//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its measured runtime. Criteria with runtime budgets assert them.
//!
//! Run with `cargo test -p odtool --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use std::path::Path;
use std::process::{Command, Output};
use std::sync::{Mutex, MutexGuard};
use std::time::{Duration, Instant};

use od_core::algebra::{Coeff as Rational64, VarRegistry};
use od_core::constructions::{
    aod168_circulant, aod16_vars, aod24_vars, aod48_circulant, aod512, aod72_circulant,
    aod_2_split, combine_pd_aod, double_aod, od1024, pd12, pd8, wolfe_sets, BuildMode,
    CombineVariant, ConstructionError, PdTriple,
};
use od_core::designs::{
    is_full, verify_amicable, verify_aod, verify_disjoint, verify_od, verify_pd,
};
use od_core::numtheory::{
    decide_pd133, hilbert, is_prime, radon_hurwitz, relevant_primes, rho_t_bound, wolfe_bound,
    DeltaTable, ExistenceStatus, RFType,
};

/// The timed criteria serialize on this lock so parallel test scheduling
/// cannot distort their runtime measurements.
static TIMING: Mutex<()> = Mutex::new(());

fn timed() -> MutexGuard<'static, ()> {
    TIMING.lock().unwrap_or_else(|e| e.into_inner())
}

fn report(criterion: &str, elapsed: Duration) {
    println!("ACCEPTANCE PASS {criterion} ({elapsed:.2?})");
}

fn odtool(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_odtool"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn in_range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }

    fn nonzero(&mut self, bound: i64) -> i64 {
        loop {
            let v = self.in_range(-bound, bound);
            if v != 0 {
                return v;
            }
        }
    }
}

#[test]
fn criterion_01_order48_reproduction_via_cli() {
    let _guard = timed();
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let build = odtool(&["build", "aod48_example_3_2"], dir.path());
    assert_eq!(build.status.code(), Some(0), "{build:?}");
    let verify = odtool(
        &[
            "verify",
            "aod",
            "--types",
            "4,10,34/4,44",
            "aod48_example_3_2.c.mat",
            "aod48_example_3_2.d.mat",
        ],
        dir.path(),
    );
    assert_eq!(verify.status.code(), Some(0), "{verify:?}");
    for file in ["aod48_example_3_2.c.mat", "aod48_example_3_2.d.mat"] {
        let full = odtool(&["verify", "full", file], dir.path());
        assert_eq!(full.status.code(), Some(0), "{file} is not full");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    report(
        "1: AOD(48; 4,10,34; 4,44) built and verified through the CLI",
        elapsed,
    );
}

#[test]
fn criterion_02_orders_72_and_168() {
    let _guard = timed();
    let start72 = Instant::now();
    let pair = aod72_circulant(&mut VarRegistry::new(), BuildMode::Full).unwrap();
    assert_eq!(pair.order(), 72);
    assert_eq!(pair.type_c.weight_multiset(), vec![18, 54]);
    assert_eq!(pair.type_d.weight_multiset(), vec![72]);
    assert!(pair.verify().unwrap().passed());
    assert!(is_full(&pair.c).passed() && is_full(&pair.d).passed());
    let elapsed72 = start72.elapsed();
    assert!(elapsed72 < Duration::from_secs(30), "took {elapsed72:?}");

    let start168 = Instant::now();
    let pair = aod168_circulant(&mut VarRegistry::new(), BuildMode::Full).unwrap();
    assert_eq!(pair.order(), 168);
    assert_eq!(pair.type_c.weight_multiset(), vec![4, 164]);
    assert_eq!(pair.type_d.weight_multiset(), vec![4, 164]);
    assert!(pair.verify().unwrap().passed());
    assert!(is_full(&pair.c).passed() && is_full(&pair.d).passed());
    let elapsed168 = start168.elapsed();
    assert!(elapsed168 < Duration::from_secs(30), "took {elapsed168:?}");
    report(
        "2: full AOD(72; 18,54; 72) and AOD(168; 4,164; 4,164) verified",
        elapsed72 + elapsed168,
    );
}

#[test]
fn criterion_03_product_designs_with_independent_condition_checks() {
    let start = Instant::now();
    type PdBuilder = fn(&mut VarRegistry) -> Result<PdTriple, ConstructionError>;
    for (build, n_weight) in [(pd8 as PdBuilder, 5u64), (pd12 as PdBuilder, 9u64)] {
        let mut reg = VarRegistry::new();
        let t = build(&mut reg).unwrap();
        assert_eq!(t.type_m1.weights(), &[1, 1, 1]);
        assert_eq!(t.type_m2.weights(), &[1, 1, 1]);
        assert_eq!(t.type_n.weights(), &[n_weight]);
        // The three defining conditions, each checked on its own.
        assert!(verify_disjoint(&t.m1, &t.n).unwrap().passed(), "(i) M1*N");
        assert!(verify_disjoint(&t.m2, &t.n).unwrap().passed(), "(i) M2*N");
        let sum1 = &t.m1 + &t.n;
        let sum2 = &t.m2 + &t.n;
        assert!(
            verify_od(&sum1, &t.type_m1.concat(&t.type_n).unwrap()).passed(),
            "(ii) M1+N"
        );
        assert!(
            verify_od(&sum2, &t.type_m2.concat(&t.type_n).unwrap()).passed(),
            "(ii) M2+N"
        );
        assert!(
            verify_amicable(&t.m1, &t.m2).unwrap().passed(),
            "(iii) M1 M2^T"
        );
        // And the composite verifier agrees.
        assert!(verify_pd(&t.m1, &t.m2, &t.n, &t.type_m1, &t.type_m2, &t.type_n).passed());
    }
    report(
        "3: PD(8; 1,1,1; 1,1,1; 5) and PD(12; 1,1,1; 1,1,1; 9) with conditions (i)-(iii) checked independently",
        start.elapsed(),
    );
}

#[test]
fn criterion_04_all_variable_aods_meet_the_variable_bound() {
    let start = Instant::now();
    let pair16 = aod16_vars(&mut VarRegistry::new()).unwrap();
    assert_eq!(pair16.type_c.weight_multiset(), vec![2, 2, 2, 10]);
    assert_eq!(pair16.type_d.weight_multiset(), vec![2, 2, 2, 10]);
    assert!(pair16.verify().unwrap().passed());

    let pair24 = aod24_vars(&mut VarRegistry::new()).unwrap();
    assert_eq!(pair24.type_c.weight_multiset(), vec![2, 2, 2, 18]);
    assert_eq!(pair24.type_d.weight_multiset(), vec![2, 2, 2, 18]);
    assert!(pair24.verify().unwrap().passed());
    // Four variables per side at order 24 meets the bound exactly.
    assert_eq!(rho_t_bound(24, 4), 4);
    assert_eq!(pair24.type_c.len() as i64, rho_t_bound(24, 4));
    assert_eq!(pair24.type_d.len() as i64, rho_t_bound(24, 4));
    report(
        "4: AOD(16; 2,2,2,10; 2,2,2,10) and AOD(24; 2,2,2,18; 2,2,2,18); order-24 sides have rho_t(24) = 4 variables",
        start.elapsed(),
    );
}

#[test]
fn criterion_05_doubling_chain() {
    let start = Instant::now();
    let mut reg = VarRegistry::new();
    let base = aod24_vars(&mut reg).unwrap();
    let once = double_aod(&base, 1, &mut reg).unwrap();
    assert_eq!(once.order(), 48);
    assert_eq!(once.type_c.weight_multiset(), vec![4, 4, 4, 18, 18]);
    assert_eq!(once.type_d.weight_multiset(), vec![4, 4, 4, 36]);
    assert!(once.verify().unwrap().passed());

    let twice = double_aod(&base, 2, &mut reg).unwrap();
    assert_eq!(twice.order(), 96);
    assert_eq!(twice.type_c.weight_multiset(), vec![8, 8, 8, 18, 18, 36]);
    assert_eq!(twice.type_d.weight_multiset(), vec![8, 8, 8, 72]);
    assert!(twice.verify().unwrap().passed());
    report(
        "5: doubling gives verified AOD(48; 4,4,4,18,18; 4,4,4,36) and AOD(96; 8,8,8,18,18,36; 8,8,8,72)",
        start.elapsed(),
    );
}

#[test]
fn criterion_06_combiner_reproduces_od24() {
    let start = Instant::now();
    let mut reg = VarRegistry::new();
    let pd = pd12(&mut reg).unwrap();
    let split = aod_2_split(&mut reg).unwrap();
    let (od, t) = combine_pd_aod(&pd, &split, CombineVariant::II, &mut reg).unwrap();
    assert_eq!(od.order(), 24);
    assert_eq!(t.weight_multiset(), vec![1, 1, 1, 1, 1, 1, 9, 9]);
    assert!(verify_od(&od, &t).passed());
    report(
        "6: combine(pd12, split aod2, variant ii) is a verified OD(24; 1,1,1,1,1,1,9,9)",
        start.elapsed(),
    );
}

#[test]
fn criterion_07_heavy_designs() {
    let _guard = timed();
    let start = Instant::now();
    // Fast path: both heavy designs build and fully verify (the builders
    // re-verify internally; Gram routes through the integer decomposition).
    let pair = aod512(&mut VarRegistry::new()).unwrap();
    assert_eq!(pair.order(), 512);
    assert_eq!(pair.type_c.weight_multiset(), vec![64; 8]);
    assert_eq!(pair.type_d.weight_multiset(), vec![64; 8]);
    assert!(verify_aod(&pair.c, &pair.d, &pair.type_c, &pair.type_d)
        .unwrap()
        .passed());
    assert!(is_full(&pair.c).passed() && is_full(&pair.d).passed());

    let (od, t) = od1024(&mut VarRegistry::new()).unwrap();
    assert_eq!(od.order(), 1024);
    assert_eq!(t.weight_multiset(), vec![64; 16]);
    assert!(verify_od(&od, &t).passed());
    assert!(is_full(&od).passed());
    let fast_elapsed = start.elapsed();
    assert!(
        fast_elapsed < Duration::from_secs(300),
        "fast path took {fast_elapsed:?}"
    );

    // The slow direct-polynomial Gram must agree exactly on the order-512
    // design.
    let direct = pair.c.gram_direct();
    let decomposed = pair.c.gram_via_decomposition().unwrap();
    assert_eq!(direct, decomposed, "Gram routes disagree at order 512");

    // Setting every variable of the full OD to one yields a Hadamard
    // matrix of order 1024.
    let ones: std::collections::BTreeMap<_, _> = t
        .vars()
        .iter()
        .map(|&v| (v, od_core::algebra::Polynomial::one()))
        .collect();
    let h = od.substitute(&ones);
    let hd = od_core::algebra::decompose_by_variable(&h).unwrap();
    let hi = hd.constant();
    assert!(hd.parts().is_empty());
    let gram = hi.mul_transpose(hi);
    for i in 0..1024 {
        for j in 0..1024 {
            let expected = if i == j { 1024 } else { 0 };
            assert_eq!(gram.get(i, j), expected, "Hadamard Gram at ({i}, {j})");
        }
    }
    report(
        "7: AOD(2^9; 64 x8; 64 x8) and full OD(2^10; 64 x16) verified; Gram routes agree at order 512",
        start.elapsed(),
    );
}

#[test]
fn cli_builds_the_heavy_design_within_budget() {
    // Companion to criterion 7: the order-1024 design also builds, writes
    // and exits cleanly through the CLI.
    let _guard = timed();
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let out = odtool(&["build", "od1024"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let path = dir.path().join("od1024.mat");
    let metadata = std::fs::metadata(&path).unwrap();
    assert!(metadata.len() > 1024 * 1024, "file suspiciously small");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    println!("ACCEPTANCE PASS 7b: `build od1024` exits 0 ({elapsed:.2?})");
}

#[test]
fn criterion_08_pd133_replay() {
    let start = Instant::now();
    for n in 1..=200u64 {
        let verdict = decide_pd133(n);
        let expected = if matches!(n, 4 | 8 | 12) {
            ExistenceStatus::Exists
        } else {
            ExistenceStatus::NotExists
        };
        assert_eq!(verdict.status(), expected, "n = {n}");
    }
    let sweep_elapsed = start.elapsed();
    assert!(
        sweep_elapsed < Duration::from_secs(1),
        "sweep took {sweep_elapsed:?}"
    );

    let v20 = decide_pd133(20);
    let last = v20.chain().last().unwrap();
    assert_eq!(
        (
            last.rule.as_str(),
            last.inputs.as_str(),
            last.value.as_str()
        ),
        ("S_17", "(1,1,1,3,3,3,17,17,34)", "-1"),
        "n = 20 ends with the failing Hilbert-symbol product"
    );
    let v16 = decide_pd133(16);
    assert!(
        v16.chain()
            .iter()
            .any(|s| s.rule == "full-od32-classification"),
        "n = 16 cites the order-32 classification table"
    );
    let v24 = decide_pd133(24);
    assert!(
        v24.chain().iter().any(|s| s.rule == "od-five-ones-limit"),
        "n > 20 cites the five-ones order bound"
    );
    report(
        "8: PD(n; 1,1,1; 1,1,1; n-3) exists exactly for n in {4, 8, 12} up to 200, with the stated rule chains",
        start.elapsed(),
    );
}

#[test]
fn criterion_09_hilbert_property_suite() {
    let start = Instant::now();
    let primes: Vec<u64> = (2..=100).filter(|&p| is_prime(p)).collect();
    let mut rng = SplitMix(0x0d_1024);
    let r = Rational64::from_integer;
    for _ in 0..10_000 {
        let p = primes[(rng.next() % primes.len() as u64) as usize];
        let a = rng.nonzero(10_000);
        let b = rng.nonzero(10_000);
        let c = rng.nonzero(100);
        let ab = hilbert(r(a), r(b), p).unwrap();
        assert_eq!(ab, hilbert(r(b), r(a), p).unwrap(), "symmetry");
        assert_eq!(
            hilbert(r(a * c), r(b), p).unwrap(),
            ab * hilbert(r(c), r(b), p).unwrap(),
            "bimultiplicativity"
        );
        assert_eq!(hilbert(r(a), r(-a), p).unwrap(), 1, "(a, -a) = 1");
        assert_eq!(
            hilbert(r(a * c * c), r(b), p).unwrap(),
            ab,
            "square insensitivity"
        );
        // Product formula over the relevant primes for positive arguments.
        let (pa, pb) = (a.unsigned_abs(), b.unsigned_abs());
        let mut product = 1;
        for q in relevant_primes(&RFType::new(vec![pa, pb]).unwrap()) {
            product *= hilbert(r(pa as i64), r(pb as i64), q).unwrap();
        }
        assert_eq!(product, 1, "product formula for ({pa}, {pb})");
    }
    report(
        "9: Hilbert-symbol properties hold on 10^4 random triples (|a|,|b| <= 10^4, p <= 100)",
        start.elapsed(),
    );
}

#[test]
fn criterion_10_wolfe_sets_exhaustive() {
    let _guard = timed();
    let start = Instant::now();
    for s in 1..=7u32 {
        for d in [1usize, 3, 5] {
            let sets = wolfe_sets(s, d).unwrap();
            assert_eq!(sets.order(), (1usize << s) * d);
            // The builder already verified; re-run the pair-exhaustive
            // check explicitly as the acceptance assertion.
            assert!(sets.verify().passed(), "s = {s}, d = {d}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    report(
        "10: signed-permutation families pass all three properties pair-exhaustively for s <= 7, d in {1,3,5}",
        elapsed,
    );
}

#[test]
fn criterion_11_bound_functions() {
    let start = Instant::now();
    // Independent oracle, coded directly from the defining formula.
    let oracle = |n: u64| -> u64 {
        let mut m = n;
        let mut a = 0u64;
        while m.is_multiple_of(2) {
            m /= 2;
            a += 1;
        }
        let (c, d) = (a / 4, a % 4);
        8 * c + 2u64.pow(d as u32)
    };
    for n in 1..=4096u64 {
        assert_eq!(radon_hurwitz(n), oracle(n), "n = {n}");
    }
    assert_eq!(wolfe_bound(64), 14);
    assert_eq!(
        DeltaTable::VALUES,
        [[0, 1, 3, 7], [1, 2, 3, 5], [-1, 3, 4, 5], [-1, 1, 5, 6]],
        "delta table must match the stated table exactly"
    );
    report(
        "11: radon_hurwitz matches an independent oracle to 4096; wolfe_bound(2^6) = 14; delta table pinned",
        start.elapsed(),
    );
}

#[test]
fn criterion_01_disjoint_counterpart_builds() {
    // Companion check for criterion 1: the disjoint variant of the same
    // construction is disjoint and not full.
    let pair = aod48_circulant(&mut VarRegistry::new(), BuildMode::Disjoint).unwrap();
    assert!(verify_disjoint(&pair.c, &pair.d).unwrap().passed());
    assert!(!is_full(&pair.c).passed());
}
