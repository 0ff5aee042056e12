//! Acceptance criteria 1-8. Each criterion prints one line:
//! `criterion N: PASS|FAIL <summary> (<seconds>s)`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ccring::consta::{
    a_matrix, a_matrix_direct, a_matrix_kron, delta_brute, delta_profile, ConstaFamily, VerifyMode,
    DELTA_CHECK_LIMIT,
};
use ccring::field::{FieldCtx, Fq, FqPoly};
use ccring::linalg;
use ccring::ring::{ChainRing, RElem, RkElem, RkRing};
use ccring::{Error, DEFAULT_ENUM_LIMIT};

fn base(p: u32, m: usize, e: usize) -> ChainRing {
    ChainRing::new(Arc::new(FieldCtx::build(p, m, None).unwrap()), e).unwrap()
}

fn family(p: u32, m: usize, e: usize, k: u32, n: usize, omega: &str) -> ConstaFamily {
    let r = base(p, m, e);
    let w = r.parse(omega).unwrap();
    ConstaFamily::new(r, k, n, w).unwrap()
}

fn texts(polys: &[FqPoly]) -> Vec<String> {
    polys.iter().map(FqPoly::to_text).collect()
}

const X10_MINUS_1: &str = "2,0,0,0,0,0,0,0,0,0,1";
const F1F3F4: &str = "1,1,1,1,1,1,1,1,1,1";
const F3F4: &str = "1,0,1,0,1,0,1,0,1";
const F3: &str = "1,1,1,1,1";

fn criterion_1() -> String {
    let fam = family(3, 1, 2, 2, 10, "1,0");
    let pr = fam.params();
    assert_eq!((pr.l, pr.n_prime, pr.q, pr.n_pp), (1, 19, 2, 1));
    assert_eq!(texts(fam.factors()), ["1,1", "2,1", "1,1,1,1,1", "1,2,1,2,1"]);
    let rho: Vec<usize> = [1, 2, 11, 23, 89].iter().map(|&i| pr.rho(i).unwrap()).collect();
    assert_eq!(rho, [81, 72, 1, 83, 89]);
    assert_eq!(fam.code_count(), 130321);

    let exps = [7, 2, 18, 15];
    assert_eq!(fam.formula_log_size(&exps), 39);
    assert_eq!(fam.code(&exps).unwrap().space.log_size(), 39);

    let mut g = vec![X10_MINUS_1; 2];
    g.extend([F1F3F4; 5]);
    g.extend([F3F4; 8]);
    g.extend([F3; 3]);
    assert_eq!(texts(&fam.torsion_generators(&exps).unwrap()), g);

    let dec = fam.decompose(&exps).unwrap();
    let mut towers = vec![vec![F3F4, F3]; 2];
    towers.push(vec![F1F3F4, F3]);
    towers.extend(vec![vec![F1F3F4, F3F4]; 4]);
    towers.extend(vec![vec![X10_MINUS_1, F3F4]; 2]);
    let got: Vec<Vec<String>> = dec.towers.iter().map(|t| texts(t.gens())).collect();
    assert_eq!(got, towers);

    let child = fam.child().unwrap();
    let kids = fam.recurse(&exps).unwrap();
    assert_eq!(kids, [vec![3, 2, 6, 6], vec![3, 0, 6, 6], vec![1, 0, 6, 3]]);
    let sizes: Vec<usize> = kids.iter().map(|e| child.formula_log_size(e)).collect();
    assert_eq!(sizes, [7, 9, 23]);

    let dist = fam.constacyclic_distance(&exps, DEFAULT_ENUM_LIMIT).unwrap();
    let d_i: Vec<usize> = dist.d_i.iter().map(|d| d.unwrap()).collect();
    assert_eq!(d_i, [5, 5, 5, 5, 5, 5, 2, 2, 2]);
    let rec = fam.recursive_distance(&exps, DEFAULT_ENUM_LIMIT).unwrap();
    let d_j: Vec<usize> = rec.children.iter().map(|c| c.d.unwrap()).collect();
    assert_eq!(d_j, [5, 5, 2]);
    assert_eq!((dist.d, rec.d), (5, 5));
    "p=3 e=2 k=2 n=10 exps=7,2,18,15: params, factors, rho, 130321 codes, |C| = 3^39, g_s, towers, recursion, d = 5".into()
}

fn exhaustive(p: u32, e: usize, k: u32, n: usize, expected: usize) -> String {
    let fam = family(p, 1, e, k, n, "1");
    let all: Vec<Vec<usize>> = fam.all_exponents().collect();
    assert_eq!(all.len(), expected);
    let mut nonzero = 0;
    for exps in &all {
        let rep = fam.verify_equivalence(exps, VerifyMode::Full);
        assert!(rep.passed, "{exps:?}: {rep:?}");
        let code = fam.code(exps).unwrap();
        match fam.constacyclic_distance(exps, DEFAULT_ENUM_LIMIT) {
            Err(Error::ZeroCode) => assert!(code.space.is_zero(), "{exps:?}"),
            Ok(d) => {
                nonzero += 1;
                assert_eq!(code.space.min_distance(DEFAULT_ENUM_LIMIT).unwrap(), d.d, "{exps:?}");
            }
            Err(err) => panic!("{exps:?}: {err}"),
        }
    }
    format!(
        "p={p} e={e} k={k} n={n}: {} codes verified in full, {nonzero} brute-force distances match",
        all.len()
    )
}

fn criterion_4() -> String {
    let mut checked = 0;
    for (p, k) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
        let f = FieldCtx::prime(p).unwrap();
        let prof = delta_profile(&f, k, DELTA_CHECK_LIMIT).unwrap();
        for (i, &d) in prof.iter().enumerate() {
            let j = i + 1;
            if (p as u64).checked_pow(j as u32).is_some_and(|c| c <= DELTA_CHECK_LIMIT) {
                assert_eq!(delta_brute(&f, k, j, DELTA_CHECK_LIMIT).unwrap(), d, "p={p} k={k} j={j}");
                checked += 1;
            }
        }
    }
    format!("delta profile equals enumeration for {checked} (p, k, j)")
}

fn expansion_oracle(rk: &RkRing, coeffs: &[Fq]) -> RkElem {
    let v1 = rk.v_minus_one();
    let r = rk.base();
    coeffs.iter().enumerate().fold(rk.zero(), |acc, (i, &c)| {
        rk.add(&acc, &rk.scale_r(&r.constant(c), &rk.pow(&v1, i as u64)))
    })
}

fn criterion_5() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut round_trips = 0;
    for (p, e, k) in [(2, 2, 1), (3, 2, 2), (2, 3, 1)] {
        let r = base(p, 1, e);
        let rk = RkRing::new(r.clone(), k, r.one()).unwrap();
        let top = rk.pk() * e;
        let v1 = rk.v_minus_one();
        assert_eq!(rk.nilpotency_index(), top);
        assert!(rk.pow(&v1, top as u64).coords().iter().all(RElem::is_zero));
        assert!(!rk.pow(&v1, top as u64 - 1).coords().iter().all(RElem::is_zero));
        for i in 0..=top {
            let rows = rk.ideal_basis(&rk.pow(&v1, i as u64));
            assert_eq!(linalg::rank(r.field(), &rows), top - i, "p={p} e={e} k={k} i={i}");
        }
        let a = rk.ideal_basis(&rk.from_r(&r.u()));
        let b = rk.ideal_basis(&rk.pow(&v1, rk.pk() as u64));
        let both: Vec<Vec<Fq>> = a.iter().chain(&b).cloned().collect();
        let ra = linalg::rank(r.field(), &a);
        assert_eq!((ra, linalg::rank(r.field(), &b), linalg::rank(r.field(), &both)), (ra, ra, ra));

        let check = |x: &RkElem| {
            let c = rk.v1_expansion(x);
            assert_eq!(&rk.from_v1_expansion(&c), x);
            assert_eq!(&expansion_oracle(&rk, &c), x);
        };
        if (p as u64).pow(top as u32) <= 1 << 16 {
            for x in rk.elements() {
                check(&x);
                round_trips += 1;
            }
        } else {
            for _ in 0..10_000 {
                check(&rk.random(&mut rng));
                round_trips += 1;
            }
        }
    }
    format!("nilpotency, ideal chain, u R_k = (v-1)^(p^k) R_k, {round_trips} expansion round trips")
}

fn criterion_6() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let sets = [(2, 1, 2, 1, 3, "1"), (3, 1, 2, 1, 2, "2"), (3, 1, 2, 2, 10, "1"), (2, 2, 2, 2, 3, "2,1")];
    for &(p, m, e, k, n, w) in &sets {
        let fam = family(p, m, e, k, n, w);
        let r = fam.base();
        let big_n = fam.params().big_n;
        let rand_word = |rng: &mut ChaCha8Rng| (0..big_n).map(|_| r.random(rng)).collect::<Vec<_>>();
        let add = |a: &[RElem], b: &[RElem]| a.iter().zip(b).map(|(x, y)| r.add(x, y)).collect::<Vec<_>>();
        let rk_add = |a: &[RkElem], b: &[RkElem]| a.iter().zip(b).map(|(x, y)| fam.rk().add(x, y)).collect::<Vec<_>>();
        for _ in 0..1000 {
            let (a, b) = (rand_word(&mut rng), rand_word(&mut rng));
            let (pa, pb) = (fam.psi_phi(&a).unwrap(), fam.psi_phi(&b).unwrap());
            assert_eq!(fam.psi_phi(&add(&a, &b)).unwrap(), rk_add(&pa, &pb));
            assert_eq!(fam.psi_phi(&fam.consta_mul(&a, &b)).unwrap(), fam.rk_cyclic_mul(&pa, &pb));
        }
        let mut one = vec![r.zero(); big_n];
        one[0] = r.one();
        let mut rk_one = vec![fam.rk().zero(); n];
        rk_one[0] = fam.rk().one();
        assert_eq!(fam.psi_phi(&one).unwrap(), rk_one);

        let mut images = Vec::new();
        for i in 0..big_n {
            for s in 0..e {
                for j in 0..m {
                    let mut x = vec![r.zero(); big_n];
                    x[i] = r.mul_u_pow(&r.constant(r.field().basis_element(j)), s);
                    let y = fam.psi_phi(&x).unwrap();
                    assert_eq!(fam.psi_phi_inverse(&y).unwrap(), x);
                    images.push(y.iter().flat_map(|c| fam.rk().monomial_coords(c)).collect::<Vec<Fq>>());
                }
            }
        }
        let prime = FieldCtx::prime(p).unwrap();
        let digits: Vec<Vec<Fq>> = images
            .iter()
            .map(|row| row.iter().flat_map(|&c| r.field().digits(c)).map(Fq).collect())
            .collect();
        assert_eq!(linalg::rank(&prime, &digits), big_n * e * m);
    }
    format!("psi phi additive, multiplicative, unital and bijective on {} parameter sets", sets.len())
}

fn criterion_7() -> String {
    for (p, k) in [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2), (3, 3)] {
        let f = FieldCtx::prime(p).unwrap();
        assert_eq!(a_matrix_direct(&f, k), a_matrix_kron(&f, k), "p={p} k={k}");
    }
    for p in [2, 3, 5, 7] {
        let f = FieldCtx::prime(p).unwrap();
        assert!(a_matrix(&f, 1).is_nsc(&f), "A_{p} not NSC");
    }
    let mut dets = 0;
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23] {
        let f = FieldCtx::prime(p).unwrap();
        let mut k = 1;
        while p.pow(k) <= 27 {
            let a = a_matrix_direct(&f, k);
            assert_eq!(linalg::rank(&f, &a), p.pow(k) as usize, "A_{} singular", p.pow(k));
            dets += 1;
            k += 1;
        }
    }
    format!("Kronecker form for 6 orders, A_p NSC for p = 2, 3, 5, 7, {dets} matrices nonsingular")
}

fn criterion_8() -> String {
    let fam = family(3, 1, 2, 2, 10, "1,0");
    let exps = [7, 2, 18, 15];
    let w = fam.min_weight_witness(&exps, DEFAULT_ENUM_LIMIT).unwrap();
    assert_eq!(w.rho, 0);
    assert_eq!(w.weight, 5);
    let code = fam.code(&exps).unwrap();
    assert!(code.space.contains_r(&w.word).unwrap());
    let nonzero = w.word.iter().filter(|c| !c.is_zero()).count();
    assert_eq!(nonzero, 5);
    "weight-5 codeword of C_(7,2,18,15) from C_0, pulled back and checked for membership".into()
}

fn main() {
    let criteria: [(u32, fn() -> String); 8] = [
        (1, criterion_1),
        (2, || exhaustive(2, 2, 1, 3, 25)),
        (3, || exhaustive(3, 2, 1, 2, 49)),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
    ];
    let mut failed = Vec::new();
    for (n, run) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(summary) => println!("criterion {n}: PASS {summary} ({secs:.2}s)"),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {n}: FAIL {msg} ({secs:.2}s)");
                failed.push(n);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
