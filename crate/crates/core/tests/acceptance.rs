//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p spectramono-core --test acceptance`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectramono_core::charpoly::determinant_of_subset;
use spectramono_core::subsets::{mask_of, KSubsets};
use spectramono_core::*;

type G = GaussianRational;

fn hat_paley(q: u64) -> HermitianStructure<G> {
    i_representation(&hat(&paley_tournament(q).unwrap()))
}

fn within(start: Instant, limit: Duration) {
    let elapsed = start.elapsed();
    assert!(elapsed < limit, "took {elapsed:?}, limit {limit:?}");
}

fn char_poly_of_hat_paley_seven() {
    let start = Instant::now();
    let s = skew_adjacency(&hat(&paley_tournament(7).unwrap()));
    let g = constructions::i_weighted_structure(&s).unwrap();
    let p = char_poly(&g);
    within(start, Duration::from_secs(1));
    // (x² - 7)⁴ = x⁸ - 28x⁶ + 294x⁴ - 1372x² + 2401
    let expected: Vec<Q> = [2401, 0, -1372, 0, 294, 0, -28, 0, 1].iter().map(|&v| q(v)).collect();
    assert_eq!(big_coeffs(&p), expected);
    assert_eq!(interpolated_char_poly(&matrix_of(&g)), expected);
}

fn deletion_spectra_of_hat_paley() {
    for (qq, subsets, limit) in [(7, 93, 5), (11, 299, 30)] {
        let start = Instant::now();
        let s = skew_adjacency(&hat(&paley_tournament(qq).unwrap()));
        let report = verify_deletion_spectra(&s, 3).unwrap();
        within(start, Duration::from_secs(limit));
        assert!(report.valid, "q = {qq}: failed at {:?}", report.failure);
        assert_eq!(report.subsets_checked, subsets);
    }
    // Spot-check the closed forms against the interpolation oracle.
    let g = hat_paley(7);
    for deleted in [vec![], vec![3], vec![0, 5], vec![1, 2, 6]] {
        let keep: Vec<usize> = (0..8).filter(|v| !deleted.contains(v)).collect();
        let sub = g.substructure(&keep).unwrap();
        let expected: RealPolynomial<Rational> = closed_form_deletion_poly(1, deleted.len()).unwrap();
        assert_eq!(interpolated_char_poly(&matrix_of(&sub)), big_coeffs(&expected));
    }
}

fn monomorphy_of_hat_paley_seven() {
    let start = Instant::now();
    let g = hat_paley(7);
    let five = is_k_spectrally_monomorphic(&g, 5).unwrap();
    let four = is_k_spectrally_monomorphic(&g, 4).unwrap();
    within(start, Duration::from_secs(1));
    assert!(five.verdict);
    assert_eq!(five.subsets_examined, 56);
    assert_eq!(five.common_poly.unwrap().to_string(), "x^5-10x^3+21x");
    assert!(!four.verdict);
    let w = four.witness.unwrap();
    let mut dets = [
        determinant_of_subset(&g, mask_of(&w.reference)),
        determinant_of_subset(&g, mask_of(&w.mismatch)),
    ];
    dets.sort();
    assert_eq!(dets, [Rational::ONE, Rational::from_integer(9)]);
    for side in [&w.reference, &w.mismatch] {
        let m = matrix_of(&g.substructure(side).unwrap());
        assert!(cofactor_det(&m) == C::new(q(1), q(0)) || cofactor_det(&m) == C::new(q(9), q(0)));
    }
}

fn three_cycle_char_poly() {
    let g: HermitianStructure<G> = i_representation(&Tournament::three_cycle());
    let p = char_poly(&g);
    assert_eq!(p.to_string(), "x^3-3x");
    assert_eq!(big_coeffs(&p), interpolated_char_poly(&matrix_of(&g)));
}

fn coefficient_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let g = random_hermitian(&mut rng, n);
        let p = char_poly(&g);
        let m = matrix_of(&g);
        assert_eq!(big_coeffs(&p), interpolated_char_poly(&m));
        for pp in 1..=n {
            // Oracle: principal minors by cofactor expansion.
            let mut oracle = C::zero();
            for mask in KSubsets::new(n, pp) {
                let vs = subsets::vertices(mask);
                let sub: Vec<Vec<C>> = vs.iter().map(|&i| vs.iter().map(|&j| m[i][j].clone()).collect()).collect();
                oracle += cofactor_det(&sub);
            }
            assert!(oracle.im.is_zero());
            let sum = principal_minor_sum(&g, pp).unwrap();
            assert_eq!(sum.to_big(), oracle.re);
            let signed = if pp % 2 == 0 { sum } else { -sum };
            assert_eq!(p.coeff(n - pp), signed);
        }
    }
}

fn scaling_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let n = rng.gen_range(1..=5);
        let g = random_hermitian(&mut rng, n);
        let delta = random_selector(&mut rng, n);
        let s = delta.modulus_sqr();
        let lhs = char_poly(&g.apply_selector(&delta).unwrap());
        assert_eq!(lhs, scaled_poly(&char_poly(&g), &s).unwrap());
        // Oracle: s^n P(x/s) has coefficient s^(n-j) a_j at x^j.
        let base = interpolated_char_poly(&matrix_of(&g));
        let sb = s.to_big();
        let expected: Vec<Q> = base
            .iter()
            .enumerate()
            .map(|(j, a)| a.clone() * num_traits::pow(sb.clone(), n - j))
            .collect();
        assert_eq!(big_coeffs(&lhs), expected);
    }
}

fn exhaustive_k3_agreement() {
    let start = Instant::now();
    for n in [5, 6] {
        let total = Tournament::count_labeled(n).unwrap();
        let mut checked = 0;
        for code in 0..total {
            let g: HermitianStructure<G> = i_representation(&Tournament::from_code(n, code));
            let cls = classify_k3(&g).unwrap();
            let brute = is_k_spectrally_monomorphic(&g, 3).unwrap();
            assert_eq!(cls.is_monomorphic(), brute.verdict, "n = {n}, code = {code}");
            checked += 1;
        }
        assert_eq!(checked, [1024, 32768][n - 5]);
    }
    within(start, Duration::from_secs(120));
}

fn n_minus_3_on_hat_paley_seven() {
    let g = hat_paley(7);
    let cls = classify_n_minus_3(&g).unwrap();
    let Verdict::IRepDrtHat { tournament, .. } = &cls.verdict else {
        panic!("unexpected verdict {:?}", cls.verdict);
    };
    assert_eq!(tournament, &paley_tournament(7).unwrap());
    let rebuilt = cls.representative(8).unwrap().apply_selector(cls.witness_selector.as_ref().unwrap()).unwrap();
    assert_eq!(rebuilt, g);
}

fn drt_hadamard_round_trip() {
    for qq in [3, 7, 11] {
        let t = paley_tournament(qq).unwrap();
        let h = skew_hadamard_from_drt(&t).unwrap();
        let n = h.order();
        assert_eq!(n, qq as usize + 1);
        assert!(validate_sign_matrix(&h, SignMatrixKind::SkewHadamard).valid);
        assert!(validate_sign_matrix(&h, SignMatrixKind::Hadamard).valid);
        let s = h.minus_identity().unwrap();
        assert!(validate_sign_matrix(&s, SignMatrixKind::SkewConference).valid);
        assert!(validate_sign_matrix(&s, SignMatrixKind::Conference).valid);
        // Oracle: HHᵗ = nI and H + Hᵗ = 2I in plain integers.
        for i in 0..n {
            for j in 0..n {
                let dot: i64 = (0..n).map(|c| h.get(i, c) * h.get(j, c)).sum();
                assert_eq!(dot, if i == j { n as i64 } else { 0 });
                assert_eq!(h.get(i, j) + h.get(j, i), if i == j { 2 } else { 0 });
            }
        }
        assert_eq!(drt_from_skew_hadamard(&h).unwrap(), t);
    }
}

fn homogeneous_order_identity() {
    let mut found = Vec::new();
    for qq in (3..100u64).filter(|v| v % 4 == 3) {
        let Ok(t) = paley_tournament(qq) else { continue };
        let n = t.order();
        let k = is_homogeneous(&t).expect("Paley tournaments are homogeneous");
        for x in 0..n {
            for y in x + 1..n {
                assert_eq!(brute_c3(&t, x, y), k);
            }
        }
        assert_eq!(n, 4 * k - 1);
        assert_eq!(brute_doubly_regular(&t), Some((n - 3) / 4));
        found.push((qq, k));
    }
    assert!(found.contains(&(7, 2)) && found.contains(&(11, 3)), "{found:?}");
}

fn c3_from_determinants() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let m = rng.gen_range(3..=8);
        let t = random_tournament(&mut rng, m);
        let g: HermitianStructure<G> = i_representation(&hat(&t));
        let x = rng.gen_range(0..m);
        let y = (x + rng.gen_range(1..m)) % m;
        assert_eq!(c3_via_determinants(&g, 0, x + 1, y + 1).unwrap(), brute_c3(&t, x, y));
    }
}

fn window_sum(table: &[Q], n: usize, p: usize, window: u64) -> Q {
    KSubsets::new(n, p)
        .enumerate()
        .filter(|&(_, m)| m & window == m)
        .fold(Q::zero(), |acc, (i, _)| acc + table[i].clone())
}

fn oracle_hypothesis(table: &[Q], n: usize, p: usize, r: usize) -> bool {
    let mut sums = KSubsets::new(n, p + r).map(|b| window_sum(table, n, p, b));
    let first = sums.next().unwrap();
    sums.all(|s| s == first)
}

fn window_sum_transfer() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let shapes = [(5, 2, 1), (6, 2, 2), (7, 3, 1), (6, 1, 4), (8, 3, 2), (7, 2, 3)];
    for trial in 0..50 {
        let (n, p, r) = shapes[trial % shapes.len()];
        assert!(n >= 2 * p + r);
        let cols = subsets::binomial(n, p) as usize;
        // Rows: window sums minus the first window sum; their nullspace is
        // exactly the set of tables satisfying the hypothesis.
        let windows: Vec<Vec<Q>> = KSubsets::new(n, p + r)
            .map(|b| KSubsets::new(n, p).map(|m| if m & b == m { Q::one() } else { Q::zero() }).collect())
            .collect();
        let rows: Vec<Vec<Q>> =
            windows[1..].iter().map(|w| w.iter().zip(&windows[0]).map(|(a, b)| a - b).collect()).collect();
        let basis = nullspace(rows, cols);
        assert!(!basis.is_empty());
        let mut table = vec![Q::zero(); cols];
        for v in &basis {
            let coef = q(rng.gen_range(-9..=9));
            for (t, b) in table.iter_mut().zip(v) {
                *t += coef.clone() * b;
            }
        }
        assert!(oracle_hypothesis(&table, n, p, r));
        let f = monomorphy::SubsetTable::new(n, p, table.iter().cloned().map(Rational::from).collect()).unwrap();
        let report = pouzet_transfer_check(&f, r).unwrap();
        assert!(report.hypothesis_holds);
        assert!(report.cardinality_dependence_holds);
        assert_eq!(report.conclusion_holds, Some(true));
        assert!(table.iter().all(|v| v == &table[0]));
    }
    for trial in 0..50 {
        let (n, p, r) = shapes[trial % shapes.len()];
        let cols = subsets::binomial(n, p) as usize;
        let table: Vec<Q> = (0..cols).map(|_| q(rng.gen_range(-5..=5))).collect();
        let oracle = oracle_hypothesis(&table, n, p, r);
        let f = monomorphy::SubsetTable::new(n, p, table.iter().cloned().map(Rational::from).collect()).unwrap();
        let report = pouzet_transfer_check(&f, r).unwrap();
        assert_eq!(report.hypothesis_holds, oracle);
        assert!(!report.hypothesis_holds, "random table satisfied the hypothesis");
        assert!(report.consistent());
    }
}

fn main() {
    let criteria: [(&str, fn()); 12] = [
        ("char poly of iS for hat(Paley-7) is (x^2-7)^4", char_poly_of_hat_paley_seven),
        ("deletion spectra of hat(Paley-7) and hat(Paley-11) match the closed forms", deletion_spectra_of_hat_paley),
        ("hat(Paley-7) is 5- but not 4-spectrally monomorphic, witness dets 9 and 1", monomorphy_of_hat_paley_seven),
        ("3-cycle i-representation has char poly x^3-3x", three_cycle_char_poly),
        ("coefficients are signed principal minor sums on 100 random structures", coefficient_identity),
        ("selector scaling law on 100 random pairs", scaling_law),
        ("classify_k3 agrees with enumeration on all 5- and 6-vertex tournaments", exhaustive_k3_agreement),
        ("classify_n_minus_3 recovers Paley-7 from its hat", n_minus_3_on_hat_paley_seven),
        ("DRT to skew Hadamard round trip on Paley-3, 7, 11", drt_hadamard_round_trip),
        ("homogeneous Paley tournaments have 4k-1 vertices", homogeneous_order_identity),
        ("C3 from determinants equals triangle counts on 200 instances", c3_from_determinants),
        ("transfer lemma on constrained and unconstrained tables", window_sum_transfer),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS ({elapsed:.2?}) {name}", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2}: FAIL ({elapsed:.2?}) {name}: {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
