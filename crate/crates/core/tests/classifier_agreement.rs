//! Classifiers against brute-force enumeration, exhaustively where the
//! tournament count allows and on seeded samples elsewhere.

mod common;

use std::thread;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectramono_core::*;

type G = GaussianRational;

/// Runs `check` on every code in `0..total`, split across threads.
fn for_all_codes(total: u64, check: impl Fn(u64) + Sync) {
    let workers = thread::available_parallelism().map_or(4, |n| n.get()) as u64;
    let chunk = total.div_ceil(workers);
    thread::scope(|s| {
        for w in 0..workers {
            let check = &check;
            s.spawn(move || (w * chunk..((w + 1) * chunk).min(total)).for_each(check));
        }
    });
}

fn assert_agrees(g: &HermitianStructure<G>, cls: &Classification<G>, context: &str) {
    let brute = is_k_spectrally_monomorphic(g, cls.k).unwrap();
    assert_eq!(cls.is_monomorphic(), brute.verdict, "{context}: {cls:?}");
    match &cls.verdict {
        Verdict::NotMonomorphic { witness, .. } => {
            let w = witness.as_ref().unwrap_or_else(|| panic!("{context}: no witness"));
            let a = g.substructure(&w.reference).unwrap();
            let b = g.substructure(&w.mismatch).unwrap();
            assert_eq!(a.order(), cls.k);
            assert_ne!(char_poly(&a), char_poly(&b), "{context}");
        }
        _ => {
            let rep = cls.representative(g.order()).unwrap();
            assert_eq!(&rep.apply_selector(cls.witness_selector.as_ref().unwrap()).unwrap(), g, "{context}");
        }
    }
}

/// Tournament on `n` vertices where `dominator` beats everyone and the
/// remaining pairs are oriented by `code`.
fn with_dominator(n: usize, dominator: usize, code: u64) -> Tournament {
    let rest = Tournament::from_code(n - 1, code);
    let idx = |v: usize| if v < dominator { v } else { v - 1 };
    Tournament::from_upper(n, |i, j| {
        if i == dominator {
            true
        } else if j == dominator {
            false
        } else {
            rest.dominates(idx(i), idx(j))
        }
    })
}

#[test]
fn k3_on_c_representations() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for trial in 0..1500 {
        let n = rng.gen_range(5..=7);
        let c = if trial % 3 == 0 { G::i() } else { random_unit(&mut rng) };
        let t = if trial % 5 == 0 { hat(&random_tournament(&mut rng, n - 1)) } else { random_tournament(&mut rng, n) };
        let g = c_representation(&t, &c).unwrap().structure;
        assert_agrees(&g, &classify_k3(&g).unwrap(), &format!("trial {trial}"));
    }
}

#[test]
fn k4_at_seven_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for trial in 0..2000 {
        let g: HermitianStructure<G> = i_representation(&random_tournament(&mut rng, 7));
        assert_agrees(&g, &classify_k4(&g).unwrap(), &format!("random {trial}"));
    }
    for_all_codes(7 << 15, |x| {
        let (dominator, code) = ((x >> 15) as usize, x & 0x7fff);
        let g: HermitianStructure<G> = i_representation(&with_dominator(7, dominator, code));
        assert_agrees(&g, &classify_k4(&g).unwrap(), &format!("dominator {dominator}, code {code}"));
    });
}

fn agree_n_minus_3(n: usize, code: u64) {
    let g: HermitianStructure<G> = i_representation(&Tournament::from_code(n, code));
    assert_agrees(&g, &classify_n_minus_3(&g).unwrap(), &format!("n {n}, code {code}"));
}

#[test]
fn n_minus_3_exhaustive_at_six() {
    for_all_codes(Tournament::count_labeled(6).unwrap(), |code| agree_n_minus_3(6, code));
}

/// All 2^21 labeled 7-tournaments.
#[test]
fn n_minus_3_exhaustive_at_seven() {
    for_all_codes(Tournament::count_labeled(7).unwrap(), |code| agree_n_minus_3(7, code));
}

#[test]
fn n_minus_3_sampled_at_eight() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let mut drt_hats = 0;
    for trial in 0..3000 {
        let t = match trial % 3 {
            0 => random_tournament(&mut rng, 8),
            1 => hat(&random_tournament(&mut rng, 7)),
            // Random relabelings of hat(Paley-7) mixed into other positions.
            _ => {
                let base = hat(&paley_tournament(7).unwrap());
                let mut perm: Vec<usize> = (0..8).collect();
                for i in (1..8).rev() {
                    perm.swap(i, rng.gen_range(0..=i));
                }
                base.induced(&perm).unwrap()
            }
        };
        let c = if trial % 7 == 0 { random_unit(&mut rng) } else { G::i() };
        let g = c_representation(&t, &c).unwrap().structure;
        let cls = classify_n_minus_3(&g).unwrap();
        drt_hats += matches!(cls.verdict, Verdict::IRepDrtHat { .. }) as usize;
        assert_agrees(&g, &cls, &format!("trial {trial}"));
    }
    assert!(drt_hats > 500);
}

#[test]
fn mid_k_up_to_ten_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for trial in 0..600 {
        let n = rng.gen_range(8..=10);
        let k = rng.gen_range(4..=n - 4);
        let c = random_unit(&mut rng);
        let t = match trial % 4 {
            0 => Tournament::transitive(n).induced(&{
                let mut perm: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    perm.swap(i, rng.gen_range(0..=i));
                }
                perm
            })
            .unwrap(),
            1 => hat(&random_tournament(&mut rng, n - 1)),
            2 => hat(&Tournament::transitive(n - 1)),
            _ => random_tournament(&mut rng, n),
        };
        let g = c_representation(&t, &c).unwrap().structure;
        assert_agrees(&g, &classify_mid_k(&g, k).unwrap(), &format!("trial {trial}, n {n}, k {k}"));
    }
}

#[test]
fn constants_and_degenerate_inputs() {
    for n in 8..=10 {
        for v in [-3, -1, 0, 2] {
            let g = HermitianStructure::<G>::constant(n, Rational::from_integer(v));
            for cls in [classify_k3(&g).unwrap(), classify_k4(&g).unwrap(), classify_mid_k(&g, 4).unwrap(), classify_n_minus_3(&g).unwrap()] {
                assert_eq!(cls.verdict, Verdict::RealConstant { value: Rational::from_integer(v) });
                assert_agrees(&g, &cls, &format!("constant {v}"));
            }
        }
    }
}

#[test]
fn homogeneous_iff_doubly_regular_at_seven() {
    let hits = std::sync::atomic::AtomicUsize::new(0);
    for_all_codes(Tournament::count_labeled(7).unwrap(), |code| {
        let t = Tournament::from_code(7, code);
        let homogeneous = is_homogeneous(&t);
        let drt = is_doubly_regular(&t);
        assert_eq!(homogeneous.is_some(), drt.is_ok(), "code {code}");
        assert_eq!(drt.is_ok(), brute_doubly_regular(&t).is_some(), "code {code}");
        if let Some(k) = homogeneous {
            assert_eq!(k, 2);
            hits.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        }
    });
    // 7!/21 labelings of the unique doubly regular 7-tournament.
    assert_eq!(hits.into_inner(), 240);
}
