use lkrep_core::numeric::{cis, eigenvalues, CMatrix};
use lkrep_core::reps::{NumericGenerators, SquareFunctor};
use lkrep_core::spectra::*;
use lkrep_core::{full_twist, BraidWord, PolyMatrix, RepKind};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn definite_point() -> (Complex64, Complex64) {
    let th = 0.1;
    (cis(0.05 * th), -cis(th))
}

fn random_word(rng: &mut ChaCha8Rng, strands: usize, len: usize) -> BraidWord {
    let letters: Vec<i64> = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands as i64);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::from_signed(strands, &letters).unwrap()
}

#[test]
fn generator_spectrum_matches_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 3..=6 {
        for _ in 0..10 {
            let q = cis(rng.gen_range(-3.0..3.0));
            let t = cis(rng.gen_range(-3.0..3.0));
            let m = NumericGenerators::new(RepKind::Lk, n, q, t)
                .unwrap()
                .word(&BraidWord::from_signed(n, &[1]).unwrap())
                .unwrap();
            let got = EigMultiset::from_values(eigenvalues(&m), 1e-6);
            assert!(got.approx_eq(&lk_generator_spectrum(n, q, t), 1e-9), "n={n}: {got}");
        }
    }
}

#[test]
fn closed_form_at_four_strands() {
    let (q, t) = (cis(0.7), cis(-2.2));
    let m = NumericGenerators::new(RepKind::Lk, 4, q, t)
        .unwrap()
        .word(&BraidWord::from_signed(4, &[1]).unwrap())
        .unwrap();
    let e = eigen_multiset(&m, 1e-9);
    assert_eq!(e.multiplicity_of(-t * q * q), 1);
    assert_eq!(e.multiplicity_of(-q), 2);
    assert_eq!(e.multiplicity_of(Complex64::new(1.0, 0.0)), 3);
}

#[test]
fn recursion_matches_direct_eigenvalues() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let n = rng.gen_range(3..=6);
        let k = rng.gen_range(2..n);
        let len = rng.gen_range(1..8);
        let w = random_word(&mut rng, k, len);
        let q = cis(rng.gen_range(0.01..0.2));
        let t = -cis(rng.gen_range(0.5..2.0));
        let rec = lk_spectrum_via_recursion(n, k, &w, q, t, 1e-7).unwrap();
        let direct = NumericGenerators::new(RepKind::Lk, n, q, t)
            .unwrap()
            .word(&w.include(n, 0).unwrap())
            .unwrap();
        let direct = EigMultiset::from_values(eigenvalues(&direct), 1e-7);
        assert!(rec.approx_eq(&direct, 1e-8), "n={n} k={k} w={w}: {rec} vs {direct}");
    }
}

#[test]
fn recursion_for_full_twists_and_trivial_case() {
    let (q, t) = definite_point();
    for n in 3..=6 {
        for k in 2..=n {
            let w = full_twist(k, k).unwrap();
            let rec = lk_spectrum_via_recursion(n, k, &w, q, t, 1e-7).unwrap();
            let m = NumericGenerators::new(RepKind::Lk, n, q, t)
                .unwrap()
                .word(&w.include(n, 0).unwrap())
                .unwrap();
            assert!(rec.approx_eq(&EigMultiset::from_values(eigenvalues(&m), 1e-7), 1e-8));
        }
    }
    let sigma = BraidWord::from_signed(2, &[1]).unwrap();
    let rec = lk_spectrum_via_recursion(4, 2, &sigma, q, t, 1e-9).unwrap();
    assert!(rec.approx_eq(&lk_generator_spectrum(4, q, t), 1e-9));
}

#[test]
fn burau_full_twist_spectrum() {
    let (q, t) = (cis(0.37), cis(1.3));
    let one = Complex64::new(1.0, 0.0);
    for n in 2..=6 {
        let gens = NumericGenerators::new(RepKind::Burau, n, q, t).unwrap();
        for k in 2..=n {
            let m = gens.word(&full_twist(n, k).unwrap()).unwrap();
            let got = EigMultiset::from_values(eigenvalues(&m), 1e-6);
            let want = EigMultiset::from_pairs([(q.powi(k as i32), k - 1), (one, n - k)], 1e-9);
            assert!(got.approx_eq(&want, 1e-9), "n={n} k={k}: {got}");
        }
    }
}

#[test]
fn twist_images_commute_exactly() {
    for n in 3..=5 {
        let mats: Vec<PolyMatrix> = (2..n)
            .map(|k| lkrep_core::reps::rep_of_word(RepKind::Lk, &full_twist(n, k).unwrap()).unwrap().matrix)
            .collect();
        for a in &mats {
            for b in &mats {
                assert_eq!(a * b, b * a);
            }
        }
    }
}

#[test]
fn twist_subgroup_spans_a_torus() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 3..=6 {
        for _ in 0..3 {
            let th = rng.gen_range(0.05..0.3);
            let q = cis(rng.gen_range(0.01..0.05) * th);
            let t = -cis(th);
            let w = torus_rank_witness(n, q, t, 20, 1e-8).unwrap();
            assert!(w.is_some(), "n={n}");
        }
    }
}

#[test]
fn normalized_generator_spectrum_is_not_real() {
    let (q, t) = definite_point();
    for n in 3..=6 {
        assert!(!conjugation_closed(&normalized_generator_spectrum(n, q, t)), "n={n}");
    }
}

#[test]
fn generator_spectrum_has_no_kronecker_factorization() {
    let (q, t) = definite_point();
    assert!(kronecker_factorizations(&lk_generator_spectrum(4, q, t), 2, 3).unwrap().is_empty());
    assert!(kronecker_factorizations(&lk_generator_spectrum(5, q, t), 2, 5).unwrap().is_empty());
    assert!(kronecker_factorizations(&lk_generator_spectrum(5, q, t), 5, 2).unwrap().is_empty());
}

#[test]
fn one_nontrivial_eigenvalue_is_not_a_square() {
    let one = Complex64::new(1.0, 0.0);
    let x = cis(0.9);
    let e = EigMultiset::from_pairs([(x, 1), (one, 5)], 1e-9);
    assert!(square_root_multisets(&e, SquareMode::Sym).unwrap().is_empty());
    let e = EigMultiset::from_pairs([(x, 1), (one, 9)], 1e-9);
    assert!(square_root_multisets(&e, SquareMode::Alt).unwrap().is_empty());
    // sanity: the all-ones pattern does have roots
    let e = EigMultiset::from_pairs([(one, 6)], 1e-9);
    assert!(!square_root_multisets(&e, SquareMode::Sym).unwrap().is_empty());
}

fn lk_generators(n: usize, q: Complex64, t: Complex64) -> Vec<CMatrix> {
    let gens = NumericGenerators::new(RepKind::Lk, n, q, t).unwrap();
    (1..n as i64)
        .map(|i| gens.word(&BraidWord::from_signed(n, &[i]).unwrap()).unwrap())
        .collect()
}

#[test]
fn lk_is_irreducible_at_generic_point() {
    let (q, t) = definite_point();
    for n in 3..=5 {
        assert_eq!(commutant_dimension(&lk_generators(n, q, t)).unwrap(), 1, "n={n}");
    }
}

#[test]
fn sym_square_of_permutation_rep_is_reducible() {
    let one = Complex64::new(1.0, 0.0);
    let gens = lk_generators(4, one, -one);
    let dim = commutant_dimension(&gens).unwrap();
    assert!(dim > 1);
    // independent witness: a nonzero vector fixed by every generator
    let mut stacked = CMatrix::zeros(6 * gens.len(), 6);
    for (i, g) in gens.iter().enumerate() {
        stacked
            .view_mut((6 * i, 0), (6, 6))
            .copy_from(&(g - CMatrix::identity(6, 6)));
    }
    assert!(lkrep_core::numeric::null_space(&stacked, 1e-8).dim >= 1);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn sym2_of_spectrum_is_spectrum_of_sym_square(
        d in 1usize..=5,
        phases in prop::collection::vec(-3.0f64..3.0, 5),
        mix in prop::collection::vec(-1.0f64..1.0, 25),
    ) {
        let diag = CMatrix::from_fn(d, d, |r, c| if r == c { cis(phases[r]) } else { Complex64::new(0.0, 0.0) });
        let p = CMatrix::from_fn(d, d, |r, c| {
            Complex64::new(mix[r * 5 + c], 0.0) + if r == c { Complex64::new(3.0, 0.0) } else { Complex64::new(0.0, 0.0) }
        });
        let m = &p * diag * p.clone().try_inverse().unwrap();
        let e = EigMultiset::from_values(eigenvalues(&m), 1e-6);
        let s = EigMultiset::from_values(eigenvalues(&m.sym_square()), 1e-6);
        prop_assert!(sym2_multiset(&e).approx_eq(&s, 1e-7));
        let a = EigMultiset::from_values(eigenvalues(&m.alt_square()), 1e-6);
        prop_assert!(alt2_multiset(&e).approx_eq(&a, 1e-7));
    }
}
