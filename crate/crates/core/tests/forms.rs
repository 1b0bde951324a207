use lkrep_core::forms::*;
use lkrep_core::numeric::{cis, eigenvalues, unitarity_defect, CMatrix};
use lkrep_core::reps::{NumericGenerators, PairBasis};
use lkrep_core::spectra::EigMultiset;
use lkrep_core::{BraidWord, RepKind};
use num_complex::Complex64;

fn generators(n: usize, q: Complex64, t: Complex64) -> Vec<CMatrix> {
    let g = NumericGenerators::new(RepKind::Lk, n, q, t).unwrap();
    (1..n as i64)
        .map(|i| g.word(&BraidWord::from_signed(n, &[i]).unwrap()).unwrap())
        .collect()
}

#[test]
fn three_strands_small_q_angle() {
    let (q, t) = (cis(0.01), -cis(0.1));
    let f = invariant_form(3, q, t).unwrap();
    assert!(f.residual <= 1e-10);
    assert_eq!(f.nullspace_dim, 1);
    assert!(is_definite(&f).0);
    assert!((f.gram.adjoint() - &f.gram).norm() < 1e-12);
}

#[test]
fn definite_at_low_ratio_for_small_strand_counts() {
    for n in 3..=5 {
        let f = find_definite_point(n, 0.1, &[0.05, 0.02, 0.01]).unwrap().expect("definite point");
        assert!(f.residual <= 1e-8);
        assert_eq!(f.nullspace_dim, 1);
        for a in generators(n, f.q, f.t) {
            let u = unitarize(&a, &f).unwrap();
            assert!(unitarity_defect(&u) < 1e-8);
            let before = EigMultiset::from_values(eigenvalues(&a), 1e-7);
            let after = EigMultiset::from_values(eigenvalues(&u), 1e-7);
            assert!(before.approx_eq(&after, 1e-8));
        }
    }
}

#[test]
fn unitarized_generators_satisfy_braid_relations() {
    let (q, t) = scan_point(0.1, 0.05);
    let f = invariant_form(4, q, t).unwrap();
    let u: Vec<CMatrix> = generators(4, q, t)
        .iter()
        .map(|a| unitarize(a, &f).unwrap())
        .collect();
    assert!((&u[0] * &u[1] * &u[0] - &u[1] * &u[0] * &u[1]).norm() < 1e-8);
    assert!((&u[1] * &u[2] * &u[1] - &u[2] * &u[1] * &u[2]).norm() < 1e-8);
    assert!((&u[0] * &u[2] - &u[2] * &u[0]).norm() < 1e-8);
}

#[test]
fn prefix_block_of_the_form_is_invariant_for_fewer_strands() {
    let (q, t) = scan_point(0.1, 0.05);
    let f = invariant_form(5, q, t).unwrap();
    for k in 2..5 {
        let m = PairBasis::prefix_len(k);
        let block = f.gram.view((0, 0), (m, m)).clone_owned();
        for a in generators(k, q, t) {
            assert!((a.adjoint() * &block * &a - &block).norm() < 1e-8);
        }
    }
}

#[test]
fn scan_is_consistent_and_finds_both_signs() {
    let rows = definiteness_scan(4, &[0.1, 2.0], &[0.01, 0.05, 0.3, 1.0]).unwrap();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().filter(|r| r.definite).all(|r| r.residual <= 1e-8));
    // ratios ≤ 0.05 at θ_t = 0.1 are definite
    assert!(rows[..2].iter().all(|r| r.definite));
    // far from the limit regime the form is indefinite somewhere
    assert!(rows.iter().any(|r| !r.definite));
    let mut buf = Vec::new();
    write_scan_csv(&rows, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert!(text.starts_with(
        "n,theta_t,ratio,q_re,q_im,t_re,t_im,residual,nullspace_dim,definite,min_eig\n"
    ));
    assert_eq!(text.lines().count(), 9);
}

#[test]
fn scan_regions_are_nonempty_for_three_and_four_strands() {
    for n in [3, 4] {
        let rows = definiteness_scan(n, &[0.1], &[0.01, 0.02, 0.05]).unwrap();
        assert!(rows.iter().all(|r| r.definite));
    }
}

#[test]
fn scan_rejects_bad_grids() {
    assert!(definiteness_scan(3, &[0.0], &[0.1]).is_err());
    assert!(definiteness_scan(3, &[0.1], &[-1.0]).is_err());
}

#[test]
fn indefinite_form_refuses_unitarization() {
    let (q, t) = scan_point(2.0, 1.0);
    let f = invariant_form(4, q, t).unwrap();
    assert!(!is_definite(&f).0);
    let a = &generators(4, q, t)[0];
    assert!(unitarize(a, &f).is_err());
}
