use lkrep_core::lie::*;
use proptest::prelude::*;

fn dim(d: Diagram, labels: &[u32]) -> u128 {
    weyl_dimension(&DynkinLabeling::new(d, labels.to_vec()).unwrap()).unwrap()
}

fn binom(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn a_labels(n: usize, head: &[u32]) -> Vec<u32> {
    let mut v = vec![0; n];
    v[..head.len()].copy_from_slice(head);
    v
}

#[test]
fn a5_values() {
    let a5 = Diagram::A(5);
    assert_eq!(dim(a5, &[0, 0, 1, 0, 0]), 20);
    assert_eq!(dim(a5, &[1, 0, 1, 0, 0]), 105);
    assert_eq!(dim(a5, &[0, 1, 1, 0, 0]), 210);
}

#[test]
fn a_series_closed_forms() {
    for n in 3..=7usize {
        let a = Diagram::A(n);
        let m = n as u128;
        assert_eq!(dim(a, &a_labels(n, &[1])), m + 1);
        assert_eq!(dim(a, &a_labels(n, &[2])), (m + 1) * (m + 2) / 2);
        assert_eq!(dim(a, &a_labels(n, &[0, 2])), (m + 2) * (m + 1) * (m + 1) * m / 12);
        assert_eq!(dim(a, &a_labels(n, &[1, 1])), (m + 2) * (m + 1) * m / 3);
        assert_eq!(dim(a, &a_labels(n, &[3])), binom(m + 3, 3));
        assert_eq!(dim(a, &a_labels(n, &[0, 0, 1])), binom(m + 1, 3));
        assert_eq!(dim(a, &a_labels(n, &[0, 1, 1])), (m + 1) * binom(m + 2, 4));
        assert_eq!(dim(a, &a_labels(n, &[1, 0, 1])), 3 * binom(m + 2, 4));
    }
}

#[test]
fn basic_representations_of_a_are_exterior_powers() {
    for n in 1..=8usize {
        for k in 1..=n {
            let mut l = vec![0; n];
            l[k - 1] = 1;
            assert_eq!(dim(Diagram::A(n), &l), binom(n as u128 + 1, k as u128));
        }
    }
}

#[test]
fn d5_values() {
    let d5 = Diagram::D(5);
    assert_eq!(dim(d5, &[0, 0, 0, 1, 0]), 16);
    assert_eq!(dim(d5, &[0, 0, 0, 0, 1]), 16);
    assert_eq!(dim(d5, &[1, 0, 0, 1, 0]), 144);
    assert_eq!(dim(d5, &[0, 0, 0, 2, 0]), 126);
    assert_eq!(dim(d5, &[1, 0, 0, 0, 0]), 10);
    for r in 4..=7usize {
        let mut l = vec![0; r];
        l[r - 1] = 1;
        assert_eq!(dim(Diagram::D(r), &l), 1 << (r - 1));
    }
}

#[test]
fn e6_values() {
    assert_eq!(dim(Diagram::E6, &[1, 0, 0, 0, 0, 0]), 27);
    assert_eq!(dim(Diagram::E6, &[0, 0, 0, 0, 1, 0]), 27);
    assert_eq!(dim(Diagram::E6, &[2, 0, 0, 0, 0, 0]), 351);
    assert_eq!(dim(Diagram::E6, &[0, 0, 0, 0, 0, 1]), 78);
    assert_eq!(e6_dimension_direct(&[1, 0, 0, 0, 0, 0]).unwrap(), 27);
    assert_eq!(e6_dimension_direct(&[2, 0, 0, 0, 0, 0]).unwrap(), 351);
}

#[test]
fn e6_direct_formula_agrees_with_weyl() {
    let mut count = 0;
    for code in 0..4u32.pow(6) {
        let mut l = [0u32; 6];
        let mut c = code;
        for x in l.iter_mut() {
            *x = c % 4;
            c /= 4;
        }
        let s: u32 = l.iter().sum();
        if s == 0 || s > 3 {
            continue;
        }
        assert_eq!(e6_dimension_direct(&l).unwrap(), dim(Diagram::E6, &l), "{l:?}");
        count += 1;
    }
    assert_eq!(count, 6 + 21 + 56);
}

#[test]
fn asymmetry() {
    let lab = |d, v: &[u32]| DynkinLabeling::new(d, v.to_vec()).unwrap();
    assert!(is_asymmetric(&lab(Diagram::A(5), &[1, 0, 0, 0, 0])));
    assert!(!is_asymmetric(&lab(Diagram::A(5), &[0, 0, 1, 0, 0])));
    assert!(!is_asymmetric(&lab(Diagram::D(5), &[0, 0, 0, 1, 1])));
    assert!(is_asymmetric(&lab(Diagram::D(5), &[0, 0, 0, 1, 0])));
    assert!(!is_asymmetric(&lab(Diagram::D(6), &[0, 0, 0, 0, 1, 0])));
    assert!(is_asymmetric(&lab(Diagram::E6, &[1, 0, 0, 0, 0, 0])));
    assert!(!is_asymmetric(&lab(Diagram::E6, &[0, 0, 0, 0, 0, 1])));
    assert!(!is_asymmetric(&lab(Diagram::A(1), &[3])));
}

#[test]
fn enumeration_a5() {
    let found = enumerate_irreps_below(Diagram::A(5), 21, true).unwrap();
    let has = |v: &[u32], d: u128| found.iter().any(|(l, x)| l.labels() == v && *x == d);
    assert!(has(&[1, 0, 0, 0, 0], 6));
    assert!(has(&[2, 0, 0, 0, 0], 21));
    assert!(has(&[0, 1, 0, 0, 0], 15));
    assert!(!found.iter().any(|(l, _)| l.labels() == [1, 0, 1, 0, 0]));
    assert!(found.iter().all(|(l, d)| *d <= 21 && is_asymmetric(l)));
    // brute force over small labels as an oracle
    let mut brute = 0;
    for code in 0..5u32.pow(5) {
        let mut l = [0u32; 5];
        let mut c = code;
        for x in l.iter_mut() {
            *x = c % 5;
            c /= 5;
        }
        if l.iter().all(|&x| x == 0) {
            continue;
        }
        let lab = DynkinLabeling::new(Diagram::A(5), l.to_vec()).unwrap();
        if is_asymmetric(&lab) && weyl_dimension(&lab).unwrap() <= 21 {
            brute += 1;
        }
    }
    assert_eq!(found.len(), brute);
}

#[test]
fn enumeration_d5_and_e6() {
    let d5 = enumerate_irreps_below(Diagram::D(5), 21, true).unwrap();
    let labels: Vec<&[u32]> = d5.iter().map(|(l, _)| l.labels()).collect();
    assert_eq!(labels, vec![&[0, 0, 0, 0, 1][..], &[0, 0, 0, 1, 0][..]]);
    assert!(d5.iter().all(|(_, d)| *d == 16));
    let e6 = enumerate_irreps_below(Diagram::E6, 27, true).unwrap();
    let labels: Vec<&[u32]> = e6.iter().map(|(l, _)| l.labels()).collect();
    assert_eq!(labels, vec![&[0, 0, 0, 0, 1, 0][..], &[1, 0, 0, 0, 0, 0][..]]);
    assert!(e6.iter().all(|(_, d)| *d == 27));
    let all = enumerate_irreps_below(Diagram::E6, 78, false).unwrap();
    assert_eq!(all.len(), 3);
}

fn diagrams() -> impl Strategy<Value = Diagram> {
    prop_oneof![
        (1usize..=6).prop_map(Diagram::A),
        (4usize..=6).prop_map(Diagram::D),
        Just(Diagram::E6),
    ]
}

fn labeling() -> impl Strategy<Value = (Diagram, Vec<u32>)> {
    diagrams().prop_flat_map(|d| {
        (Just(d), prop::collection::vec(0u32..3, d.rank()))
            .prop_filter("nontrivial", |(_, v)| v.iter().any(|&x| x > 0))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]
    #[test]
    fn dual_has_the_same_dimension((d, v) in labeling()) {
        if let Some(p) = d.automorphism() {
            let w: Vec<u32> = p.iter().map(|&j| v[j]).collect();
            prop_assert_eq!(dim(d, &v), dim(d, &w));
        }
    }

    #[test]
    fn raising_a_label_grows_the_dimension((d, v) in labeling(), pos in 0usize..7) {
        let i = pos % d.rank();
        let mut w = v.clone();
        w[i] += 1;
        let (a, b) = (dim(d, &v), dim(d, &w));
        // b / a >= (a_i + 2)/(a_i + 1)
        prop_assert!(b * (u128::from(v[i]) + 1) >= a * (u128::from(v[i]) + 2));
    }
}
