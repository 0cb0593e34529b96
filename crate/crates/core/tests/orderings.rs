mod common;

use std::cmp::Ordering;

use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use termfan::ordering::{
    agree_on_slice, classify, metric_distance, perturb_to_incompatible, Distance,
    GradedTableOrdering, MatrixOrdering, OrderingSpec, Tri,
};
use termfan::poly::{monomials_of_degree, monomials_up_to, Monomial};

/// A graded table with shuffled slices up to `depth`, or a random matrix.
fn random_ordering(nvars: usize, seed: u64) -> OrderingSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if seed.is_multiple_of(2) {
        return seeded_orderings(nvars, 1, 1 + (seed % 5) as u32, seed).remove(0);
    }
    let depth = 1 + (seed % 4) as u32;
    let slices: Vec<Vec<Monomial>> = (0..=depth)
        .map(|d| {
            let mut s = monomials_of_degree(nvars, d);
            s.shuffle(&mut rng);
            s
        })
        .collect();
    GradedTableOrdering::new(nvars, slices, MatrixOrdering::grlex(nvars))
        .unwrap()
        .into()
}

/// Independent oracle: the first degree where the sorted orders differ.
fn first_disagreement(a: &OrderingSpec, b: &OrderingSpec, cap: u32) -> Option<u32> {
    let n = a.nvars();
    (1..=cap + 1).find(|&i| {
        let mut sa = monomials_up_to(n, i - 1);
        let mut sb = sa.clone();
        sa.sort_by(|x, y| a.compare(x, y));
        sb.sort_by(|x, y| b.compare(x, y));
        sa != sb
    })
}

fn as_real(d: &Distance) -> f64 {
    match d {
        Distance::Zero => 0.0,
        Distance::Exact(r) => 2f64.powi(-(*r as i32)),
        // below 2^-cap; the oracle treats it as the open bound
        Distance::Below(r) => 2f64.powi(-(*r as i32)),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orderings_are_total_up_to_degree_four(seed in any::<u64>(), n in 2usize..=3) {
        let ord = random_ordering(n, seed);
        let ms = monomials_up_to(n, 4);
        for a in &ms {
            prop_assert_eq!(ord.compare(a, a), Ordering::Equal);
            for b in &ms {
                prop_assert_eq!(ord.compare(a, b), ord.compare(b, a).reverse());
                if a != b {
                    prop_assert_ne!(ord.compare(a, b), Ordering::Equal);
                }
            }
        }
        let mut sorted = ms.clone();
        sorted.sort_by(|a, b| ord.compare(a, b));
        for w in sorted.windows(3) {
            prop_assert!(ord.less(&w[0], &w[1]) && ord.less(&w[1], &w[2]) && ord.less(&w[0], &w[2]));
        }
    }

    #[test]
    fn ultrametric(s1 in any::<u64>(), s2 in any::<u64>(), s3 in any::<u64>()) {
        let (a, b, c) = (random_ordering(2, s1), random_ordering(2, s2), random_ordering(2, s3));
        let cap = 6;
        let ab = as_real(&metric_distance(&a, &b, cap));
        let bc = as_real(&metric_distance(&b, &c, cap));
        let ac = as_real(&metric_distance(&a, &c, cap));
        prop_assert!(ac <= ab.max(bc));
        prop_assert_eq!(ab, as_real(&metric_distance(&b, &a, cap)));
    }

    #[test]
    fn distance_matches_first_disagreement(s1 in any::<u64>(), s2 in any::<u64>()) {
        let (a, b) = (random_ordering(2, s1), random_ordering(2, s2));
        let cap = 5;
        match (metric_distance(&a, &b, cap), first_disagreement(&a, &b, cap)) {
            (Distance::Exact(r), Some(i)) => prop_assert_eq!(r + 1, i),
            (Distance::Below(_) | Distance::Zero, None) => {}
            (d, i) => prop_assert!(false, "distance {d} but first disagreement {i:?}"),
        }
        // d < 2^-r, i.e. d <= 2^-(r+1) for dyadic d, iff agreement on S_{r+1}
        let d = metric_distance(&a, &b, cap);
        for r in 1..=4 {
            let agree = agree_on_slice(&a, &b, r + 1);
            prop_assert_eq!(d.at_most_pow2(r + 1), agree);
            prop_assert_eq!(agree, first_disagreement(&a, &b, r).is_none());
        }
    }

    #[test]
    fn perturbation_is_local(r in 1u32..=3, seed in any::<u64>()) {
        let base: OrderingSpec = match seed % 3 {
            0 => OrderingSpec::grlex(2),
            1 => OrderingSpec::grevlex(3),
            _ => MatrixOrdering::grlex_by(&[1, 0]).into(),
        };
        let p: OrderingSpec = perturb_to_incompatible(&base, r).unwrap().into();
        prop_assert!(agree_on_slice(&base, &p, r + 1));
        prop_assert!(metric_distance(&base, &p, r + 4).at_most_pow2(r + 1));
        let c = classify(&p, r + 3);
        prop_assert!(c.degree);
        prop_assert_eq!(c.compatible, Tri::No);
    }
}

#[test]
fn matrix_orderings_are_compatible_and_classified() {
    for ord in [
        OrderingSpec::lex(3),
        OrderingSpec::grlex(3),
        OrderingSpec::grevlex(3),
    ] {
        let c = classify(&ord, 4);
        assert_eq!(c.compatible, Tri::Yes);
        assert_eq!(c.admissible, Tri::Yes);
        assert!(c.founded_at_one);
    }
    assert!(!classify(&OrderingSpec::lex(2), 4).degree);
    assert!(classify(&OrderingSpec::grevlex(2), 4).degree);
    let neg: OrderingSpec = MatrixOrdering::new(2, vec![vec![-1, 0]]).unwrap().into();
    let c = classify(&neg, 4);
    assert!(!c.founded_at_one);
    assert_eq!(c.admissible, Tri::No);
}

#[test]
fn table_compatibility_is_decided_within_the_window() {
    let r = ring_xy();
    let bad =
        termfan::parse::parse_ordering("table D=2 deg1=(y,x) deg2=(y^2,x^2,x*y)", &r).unwrap();
    let c = classify(&bad, 3);
    assert_eq!(c.compatible, Tri::No);
    let w = c.compatibility_witness.unwrap();
    assert!(bad.less(&w.lower, &w.upper));
    assert!(bad.less(&w.upper.mul(&w.shift), &w.lower.mul(&w.shift)));

    let grlex_table =
        termfan::parse::parse_ordering("table D=2 deg1=(y,x) deg2=(y^2,x*y,x^2)", &r).unwrap();
    assert_eq!(classify(&grlex_table, 3).compatible, Tri::Yes);
    assert_eq!(classify(&grlex_table, 2).compatible, Tri::Unknown);
    assert_eq!(
        metric_distance(&grlex_table, &OrderingSpec::grlex(2), 6),
        Distance::Below(6)
    );
}
