#![allow(dead_code)]

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use termfan::algebra::AlgebraPresentation;
use termfan::groebner::IdealSpec;
use termfan::ordering::{random_admissible_ordering, OrderingSpec};
use termfan::parse::parse_polynomial;
use termfan::poly::{Coeff, Monomial, Polynomial, Ring};

pub fn ring_xy() -> Ring {
    Ring::new(["x", "y"]).unwrap()
}

pub fn ring_of(n: usize) -> Ring {
    Ring::new((0..n).map(|i| format!("x{}", i + 1))).unwrap()
}

pub fn poly(text: &str, ring: &Ring) -> Polynomial {
    parse_polynomial(text, ring, false).unwrap()
}

pub fn commutative(ring: &Ring, gens: &[&str]) -> IdealSpec {
    IdealSpec::new(
        AlgebraPresentation::commutative(ring.clone()),
        gens.iter().map(|g| poly(g, ring)).collect(),
    )
    .unwrap()
}

/// The fixed regression ideals in Q[x, y].
pub fn regression_set() -> Vec<(&'static str, IdealSpec)> {
    let r = ring_xy();
    vec![
        ("<x^2 - y>", commutative(&r, &["x^2 - y"])),
        ("<x + y, x - y>", commutative(&r, &["x + y", "x - y"])),
        (
            "<x*y - 1, y^2 - 1>",
            commutative(&r, &["x*y - 1", "y^2 - 1"]),
        ),
    ]
}

pub fn weyl_xd() -> AlgebraPresentation {
    AlgebraPresentation::weyl(Ring::new(["x", "d"]).unwrap(), &[(0, 1)]).unwrap()
}

pub fn seeded_orderings(
    nvars: usize,
    count: usize,
    max_weight: u32,
    seed: u64,
) -> Vec<OrderingSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_admissible_ordering(nvars, max_weight, &mut rng).into())
        .collect()
}

pub fn q(n: i64, d: i64) -> Coeff {
    Coeff::new(n.into(), d.into())
}

pub fn arb_monomial(nvars: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, nvars).prop_map(Monomial::new)
}

pub fn arb_coeff() -> impl Strategy<Value = Coeff> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

pub fn arb_polynomial(
    nvars: usize,
    max_exp: u32,
    max_terms: usize,
) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((arb_monomial(nvars, max_exp), arb_coeff()), 0..=max_terms)
        .prop_map(move |terms| Polynomial::from_terms(nvars, terms))
}

pub fn arb_nonzero_polynomial(
    nvars: usize,
    max_exp: u32,
    max_terms: usize,
) -> impl Strategy<Value = Polynomial> {
    arb_polynomial(nvars, max_exp, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn arb_ordering(nvars: usize) -> impl Strategy<Value = OrderingSpec> {
    (any::<u64>(), 1u32..=6)
        .prop_map(move |(seed, w)| seeded_orderings(nvars, 1, w, seed).remove(0))
}
