//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. All checks use exact arithmetic.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use termfan::algebra::AlgebraPresentation;
use termfan::fan::{
    enumerate_leading_ideals_admissible, enumerate_leading_ideals_degree, minimal_leading_ideals,
    universal_gb, verify_universal,
};
use termfan::groebner::{buchberger, macaulay_check, reduce_gb, IdealSpec};
use termfan::ideal::{hilbert_function, hilbert_polynomial_and_index, MonomialIdeal};
use termfan::ordering::{
    agree_on_slice, classify, metric_distance, perturb_to_incompatible, Distance,
    GradedTableOrdering, MatrixOrdering, OrderingSpec, Tri,
};
use termfan::parse::parse_ordering;
use termfan::poly::{monomials_of_degree, monomials_up_to, Monomial, Polynomial, Ring};

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        passed: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        passed: false,
        detail: detail.into(),
    }
}

fn within(outcome: Outcome, elapsed: Duration, limit: Option<Duration>) -> Outcome {
    match limit {
        Some(l) if elapsed > l && outcome.passed => fail(format!(
            "{} but took {:.2}s > {}s",
            outcome.detail,
            elapsed.as_secs_f64(),
            l.as_secs()
        )),
        _ => outcome,
    }
}

fn ideal_names(ideals: &[&MonomialIdeal], ring: &Ring) -> String {
    let mut v: Vec<String> = ideals.iter().map(|i| i.display(ring).to_string()).collect();
    v.sort();
    format!("{{{}}}", v.join(", "))
}

fn fan_finiteness_and_stability() -> Outcome {
    let ring = ring_xy();
    let mut notes = Vec::new();
    for (name, ideal) in regression_set() {
        let at4 = enumerate_leading_ideals_admissible(&ideal, 4, 0, 0).unwrap();
        let at8 = enumerate_leading_ideals_admissible(&ideal, 8, 0, 0).unwrap();
        let before = ideal_names(&at4.ideals(), &ring);
        let after = ideal_names(&at8.ideals(), &ring);
        if before != after {
            return fail(format!("{name}: W=4 gives {before}, W=8 gives {after}"));
        }
        notes.push(format!("{name}: {} ideals", at4.entries.len()));
    }
    let (_, parabola) = regression_set().remove(0);
    let fan = enumerate_leading_ideals_admissible(&parabola, 4, 0, 0).unwrap();
    let got = ideal_names(&fan.ideals(), &ring);
    if got != "{<x^2>, <y>}" {
        return fail(format!("<x^2 - y> fan is {got}"));
    }
    pass(notes.join("; "))
}

fn minimality() -> Outcome {
    for (name, ideal) in regression_set() {
        let fan = enumerate_leading_ideals_admissible(&ideal, 4, 0, 0).unwrap();
        for a in &fan.entries {
            for b in &fan.entries {
                if a.ideal != b.ideal && a.ideal.is_subset(&b.ideal) {
                    return fail(format!("{name}: comparable distinct leading ideals"));
                }
            }
        }
        if minimal_leading_ideals(&fan) != fan {
            return fail(format!("{name}: minimal filter removed entries"));
        }
    }
    pass("all fans are antichains")
}

fn macaulay_basis() -> Outcome {
    let orderings = seeded_orderings(2, 20, 8, 3_000);
    let mut checks = 0;
    for (name, ideal) in regression_set() {
        for ord in &orderings {
            let report = macaulay_check(&ideal, ord, 4).unwrap();
            if !report.passed() {
                return fail(format!("{name} under {ord:?}: {:?}", report.failures));
            }
            let lead = reduce_gb(&buchberger(&ideal, ord).unwrap())
                .unwrap()
                .leading_ideal();
            for s in 0..=4u32 {
                let hf = hilbert_function(&lead, s).unwrap();
                if report.standard_counts[s as usize] as u128 != hf {
                    return fail(format!(
                        "{name}: {} standard monomials of degree <= {s} but HF = {hf}",
                        report.standard_counts[s as usize]
                    ));
                }
            }
            checks += 1;
        }
    }
    pass(format!("{checks} ideal/ordering pairs at cap 4"))
}

fn random_monomial(rng: &mut ChaCha8Rng, t: usize, max_deg: u32) -> Monomial {
    let d = rng.gen_range(1..=max_deg);
    let all = monomials_of_degree(t, d);
    all.choose(rng).unwrap().clone()
}

/// `J` from random generators, `I` from multiples of them, both in degree <= 4.
fn random_pair(rng: &mut ChaCha8Rng) -> (usize, MonomialIdeal, MonomialIdeal) {
    let t = rng.gen_range(1..=3);
    let j_gens: Vec<Monomial> = (0..rng.gen_range(1..=3))
        .map(|_| random_monomial(rng, t, 4))
        .collect();
    let mut i_gens = Vec::new();
    for g in &j_gens {
        if rng.gen_bool(0.25) {
            continue;
        }
        let room = 4 - g.degree();
        let shift = if room == 0 || rng.gen_bool(0.3) {
            Monomial::one(t)
        } else {
            random_monomial(rng, t, room)
        };
        i_gens.push(g.mul(&shift));
    }
    let j = MonomialIdeal::from_generators(t, j_gens);
    let i = MonomialIdeal::from_generators(t, i_gens);
    (t, i, j)
}

fn hilbert_lemmas() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    let mut index_violations = Vec::new();
    let mut rigidity_violations = Vec::new();
    for _ in 0..200 {
        let (t, i, j) = random_pair(&mut rng);
        assert!(i.is_subset(&j));
        let ind_i = hilbert_polynomial_and_index(&i).unwrap().regularity_index;
        let ind_j = hilbert_polynomial_and_index(&j).unwrap().regularity_index;
        if ind_i < ind_j {
            index_violations.push((t, i.clone(), j.clone(), ind_i, ind_j));
        }
        if !j.is_subset(&i) {
            let top = j.max_generator_degree() + t as u32 + 1;
            let differs = (0..=top)
                .any(|s| hilbert_function(&i, s).unwrap() != hilbert_function(&j, s).unwrap());
            if !differs {
                rigidity_violations.push((i, j));
            }
        }
    }
    let rigidity = format!("rigidity violations {}", rigidity_violations.len());
    if index_violations.is_empty() && rigidity_violations.is_empty() {
        return pass(format!("200 pairs, ind monotone, {rigidity}"));
    }
    let example = index_violations
        .first()
        .map(|(t, i, j, a, b)| {
            let ring = ring_of(*t);
            format!(
                "; e.g. I={} (ind {a}) inside J={} (ind {b})",
                i.display(&ring),
                j.display(&ring)
            )
        })
        .unwrap_or_default();
    fail(format!(
        "ind(I) < ind(J) in {} of 200 pairs, {rigidity}{example}",
        index_violations.len()
    ))
}

fn degree_fans() -> Outcome {
    let ring = ring_xy();
    let parabola = commutative(&ring, &["x^2 - y"]);
    let fan = enumerate_leading_ideals_degree(&parabola, 3).unwrap();
    let got = ideal_names(&fan.ideals(), &ring);
    if got != "{<x^2>}" {
        return fail(format!("<x^2 - y> at D=3 gives {got}"));
    }
    let hyperbola = commutative(&ring, &["x^2 - y^2"]);
    let first = enumerate_leading_ideals_degree(&hyperbola, 3).unwrap();
    let second = enumerate_leading_ideals_degree(&hyperbola, 3).unwrap();
    if first != second {
        return fail("<x^2 - y^2> enumeration is not reproducible");
    }
    pass(format!(
        "<x^2 - y>: {got}; <x^2 - y^2>: {} distinct ideals {}",
        first.entries.len(),
        ideal_names(&first.ideals(), &ring)
    ))
}

fn universal_bases() -> Outcome {
    let orderings = seeded_orderings(2, 1000, 16, 6_000);
    let mut sizes = Vec::new();
    for (name, ideal) in regression_set() {
        let fan = enumerate_leading_ideals_admissible(&ideal, 4, 0, 0).unwrap();
        let u = universal_gb(&fan).unwrap();
        let report = verify_universal(&u, &ideal, &orderings).unwrap();
        if !report.passed() {
            return fail(format!(
                "{name}: {} failures, first {:?}",
                report.failures.len(),
                report.failures[0]
            ));
        }
        sizes.push(format!("{name}: |U|={}", u.len()));
    }
    pass(format!(
        "1000 orderings, zero failures; {}",
        sizes.join("; ")
    ))
}

fn multiplicativity_counterexample() -> Outcome {
    let ring = Ring::new(["Y", "Z"]).unwrap();
    let alg = AlgebraPresentation::commutative(ring.clone());
    let ord = parse_ordering("table D=2 deg1=(Y,Z) deg2=(Y^2,Z^2,Y*Z)", &ring).unwrap();
    let s = poly("Y + Z", &ring);
    match alg.check_multiplicative(&ord, &[(s.clone(), s)]).unwrap() {
        Some(c) if c.leading_of_product == Monomial::new(vec![1, 1]) => pass(format!(
            "LT((Y+Z)^2) = {} but LT(Y+Z)^2 = {}",
            c.leading_of_product.display(&ring),
            c.product_of_leading.display(&ring)
        )),
        Some(c) => fail(format!(
            "unexpected leading monomial {}",
            c.leading_of_product.display(&ring)
        )),
        None => fail("multiplicativity reported to hold"),
    }
}

fn nowhere_density() -> Outcome {
    let grlex = OrderingSpec::grlex(2);
    let mut notes = Vec::new();
    for r in 1..=3 {
        let p: OrderingSpec = perturb_to_incompatible(&grlex, r).unwrap().into();
        let d = metric_distance(&grlex, &p, r + 4);
        let c = classify(&p, r + 3);
        if !d.at_most_pow2(r + 1) || !c.degree || c.compatible != Tri::No {
            return fail(format!(
                "r={r}: distance {d}, degree {}, compatible {}",
                c.degree, c.compatible
            ));
        }
        notes.push(format!("r={r}: d={d}"));
    }
    pass(notes.join(", "))
}

fn random_weyl_element(rng: &mut ChaCha8Rng) -> Polynomial {
    let ms = monomials_up_to(2, 3);
    loop {
        let terms: Vec<_> = (0..rng.gen_range(1..=4))
            .map(|_| {
                (
                    ms.choose(rng).unwrap().clone(),
                    q(rng.gen_range(-5..=5), rng.gen_range(1..=3)),
                )
            })
            .collect();
        let p = Polynomial::from_terms(2, terms);
        if !p.is_zero() {
            return p;
        }
    }
}

fn weyl_path() -> Outcome {
    let w = weyl_xd();
    let ring = w.ring().clone();
    let mut notes = Vec::new();
    for gen in ["d", "x*d - 1"] {
        let ideal = IdealSpec::new(w.clone(), vec![poly(gen, &ring)]).unwrap();
        let fan = enumerate_leading_ideals_admissible(&ideal, 4, 0, 0).unwrap();
        for a in &fan.entries {
            for b in &fan.entries {
                if a.ideal != b.ideal && a.ideal.is_subset(&b.ideal) {
                    return fail(format!("<{gen}>: comparable leading ideals"));
                }
            }
        }
        notes.push(format!("<{gen}>: {}", ideal_names(&fan.ideals(), &ring)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(100);
    let samples: Vec<_> = (0..100)
        .map(|_| (random_weyl_element(&mut rng), random_weyl_element(&mut rng)))
        .collect();
    match w
        .check_multiplicative(&OrderingSpec::grlex(2), &samples)
        .unwrap()
    {
        None => pass(format!("{}; 100 products multiplicative", notes.join("; "))),
        Some(c) => fail(format!("sample {} is not multiplicative", c.sample)),
    }
}

fn random_ordering(rng: &mut ChaCha8Rng) -> OrderingSpec {
    if rng.gen_bool(0.5) {
        let seed = rng.gen();
        return seeded_orderings(2, 1, rng.gen_range(1..=6), seed).remove(0);
    }
    // tables that share prefixes with grlex often enough to exercise small distances
    let depth = rng.gen_range(1..=5);
    let keep = rng.gen_range(0..=depth);
    let slices = (0..=depth)
        .map(|d| {
            let mut s = monomials_of_degree(2, d);
            if d > keep {
                s.shuffle(rng);
            } else {
                s.reverse();
            }
            s
        })
        .collect();
    GradedTableOrdering::new(2, slices, MatrixOrdering::grlex(2))
        .unwrap()
        .into()
}

fn value(d: Distance) -> f64 {
    match d {
        Distance::Zero => 0.0,
        Distance::Exact(r) | Distance::Below(r) => 2f64.powi(-(r as i32)),
    }
}

fn metric_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    let cap = 8;
    let mut equivalences = 0;
    for k in 0..500 {
        let (a, b, c) = (
            random_ordering(&mut rng),
            random_ordering(&mut rng),
            random_ordering(&mut rng),
        );
        let (ab, bc, ac) = (
            metric_distance(&a, &b, cap),
            metric_distance(&b, &c, cap),
            metric_distance(&a, &c, cap),
        );
        if value(ac) > value(ab).max(value(bc)) {
            return fail(format!("triple {k}: d(a,c)={ac} > max({ab}, {bc})"));
        }
        for (x, y, d) in [(&a, &b, ab), (&b, &c, bc), (&a, &c, ac)] {
            for r in 0..=4u32 {
                // d < 2^-r iff the orderings agree on S_{r+1}
                let below = d != Distance::Exact(r) && d.at_most_pow2(r);
                if below != agree_on_slice(x, y, r + 1) {
                    return fail(format!(
                        "triple {k}, r={r}: distance {d} disagrees with slice agreement"
                    ));
                }
                equivalences += 1;
            }
        }
    }
    pass(format!("500 triples, {equivalences} slice equivalences"))
}

/// Number, name, check and optional time limit in seconds.
type Criterion = (u32, &'static str, fn() -> Outcome, Option<u64>);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (
            1,
            "fan finiteness and stability",
            fan_finiteness_and_stability,
            Some(10),
        ),
        (2, "minimality of leading ideals", minimality, None),
        (3, "Macaulay basis", macaulay_basis, Some(30)),
        (
            4,
            "Hilbert index monotonicity and rigidity",
            hilbert_lemmas,
            Some(10),
        ),
        (5, "degree-ordering finiteness", degree_fans, Some(60)),
        (6, "universal Groebner basis", universal_bases, Some(60)),
        (
            7,
            "multiplicativity counterexample",
            multiplicativity_counterexample,
            None,
        ),
        (8, "nowhere-density witness", nowhere_density, None),
        (9, "Weyl algebra path", weyl_path, Some(30)),
        (10, "metric and topology", metric_suite, Some(10)),
    ];
    let mut failed = 0;
    for (n, name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = within(outcome, elapsed, limit.map(Duration::from_secs));
        let tag = if outcome.passed { "PASS" } else { "FAIL" };
        println!(
            "{tag} criterion {n:>2} ({name}) [{:.2}s]: {}",
            elapsed.as_secs_f64(),
            outcome.detail
        );
        if !outcome.passed {
            failed += 1;
        }
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
