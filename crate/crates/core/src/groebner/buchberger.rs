use std::collections::BTreeSet;

use num_traits::One;

use super::division::reduce_unchecked;
use super::{check_preconditions, GroebnerBasis, IdealSpec};
use crate::algebra::AlgebraPresentation;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ordering::OrderingSpec;
use crate::poly::Polynomial;

/// S-pair reductions allowed in one completion.
pub const BUCHBERGER_BUDGET: usize = 100_000;

fn s_polynomial(
    f: &Polynomial,
    g: &Polynomial,
    ord: &OrderingSpec,
    algebra: &AlgebraPresentation,
) -> Result<Polynomial> {
    let lf = f.leading_monomial(ord).expect("nonzero");
    let lg = g.leading_monomial(ord).expect("nonzero");
    let l = lf.lcm(lg);
    let uf = algebra.left_mul_monomial(&lf.quotient_of(&l).expect("lcm"), f)?;
    let vg = algebra.left_mul_monomial(&lg.quotient_of(&l).expect("lcm"), g)?;
    let mut s = uf.scale(&uf.coeff(&l).recip());
    s.add_scaled(&vg, &-vg.coeff(&l).recip());
    Ok(s)
}

fn lcm_degree(a: &Polynomial, b: &Polynomial, ord: &OrderingSpec) -> u32 {
    let la = a.leading_monomial(ord).expect("nonzero");
    let lb = b.leading_monomial(ord).expect("nonzero");
    la.lcm(lb).degree()
}

/// Completes the generators of a left ideal to a Gröbner basis by saturating
/// S-polynomials. Pairs are processed by increasing lcm degree, then index.
pub fn buchberger(ideal: &IdealSpec, ord: &OrderingSpec) -> Result<GroebnerBasis> {
    let algebra = ideal.algebra();
    check_preconditions(algebra, ord)?;
    let n = algebra.nvars();
    let commutative = algebra.is_commutative();
    let unit = || GroebnerBasis {
        elements: vec![Polynomial::one(n)],
        ordering: ord.clone(),
        algebra: algebra.clone(),
        reduced: false,
    };

    let mut basis: Vec<Polynomial> = Vec::new();
    for g in ideal.generators() {
        if g.is_constant() {
            return Ok(unit());
        }
        basis.push(g.monic(ord));
    }
    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((lcm_degree(&basis[i], &basis[j], ord), i, j));
        }
    }
    let mut steps = 0usize;
    while let Some((_, i, j)) = pairs.pop_first() {
        let li = basis[i].leading_monomial(ord).expect("nonzero");
        let lj = basis[j].leading_monomial(ord).expect("nonzero");
        // coprime criterion only holds for commuting leading terms
        if commutative && li.is_coprime(lj) {
            continue;
        }
        steps += 1;
        if steps > BUCHBERGER_BUDGET {
            return Err(Error::BuchbergerBudget {
                budget: BUCHBERGER_BUDGET,
                basis_len: basis.len(),
                pending: pairs.len(),
            });
        }
        let s = s_polynomial(&basis[i], &basis[j], ord, algebra)?;
        let r = reduce_unchecked(&s, &basis, ord, algebra)?;
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(unit());
        }
        let k = basis.len();
        basis.push(r.monic(ord));
        for i in 0..k {
            pairs.insert((lcm_degree(&basis[i], &basis[k], ord), i, k));
        }
    }
    Ok(GroebnerBasis {
        elements: basis,
        ordering: ord.clone(),
        algebra: algebra.clone(),
        reduced: false,
    })
}

/// Gröbner certificate: every S-polynomial of `elements` reduces to zero.
pub fn s_remainders_vanish(
    elements: &[Polynomial],
    ord: &OrderingSpec,
    algebra: &AlgebraPresentation,
) -> Result<bool> {
    check_preconditions(algebra, ord)?;
    let elements: Vec<&Polynomial> = elements.iter().filter(|p| !p.is_zero()).collect();
    let owned: Vec<Polynomial> = elements.iter().map(|p| (*p).clone()).collect();
    for j in 0..owned.len() {
        for i in 0..j {
            let s = s_polynomial(&owned[i], &owned[j], ord, algebra)?;
            if !reduce_unchecked(&s, &owned, ord, algebra)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Drops elements whose leading monomial lies in the ideal of the others'
/// leading monomials, tail-reduces the rest, and makes everything monic.
/// The result is sorted by leading monomial, descending.
pub fn reduce_gb(g: &GroebnerBasis) -> Result<GroebnerBasis> {
    let ord = &g.ordering;
    let algebra = &g.algebra;
    check_preconditions(algebra, ord)?;

    let mut elems: Vec<Polynomial> = g
        .elements
        .iter()
        .filter(|p| !p.is_zero())
        .cloned()
        .collect();
    elems.sort_by(|a, b| {
        ord.compare(
            a.leading_monomial(ord).expect("nonzero"),
            b.leading_monomial(ord).expect("nonzero"),
        )
    });
    // rule (a): keep an element only if no kept leading monomial divides its own
    let mut kept: Vec<Polynomial> = Vec::new();
    for p in elems {
        let lm = p.leading_monomial(ord).expect("nonzero");
        if !kept
            .iter()
            .any(|q| q.leading_monomial(ord).expect("nonzero").divides(lm))
        {
            kept.push(p);
        }
    }
    // rule (b): tail reduction against the others
    for k in 0..kept.len() {
        let others: Vec<Polynomial> = kept
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, p)| p.clone())
            .collect();
        let r = reduce_unchecked(&kept[k], &others, ord, algebra)?;
        kept[k] = r.monic(ord);
    }
    kept.sort_by(|a, b| {
        ord.compare(
            b.leading_monomial(ord).expect("nonzero"),
            a.leading_monomial(ord).expect("nonzero"),
        )
    });
    debug_assert!(kept
        .iter()
        .all(|p| p.leading_term(ord).map(|t| t.1.is_one()).unwrap_or(false)));
    Ok(GroebnerBasis {
        elements: kept,
        ordering: ord.clone(),
        algebra: algebra.clone(),
        reduced: true,
    })
}

/// The leading monomial ideal of the left ideal under `ord`.
pub fn leading_ideal(ideal: &IdealSpec, ord: &OrderingSpec) -> Result<MonomialIdeal> {
    Ok(reduce_gb(&buchberger(ideal, ord)?)?.leading_ideal())
}
