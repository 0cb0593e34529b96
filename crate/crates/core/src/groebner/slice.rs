use std::collections::HashMap;

use super::{buchberger, reduce_gb, IdealSpec};
use crate::error::{Error, Result};
use crate::ordering::OrderingSpec;
use crate::poly::{grevlex_cmp, monomials_up_to, Monomial, Polynomial};

/// A spanning set of `L_{<=s} = { f in L : deg f <= s }`.
///
/// Products `m * g` of bounded degree over the raw generators can miss
/// elements whose degree drops by cancellation (`y(xy-1) - x(y^2-1) = x - y`).
/// Over a Gröbner basis for a degree-compatible ordering every element has a
/// representation without such cancellation, so its bounded products span the
/// whole truncation.
pub fn truncation_span(ideal: &IdealSpec, s: u32) -> Result<Vec<Polynomial>> {
    let n = ideal.nvars();
    let algebra = ideal.algebra();
    let basis = reduce_gb(&buchberger(ideal, &OrderingSpec::grlex(n))?)?;
    let mut span = Vec::new();
    for g in basis.elements() {
        let dg = g.degree().expect("nonzero");
        if dg > s {
            continue;
        }
        for m in monomials_up_to(n, s - dg) {
            span.push(algebra.left_mul_monomial(&m, g)?);
        }
    }
    Ok(span)
}

/// Leading monomials of the nonzero elements of the span of `vectors`: the
/// pivots of an echelon form whose columns are ordered by `ord`, descending.
pub fn pivot_monomials(vectors: &[Polynomial], ord: &OrderingSpec) -> Vec<Monomial> {
    let mut rows: HashMap<Monomial, Polynomial> = HashMap::new();
    for v in vectors {
        let mut v = v.clone();
        while let Some(lm) = v.leading_monomial(ord).cloned() {
            match rows.get(&lm) {
                Some(row) => {
                    let f = v.coeff(&lm) / row.coeff(&lm);
                    v.add_scaled(row, &-f);
                }
                None => {
                    rows.insert(lm, v);
                    break;
                }
            }
        }
    }
    let mut pivots: Vec<Monomial> = rows.into_keys().collect();
    pivots.sort_by(|a, b| grevlex_cmp(b, a));
    pivots
}

/// `{ LM(f) : f in L_{<=s}, f != 0 }` for a degree ordering on a commutative ring.
pub fn slice_leading_monomials(
    ideal: &IdealSpec,
    ord: &OrderingSpec,
    s: u32,
) -> Result<Vec<Monomial>> {
    if !ord.is_degree_ordering() {
        return Err(Error::NotDegreeOrdering(
            "truncated leading monomials are only exact for degree orderings".into(),
        ));
    }
    if !ideal.algebra().is_commutative() {
        return Err(Error::UnsupportedAlgebra(
            "slice triangularization is defined for commutative rings".into(),
        ));
    }
    if ideal.generators().is_empty() {
        return Ok(Vec::new());
    }
    Ok(pivot_monomials(&truncation_span(ideal, s)?, ord))
}
