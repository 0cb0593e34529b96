use std::cmp::Ordering;

use super::{classify, GradedTableOrdering, OrderingSpec};
use crate::error::{Error, Result};
use crate::poly::{monomials_of_degree, Monomial};

/// A degree ordering that agrees with `ord` on every monomial of degree at most
/// `r + 1` but reverses `x_1^(r+2)` and `x_1^(r+1) x_2`, so that it cannot be
/// compatible.
///
/// The two monomials are first made adjacent inside the degree `r + 2` slice
/// (the lower one is moved to just above the higher one); flipping a
/// non-adjacent pair would not give a total order.
pub fn perturb_to_incompatible(ord: &OrderingSpec, r: u32) -> Result<GradedTableOrdering> {
    let n = ord.nvars();
    if n < 2 {
        return Err(Error::TooFewVariables);
    }
    if r < 1 {
        return Err(Error::InvalidOrdering(
            "perturbation radius must be at least 1".into(),
        ));
    }
    if !classify(ord, 2).degree {
        return Err(Error::NotDegreeOrdering(
            "perturbation needs a degree ordering".into(),
        ));
    }
    let (depth, fallback) = match ord {
        OrderingSpec::Matrix(m) => (r + 2, m.clone()),
        OrderingSpec::Table(t) => (t.depth().max(r + 2), t.fallback().clone()),
    };
    let mut slices: Vec<Vec<Monomial>> = (0..=depth)
        .map(|d| {
            let mut s = monomials_of_degree(n, d);
            s.sort_by(|a, b| ord.compare(a, b));
            s
        })
        .collect();

    let mut pure = vec![0; n];
    pure[0] = r + 2;
    let mut mixed = vec![0; n];
    mixed[0] = r + 1;
    mixed[1] = 1;
    let (pure, mixed) = (Monomial::new(pure), Monomial::new(mixed));
    let (lo, hi) = match ord.compare(&pure, &mixed) {
        Ordering::Less => (pure, mixed),
        _ => (mixed, pure),
    };
    let slice = &mut slices[(r + 2) as usize];
    let from = slice
        .iter()
        .position(|m| *m == lo)
        .expect("slice is complete");
    let moved = slice.remove(from);
    let to = slice
        .iter()
        .position(|m| *m == hi)
        .expect("slice is complete");
    slice.insert(to + 1, moved);

    GradedTableOrdering::new(n, slices, fallback)
}
