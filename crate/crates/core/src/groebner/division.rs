use num_traits::Zero;

use super::check_preconditions;
use crate::algebra::AlgebraPresentation;
use crate::error::Result;
use crate::ordering::OrderingSpec;
use crate::poly::{Coeff, Monomial, Polynomial};

/// `a = sum_k quotients[k] * divisors[k] + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Left division of `a` by `divisors`. At every step the lowest-index divisor
/// whose leading monomial divides the current leading monomial is used; terms
/// no leading monomial divides move to the remainder.
pub fn divide(
    a: &Polynomial,
    divisors: &[Polynomial],
    ord: &OrderingSpec,
    algebra: &AlgebraPresentation,
) -> Result<Division> {
    check_preconditions(algebra, ord)?;
    divide_unchecked(a, divisors, ord, algebra)
}

pub(crate) fn divide_unchecked(
    a: &Polynomial,
    divisors: &[Polynomial],
    ord: &OrderingSpec,
    algebra: &AlgebraPresentation,
) -> Result<Division> {
    let n = algebra.nvars();
    let leads: Vec<Option<Monomial>> = divisors
        .iter()
        .map(|f| f.leading_monomial(ord).cloned())
        .collect();
    let mut quotients = vec![Polynomial::zero(n); divisors.len()];
    let mut remainder = Polynomial::zero(n);
    let mut p = a.clone();
    while let Some(m) = p.leading_monomial(ord).cloned() {
        let c = p.coeff(&m);
        let hit = leads
            .iter()
            .enumerate()
            .find_map(|(k, l)| l.as_ref().and_then(|l| l.quotient_of(&m)).map(|u| (k, u)));
        match hit {
            Some((k, u)) => {
                let uf = algebra.left_mul_monomial(&u, &divisors[k])?;
                let lc = uf.coeff(&m);
                debug_assert!(!lc.is_zero(), "leading monomial must be multiplicative");
                let factor = c / lc;
                quotients[k].add_term(u, factor.clone());
                p.add_scaled(&uf, &-factor);
            }
            None => {
                remainder.add_term(m.clone(), c.clone());
                p.add_term(m, -c);
            }
        }
    }
    Ok(Division {
        quotients,
        remainder,
    })
}

/// Remainder only, for callers that do not need the quotients.
pub(crate) fn reduce_unchecked(
    a: &Polynomial,
    divisors: &[Polynomial],
    ord: &OrderingSpec,
    algebra: &AlgebraPresentation,
) -> Result<Polynomial> {
    let n = algebra.nvars();
    let leads: Vec<Option<(Monomial, Coeff)>> =
        divisors.iter().map(|f| f.leading_term(ord).ok()).collect();
    let mut remainder = Polynomial::zero(n);
    let mut p = a.clone();
    while let Some(m) = p.leading_monomial(ord).cloned() {
        let c = p.coeff(&m);
        let hit = leads.iter().enumerate().find_map(|(k, l)| {
            l.as_ref()
                .and_then(|(l, _)| l.quotient_of(&m))
                .map(|u| (k, u))
        });
        match hit {
            Some((k, u)) => {
                let uf = algebra.left_mul_monomial(&u, &divisors[k])?;
                let factor = c / uf.coeff(&m);
                p.add_scaled(&uf, &-factor);
            }
            None => {
                remainder.add_term(m.clone(), c.clone());
                p.add_term(m, -c);
            }
        }
    }
    Ok(remainder)
}
