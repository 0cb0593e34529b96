use super::division::reduce_unchecked;
use super::{
    buchberger, check_preconditions, pivot_monomials, reduce_gb, truncation_span, IdealSpec,
};
use crate::algebra::AlgebraKind;
use crate::error::{Error, Result};
use crate::ideal::binomial;
use crate::ordering::OrderingSpec;
use crate::poly::{monomials_up_to, Monomial, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MacaulayFailure {
    /// The normal form of `monomial` has a term in the leading ideal.
    RemainderNotStandard {
        monomial: Monomial,
        remainder: Polynomial,
    },
    /// A standard monomial is not its own normal form.
    StandardNotFixed {
        monomial: Monomial,
        remainder: Polynomial,
    },
    /// `|B_{<=s}|` differs from `C(s+t, t) - dim L_{<=s}`.
    DimensionMismatch {
        degree: u32,
        standard: usize,
        expected: i128,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayReport {
    pub cap: u32,
    /// Standard monomials of degree at most `cap`, ascending in grevlex.
    pub standard_monomials: Vec<Monomial>,
    /// `|B_{<=s}|` for `s = 0..=cap`.
    pub standard_counts: Vec<usize>,
    /// Whether the dimension count was compared (degree orderings only).
    pub dimension_checked: bool,
    pub failures: Vec<MacaulayFailure>,
}

impl MacaulayReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that the standard monomials of the leading ideal behave as a basis
/// of the quotient up to degree `cap`: normal forms land in their span, fix
/// them, and (for degree orderings) their count matches the codimension of
/// the truncated ideal.
pub fn macaulay_check(ideal: &IdealSpec, ord: &OrderingSpec, cap: u32) -> Result<MacaulayReport> {
    let algebra = ideal.algebra();
    if algebra.kind() == AlgebraKind::Solvable && !algebra.is_commutative() {
        return Err(Error::UnsupportedAlgebra(
            "basis check is implemented for commutative and Weyl algebras".into(),
        ));
    }
    check_preconditions(algebra, ord)?;
    let n = ideal.nvars();
    let basis = reduce_gb(&buchberger(ideal, ord)?)?;
    let lead = basis.leading_ideal();
    let standard = lead.standard_monomials_up_to(cap);
    let mut failures = Vec::new();

    for m in monomials_up_to(n, cap) {
        let r = reduce_unchecked(
            &Polynomial::monomial(m.clone()),
            basis.elements(),
            ord,
            algebra,
        )?;
        if r.terms().any(|(s, _)| lead.contains(s)) {
            failures.push(MacaulayFailure::RemainderNotStandard {
                monomial: m.clone(),
                remainder: r.clone(),
            });
        }
        if !lead.contains(&m) && r != Polynomial::monomial(m.clone()) {
            failures.push(MacaulayFailure::StandardNotFixed {
                monomial: m,
                remainder: r,
            });
        }
    }

    let standard_counts: Vec<usize> = (0..=cap)
        .map(|s| standard.iter().filter(|m| m.degree() <= s).count())
        .collect();

    let dimension_checked = ord.is_degree_ordering();
    if dimension_checked {
        let span = if ideal.generators().is_empty() {
            Vec::new()
        } else {
            truncation_span(ideal, cap)?
        };
        for s in 0..=cap {
            let part: Vec<Polynomial> = span
                .iter()
                .filter(|p| p.degree().is_some_and(|d| d <= s))
                .cloned()
                .collect();
            let rank = pivot_monomials(&part, ord).len() as i128;
            let expected = binomial(s as u64 + n as u64, n as u64) as i128 - rank;
            if standard_counts[s as usize] as i128 != expected {
                failures.push(MacaulayFailure::DimensionMismatch {
                    degree: s,
                    standard: standard_counts[s as usize],
                    expected,
                });
            }
        }
    }

    Ok(MacaulayReport {
        cap,
        standard_monomials: standard,
        standard_counts,
        dimension_checked,
        failures,
    })
}
