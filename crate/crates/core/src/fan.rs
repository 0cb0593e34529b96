//! Enumeration of the distinct leading monomial ideals of one ideal across many
//! orderings, and universal Gröbner bases assembled from them.
//!
//! The set of leading ideals over the admissible orderings is finite, but no
//! constructive bound on where the last one appears is available. Sweeps
//! therefore run over weight vectors of growing size and report an
//! `exhausted` flag when the last increment found nothing new; it is an
//! empirical statement, not a certificate.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::groebner::{
    buchberger, pivot_monomials, reduce_gb, reduce_unchecked, truncation_span, GroebnerBasis,
    IdealSpec,
};
use crate::ideal::MonomialIdeal;
use crate::ordering::{
    random_admissible_ordering, GradedTableOrdering, MatrixOrdering, MatrixOrderingSampler,
    OrderingSpec,
};
use crate::poly::{monomials_of_degree, Monomial, Polynomial, Ring};

/// Upper limit on the number of graded tables swept by the degree enumeration.
pub const DEGREE_ENUMERATION_LIMIT: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanEntry {
    pub witness: OrderingSpec,
    pub ideal: MonomialIdeal,
    pub reduced_gb: Option<GroebnerBasis>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchConfig {
    Admissible {
        weight_bound: u32,
        random_rounds: u32,
        seed: u64,
    },
    Degree {
        depth: u32,
        orderings: u128,
    },
    Filtered,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanResult {
    pub entries: Vec<FanEntry>,
    pub config: SearchConfig,
    pub exhausted: bool,
}

impl FanResult {
    pub fn ideals(&self) -> Vec<&MonomialIdeal> {
        self.entries.iter().map(|e| &e.ideal).collect()
    }

    pub fn contains_ideal(&self, ideal: &MonomialIdeal) -> bool {
        self.entries.iter().any(|e| e.ideal.equals(ideal))
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> impl fmt::Display + 'a {
        FanDisplay { f: self, ring }
    }
}

struct FanDisplay<'a> {
    f: &'a FanResult,
    ring: &'a Ring,
}

impl fmt::Display for FanDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.f.entries {
            write!(
                f,
                "ideal={} witness={}",
                e.ideal.display(self.ring),
                e.witness.display(self.ring)
            )?;
            if let Some(g) = &e.reduced_gb {
                write!(f, " gb={}", g.display(self.ring))?;
            }
            writeln!(f)?;
        }
        writeln!(f, "exhausted={}", self.f.exhausted)
    }
}

fn compute_entry(ideal: &IdealSpec, ord: OrderingSpec) -> Result<FanEntry> {
    let gb = reduce_gb(&buchberger(ideal, &ord)?)?;
    Ok(FanEntry {
        witness: ord,
        ideal: gb.leading_ideal(),
        reduced_gb: Some(gb),
    })
}

/// Appends entries with ideals not seen so far; returns how many were new.
fn merge(into: &mut Vec<FanEntry>, batch: Vec<FanEntry>) -> usize {
    let mut added = 0;
    for e in batch {
        if !into.iter().any(|x| x.ideal == e.ideal) {
            into.push(e);
            added += 1;
        }
    }
    added
}

fn entries_for(ideal: &IdealSpec, orderings: Vec<MatrixOrdering>) -> Result<Vec<FanEntry>> {
    orderings
        .into_par_iter()
        .map(|o| compute_entry(ideal, o.into()))
        .collect()
}

/// Sweeps the admissible matrix orderings with weights up to `weight_bound`,
/// then `random_rounds` random weight vectors with entries up to four times
/// the bound.
pub fn enumerate_leading_ideals_admissible(
    ideal: &IdealSpec,
    weight_bound: u32,
    random_rounds: u32,
    seed: u64,
) -> Result<FanResult> {
    let n = ideal.nvars();
    let mut entries = Vec::new();
    let mut last_added = usize::MAX;
    for level in 1..=weight_bound {
        let batch = entries_for(ideal, MatrixOrderingSampler::level(n, level))?;
        last_added = merge(&mut entries, batch);
    }
    let mut exhausted = weight_bound >= 2 && last_added == 0;
    if random_rounds > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let orderings: Vec<MatrixOrdering> = (0..random_rounds)
            .map(|_| random_admissible_ordering(n, 4 * weight_bound.max(1), &mut rng))
            .collect();
        if merge(&mut entries, entries_for(ideal, orderings)?) > 0 {
            exhausted = false;
        }
    }
    Ok(FanResult {
        entries,
        config: SearchConfig::Admissible {
            weight_bound,
            random_rounds,
            seed,
        },
        exhausted,
    })
}

/// Keeps the entries whose ideal contains no other entry's ideal strictly.
pub fn minimal_leading_ideals(fan: &FanResult) -> FanResult {
    let entries = fan
        .entries
        .iter()
        .filter(|e| {
            !fan.entries
                .iter()
                .any(|o| o.ideal.is_subset(&e.ideal) && !e.ideal.is_subset(&o.ideal))
        })
        .cloned()
        .collect();
    FanResult {
        entries,
        config: fan.config.clone(),
        exhausted: fan.exhausted,
    }
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128)
        .try_fold(1u128, |acc, x| acc.checked_mul(x))
        .unwrap_or(u128::MAX)
}

/// Number of graded tables of depth `depth` in `nvars` variables.
pub fn graded_table_count(nvars: usize, depth: u32) -> u128 {
    (1..=depth).fold(1u128, |acc, d| {
        acc.saturating_mul(factorial(monomials_of_degree(nvars, d).len()))
    })
}

/// Brute force over every graded table of depth `depth` (fallback grlex): the
/// distinct ideals generated by the leading monomials of `L_{<=depth}`.
pub fn enumerate_leading_ideals_degree(ideal: &IdealSpec, depth: u32) -> Result<FanResult> {
    let n = ideal.nvars();
    if !ideal.algebra().is_commutative() {
        return Err(Error::UnsupportedAlgebra(
            "degree-ordering enumeration is defined for commutative rings".into(),
        ));
    }
    let count = graded_table_count(n, depth);
    if count > DEGREE_ENUMERATION_LIMIT {
        return Err(Error::EnumerationBudget {
            count,
            limit: DEGREE_ENUMERATION_LIMIT,
        });
    }
    let span = if ideal.generators().is_empty() {
        Vec::new()
    } else {
        truncation_span(ideal, depth)?
    };
    let slice_perms: Vec<Vec<Vec<Monomial>>> = (1..=depth)
        .map(|d| {
            use itertools::Itertools;
            let ms = monomials_of_degree(n, d);
            let k = ms.len();
            ms.into_iter().permutations(k).collect()
        })
        .collect();
    let fallback = MatrixOrdering::grlex(n);

    let results: Vec<(usize, MonomialIdeal)> = (0..count as usize)
        .into_par_iter()
        .map(|index| {
            let table = table_at(n, index, &slice_perms, &fallback);
            let ord: OrderingSpec = table.into();
            let pivots = pivot_monomials(&span, &ord);
            (index, MonomialIdeal::from_generators(n, pivots))
        })
        .collect();

    let mut entries: Vec<FanEntry> = Vec::new();
    for (index, ideal) in results {
        if !entries.iter().any(|e| e.ideal == ideal) {
            entries.push(FanEntry {
                witness: table_at(n, index, &slice_perms, &fallback).into(),
                ideal,
                reduced_gb: None,
            });
        }
    }
    Ok(FanResult {
        entries,
        config: SearchConfig::Degree {
            depth,
            orderings: count,
        },
        exhausted: true,
    })
}

/// The `index`-th table in mixed radix over the per-degree permutations.
fn table_at(
    nvars: usize,
    mut index: usize,
    slice_perms: &[Vec<Vec<Monomial>>],
    fallback: &MatrixOrdering,
) -> GradedTableOrdering {
    let mut slices = vec![vec![Monomial::one(nvars)]];
    for perms in slice_perms {
        let (q, r) = index.div_rem(&perms.len());
        slices.push(perms[r].clone());
        index = q;
    }
    GradedTableOrdering::new(nvars, slices, fallback.clone())
        .expect("permutations are valid slices")
}

/// Union of the reduced Gröbner bases stored in `fan`. Each basis is monic
/// for its own ordering, so elements are rescaled to be monic under grevlex
/// before duplicates are dropped.
pub fn universal_gb(fan: &FanResult) -> Result<Vec<Polynomial>> {
    if fan.entries.is_empty() || fan.entries.iter().any(|e| e.reduced_gb.is_none()) {
        return Err(Error::MissingBases);
    }
    let grevlex = OrderingSpec::grevlex(fan.entries[0].witness.nvars());
    let mut out: Vec<Polynomial> = Vec::new();
    for e in &fan.entries {
        for g in e.reduced_gb.as_ref().expect("checked").elements() {
            let g = g.monic(&grevlex);
            if !out.contains(&g) {
                out.push(g);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UniversalFailure {
    LeadingIdealMismatch {
        expected: MonomialIdeal,
        found: MonomialIdeal,
    },
    NotInIdeal {
        element: usize,
        remainder: Polynomial,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingFailure {
    pub ordering_index: usize,
    pub ordering: OrderingSpec,
    pub failure: UniversalFailure,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalReport {
    pub checked: usize,
    pub failures: Vec<OrderingFailure>,
}

impl UniversalReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks, for each ordering, that `candidate` lies in the ideal and that its
/// leading monomials generate the ideal's leading monomial ideal.
pub fn verify_universal(
    candidate: &[Polynomial],
    ideal: &IdealSpec,
    orderings: &[OrderingSpec],
) -> Result<UniversalReport> {
    let n = ideal.nvars();
    let per_ordering: Vec<Vec<OrderingFailure>> = orderings
        .par_iter()
        .enumerate()
        .map(|(k, ord)| -> Result<Vec<OrderingFailure>> {
            let gb = reduce_gb(&buchberger(ideal, ord)?)?;
            let expected = gb.leading_ideal();
            let found = MonomialIdeal::from_generators(
                n,
                candidate
                    .iter()
                    .filter_map(|u| u.leading_monomial(ord).cloned()),
            );
            let mut failures = Vec::new();
            let fail = |failure| OrderingFailure {
                ordering_index: k,
                ordering: ord.clone(),
                failure,
            };
            for (i, u) in candidate.iter().enumerate() {
                let r = reduce_unchecked(u, gb.elements(), ord, ideal.algebra())?;
                if !r.is_zero() {
                    failures.push(fail(UniversalFailure::NotInIdeal {
                        element: i,
                        remainder: r,
                    }));
                }
            }
            if !found.equals(&expected) {
                failures.push(fail(UniversalFailure::LeadingIdealMismatch {
                    expected,
                    found,
                }));
            }
            Ok(failures)
        })
        .collect::<Result<_>>()?;
    Ok(UniversalReport {
        checked: orderings.len(),
        failures: per_ordering.into_iter().flatten().collect(),
    })
}

/// `ceil(2 * ((d^2 + 2d) / 2)^(2^(t-1)))`, the degree bound for Gröbner bases
/// of left ideals in quadric solvable algebras generated in degree `<= d`.
pub fn degree_bound_quadric(d: u32, t: u32) -> BigInt {
    assert!(d >= 1 && t >= 1, "degree bound needs d >= 1 and t >= 1");
    let exponent: u32 = 1u32
        .checked_shl(t - 1)
        .expect("exponent 2^(t-1) must fit in 32 bits");
    let base = BigInt::from(d) * BigInt::from(d) + BigInt::from(2 * d);
    let numerator = BigInt::from(2) * Pow::pow(&base, exponent);
    let denominator: BigInt = Pow::pow(&BigInt::from(2), exponent);
    let (q, r) = numerator.div_rem(&denominator);
    if r == BigInt::from(0) {
        q
    } else {
        q + BigInt::one()
    }
}
