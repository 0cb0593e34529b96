use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use super::MatrixOrdering;
use crate::error::{Error, Result};
use crate::poly::{monomials_of_degree, Monomial, Ring};

/// A degree ordering given explicitly on every degree up to `depth` and by a
/// matrix ordering inside higher degrees. Lower degree always comes first.
#[derive(Debug, Clone)]
pub struct GradedTableOrdering {
    nvars: usize,
    /// `slices[d]` lists the degree-`d` monomials in ascending order.
    slices: Vec<Vec<Monomial>>,
    ranks: Vec<HashMap<Monomial, usize>>,
    fallback: MatrixOrdering,
}

impl PartialEq for GradedTableOrdering {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.slices == other.slices && self.fallback == other.fallback
    }
}

impl Eq for GradedTableOrdering {}

impl std::hash::Hash for GradedTableOrdering {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.nvars.hash(state);
        self.slices.hash(state);
        self.fallback.hash(state);
    }
}

impl GradedTableOrdering {
    /// `slices[d]` must be a permutation of the degree-`d` monomials, listed
    /// ascending, for `d = 0..=depth`. A missing degree-0 slice is filled in.
    pub fn new(
        nvars: usize,
        mut slices: Vec<Vec<Monomial>>,
        fallback: MatrixOrdering,
    ) -> Result<Self> {
        if fallback.nvars() != nvars {
            return Err(Error::InvalidOrdering("fallback arity mismatch".into()));
        }
        if slices.is_empty() {
            slices.push(vec![Monomial::one(nvars)]);
        }
        let mut ranks = Vec::with_capacity(slices.len());
        for (d, slice) in slices.iter().enumerate() {
            let expected = monomials_of_degree(nvars, d as u32);
            let mut rank = HashMap::with_capacity(slice.len());
            for (i, m) in slice.iter().enumerate() {
                if m.nvars() != nvars || m.degree() as usize != d {
                    return Err(Error::InvalidOrdering(format!(
                        "slice {d} contains a monomial of the wrong degree"
                    )));
                }
                if rank.insert(m.clone(), i).is_some() {
                    return Err(Error::InvalidOrdering(format!(
                        "slice {d} repeats a monomial"
                    )));
                }
            }
            if rank.len() != expected.len() {
                return Err(Error::InvalidOrdering(format!(
                    "slice {d} lists {} of the {} monomials of degree {d}",
                    rank.len(),
                    expected.len()
                )));
            }
            ranks.push(rank);
        }
        Ok(GradedTableOrdering {
            nvars,
            slices,
            ranks,
            fallback,
        })
    }

    /// The table of `compare` restricted to degrees `0..=depth`.
    pub fn from_comparator(
        nvars: usize,
        depth: u32,
        fallback: MatrixOrdering,
        cmp: impl Fn(&Monomial, &Monomial) -> Ordering,
    ) -> Self {
        let slices = (0..=depth)
            .map(|d| {
                let mut s = monomials_of_degree(nvars, d);
                s.sort_by(&cmp);
                s
            })
            .collect();
        Self::new(nvars, slices, fallback).expect("sorted slices are permutations")
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn depth(&self) -> u32 {
        (self.slices.len() - 1) as u32
    }

    pub fn slices(&self) -> &[Vec<Monomial>] {
        &self.slices
    }

    pub fn fallback(&self) -> &MatrixOrdering {
        &self.fallback
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (da, db) = (a.degree(), b.degree());
        if da != db {
            return da.cmp(&db);
        }
        match self.ranks.get(da as usize) {
            Some(r) => r[a].cmp(&r[b]),
            None => self.fallback.compare(a, b),
        }
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> impl fmt::Display + 'a {
        TableDisplay { t: self, ring }
    }
}

struct TableDisplay<'a> {
    t: &'a GradedTableOrdering,
    ring: &'a Ring,
}

impl fmt::Display for TableDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "table D={}", self.t.depth())?;
        for (d, slice) in self.t.slices.iter().enumerate().skip(1) {
            write!(f, " deg{d}=(")?;
            for (i, m) in slice.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", m.display(self.ring))?;
            }
            write!(f, ")")?;
        }
        write!(f, " fallback={}", self.t.fallback)
    }
}
