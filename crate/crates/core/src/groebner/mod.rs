//! Division, Buchberger completion of left ideals, reduced Gröbner bases and
//! the linear-algebra view of degree-truncated ideals.

mod buchberger;
mod division;
mod macaulay;
mod slice;

pub use buchberger::{
    buchberger, leading_ideal, reduce_gb, s_remainders_vanish, BUCHBERGER_BUDGET,
};
pub(crate) use division::reduce_unchecked;
pub use division::{divide, Division};
pub use macaulay::{macaulay_check, MacaulayFailure, MacaulayReport};
pub use slice::{pivot_monomials, slice_leading_monomials, truncation_span};

use std::fmt;

use crate::algebra::AlgebraPresentation;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::ordering::OrderingSpec;
use crate::poly::{Polynomial, Ring};

/// A left ideal `A g_1 + ... + A g_k` of a presented algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSpec {
    algebra: AlgebraPresentation,
    generators: Vec<Polynomial>,
}

impl IdealSpec {
    /// Drops zero and repeated generators. No generators means the zero ideal.
    pub fn new(algebra: AlgebraPresentation, generators: Vec<Polynomial>) -> Result<Self> {
        let n = algebra.nvars();
        let mut gens: Vec<Polynomial> = Vec::with_capacity(generators.len());
        for g in generators {
            if g.nvars() != n {
                return Err(Error::SignatureMismatch(
                    "generator outside the algebra".into(),
                ));
            }
            if !g.is_zero() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(IdealSpec {
            algebra,
            generators: gens,
        })
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.algebra
    }

    pub fn ring(&self) -> &Ring {
        self.algebra.ring()
    }

    pub fn nvars(&self) -> usize {
        self.algebra.nvars()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub(crate) elements: Vec<Polynomial>,
    pub(crate) ordering: OrderingSpec,
    pub(crate) algebra: AlgebraPresentation,
    pub(crate) reduced: bool,
}

impl GroebnerBasis {
    /// Wraps elements that are claimed to form a Gröbner basis. Zero elements
    /// are dropped; nothing is verified (see [`s_remainders_vanish`]).
    pub fn new(
        elements: Vec<Polynomial>,
        ordering: OrderingSpec,
        algebra: AlgebraPresentation,
    ) -> Self {
        GroebnerBasis {
            elements: elements.into_iter().filter(|p| !p.is_zero()).collect(),
            ordering,
            algebra,
            reduced: false,
        }
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn ordering(&self) -> &OrderingSpec {
        &self.ordering
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.algebra
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn leading_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_generators(
            self.algebra.nvars(),
            self.elements
                .iter()
                .filter_map(|g| g.leading_monomial(&self.ordering).cloned()),
        )
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> impl fmt::Display + 'a {
        BasisDisplay { g: self, ring }
    }
}

struct BasisDisplay<'a> {
    g: &'a GroebnerBasis,
    ring: &'a Ring,
}

impl fmt::Display for BasisDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.g.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", p.display(self.ring))?;
        }
        write!(f, "}}")
    }
}

/// Rejects orderings that are not admissible or under which the algebra is not
/// of solvable type.
pub(crate) fn check_preconditions(algebra: &AlgebraPresentation, ord: &OrderingSpec) -> Result<()> {
    if ord.nvars() != algebra.nvars() {
        return Err(Error::SignatureMismatch("ordering arity".into()));
    }
    if !ord.is_admissible() {
        return Err(Error::NotAdmissible(
            "division needs a well-ordering compatible with multiplication".into(),
        ));
    }
    if let Some((i, j)) = algebra.check_solvable_type(ord)?.violation {
        let ring = algebra.ring();
        return Err(Error::NotSolvableType(
            ring.name(i).into(),
            ring.name(j).into(),
        ));
    }
    Ok(())
}
