//! Total orderings on monomials: representations, comparison, classification
//! into the usual ordering classes, and the filtration metric between them.

mod classify;
mod matrix;
mod metric;
mod perturb;
mod sample;
mod table;

use std::cmp::Ordering;
use std::fmt;

pub use classify::{classify, CompatibilityWitness, OrderingClassification, Tri};
pub use matrix::MatrixOrdering;
pub use metric::{agree_on_slice, metric_distance, Distance};
pub use perturb::perturb_to_incompatible;
pub use sample::{
    random_admissible_ordering, sample_matrix_orderings, weight_rows_with_max,
    MatrixOrderingSampler,
};
pub use table::GradedTableOrdering;

use crate::poly::{Monomial, Ring};

/// A total ordering on the monomials of a fixed ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OrderingSpec {
    Matrix(MatrixOrdering),
    Table(GradedTableOrdering),
}

impl OrderingSpec {
    pub fn lex(nvars: usize) -> Self {
        OrderingSpec::Matrix(MatrixOrdering::lex(nvars))
    }

    pub fn grlex(nvars: usize) -> Self {
        OrderingSpec::Matrix(MatrixOrdering::grlex(nvars))
    }

    pub fn grevlex(nvars: usize) -> Self {
        OrderingSpec::Matrix(MatrixOrdering::grevlex(nvars))
    }

    pub fn nvars(&self) -> usize {
        match self {
            OrderingSpec::Matrix(m) => m.nvars(),
            OrderingSpec::Table(t) => t.nvars(),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            OrderingSpec::Matrix(m) => m.compare(a, b),
            OrderingSpec::Table(t) => t.compare(a, b),
        }
    }

    pub fn less(&self, a: &Monomial, b: &Monomial) -> bool {
        self.compare(a, b) == Ordering::Less
    }

    pub fn as_matrix(&self) -> Option<&MatrixOrdering> {
        match self {
            OrderingSpec::Matrix(m) => Some(m),
            OrderingSpec::Table(_) => None,
        }
    }

    /// Cheap structural admissibility test: exact for matrix orderings; for
    /// tables it runs the windowed compatibility check with a window past the
    /// table depth, which is decisive.
    pub fn is_admissible(&self) -> bool {
        match self {
            OrderingSpec::Matrix(m) => m.columns_lex_positive(),
            OrderingSpec::Table(t) => classify(self, t.depth() + 1).admissible == Tri::Yes,
        }
    }

    pub fn is_degree_ordering(&self) -> bool {
        match self {
            OrderingSpec::Matrix(m) => m.is_degree_ordering(),
            OrderingSpec::Table(_) => true,
        }
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> impl fmt::Display + 'a {
        SpecDisplay { o: self, ring }
    }
}

impl From<MatrixOrdering> for OrderingSpec {
    fn from(m: MatrixOrdering) -> Self {
        OrderingSpec::Matrix(m)
    }
}

impl From<GradedTableOrdering> for OrderingSpec {
    fn from(t: GradedTableOrdering) -> Self {
        OrderingSpec::Table(t)
    }
}

struct SpecDisplay<'a> {
    o: &'a OrderingSpec,
    ring: &'a Ring,
}

impl fmt::Display for SpecDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.o {
            OrderingSpec::Matrix(m) => write!(f, "{m}"),
            OrderingSpec::Table(t) => write!(f, "{}", t.display(self.ring)),
        }
    }
}
