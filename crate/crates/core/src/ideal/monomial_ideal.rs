use std::fmt;

use crate::poly::{grevlex_cmp, monomials_up_to, Monomial, Ring};

/// A monomial ideal, stored by its minimal generators in canonical order
/// (grevlex descending). Since minimal generating sets are unique, structural
/// equality is ideal equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Discards every monomial divisible by another one in the set.
    pub fn from_generators(nvars: usize, ms: impl IntoIterator<Item = Monomial>) -> Self {
        let mut ms: Vec<Monomial> = ms.into_iter().collect();
        ms.sort_by_key(Monomial::degree);
        ms.dedup();
        let mut gens: Vec<Monomial> = Vec::new();
        for m in ms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        gens.sort_by(|a, b| grevlex_cmp(b, a));
        MonomialIdeal {
            nvars,
            generators: gens,
        }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            generators: Vec::new(),
        }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal {
            nvars,
            generators: vec![Monomial::one(nvars)],
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.generators.iter().all(|g| other.contains(g))
    }

    pub fn equals(&self, other: &MonomialIdeal) -> bool {
        self.is_subset(other) && other.is_subset(self)
    }

    /// Largest total degree among the minimal generators (0 for zero/unit).
    pub fn max_generator_degree(&self) -> u32 {
        self.generators
            .iter()
            .map(Monomial::degree)
            .max()
            .unwrap_or(0)
    }

    /// Monomials of degree at most `s` outside the ideal, ascending in grevlex.
    pub fn standard_monomials_up_to(&self, s: u32) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = monomials_up_to(self.nvars, s)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect();
        out.sort_by(grevlex_cmp);
        out
    }

    /// The part of the ideal generated in degree at most `s`.
    pub fn truncate(&self, s: u32) -> MonomialIdeal {
        MonomialIdeal {
            nvars: self.nvars,
            generators: self
                .generators
                .iter()
                .filter(|g| g.degree() <= s)
                .cloned()
                .collect(),
        }
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> impl fmt::Display + 'a {
        IdealDisplay { i: self, ring }
    }
}

struct IdealDisplay<'a> {
    i: &'a MonomialIdeal,
    ring: &'a Ring,
}

impl fmt::Display for IdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.i.is_zero() {
            return write!(f, "<0>");
        }
        write!(f, "<")?;
        for (k, g) in self.i.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display(self.ring))?;
        }
        write!(f, ">")
    }
}
