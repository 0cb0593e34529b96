use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{grevlex_cmp, Coeff, Monomial, Ring};
use crate::error::{Error, Result};
use crate::ordering::OrderingSpec;

/// A polynomial as a finite map from monomials to nonzero rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Coeff) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Coeff::one())
    }

    pub fn term(m: Monomial, c: Coeff) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Coeff::one())
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, merging repeated
    /// monomials.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn support(&self) -> BTreeSet<Monomial> {
        self.terms.keys().cloned().collect()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::SignatureMismatch(format!(
                "{} vs {} variables",
                self.nvars, other.nvars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &Coeff::one());
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &-Coeff::one());
        Ok(out)
    }

    /// `self += c * other`.
    pub(crate) fn add_scaled(&mut self, other: &Polynomial, c: &Coeff) {
        debug_assert_eq!(self.nvars, other.nvars);
        for (m, a) in &other.terms {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Coeff::one())
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies every monomial by `m` (commutatively) and the coefficients by `c`.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    /// Product in the commutative polynomial ring.
    pub fn mul_commutative(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = Self::zero(self.nvars);
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        Ok(out)
    }

    /// Leading monomial with respect to `ord`; `None` for zero.
    pub fn leading_monomial(&self, ord: &OrderingSpec) -> Option<&Monomial> {
        self.terms.keys().max_by(|a, b| ord.compare(a, b))
    }

    /// `(LM, LC)` with respect to `ord`.
    pub fn leading_term(&self, ord: &OrderingSpec) -> Result<(Monomial, Coeff)> {
        let m = self.leading_monomial(ord).ok_or(Error::LeadingTermOfZero)?;
        Ok((m.clone(), self.terms[m].clone()))
    }

    /// Scales so that the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self, ord: &OrderingSpec) -> Polynomial {
        match self.leading_monomial(ord) {
            None => self.clone(),
            Some(m) => {
                let lc = self.terms[m].clone();
                self.scale(&lc.recip())
            }
        }
    }

    /// Terms in canonical output order (grevlex descending).
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grevlex_cmp(b.0, a.0));
        v
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> impl fmt::Display + 'a {
        PolyDisplay { p: self, ring }
    }
}

struct PolyDisplay<'a> {
    p: &'a Polynomial,
    ring: &'a Ring,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.p.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", m.display(self.ring))?;
            } else {
                write!(f, "{a}*{}", m.display(self.ring))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::OrderingSpec;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> Coeff {
        Coeff::new(BigInt::from(n), BigInt::from(d))
    }

    fn p(terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(
            terms[0].0.len(),
            terms
                .iter()
                .map(|(e, c)| (Monomial::new(e.to_vec()), q(*c, 1))),
        )
    }

    #[test]
    fn addition_cancels() {
        let a = p(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = p(&[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(a.add(&b).unwrap(), p(&[(&[1, 0], 2)]));
        assert_eq!(a.add(&Polynomial::zero(2)).unwrap(), a);
        let c = p(&[(&[2, 0], 1), (&[0, 1], -1)]);
        let d = p(&[(&[0, 1], 1)]);
        assert_eq!(c.add(&d).unwrap(), p(&[(&[2, 0], 1)]));
    }

    #[test]
    fn signature_mismatch_rejected() {
        let a = Polynomial::one(2);
        let b = Polynomial::one(3);
        assert!(matches!(a.add(&b), Err(Error::SignatureMismatch(_))));
        assert!(a.mul_commutative(&b).is_err());
    }

    #[test]
    fn products() {
        let a = p(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = p(&[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(
            a.mul_commutative(&b).unwrap(),
            p(&[(&[2, 0], 1), (&[0, 2], -1)])
        );
        assert_eq!(Polynomial::one(2).mul_commutative(&a).unwrap(), a);
        // (Y+Z)^2
        assert_eq!(
            a.mul_commutative(&a).unwrap(),
            p(&[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)])
        );
    }

    #[test]
    fn support_merges_coefficients() {
        assert!(Polynomial::zero(2).support().is_empty());
        let xy = Monomial::new(vec![1, 1]);
        let s = Polynomial::from_terms(2, [(xy.clone(), q(3, 2)), (xy.clone(), q(1, 1))]);
        assert_eq!(
            s.support().into_iter().collect::<Vec<_>>(),
            vec![xy.clone()]
        );
        assert_eq!(s.coeff(&xy), q(5, 2));
    }

    #[test]
    fn leading_terms() {
        let lex = OrderingSpec::lex(2);
        let grlex = OrderingSpec::grlex(2);
        // Y + Z^2 with Y > Z lexicographically
        let f = p(&[(&[1, 0], 1), (&[0, 2], 1)]);
        assert_eq!(
            f.leading_term(&lex).unwrap(),
            (Monomial::new(vec![1, 0]), q(1, 1))
        );
        let c = Polynomial::constant(2, q(-7, 3));
        assert_eq!(
            c.leading_term(&grlex).unwrap(),
            (Monomial::one(2), q(-7, 3))
        );
        let g = p(&[(&[2, 0], 1), (&[0, 1], -1)]);
        assert_eq!(g.leading_term(&grlex).unwrap().0, Monomial::new(vec![2, 0]));
        assert_eq!(
            Polynomial::zero(2).leading_term(&lex),
            Err(Error::LeadingTermOfZero)
        );
    }

    #[test]
    fn display_is_canonical() {
        let ring = Ring::new(["x", "y"]).unwrap();
        let f = Polynomial::from_terms(
            2,
            [
                (Monomial::new(vec![0, 1]), q(-1, 1)),
                (Monomial::new(vec![2, 0]), q(1, 1)),
                (Monomial::one(2), q(5, 2)),
                (Monomial::new(vec![1, 1]), q(-3, 4)),
            ],
        );
        assert_eq!(f.display(&ring).to_string(), "x^2 - 3/4*x*y - y + 5/2");
        assert_eq!(Polynomial::zero(2).display(&ring).to_string(), "0");
        assert_eq!(
            f.neg().display(&ring).to_string(),
            "-x^2 + 3/4*x*y + y - 5/2"
        );
    }
}
