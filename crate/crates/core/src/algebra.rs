//! Algebras of countable type presented on the commutative monomial basis by
//! commutation relations `x_j x_i = c_ij x_i x_j + p_ij` for `i < j`.
//!
//! Elements are written as [`Polynomial`]s whose monomials are read in normal
//! order `x_1^a_1 x_2^a_2 ... x_t^a_t`; only the product differs from the
//! commutative ring.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ordering::OrderingSpec;
use crate::poly::{Coeff, Monomial, Polynomial, Ring};

/// Rewrite steps allowed for a single product.
pub const REWRITE_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraKind {
    Commutative,
    Weyl,
    Solvable,
}

/// `x_j x_i = c x_i x_j + p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub c: Coeff,
    pub p: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation {
    ring: Ring,
    kind: AlgebraKind,
    /// Keyed by `(i, j)` with `i < j`; absent pairs commute.
    relations: BTreeMap<(usize, usize), Relation>,
    /// `(x, d)` variable pairs for the Weyl kind.
    weyl_pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvableCheck {
    /// First pair `(i, j)` whose correction term is not below `x_i x_j`.
    pub violation: Option<(usize, usize)>,
}

impl SolvableCheck {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicativeCounterexample {
    pub sample: usize,
    pub leading_of_product: Monomial,
    pub product_of_leading: Monomial,
}

impl AlgebraPresentation {
    pub fn commutative(ring: Ring) -> Self {
        AlgebraPresentation {
            ring,
            kind: AlgebraKind::Commutative,
            relations: BTreeMap::new(),
            weyl_pairs: Vec::new(),
        }
    }

    /// Weyl algebra with `d x = x d + 1` for each `(x, d)` pair; all other
    /// variables commute.
    pub fn weyl(ring: Ring, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = ring.nvars();
        let mut used = vec![false; n];
        let mut relations = BTreeMap::new();
        for &(x, d) in pairs {
            if x >= n || d >= n || x == d || used[x] || used[d] {
                return Err(Error::InvalidPresentation(
                    "Weyl pairs must be disjoint pairs of distinct variables".into(),
                ));
            }
            used[x] = true;
            used[d] = true;
            // d x = x d + 1, or x d = d x - 1 when d comes first
            let p = if x < d { Coeff::one() } else { -Coeff::one() };
            relations.insert(
                (x.min(d), x.max(d)),
                Relation {
                    c: Coeff::one(),
                    p: Polynomial::constant(n, p),
                },
            );
        }
        Ok(AlgebraPresentation {
            ring,
            kind: AlgebraKind::Weyl,
            relations,
            weyl_pairs: pairs.to_vec(),
        })
    }

    /// General table; each entry is `(j, i, c, p)` meaning `x_j x_i = c x_i x_j + p`
    /// with `i < j`.
    pub fn solvable(ring: Ring, table: Vec<(usize, usize, Coeff, Polynomial)>) -> Result<Self> {
        let n = ring.nvars();
        let mut relations = BTreeMap::new();
        for (j, i, c, p) in table {
            if i >= j || j >= n {
                return Err(Error::InvalidPresentation(format!(
                    "relation must rewrite x_j x_i with i < j, got ({}, {})",
                    j + 1,
                    i + 1
                )));
            }
            if c.is_zero() {
                return Err(Error::InvalidPresentation(
                    "relation scalar c must be nonzero".into(),
                ));
            }
            if p.nvars() != n {
                return Err(Error::SignatureMismatch("relation polynomial".into()));
            }
            if relations.insert((i, j), Relation { c, p }).is_some() {
                return Err(Error::InvalidPresentation(format!(
                    "duplicate relation for ({}, {})",
                    j + 1,
                    i + 1
                )));
            }
        }
        Ok(AlgebraPresentation {
            ring,
            kind: AlgebraKind::Solvable,
            relations,
            weyl_pairs: Vec::new(),
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn weyl_pairs(&self) -> &[(usize, usize)] {
        &self.weyl_pairs
    }

    pub fn relation(&self, i: usize, j: usize) -> Option<&Relation> {
        self.relations.get(&(i.min(j), i.max(j)))
    }

    /// True when no relation has a correction term or a scalar other than 1.
    pub fn is_commutative(&self) -> bool {
        self.kind == AlgebraKind::Commutative
            || self
                .relations
                .values()
                .all(|r| r.c.is_one() && r.p.is_zero())
    }

    /// All correction terms have degree at most 2.
    pub fn is_quadric(&self) -> bool {
        self.relations
            .values()
            .all(|r| r.p.degree().unwrap_or(0) <= 2)
    }

    /// The product `a * b` on the canonical basis.
    pub fn normal_form_product(&self, a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
        self.normal_form_product_with_budget(a, b, REWRITE_BUDGET)
    }

    pub fn normal_form_product_with_budget(
        &self,
        a: &Polynomial,
        b: &Polynomial,
        budget: usize,
    ) -> Result<Polynomial> {
        if a.nvars() != self.nvars() || b.nvars() != self.nvars() {
            return Err(Error::SignatureMismatch(
                "product outside the algebra".into(),
            ));
        }
        if self.is_commutative() {
            return a.mul_commutative(b);
        }
        let mut pending: BTreeMap<Vec<usize>, Coeff> = BTreeMap::new();
        for (m, x) in a.terms() {
            let wm = m.to_word();
            for (n, y) in b.terms() {
                let mut w = wm.clone();
                w.extend(n.to_word());
                accumulate(&mut pending, w, x * y);
            }
        }
        self.rewrite(pending, budget)
    }

    /// `m * p` for a monomial `m`.
    pub fn left_mul_monomial(&self, m: &Monomial, p: &Polynomial) -> Result<Polynomial> {
        if self.is_commutative() {
            return Ok(p.mul_term(m, &Coeff::one()));
        }
        self.normal_form_product(&Polynomial::monomial(m.clone()), p)
    }

    /// Repeatedly rewrites the leftmost out-of-order adjacent pair of each word.
    fn rewrite(
        &self,
        mut pending: BTreeMap<Vec<usize>, Coeff>,
        budget: usize,
    ) -> Result<Polynomial> {
        let n = self.nvars();
        let mut out = Polynomial::zero(n);
        let mut steps = 0usize;
        while let Some((word, c)) = pending.pop_first() {
            let Some(k) = word.windows(2).position(|w| w[0] > w[1]) else {
                let mut e = vec![0u32; n];
                for v in word {
                    e[v] += 1;
                }
                out.add_term(Monomial::new(e), c);
                continue;
            };
            steps += 1;
            if steps > budget {
                return Err(Error::RewriteBudget(budget));
            }
            let (j, i) = (word[k], word[k + 1]);
            let (prefix, suffix) = (&word[..k], &word[k + 2..]);
            match self.relations.get(&(i, j)) {
                None => {
                    let mut w = prefix.to_vec();
                    w.extend([i, j]);
                    w.extend_from_slice(suffix);
                    accumulate(&mut pending, w, c);
                }
                Some(rel) => {
                    let mut w = prefix.to_vec();
                    w.extend([i, j]);
                    w.extend_from_slice(suffix);
                    accumulate(&mut pending, w, &c * &rel.c);
                    for (m, a) in rel.p.terms() {
                        let mut w = prefix.to_vec();
                        w.extend(m.to_word());
                        w.extend_from_slice(suffix);
                        accumulate(&mut pending, w, &c * a);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Every correction term lies strictly below `x_i x_j` under `ord`.
    pub fn check_solvable_type(&self, ord: &OrderingSpec) -> Result<SolvableCheck> {
        if !ord.is_admissible() {
            return Err(Error::NotAdmissible("solvable-type check".into()));
        }
        let n = self.nvars();
        for (&(i, j), rel) in &self.relations {
            let Some(lm) = rel.p.leading_monomial(ord) else {
                continue;
            };
            let xixj = Monomial::var(n, i).mul(&Monomial::var(n, j));
            if !ord.less(lm, &xixj) {
                return Ok(SolvableCheck {
                    violation: Some((i, j)),
                });
            }
        }
        Ok(SolvableCheck { violation: None })
    }

    /// Looks for a sample pair with `LM(ab) != LM(a) LM(b)`.
    pub fn check_multiplicative(
        &self,
        ord: &OrderingSpec,
        samples: &[(Polynomial, Polynomial)],
    ) -> Result<Option<MultiplicativeCounterexample>> {
        if samples.iter().any(|(a, b)| a.is_zero() || b.is_zero()) {
            return Err(Error::ZeroSample);
        }
        for (k, (a, b)) in samples.iter().enumerate() {
            let ab = self.normal_form_product(a, b)?;
            let expected = a
                .leading_monomial(ord)
                .expect("nonzero")
                .mul(b.leading_monomial(ord).expect("nonzero"));
            let got = ab.leading_monomial(ord).cloned();
            if got.as_ref() != Some(&expected) {
                return Ok(Some(MultiplicativeCounterexample {
                    sample: k,
                    // a zero product also violates multiplicativity
                    leading_of_product: got.unwrap_or_else(|| Monomial::one(self.nvars())),
                    product_of_leading: expected,
                }));
            }
        }
        Ok(None)
    }
}

fn accumulate(pending: &mut BTreeMap<Vec<usize>, Coeff>, w: Vec<usize>, c: Coeff) {
    if c.is_zero() {
        return;
    }
    match pending.entry(w) {
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
