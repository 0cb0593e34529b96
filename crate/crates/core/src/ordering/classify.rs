use std::cmp::Ordering;

use super::{GradedTableOrdering, MatrixOrdering, OrderingSpec};
use crate::poly::{monomials_of_degree, Monomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tri {
    Yes,
    No,
    /// No violation inside the checked degree window, but the window does not
    /// cover everything that could still fail.
    Unknown,
}

impl Tri {
    fn and(self, other: Tri) -> Tri {
        match (self, other) {
            (Tri::No, _) | (_, Tri::No) => Tri::No,
            (Tri::Yes, Tri::Yes) => Tri::Yes,
            _ => Tri::Unknown,
        }
    }
}

impl std::fmt::Display for Tri {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Tri::Yes => "yes",
            Tri::No => "no",
            Tri::Unknown => "unknown",
        })
    }
}

/// `lower < upper` but `lower * shift > upper * shift`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityWitness {
    pub lower: Monomial,
    pub upper: Monomial,
    pub shift: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingClassification {
    /// `1 <= m` for every monomial m.
    pub founded_at_one: bool,
    pub compatible: Tri,
    pub compatibility_witness: Option<CompatibilityWitness>,
    /// Leading monomials always have the full total degree.
    pub degree: bool,
    pub admissible: Tri,
    pub well: Tri,
    /// Degree window that was searched for compatibility violations.
    pub window: u32,
}

pub fn classify(ord: &OrderingSpec, window: u32) -> OrderingClassification {
    match ord {
        OrderingSpec::Matrix(m) => classify_matrix(m, window),
        OrderingSpec::Table(t) => classify_table(t, window),
    }
}

fn classify_matrix(m: &MatrixOrdering, window: u32) -> OrderingClassification {
    let founded = m.columns_lex_positive();
    let admissible = if founded { Tri::Yes } else { Tri::No };
    OrderingClassification {
        founded_at_one: founded,
        compatible: Tri::Yes,
        compatibility_witness: None,
        degree: m.is_degree_ordering(),
        admissible,
        // well-ordered compatible orderings are exactly the admissible ones
        well: admissible,
        window,
    }
}

/// A violation of compatibility in a graded table shows up in degree at most
/// `depth + 1`: inside the table, or by pushing a slice pair into the fallback
/// regime. Beyond that both sides compare through the (compatible) fallback.
fn classify_table(t: &GradedTableOrdering, window: u32) -> OrderingClassification {
    let decisive = t.depth() + 1;
    let limit = window.min(decisive);
    let witness = find_table_witness(t, limit);
    let compatible = match (&witness, limit == decisive) {
        (Some(_), _) => Tri::No,
        (None, true) => Tri::Yes,
        (None, false) => Tri::Unknown,
    };
    OrderingClassification {
        founded_at_one: true,
        compatible,
        compatibility_witness: witness,
        degree: true,
        admissible: Tri::Yes.and(compatible),
        well: Tri::Yes,
        window,
    }
}

fn find_table_witness(t: &GradedTableOrdering, limit: u32) -> Option<CompatibilityWitness> {
    let n = t.nvars();
    for (e, slice) in t.slices().iter().enumerate().skip(1) {
        let e = e as u32;
        if e >= limit {
            break;
        }
        // adjacent pairs suffice: shifting by a monomial is order-preserving on
        // all pairs iff it is on consecutive ones
        for pair in slice.windows(2) {
            let (lower, upper) = (&pair[0], &pair[1]);
            for g in 1..=limit - e {
                for shift in monomials_of_degree(n, g) {
                    if t.compare(&lower.mul(&shift), &upper.mul(&shift)) != Ordering::Less {
                        return Some(CompatibilityWitness {
                            lower: lower.clone(),
                            upper: upper.clone(),
                            shift,
                        });
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn lex_is_admissible_not_degree() {
        let c = classify(&OrderingSpec::lex(3), 4);
        assert!(c.founded_at_one);
        assert_eq!(c.admissible, Tri::Yes);
        assert_eq!(c.well, Tri::Yes);
        assert!(!c.degree);
    }

    #[test]
    fn grlex_matrix_is_degree_compatible() {
        let o = MatrixOrdering::new(2, vec![vec![1, 1], vec![1, 0]]).unwrap();
        let c = classify(&o.into(), 2);
        assert!(c.degree);
        assert_eq!(c.compatible, Tri::Yes);
        assert_eq!(c.admissible, Tri::Yes);
    }

    #[test]
    fn negative_weight_is_not_founded() {
        let o = MatrixOrdering::new(2, vec![vec![1, -1]]).unwrap();
        let c = classify(&o.into(), 3);
        assert!(!c.founded_at_one);
        assert_eq!(c.admissible, Tri::No);
        assert_eq!(c.well, Tri::No);
        assert_eq!(c.compatible, Tri::Yes);
    }

    #[test]
    fn degree_table_that_is_not_compatible() {
        // 1 < Y < Z < YZ < Y^2 < Z^2
        let t = GradedTableOrdering::new(
            2,
            vec![
                vec![m(&[0, 0])],
                vec![m(&[1, 0]), m(&[0, 1])],
                vec![m(&[1, 1]), m(&[2, 0]), m(&[0, 2])],
            ],
            MatrixOrdering::grlex(2),
        )
        .unwrap();
        let c = classify(&t.into(), 2);
        assert!(c.degree);
        assert!(c.founded_at_one);
        assert_eq!(c.compatible, Tri::No);
        assert_eq!(c.admissible, Tri::No);
        assert_eq!(c.well, Tri::Yes);
        assert_eq!(
            c.compatibility_witness,
            Some(CompatibilityWitness {
                lower: m(&[1, 0]),
                upper: m(&[0, 1]),
                shift: m(&[1, 0]),
            })
        );
    }

    #[test]
    fn table_copy_of_grlex_is_compatible_given_window() {
        let g = MatrixOrdering::grlex(2);
        let t = GradedTableOrdering::from_comparator(2, 3, g.clone(), |a, b| g.compare(a, b));
        let spec: OrderingSpec = t.into();
        assert_eq!(classify(&spec, 4).compatible, Tri::Yes);
        assert_eq!(classify(&spec, 3).compatible, Tri::Unknown);
        assert!(spec.is_admissible());
    }

    #[test]
    fn table_disagreeing_with_fallback_is_caught_past_depth() {
        // slice 1 says x < y, fallback grlex says y < x
        let t = GradedTableOrdering::new(
            2,
            vec![vec![m(&[0, 0])], vec![m(&[1, 0]), m(&[0, 1])]],
            MatrixOrdering::grlex(2),
        )
        .unwrap();
        let c = classify(&t.into(), 5);
        assert_eq!(c.compatible, Tri::No);
        let w = c.compatibility_witness.unwrap();
        assert_eq!(w.shift.degree(), 1);
    }
}
