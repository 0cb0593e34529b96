use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::OrderingSpec;
use crate::poly::{monomials_up_to, Coeff};

/// Distance between two orderings in the metric induced by the filtration
/// `S_i = { m : deg m < i }`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distance {
    /// The two specs are structurally identical.
    Zero,
    /// Exactly `2^-r`: agreement on `S_r`, disagreement on `S_{r+1}`.
    Exact(u32),
    /// Agreement on `S_{cap+1}`, so the distance is below `2^-cap`.
    Below(u32),
}

impl Distance {
    /// The exact value, or the strict upper bound for `Below`.
    pub fn bound(&self) -> Coeff {
        match self {
            Distance::Zero => Coeff::zero(),
            Distance::Exact(r) | Distance::Below(r) => {
                Coeff::new(BigInt::one(), BigInt::from(2u8).pow(*r))
            }
        }
    }

    /// True iff the distance is certainly at most `2^-r`.
    pub fn at_most_pow2(&self, r: u32) -> bool {
        match self {
            Distance::Zero => true,
            Distance::Exact(k) => *k >= r,
            Distance::Below(k) => *k >= r,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Zero => write!(f, "0"),
            Distance::Exact(r) => write!(f, "2^-{r}"),
            Distance::Below(r) => write!(f, "< 2^-{r}"),
        }
    }
}

/// True iff both orderings induce the same order on all monomials of degree
/// less than `i`.
pub fn agree_on_slice(a: &OrderingSpec, b: &OrderingSpec, i: u32) -> bool {
    if i == 0 {
        return true;
    }
    let mut ms = monomials_up_to(a.nvars(), i - 1);
    ms.sort_by(|x, y| a.compare(x, y));
    ms.windows(2)
        .all(|w| b.compare(&w[0], &w[1]) == Ordering::Less)
}

pub fn metric_distance(a: &OrderingSpec, b: &OrderingSpec, cap: u32) -> Distance {
    if a == b {
        return Distance::Zero;
    }
    let cap = cap.max(1);
    // agreement on S_i is monotone in i, and S_1 = {1} always agrees
    for i in 2..=cap + 1 {
        if !agree_on_slice(a, b, i) {
            return Distance::Exact(i - 1);
        }
    }
    Distance::Below(cap)
}
