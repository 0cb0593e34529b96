use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::poly::{Coeff, Monomial};

const MAX_GENERATORS: usize = 20;

/// `C(n, k)` for nonnegative `n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Number of monomials of degree `<= s` not in `I`, by inclusion-exclusion over
/// generator subsets: the multiples of `x^a` of degree `<= s` number
/// `C(s - |a| + t, t)`.
pub fn hilbert_function(ideal: &MonomialIdeal, s: u32) -> Result<u128> {
    let gens = ideal.generators();
    if gens.len() > MAX_GENERATORS {
        return Err(Error::TooManyGenerators(gens.len()));
    }
    let t = ideal.nvars() as u64;
    if ideal.is_unit() {
        return Ok(0);
    }
    let total = binomial(s as u64 + t, t) as i128;
    let mut acc: i128 = 0;
    // sum over nonempty subsets; lcm degree only grows, so prune past s
    fn rec(
        gens: &[Monomial],
        from: usize,
        lcm: &Monomial,
        size: usize,
        s: u32,
        t: u64,
        acc: &mut i128,
    ) {
        for k in from..gens.len() {
            let l = lcm.lcm(&gens[k]);
            let d = l.degree();
            if d > s {
                continue;
            }
            let c = binomial((s - d) as u64 + t, t) as i128;
            if size.is_multiple_of(2) {
                *acc += c;
            } else {
                *acc -= c;
            }
            rec(gens, k + 1, &l, size + 1, s, t, acc);
        }
    }
    rec(gens, 0, &Monomial::one(ideal.nvars()), 0, s, t, &mut acc);
    Ok((total - acc) as u128)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// `HF(s)` for `s = 0..hf_values.len()`.
    pub hf_values: Vec<u128>,
    /// Coefficients of the Hilbert polynomial, constant term first.
    pub hp_coeffs: Vec<Coeff>,
    pub regularity_index: u32,
}

impl HilbertData {
    pub fn hp_eval(&self, s: u32) -> Coeff {
        eval(&self.hp_coeffs, s)
    }
}

fn eval(coeffs: &[Coeff], s: u32) -> Coeff {
    let x = Coeff::from_integer(BigInt::from(s));
    coeffs
        .iter()
        .rev()
        .fold(Coeff::zero(), |acc, c| acc * &x + c)
}

/// Power-basis coefficients of the polynomial through `(x_k, y_k)`.
fn interpolate(points: &[(u32, u128)]) -> Vec<Coeff> {
    let n = points.len();
    let mut out = vec![Coeff::zero(); n];
    for (i, &(xi, yi)) in points.iter().enumerate() {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut basis = vec![Coeff::one()];
        let mut denom = Coeff::one();
        for (j, &(xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let xj = Coeff::from_integer(BigInt::from(xj));
            let mut next = vec![Coeff::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * &xj;
            }
            basis = next;
            denom *= Coeff::from_integer(BigInt::from(xi)) - xj;
        }
        let scale = Coeff::from_integer(BigInt::from(yi)) / denom;
        for (k, b) in basis.into_iter().enumerate() {
            out[k] += b * &scale;
        }
    }
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

/// Hilbert polynomial and index of regularity.
///
/// Every inclusion-exclusion term `C(s - |a| + t, t)` agrees with its
/// polynomial continuation once `s >= |a| - t`, and the largest `|a|` is the
/// degree of the lcm of all generators. From that point on `HF` is a
/// polynomial of degree at most `t`, so `t + 1` samples determine `HP` exactly.
pub fn hilbert_polynomial_and_index(ideal: &MonomialIdeal) -> Result<HilbertData> {
    let t = ideal.nvars() as u32;
    if ideal.generators().len() > MAX_GENERATORS {
        return Err(Error::TooManyGenerators(ideal.generators().len()));
    }
    if ideal.is_unit() {
        return Ok(HilbertData {
            hf_values: vec![0; t as usize + 1],
            hp_coeffs: vec![Coeff::zero()],
            regularity_index: 0,
        });
    }
    let lcm_degree = ideal
        .generators()
        .iter()
        .fold(Monomial::one(ideal.nvars()), |acc, g| acc.lcm(g))
        .degree();
    let start = lcm_degree.saturating_sub(t);
    let hf: Vec<u128> = (0..=start + t)
        .map(|s| hilbert_function(ideal, s))
        .collect::<Result<_>>()?;
    let points: Vec<(u32, u128)> = (start..=start + t).map(|s| (s, hf[s as usize])).collect();
    let hp = interpolate(&points);
    let mut index = 0;
    for s in (0..start).rev() {
        if eval(&hp, s) != Coeff::from_integer(BigInt::from(hf[s as usize])) {
            index = s + 1;
            break;
        }
    }
    Ok(HilbertData {
        hf_values: hf,
        hp_coeffs: hp,
        regularity_index: index,
    })
}
