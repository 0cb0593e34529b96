use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

use super::MatrixOrdering;

/// Weight vectors with entries in `0..=max` whose largest entry is exactly `max`.
pub fn weight_rows_with_max(nvars: usize, max: u32) -> Vec<Vec<i64>> {
    if max == 0 {
        return Vec::new();
    }
    std::iter::repeat_n(0..=max as i64, nvars)
        .multi_cartesian_product()
        .filter(|w| w.contains(&(max as i64)))
        .collect()
}

fn with_permutation(weight: &[i64], perm: &[usize]) -> MatrixOrdering {
    let nvars = weight.len();
    let mut rows = vec![weight.to_vec()];
    for &i in perm {
        let mut e = vec![0; nvars];
        e[i] = 1;
        rows.push(e);
    }
    MatrixOrdering::new(nvars, rows).expect("permutation rows have full rank")
}

/// Admissible matrix orderings: a nonzero weight row with entries in `0..=W`,
/// tie-broken lexicographically along each of the `t!` variable permutations.
/// Emitted grouped by the largest weight entry, so a sweep with bound `W` is a
/// prefix of the sweep with bound `W + 1`.
#[derive(Debug, Clone)]
pub struct MatrixOrderingSampler {
    nvars: usize,
    bound: u32,
    level: u32,
    pending: std::vec::IntoIter<MatrixOrdering>,
}

impl MatrixOrderingSampler {
    /// Orderings whose largest weight entry is exactly `level`.
    pub fn level(nvars: usize, level: u32) -> Vec<MatrixOrdering> {
        let perms: Vec<Vec<usize>> = (0..nvars).permutations(nvars).collect();
        weight_rows_with_max(nvars, level)
            .iter()
            .flat_map(|w| perms.iter().map(move |p| with_permutation(w, p)))
            .collect()
    }
}

impl Iterator for MatrixOrderingSampler {
    type Item = MatrixOrdering;

    fn next(&mut self) -> Option<MatrixOrdering> {
        loop {
            if let Some(o) = self.pending.next() {
                return Some(o);
            }
            if self.level >= self.bound {
                return None;
            }
            self.level += 1;
            self.pending = Self::level(self.nvars, self.level).into_iter();
        }
    }
}

pub fn sample_matrix_orderings(nvars: usize, weight_bound: u32) -> MatrixOrderingSampler {
    MatrixOrderingSampler {
        nvars,
        bound: weight_bound,
        level: 0,
        pending: Vec::new().into_iter(),
    }
}

/// A random admissible matrix ordering: between one and `t` nonnegative weight
/// rows with entries up to `max_weight`, then a random variable permutation.
pub fn random_admissible_ordering<R: Rng + ?Sized>(
    nvars: usize,
    max_weight: u32,
    rng: &mut R,
) -> MatrixOrdering {
    let nrows = rng.gen_range(1..=nvars);
    let mut rows = Vec::with_capacity(nrows + nvars);
    for _ in 0..nrows {
        let mut w: Vec<i64> = (0..nvars)
            .map(|_| rng.gen_range(0..=max_weight as i64))
            .collect();
        if w.iter().all(|&x| x == 0) {
            w[rng.gen_range(0..nvars)] = 1;
        }
        rows.push(w);
    }
    let mut perm: Vec<usize> = (0..nvars).collect();
    perm.shuffle(rng);
    for i in perm {
        let mut e = vec![0; nvars];
        e[i] = 1;
        rows.push(e);
    }
    MatrixOrdering::new(nvars, rows).expect("permutation rows have full rank")
}
