use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Coeff, Monomial};

/// Ordering given by an integer matrix: `u < v` iff `Gu <lex Gv`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixOrdering {
    nvars: usize,
    rows: Vec<Vec<i64>>,
}

fn rank(rows: &[Vec<i64>], ncols: usize) -> usize {
    let mut m: Vec<Vec<Coeff>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Coeff::from_integer(x.into())).collect())
        .collect();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for i in rank + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] / &pivot;
            for j in col..ncols {
                let d = &f * &m[rank][j];
                m[i][j] -= d;
            }
        }
        rank += 1;
    }
    rank
}

impl MatrixOrdering {
    /// Builds the ordering from the given rows, appending unit rows `e_1, e_2, ...`
    /// until the matrix has rank `nvars`.
    pub fn new(nvars: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::InvalidOrdering("no variables".into()));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != nvars) {
            return Err(Error::InvalidOrdering(format!(
                "row of length {} in a ring with {} variables",
                r.len(),
                nvars
            )));
        }
        let mut rows = rows;
        let mut current = rank(&rows, nvars);
        for i in 0..nvars {
            if current == nvars {
                break;
            }
            let mut e = vec![0; nvars];
            e[i] = 1;
            rows.push(e);
            let r = rank(&rows, nvars);
            if r == current {
                rows.pop();
            } else {
                current = r;
            }
        }
        Ok(MatrixOrdering { nvars, rows })
    }

    /// Lexicographic with `x_{order[0]} > x_{order[1]} > ...`.
    pub fn lex_by(order: &[usize]) -> Self {
        let nvars = order.len();
        let rows = order
            .iter()
            .map(|&i| {
                let mut e = vec![0; nvars];
                e[i] = 1;
                e
            })
            .collect();
        MatrixOrdering { nvars, rows }
    }

    pub fn lex(nvars: usize) -> Self {
        Self::lex_by(&(0..nvars).collect::<Vec<_>>())
    }

    pub fn grlex_by(order: &[usize]) -> Self {
        let mut rows = vec![vec![1; order.len()]];
        rows.extend(Self::lex_by(order).rows);
        MatrixOrdering {
            nvars: order.len(),
            rows,
        }
    }

    pub fn grlex(nvars: usize) -> Self {
        Self::grlex_by(&(0..nvars).collect::<Vec<_>>())
    }

    /// Graded reverse lexicographic with `x_{order[0]} > x_{order[1]} > ...`.
    pub fn grevlex_by(order: &[usize]) -> Self {
        let nvars = order.len();
        let mut rows = vec![vec![1; nvars]];
        for &i in order.iter().skip(1).rev() {
            let mut e = vec![0; nvars];
            e[i] = -1;
            rows.push(e);
        }
        MatrixOrdering { nvars, rows }
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::grevlex_by(&(0..nvars).collect::<Vec<_>>())
    }

    /// Weight vector `w` refined by `tie`.
    pub fn weighted(w: Vec<i64>, tie: &MatrixOrdering) -> Result<Self> {
        let mut rows = vec![w];
        rows.extend(tie.rows.iter().cloned());
        Self::new(tie.nvars, rows)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for row in &self.rows {
            let (mut x, mut y) = (0i128, 0i128);
            for ((w, ea), eb) in row.iter().zip(a.exponents()).zip(b.exponents()) {
                x += *w as i128 * *ea as i128;
                y += *w as i128 * *eb as i128;
            }
            match x.cmp(&y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// Every column `G e_i` is lexicographically positive, i.e. `1 < x_i` for all i.
    pub fn columns_lex_positive(&self) -> bool {
        (0..self.nvars).all(|i| {
            self.rows
                .iter()
                .map(|r| r[i])
                .find(|&x| x != 0)
                .is_some_and(|x| x > 0)
        })
    }

    /// The first nonzero row is a positive multiple of `(1, ..., 1)`.
    pub fn is_degree_ordering(&self) -> bool {
        match self.rows.iter().find(|r| r.iter().any(|&x| x != 0)) {
            Some(r) => r[0] > 0 && r.iter().all(|&x| x == r[0]),
            None => false,
        }
    }

    pub fn has_nonnegative_weights(&self) -> bool {
        self.rows.iter().flatten().all(|x| !x.is_negative())
    }
}

impl fmt::Display for MatrixOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "matrix[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
