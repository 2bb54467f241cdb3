//! Dense exact matrices and a fraction-free linear solver.
//!
//! Rows are scaled to integers, the augmented system is reduced with Bareiss'
//! one-step elimination (every intermediate division is exact), and the
//! triangular result is back-substituted over the rationals. Systems may have
//! more rows than unknowns as long as they are consistent, which is how the
//! Markov stationary system `[(A - I); 1ᵀ] r = e` is fed in.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("matrix is {rows}x{cols} but right-hand side has {rhs} entries")]
    DimensionMismatch {
        rows: usize,
        cols: usize,
        rhs: usize,
    },
    #[error("system has fewer rows ({rows}) than unknowns ({cols})")]
    Underdetermined { rows: usize, cols: usize },
    /// The coefficient matrix has rank `rank` < number of unknowns.
    #[error("coefficient matrix is rank deficient (rank {rank} of {cols})")]
    RankDeficient { rank: usize, cols: usize },
    #[error("overdetermined system is inconsistent")]
    Inconsistent,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| Rational::from_integer(v.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Appends `row` at the bottom.
    pub fn push_row(&mut self, row: Vec<Rational>) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.data.extend(row);
        self.rows += 1;
    }

    pub fn replace_row(&mut self, i: usize, row: Vec<Rational>) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        for (j, v) in row.into_iter().enumerate() {
            self[(i, j)] = v;
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Solves `a · x = b` exactly. `a` must have full column rank; extra rows
/// must be consistent with the unique solution.
pub fn solve(a: &Matrix, b: &[Rational]) -> Result<Vec<Rational>, SolveError> {
    let (m, n) = (a.rows, a.cols);
    if b.len() != m {
        return Err(SolveError::DimensionMismatch {
            rows: m,
            cols: n,
            rhs: b.len(),
        });
    }
    if m < n {
        return Err(SolveError::Underdetermined { rows: m, cols: n });
    }

    let mut aug: Vec<Vec<BigInt>> = (0..m).map(|i| integer_row(a.row(i), &b[i])).collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        // largest magnitude pivot among the remaining rows
        let pivot = (k..m)
            .filter(|&r| !aug[r][k].is_zero())
            .max_by(|&x, &y| aug[x][k].abs().cmp(&aug[y][k].abs()).then(y.cmp(&x)));
        let Some(p) = pivot else {
            return Err(SolveError::RankDeficient { rank: k, cols: n });
        };
        aug.swap(k, p);

        let (head, tail) = aug.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..=n {
                let v = &pivot_row[k] * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&v % &prev).is_zero(), "Bareiss division must be exact");
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = aug[k][k].clone();
    }

    if aug[n..].iter().any(|row| !row[n].is_zero()) {
        return Err(SolveError::Inconsistent);
    }

    let mut x = vec![Rational::zero(); n];
    for k in (0..n).rev() {
        let mut acc = Rational::from_integer(aug[k][n].clone());
        for j in k + 1..n {
            acc -= Rational::from_integer(aug[k][j].clone()) * &x[j];
        }
        x[k] = acc / Rational::from_integer(aug[k][k].clone());
    }
    Ok(x)
}

/// Scales `[row | rhs]` by the lcm of its denominators.
fn integer_row(row: &[Rational], rhs: &Rational) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .chain(std::iter::once(rhs))
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter()
        .chain(std::iter::once(rhs))
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn solves_small_system() {
        let a = Matrix::from_i64_rows(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &ints(&[3, 5])).unwrap();
        assert_eq!(x, vec![ratio(4, 5), ratio(7, 5)]);
    }

    #[test]
    fn needs_row_swap() {
        let a = Matrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(solve(&a, &ints(&[2, 3])).unwrap(), ints(&[3, 2]));
    }

    #[test]
    fn rational_entries() {
        let a = Matrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(1, 4), ratio(-1, 5)],
        ]);
        let b = vec![int(1), int(0)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
    }

    #[test]
    fn singular_is_reported() {
        let a = Matrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(
            solve(&a, &ints(&[1, 2])),
            Err(SolveError::RankDeficient { rank: 1, cols: 2 })
        );
    }

    #[test]
    fn overdetermined_consistent_and_not() {
        let a = Matrix::from_i64_rows(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(solve(&a, &ints(&[1, 2, 3])).unwrap(), ints(&[1, 2]));
        assert_eq!(solve(&a, &ints(&[1, 2, 4])), Err(SolveError::Inconsistent));
    }

    #[test]
    fn dimension_checks() {
        let a = Matrix::from_i64_rows(&[&[1, 0, 0], &[0, 1, 0]]);
        assert!(matches!(
            solve(&a, &ints(&[1, 2])),
            Err(SolveError::Underdetermined { .. })
        ));
        assert!(matches!(
            solve(&a, &ints(&[1])),
            Err(SolveError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn product_and_transpose() {
        let x = Matrix::from_i64_rows(&[&[1, -1, 0], &[0, 1, -1]]);
        let xtx = x.transpose().mul(&x);
        assert_eq!(
            xtx,
            Matrix::from_i64_rows(&[&[1, -1, 0], &[-1, 2, -1], &[0, -1, 1]])
        );
        assert!(xtx.is_symmetric());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn solution_satisfies_system(
                entries in proptest::collection::vec(-9i64..=9, 16),
                rhs in proptest::collection::vec(-9i64..=9, 4),
            ) {
                let rows: Vec<&[i64]> = entries.chunks(4).collect();
                let a = Matrix::from_i64_rows(&rows);
                let b = ints(&rhs);
                match solve(&a, &b) {
                    Ok(x) => prop_assert_eq!(a.mul_vec(&x), b),
                    Err(SolveError::RankDeficient { .. }) => {}
                    Err(e) => prop_assert!(false, "unexpected {e}"),
                }
            }
        }
    }
}
