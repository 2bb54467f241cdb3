//! Slow, independent re-derivations of Massey and Markov used to
//! cross-check the main solvers.

use num_traits::{One, Signed, Zero};

use crate::linalg::Matrix;
use crate::methods::{reject_draws, reject_empty, MethodError, MethodKind, RatingVector};
use crate::rational::{format_rational, to_f64, Rational};
use crate::tournament::Tournament;

/// Overdetermined system `X r = s`: one row per match.
#[derive(Debug, Clone)]
pub struct LeastSquaresSystem {
    /// `+1` for the first player of the match, `-1` for the second.
    pub incidence: Matrix,
    /// `s_i - s_j` per match.
    pub score_diff: Vec<Rational>,
}

impl LeastSquaresSystem {
    pub fn build(t: &Tournament) -> Self {
        let n = t.player_count();
        let mut incidence = Matrix::zeros(t.len(), n);
        let mut score_diff = Vec::with_capacity(t.len());
        for (row, m) in t.matches().iter().enumerate() {
            incidence[(row, m.i - 1)] = Rational::one();
            incidence[(row, m.j - 1)] = -Rational::one();
            score_diff
                .push(Rational::from_integer(m.s_i.into()) - Rational::from_integer(m.s_j.into()));
        }
        LeastSquaresSystem {
            incidence,
            score_diff,
        }
    }

    /// `XᵀX`
    pub fn normal_matrix(&self) -> Matrix {
        self.incidence.transpose().mul(&self.incidence)
    }

    /// `Xᵀs`
    pub fn normal_rhs(&self) -> Vec<Rational> {
        self.incidence.transpose().mul_vec(&self.score_diff)
    }
}

/// Gauss-Jordan on an augmented `rows × (cols + 1)` system. Returns the
/// unique solution, or `None` if the system is rank deficient or
/// inconsistent.
fn gauss_jordan(mut aug: Vec<Vec<Rational>>, cols: usize) -> Option<Vec<Rational>> {
    let rows = aug.len();
    for col in 0..cols {
        let p = (col..rows).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, p);
        let inv = aug[col][col].clone().recip();
        for v in aug[col].iter_mut() {
            *v *= &inv;
        }
        let pivot = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&pivot).skip(col) {
                    *v -= &f * pv;
                }
            }
        }
    }
    if aug[cols..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some(aug.iter().take(cols).map(|row| row[cols].clone()).collect())
}

/// Massey ratings from the explicit incidence system: the normal equations
/// `XᵀX r = Xᵀs` plus `Σ r = 0`, solved by plain Gauss-Jordan.
pub fn massey_least_squares_oracle(t: &Tournament) -> Result<RatingVector, MethodError> {
    reject_empty(MethodKind::Massey, t)?;
    reject_draws(MethodKind::Massey, t)?;
    let n = t.player_count();
    let system = LeastSquaresSystem::build(t);
    let normal = system.normal_matrix();
    if n > 1 {
        if let Some(i) = (0..n).find(|&i| normal[(i, i)].is_zero()) {
            return Err(MethodError::IsolatedPlayer {
                method: MethodKind::Massey,
                player: t.roster().label(i + 1).to_string(),
            });
        }
    }
    let rhs = system.normal_rhs();
    let mut aug: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = normal.row(i).to_vec();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut sum_row = vec![Rational::one(); n];
    sum_row.push(Rational::zero());
    aug.push(sum_row);

    let ratings = gauss_jordan(aug, n).ok_or(MethodError::SingularSystem {
        method: MethodKind::Massey,
    })?;
    Ok(RatingVector {
        method: MethodKind::Massey,
        alpha: None,
        players: t.roster().players(),
        ratings,
    })
}

/// Markov ratings by power iteration in `f64`, normalised to sum to one.
/// Needs `alpha < 1` so the damped matrix is strictly positive.
pub fn markov_power_iteration_oracle(
    t: &Tournament,
    alpha: &Rational,
    iterations: usize,
) -> Result<Vec<f64>, MethodError> {
    if alpha.is_negative() || *alpha >= Rational::one() {
        return Err(MethodError::InvalidAlpha(format_rational(alpha)));
    }
    reject_empty(MethodKind::Markov, t)?;
    reject_draws(MethodKind::Markov, t)?;
    let n = t.player_count();
    let a = to_f64(alpha);

    // lost[i][j]: times P_i lost to P_j
    let mut lost = vec![vec![0f64; n]; n];
    for m in t.matches() {
        let (loser, winner) = if m.s_i > m.s_j {
            (m.j, m.i)
        } else {
            (m.i, m.j)
        };
        lost[loser - 1][winner - 1] += 1.0;
    }
    let columns: Vec<Vec<f64>> = lost
        .iter()
        .map(|row| {
            let total: f64 = row.iter().sum();
            if total == 0.0 {
                vec![1.0 / n as f64; n]
            } else {
                row.iter().map(|c| c / total).collect()
            }
        })
        .collect();

    let mut r = vec![1.0 / n as f64; n];
    for _ in 0..iterations {
        let mass: f64 = r.iter().sum();
        let mut next = vec![(1.0 - a) * mass / n as f64; n];
        for (i, col) in columns.iter().enumerate() {
            for (j, g) in col.iter().enumerate() {
                next[j] += a * g * r[i];
            }
        }
        let total: f64 = next.iter().sum();
        r = next.into_iter().map(|v| v / total).collect();
    }
    Ok(r)
}
