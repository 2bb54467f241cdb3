use num_traits::{One, Zero};

use super::{check_alpha, reject_draws, reject_empty, MethodError, MethodKind, RatingVector};
use crate::linalg::{solve, Matrix, SolveError};
use crate::rational::{format_rational, Rational};
use crate::tournament::Tournament;

#[derive(Debug, Clone)]
pub struct MarkovSystem {
    /// Column-stochastic vote matrix: `G[j][i] = l_ij / n_i`, or `1/n` down
    /// the whole column when `P_i` never lost.
    pub votes: Matrix,
    pub alpha: Rational,
    /// `alpha·G + (1 - alpha)/n · N`
    pub damped: Matrix,
}

pub fn build_markov_system(t: &Tournament, alpha: &Rational) -> Result<MarkovSystem, MethodError> {
    check_alpha(alpha)?;
    reject_empty(MethodKind::Markov, t)?;
    reject_draws(MethodKind::Markov, t)?;
    let n = t.player_count();
    let uniform = Rational::new(1.into(), (n as i64).into());

    let mut votes = Matrix::zeros(n, n);
    for (i, s) in t.stats().iter().enumerate() {
        if s.losses == 0 {
            for j in 0..n {
                votes[(j, i)] = uniform.clone();
            }
            continue;
        }
        let total = Rational::from_integer(s.losses.into());
        for (&opp, &count) in &s.losses_vs {
            votes[(opp - 1, i)] = Rational::from_integer(count.into()) / &total;
        }
    }

    let teleport = (Rational::one() - alpha) * &uniform;
    let mut damped = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            damped[(i, j)] = alpha * &votes[(i, j)] + &teleport;
        }
    }
    Ok(MarkovSystem {
        votes,
        alpha: alpha.clone(),
        damped,
    })
}

/// Stationary vector of the damped matrix, normalised to sum to one.
///
/// Solved exactly as `[(A - I); 1ᵀ] r = (0, ..., 0, 1)ᵀ`. For `alpha < 1` the
/// damped matrix is positive and the solution is unique; at `alpha = 1` a
/// reducible vote matrix can leave several stationary vectors, which is an
/// error rather than an arbitrary pick.
pub fn markov(t: &Tournament, alpha: &Rational) -> Result<RatingVector, MethodError> {
    let system = build_markov_system(t, alpha)?;
    let n = t.player_count();
    let mut stacked = system.damped.clone();
    for i in 0..n {
        stacked[(i, i)] -= Rational::one();
    }
    stacked.push_row(vec![Rational::one(); n]);
    let mut rhs = vec![Rational::zero(); n];
    rhs.push(Rational::one());

    let ratings = solve(&stacked, &rhs).map_err(|e| match e {
        SolveError::RankDeficient { .. } => MethodError::NonUniqueStationary {
            alpha: format_rational(alpha),
        },
        _ => MethodError::SingularSystem {
            method: MethodKind::Markov,
        },
    })?;
    let mut rv = RatingVector::new(MethodKind::Markov, t, ratings);
    rv.alpha = Some(alpha.clone());
    Ok(rv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::{int, ratio};
    use crate::tournament::{Match, Roster};

    #[test]
    fn worked_example_votes() {
        let s = build_markov_system(&fixtures::win_matrix_example(), &ratio(17, 20)).unwrap();
        let expected = Matrix::from_rows(vec![
            vec![int(0), ratio(1, 5), ratio(1, 4), ratio(5, 8)],
            vec![ratio(1, 5), int(0), ratio(1, 4), ratio(2, 8)],
            vec![ratio(2, 5), ratio(2, 5), int(0), ratio(1, 8)],
            vec![ratio(2, 5), ratio(2, 5), ratio(2, 4), int(0)],
        ]);
        assert_eq!(s.votes, expected);
        for j in 0..4 {
            let col: Rational = s.damped.column(j).iter().sum();
            assert_eq!(col, int(1));
        }
    }

    #[test]
    fn worked_example_matches_closed_form() {
        // r4 = 1 normalisation; r1, r2, r3 as rational functions of alpha
        for alpha in [ratio(1, 10), ratio(1, 2), ratio(17, 20), int(1)] {
            let a = alpha.clone();
            let rv = markov(&fixtures::win_matrix_example(), &alpha).unwrap();
            let scaled = rv.scaled_to_last().unwrap();
            let den = int(16) * (int(3) * &a * &a + int(20) * &a + int(25)) * (&a + int(2));
            let r1 = int(5)
                * (int(15) * &a * &a * &a + int(85) * &a * &a + int(172) * &a + int(160))
                / &den;
            let r2 = -int(5)
                * (int(3) * &a * &a * &a - int(19) * &a * &a - int(112) * &a - int(160))
                / &den;
            let r3 = (&a + int(8)) / (int(4) * &a + int(8));
            assert_eq!(scaled, vec![r1, r2, r3, int(1)], "alpha = {alpha}");
            assert!(rv.ranking().is_order(&["P4", "P1", "P3", "P2"]));
        }
    }

    #[test]
    fn alpha_zero_is_uniform() {
        let rv = markov(&fixtures::win_matrix_example(), &int(0)).unwrap();
        assert!(rv.ratings.iter().all(|r| *r == ratio(1, 4)));
    }

    #[test]
    fn undefeated_column_is_uniform() {
        let t = Tournament::new(Roster::numbered(3), vec![Match::win(1, 2)]).unwrap();
        let s = build_markov_system(&t, &ratio(1, 2)).unwrap();
        assert_eq!(s.votes.column(0), vec![ratio(1, 3); 3]);
        assert_eq!(s.votes.column(1), vec![int(1), int(0), int(0)]);
        assert_eq!(s.votes.column(2), vec![ratio(1, 3); 3]);
    }

    #[test]
    fn reducible_at_alpha_one_is_not_unique() {
        // two separate pairs: each pair's winner absorbs, two stationary states
        let t = Tournament::new(
            Roster::numbered(4),
            vec![
                Match::win(1, 2),
                Match::win(2, 1),
                Match::win(3, 4),
                Match::win(4, 3),
            ],
        )
        .unwrap();
        assert!(matches!(
            markov(&t, &int(1)),
            Err(MethodError::NonUniqueStationary { .. })
        ));
        assert!(markov(&t, &ratio(9, 10)).is_ok());
    }

    #[test]
    fn invalid_alpha() {
        let t = fixtures::win_matrix_example();
        assert!(matches!(
            markov(&t, &ratio(11, 10)),
            Err(MethodError::InvalidAlpha(_))
        ));
        assert!(matches!(
            markov(&t, &ratio(-1, 10)),
            Err(MethodError::InvalidAlpha(_))
        ));
    }
}
