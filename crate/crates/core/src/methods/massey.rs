use num_traits::{One, Zero};

use super::{reject_draws, reject_empty, MethodError, MethodKind, RatingVector};
use crate::linalg::{solve, Matrix};
use crate::rational::Rational;
use crate::tournament::Tournament;

/// Least-squares rating system `M r = p` and its adjusted form.
#[derive(Debug, Clone)]
pub struct MasseySystem {
    /// Games played on the diagonal, minus pairwise meetings off it.
    pub matrix: Matrix,
    /// Cumulative point differential `f_i - a_i`.
    pub differential: Vec<Rational>,
    /// `matrix` with its last row replaced by ones.
    pub adjusted: Matrix,
    /// `differential` with its last entry replaced by zero.
    pub adjusted_rhs: Vec<Rational>,
}

/// Builds the Massey matrix and point differential. Fails on draws and on
/// players with no matches.
pub fn build_massey_system(t: &Tournament) -> Result<MasseySystem, MethodError> {
    reject_empty(MethodKind::Massey, t)?;
    reject_draws(MethodKind::Massey, t)?;
    let stats = t.stats();
    if let Some(idle) = stats.iter().find(|s| s.matches_played == 0) {
        if t.player_count() > 1 {
            return Err(MethodError::IsolatedPlayer {
                method: MethodKind::Massey,
                player: idle.player.label.clone(),
            });
        }
    }

    let n = t.player_count();
    let matrix = game_matrix(t);
    let differential: Vec<Rational> = stats
        .iter()
        .map(|s| Rational::from_integer(s.point_differential().into()))
        .collect();

    let mut adjusted = matrix.clone();
    adjusted.replace_row(n - 1, vec![Rational::one(); n]);
    let mut adjusted_rhs = differential.clone();
    adjusted_rhs[n - 1] = Rational::zero();

    Ok(MasseySystem {
        matrix,
        differential,
        adjusted,
        adjusted_rhs,
    })
}

/// `M`: diagonal = matches played, off-diagonal = -(meetings).
pub(crate) fn game_matrix(t: &Tournament) -> Matrix {
    let n = t.player_count();
    let meetings = t.meetings();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        let mut played = 0u64;
        for j in 0..n {
            if i != j {
                played += meetings[i][j];
                m[(i, j)] = -Rational::from_integer(meetings[i][j].into());
            }
        }
        m[(i, i)] = Rational::from_integer(played.into());
    }
    m
}

/// Massey ratings normalised to sum to zero.
pub fn massey(t: &Tournament) -> Result<RatingVector, MethodError> {
    let system = build_massey_system(t)?;
    let ratings =
        solve(&system.adjusted, &system.adjusted_rhs).map_err(|_| MethodError::SingularSystem {
            method: MethodKind::Massey,
        })?;
    Ok(RatingVector::new(MethodKind::Massey, t, ratings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::{int, ratio};
    use crate::tournament::{Match, Roster};

    #[test]
    fn worked_example_system() {
        let s = build_massey_system(&fixtures::win_matrix_example()).unwrap();
        let expected = Matrix::from_i64_rows(&[
            &[12, -2, -3, -7],
            &[-2, 9, -3, -4],
            &[-3, -3, 9, -3],
            &[1, 1, 1, 1],
        ]);
        assert_eq!(s.adjusted, expected);
        assert_eq!(s.adjusted_rhs, vec![int(2), int(-1), int(1), int(0)]);
        assert!(s.matrix.is_symmetric());
    }

    #[test]
    fn worked_example_ratings() {
        let rv = massey(&fixtures::win_matrix_example()).unwrap();
        let approx: Vec<f64> = rv.ratings.iter().map(crate::rational::to_f64).collect();
        for (got, want) in approx.iter().zip([0.1142, -0.1009, 0.0833, -0.0966]) {
            assert!((got - want).abs() < 1e-4, "{got} vs {want}");
        }
        assert!(rv.ranking().is_order(&["P1", "P3", "P4", "P2"]));
        assert!(rv.sum().is_zero());
    }

    #[test]
    fn two_players() {
        let t = Tournament::new(Roster::numbered(2), vec![Match::win(1, 2)]).unwrap();
        assert_eq!(massey(&t).unwrap().ratings, vec![ratio(1, 2), ratio(-1, 2)]);
    }

    #[test]
    fn isolated_player() {
        let t = Tournament::new(Roster::numbered(3), vec![Match::win(1, 2)]).unwrap();
        assert_eq!(
            massey(&t).unwrap_err(),
            MethodError::IsolatedPlayer {
                method: MethodKind::Massey,
                player: "P3".into()
            }
        );
    }

    #[test]
    fn disconnected_is_singular() {
        let t = Tournament::new(
            Roster::numbered(4),
            vec![Match::win(1, 2), Match::win(3, 4)],
        )
        .unwrap();
        assert_eq!(
            massey(&t).unwrap_err(),
            MethodError::SingularSystem {
                method: MethodKind::Massey
            }
        );
    }

    #[test]
    fn scores_matter() {
        let t = Tournament::new(Roster::numbered(2), vec![Match::new(1, 2, 5, 2)]).unwrap();
        assert_eq!(massey(&t).unwrap().ratings, vec![ratio(3, 2), ratio(-3, 2)]);
    }
}
