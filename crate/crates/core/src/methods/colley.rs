use super::massey::game_matrix;
use super::{reject_draws, reject_empty, MethodError, MethodKind, RatingVector};
use crate::linalg::{solve, Matrix};
use crate::rational::{ratio, Rational};
use crate::tournament::Tournament;

#[derive(Debug, Clone)]
pub struct ColleySystem {
    /// `M + 2I`
    pub matrix: Matrix,
    /// `b_i = 1 + (w_i - l_i) / 2`
    pub rhs: Vec<Rational>,
}

pub fn build_colley_system(t: &Tournament) -> Result<ColleySystem, MethodError> {
    reject_empty(MethodKind::Colley, t)?;
    reject_draws(MethodKind::Colley, t)?;
    let mut matrix = game_matrix(t);
    for i in 0..t.player_count() {
        matrix[(i, i)] += Rational::from_integer(2.into());
    }
    let rhs = t
        .stats()
        .iter()
        .map(|s| Rational::from_integer(1.into()) + ratio(s.win_loss_margin(), 2))
        .collect();
    Ok(ColleySystem { matrix, rhs })
}

/// Colley ratings; only wins and losses count, never the score.
pub fn colley(t: &Tournament) -> Result<RatingVector, MethodError> {
    let system = build_colley_system(t)?;
    // M + 2I is strictly diagonally dominant, so this cannot fail
    let ratings = solve(&system.matrix, &system.rhs).map_err(|_| MethodError::SingularSystem {
        method: MethodKind::Colley,
    })?;
    Ok(RatingVector::new(MethodKind::Colley, t, ratings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rational::int;
    use crate::tournament::{Match, Roster};

    #[test]
    fn worked_example() {
        let s = build_colley_system(&fixtures::win_matrix_example()).unwrap();
        assert_eq!(
            s.matrix,
            Matrix::from_i64_rows(&[
                &[14, -2, -3, -7],
                &[-2, 11, -3, -4],
                &[-3, -3, 11, -3],
                &[-7, -4, -3, 16],
            ])
        );
        assert_eq!(s.rhs, vec![int(2), ratio(1, 2), ratio(3, 2), int(0)]);
        let rv = colley(&fixtures::win_matrix_example()).unwrap();
        let approx: Vec<f64> = rv.ratings.iter().map(crate::rational::to_f64).collect();
        for (got, want) in approx.iter().zip([0.5509, 0.4574, 0.5357, 0.4558]) {
            assert!((got - want).abs() < 1e-4, "{got} vs {want}");
        }
        assert!(rv.ranking().is_order(&["P1", "P3", "P2", "P4"]));
        assert_eq!(rv.sum(), int(2));
    }

    #[test]
    fn idle_player_gets_one_half() {
        let t = Tournament::new(Roster::numbered(3), vec![Match::win(1, 2)]).unwrap();
        let rv = colley(&t).unwrap();
        assert_eq!(rv.ratings, vec![ratio(5, 8), ratio(3, 8), ratio(1, 2)]);
    }

    #[test]
    fn ignores_scores() {
        let a = Tournament::new(Roster::numbered(2), vec![Match::new(1, 2, 9, 0)]).unwrap();
        let b = Tournament::new(Roster::numbered(2), vec![Match::win(1, 2)]).unwrap();
        assert_eq!(colley(&a).unwrap().ratings, colley(&b).unwrap().ratings);
    }

    #[test]
    fn draws_rejected() {
        let t = Tournament::new(Roster::numbered(2), vec![Match::new(1, 2, 0, 0)]).unwrap();
        assert!(matches!(
            colley(&t),
            Err(MethodError::DrawNotSupported { .. })
        ));
    }
}
