use super::{reject_draws, reject_empty, MethodError, MethodKind, RatingVector};
use crate::rational::Rational;
use crate::tournament::Tournament;

/// Rating = number of wins.
pub fn borda(t: &Tournament) -> Result<RatingVector, MethodError> {
    reject_empty(MethodKind::Borda, t)?;
    reject_draws(MethodKind::Borda, t)?;
    let ratings = t
        .stats()
        .iter()
        .map(|s| Rational::from_integer(s.wins.into()))
        .collect();
    Ok(RatingVector::new(MethodKind::Borda, t, ratings))
}
