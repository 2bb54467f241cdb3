use num_traits::Signed;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::ParadoxError;
use crate::methods::{markov, Ranking, RatingVector};
use crate::rational::{format_rational, is_unit_interval, parse_rational, Rational};
use crate::tournament::Tournament;

#[derive(Debug, Clone)]
pub struct AlphaRow {
    pub alpha: Rational,
    pub ranking: Ranking,
    pub ratings: RatingVector,
}

/// Consecutive grid points whose rankings differ; a threshold lies in
/// `(lower, upper]`.
#[derive(Debug, Clone)]
pub struct ChangePoint {
    pub lower: Rational,
    pub upper: Rational,
    pub from: Ranking,
    pub to: Ranking,
}

#[derive(Debug, Clone, Serialize)]
pub struct AlphaScan {
    pub rows: Vec<AlphaRow>,
    pub change_points: Vec<ChangePoint>,
}

impl ChangePoint {
    pub fn brackets(&self, value: &Rational) -> bool {
        self.lower < *value && *value <= self.upper
    }
}

impl Serialize for AlphaRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("AlphaRow", 3)?;
        s.serialize_field("alpha", &format_rational(&self.alpha))?;
        s.serialize_field("ranking", &self.ranking)?;
        s.serialize_field("ratings", &self.ratings)?;
        s.end()
    }
}

impl Serialize for ChangePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ChangePoint", 4)?;
        s.serialize_field("lower", &format_rational(&self.lower))?;
        s.serialize_field("upper", &format_rational(&self.upper))?;
        s.serialize_field("from", &self.from)?;
        s.serialize_field("to", &self.to)?;
        s.end()
    }
}

fn check_grid(grid: &[Rational]) -> Result<(), ParadoxError> {
    if let Some(bad) = grid.iter().find(|a| !is_unit_interval(a)) {
        return Err(ParadoxError::InvalidGrid(format!(
            "{} is outside [0, 1]",
            format_rational(bad)
        )));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ParadoxError::InvalidGrid(
            "values must be strictly increasing".into(),
        ));
    }
    Ok(())
}

/// Markov ranking at each grid point, with the brackets where it changes.
pub fn scan_alpha_thresholds(t: &Tournament, grid: &[Rational]) -> Result<AlphaScan, ParadoxError> {
    check_grid(grid)?;
    let mut rows: Vec<AlphaRow> = Vec::with_capacity(grid.len());
    for alpha in grid {
        let ratings = markov(t, alpha)?;
        rows.push(AlphaRow {
            alpha: alpha.clone(),
            ranking: ratings.ranking(),
            ratings,
        });
    }
    let change_points = rows
        .windows(2)
        .filter(|w| w[0].ranking != w[1].ranking)
        .map(|w| ChangePoint {
            lower: w[0].alpha.clone(),
            upper: w[1].alpha.clone(),
            from: w[0].ranking.clone(),
            to: w[1].ranking.clone(),
        })
        .collect();
    Ok(AlphaScan {
        rows,
        change_points,
    })
}

/// `start:end:step`, inclusive of `end` when a step lands on it exactly.
/// Each part is a fraction or a decimal.
pub fn parse_grid(spec: &str) -> Result<Vec<Rational>, ParadoxError> {
    let bad = |msg: String| ParadoxError::InvalidGrid(msg);
    let parts: Vec<&str> = spec.split(':').collect();
    let [start, end, step] = parts[..] else {
        return Err(bad(format!("expected start:end:step, got {spec:?}")));
    };
    let parse = |s: &str| parse_rational(s).map_err(|e| bad(e.to_string()));
    let (start, end, step) = (parse(start)?, parse(end)?, parse(step)?);
    if !step.is_positive() {
        return Err(bad("step must be positive".into()));
    }
    if start > end {
        return Err(bad("start exceeds end".into()));
    }
    let mut grid = Vec::new();
    let mut a = start;
    while a <= end {
        grid.push(a.clone());
        a += &step;
    }
    check_grid(&grid)?;
    Ok(grid)
}
