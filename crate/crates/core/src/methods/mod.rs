//! The four rating methods and the rating → ranking step.
//!
//! Every method maps a [`Tournament`] to a [`RatingVector`] of exact
//! rationals; [`Ranking::from_ratings`] turns that into a weak order with
//! ties decided by exact equality.

mod borda;
mod colley;
mod markov;
mod massey;
mod ranking;

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::rational::{format_rational, is_unit_interval, Rational};
use crate::tournament::{PlayerId, Tournament};

pub use borda::borda;
pub use colley::{build_colley_system, colley, ColleySystem};
pub use markov::{build_markov_system, markov, MarkovSystem};
pub use massey::{build_massey_system, massey, MasseySystem};
pub use ranking::{ranking_from_ratings, Ranking};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MethodError {
    #[error("{method} does not accept draws (match {i} vs {j} ended {score}-{score})")]
    DrawNotSupported {
        method: MethodKind,
        i: String,
        j: String,
        score: u64,
    },
    #[error("{method} needs every player to play at least one match; {player} has none")]
    IsolatedPlayer { method: MethodKind, player: String },
    #[error("{method} system is singular (is the match graph disconnected?)")]
    SingularSystem { method: MethodKind },
    #[error("markov stationary vector is not unique at alpha = {alpha}")]
    NonUniqueStationary { alpha: String },
    #[error("alpha must lie in [0, 1], got {0}")]
    InvalidAlpha(String),
    #[error("{method} needs a nonempty roster")]
    EmptyRoster { method: MethodKind },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodKind {
    Borda,
    Massey,
    Colley,
    Markov,
}

impl MethodKind {
    pub const ALL: [MethodKind; 4] = [
        MethodKind::Borda,
        MethodKind::Massey,
        MethodKind::Colley,
        MethodKind::Markov,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MethodKind::Borda => "borda",
            MethodKind::Massey => "massey",
            MethodKind::Colley => "colley",
            MethodKind::Markov => "markov",
        }
    }
}

impl fmt::Display for MethodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MethodKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MethodKind::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                format!("unknown method {s:?} (expected borda, massey, colley or markov)")
            })
    }
}

/// A fully parameterised ranking method.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Method {
    Borda,
    Massey,
    Colley,
    Markov { alpha: Rational },
}

impl Method {
    /// Markov with the customary damping `0.85`.
    pub fn markov_default() -> Method {
        Method::Markov {
            alpha: Rational::new(85.into(), 100.into()),
        }
    }

    pub fn with_kind(kind: MethodKind, alpha: &Rational) -> Method {
        match kind {
            MethodKind::Borda => Method::Borda,
            MethodKind::Massey => Method::Massey,
            MethodKind::Colley => Method::Colley,
            MethodKind::Markov => Method::Markov {
                alpha: alpha.clone(),
            },
        }
    }

    pub fn kind(&self) -> MethodKind {
        match self {
            Method::Borda => MethodKind::Borda,
            Method::Massey => MethodKind::Massey,
            Method::Colley => MethodKind::Colley,
            Method::Markov { .. } => MethodKind::Markov,
        }
    }

    pub fn alpha(&self) -> Option<&Rational> {
        match self {
            Method::Markov { alpha } => Some(alpha),
            _ => None,
        }
    }

    pub fn rate(&self, t: &Tournament) -> Result<RatingVector, MethodError> {
        match self {
            Method::Borda => borda(t),
            Method::Massey => massey(t),
            Method::Colley => colley(t),
            Method::Markov { alpha } => markov(t, alpha),
        }
    }

    pub fn rank(&self, t: &Tournament) -> Result<Ranking, MethodError> {
        Ok(self.rate(t)?.ranking())
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Markov { alpha } => write!(f, "markov(alpha={alpha})"),
            other => f.write_str(other.kind().name()),
        }
    }
}

impl Serialize for Method {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Method::Markov { alpha } => {
                let mut map = serializer.serialize_map(Some(2))?;
                map.serialize_entry("name", "markov")?;
                map.serialize_entry("alpha", &format_rational(alpha))?;
                map.end()
            }
            other => serializer.serialize_str(other.kind().name()),
        }
    }
}

/// Exact rating per roster player, in roster order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatingVector {
    pub method: MethodKind,
    pub alpha: Option<Rational>,
    pub players: Vec<PlayerId>,
    pub ratings: Vec<Rational>,
}

impl RatingVector {
    pub(crate) fn new(method: MethodKind, t: &Tournament, ratings: Vec<Rational>) -> Self {
        debug_assert_eq!(ratings.len(), t.player_count());
        RatingVector {
            method,
            alpha: None,
            players: t.roster().players(),
            ratings,
        }
    }

    pub fn get(&self, label: &str) -> Option<&Rational> {
        self.players
            .iter()
            .position(|p| p.label == label)
            .map(|i| &self.ratings[i])
    }

    pub fn sum(&self) -> Rational {
        self.ratings.iter().fold(Rational::zero(), |a, b| a + b)
    }

    pub fn ranking(&self) -> Ranking {
        ranking_from_ratings(self)
    }

    /// Same vector rescaled so that its last entry is one (the form used when
    /// printing stationary vectors). `None` if the last entry is zero.
    pub fn scaled_to_last(&self) -> Option<Vec<Rational>> {
        let last = self.ratings.last()?;
        if last.is_zero() {
            return None;
        }
        Some(self.ratings.iter().map(|r| r / last).collect())
    }
}

impl Serialize for RatingVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Ratings<'a>(&'a RatingVector);
        impl Serialize for Ratings<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(Some(self.0.players.len()))?;
                for (p, r) in self.0.players.iter().zip(&self.0.ratings) {
                    map.serialize_entry(&p.label, &format_rational(r))?;
                }
                map.end()
            }
        }

        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("method", &self.method)?;
        if let Some(alpha) = &self.alpha {
            map.serialize_entry("alpha", &format_rational(alpha))?;
        }
        map.serialize_entry("ratings", &Ratings(self))?;
        map.serialize_entry("ranking", &self.ranking())?;
        map.end()
    }
}

pub(crate) fn reject_draws(method: MethodKind, t: &Tournament) -> Result<(), MethodError> {
    match t.matches().iter().find(|m| m.is_draw()) {
        Some(m) => Err(MethodError::DrawNotSupported {
            method,
            i: t.roster().label(m.i).to_string(),
            j: t.roster().label(m.j).to_string(),
            score: m.s_i,
        }),
        None => Ok(()),
    }
}

pub(crate) fn reject_empty(method: MethodKind, t: &Tournament) -> Result<(), MethodError> {
    if t.roster().is_empty() {
        Err(MethodError::EmptyRoster { method })
    } else {
        Ok(())
    }
}

pub(crate) fn check_alpha(alpha: &Rational) -> Result<(), MethodError> {
    if is_unit_interval(alpha) {
        Ok(())
    } else {
        Err(MethodError::InvalidAlpha(format_rational(alpha)))
    }
}
