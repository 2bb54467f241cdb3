//! Exact-arithmetic tournament ranking.
//!
//! * [`tournament`] and [`generators`]: the match-multiset data model and the
//!   structured tournaments (perfect, Condorcet, rings, chains, `Z(n,k,l)`).
//! * [`methods`]: Borda, Massey, Colley and Markov ratings over
//!   [`rational::Rational`], plus weak-order rankings.
//! * [`paradox`]: inversion checks after deleting the last-ranked player,
//!   axiom checkers, closed forms for `Z(n,k,l)` and independent oracles.
//! * [`io`]: CSV and JSON tournament files.

pub mod fixtures;
pub mod generators;
pub mod io;
pub mod linalg;
pub mod methods;
pub mod paradox;
pub mod rational;
pub mod tournament;

pub use methods::{Method, MethodError, MethodKind, Ranking, RatingVector};
pub use rational::Rational;
pub use tournament::{Match, PlayerId, PlayerStats, Roster, Tournament, TournamentError};
