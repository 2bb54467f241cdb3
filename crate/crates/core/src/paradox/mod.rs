//! Inversion-paradox experiments.
//!
//! [`inversion_check`] deletes the last-ranked player and classifies what
//! happens to the ranking. The axiom checkers probe naturality, reducibility
//! by Condorcet tournaments and the long tournament property. The closed
//! forms for `Z(n, k, l)` and the brute-force oracles exist to cross-check
//! the general solvers.

mod alpha_scan;
mod axioms;
mod closed_form;
mod inversion;
mod oracles;
mod regularity;
pub mod surd;

use thiserror::Error;

use crate::generators::{ascending, condorcet_numbered, descending, perfect_numbered};
use crate::methods::MethodError;
use crate::tournament::{Tournament, TournamentError};

pub use alpha_scan::{parse_grid, scan_alpha_thresholds, AlphaRow, AlphaScan, ChangePoint};
pub use axioms::{
    check_condorcet_reducibility, check_long_tournament, check_natural, find_long_tournament_k,
    Axiom, Counterexample, PropertyReport,
};
pub use closed_form::{
    colley_z_closed_form, massey_z_closed_form, z_closed_form, z_inversion_predicate, ColleyZForm,
    MasseyZForm, ZClosedForm, ZMethod,
};
pub use inversion::{classify, inversion_check, ParadoxReport, Verdict};
pub use oracles::{markov_power_iteration_oracle, massey_least_squares_oracle, LeastSquaresSystem};
pub use regularity::{regularity, RegularityInfo};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParadoxError {
    #[error(transparent)]
    Method(#[from] MethodError),
    #[error(transparent)]
    Tournament(#[from] TournamentError),
    #[error("ranking of the target tournament has ties: {0}")]
    NotStrictOrder(String),
    #[error("invalid alpha grid: {0}")]
    InvalidGrid(String),
}

/// `perfect(P1 > ... > Pn) + k·condorcet(Pn > ... > P1)`.
pub fn theorem_witness(n: usize, k: usize) -> Result<Tournament, TournamentError> {
    if n < 3 {
        return Err(TournamentError::TooFewPlayers { min: 3, got: n });
    }
    let base = perfect_numbered(&ascending(n))?;
    if k == 0 {
        return Ok(base);
    }
    base.plus_times(k, &condorcet_numbered(&descending(n))?)
}
