//! Checkers for the three axioms: natural, reducible by Condorcet
//! tournaments, and the long tournament property.

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::ParadoxError;
use crate::generators::{condorcet, perfect_numbered};
use crate::methods::{Method, Ranking};
use crate::tournament::{Roster, Tournament, TournamentError};

/// Largest roster for which `check_natural` enumerates every order.
const EXHAUSTIVE_MAX: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Natural,
    Condorcet,
    LongTournament,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Natural => "natural",
            Axiom::Condorcet => "condorcet",
            Axiom::LongTournament => "long-tournament",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub tournament: Tournament,
    pub expected: Ranking,
    pub actual: Ranking,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropertyReport {
    pub axiom: Axiom,
    pub method: Method,
    pub passed: bool,
    pub cases_checked: usize,
    /// Every `k` that broke the property (reducibility only).
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violating_k: Vec<usize>,
    /// Smallest `k` that worked (long tournament only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub found_k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl PropertyReport {
    fn new(axiom: Axiom, method: &Method) -> Self {
        PropertyReport {
            axiom,
            method: method.clone(),
            passed: true,
            cases_checked: 0,
            violating_k: Vec::new(),
            found_k: None,
            counterexample: None,
        }
    }

    fn fail(&mut self, cx: Counterexample) {
        self.passed = false;
        if self.counterexample.is_none() {
            self.counterexample = Some(cx);
        }
    }
}

/// Expected ranking of `perfect(order)`.
fn order_ranking(roster: &Roster, order: &[usize]) -> Ranking {
    Ranking::strict(order.iter().map(|&i| roster.player(i)).collect())
}

/// `ranking(perfect(σ)) = σ` for random `σ`, or for every `σ` when
/// `n <= 4`.
pub fn check_natural(
    method: &Method,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<PropertyReport, ParadoxError> {
    if n < 2 {
        return Err(TournamentError::TooFewPlayers { min: 2, got: n }.into());
    }
    let orders: Vec<Vec<usize>> = if n <= EXHAUSTIVE_MAX {
        (1..=n).permutations(n).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut order: Vec<usize> = (1..=n).collect();
        (0..trials)
            .map(|_| {
                order.shuffle(&mut rng);
                order.clone()
            })
            .collect()
    };

    let mut report = PropertyReport::new(Axiom::Natural, method);
    for order in orders {
        let t = perfect_numbered(&order)?;
        let expected = order_ranking(t.roster(), &order);
        let actual = method.rank(&t)?;
        report.cases_checked += 1;
        if actual != expected {
            report.fail(Counterexample {
                tournament: t,
                expected,
                actual,
                k: None,
            });
        }
    }
    Ok(report)
}

/// `ranking(t + k·condorcet(c_order)) = ranking(t)` for `k = 1..=k_max`.
pub fn check_condorcet_reducibility(
    method: &Method,
    t: &Tournament,
    c_order: &[usize],
    k_max: usize,
) -> Result<PropertyReport, ParadoxError> {
    let c = condorcet(t.roster(), c_order)?;
    let expected = method.rank(t)?;
    let mut report = PropertyReport::new(Axiom::Condorcet, method);
    let mut current = t.clone();
    for k in 1..=k_max {
        current = current.union(&c)?;
        let actual = method.rank(&current)?;
        report.cases_checked += 1;
        if actual != expected {
            report.violating_k.push(k);
            report.fail(Counterexample {
                tournament: current.clone(),
                expected: expected.clone(),
                actual,
                k: Some(k),
            });
        }
    }
    Ok(report)
}

/// Smallest `k <= k_max` with `ranking(t1 + k·t2) = ranking(t2)`.
pub fn find_long_tournament_k(
    method: &Method,
    t1: &Tournament,
    t2: &Tournament,
    k_max: usize,
) -> Result<Option<usize>, ParadoxError> {
    Ok(long_tournament_scan(method, t1, t2, k_max)?.found)
}

struct LongScan {
    found: Option<usize>,
    target: Ranking,
    /// Tournament and ranking at `k_max` when nothing worked.
    last: Option<(Tournament, Ranking)>,
    checked: usize,
}

fn long_tournament_scan(
    method: &Method,
    t1: &Tournament,
    t2: &Tournament,
    k_max: usize,
) -> Result<LongScan, ParadoxError> {
    let target = method.rank(t2)?;
    if !target.is_strict() {
        return Err(ParadoxError::NotStrictOrder(target.to_string()));
    }
    let mut current = t1.clone();
    let mut last = None;
    for k in 1..=k_max {
        current = current.union(t2)?;
        let actual = method.rank(&current)?;
        if actual == target {
            return Ok(LongScan {
                found: Some(k),
                target,
                last: None,
                checked: k,
            });
        }
        last = Some((current.clone(), actual));
    }
    Ok(LongScan {
        found: None,
        target,
        last,
        checked: k_max,
    })
}

/// Report form of [`find_long_tournament_k`]; fails when no `k <= k_max`
/// works, with the `k_max` tournament as counterexample.
pub fn check_long_tournament(
    method: &Method,
    t1: &Tournament,
    t2: &Tournament,
    k_max: usize,
) -> Result<PropertyReport, ParadoxError> {
    let LongScan {
        found,
        target,
        last,
        checked,
    } = long_tournament_scan(method, t1, t2, k_max)?;
    let mut report = PropertyReport::new(Axiom::LongTournament, method);
    report.cases_checked = checked;
    report.found_k = found;
    if found.is_none() {
        report.passed = false;
        if let Some((tournament, actual)) = last {
            report.counterexample = Some(Counterexample {
                tournament,
                expected: target,
                actual,
                k: Some(k_max),
            });
        }
    }
    Ok(report)
}
