//! Constructors for the structured tournaments: perfect round-robins,
//! Condorcet cycles, rings, chains and `Z(n, k, l) = k·R⁺ₙ + l·S⁻ₙ`.
//!
//! Orders are slices of 1-based roster positions, best first.

use crate::tournament::{Match, Roster, Tournament, TournamentError};

fn check_permutation(n: usize, order: &[usize]) -> Result<(), TournamentError> {
    let mut seen = vec![false; n + 1];
    let ok = order.len() == n
        && order.iter().all(|&p| {
            let fresh = (1..=n).contains(&p) && !seen[p];
            if fresh {
                seen[p] = true;
            }
            fresh
        });
    if ok {
        Ok(())
    } else {
        Err(TournamentError::InvalidPermutation(order.to_vec()))
    }
}

/// Single round-robin without upsets: `order[a]` beats `order[b]` 1-0 for `a < b`.
pub fn perfect(roster: &Roster, order: &[usize]) -> Result<Tournament, TournamentError> {
    check_permutation(roster.len(), order)?;
    let matches = order
        .iter()
        .enumerate()
        .flat_map(|(a, &winner)| {
            order[a + 1..]
                .iter()
                .map(move |&loser| Match::win(winner, loser))
        })
        .collect();
    Tournament::new(roster.clone(), matches)
}

/// Sum of the `n` cyclic rotations of `perfect(order)`.
pub fn condorcet(roster: &Roster, order: &[usize]) -> Result<Tournament, TournamentError> {
    check_permutation(roster.len(), order)?;
    let n = order.len();
    let mut matches = Vec::with_capacity(n * n * n.saturating_sub(1) / 2);
    for shift in 0..n {
        let rotated: Vec<usize> = (0..n).map(|a| order[(a + shift) % n]).collect();
        matches.extend_from_slice(perfect(roster, &rotated)?.matches());
    }
    Tournament::new(roster.clone(), matches)
}

/// `perfect` on `P1..Pn` in the given order.
pub fn perfect_numbered(order: &[usize]) -> Result<Tournament, TournamentError> {
    perfect(&Roster::numbered(order.len()), order)
}

pub fn condorcet_numbered(order: &[usize]) -> Result<Tournament, TournamentError> {
    condorcet(&Roster::numbered(order.len()), order)
}

/// `1, 2, ..., n`
pub fn ascending(n: usize) -> Vec<usize> {
    (1..=n).collect()
}

/// `n, n-1, ..., 1`
pub fn descending(n: usize) -> Vec<usize> {
    (1..=n).rev().collect()
}

fn require(n: usize, min: usize) -> Result<(), TournamentError> {
    if n < min {
        Err(TournamentError::TooFewPlayers { min, got: n })
    } else {
        Ok(())
    }
}

/// `R⁺ₙ`: `(P_i, P_{i+1}, 0, 1)` for `i < n` and `(P_n, P_1, 0, 1)`.
pub fn ring_plus(n: usize) -> Result<Tournament, TournamentError> {
    require(n, 3)?;
    let matches = (1..=n).map(|i| Match::new(i, i % n + 1, 0, 1)).collect();
    Tournament::new(Roster::numbered(n), matches)
}

/// `S⁻ₙ`: `P_i` beats `P_{i+1}` for `i < n`.
pub fn chain_minus(n: usize) -> Result<Tournament, TournamentError> {
    require(n, 2)?;
    let matches = (1..n).map(|i| Match::new(i, i + 1, 1, 0)).collect();
    Tournament::new(Roster::numbered(n), matches)
}

/// `S⁺ₙ`: `P_{i+1}` beats `P_i` for `i < n`.
pub fn chain_plus(n: usize) -> Result<Tournament, TournamentError> {
    require(n, 2)?;
    let matches = (1..n).map(|i| Match::new(i, i + 1, 0, 1)).collect();
    Tournament::new(Roster::numbered(n), matches)
}

/// `Z(n, k, l) = k·R⁺ₙ + l·S⁻ₙ`.
pub fn z_tournament(n: usize, k: usize, l: usize) -> Result<Tournament, TournamentError> {
    require(n, 3)?;
    if k == 0 && l == 0 {
        return Err(TournamentError::EmptyParameters);
    }
    let base = Tournament::empty(Roster::numbered(n));
    base.plus_times(k, &ring_plus(n)?)?
        .plus_times(l, &chain_minus(n)?)
}
