//! Tournament data model: rosters, matches, multiset algebra and per-player
//! aggregates.
//!
//! Players are addressed by 1-based roster position. Deleting a player
//! re-numbers the survivors so positions stay contiguous; labels are carried
//! along unchanged, so rankings before and after a deletion are compared by
//! label.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TournamentError {
    #[error("rosters differ: {left:?} vs {right:?}")]
    RosterMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },
    #[error("{0:?} is not a permutation of the roster")]
    InvalidPermutation(Vec<usize>),
    #[error("need at least {min} players, got {got}")]
    TooFewPlayers { min: usize, got: usize },
    #[error("parameters k and l are both zero")]
    EmptyParameters,
    #[error("unknown player {0}")]
    UnknownPlayer(String),
    #[error("duplicate player label {0}")]
    DuplicatePlayer(String),
    #[error("match ({i}, {j}) references a player outside 1..={n}")]
    MatchOutOfRoster { i: usize, j: usize, n: usize },
    #[error("a player cannot play against itself (index {0})")]
    SelfMatch(usize),
    #[error("repetition count must be at least 1")]
    ZeroRepeat,
}

/// A player as seen from one roster: 1-based position plus display label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PlayerId {
    pub index: usize,
    pub label: String,
}

impl fmt::Display for PlayerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// Ordered, duplicate-free list of player labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct Roster {
    labels: Vec<String>,
}

impl Roster {
    pub fn new<I, S>(labels: I) -> Result<Self, TournamentError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(TournamentError::DuplicatePlayer(l.clone()));
            }
        }
        Ok(Roster { labels })
    }

    /// `P1, ..., Pn`.
    pub fn numbered(n: usize) -> Self {
        Roster {
            labels: (1..=n).map(|i| format!("P{i}")).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index - 1]
    }

    pub fn player(&self, index: usize) -> PlayerId {
        PlayerId {
            index,
            label: self.labels[index - 1].clone(),
        }
    }

    pub fn players(&self) -> Vec<PlayerId> {
        (1..=self.len()).map(|i| self.player(i)).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label).map(|p| p + 1)
    }

    pub fn contains(&self, index: usize) -> bool {
        (1..=self.len()).contains(&index)
    }
}

impl TryFrom<Vec<String>> for Roster {
    type Error = TournamentError;

    fn try_from(labels: Vec<String>) -> Result<Self, Self::Error> {
        Roster::new(labels)
    }
}

impl From<Roster> for Vec<String> {
    fn from(r: Roster) -> Self {
        r.labels
    }
}

/// One result `(P_i, P_j, s_i, s_j)`; `i` and `j` are 1-based roster positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Match {
    pub i: usize,
    pub j: usize,
    pub s_i: u64,
    pub s_j: u64,
}

impl Match {
    pub fn new(i: usize, j: usize, s_i: u64, s_j: u64) -> Self {
        Match { i, j, s_i, s_j }
    }

    /// `winner` beats `loser` 1-0.
    pub fn win(winner: usize, loser: usize) -> Self {
        Match::new(winner, loser, 1, 0)
    }

    pub fn is_draw(&self) -> bool {
        self.s_i == self.s_j
    }

    /// `(winner, loser)`, or `None` for a draw.
    pub fn outcome(&self) -> Option<(usize, usize)> {
        match self.s_i.cmp(&self.s_j) {
            std::cmp::Ordering::Greater => Some((self.i, self.j)),
            std::cmp::Ordering::Less => Some((self.j, self.i)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn involves(&self, p: usize) -> bool {
        self.i == p || self.j == p
    }

    /// Orientation-free form with the smaller index first.
    pub fn normalized(&self) -> Match {
        if self.i <= self.j {
            *self
        } else {
            Match::new(self.j, self.i, self.s_j, self.s_i)
        }
    }
}

/// A roster plus a finite multiset of matches.
#[derive(Debug, Clone)]
pub struct Tournament {
    roster: Roster,
    matches: Vec<Match>,
}

impl Tournament {
    pub fn new(roster: Roster, matches: Vec<Match>) -> Result<Self, TournamentError> {
        let n = roster.len();
        for m in &matches {
            if m.i == m.j {
                return Err(TournamentError::SelfMatch(m.i));
            }
            if !roster.contains(m.i) || !roster.contains(m.j) {
                return Err(TournamentError::MatchOutOfRoster { i: m.i, j: m.j, n });
            }
        }
        Ok(Tournament { roster, matches })
    }

    pub fn empty(roster: Roster) -> Self {
        Tournament {
            roster,
            matches: Vec::new(),
        }
    }

    pub fn roster(&self) -> &Roster {
        &self.roster
    }

    pub fn matches(&self) -> &[Match] {
        &self.matches
    }

    pub fn player_count(&self) -> usize {
        self.roster.len()
    }

    pub fn len(&self) -> usize {
        self.matches.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matches.is_empty()
    }

    pub fn has_draw(&self) -> bool {
        self.matches.iter().any(Match::is_draw)
    }

    /// Multiset sum of two tournaments over the same roster.
    pub fn union(&self, other: &Tournament) -> Result<Tournament, TournamentError> {
        if self.roster != other.roster {
            return Err(TournamentError::RosterMismatch {
                left: self.roster.labels.clone(),
                right: other.roster.labels.clone(),
            });
        }
        let mut matches = Vec::with_capacity(self.len() + other.len());
        matches.extend_from_slice(&self.matches);
        matches.extend_from_slice(&other.matches);
        Ok(Tournament {
            roster: self.roster.clone(),
            matches,
        })
    }

    /// `k`-fold multiset sum, written `kT`.
    pub fn repeat(&self, k: usize) -> Result<Tournament, TournamentError> {
        if k == 0 {
            return Err(TournamentError::ZeroRepeat);
        }
        Ok(Tournament {
            roster: self.roster.clone(),
            matches: self.matches.repeat(k),
        })
    }

    /// `T + k·other`; `k = 0` returns a copy of `self`.
    pub fn plus_times(&self, k: usize, other: &Tournament) -> Result<Tournament, TournamentError> {
        if k == 0 {
            if self.roster != other.roster {
                return Err(TournamentError::RosterMismatch {
                    left: self.roster.labels.clone(),
                    right: other.roster.labels.clone(),
                });
            }
            return Ok(self.clone());
        }
        self.union(&other.repeat(k)?)
    }

    /// Removes `index` and every match it took part in; survivors are
    /// re-numbered in roster order.
    pub fn delete_player(&self, index: usize) -> Result<Tournament, TournamentError> {
        if !self.roster.contains(index) {
            return Err(TournamentError::UnknownPlayer(format!("#{index}")));
        }
        let shift = |p: usize| if p > index { p - 1 } else { p };
        let mut labels = self.roster.labels.clone();
        labels.remove(index - 1);
        let matches = self
            .matches
            .iter()
            .filter(|m| !m.involves(index))
            .map(|m| Match::new(shift(m.i), shift(m.j), m.s_i, m.s_j))
            .collect();
        Ok(Tournament {
            roster: Roster { labels },
            matches,
        })
    }

    pub fn delete_player_by_label(&self, label: &str) -> Result<Tournament, TournamentError> {
        let index = self
            .roster
            .index_of(label)
            .ok_or_else(|| TournamentError::UnknownPlayer(label.to_string()))?;
        self.delete_player(index)
    }

    /// Sorted orientation-free match list; two tournaments on the same
    /// roster are equal as multisets iff their canonical forms agree.
    pub fn canonical(&self) -> Vec<Match> {
        let mut v: Vec<Match> = self.matches.iter().map(Match::normalized).collect();
        v.sort_unstable();
        v
    }

    pub fn multiset_eq(&self, other: &Tournament) -> bool {
        self.roster == other.roster && self.canonical() == other.canonical()
    }

    /// Per-player aggregates in roster order.
    pub fn stats(&self) -> Vec<PlayerStats> {
        let n = self.player_count();
        let mut out: Vec<PlayerStats> = self
            .roster
            .players()
            .into_iter()
            .map(PlayerStats::new)
            .collect();
        for m in &self.matches {
            for (me, opp, mine, theirs) in [(m.i, m.j, m.s_i, m.s_j), (m.j, m.i, m.s_j, m.s_i)] {
                let s = &mut out[me - 1];
                s.matches_played += 1;
                s.points_for += mine;
                s.points_against += theirs;
                *s.matches_vs.entry(opp).or_default() += 1;
                match mine.cmp(&theirs) {
                    std::cmp::Ordering::Greater => s.wins += 1,
                    std::cmp::Ordering::Less => {
                        s.losses += 1;
                        *s.losses_vs.entry(opp).or_default() += 1;
                    }
                    std::cmp::Ordering::Equal => s.draws += 1,
                }
            }
        }
        debug_assert_eq!(out.len(), n);
        out
    }

    /// Number of meetings between every unordered pair, indexed `[i-1][j-1]`.
    pub fn meetings(&self) -> Vec<Vec<u64>> {
        let n = self.player_count();
        let mut counts = vec![vec![0u64; n]; n];
        for m in &self.matches {
            counts[m.i - 1][m.j - 1] += 1;
            counts[m.j - 1][m.i - 1] += 1;
        }
        counts
    }
}

impl PartialEq for Tournament {
    fn eq(&self, other: &Self) -> bool {
        self.multiset_eq(other)
    }
}

impl Eq for Tournament {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlayerStats {
    pub player: PlayerId,
    pub wins: u64,
    pub losses: u64,
    pub draws: u64,
    pub points_for: u64,
    pub points_against: u64,
    pub matches_played: u64,
    /// opponent index → meetings
    pub matches_vs: BTreeMap<usize, u64>,
    /// opponent index → losses against that opponent (`l_ij`)
    pub losses_vs: BTreeMap<usize, u64>,
}

impl PlayerStats {
    fn new(player: PlayerId) -> Self {
        PlayerStats {
            player,
            wins: 0,
            losses: 0,
            draws: 0,
            points_for: 0,
            points_against: 0,
            matches_played: 0,
            matches_vs: BTreeMap::new(),
            losses_vs: BTreeMap::new(),
        }
    }

    /// `f_i - a_i`
    pub fn point_differential(&self) -> i64 {
        self.points_for as i64 - self.points_against as i64
    }

    pub fn win_loss_margin(&self) -> i64 {
        self.wins as i64 - self.losses as i64
    }
}
