use std::fmt;

use serde::{Serialize, Serializer};

use super::RatingVector;
use crate::tournament::PlayerId;

/// Weak order on a roster: equivalence classes, best first.
///
/// Players inside a class are kept sorted by label, so two rankings built
/// from the same ratings agree regardless of roster order. Equality compares
/// classes by label, which is what makes rankings before and after a
/// deletion comparable even though roster positions shift.
#[derive(Debug, Clone)]
pub struct Ranking {
    classes: Vec<Vec<PlayerId>>,
}

impl Ranking {
    pub fn new(mut classes: Vec<Vec<PlayerId>>) -> Self {
        classes.retain(|c| !c.is_empty());
        for c in &mut classes {
            c.sort_by(|a, b| a.label.cmp(&b.label));
        }
        Ranking { classes }
    }

    /// Strict order from a best-first player list.
    pub fn strict(players: Vec<PlayerId>) -> Self {
        Ranking::new(players.into_iter().map(|p| vec![p]).collect())
    }

    pub fn classes(&self) -> &[Vec<PlayerId>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Every class is a singleton.
    pub fn is_strict(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    /// Unique last player, if the bottom class is a singleton.
    pub fn last(&self) -> Option<&PlayerId> {
        match self.classes.last() {
            Some(c) if c.len() == 1 => Some(&c[0]),
            _ => None,
        }
    }

    pub fn first(&self) -> Option<&PlayerId> {
        match self.classes.first() {
            Some(c) if c.len() == 1 => Some(&c[0]),
            _ => None,
        }
    }

    pub fn reversed(&self) -> Ranking {
        Ranking {
            classes: self.classes.iter().rev().cloned().collect(),
        }
    }

    /// Drops the player with this label (and any class left empty).
    pub fn without(&self, label: &str) -> Ranking {
        Ranking::new(
            self.classes
                .iter()
                .map(|c| c.iter().filter(|p| p.label != label).cloned().collect())
                .collect(),
        )
    }

    pub fn labels(&self) -> Vec<Vec<&str>> {
        self.classes
            .iter()
            .map(|c| c.iter().map(|p| p.label.as_str()).collect())
            .collect()
    }

    /// Strict order given as labels, best first. Handy in assertions.
    pub fn is_order(&self, labels: &[&str]) -> bool {
        self.is_strict()
            && self.classes.len() == labels.len()
            && self
                .classes
                .iter()
                .zip(labels)
                .all(|(c, l)| c[0].label == *l)
    }
}

impl PartialEq for Ranking {
    fn eq(&self, other: &Self) -> bool {
        self.labels() == other.labels()
    }
}

impl Eq for Ranking {}

/// `P1 > P4 > P3 = P2`
impl fmt::Display for Ranking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .classes
            .iter()
            .map(|c| {
                c.iter()
                    .map(|p| p.label.as_str())
                    .collect::<Vec<_>>()
                    .join(" = ")
            })
            .collect();
        f.write_str(&parts.join(" > "))
    }
}

impl Serialize for Ranking {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.labels().serialize(serializer)
    }
}

/// Higher rating ranks better; exactly equal ratings share a class.
pub fn ranking_from_ratings(rv: &RatingVector) -> Ranking {
    let mut order: Vec<usize> = (0..rv.ratings.len()).collect();
    order.sort_by(|&a, &b| {
        rv.ratings[b]
            .cmp(&rv.ratings[a])
            .then_with(|| rv.players[a].label.cmp(&rv.players[b].label))
    });
    let mut classes: Vec<Vec<PlayerId>> = Vec::new();
    let mut prev: Option<usize> = None;
    for idx in order {
        match prev {
            Some(p) if rv.ratings[p] == rv.ratings[idx] => classes
                .last_mut()
                .expect("class exists")
                .push(rv.players[idx].clone()),
            _ => classes.push(vec![rv.players[idx].clone()]),
        }
        prev = Some(idx);
    }
    Ranking::new(classes)
}
