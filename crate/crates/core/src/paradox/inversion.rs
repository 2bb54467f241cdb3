use serde::Serialize;

use super::ParadoxError;
use crate::methods::{Method, Ranking, RatingVector};
use crate::tournament::{PlayerId, Tournament};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// After deleting the last player the survivors come out exactly reversed.
    Inversion,
    /// Both orders strict, but neither reversed nor unchanged.
    Perturbed,
    /// Survivors keep their relative order.
    Unchanged,
    /// A ranking involved has ties.
    NotApplicable,
}

#[derive(Debug, Clone, Serialize)]
pub struct Evidence {
    pub before: RatingVector,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub after: Option<RatingVector>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ParadoxReport {
    pub method: Method,
    pub before: Ranking,
    pub deleted: Option<PlayerId>,
    pub after: Option<Ranking>,
    pub verdict: Verdict,
    pub evidence: Evidence,
}

/// Verdict for a strict `before` and the ranking obtained without `deleted`.
pub fn classify(before: &Ranking, deleted: &str, after: &Ranking) -> Verdict {
    if !before.is_strict() || !after.is_strict() {
        return Verdict::NotApplicable;
    }
    let survivors = before.without(deleted);
    // a lone survivor is its own reversal; call that unchanged
    if survivors.len() >= 2 && *after == survivors.reversed() {
        Verdict::Inversion
    } else if *after == survivors {
        Verdict::Unchanged
    } else {
        Verdict::Perturbed
    }
}

pub fn inversion_check(t: &Tournament, method: &Method) -> Result<ParadoxReport, ParadoxError> {
    let before_rv = method.rate(t)?;
    let before = before_rv.ranking();
    let last = match before.last() {
        Some(p) if before.is_strict() && t.player_count() >= 2 => p.clone(),
        _ => {
            return Ok(ParadoxReport {
                method: method.clone(),
                before,
                deleted: None,
                after: None,
                verdict: Verdict::NotApplicable,
                evidence: Evidence {
                    before: before_rv,
                    after: None,
                },
            })
        }
    };
    let reduced = t.delete_player(last.index)?;
    let after_rv = method.rate(&reduced)?;
    let after = after_rv.ranking();
    let verdict = classify(&before, &last.label, &after);
    Ok(ParadoxReport {
        method: method.clone(),
        before,
        deleted: Some(last),
        after: Some(after),
        verdict,
        evidence: Evidence {
            before: before_rv,
            after: Some(after_rv),
        },
    })
}
