use serde::Serialize;

use crate::tournament::Tournament;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegularityInfo {
    pub is_union_of_perfect: bool,
    /// How many times each pair meets, when regular.
    pub t: Option<u64>,
}

/// Detects a union of `t` perfect tournaments: every pair meets exactly `t`
/// times (`t >= 1`) and every match ends 1-0.
pub fn regularity(t: &Tournament) -> RegularityInfo {
    let irregular = RegularityInfo {
        is_union_of_perfect: false,
        t: None,
    };
    let n = t.player_count();
    if n < 2 || t.matches().iter().any(|m| m.s_i + m.s_j != 1) {
        return irregular;
    }
    let meetings = t.meetings();
    let count = meetings[0][1];
    let uniform = (0..n).all(|i| (0..n).all(|j| i == j || meetings[i][j] == count));
    if count == 0 || !uniform {
        return irregular;
    }
    RegularityInfo {
        is_union_of_perfect: true,
        t: Some(count),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::witness_x;
    use crate::generators::{ascending, condorcet_numbered, z_tournament};
    use crate::tournament::{Match, Roster};

    #[test]
    fn examples() {
        assert_eq!(regularity(&witness_x()).t, Some(11));
        assert!(!regularity(&z_tournament(5, 2, 1).unwrap()).is_union_of_perfect);
        for n in 3..7 {
            assert_eq!(
                regularity(&condorcet_numbered(&ascending(n)).unwrap()).t,
                Some(n as u64)
            );
        }
    }

    #[test]
    fn non_unit_scores_are_irregular() {
        let t = Tournament::new(Roster::numbered(2), vec![Match::new(1, 2, 2, 0)]).unwrap();
        assert!(!regularity(&t).is_union_of_perfect);
        let t = Tournament::new(Roster::numbered(2), vec![Match::new(1, 2, 1, 0)]).unwrap();
        assert_eq!(regularity(&t).t, Some(1));
    }

    #[test]
    fn match_count_identity() {
        let x = witness_x();
        let info = regularity(&x);
        let n = x.player_count() as u64;
        assert_eq!(x.len() as u64, info.t.unwrap() * n * (n - 1) / 2);
    }
}
