//! Small named tournaments that recur in tests, docs and the CLI.

use crate::generators::{ascending, condorcet_numbered, descending, perfect_numbered, ring_plus};
use crate::paradox::theorem_witness;
use crate::tournament::{Match, Roster, Tournament};

/// Four players, 1-0 results, `wins[i][j]` = wins of `P_{i+1}` over `P_{j+1}`.
pub fn win_matrix_example() -> Tournament {
    from_win_matrix(&[[0, 1, 1, 5], [1, 0, 1, 2], [2, 2, 0, 1], [2, 2, 2, 0]])
}

pub fn from_win_matrix<const N: usize>(wins: &[[u64; N]; N]) -> Tournament {
    let mut matches = Vec::new();
    for (i, row) in wins.iter().enumerate() {
        for (j, &count) in row.iter().enumerate() {
            matches.extend(std::iter::repeat_n(
                Match::win(i + 1, j + 1),
                count as usize,
            ));
        }
    }
    Tournament::new(Roster::numbered(N), matches).expect("win matrix is well formed")
}

/// `perfect(P1..P5) + 2·condorcet(P5..P1)`
pub fn witness_x() -> Tournament {
    theorem_witness(5, 2).expect("n = 5 is valid")
}

/// `witness_x` with `P5` deleted.
pub fn witness_x_prime() -> Tournament {
    witness_x().delete_player(5).expect("P5 exists")
}

/// Round-robin on five players where the better player always wins 3-0,
/// plus two Condorcet blocks.
pub fn three_nil_witness() -> Tournament {
    let base: Vec<Match> = perfect_numbered(&ascending(5))
        .expect("valid order")
        .matches()
        .iter()
        .map(|m| Match::new(m.i, m.j, 3 * m.s_i, 3 * m.s_j))
        .collect();
    let base = Tournament::new(Roster::numbered(5), base).expect("valid");
    base.plus_times(2, &condorcet_numbered(&descending(5)).expect("valid order"))
        .expect("same roster")
}

/// `{(P1,P3,1,0), (P3,P2,1,0), (P2,P4,1,0)}`
pub fn short_chain_y() -> Tournament {
    Tournament::new(
        Roster::numbered(4),
        vec![Match::win(1, 3), Match::win(3, 2), Match::win(2, 4)],
    )
    .expect("valid")
}

/// `short_chain_y() + 2·R⁺₄`
pub fn short_chain_y_with_rings() -> Tournament {
    short_chain_y()
        .plus_times(2, &ring_plus(4).expect("n = 4"))
        .expect("same roster")
}
