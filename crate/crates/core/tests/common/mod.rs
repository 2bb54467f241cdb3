#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tourney_core::{Match, Roster, Tournament};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Decisive score pair: winner gets 1..=5 points, loser strictly fewer.
fn decisive(rng: &mut ChaCha8Rng) -> (u64, u64) {
    let w = rng.gen_range(1..=5);
    (w, rng.gen_range(0..w))
}

fn oriented(rng: &mut ChaCha8Rng, a: usize, b: usize) -> Match {
    let (w, l) = decisive(rng);
    if rng.gen_bool(0.5) {
        Match::new(a, b, w, l)
    } else {
        Match::new(a, b, l, w)
    }
}

/// Connected tournament without draws: a random spanning tree plus extra
/// random matches, `matches` in total (at least `n - 1`).
pub fn connected(rng: &mut ChaCha8Rng, n: usize, matches: usize) -> Tournament {
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut list = Vec::with_capacity(matches.max(n - 1));
    for pos in 1..n {
        let parent = order[rng.gen_range(0..pos)];
        list.push(oriented(rng, order[pos], parent));
    }
    while list.len() < matches {
        let a = rng.gen_range(1..=n);
        let mut b = rng.gen_range(1..=n - 1);
        if b >= a {
            b += 1;
        }
        list.push(oriented(rng, a, b));
    }
    list.shuffle(rng);
    Tournament::new(Roster::numbered(n), list).unwrap()
}

/// Connected, decisive, `2 <= n <= max_n`, at most `max_matches` matches.
pub fn random_connected(rng: &mut ChaCha8Rng, max_n: usize, max_matches: usize) -> Tournament {
    let n = rng.gen_range(2..=max_n);
    let m = rng.gen_range(n - 1..=max_matches);
    connected(rng, n, m)
}

/// Any match list on `n` players, draws and idle players allowed.
pub fn arbitrary(rng: &mut ChaCha8Rng, n: usize, max_matches: usize) -> Tournament {
    let m = rng.gen_range(0..=max_matches);
    let list = (0..m)
        .map(|_| {
            let a = rng.gen_range(1..=n);
            let mut b = rng.gen_range(1..=n - 1);
            if b >= a {
                b += 1;
            }
            Match::new(a, b, rng.gen_range(0..4), rng.gen_range(0..4))
        })
        .collect();
    Tournament::new(Roster::numbered(n), list).unwrap()
}

pub fn permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (1..=n).collect();
    p.shuffle(rng);
    p
}

/// Positions after deleting `gone`: later players move down by one.
pub fn shift_after_delete(order: &[usize], gone: usize) -> Vec<usize> {
    order
        .iter()
        .filter(|&&p| p != gone)
        .map(|&p| if p > gone { p - 1 } else { p })
        .collect()
}
