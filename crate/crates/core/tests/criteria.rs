//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

mod common;

use std::panic;
use std::process::ExitCode;

use tourney_core::fixtures::{three_nil_witness, win_matrix_example, witness_x, witness_x_prime};
use tourney_core::generators::{
    ascending, condorcet, descending, perfect, perfect_numbered, z_tournament,
};
use tourney_core::methods::{borda, colley, markov, massey};
use tourney_core::paradox::{
    check_condorcet_reducibility, inversion_check, markov_power_iteration_oracle,
    massey_least_squares_oracle, massey_z_closed_form, theorem_witness, z_inversion_predicate,
    Verdict, ZMethod,
};
use tourney_core::rational::{int, ratio, to_f64};
use tourney_core::{Method, Rational, Roster, Tournament};

use common::{arbitrary, permutation, random_connected, rng, shift_after_delete};

fn ratios(den: i64, nums: &[i64]) -> Vec<Rational> {
    nums.iter().map(|&v| ratio(v, den)).collect()
}

fn markov_at(a: Rational) -> Method {
    Method::Markov { alpha: a }
}

fn four_methods_diverge() {
    let t = win_matrix_example();
    let cases = [
        (Method::Borda, ["P1", "P4", "P3", "P2"]),
        (Method::Massey, ["P1", "P3", "P4", "P2"]),
        (Method::Colley, ["P1", "P3", "P2", "P4"]),
        (markov_at(ratio(85, 100)), ["P4", "P1", "P3", "P2"]),
    ];
    for (m, want) in cases {
        let got = m.rank(&t).unwrap();
        assert!(got.is_order(&want), "{m}: got {got}");
    }
}

fn massey_exact_vectors() {
    assert_eq!(
        massey(&witness_x()).unwrap().ratings,
        ratios(55, &[4, 2, 0, -2, -4])
    );
    assert_eq!(
        massey(&witness_x_prime()).unwrap().ratings,
        ratios(44, &[-3, -1, 1, 3])
    );
}

fn colley_exact_vectors() {
    assert_eq!(
        colley(&witness_x()).unwrap().ratings,
        ratios(114, &[61, 59, 57, 55, 53])
    );
    let z = z_tournament(5, 2, 1).unwrap();
    assert_eq!(
        colley(&z).unwrap().ratings,
        ratios(126, &[71, 66, 63, 60, 55])
    );
    let zp = z.delete_player(5).unwrap();
    assert_eq!(colley(&zp).unwrap().ratings, ratios(92, &[35, 43, 49, 57]));
    assert_eq!(
        colley(&witness_x_prime()).unwrap().ratings,
        ratios(92, &[43, 45, 47, 49])
    );
}

fn borda_witness() {
    assert_eq!(
        borda(&witness_x()).unwrap().ratings,
        ratios(1, &[24, 23, 22, 21, 20])
    );
    assert_eq!(
        borda(&witness_x_prime()).unwrap().ratings,
        ratios(1, &[15, 16, 17, 18])
    );
    for m in [Method::Borda, Method::Massey, Method::Colley] {
        assert_eq!(
            inversion_check(&witness_x(), &m).unwrap().verdict,
            Verdict::Inversion,
            "{m}"
        );
    }
    let k1 = theorem_witness(5, 1).unwrap();
    assert_eq!(
        inversion_check(&k1, &Method::Borda).unwrap().verdict,
        Verdict::NotApplicable
    );
}

fn theorem_grid() {
    for n in 4..=6 {
        let t = theorem_witness(n, 2).unwrap();
        for m in [Method::Borda, Method::Massey, Method::Colley] {
            assert_eq!(
                inversion_check(&t, &m).unwrap().verdict,
                Verdict::Inversion,
                "n={n} {m}"
            );
        }
    }
}

fn markov_thresholds() {
    let x = witness_x();
    for a in [ratio(3, 10), ratio(1, 2), ratio(85, 100)] {
        let r = markov_at(a.clone()).rank(&x).unwrap();
        assert!(
            r.is_order(&["P2", "P1", "P3", "P4", "P5"]),
            "alpha {a}: {r}"
        );
    }
    assert!(!markov_at(ratio(1, 10))
        .rank(&x)
        .unwrap()
        .is_order(&["P2", "P1", "P3", "P4", "P5"]));
    let xp = witness_x_prime();
    for a in [ratio(3, 5), ratio(85, 100)] {
        let r = markov_at(a.clone()).rank(&xp).unwrap();
        assert!(r.is_order(&["P4", "P3", "P1", "P2"]), "alpha {a}: {r}");
    }
    assert!(!markov_at(ratio(1, 2))
        .rank(&xp)
        .unwrap()
        .is_order(&["P4", "P3", "P1", "P2"]));
}

fn markov_reducibility_failure() {
    let m = markov_at(ratio(85, 100));
    let p = perfect_numbered(&ascending(5)).unwrap();
    assert!(m
        .rank(&p)
        .unwrap()
        .is_order(&["P1", "P2", "P3", "P4", "P5"]));
    assert_ne!(m.rank(&witness_x()).unwrap(), m.rank(&p).unwrap());
    let report = check_condorcet_reducibility(&m, &p, &descending(5), 4).unwrap();
    assert!(!report.passed);
    assert!(
        report.violating_k.contains(&2),
        "violations at {:?}",
        report.violating_k
    );
}

fn z_closed_forms() {
    for n in 4..=8 {
        for k in 0..=3 {
            for l in 0..=3 {
                if k + l == 0 {
                    continue;
                }
                let f = massey_z_closed_form(n, k, l).unwrap();
                assert_eq!(f.beta, -int(l as i64) / int((l + k * n) as i64));
                assert_eq!(f.beta_prime, int(k as i64 - l as i64) / int((k + l) as i64));
                let z = z_tournament(n, k, l).unwrap();
                assert_eq!(
                    massey(&z).unwrap().ratings,
                    f.ratings(),
                    "n={n} k={k} l={l}"
                );
                let zp = z.delete_player(n).unwrap();
                assert_eq!(massey(&zp).unwrap().ratings, f.ratings_after());
                for (zm, m) in [
                    (ZMethod::Massey, Method::Massey),
                    (ZMethod::Colley, Method::Colley),
                ] {
                    let predicted = z_inversion_predicate(n, k, l, zm).unwrap();
                    let inverted = inversion_check(&z, &m).unwrap().verdict == Verdict::Inversion;
                    assert_eq!(predicted, inverted, "{m} n={n} k={k} l={l}");
                }
            }
        }
    }
}

fn markov_on_z() {
    let z = z_tournament(5, 2, 1).unwrap();
    let zp = z.delete_player(5).unwrap();
    let mut problems = Vec::new();
    for a in [ratio(1, 4), ratio(1, 2), ratio(85, 100)] {
        let r = markov_at(a.clone()).rank(&z).unwrap();
        if !r.is_order(&["P2", "P3", "P4", "P1", "P5"]) {
            problems.push(format!("before at alpha {a}: {r}"));
        }
    }
    for a in [ratio(3, 4), ratio(85, 100)] {
        let r = markov_at(a.clone()).rank(&zp).unwrap();
        if !r.is_order(&["P3", "P4", "P2", "P1"]) {
            problems.push(format!("after at alpha {a}: {r}"));
        }
    }
    for a in [ratio(1, 4), ratio(1, 2), ratio(3, 4), ratio(85, 100)] {
        let v = inversion_check(&z, &markov_at(a.clone())).unwrap().verdict;
        if v == Verdict::Inversion {
            problems.push(format!("inversion at alpha {a}"));
        }
    }
    let v = inversion_check(&z, &markov_at(ratio(85, 100)))
        .unwrap()
        .verdict;
    if v != Verdict::Perturbed {
        problems.push(format!("verdict {v:?} at 85/100"));
    }
    assert!(problems.is_empty(), "{}", problems.join("; "));
}

fn oracle_equivalence() {
    let mut r = rng(0x5eed_0010);
    let alpha = ratio(85, 100);
    for case in 0..200 {
        let t = random_connected(&mut r, 6, 60);
        assert_eq!(
            massey_least_squares_oracle(&t).unwrap(),
            massey(&t).unwrap(),
            "case {case}"
        );
        let approx = markov_power_iteration_oracle(&t, &alpha, 10_000).unwrap();
        let exact = markov(&t, &alpha).unwrap();
        let gap = approx
            .iter()
            .zip(&exact.ratings)
            .map(|(a, e)| (a - to_f64(e)).abs())
            .fold(0.0, f64::max);
        assert!(gap < 1e-9, "case {case}: gap {gap}");
    }
}

fn score_sensitivity() {
    let t = three_nil_witness();
    let p: Vec<i64> = t.stats().iter().map(|s| s.point_differential()).collect();
    assert_eq!(p, vec![12, 6, 0, -6, -12]);
    let m = inversion_check(&t, &Method::Massey).unwrap();
    assert_ne!(m.verdict, Verdict::Inversion);
    assert!(m.after.unwrap().is_order(&["P1", "P2", "P3", "P4"]));
    for method in [Method::Colley, Method::Borda] {
        assert_eq!(
            inversion_check(&t, &method).unwrap().verdict,
            Verdict::Inversion,
            "{method}"
        );
    }
}

fn structural_identities() {
    for n in 3..=8 {
        let mut r = rng(1000 + n as u64);
        let roster = Roster::numbered(n);
        for case in 0..100 {
            let a = arbitrary(&mut r, n, 20);
            let b = arbitrary(&mut r, n, 20);
            let gone = permutation(&mut r, n)[0];
            let lhs = a.union(&b).unwrap().delete_player(gone).unwrap();
            let rhs = a
                .delete_player(gone)
                .unwrap()
                .union(&b.delete_player(gone).unwrap())
                .unwrap();
            assert!(lhs.multiset_eq(&rhs), "distributivity n={n} case {case}");

            let sigma = permutation(&mut r, n);
            let c: Tournament = condorcet(&roster, &sigma).unwrap();
            let small = c.delete_player(sigma[0]).unwrap();
            let rest = shift_after_delete(&sigma, sigma[0]);
            let expected = perfect(small.roster(), &rest)
                .unwrap()
                .union(&condorcet(small.roster(), &rest).unwrap())
                .unwrap();
            assert!(
                small.multiset_eq(&expected),
                "condorcet lemma n={n} case {case}"
            );
        }
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn()); 12] = [
        (
            "four methods give four different rankings",
            four_methods_diverge,
        ),
        ("massey exact vectors", massey_exact_vectors),
        ("colley exact vectors", colley_exact_vectors),
        ("borda witness and verdicts", borda_witness),
        (
            "inversion for n in 4..=6 under borda, massey, colley",
            theorem_grid,
        ),
        ("markov alpha thresholds", markov_thresholds),
        (
            "markov not reducible by condorcet blocks",
            markov_reducibility_failure,
        ),
        ("Z closed forms and inversion predicate", z_closed_forms),
        ("markov on Z(5,2,1)", markov_on_z),
        (
            "oracle equivalence on 200 random tournaments",
            oracle_equivalence,
        ),
        ("score sensitivity of massey", score_sensitivity),
        (
            "deletion algebra and condorcet lemma",
            structural_identities,
        ),
    ];

    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match panic::catch_unwind(check) {
            Ok(()) => println!("criterion {:>2} PASS  {name}", i + 1),
            Err(payload) => {
                failed += 1;
                let msg = payload
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!(
                    "criterion {:>2} FAIL  {name}: {}",
                    i + 1,
                    msg.replace('\n', " ")
                );
            }
        }
    }
    let _ = panic::take_hook();
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
