//! Plain-text tables.

use std::fmt::Write;

use tourney_core::paradox::{AlphaScan, ParadoxReport, PropertyReport};
use tourney_core::rational::{format_decimal, format_rational};
use tourney_core::{Method, RatingVector};

const PLACES: usize = 6;

fn table(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |out: &mut String, cells: &[&str]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        writeln!(out, "{}", padded.join("  ").trim_end()).unwrap();
    };
    line(out, header);
    for row in rows {
        line(out, &row.iter().map(String::as_str).collect::<Vec<_>>());
    }
}

fn rating_rows(rv: &RatingVector) -> Vec<Vec<String>> {
    rv.players
        .iter()
        .zip(&rv.ratings)
        .map(|(p, r)| {
            vec![
                p.label.clone(),
                format_rational(r),
                format_decimal(r, PLACES),
            ]
        })
        .collect()
}

pub fn ratings(method: &Method, rv: &RatingVector) -> String {
    let mut out = String::new();
    writeln!(out, "method: {method}").unwrap();
    table(&mut out, &["player", "rating", "decimal"], &rating_rows(rv));
    writeln!(out, "ranking: {}", rv.ranking()).unwrap();
    out
}

pub fn paradox(report: &ParadoxReport) -> String {
    let mut out = String::new();
    writeln!(out, "method:  {}", report.method).unwrap();
    writeln!(out, "before:  {}", report.before).unwrap();
    match (&report.deleted, &report.after) {
        (Some(d), Some(after)) => {
            writeln!(out, "deleted: {}", d.label).unwrap();
            writeln!(out, "after:   {after}").unwrap();
        }
        _ => writeln!(out, "deleted: none (no unique last player)").unwrap(),
    }
    writeln!(out, "verdict: {:?}", report.verdict).unwrap();
    writeln!(out).unwrap();
    table(
        &mut out,
        &["player", "before", "decimal"],
        &rating_rows(&report.evidence.before),
    );
    if let Some(after) = &report.evidence.after {
        writeln!(out).unwrap();
        table(
            &mut out,
            &["player", "after", "decimal"],
            &rating_rows(after),
        );
    }
    out
}

pub fn properties(reports: &[PropertyReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.passed { "PASS" } else { "FAIL" };
        write!(
            out,
            "{:<16} {status}  {} cases",
            r.axiom.name(),
            r.cases_checked
        )
        .unwrap();
        if let Some(k) = r.found_k {
            write!(out, ", k = {k}").unwrap();
        }
        if !r.violating_k.is_empty() {
            let ks: Vec<String> = r.violating_k.iter().map(usize::to_string).collect();
            write!(out, ", violations at k = {}", ks.join(", ")).unwrap();
        }
        writeln!(out).unwrap();
        if let Some(cx) = &r.counterexample {
            if let Some(k) = cx.k {
                writeln!(out, "  first counterexample at k = {k}").unwrap();
            }
            writeln!(out, "  expected: {}", cx.expected).unwrap();
            writeln!(out, "  actual:   {}", cx.actual).unwrap();
        }
    }
    out
}

pub fn scan(scan: &AlphaScan, notes: &[String]) -> String {
    let mut out = String::new();
    let rows: Vec<Vec<String>> = scan
        .rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let changed = i > 0 && scan.rows[i - 1].ranking != row.ranking;
            vec![
                if changed { "*".into() } else { String::new() },
                format_rational(&row.alpha),
                format_decimal(&row.alpha, 4),
                row.ranking.to_string(),
            ]
        })
        .collect();
    table(&mut out, &["", "alpha", "decimal", "ranking"], &rows);
    writeln!(out).unwrap();
    if scan.change_points.is_empty() {
        writeln!(out, "no change points").unwrap();
    }
    for cp in &scan.change_points {
        writeln!(
            out,
            "change in ({}, {}]: {} -> {}",
            format_rational(&cp.lower),
            format_rational(&cp.upper),
            cp.from,
            cp.to
        )
        .unwrap();
    }
    for note in notes {
        writeln!(out, "note: {note}").unwrap();
    }
    out
}
