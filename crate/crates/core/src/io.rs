//! Tournament file formats.
//!
//! CSV: one `player_i,player_j,score_i,score_j` record per line. An optional
//! `#players: A,B,...` line fixes the roster order; otherwise players are
//! numbered by first appearance. Other `#` lines are comments, and a leading
//! column-name row is skipped.
//!
//! JSON: `{"roster":["P1",...],"matches":[[i,j,si,sj],...]}` with 1-based
//! indices into `roster`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tournament::{Match, Roster, Tournament, TournamentError};

const ROSTER_PREFIX: &str = "#players:";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Record { line: u64, message: String },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Tournament(#[from] TournamentError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TournamentFormat {
    Csv,
    Json,
}

#[derive(Serialize, Deserialize)]
struct TournamentJson {
    roster: Roster,
    matches: Vec<(usize, usize, u64, u64)>,
}

impl Serialize for Tournament {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TournamentJson {
            roster: self.roster().clone(),
            matches: self
                .matches()
                .iter()
                .map(|m| (m.i, m.j, m.s_i, m.s_j))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tournament {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = TournamentJson::deserialize(deserializer)?;
        let matches = raw
            .matches
            .into_iter()
            .map(|(i, j, a, b)| Match::new(i, j, a, b))
            .collect();
        Tournament::new(raw.roster, matches).map_err(serde::de::Error::custom)
    }
}

pub fn to_json(t: &Tournament) -> String {
    serde_json::to_string(t).expect("tournament serialization cannot fail")
}

pub fn from_json(text: &str) -> Result<Tournament, FormatError> {
    Ok(serde_json::from_str(text)?)
}

pub fn to_csv(t: &Tournament) -> String {
    let mut header = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    header
        .write_record(t.roster().labels())
        .expect("in-memory write");
    let header = String::from_utf8(header.into_inner().expect("in-memory flush")).expect("utf8");

    let mut body = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    for m in t.matches() {
        body.write_record([
            t.roster().label(m.i),
            t.roster().label(m.j),
            &m.s_i.to_string(),
            &m.s_j.to_string(),
        ])
        .expect("in-memory write");
    }
    let body = String::from_utf8(body.into_inner().expect("in-memory flush")).expect("utf8");
    format!("{ROSTER_PREFIX} {}{body}", header)
}

pub fn from_csv(text: &str) -> Result<Tournament, FormatError> {
    let declared = text
        .lines()
        .find_map(|l| l.trim_start().strip_prefix(ROSTER_PREFIX))
        .map(parse_roster_line)
        .transpose()?;

    let mut labels: Vec<String> = declared
        .as_ref()
        .map(|r| r.labels().to_vec())
        .unwrap_or_default();
    let fixed = declared.is_some();

    // comments are blanked rather than dropped so line numbers still match
    let body: String = text
        .lines()
        .map(|l| {
            if l.trim_start().starts_with('#') {
                ""
            } else {
                l
            }
        })
        .collect::<Vec<_>>()
        .join("\n");
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(body.as_bytes());

    let mut matches = Vec::new();
    let mut first = true;
    for record in reader.records() {
        let record = record?;
        let line = record
            .position()
            .map_or(0, |p| line_of(&body, p.byte() as usize));
        if record.iter().all(str::is_empty) {
            continue;
        }
        let bad = |message: String| FormatError::Record { line, message };
        if record.len() != 4 {
            return Err(bad(format!("expected 4 fields, found {}", record.len())));
        }
        let scores = (record[2].parse::<u64>(), record[3].parse::<u64>());
        let (s_i, s_j) = match scores {
            (Ok(a), Ok(b)) => (a, b),
            _ if first
                && record[2].parse::<i64>().is_err()
                && record[3].parse::<i64>().is_err() =>
            {
                // column-name row
                first = false;
                continue;
            }
            _ => {
                return Err(bad(format!(
                    "scores must be nonnegative integers, got {:?} and {:?}",
                    &record[2], &record[3]
                )))
            }
        };
        first = false;
        let mut resolve = |name: &str| -> Result<usize, FormatError> {
            if let Some(p) = labels.iter().position(|l| l == name) {
                return Ok(p + 1);
            }
            if fixed || name.is_empty() {
                return Err(bad(format!(
                    "player {name:?} is not in the declared roster"
                )));
            }
            labels.push(name.to_string());
            Ok(labels.len())
        };
        let i = resolve(&record[0])?;
        let j = resolve(&record[1])?;
        matches.push(Match::new(i, j, s_i, s_j));
    }
    Ok(Tournament::new(Roster::new(labels)?, matches)?)
}

/// 1-based line of the first non-blank byte at or after `offset`. Record
/// positions point just past the previous record, before any blank lines.
fn line_of(text: &str, offset: usize) -> u64 {
    let start = text[offset..]
        .find(|c: char| c != '\n' && c != '\r')
        .map_or(text.len(), |skip| offset + skip);
    text[..start].matches('\n').count() as u64 + 1
}

fn parse_roster_line(rest: &str) -> Result<Roster, FormatError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(rest.trim().as_bytes());
    let labels: Vec<String> = match reader.records().next() {
        Some(r) => r?.iter().map(str::to_string).collect(),
        None => Vec::new(),
    };
    Ok(Roster::new(labels)?)
}

/// JSON when the first non-blank character is `{`, CSV otherwise.
pub fn sniff(text: &str) -> TournamentFormat {
    if text.trim_start().starts_with('{') {
        TournamentFormat::Json
    } else {
        TournamentFormat::Csv
    }
}

pub fn parse(text: &str) -> Result<Tournament, FormatError> {
    match sniff(text) {
        TournamentFormat::Json => from_json(text),
        TournamentFormat::Csv => from_csv(text),
    }
}

pub fn render(t: &Tournament, format: TournamentFormat) -> String {
    match format {
        TournamentFormat::Json => to_json(t),
        TournamentFormat::Csv => to_csv(t),
    }
}
