//! The plain-text problem format.
//!
//! ```text
//! # u v means u dominates v
//! n 3
//! label 0 alpha
//! 0 1
//! 1 2
//! 2 0
//! ```
//!
//! The first non-blank line must be the header `n <count>`. Everything after
//! a `#` is a comment, so labels cannot contain `#`. A label is the rest of
//! its line after the id, trimmed. Duplicate edges collapse and line order
//! carries no meaning.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::relation::DecisionProblem;

pub fn parse_problem(input: &str) -> Result<DecisionProblem> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut labels = Vec::new();

    for (i, raw) in input.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse { line: line_no, message };
        let parse_id = |tok: &str, n: usize| -> Result<usize> {
            let id: usize = tok.parse().map_err(|_| parse_err(format!("expected an alternative id, found `{tok}`")))?;
            if id >= n {
                return Err(Error::ParseIdOutOfRange { line: line_no, id, n });
            }
            Ok(id)
        };

        let mut tokens = line.split_whitespace();
        let first = tokens.next().expect("non-empty line has a token");
        let Some(count) = n else {
            if first != "n" {
                return Err(Error::MissingHeader);
            }
            let tok = tokens.next().ok_or_else(|| parse_err("`n` needs a count".into()))?;
            let count: usize = tok.parse().map_err(|_| parse_err(format!("invalid count `{tok}`")))?;
            if count == 0 {
                return Err(parse_err("a problem needs at least one alternative".into()));
            }
            if tokens.next().is_some() {
                return Err(parse_err("trailing tokens after header".into()));
            }
            n = Some(count);
            continue;
        };

        match first {
            "n" => return Err(parse_err("duplicate header".into())),
            "label" => {
                let rest = line["label".len()..].trim_start();
                let (id_tok, text) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                if id_tok.is_empty() {
                    return Err(parse_err("`label` needs an id".into()));
                }
                let id = parse_id(id_tok, count)?;
                let text = text.trim();
                if text.is_empty() {
                    return Err(parse_err("`label` needs a string".into()));
                }
                labels.push((id, text.to_string()));
            }
            _ => {
                let u = parse_id(first, count)?;
                let tok = tokens.next().ok_or_else(|| parse_err("edge needs two ids".into()))?;
                let v = parse_id(tok, count)?;
                if tokens.next().is_some() {
                    return Err(parse_err("trailing tokens after edge".into()));
                }
                edges.push((u, v));
            }
        }
    }

    let n = n.ok_or(Error::MissingHeader)?;
    DecisionProblem::new(n, edges)?.with_labels(labels)
}

/// Canonical text: header, labels by id, edges sorted.
pub fn write_problem(p: &DecisionProblem) -> String {
    let mut out = String::from("# u v means u dominates v\n");
    writeln!(out, "n {}", p.n()).unwrap();
    for (id, label) in p.labels().iter().enumerate() {
        if let Some(label) = label {
            writeln!(out, "label {id} {label}").unwrap();
        }
    }
    for &(u, v) in p.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// SHA-256 of the canonical text, hex encoded.
pub fn digest(p: &DecisionProblem) -> String {
    hex::encode(Sha256::digest(write_problem(p).as_bytes()))
}
