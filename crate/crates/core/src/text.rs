//! Line-oriented text formats for permutation families, vector families and
//! search certificates. Everything written here parses back to an equal
//! value, and output is byte-deterministic.
//!
//! Permutation family: optional `n=<n> m=<m>` header, then one member per
//! line as space-separated images. Blank lines and `#` comments are ignored.
//!
//! Vector family: mandatory `n=<n> m=<m>` header, then one line
//! `<x> <y> <bitstring>` for each of the n(n−1) ordered pairs.
//!
//! Certificate: `key = value` header lines in fixed order, then each witness
//! as a vector-family block separated by blank lines.

use std::fmt::Write as _;

use thiserror::Error;

use crate::perm::{FamilyError, PermFamily, Permutation};
use crate::search::{Certificate, CertificateKind};
use crate::vector::{BitVector, VectorFamily, MAX_LEN};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ParseError {
    /// 1-based line number; 0 when the input as a whole is at fault.
    pub line: usize,
    pub msg: String,
}

fn err<T>(line: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        msg: msg.into(),
    })
}

/// Lines that carry content: trimmed, numbered, with blanks and comments
/// dropped.
fn content_lines(input: &str) -> Vec<(usize, &str)> {
    input
        .lines()
        .enumerate()
        .map(|(idx, raw)| (idx + 1, raw.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
        .collect()
}

fn parse_header(line_no: usize, line: &str) -> Result<(usize, usize), ParseError> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let parsed = match tokens.as_slice() {
        [n_tok, m_tok] => match (n_tok.strip_prefix("n="), m_tok.strip_prefix("m=")) {
            (Some(n), Some(m)) => n.parse::<usize>().ok().zip(m.parse::<usize>().ok()),
            _ => None,
        },
        _ => None,
    };
    match parsed {
        Some(pair) => Ok(pair),
        None => err(line_no, format!("malformed header {line:?}, expected \"n=<n> m=<m>\"")),
    }
}

pub fn parse_perm_family(input: &str) -> Result<PermFamily, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut rows: Vec<(usize, Permutation)> = Vec::new();
    for (line_no, line) in content_lines(input) {
        if line.starts_with("n=") {
            if header.is_some() || !rows.is_empty() {
                return err(line_no, "header must be the first content line");
            }
            header = Some(parse_header(line_no, line)?);
            continue;
        }
        let images = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| ParseError {
                        line: line_no,
                        msg: format!("invalid image {tok:?}"),
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let p = Permutation::new(images).map_err(|e| ParseError {
            line: line_no,
            msg: e.to_string(),
        })?;
        rows.push((line_no, p));
    }

    let family = PermFamily::new(rows.iter().map(|(_, p)| p.clone()).collect()).map_err(|e| {
        let line = match &e {
            FamilyError::MixedOrders { index, .. } => rows[*index].0,
            FamilyError::Empty => 0,
        };
        ParseError {
            line,
            msg: e.to_string(),
        }
    })?;

    if let Some((n, m)) = header {
        if n != family.n() {
            return err(0, format!("header says n={n} but members have order {}", family.n()));
        }
        if m != family.m() {
            return err(0, format!("header says m={m} but {} members found", family.m()));
        }
    }
    Ok(family)
}

pub fn format_perm_family(family: &PermFamily) -> String {
    let mut out = format!("n={} m={}\n", family.n(), family.m());
    for member in family.members() {
        writeln!(out, "{member}").unwrap();
    }
    out
}

pub fn parse_vector_family(input: &str) -> Result<VectorFamily, ParseError> {
    parse_vector_family_lines(&content_lines(input))
}

fn parse_vector_family_lines(lines: &[(usize, &str)]) -> Result<VectorFamily, ParseError> {
    let Some(&(header_no, header)) = lines.first() else {
        return err(0, "empty vector family");
    };
    let (n, m) = parse_header(header_no, header)?;
    if n < 3 {
        return err(header_no, format!("vector families need n >= 3, got n={n}"));
    }
    if m > MAX_LEN {
        return err(header_no, format!("m={m} exceeds the maximum of {MAX_LEN}"));
    }

    let mut entries: Vec<Option<BitVector>> = vec![None; n * n];
    for &(line_no, line) in &lines[1..] {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [x_tok, y_tok, bits] = tokens.as_slice() else {
            return err(line_no, format!("expected \"<x> <y> <bitstring>\", got {line:?}"));
        };
        let parse_element = |tok: &str| {
            tok.parse::<usize>().ok().filter(|&e| e < n).ok_or(ParseError {
                line: line_no,
                msg: format!("element {tok:?} is not in [0, {n})"),
            })
        };
        let x = parse_element(x_tok)?;
        let y = parse_element(y_tok)?;
        if x == y {
            return err(line_no, format!("pair ({x},{y}) is not a pair of distinct elements"));
        }
        let v: BitVector = bits.parse().map_err(|e: crate::vector::InvalidBitstring| ParseError {
            line: line_no,
            msg: e.to_string(),
        })?;
        if v.len() != m {
            return err(line_no, format!("bitstring has length {}, header says m={m}", v.len()));
        }
        if entries[x * n + y].is_some() {
            return err(line_no, format!("pair ({x},{y}) given twice"));
        }
        entries[x * n + y] = Some(v);
    }

    for x in 0..n {
        for y in 0..n {
            if x != y && entries[x * n + y].is_none() {
                let line = lines.last().map_or(0, |&(no, _)| no);
                return err(line, format!("pair ({x},{y}) missing"));
            }
        }
    }
    Ok(VectorFamily::from_fn(n, m, |x, y| entries[x * n + y].unwrap()))
}

pub fn format_vector_family(family: &VectorFamily) -> String {
    let mut out = format!("n={} m={}\n", family.n(), family.m());
    for (x, y, v) in family.pairs() {
        writeln!(out, "{x} {y} {v}").unwrap();
    }
    out
}

/// Stable field order: kind, m, n, nodes_explored, symmetry_reduction,
/// candidate-log entries, witness count, then the witnesses themselves.
pub fn format_certificate(certificate: &Certificate) -> String {
    let mut out = String::new();
    writeln!(out, "kind = {}", certificate.kind).unwrap();
    writeln!(out, "m = {}", certificate.m).unwrap();
    writeln!(out, "n = {}", certificate.n).unwrap();
    writeln!(out, "nodes_explored = {}", certificate.nodes_explored).unwrap();
    writeln!(out, "symmetry_reduction = {}", certificate.symmetry_reduction).unwrap();
    for entry in certificate.candidate_log.iter().flatten() {
        writeln!(out, "candidates = {entry}").unwrap();
    }
    writeln!(out, "witnesses = {}", certificate.witnesses.len()).unwrap();
    for witness in &certificate.witnesses {
        out.push('\n');
        out.push_str(&format_vector_family(witness));
    }
    out
}

pub fn parse_certificate(input: &str) -> Result<Certificate, ParseError> {
    let mut kind: Option<CertificateKind> = None;
    let mut m: Option<usize> = None;
    let mut n: Option<usize> = None;
    let mut nodes_explored: Option<u64> = None;
    let mut symmetry_reduction: Option<String> = None;
    let mut candidate_log: Vec<String> = Vec::new();
    let mut witness_count: Option<usize> = None;

    let mut lines = input.lines().enumerate();
    for (idx, raw) in &mut lines {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once(" = ") else {
            return err(line_no, format!("expected \"<key> = <value>\", got {line:?}"));
        };
        let parse_number = |value: &str| {
            value.parse::<usize>().map_err(|_| ParseError {
                line: line_no,
                msg: format!("invalid number {value:?}"),
            })
        };
        match key {
            "kind" => {
                kind = Some(match value {
                    "WITNESS" => CertificateKind::Witness,
                    "EXHAUSTED" => CertificateKind::Exhausted,
                    other => return err(line_no, format!("unknown certificate kind {other:?}")),
                })
            }
            "m" => m = Some(parse_number(value)?),
            "n" => n = Some(parse_number(value)?),
            "nodes_explored" => nodes_explored = Some(parse_number(value)? as u64),
            "symmetry_reduction" => symmetry_reduction = Some(value.to_string()),
            "candidates" => candidate_log.push(value.to_string()),
            "witnesses" => {
                witness_count = Some(parse_number(value)?);
                break;
            }
            other => return err(line_no, format!("unknown certificate field {other:?}")),
        }
    }

    let require = |line: usize, field: &str| ParseError {
        line,
        msg: format!("missing certificate field {field:?}"),
    };
    let kind = kind.ok_or_else(|| require(0, "kind"))?;
    let m = m.ok_or_else(|| require(0, "m"))?;
    let n = n.ok_or_else(|| require(0, "n"))?;
    let nodes_explored = nodes_explored.ok_or_else(|| require(0, "nodes_explored"))?;
    let symmetry_reduction = symmetry_reduction.ok_or_else(|| require(0, "symmetry_reduction"))?;
    let witness_count = witness_count.ok_or_else(|| require(0, "witnesses"))?;

    // The remainder holds the witness blocks, separated by blank lines.
    let mut blocks: Vec<Vec<(usize, &str)>> = Vec::new();
    let mut current: Vec<(usize, &str)> = Vec::new();
    for (idx, raw) in lines {
        let line = raw.trim();
        if line.is_empty() {
            if !current.is_empty() {
                blocks.push(std::mem::take(&mut current));
            }
        } else {
            current.push((idx + 1, line));
        }
    }
    if !current.is_empty() {
        blocks.push(current);
    }
    if blocks.len() != witness_count {
        return err(
            0,
            format!("witnesses = {witness_count} but {} block(s) follow", blocks.len()),
        );
    }

    let witnesses = blocks
        .iter()
        .map(|block| parse_vector_family_lines(block))
        .collect::<Result<Vec<_>, _>>()?;
    match kind {
        CertificateKind::Witness if witnesses.is_empty() => {
            return err(0, "WITNESS certificate without a witness");
        }
        CertificateKind::Exhausted if !witnesses.is_empty() => {
            return err(0, "EXHAUSTED certificate with witnesses attached");
        }
        _ => {}
    }

    Ok(Certificate {
        kind,
        m,
        n,
        nodes_explored,
        symmetry_reduction,
        candidate_log: (!candidate_log.is_empty()).then_some(candidate_log),
        witnesses,
    })
}
