//! The PGSolver text format.
//!
//! ```text
//! parity <max-id>;
//! <id> <priority> <owner> <succ>,<succ>,... ["name"];
//! ```
//!
//! Owner `0` is Even and `1` is Odd. The header is only a hint: the ids
//! present in the file must be exactly `0..n`. An optional `start <id>;`
//! line is accepted and ignored.

use std::fmt::Write;

use super::IoError;
use crate::game::{GameError, ParityGame, Player, Priority, Vertex};

struct Record {
    id: Vertex,
    priority: Priority,
    owner: Player,
    successors: Vec<Vertex>,
    name: Option<String>,
    line: usize,
}

fn parse_error(line: usize, message: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_number<T: std::str::FromStr>(token: &str, what: &str, line: usize) -> Result<T, IoError> {
    token
        .parse()
        .map_err(|_| parse_error(line, format!("expected {what}, found {token:?}")))
}

fn parse_name(rest: &str, line: usize) -> Result<Option<String>, IoError> {
    let rest = rest.trim();
    if rest.is_empty() {
        return Ok(None);
    }
    let inner = rest
        .strip_prefix('"')
        .and_then(|r| r.strip_suffix('"'))
        .ok_or_else(|| parse_error(line, format!("expected a quoted name, found {rest:?}")))?;
    let mut name = String::with_capacity(inner.len());
    let mut chars = inner.chars();
    while let Some(c) = chars.next() {
        match c {
            '\\' => name.push(
                chars
                    .next()
                    .ok_or_else(|| parse_error(line, "dangling escape in name"))?,
            ),
            '"' => return Err(parse_error(line, "unescaped quote in name")),
            c => name.push(c),
        }
    }
    Ok(Some(name))
}

fn parse_record(body: &str, line: usize) -> Result<Record, IoError> {
    let mut rest = body.trim_start();
    let mut fields = Vec::with_capacity(3);
    for _ in 0..3 {
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        if end == 0 {
            return Err(parse_error(line, "expected `id priority owner successors`"));
        }
        fields.push(&rest[..end]);
        rest = rest[end..].trim_start();
    }
    let id = parse_number(fields[0], "a vertex id", line)?;
    let priority = parse_number(fields[1], "a priority", line)?;
    let owner = match fields[2] {
        "0" => Player::Even,
        "1" => Player::Odd,
        other => {
            return Err(parse_error(
                line,
                format!("owner must be 0 or 1, found {other:?}"),
            ))
        }
    };
    let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
    let (succ_text, name_text) = rest.split_at(end);
    let mut successors = Vec::new();
    if !succ_text.is_empty() {
        for token in succ_text.split(',') {
            let w: Vertex = parse_number(token, "a successor id", line)?;
            if successors.contains(&w) {
                log::warn!("line {line}: duplicate edge {id} -> {w} ignored");
            } else {
                successors.push(w);
            }
        }
    }
    let name = parse_name(name_text, line)?;
    Ok(Record {
        id,
        priority,
        owner,
        successors,
        name,
        line,
    })
}

pub fn parse_pgsolver(text: &str) -> Result<ParityGame, IoError> {
    let mut header: Option<usize> = None;
    let mut records = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let body = trimmed
            .strip_suffix(';')
            .ok_or_else(|| parse_error(line, "statement must end with `;`"))?;
        if let Some(rest) = body.strip_prefix("parity") {
            if header.is_some() || !records.is_empty() {
                return Err(parse_error(line, "the `parity` header must come first"));
            }
            header = Some(parse_number(rest.trim(), "a maximum id", line)?);
        } else if body.starts_with("start") {
            continue;
        } else {
            records.push(parse_record(body, line)?);
        }
    }

    let n = records.len();
    if let Some(max_id) = header {
        if n > 0 && max_id + 1 != n {
            log::warn!("header announces max id {max_id} but the file has {n} vertices");
        }
    }
    let mut slots: Vec<Option<Record>> = (0..n).map(|_| None).collect();
    for record in records {
        if record.id >= n {
            return Err(IoError::Validation(GameError::OutOfRange(record.id)));
        }
        let id = record.id;
        if slots[id].is_some() {
            return Err(parse_error(
                record.line,
                format!("vertex {id} is defined twice"),
            ));
        }
        slots[id] = Some(record);
    }
    let records: Vec<Record> = slots
        .into_iter()
        .map(|r| r.expect("ids are a permutation of 0..n"))
        .collect();
    let names = records.iter().map(|r| r.name.clone()).collect();
    let game = ParityGame::new(
        records.iter().map(|r| r.owner).collect(),
        records.iter().map(|r| r.priority).collect(),
        records.into_iter().map(|r| r.successors).collect(),
    )?;
    Ok(game.with_names(names))
}

pub fn write_pgsolver(game: &ParityGame) -> String {
    let n = game.vertex_count();
    let mut out = String::new();
    writeln!(out, "parity {};", n.saturating_sub(1)).unwrap();
    for v in 0..n {
        let owner = match game.owner(v) {
            Player::Even => 0,
            Player::Odd => 1,
        };
        let succ: Vec<String> = game.successors(v).iter().map(|w| w.to_string()).collect();
        write!(out, "{v} {} {owner} {}", game.priority(v), succ.join(",")).unwrap();
        if let Some(name) = game.name(v) {
            let escaped = name.replace('\\', "\\\\").replace('"', "\\\"");
            write!(out, " \"{escaped}\"").unwrap();
        }
        out.push_str(";\n");
    }
    out
}
