//! Text formats for profiles and margin matrices, and the JSON encodings of
//! the library's values.
//!
//! Ballot files hold one weighted order per line:
//!
//! ```text
//! # Example electorate
//! agenda: a b c
//! 1/2: a > b > c
//! 1/3: a > c > b
//! 1/6: b > c > a
//! ```
//!
//! Weights are positive integers or fractions `p/q` and are normalized, so
//! vote counts work as well. The `agenda:` line is optional; without it the
//! agenda is the set of alternatives in the first order. Everything after `#`
//! is a comment.
//!
//! Matrix files start with a line of alternative ids followed by one row of
//! rationals per alternative, in the same order.

use serde_json::{json, Value};

use crate::agenda::{Agenda, Alternative, LinearOrder};
use crate::error::{Error, Result};
use crate::lottery::Lottery;
use crate::margins::MarginMatrix;
use crate::polytope::LotteryPolytope;
use crate::profile::Profile;
use crate::rational::{fmt_rational, parse_rational, Q};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Numbered lines with comments stripped and blank lines skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_ids(line: usize, text: &str) -> Result<Vec<Alternative>> {
    text.split_whitespace()
        .map(|id| Alternative::new(id).map_err(|e| parse_err(line, e.to_string())))
        .collect()
}

pub fn parse_ballots(text: &str) -> Result<Profile> {
    let mut agenda: Option<(usize, Agenda)> = None;
    let mut ballots: Vec<(usize, Q, Vec<Alternative>)> = Vec::new();
    for (n, line) in content_lines(text) {
        let Some((head, rest)) = line.split_once(':') else {
            return Err(parse_err(n, "expected `weight: order` or `agenda: ids`"));
        };
        let (head, rest) = (head.trim(), rest.trim());
        if head == "agenda" {
            if agenda.is_some() || !ballots.is_empty() {
                return Err(parse_err(n, "the agenda line must come first and only once"));
            }
            let ids = parse_ids(n, rest)?;
            let a = Agenda::new(ids).map_err(|e| parse_err(n, e.to_string()))?;
            agenda = Some((n, a));
            continue;
        }
        let weight = parse_rational(head)
            .filter(|w| w > &Q::from_integer(0.into()))
            .ok_or_else(|| parse_err(n, format!("malformed weight `{head}`")))?;
        let order = rest
            .split('>')
            .map(|id| Alternative::new(id.trim()).map_err(|e| parse_err(n, e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        ballots.push((n, weight, order));
    }
    let Some((first_line, _, first)) = ballots.first() else {
        return Err(parse_err(text.lines().count().max(1), "no ballots"));
    };
    let agenda = match agenda {
        Some((_, a)) => a,
        None => Agenda::new(first.iter().cloned()).map_err(|e| parse_err(*first_line, e.to_string()))?,
    };
    let mut entries = Vec::with_capacity(ballots.len());
    for (n, weight, order) in ballots {
        if let Some(x) = order.iter().find(|x| !agenda.contains(x)) {
            return Err(parse_err(n, format!("unknown alternative {x}")));
        }
        let order = LinearOrder::new(order).map_err(|e| parse_err(n, e.to_string()))?;
        if order.ranking().len() != agenda.len() {
            return Err(parse_err(n, format!("incomplete order: agenda is {agenda}")));
        }
        entries.push((order, weight));
    }
    Profile::new(&agenda, entries)
}

/// Ballot text that parses back to the same profile.
pub fn serialize_ballots(profile: &Profile) -> String {
    let ids: Vec<&str> = profile.agenda().alternatives().iter().map(Alternative::id).collect();
    let mut out = format!("agenda: {}\n", ids.join(" "));
    for (order, w) in profile.entries() {
        out.push_str(&format!("{}: {}\n", fmt_rational(&w), order));
    }
    out
}

/// Reads a matrix file; rows and columns are reordered into agenda order.
pub fn parse_matrix(text: &str) -> Result<MarginMatrix> {
    let mut lines = content_lines(text);
    let Some((header_line, header)) = lines.next() else {
        return Err(parse_err(1, "empty matrix file"));
    };
    let ids = parse_ids(header_line, header)?;
    let agenda = Agenda::new(ids.iter().cloned()).map_err(|e| parse_err(header_line, e.to_string()))?;
    let n = ids.len();
    let mut rows: Vec<Vec<Q>> = Vec::with_capacity(n);
    let mut last = header_line;
    for (line, text) in lines {
        last = line;
        let row = text
            .split_whitespace()
            .map(|t| parse_rational(t).ok_or_else(|| parse_err(line, format!("malformed entry `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(parse_err(line, format!("expected {n} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(parse_err(last, format!("expected {n} rows, found {}", rows.len())));
    }
    let pos: Vec<usize> = agenda
        .alternatives()
        .iter()
        .map(|x| ids.iter().position(|y| y == x).expect("same ids"))
        .collect();
    let sorted = pos.iter().map(|&i| pos.iter().map(|&j| rows[i][j].clone()).collect()).collect();
    MarginMatrix::new(&agenda, sorted)
}

pub fn serialize_matrix(m: &MarginMatrix) -> String {
    let ids: Vec<&str> = m.agenda().alternatives().iter().map(Alternative::id).collect();
    let mut out = ids.join(" ");
    out.push('\n');
    for row in m.rows() {
        out.push_str(&row.iter().map(fmt_rational).collect::<Vec<_>>().join(" "));
        out.push('\n');
    }
    out
}

pub fn rational_json(x: &Q) -> Value {
    Value::String(fmt_rational(x))
}

pub fn agenda_json(agenda: &Agenda) -> Value {
    json!(agenda.alternatives().iter().map(Alternative::id).collect::<Vec<_>>())
}

pub fn lottery_json(lottery: &Lottery) -> Value {
    json!({
        "agenda": agenda_json(lottery.agenda()),
        "probabilities": lottery.probs().iter().map(rational_json).collect::<Vec<_>>(),
    })
}

pub fn polytope_json(p: &LotteryPolytope) -> Value {
    json!({
        "agenda": agenda_json(p.agenda()),
        "vertices": p
            .vertices()
            .iter()
            .map(|v| v.probs().iter().map(rational_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn profile_json(profile: &Profile) -> Value {
    json!({
        "agenda": agenda_json(profile.agenda()),
        "orders": profile
            .entries()
            .iter()
            .map(|(o, w)| json!({ "weight": fmt_rational(w), "order": o.to_string() }))
            .collect::<Vec<_>>(),
    })
}

pub fn matrix_json(m: &MarginMatrix) -> Value {
    json!({
        "agenda": agenda_json(m.agenda()),
        "rows": m
            .rows()
            .iter()
            .map(|r| r.iter().map(rational_json).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agenda::alt;
    use crate::rational::{q, qi};

    const EXAMPLE1: &str = "agenda: a b c\n1/2: a > b > c\n1/3: a > c > b\n1/6: b > c > a\n";

    #[test]
    fn parses_example1() {
        let p = parse_ballots(EXAMPLE1).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.weight(&LinearOrder::parse("a > c > b").unwrap()), q(1, 3));
        let shuffled = "# comment\n1/6: b > c > a\n\n1/2: a > b > c  # trailing\n1/3: a > c > b\n";
        assert_eq!(parse_ballots(shuffled).unwrap(), p);
    }

    #[test]
    fn counts_are_normalized() {
        let p = parse_ballots("3: a > b\n1: b > a").unwrap();
        assert_eq!(p.weight(&LinearOrder::parse("a>b").unwrap()), q(3, 4));
        let single = parse_ballots("1/2: a > b").unwrap();
        assert_eq!(single.entries()[0].1, qi(1));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let line = |text: &str| match parse_ballots(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(line("1/2: a > b\nx: b > a"), 2);
        assert_eq!(line("1/2: a > b\n0: b > a"), 2);
        assert_eq!(line("agenda: a b\n1: a > b\n1: a > z"), 3);
        assert_eq!(line("agenda: a b c\n1: a > b"), 2);
        assert_eq!(line("1: a > b > c\n# note\n1: a > b"), 3);
        assert_eq!(line("1: a > a"), 1);
        assert_eq!(line("a > b"), 1);
        assert!(matches!(parse_ballots("# nothing\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ballots(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn ballots_round_trip() {
        let p = parse_ballots(EXAMPLE1).unwrap();
        assert_eq!(parse_ballots(&serialize_ballots(&p)).unwrap(), p);
    }

    #[test]
    fn matrix_reorders_and_validates() {
        let m = parse_matrix("b a\n0 1\n-1 0\n").unwrap();
        assert_eq!(m.get(&alt("a"), &alt("b")).unwrap(), qi(-1));
        assert_eq!(m.agenda().alternatives()[0], alt("a"));
        assert_eq!(parse_matrix(&serialize_matrix(&m)).unwrap(), m);
        assert_eq!(parse_matrix("a b\n0 1\n1 0"), Err(Error::NotSkewSymmetric));
        assert!(matches!(parse_matrix("a b\n0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_matrix("a b\n0 1/0\n-1 0"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn json_uses_exact_strings() {
        let p = parse_ballots(EXAMPLE1).unwrap();
        let v = profile_json(&p);
        assert_eq!(v["orders"][0]["weight"], "1/2");
        assert_eq!(v["agenda"], json!(["a", "b", "c"]));
        let l = Lottery::new(p.agenda(), vec![q(5, 6), q(1, 6), qi(0)]).unwrap();
        assert_eq!(lottery_json(&l)["probabilities"], json!(["5/6", "1/6", "0"]));
    }
}
