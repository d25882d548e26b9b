//! Evaluates every rule on a ballot file (Example 1 by default).
//!
//! `cargo run --example solve -- [ballots.txt]`

use maxlot::{apply_rule, borda, condorcet_winners, fmt_rational, margins, parse_ballots, RuleId};

const DEFAULT: &str = include_str!("../tests/fixtures/example1.txt");

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => DEFAULT.to_string(),
    };
    let profile = parse_ballots(&text)?;
    println!("agenda {}", profile.agenda());
    for (order, w) in profile.entries() {
        println!("  {:>6}  {order}", fmt_rational(&w));
    }

    let m = margins(&profile);
    println!("margins:");
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{:>6}", fmt_rational(x))).collect();
        println!("  {}", cells.join(" "));
    }
    let cw = condorcet_winners(&profile);
    let weak: Vec<&str> = cw.weak.iter().map(|x| x.id()).collect();
    let strict = cw.strict.as_ref().map_or("none", |x| x.id());
    println!("weak Condorcet winners [{}], strict winner {strict}", weak.join(", "));

    for rule in RuleId::ALL {
        let outcome = apply_rule(rule, &profile);
        println!("{rule}:");
        for v in outcome.vertices() {
            println!("  {v}");
        }
    }
    let (scores, _) = borda(&profile);
    for (x, s) in scores {
        println!("borda score of {x}: {}", fmt_rational(&s));
    }
    Ok(())
}
