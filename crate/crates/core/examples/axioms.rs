//! Runs the axiom checkers on random instances for each rule and prints a table.
//!
//! `cargo run --release --example axioms -- [trials]`

use maxlot::axioms::{check_strong_population_consistency, describe, run_batch, Axiom, BatchConfig};
use maxlot::{parse_ballots, q, RuleId};

fn main() -> Result<(), maxlot::Error> {
    let trials = std::env::args().nth(1).map_or(50, |s| s.parse().expect("trials"));
    let cfg = BatchConfig { trials, max_alternatives: 4, ..BatchConfig::default() };
    print!("{:<18}", "");
    for rule in RuleId::ALL {
        print!("{:>8}", rule.name());
    }
    println!();
    for axiom in Axiom::ALL {
        print!("{:<18}", axiom.name());
        for rule in RuleId::ALL {
            let report = run_batch(axiom, rule, &cfg);
            print!("{:>8}", format!("{}/{}", report.passed, report.trials));
        }
        println!();
    }

    // Two electorates with opposite preferences agree on the uniform lottery,
    // but together they are indifferent between everything.
    let cycle = parse_ballots(include_str!("../tests/fixtures/r1.txt"))?;
    let verdict = check_strong_population_consistency(RuleId::Ml, &cycle, &cycle.reversed(), &q(1, 2))?;
    println!("{}", describe(&verdict));
    Ok(())
}
