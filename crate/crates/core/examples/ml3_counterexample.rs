//! Searches for two electorates that agree on an ML³ lottery which their
//! mixture does not choose, and prints them as ballot files.
//!
//! `cargo run --example ml3_counterexample -- [seed] [attempts]`

use maxlot::axioms::search_ml3_population_witness;
use maxlot::{fmt_rational, serialize_ballots};

fn main() {
    let mut args = std::env::args().skip(1);
    let seed = args.next().map_or(1, |s| s.parse().expect("seed"));
    let attempts = args.next().map_or(10_000, |s| s.parse().expect("attempts"));
    let Some(w) = search_ml3_population_witness(seed, attempts) else {
        println!("no counterexample in {attempts} attempts");
        return;
    };
    println!("# first electorate\n{}", serialize_ballots(&w.first));
    println!("# second electorate\n{}", serialize_ballots(&w.second));
    println!("# mixing weight of the first electorate: {}", fmt_rational(&w.lambda));
    println!("{}", maxlot::axioms::describe(&w.verdict));
}
