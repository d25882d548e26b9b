//! Realizes a maximal lottery: draws the winner reproducibly from a seed.

use maxlot::{maximal_lotteries, parse_ballots, sample};
use std::collections::BTreeMap;

fn main() -> Result<(), maxlot::Error> {
    // A weighted cycle: no Condorcet winner, so the lottery is genuinely mixed.
    let profile = parse_ballots("2: a > b > c\n2: b > c > a\n1: c > a > b")?;
    let ml = maximal_lotteries(&profile);
    let lottery = ml.unique().expect("unique maximal lottery");
    println!("maximal lottery: {lottery}");
    println!("seed 7 draws {}", sample(lottery, 7));
    let mut counts = BTreeMap::new();
    for seed in 0..10_000 {
        *counts.entry(sample(lottery, seed)).or_insert(0) += 1;
    }
    for (x, c) in counts {
        println!("{x}: {c} of 10000");
    }
    Ok(())
}
