//! Monte Carlo estimates of Condorcet-winner frequencies and maximal-lottery
//! support sizes under impartial culture and a spatial model.
//!
//! `cargo run --release --example simulate -- [trials]`

use maxlot::sim::exact_no_weak_condorcet;
use maxlot::{fmt_rational, run_sim, Generator, SimConfig};

fn main() -> Result<(), maxlot::Error> {
    let trials = std::env::args().nth(1).map_or(500, |s| s.parse().expect("trials"));
    println!(
        "exact probability of no weak Condorcet winner, 3 alternatives and 3 voters: {}",
        fmt_rational(&exact_no_weak_condorcet(3, 3))
    );
    for (generator, alts, voters) in [
        (Generator::ImpartialCulture, 3, 3),
        (Generator::ImpartialCulture, 5, 15),
        (Generator::ImpartialCulture, 7, 25),
        (Generator::Spatial(2), 3, 15),
        (Generator::Spatial(2), 7, 15),
    ] {
        let cfg = SimConfig { generator, n_alternatives: alts, n_voters: voters, trials, seed: 1 };
        let s = run_sim(&cfg)?;
        let freq = |x: &maxlot::Q| format!("{:.3}", num::ToPrimitive::to_f64(x).unwrap_or(f64::NAN));
        println!(
            "{generator:?} m={alts} n={voters}: weak {} strict {} supports {:?} tied {}",
            freq(&s.condorcet_weak_freq),
            freq(&s.condorcet_strict_freq),
            s.support_size_histogram,
            s.tied,
        );
    }
    Ok(())
}
