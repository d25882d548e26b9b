//! Builds a profile whose majority margins are a positive multiple of a given
//! skew-symmetric matrix, then confirms the margins exactly.

use maxlot::{fmt_rational, margins, mcgarvey, parse_matrix, serialize_ballots};

fn main() -> Result<(), maxlot::Error> {
    let m = parse_matrix(
        "a b c d
         0 1/2 -1/3 0
         -1/2 0 1 1/4
         1/3 -1 0 2
         0 -1/4 -2 0",
    )?;
    let (profile, c) = mcgarvey(&m)?;
    print!("{}", serialize_ballots(&profile));
    println!("c = {}", fmt_rational(&c));
    assert_eq!(margins(&profile), m.scale(&c));
    println!("margins equal c times the input matrix");
    Ok(())
}
