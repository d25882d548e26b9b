//! Splits a matrix whose row sums vanish into weighted directed cycles.

use maxlot::{cycle_decompose, fmt_rational, is_regular, parse_matrix, MarginMatrix};

fn main() -> Result<(), maxlot::Error> {
    let m = parse_matrix(
        "1 2 3 4
         0 1/2 -5/6 1/3
         -1/2 0 1/2 0
         5/6 -1/2 0 -1/3
         -1/3 0 1/3 0",
    )?;
    let all = m.agenda().alternatives().to_vec();
    println!("regular: {}", is_regular(&m, &all)?);
    let terms = cycle_decompose(&m, &all)?;
    let mut sum = MarginMatrix::zero(m.agenda());
    for t in &terms {
        let names: Vec<&str> = t.cycle.iter().map(|x| x.id()).collect();
        println!("{} × ({})", fmt_rational(&t.coefficient), names.join(" → "));
        let inc = t.incidence(m.agenda())?;
        let rows = sum
            .rows()
            .iter()
            .zip(inc.rows())
            .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + &t.coefficient * y).collect())
            .collect();
        sum = MarginMatrix::new(m.agenda(), rows)?;
    }
    assert_eq!(sum, m);
    println!("the {} weighted cycles add up to the input exactly", terms.len());
    Ok(())
}
