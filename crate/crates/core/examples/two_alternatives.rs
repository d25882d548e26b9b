//! With two alternatives, random dictatorship is linear in the share of
//! voters preferring x while maximal lotteries follow the majority.

use maxlot::{fmt_rational, make_profile, maximal_lotteries, q, random_dictatorship, Agenda, LinearOrder};
use num::One;

fn main() -> Result<(), maxlot::Error> {
    let agenda = Agenda::parse("x y")?;
    println!("{:>6} {:>6} {:>12}", "R(x,y)", "rd(x)", "ml(x)");
    for k in 0..=10 {
        let share = q(k, 10);
        let profile = make_profile(
            &agenda,
            vec![
                (LinearOrder::parse("x > y")?, share.clone()),
                (LinearOrder::parse("y > x")?, maxlot::Q::one() - &share),
            ],
        )?;
        let rd = random_dictatorship(&profile).probs()[0].clone();
        let ml = maximal_lotteries(&profile);
        let ml_x: Vec<String> = ml.vertices().iter().map(|v| fmt_rational(&v.probs()[0])).collect();
        let shown = if ml.len() > 1 { format!("[{}]", ml_x.join(", ")) } else { ml_x[0].clone() };
        println!("{:>6} {:>6} {:>12}", fmt_rational(&share), fmt_rational(&rd), shown);
    }
    Ok(())
}
