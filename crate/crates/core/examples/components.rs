//! Clones: finds the component of a profile, composes lotteries across it and
//! compares how maximal lotteries and random dictatorship treat the clones.

use maxlot::axioms::{check_cloning_consistency, check_composition_consistency, describe};
use maxlot::{alt, apply_rule, compose_lottery, parse_ballots, RuleId};

fn main() -> Result<(), maxlot::Error> {
    let profile = parse_ballots(include_str!("../tests/fixtures/example3.txt"))?;
    let components = profile.find_components();
    for c in &components {
        let ids: Vec<&str> = c.iter().map(|x| x.id()).collect();
        println!("component {{{}}}", ids.join(", "));
    }
    let component = &components[0];
    let b = alt("b");

    let outer = profile.restrict(&[alt("a"), b.clone()])?;
    let inner = profile.restrict(component)?;
    for rule in [RuleId::Ml, RuleId::Rd] {
        println!("{rule} on the whole profile:");
        for v in apply_rule(rule, &profile).vertices() {
            println!("  {v}");
        }
        let outer_choice = apply_rule(rule, &outer).vertices()[0].clone();
        let inner_choice = apply_rule(rule, &inner).vertices()[0].clone();
        println!("  composed from {outer_choice} and {inner_choice}: {}", compose_lottery(&outer_choice, &inner_choice, &b)?);
        println!("  {}", describe(&check_composition_consistency(rule, &profile, component, &b)?));
        println!("  {}", describe(&check_cloning_consistency(rule, &profile, component, &b)?));
    }
    Ok(())
}
