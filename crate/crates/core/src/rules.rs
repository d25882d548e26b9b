//! Rules compared against maximal lotteries.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::Zero;

use crate::agenda::Alternative;
use crate::lottery::Lottery;
use crate::margins::margins;
use crate::polytope::LotteryPolytope;
use crate::profile::Profile;
use crate::rational::Q;
use crate::solver::{maximal_lotteries, maximin_polytope};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    Ml,
    Rd,
    Borda,
    Ml3,
}

impl RuleId {
    pub const ALL: [RuleId; 4] = [RuleId::Ml, RuleId::Rd, RuleId::Borda, RuleId::Ml3];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::Ml => "ml",
            RuleId::Rd => "rd",
            RuleId::Borda => "borda",
            RuleId::Ml3 => "ml3",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleId {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ml" => Ok(RuleId::Ml),
            "rd" => Ok(RuleId::Rd),
            "borda" => Ok(RuleId::Borda),
            "ml3" => Ok(RuleId::Ml3),
            other => Err(crate::Error::InvalidConfig(format!("unknown rule `{other}`"))),
        }
    }
}

/// Each alternative gets the total weight of the orders that rank it first.
pub fn random_dictatorship(profile: &Profile) -> Lottery {
    let agenda = profile.agenda();
    let mut probs = vec![Q::zero(); agenda.len()];
    for (ranking, w) in profile.rankings() {
        probs[ranking[0]] += w;
    }
    Lottery::new_unchecked(agenda.clone(), probs)
}

/// Borda scores (weighted count of alternatives ranked below) and the top scorers.
pub fn borda(profile: &Profile) -> (BTreeMap<Alternative, Q>, Vec<Alternative>) {
    let agenda = profile.agenda();
    let n = agenda.len();
    let mut scores = vec![Q::zero(); n];
    for (ranking, w) in profile.rankings() {
        for (pos, &i) in ranking.iter().enumerate() {
            scores[i] += w * Q::from_integer((n - 1 - pos).into());
        }
    }
    let best = scores.iter().max().cloned().unwrap_or_else(Q::zero);
    let winners = (0..n)
        .filter(|&i| scores[i] == best)
        .map(|i| agenda.get(i).clone())
        .collect();
    let map = agenda.alternatives().iter().cloned().zip(scores).collect();
    (map, winners)
}

/// Maximal lotteries of the matrix with every margin cubed.
pub fn ml_cubed(profile: &Profile) -> LotteryPolytope {
    maximin_polytope(&margins(profile).map_entries(|x| x * x * x))
}

/// Single-valued rules come back as one-vertex polytopes; Borda randomizes
/// uniformly over its winners.
pub fn apply_rule(rule: RuleId, profile: &Profile) -> LotteryPolytope {
    match rule {
        RuleId::Ml => maximal_lotteries(profile),
        RuleId::Ml3 => ml_cubed(profile),
        RuleId::Rd => LotteryPolytope::singleton(random_dictatorship(profile)),
        RuleId::Borda => {
            let (_, winners) = borda(profile);
            let lottery = Lottery::uniform_over(profile.agenda(), &winners)
                .expect("winners are agenda members");
            LotteryPolytope::singleton(lottery)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agenda::{alt, Agenda, LinearOrder};
    use crate::profile::make_profile;
    use crate::rational::{q, qi};

    fn profile(agenda: &str, entries: &[(&str, Q)]) -> Profile {
        let agenda = Agenda::parse(agenda).unwrap();
        let entries = entries
            .iter()
            .map(|(o, w)| (LinearOrder::parse(o).unwrap(), w.clone()))
            .collect();
        make_profile(&agenda, entries).unwrap()
    }

    fn example1() -> Profile {
        profile("a b c", &[("a>b>c", q(1, 2)), ("a>c>b", q(1, 3)), ("b>c>a", q(1, 6))])
    }

    fn cycle() -> Profile {
        profile("a b c", &[("a>b>c", qi(1)), ("b>c>a", qi(1)), ("c>a>b", qi(1))])
    }

    #[test]
    fn rule_names_round_trip() {
        for r in RuleId::ALL {
            assert_eq!(r.name().parse::<RuleId>().unwrap(), r);
        }
        assert!("kemeny".parse::<RuleId>().is_err());
    }

    #[test]
    fn rd_examples() {
        let rd = random_dictatorship(&example1());
        assert_eq!(rd.probs(), &[q(5, 6), q(1, 6), qi(0)]);
        let single = profile("a b c", &[("a>b>c", qi(1))]);
        assert_eq!(random_dictatorship(&single).probs(), &[qi(1), qi(0), qi(0)]);
        let two = profile("x y", &[("x>y", q(2, 7)), ("y>x", q(5, 7))]);
        assert_eq!(random_dictatorship(&two).probs(), &[q(2, 7), q(5, 7)]);
    }

    #[test]
    fn borda_examples() {
        let (s, w) = borda(&profile("a b c", &[("a>b>c", qi(1))]));
        assert_eq!(s.values().cloned().collect::<Vec<_>>(), vec![qi(2), qi(1), qi(0)]);
        assert_eq!(w, vec![alt("a")]);
        let (s, w) = borda(&example1());
        assert_eq!(s[&alt("a")], q(5, 3));
        assert_eq!(s[&alt("b")], q(5, 6));
        assert_eq!(s[&alt("c")], q(1, 2));
        assert_eq!(w, vec![alt("a")]);
        let (s, w) = borda(&cycle());
        assert!(s.values().all(|v| *v == qi(1)));
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn ml3_examples() {
        let e1 = example1();
        let a = Lottery::degenerate(e1.agenda(), &alt("a")).unwrap();
        assert_eq!(ml_cubed(&e1).vertices(), &[a.clone()]);
        let tie = profile("x y", &[("x>y", q(1, 2)), ("y>x", q(1, 2))]);
        assert_eq!(ml_cubed(&tie).len(), 2);
        let c = ml_cubed(&cycle());
        assert_eq!(c.unique().unwrap().probs(), &[q(1, 3), q(1, 3), q(1, 3)]);
    }

    #[test]
    fn dispatch() {
        let e1 = example1();
        let a = Lottery::degenerate(e1.agenda(), &alt("a")).unwrap();
        assert_eq!(apply_rule(RuleId::Rd, &e1).vertices()[0].probs(), &[q(5, 6), q(1, 6), qi(0)]);
        assert_eq!(apply_rule(RuleId::Ml, &e1).vertices(), &[a.clone()]);
        assert_eq!(apply_rule(RuleId::Borda, &e1).vertices(), &[a]);
        let b = apply_rule(RuleId::Borda, &cycle());
        assert_eq!(b.unique().unwrap().probs(), &[q(1, 3), q(1, 3), q(1, 3)]);
    }

    #[test]
    fn two_alternatives_rd_linear_ml_step() {
        let agenda = Agenda::parse("x y").unwrap();
        for k in 0..=12 {
            let r = q(k, 12);
            let mut entries = Vec::new();
            if k > 0 {
                entries.push((LinearOrder::parse("x>y").unwrap(), r.clone()));
            }
            if k < 12 {
                entries.push((LinearOrder::parse("y>x").unwrap(), qi(1) - &r));
            }
            let p = make_profile(&agenda, entries).unwrap();
            assert_eq!(random_dictatorship(&p).probs(), &[r.clone(), qi(1) - &r]);
            let ml = maximal_lotteries(&p);
            match k.cmp(&6) {
                std::cmp::Ordering::Greater => assert_eq!(ml.unique().unwrap().probs(), &[qi(1), qi(0)]),
                std::cmp::Ordering::Less => assert_eq!(ml.unique().unwrap().probs(), &[qi(0), qi(1)]),
                std::cmp::Ordering::Equal => assert_eq!(ml.len(), 2),
            }
        }
    }
}
