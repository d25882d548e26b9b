//! Lotteries over an agenda and the `×_b` composition of lotteries.

use std::collections::BTreeSet;
use std::fmt;

use num::{One, Signed, Zero};

use crate::agenda::{Agenda, Alternative, Relabeling};
use crate::error::{Error, Result};
use crate::rational::{fmt_rational, Q};

/// A rational probability vector indexed by the agenda's canonical order.
///
/// Lotteries over the same agenda order lexicographically by their probability
/// vector; polytope vertex lists use that order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lottery {
    agenda: Agenda,
    probs: Vec<Q>,
}

impl Lottery {
    pub fn new(agenda: &Agenda, probs: Vec<Q>) -> Result<Self> {
        if probs.len() != agenda.len()
            || probs.iter().any(|p| p.is_negative())
            || !probs.iter().sum::<Q>().is_one()
        {
            return Err(Error::InvalidLottery);
        }
        Ok(Lottery {
            agenda: agenda.clone(),
            probs,
        })
    }

    pub(crate) fn new_unchecked(agenda: Agenda, probs: Vec<Q>) -> Self {
        debug_assert_eq!(probs.len(), agenda.len());
        Lottery { agenda, probs }
    }

    /// Builds a lottery from `(alternative, probability)` pairs; unlisted alternatives get zero.
    pub fn from_pairs(agenda: &Agenda, pairs: &[(Alternative, Q)]) -> Result<Self> {
        let mut probs = vec![Q::zero(); agenda.len()];
        for (x, p) in pairs {
            probs[agenda.require_index(x)?] += p;
        }
        Lottery::new(agenda, probs)
    }

    /// The lottery putting probability one on `x`.
    pub fn degenerate(agenda: &Agenda, x: &Alternative) -> Result<Self> {
        Lottery::from_pairs(agenda, &[(x.clone(), Q::one())])
    }

    /// Uniform lottery over `support`.
    pub fn uniform_over(agenda: &Agenda, support: &[Alternative]) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::EmptySubset);
        }
        let p = Q::new(1.into(), support.len().into());
        let pairs: Vec<_> = support.iter().map(|x| (x.clone(), p.clone())).collect();
        Lottery::from_pairs(agenda, &pairs)
    }

    pub fn agenda(&self) -> &Agenda {
        &self.agenda
    }

    pub fn probs(&self) -> &[Q] {
        &self.probs
    }

    pub fn prob(&self, x: &Alternative) -> Q {
        self.agenda
            .index_of(x)
            .map(|i| self.probs[i].clone())
            .unwrap_or_else(Q::zero)
    }

    pub fn support(&self) -> Vec<Alternative> {
        self.agenda
            .alternatives()
            .iter()
            .zip(&self.probs)
            .filter(|(_, p)| p.is_positive())
            .map(|(x, _)| x.clone())
            .collect()
    }

    pub fn is_degenerate(&self) -> bool {
        self.probs.iter().any(|p| p.is_one())
    }

    /// Zero-extension onto a superset agenda.
    pub fn extend_to(&self, agenda: &Agenda) -> Result<Lottery> {
        let mut probs = vec![Q::zero(); agenda.len()];
        for (x, p) in self.agenda.alternatives().iter().zip(&self.probs) {
            probs[agenda.require_index(x)?] = p.clone();
        }
        Ok(Lottery::new_unchecked(agenda.clone(), probs))
    }

    /// Relabels the lottery through a bijection of agendas.
    pub fn permute(&self, relabeling: &Relabeling) -> Result<Lottery> {
        if relabeling.source() != &self.agenda {
            return Err(Error::AgendaMismatch);
        }
        let idx = relabeling.index_map();
        let mut probs = vec![Q::zero(); self.probs.len()];
        for (i, p) in self.probs.iter().enumerate() {
            probs[idx[i]] = p.clone();
        }
        Ok(Lottery::new_unchecked(relabeling.target().clone(), probs))
    }
}

impl fmt::Display for Lottery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .agenda
            .alternatives()
            .iter()
            .zip(&self.probs)
            .filter(|(_, p)| !p.is_zero())
            .map(|(x, p)| {
                if p.is_one() {
                    x.to_string()
                } else {
                    format!("{} {}", fmt_rational(p), x)
                }
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// `(p ×_b q)`: `p_x` outside the component, `p_b · q_x` inside it.
pub fn compose_lottery(p: &Lottery, q: &Lottery, b: &Alternative) -> Result<Lottery> {
    let shared = p.agenda.intersection(&q.agenda);
    if shared.as_slice() != std::slice::from_ref(b) {
        return Err(Error::OverlapViolated(b.to_string()));
    }
    let agenda = p.agenda.union(&q.agenda);
    let pb = p.prob(b);
    let probs = agenda
        .alternatives()
        .iter()
        .map(|x| {
            if q.agenda.contains(x) {
                &pb * q.prob(x)
            } else {
                p.prob(x)
            }
        })
        .collect();
    Ok(Lottery::new_unchecked(agenda, probs))
}

/// All pairwise compositions, deduplicated and sorted.
pub fn compose_lottery_sets(xs: &[Lottery], ys: &[Lottery], b: &Alternative) -> Result<Vec<Lottery>> {
    let mut out = BTreeSet::new();
    for p in xs {
        for q in ys {
            out.insert(compose_lottery(p, q, b)?);
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agenda::alt;
    use crate::rational::{q, qi};

    fn ab() -> Agenda {
        Agenda::parse("a b").unwrap()
    }

    fn bb() -> Agenda {
        Agenda::parse("b b'").unwrap()
    }

    #[test]
    fn example3_composition() {
        let p = Lottery::from_pairs(&ab(), &[(alt("a"), q(1, 2)), (alt("b"), q(1, 2))]).unwrap();
        let qq = Lottery::from_pairs(&bb(), &[(alt("b"), q(2, 3)), (alt("b'"), q(1, 3))]).unwrap();
        let r = compose_lottery(&p, &qq, &alt("b")).unwrap();
        assert_eq!(r.prob(&alt("a")), q(1, 2));
        assert_eq!(r.prob(&alt("b")), q(1, 3));
        assert_eq!(r.prob(&alt("b'")), q(1, 6));
        assert_eq!(r.to_string(), "1/2 a + 1/3 b + 1/6 b'");
    }

    #[test]
    fn composition_degenerate_cases() {
        let da = Lottery::degenerate(&ab(), &alt("a")).unwrap();
        let any = Lottery::from_pairs(&bb(), &[(alt("b"), q(1, 4)), (alt("b'"), q(3, 4))]).unwrap();
        let r = compose_lottery(&da, &any, &alt("b")).unwrap();
        assert_eq!(r, da.extend_to(&Agenda::parse("a b b'").unwrap()).unwrap());

        let p = Lottery::from_pairs(&ab(), &[(alt("a"), q(1, 5)), (alt("b"), q(4, 5))]).unwrap();
        let db = Lottery::degenerate(&bb(), &alt("b")).unwrap();
        let r = compose_lottery(&p, &db, &alt("b")).unwrap();
        assert_eq!(r.probs(), &[q(1, 5), q(4, 5), qi(0)]);

        assert!(matches!(compose_lottery(&p, &db, &alt("a")), Err(Error::OverlapViolated(_))));
    }

    #[test]
    fn set_composition() {
        let da = Lottery::degenerate(&ab(), &alt("a")).unwrap();
        let db = Lottery::degenerate(&ab(), &alt("b")).unwrap();
        let inner_b = Lottery::degenerate(&bb(), &alt("b")).unwrap();
        let one = compose_lottery_sets(&[da.clone()], &[inner_b], &alt("b")).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].probs(), &[qi(1), qi(0), qi(0)]);

        let y = Lottery::from_pairs(&bb(), &[(alt("b"), q(2, 3)), (alt("b'"), q(1, 3))]).unwrap();
        let two = compose_lottery_sets(&[da, db], &[y], &alt("b")).unwrap();
        assert_eq!(two.len(), 2);
        assert_eq!(two[0].probs(), &[qi(0), q(2, 3), q(1, 3)]);
        assert_eq!(two[1].probs(), &[qi(1), qi(0), qi(0)]);
    }

    #[test]
    fn validation() {
        assert_eq!(Lottery::new(&ab(), vec![q(1, 2), q(1, 3)]), Err(Error::InvalidLottery));
        assert_eq!(Lottery::new(&ab(), vec![qi(2), qi(-1)]), Err(Error::InvalidLottery));
        let u = Lottery::uniform_over(&ab(), &[alt("a"), alt("b")]).unwrap();
        assert_eq!(u.support(), vec![alt("a"), alt("b")]);
        assert!(!u.is_degenerate());
    }
}
