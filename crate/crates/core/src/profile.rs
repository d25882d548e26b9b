//! Fractional preference profiles and the structural operations on them.

use std::collections::BTreeMap;

use num::{One, Signed, Zero};

use crate::agenda::{Agenda, Alternative, LinearOrder, Relabeling};
use crate::error::{Error, Result};
use crate::rational::Q;

/// A probability distribution over the linear orders of an agenda.
///
/// Profiles are kept in canonical form: duplicate orders merged, zero-weight
/// orders dropped and weights summing to exactly one. Two profiles are equal
/// iff they assign the same weight to every order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    agenda: Agenda,
    // Rankings as agenda indices, best first.
    weights: BTreeMap<Vec<usize>, Q>,
}

impl Profile {
    /// Canonicalizes weighted orders; weights may be unnormalized counts.
    pub fn new(agenda: &Agenda, entries: impl IntoIterator<Item = (LinearOrder, Q)>) -> Result<Self> {
        let ranked = entries
            .into_iter()
            .map(|(order, w)| Ok((order.to_indices(agenda)?, w)))
            .collect::<Result<Vec<_>>>()?;
        Profile::from_rankings(agenda.clone(), ranked)
    }

    pub(crate) fn from_rankings(
        agenda: Agenda,
        entries: impl IntoIterator<Item = (Vec<usize>, Q)>,
    ) -> Result<Self> {
        let mut weights: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
        for (ranking, w) in entries {
            if w.is_negative() {
                return Err(Error::NegativeWeight(crate::rational::fmt_rational(&w)));
            }
            if w.is_zero() {
                continue;
            }
            *weights.entry(ranking).or_insert_with(Q::zero) += w;
        }
        let total: Q = weights.values().sum();
        if total.is_zero() {
            return Err(Error::NoPositiveWeight);
        }
        if !total.is_one() {
            for w in weights.values_mut() {
                *w /= &total;
            }
        }
        Ok(Profile { agenda, weights })
    }

    /// The profile in which every voter holds `order`.
    pub fn unanimous(agenda: &Agenda, order: LinearOrder) -> Result<Self> {
        Profile::new(agenda, [(order, Q::one())])
    }

    /// The uniform profile over all orders of the agenda.
    pub fn uniform(agenda: &Agenda) -> Self {
        let orders = all_rankings(agenda.len());
        Profile::from_rankings(agenda.clone(), orders.into_iter().map(|r| (r, Q::one())))
            .expect("nonempty")
    }

    pub fn agenda(&self) -> &Agenda {
        &self.agenda
    }

    /// Number of orders with positive weight.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn entries(&self) -> Vec<(LinearOrder, Q)> {
        self.weights
            .iter()
            .map(|(r, w)| (LinearOrder::from_indices(&self.agenda, r), w.clone()))
            .collect()
    }

    pub(crate) fn rankings(&self) -> impl Iterator<Item = (&[usize], &Q)> {
        self.weights.iter().map(|(r, w)| (r.as_slice(), w))
    }

    pub fn weight(&self, order: &LinearOrder) -> Q {
        order
            .to_indices(&self.agenda)
            .ok()
            .and_then(|r| self.weights.get(&r).cloned())
            .unwrap_or_else(Q::zero)
    }

    /// Weights of all `n!` orders, in lexicographic order of agenda indices.
    pub fn weight_vector(&self) -> Vec<Q> {
        all_rankings(self.agenda.len())
            .iter()
            .map(|r| self.weights.get(r).cloned().unwrap_or_else(Q::zero))
            .collect()
    }

    /// Restriction to a sub-agenda: each order on `subset` receives the weight of all orders extending it.
    pub fn restrict(&self, subset: &[Alternative]) -> Result<Profile> {
        let sub = self.agenda.subset(subset)?;
        let idx = self.agenda.indices_of(&sub)?;
        let mut pos_in_sub = vec![usize::MAX; self.agenda.len()];
        for (k, &i) in idx.iter().enumerate() {
            pos_in_sub[i] = k;
        }
        let entries = self.weights.iter().map(|(r, w)| {
            let restricted: Vec<usize> = r
                .iter()
                .filter(|&&i| pos_in_sub[i] != usize::MAX)
                .map(|&i| pos_in_sub[i])
                .collect();
            (restricted, w.clone())
        });
        Profile::from_rankings(sub, entries)
    }

    /// Fraction of voters ranking `x` above `y`.
    pub fn pairwise_fraction(&self, x: &Alternative, y: &Alternative) -> Result<Q> {
        if x == y {
            return Err(Error::SameAlternative(x.to_string()));
        }
        let i = self.agenda.require_index(x)?;
        let j = self.agenda.require_index(y)?;
        Ok(self.pairwise_matrix()[i][j].clone())
    }

    /// `out[i][j]` is the fraction ranking alternative i above alternative j; zero diagonal.
    pub fn pairwise_matrix(&self) -> Vec<Vec<Q>> {
        let n = self.agenda.len();
        let mut out = vec![vec![Q::zero(); n]; n];
        for (ranking, w) in &self.weights {
            for (k, &i) in ranking.iter().enumerate() {
                for &j in &ranking[k + 1..] {
                    out[i][j] += w;
                }
            }
        }
        out
    }

    /// Every voter's order reversed.
    pub fn reversed(&self) -> Profile {
        let entries = self.weights.iter().map(|(r, w)| {
            let mut r = r.clone();
            r.reverse();
            (r, w.clone())
        });
        Profile::from_rankings(self.agenda.clone(), entries).expect("valid profile")
    }

    /// Relabels every order through a bijection onto another agenda.
    pub fn permute(&self, relabeling: &Relabeling) -> Result<Profile> {
        if relabeling.source() != &self.agenda {
            return Err(Error::AgendaMismatch);
        }
        let idx = relabeling.index_map();
        let entries = self
            .weights
            .iter()
            .map(|(r, w)| (r.iter().map(|&i| idx[i]).collect(), w.clone()));
        Profile::from_rankings(relabeling.target().clone(), entries)
    }

    /// Whether `subset` is adjacent in every order with positive weight.
    pub fn is_component(&self, subset: &[Alternative]) -> Result<bool> {
        let sub = self.agenda.subset(subset)?;
        let mut member = vec![false; self.agenda.len()];
        for i in self.agenda.indices_of(&sub)? {
            member[i] = true;
        }
        Ok(self
            .weights
            .keys()
            .all(|r| is_interval(r, &member, sub.len())))
    }

    /// All components of size between 2 and `n - 1`, sorted.
    ///
    /// Every component is a contiguous block of each order, so the blocks of
    /// a single reference order are the only candidates.
    pub fn find_components(&self) -> Vec<Vec<Alternative>> {
        let n = self.agenda.len();
        let Some(reference) = self.weights.keys().next() else {
            return Vec::new();
        };
        let mut found: Vec<Vec<Alternative>> = Vec::new();
        for size in 2..n {
            for start in 0..=n - size {
                let mut member = vec![false; n];
                for &i in &reference[start..start + size] {
                    member[i] = true;
                }
                if self.weights.keys().all(|r| is_interval(r, &member, size)) {
                    let mut block: Vec<Alternative> = reference[start..start + size]
                        .iter()
                        .map(|&i| self.agenda.get(i).clone())
                        .collect();
                    block.sort();
                    found.push(block);
                }
            }
        }
        found.sort();
        found
    }
}

fn is_interval(ranking: &[usize], member: &[bool], size: usize) -> bool {
    let mut first = None;
    let mut last = 0;
    for (pos, &i) in ranking.iter().enumerate() {
        if member[i] {
            first.get_or_insert(pos);
            last = pos;
        }
    }
    match first {
        Some(f) => last - f + 1 == size,
        None => size == 0,
    }
}

/// Validates and canonicalizes weighted orders.
pub fn make_profile(agenda: &Agenda, entries: Vec<(LinearOrder, Q)>) -> Result<Profile> {
    Profile::new(agenda, entries)
}

/// Convex combination of profiles over one agenda.
pub fn mix(parts: &[(Profile, Q)]) -> Result<Profile> {
    let first = parts.first().ok_or(Error::NotConvexCombination)?;
    let agenda = first.0.agenda.clone();
    if parts.iter().any(|(p, _)| p.agenda != agenda) {
        return Err(Error::AgendaMismatch);
    }
    if parts.iter().any(|(_, l)| l.is_negative()) || !parts.iter().map(|(_, l)| l).sum::<Q>().is_one() {
        return Err(Error::NotConvexCombination);
    }
    let entries = parts.iter().flat_map(|(p, l)| {
        p.weights.iter().map(move |(r, w)| (r.clone(), w * l))
    });
    Profile::from_rankings(agenda, entries)
}

/// The profile over `A' ∪ B` in which the component `B` replaces `b` in every outer order.
///
/// Restricting the result to the outer agenda gives `outer` back, restricting it
/// to `B` gives `inner`, and `B` is a component of the result.
pub fn compose_profiles(outer: &Profile, inner: &Profile, b: &Alternative) -> Result<Profile> {
    let shared = outer.agenda.intersection(&inner.agenda);
    if shared.as_slice() != std::slice::from_ref(b) {
        return Err(Error::OverlapViolated(b.to_string()));
    }
    let agenda = outer.agenda.union(&inner.agenda);
    let outer_idx = agenda.indices_of(&outer.agenda)?;
    let inner_idx = agenda.indices_of(&inner.agenda)?;
    let b_outer = outer.agenda.require_index(b)?;
    let mut entries = Vec::with_capacity(outer.len() * inner.len());
    for (ro, wo) in &outer.weights {
        for (ri, wi) in &inner.weights {
            let mut ranking = Vec::with_capacity(agenda.len());
            for &i in ro {
                if i == b_outer {
                    ranking.extend(ri.iter().map(|&k| inner_idx[k]));
                } else {
                    ranking.push(outer_idx[i]);
                }
            }
            entries.push((ranking, wo * wi));
        }
    }
    Profile::from_rankings(agenda, entries)
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn all_rankings(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..n).collect();
    let mut out = vec![current.clone()];
    loop {
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).expect("successor");
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agenda::alt;
    use crate::rational::{q, qi};

    fn order(s: &str) -> LinearOrder {
        LinearOrder::parse(s).unwrap()
    }

    fn example1() -> Profile {
        let agenda = Agenda::parse("a b c").unwrap();
        make_profile(
            &agenda,
            vec![
                (order("a>b>c"), q(1, 2)),
                (order("a>c>b"), q(1, 3)),
                (order("b>c>a"), q(1, 6)),
            ],
        )
        .unwrap()
    }

    fn example3() -> Profile {
        let agenda = Agenda::parse("a b b'").unwrap();
        make_profile(
            &agenda,
            vec![
                (order("a>b'>b"), q(1, 3)),
                (order("a>b>b'"), q(1, 6)),
                (order("b>b'>a"), q(1, 2)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn make_profile_keeps_example1_weights() {
        let p = example1();
        assert_eq!(p.weight(&order("a>b>c")), q(1, 2));
        assert_eq!(p.weight(&order("a>c>b")), q(1, 3));
        assert_eq!(p.weight(&order("b>c>a")), q(1, 6));
        assert_eq!(p.weight(&order("c>b>a")), qi(0));
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn make_profile_normalizes_and_merges() {
        let agenda = Agenda::parse("a b").unwrap();
        let p = make_profile(&agenda, vec![(order("a>b"), qi(3)), (order("b>a"), qi(1))]).unwrap();
        assert_eq!(p.weight(&order("a>b")), q(3, 4));
        assert_eq!(p.weight(&order("b>a")), q(1, 4));
        let merged = make_profile(&agenda, vec![(order("a>b"), q(1, 2)), (order("a>b"), q(1, 2))]).unwrap();
        assert_eq!(merged.entries(), vec![(order("a>b"), qi(1))]);
    }

    #[test]
    fn make_profile_errors() {
        let agenda = Agenda::parse("a b").unwrap();
        assert_eq!(
            make_profile(&agenda, vec![(order("a>c"), qi(1))]),
            Err(Error::WrongAlternatives)
        );
        assert_eq!(
            make_profile(&agenda, vec![(order("a>b"), qi(0))]),
            Err(Error::NoPositiveWeight)
        );
        assert!(matches!(
            make_profile(&agenda, vec![(order("a>b"), qi(-1)), (order("b>a"), qi(2))]),
            Err(Error::NegativeWeight(_))
        ));
    }

    #[test]
    fn restrict_example3() {
        let p = example3();
        let b = p.restrict(&[alt("b"), alt("b'")]).unwrap();
        assert_eq!(b.weight(&order("b'>b")), q(1, 3));
        assert_eq!(b.weight(&order("b>b'")), q(2, 3));
        let ab = p.restrict(&[alt("a"), alt("b")]).unwrap();
        assert_eq!(ab.weight(&order("a>b")), q(1, 2));
        assert_eq!(ab.weight(&order("b>a")), q(1, 2));
        assert_eq!(p.restrict(p.agenda().alternatives()).unwrap(), p);
        assert_eq!(p.restrict(&[]), Err(Error::EmptySubset));
        assert!(matches!(p.restrict(&[alt("z")]), Err(Error::ForeignAlternative(_))));
    }

    #[test]
    fn pairwise_fractions() {
        let p = example1();
        assert_eq!(p.pairwise_fraction(&alt("a"), &alt("b")).unwrap(), q(5, 6));
        assert_eq!(p.pairwise_fraction(&alt("b"), &alt("a")).unwrap(), q(1, 6));
        assert_eq!(example3().pairwise_fraction(&alt("b"), &alt("b'")).unwrap(), q(2, 3));
        assert!(matches!(p.pairwise_fraction(&alt("a"), &alt("a")), Err(Error::SameAlternative(_))));
        assert!(matches!(p.pairwise_fraction(&alt("a"), &alt("z")), Err(Error::ForeignAlternative(_))));
    }

    #[test]
    fn mix_example2() {
        let agenda = Agenda::parse("a b c").unwrap();
        let r1 = make_profile(&agenda, vec![(order("a>b>c"), q(1, 2)), (order("b>c>a"), q(1, 2))]).unwrap();
        let r2 = make_profile(&agenda, vec![(order("a>c>b"), q(1, 2)), (order("b>c>a"), q(1, 2))]).unwrap();
        let merged = mix(&[(r1.clone(), q(1, 2)), (r2, q(1, 2))]).unwrap();
        assert_eq!(merged.weight(&order("a>b>c")), q(1, 4));
        assert_eq!(merged.weight(&order("a>c>b")), q(1, 4));
        assert_eq!(merged.weight(&order("b>c>a")), q(1, 2));
        assert_eq!(mix(&[(r1.clone(), qi(1))]).unwrap(), r1);
        assert_eq!(mix(&[(r1.clone(), q(1, 3)), (r1.clone(), q(2, 3))]).unwrap(), r1);
        assert_eq!(mix(&[(r1.clone(), q(1, 3))]), Err(Error::NotConvexCombination));
        assert_eq!(
            mix(&[(r1, qi(1)), (example1().restrict(&[alt("a"), alt("b")]).unwrap(), qi(0))]),
            Err(Error::AgendaMismatch)
        );
    }

    #[test]
    fn permute_example1_swap() {
        let p = example1();
        let swap = Relabeling::from_pairs(p.agenda(), &[(alt("a"), alt("b")), (alt("b"), alt("a"))]).unwrap();
        let swapped = p.permute(&swap).unwrap();
        assert_eq!(swapped.weight(&order("b>a>c")), q(1, 2));
        assert_eq!(swapped.weight(&order("b>c>a")), q(1, 3));
        assert_eq!(swapped.weight(&order("a>c>b")), q(1, 6));
        assert_eq!(swapped.permute(&swap.inverse()).unwrap(), p);
        assert_eq!(p.permute(&Relabeling::identity(p.agenda())).unwrap(), p);
    }

    #[test]
    fn components() {
        let p3 = example3();
        assert!(p3.is_component(&[alt("b"), alt("b'")]).unwrap());
        assert!(p3.is_component(&[alt("a")]).unwrap());
        assert!(!example1().is_component(&[alt("a"), alt("b")]).unwrap());
        assert_eq!(p3.find_components(), vec![vec![alt("b"), alt("b'")]]);
        // b and c are adjacent in a>b>c, a>c>b and b>c>a.
        assert_eq!(example1().find_components(), vec![vec![alt("b"), alt("c")]]);
        let single = Profile::uniform(&Agenda::parse("x").unwrap());
        assert!(single.find_components().is_empty());
    }

    #[test]
    fn compose_example3_roundtrip() {
        let p3 = example3();
        let outer = p3.restrict(&[alt("a"), alt("b")]).unwrap();
        let inner = p3.restrict(&[alt("b"), alt("b'")]).unwrap();
        let composed = compose_profiles(&outer, &inner, &alt("b")).unwrap();
        assert_eq!(composed.restrict(&[alt("a"), alt("b")]).unwrap(), outer);
        assert_eq!(composed.restrict(&[alt("b"), alt("b'")]).unwrap(), inner);
        assert!(composed.is_component(&[alt("b"), alt("b'")]).unwrap());
        assert!(matches!(
            compose_profiles(&outer, &inner, &alt("a")),
            Err(Error::OverlapViolated(_))
        ));
    }

    #[test]
    fn compose_degenerate_inner() {
        let outer = make_profile(
            &Agenda::parse("a b").unwrap(),
            vec![(order("a>b"), qi(1)), (order("b>a"), qi(2))],
        )
        .unwrap();
        let inner = Profile::unanimous(&Agenda::parse("b c").unwrap(), order("c>b")).unwrap();
        let composed = compose_profiles(&outer, &inner, &alt("b")).unwrap();
        assert_eq!(composed.weight(&order("a>c>b")), q(1, 3));
        assert_eq!(composed.weight(&order("c>b>a")), q(2, 3));

        let single = Profile::unanimous(&Agenda::parse("a b").unwrap(), order("b>a")).unwrap();
        let composed = compose_profiles(&single, &inner, &alt("b")).unwrap();
        assert_eq!(composed.entries(), vec![(order("c>b>a"), qi(1))]);
    }

    #[test]
    fn rankings_enumeration() {
        let r = all_rankings(3);
        assert_eq!(r.len(), 6);
        assert_eq!(r[0], vec![0, 1, 2]);
        assert_eq!(r[5], vec![2, 1, 0]);
        assert_eq!(all_rankings(1), vec![vec![0]]);
    }
}
