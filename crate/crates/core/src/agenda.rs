//! Alternatives, agendas and strict rankings.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// An alternative, identified by a nonempty whitespace-free token.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alternative(String);

impl Alternative {
    pub fn new(id: impl Into<String>) -> Result<Self> {
        let id = id.into();
        if id.is_empty() || id.chars().any(|c| c.is_whitespace() || c == '>') {
            return Err(Error::InvalidAlternative(id));
        }
        Ok(Alternative(id))
    }

    pub fn id(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Alternative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Shorthand for building an [`Alternative`] from a literal; panics on an invalid id.
pub fn alt(id: &str) -> Alternative {
    Alternative::new(id).expect("valid alternative id")
}

/// A finite nonempty set of alternatives, iterated in sorted id order.
///
/// Most data structures in this crate are indexed by an alternative's
/// position in its agenda, so two agendas with the same members always agree
/// on those indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Agenda {
    alts: Vec<Alternative>,
}

impl Agenda {
    /// Builds an agenda; rejects duplicates and the empty set.
    pub fn new(alts: impl IntoIterator<Item = Alternative>) -> Result<Self> {
        let mut alts: Vec<Alternative> = alts.into_iter().collect();
        if alts.is_empty() {
            return Err(Error::EmptyAgenda);
        }
        alts.sort();
        for w in alts.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateAlternative(w[0].to_string()));
            }
        }
        Ok(Agenda { alts })
    }

    /// Parses whitespace-separated ids.
    pub fn parse(ids: &str) -> Result<Self> {
        Agenda::new(
            ids.split_whitespace()
                .map(Alternative::new)
                .collect::<Result<Vec<_>>>()?,
        )
    }

    /// Builds an agenda from a set that is already known to be duplicate free.
    pub(crate) fn from_set(set: &BTreeSet<Alternative>) -> Result<Self> {
        if set.is_empty() {
            return Err(Error::EmptyAgenda);
        }
        Ok(Agenda {
            alts: set.iter().cloned().collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.alts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alts.is_empty()
    }

    pub fn alternatives(&self) -> &[Alternative] {
        &self.alts
    }

    pub fn get(&self, index: usize) -> &Alternative {
        &self.alts[index]
    }

    pub fn index_of(&self, x: &Alternative) -> Option<usize> {
        self.alts.binary_search(x).ok()
    }

    pub fn require_index(&self, x: &Alternative) -> Result<usize> {
        self.index_of(x)
            .ok_or_else(|| Error::ForeignAlternative(x.to_string()))
    }

    pub fn contains(&self, x: &Alternative) -> bool {
        self.index_of(x).is_some()
    }

    pub fn to_set(&self) -> BTreeSet<Alternative> {
        self.alts.iter().cloned().collect()
    }

    /// Validates a subset and returns it as a sorted agenda.
    pub fn subset(&self, subset: &[Alternative]) -> Result<Agenda> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        for x in subset {
            self.require_index(x)?;
        }
        Agenda::new(subset.iter().cloned())
    }

    /// Sorted indices of the members of `sub` within this agenda.
    pub(crate) fn indices_of(&self, sub: &Agenda) -> Result<Vec<usize>> {
        sub.alts.iter().map(|x| self.require_index(x)).collect()
    }

    pub fn union(&self, other: &Agenda) -> Agenda {
        let mut set = self.to_set();
        set.extend(other.alts.iter().cloned());
        Agenda::from_set(&set).expect("union of nonempty agendas")
    }

    pub fn intersection(&self, other: &Agenda) -> Vec<Alternative> {
        self.alts
            .iter()
            .filter(|x| other.contains(x))
            .cloned()
            .collect()
    }

    /// Members of `self` that are not in `other`.
    pub fn difference(&self, other: &Agenda) -> Vec<Alternative> {
        self.alts
            .iter()
            .filter(|x| !other.contains(x))
            .cloned()
            .collect()
    }
}

impl fmt::Display for Agenda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<&str> = self.alts.iter().map(|a| a.id()).collect();
        write!(f, "{{{}}}", ids.join(","))
    }
}

/// A strict ranking of every alternative of one agenda, best first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearOrder {
    ranking: Vec<Alternative>,
}

impl LinearOrder {
    pub fn new(ranking: Vec<Alternative>) -> Result<Self> {
        let set: BTreeSet<&Alternative> = ranking.iter().collect();
        if set.len() != ranking.len() {
            return Err(Error::WrongAlternatives);
        }
        if ranking.is_empty() {
            return Err(Error::EmptyAgenda);
        }
        Ok(LinearOrder { ranking })
    }

    /// Parses `a > b > c`.
    pub fn parse(text: &str) -> Result<Self> {
        let ranking = text
            .split('>')
            .map(|t| Alternative::new(t.trim()))
            .collect::<Result<Vec<_>>>()?;
        LinearOrder::new(ranking)
    }

    pub fn ranking(&self) -> &[Alternative] {
        &self.ranking
    }

    pub fn top(&self) -> &Alternative {
        &self.ranking[0]
    }

    /// Position-indexed form: agenda indices, best first.
    pub(crate) fn to_indices(&self, agenda: &Agenda) -> Result<Vec<usize>> {
        if self.ranking.len() != agenda.len() {
            return Err(Error::WrongAlternatives);
        }
        self.ranking
            .iter()
            .map(|x| agenda.index_of(x).ok_or(Error::WrongAlternatives))
            .collect()
    }

    pub(crate) fn from_indices(agenda: &Agenda, ranking: &[usize]) -> Self {
        LinearOrder {
            ranking: ranking.iter().map(|&i| agenda.get(i).clone()).collect(),
        }
    }
}

impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<&str> = self.ranking.iter().map(|a| a.id()).collect();
        f.write_str(&ids.join(" > "))
    }
}

/// A bijection from one agenda onto another of the same size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    map: BTreeMap<Alternative, Alternative>,
    source: Agenda,
    target: Agenda,
}

impl Relabeling {
    pub fn new(source: &Agenda, map: BTreeMap<Alternative, Alternative>) -> Result<Self> {
        if map.len() != source.len() {
            return Err(Error::NotBijective(format!(
                "maps {} alternatives, agenda has {}",
                map.len(),
                source.len()
            )));
        }
        for x in map.keys() {
            if !source.contains(x) {
                return Err(Error::NotBijective(format!("{x} is not in the source agenda")));
            }
        }
        let targets: BTreeSet<Alternative> = map.values().cloned().collect();
        if targets.len() != map.len() {
            return Err(Error::NotBijective("two alternatives share an image".into()));
        }
        Ok(Relabeling {
            map,
            source: source.clone(),
            target: Agenda::from_set(&targets)?,
        })
    }

    /// Permutation of an agenda given by pairs `(x, π(x))`; unmapped alternatives are fixed.
    pub fn from_pairs(source: &Agenda, pairs: &[(Alternative, Alternative)]) -> Result<Self> {
        let mut map: BTreeMap<Alternative, Alternative> = source
            .alternatives()
            .iter()
            .map(|x| (x.clone(), x.clone()))
            .collect();
        for (x, y) in pairs {
            if !source.contains(x) {
                return Err(Error::NotBijective(format!("{x} is not in the source agenda")));
            }
            map.insert(x.clone(), y.clone());
        }
        Relabeling::new(source, map)
    }

    pub fn identity(agenda: &Agenda) -> Self {
        Relabeling::from_pairs(agenda, &[]).expect("identity is bijective")
    }

    /// Permutation of an agenda sending its i-th alternative to its `perm[i]`-th.
    pub fn from_index_permutation(agenda: &Agenda, perm: &[usize]) -> Result<Self> {
        if perm.len() != agenda.len() || perm.iter().any(|&j| j >= agenda.len()) {
            return Err(Error::NotBijective("index permutation has wrong size".into()));
        }
        let map = perm
            .iter()
            .enumerate()
            .map(|(i, &j)| (agenda.get(i).clone(), agenda.get(j).clone()))
            .collect();
        Relabeling::new(agenda, map)
    }

    pub fn source(&self) -> &Agenda {
        &self.source
    }

    pub fn target(&self) -> &Agenda {
        &self.target
    }

    pub fn apply(&self, x: &Alternative) -> &Alternative {
        &self.map[x]
    }

    pub fn inverse(&self) -> Relabeling {
        let map = self.map.iter().map(|(x, y)| (y.clone(), x.clone())).collect();
        Relabeling::new(&self.target, map).expect("inverse of a bijection")
    }

    /// `idx[i]` is the target-agenda index of the source agenda's i-th alternative.
    pub(crate) fn index_map(&self) -> Vec<usize> {
        self.source
            .alternatives()
            .iter()
            .map(|x| self.target.index_of(self.apply(x)).expect("target member"))
            .collect()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Alternative, &Alternative)> {
        self.map.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn agenda_sorts_and_rejects_duplicates() {
        let a = Agenda::parse("c a b").unwrap();
        assert_eq!(a.alternatives(), &[alt("a"), alt("b"), alt("c")]);
        assert_eq!(Agenda::parse("a a"), Err(Error::DuplicateAlternative("a".into())));
        assert_eq!(Agenda::parse(""), Err(Error::EmptyAgenda));
    }

    #[test]
    fn alternative_ids_are_tokens() {
        assert!(Alternative::new("b'").is_ok());
        assert!(Alternative::new("").is_err());
        assert!(Alternative::new("a b").is_err());
    }

    #[test]
    fn order_parse() {
        let o = LinearOrder::parse("a > c > b").unwrap();
        assert_eq!(o.top(), &alt("a"));
        assert_eq!(o.to_string(), "a > c > b");
        assert!(LinearOrder::parse("a > a").is_err());
        let agenda = Agenda::parse("a b c").unwrap();
        assert_eq!(o.to_indices(&agenda).unwrap(), vec![0, 2, 1]);
        let short = LinearOrder::parse("a > b").unwrap();
        assert_eq!(short.to_indices(&agenda), Err(Error::WrongAlternatives));
    }

    #[test]
    fn relabeling_checks_bijectivity() {
        let agenda = Agenda::parse("a b c").unwrap();
        let swap = Relabeling::from_pairs(&agenda, &[(alt("a"), alt("b")), (alt("b"), alt("a"))]).unwrap();
        assert_eq!(swap.apply(&alt("a")), &alt("b"));
        assert_eq!(swap.index_map(), vec![1, 0, 2]);
        let bad = Relabeling::from_pairs(&agenda, &[(alt("a"), alt("b"))]);
        assert!(matches!(bad, Err(Error::NotBijective(_))));
        let renamed = Relabeling::from_pairs(&agenda, &[(alt("c"), alt("z"))]).unwrap();
        assert_eq!(renamed.target(), &Agenda::parse("a b z").unwrap());
        assert_eq!(renamed.inverse().target(), &agenda);
    }
}
