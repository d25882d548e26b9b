//! Majority margins, regularity, and the two constructive matrix lemmas:
//! realizing any skew-symmetric matrix as (a multiple of) a margin matrix, and
//! peeling a regular matrix into weighted cycles.

use num::{One, Signed, Zero};

use crate::agenda::{Agenda, Alternative};
use crate::error::{Error, Result};
use crate::profile::{all_rankings, Profile};
use crate::rational::Q;

/// Skew-symmetric rational matrix indexed by an agenda.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarginMatrix {
    agenda: Agenda,
    m: Vec<Vec<Q>>,
}

impl MarginMatrix {
    /// Validates shape and skew-symmetry.
    pub fn new(agenda: &Agenda, rows: Vec<Vec<Q>>) -> Result<Self> {
        let n = agenda.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(format!("expected {n}x{n}")));
        }
        for i in 0..n {
            for j in i..n {
                if rows[i][j] != -rows[j][i].clone() {
                    return Err(Error::NotSkewSymmetric);
                }
            }
        }
        Ok(MarginMatrix {
            agenda: agenda.clone(),
            m: rows,
        })
    }

    pub fn zero(agenda: &Agenda) -> Self {
        let n = agenda.len();
        MarginMatrix {
            agenda: agenda.clone(),
            m: vec![vec![Q::zero(); n]; n],
        }
    }

    pub fn agenda(&self) -> &Agenda {
        &self.agenda
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.m
    }

    pub fn at(&self, i: usize, j: usize) -> &Q {
        &self.m[i][j]
    }

    pub fn get(&self, x: &Alternative, y: &Alternative) -> Result<Q> {
        let i = self.agenda.require_index(x)?;
        let j = self.agenda.require_index(y)?;
        Ok(self.m[i][j].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().flatten().all(Q::is_zero)
    }

    /// Entrywise image under an odd map (used for cubed margins).
    pub fn map_entries(&self, f: impl Fn(&Q) -> Q) -> MarginMatrix {
        MarginMatrix {
            agenda: self.agenda.clone(),
            m: self.m.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> MarginMatrix {
        self.map_entries(|x| x * c)
    }

    /// Sub-matrix on `subset`.
    pub fn restrict(&self, subset: &[Alternative]) -> Result<MarginMatrix> {
        let sub = self.agenda.subset(subset)?;
        let idx = self.agenda.indices_of(&sub)?;
        let m = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| self.m[i][j].clone()).collect())
            .collect();
        Ok(MarginMatrix { agenda: sub, m })
    }

    fn prefix_mask(&self, prefix: &[Alternative]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.agenda.len()];
        for x in prefix {
            mask[self.agenda.require_index(x)?] = true;
        }
        Ok(mask)
    }
}

/// `M(x, y) = R(x, y) - R(y, x)`.
pub fn margins(profile: &Profile) -> MarginMatrix {
    let pw = profile.pairwise_matrix();
    let n = pw.len();
    let m = (0..n)
        .map(|i| (0..n).map(|j| &pw[i][j] - &pw[j][i]).collect())
        .collect();
    MarginMatrix {
        agenda: profile.agenda().clone(),
        m,
    }
}

/// Every row of `prefix` sums to zero over `prefix`.
pub fn is_regular(m: &MarginMatrix, prefix: &[Alternative]) -> Result<bool> {
    let mask = m.prefix_mask(prefix)?;
    Ok((0..mask.len()).filter(|&i| mask[i]).all(|i| {
        (0..mask.len())
            .filter(|&j| mask[j])
            .map(|j| &m.m[i][j])
            .sum::<Q>()
            .is_zero()
    }))
}

/// All entries within `prefix × prefix` vanish.
pub fn is_strongly_regular(m: &MarginMatrix, prefix: &[Alternative]) -> Result<bool> {
    let mask = m.prefix_mask(prefix)?;
    let n = mask.len();
    Ok((0..n).all(|i| (0..n).all(|j| !(mask[i] && mask[j]) || m.m[i][j].is_zero())))
}

/// Builds a profile `R` and `c > 0` with `margins(R) = c·M`.
///
/// `R` blends, for every positive entry `M(i, j)`, the profile that is uniform
/// over all orders placing `j` directly below `i`, with weight proportional to
/// `M(i, j)`. Such a profile has margin 1 on `(i, j)` and 0 everywhere else, and
/// the construction commutes with any relabeling that leaves `M` invariant.
pub fn mcgarvey(m: &MarginMatrix) -> Result<(Profile, Q)> {
    let n = m.agenda.len();
    let total: Q = m.m.iter().flatten().filter(|x| x.is_positive()).sum();
    if total.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    let c = Q::one() / &total;
    // Orders of the other n-1 "slots": the (i, j) block plus every remaining alternative.
    let slot_orders = all_rankings(n - 1);
    let mut entries: Vec<(Vec<usize>, Q)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let w = &m.m[i][j];
            if !w.is_positive() {
                continue;
            }
            let rest: Vec<usize> = (0..n).filter(|&k| k != i && k != j).collect();
            for slots in &slot_orders {
                let mut ranking = Vec::with_capacity(n);
                for &s in slots {
                    if s == n - 2 {
                        ranking.push(i);
                        ranking.push(j);
                    } else {
                        ranking.push(rest[s]);
                    }
                }
                entries.push((ranking, w.clone()));
            }
        }
    }
    let profile = Profile::from_rankings(m.agenda.clone(), entries)?;
    Ok((profile, c))
}

/// One term `λ · C` of a cycle decomposition; `C` has `+1` on each edge
/// `cycle[k] -> cycle[k+1]` (wrapping around) and `-1` on the reverse edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleTerm {
    pub coefficient: Q,
    pub cycle: Vec<Alternative>,
}

impl CycleTerm {
    /// The signed incidence matrix of the cycle over `agenda`.
    pub fn incidence(&self, agenda: &Agenda) -> Result<MarginMatrix> {
        let n = agenda.len();
        let mut m = vec![vec![Q::zero(); n]; n];
        let idx = self
            .cycle
            .iter()
            .map(|x| agenda.require_index(x))
            .collect::<Result<Vec<_>>>()?;
        for k in 0..idx.len() {
            let (a, b) = (idx[k], idx[(k + 1) % idx.len()]);
            m[a][b] += Q::one();
            m[b][a] -= Q::one();
        }
        MarginMatrix::new(agenda, m)
    }
}

/// Writes a regular matrix supported on `prefix × prefix` as a positive
/// combination of directed cycles of length at least three.
///
/// Each step walks along strictly positive edges, always taking the
/// lowest-indexed successor, until a vertex repeats; the closed walk is a
/// cycle and is subtracted with its minimum edge weight. Zero row sums mean a
/// vertex entered along a positive edge has a positive outgoing edge, so the
/// walk never stalls. Each step zeroes at least one edge, which bounds the
/// number of terms by the number of edges.
pub fn cycle_decompose(m: &MarginMatrix, prefix: &[Alternative]) -> Result<Vec<CycleTerm>> {
    let mask = m.prefix_mask(prefix)?;
    let n = mask.len();
    for i in 0..n {
        for j in 0..n {
            if !(mask[i] && mask[j]) && !m.m[i][j].is_zero() {
                return Err(Error::NotRegular);
            }
        }
    }
    if !is_regular(m, prefix)? {
        return Err(Error::NotRegular);
    }
    let mut rest = m.m.clone();
    let mut terms = Vec::new();
    while let Some(start) = (0..n).find(|&i| rest[i].iter().any(|x| x.is_positive())) {
        let mut path = vec![start];
        let mut on_path = vec![usize::MAX; n];
        on_path[start] = 0;
        let cycle = loop {
            let cur = *path.last().expect("nonempty path");
            let next = (0..n)
                .find(|&j| rest[cur][j].is_positive())
                .expect("regular matrix: positive in-edge implies positive out-edge");
            if on_path[next] != usize::MAX {
                break path[on_path[next]..].to_vec();
            }
            on_path[next] = path.len();
            path.push(next);
        };
        debug_assert!(cycle.len() >= 3);
        let lambda = (0..cycle.len())
            .map(|k| rest[cycle[k]][cycle[(k + 1) % cycle.len()]].clone())
            .min()
            .expect("nonempty cycle");
        for k in 0..cycle.len() {
            let (a, b) = (cycle[k], cycle[(k + 1) % cycle.len()]);
            rest[a][b] -= &lambda;
            rest[b][a] += &lambda;
        }
        terms.push(CycleTerm {
            coefficient: lambda,
            cycle: cycle.iter().map(|&i| m.agenda.get(i).clone()).collect(),
        });
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agenda::{alt, LinearOrder};
    use crate::profile::make_profile;
    use crate::rational::{q, qi};

    fn example1() -> Profile {
        let agenda = Agenda::parse("a b c").unwrap();
        make_profile(
            &agenda,
            vec![
                (LinearOrder::parse("a>b>c").unwrap(), q(1, 2)),
                (LinearOrder::parse("a>c>b").unwrap(), q(1, 3)),
                (LinearOrder::parse("b>c>a").unwrap(), q(1, 6)),
            ],
        )
        .unwrap()
    }

    pub(crate) fn three_cycle(w: Q) -> MarginMatrix {
        let z = Q::zero();
        MarginMatrix::new(
            &Agenda::parse("a b c").unwrap(),
            vec![
                vec![z.clone(), w.clone(), -w.clone()],
                vec![-w.clone(), z.clone(), w.clone()],
                vec![w.clone(), -w.clone(), z.clone()],
            ],
        )
        .unwrap()
    }

    #[test]
    fn example_margins() {
        let m = margins(&example1());
        assert_eq!(m.get(&alt("a"), &alt("b")).unwrap(), q(2, 3));
        assert_eq!(m.get(&alt("b"), &alt("a")).unwrap(), q(-2, 3));

        let agenda = Agenda::parse("a b c").unwrap();
        let merged = make_profile(
            &agenda,
            vec![
                (LinearOrder::parse("a>b>c").unwrap(), q(1, 4)),
                (LinearOrder::parse("a>c>b").unwrap(), q(1, 4)),
                (LinearOrder::parse("b>c>a").unwrap(), q(1, 2)),
            ],
        )
        .unwrap();
        assert_eq!(margins(&merged).get(&alt("a"), &alt("b")).unwrap(), qi(0));

        let ab = Agenda::parse("a b").unwrap();
        let unanimous = Profile::unanimous(&ab, LinearOrder::parse("a>b").unwrap()).unwrap();
        assert_eq!(margins(&unanimous).get(&alt("a"), &alt("b")).unwrap(), qi(1));
    }

    #[test]
    fn regularity() {
        let abc = [alt("a"), alt("b"), alt("c")];
        let zero = MarginMatrix::zero(&Agenda::parse("a b c").unwrap());
        assert!(is_regular(&zero, &abc).unwrap());
        assert!(is_strongly_regular(&zero, &abc).unwrap());
        let cyc = three_cycle(q(1, 3));
        assert!(is_regular(&cyc, &abc).unwrap());
        assert!(!is_strongly_regular(&cyc, &abc).unwrap());
        assert!(is_strongly_regular(&cyc, &[alt("a")]).unwrap());
        assert!(!is_regular(&margins(&example1()), &abc).unwrap());
    }

    #[test]
    fn rejects_non_skew() {
        let agenda = Agenda::parse("a b").unwrap();
        assert_eq!(
            MarginMatrix::new(&agenda, vec![vec![qi(0), qi(1)], vec![qi(1), qi(0)]]),
            Err(Error::NotSkewSymmetric)
        );
        assert!(matches!(MarginMatrix::new(&agenda, vec![vec![qi(0)]]), Err(Error::Shape(_))));
    }

    #[test]
    fn mcgarvey_small_cases() {
        let agenda = Agenda::parse("1 2").unwrap();
        let m = MarginMatrix::new(&agenda, vec![vec![qi(0), qi(1)], vec![qi(-1), qi(0)]]).unwrap();
        let (r, c) = mcgarvey(&m).unwrap();
        assert_eq!(c, qi(1));
        assert_eq!(r.entries(), vec![(LinearOrder::parse("1>2").unwrap(), qi(1))]);

        let cyc = three_cycle(qi(1));
        let (r, c) = mcgarvey(&cyc).unwrap();
        assert_eq!(c, q(1, 3));
        assert_eq!(margins(&r), three_cycle(q(1, 3)));

        let agenda = Agenda::parse("1 2 3 4").unwrap();
        let mut rows = vec![vec![qi(0); 4]; 4];
        rows[0][1] = qi(2);
        rows[1][0] = qi(-2);
        rows[2][3] = qi(1);
        rows[3][2] = qi(-1);
        let m = MarginMatrix::new(&agenda, rows).unwrap();
        let (r, c) = mcgarvey(&m).unwrap();
        assert_eq!(c, q(1, 3));
        let mr = margins(&r);
        assert_eq!(mr, m.scale(&c));
        assert_eq!(mr.at(0, 1), &q(2, 3));
        assert_eq!(mr.at(2, 3), &q(1, 3));

        assert_eq!(mcgarvey(&MarginMatrix::zero(&agenda)), Err(Error::ZeroMatrix));
    }

    #[test]
    fn cycle_decomposition_cases() {
        let abc = [alt("a"), alt("b"), alt("c")];
        let zero = MarginMatrix::zero(&Agenda::parse("a b c").unwrap());
        assert!(cycle_decompose(&zero, &abc).unwrap().is_empty());

        let terms = cycle_decompose(&three_cycle(q(1, 3)), &abc).unwrap();
        assert_eq!(
            terms,
            vec![CycleTerm {
                coefficient: q(1, 3),
                cycle: abc.to_vec()
            }]
        );

        assert_eq!(cycle_decompose(&margins(&example1()), &abc), Err(Error::NotRegular));
        // nonzero outside the prefix
        assert_eq!(cycle_decompose(&three_cycle(qi(1)), &abc[..2]), Err(Error::NotRegular));
    }

    #[test]
    fn two_disjoint_cycles_reconstruct() {
        let agenda = Agenda::parse("1 2 3 4").unwrap();
        let c1 = CycleTerm { coefficient: q(1, 2), cycle: vec![alt("1"), alt("2"), alt("3")] };
        let c2 = CycleTerm { coefficient: q(1, 3), cycle: vec![alt("1"), alt("4"), alt("3")] };
        let mut rows = vec![vec![qi(0); 4]; 4];
        for t in [&c1, &c2] {
            let inc = t.incidence(&agenda).unwrap();
            for i in 0..4 {
                for j in 0..4 {
                    rows[i][j] += &t.coefficient * inc.at(i, j);
                }
            }
        }
        let m = MarginMatrix::new(&agenda, rows).unwrap();
        let all = agenda.alternatives().to_vec();
        let terms = cycle_decompose(&m, &all).unwrap();
        let mut rebuilt = vec![vec![qi(0); 4]; 4];
        for t in &terms {
            assert!(t.cycle.len() >= 3);
            assert!(t.coefficient > qi(0));
            let inc = t.incidence(&agenda).unwrap();
            for i in 0..4 {
                for j in 0..4 {
                    rebuilt[i][j] += &t.coefficient * inc.at(i, j);
                }
            }
        }
        assert_eq!(rebuilt, m.rows());
    }
}
