//! Vertex-represented polytopes of lotteries, and the exact geometry behind
//! them: extreme-point pruning, facet enumeration and vertex enumeration.
//!
//! Everything here is brute force over small constraint systems. That is the
//! intended scale: agendas of up to a dozen alternatives for the maximin
//! polytope, and about six for intersections of two polytopes.

use std::collections::BTreeSet;

use num::{One, Signed, Zero};

use crate::agenda::{Agenda, Alternative, Relabeling};
use crate::error::{Error, Result};
use crate::linalg::{dot, nullspace, rank, solve_affine};
use crate::lottery::Lottery;
use crate::lp::in_convex_hull;
use crate::rational::Q;

/// Sorted, duplicate-free points of which none is a convex combination of the others.
pub fn extreme_points(points: Vec<Vec<Q>>) -> Vec<Vec<Q>> {
    let mut pts: Vec<Vec<Q>> = points.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    let mut i = 0;
    while i < pts.len() {
        let others: Vec<Vec<Q>> = pts
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p.clone())
            .collect();
        if in_convex_hull(&pts[i], &others) {
            pts.remove(i);
        } else {
            i += 1;
        }
    }
    pts
}

/// Linear description `{x : a·x = b (equalities), a·x >= b (inequalities)}`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HalfSpaces {
    pub equalities: Vec<(Vec<Q>, Q)>,
    pub inequalities: Vec<(Vec<Q>, Q)>,
}

impl HalfSpaces {
    /// The standard simplex in `dim` coordinates.
    pub fn simplex(dim: usize) -> Self {
        let inequalities = (0..dim)
            .map(|i| {
                let mut a = vec![Q::zero(); dim];
                a[i] = Q::one();
                (a, Q::zero())
            })
            .collect();
        HalfSpaces {
            equalities: vec![(vec![Q::one(); dim], Q::one())],
            inequalities,
        }
    }

    pub fn extend(&mut self, other: HalfSpaces) {
        self.equalities.extend(other.equalities);
        self.inequalities.extend(other.inequalities);
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        self.equalities.iter().all(|(a, b)| &dot(a, x) == b)
            && self.inequalities.iter().all(|(a, b)| &dot(a, x) >= b)
    }
}

/// Affine hull equations and facet inequalities of `conv(vertices)`.
///
/// A facet is found through every affinely independent subset of `dim(P)`
/// vertices whose spanning hyperplane (inside the affine hull) leaves all
/// vertices on one side. Redundant duplicates are harmless to callers.
pub fn facets(vertices: &[Vec<Q>]) -> HalfSpaces {
    let Some(first) = vertices.first() else {
        return HalfSpaces::default();
    };
    let n = first.len();
    // Rows [v, -1]: a functional (a, b) vanishes on v iff a·v = b.
    let lifted: Vec<Vec<Q>> = vertices
        .iter()
        .map(|v| {
            let mut r = v.clone();
            r.push(-Q::one());
            r
        })
        .collect();
    let split = |w: &[Q]| (w[..n].to_vec(), w[n].clone());
    let equalities: Vec<(Vec<Q>, Q)> = nullspace(&lifted, n + 1).iter().map(|w| split(w)).collect();
    let dim = rank(&lifted) - 1;
    let mut inequalities = Vec::new();
    if dim > 0 {
        let mut seen = BTreeSet::new();
        for_each_combination(vertices.len(), dim, |subset| {
            let rows: Vec<Vec<Q>> = subset.iter().map(|&i| lifted[i].clone()).collect();
            if rank(&rows) != dim {
                return;
            }
            for w in nullspace(&rows, n + 1) {
                let values: Vec<Q> = lifted.iter().map(|r| dot(r, &w)).collect();
                if values.iter().all(Q::is_zero) {
                    continue;
                }
                let sign = if values.iter().all(|v| !v.is_negative()) {
                    Q::one()
                } else if values.iter().all(|v| !v.is_positive()) {
                    -Q::one()
                } else {
                    break;
                };
                let oriented: Vec<Q> = w.iter().map(|x| x * &sign).collect();
                let key = normalize_direction(&oriented);
                if seen.insert(key) {
                    inequalities.push(split(&oriented));
                }
                break;
            }
        });
    }
    HalfSpaces {
        equalities,
        inequalities,
    }
}

fn normalize_direction(v: &[Q]) -> Vec<Q> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let s = lead.abs();
            v.iter().map(|x| x / &s).collect()
        }
        None => v.to_vec(),
    }
}

/// Vertices of a bounded polyhedron given in `dim` coordinates.
///
/// Every vertex is the unique solution of the equalities plus some set of
/// tight inequalities; all such sets of the right size are tried.
pub fn enumerate_vertices(dim: usize, system: &HalfSpaces) -> Vec<Vec<Q>> {
    let eq_rows: Vec<Vec<Q>> = system.equalities.iter().map(|(a, _)| a.clone()).collect();
    let eq_rhs: Vec<Q> = system.equalities.iter().map(|(_, b)| b.clone()).collect();
    let Some(base) = solve_affine(&eq_rows, &eq_rhs, dim) else {
        return Vec::new();
    };
    let d = base.directions.len();
    let lift = |y: &[Q]| -> Vec<Q> {
        let mut x = base.point.clone();
        for (coef, dir) in y.iter().zip(&base.directions) {
            if coef.is_zero() {
                continue;
            }
            for (xi, di) in x.iter_mut().zip(dir) {
                *xi += coef * di;
            }
        }
        x
    };
    if d == 0 {
        return if system.contains(&base.point) {
            vec![base.point.clone()]
        } else {
            Vec::new()
        };
    }
    // Inequalities in the coordinates of the equality solution space.
    let reduced: Vec<(Vec<Q>, Q)> = system
        .inequalities
        .iter()
        .map(|(a, b)| {
            let row: Vec<Q> = base.directions.iter().map(|dir| dot(a, dir)).collect();
            (row, b - dot(a, &base.point))
        })
        .filter(|(row, _)| row.iter().any(|x| !x.is_zero()))
        .collect();
    let mut found = BTreeSet::new();
    for_each_combination(reduced.len(), d, |subset| {
        let rows: Vec<Vec<Q>> = subset.iter().map(|&i| reduced[i].0.clone()).collect();
        let rhs: Vec<Q> = subset.iter().map(|&i| reduced[i].1.clone()).collect();
        if let Some(sol) = solve_affine(&rows, &rhs, d) {
            if sol.is_unique() {
                let x = lift(&sol.point);
                if system.contains(&x) {
                    found.insert(x);
                }
            }
        }
    });
    found.into_iter().collect()
}

/// Calls `f` with every `k`-subset of `0..n` in lexicographic order.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// A convex set of lotteries, stored as its canonically sorted extreme points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LotteryPolytope {
    agenda: Agenda,
    vertices: Vec<Lottery>,
}

impl LotteryPolytope {
    /// Convex hull of the given lotteries; non-extreme points are dropped.
    pub fn from_points(agenda: &Agenda, points: Vec<Lottery>) -> Result<Self> {
        if points.iter().any(|p| p.agenda() != agenda) {
            return Err(Error::AgendaMismatch);
        }
        let raw = points.into_iter().map(|p| p.probs().to_vec()).collect();
        Ok(LotteryPolytope::from_vertices_unchecked(agenda, extreme_points(raw)))
    }

    /// Wraps vectors that are already the sorted extreme points of the set.
    pub(crate) fn from_vertices_unchecked(agenda: &Agenda, vertices: Vec<Vec<Q>>) -> Self {
        let mut vertices: Vec<Lottery> = vertices
            .into_iter()
            .map(|v| Lottery::new_unchecked(agenda.clone(), v))
            .collect();
        vertices.sort();
        vertices.dedup();
        LotteryPolytope {
            agenda: agenda.clone(),
            vertices,
        }
    }

    pub fn singleton(lottery: Lottery) -> Self {
        LotteryPolytope {
            agenda: lottery.agenda().clone(),
            vertices: vec![lottery],
        }
    }

    pub fn empty(agenda: &Agenda) -> Self {
        LotteryPolytope {
            agenda: agenda.clone(),
            vertices: Vec::new(),
        }
    }

    pub fn agenda(&self) -> &Agenda {
        &self.agenda
    }

    pub fn vertices(&self) -> &[Lottery] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The only member, if the set is a single lottery.
    pub fn unique(&self) -> Option<&Lottery> {
        match self.vertices.as_slice() {
            [v] => Some(v),
            _ => None,
        }
    }

    fn raw_vertices(&self) -> Vec<Vec<Q>> {
        self.vertices.iter().map(|v| v.probs().to_vec()).collect()
    }

    pub fn contains(&self, lottery: &Lottery) -> bool {
        if lottery.agenda() != &self.agenda {
            return false;
        }
        match self.vertices.as_slice() {
            [] => false,
            [v] => v == lottery,
            _ => self.vertices.contains(lottery) || in_convex_hull(lottery.probs(), &self.raw_vertices()),
        }
    }

    /// Whether every member of `self` belongs to `other`.
    pub fn is_subset_of(&self, other: &LotteryPolytope) -> bool {
        self.vertices.iter().all(|v| other.contains(v))
    }

    /// Members of `self` not in `other`, among `self`'s vertices.
    pub fn first_vertex_outside(&self, other: &LotteryPolytope) -> Option<&Lottery> {
        self.vertices.iter().find(|v| !other.contains(v))
    }

    pub fn intersect(&self, other: &LotteryPolytope) -> Result<LotteryPolytope> {
        if self.agenda != other.agenda {
            return Err(Error::AgendaMismatch);
        }
        if let Some(v) = self.unique() {
            return Ok(if other.contains(v) {
                self.clone()
            } else {
                LotteryPolytope::empty(&self.agenda)
            });
        }
        if let Some(v) = other.unique() {
            return Ok(if self.contains(v) {
                other.clone()
            } else {
                LotteryPolytope::empty(&self.agenda)
            });
        }
        if self.is_empty() || other.is_empty() {
            return Ok(LotteryPolytope::empty(&self.agenda));
        }
        let n = self.agenda.len();
        let mut system = HalfSpaces::simplex(n);
        system.extend(facets(&self.raw_vertices()));
        system.extend(facets(&other.raw_vertices()));
        let pts = enumerate_vertices(n, &system);
        Ok(LotteryPolytope::from_vertices_unchecked(&self.agenda, extreme_points(pts)))
    }

    pub fn permute(&self, relabeling: &Relabeling) -> Result<LotteryPolytope> {
        let vs = self
            .vertices
            .iter()
            .map(|v| v.permute(relabeling))
            .collect::<Result<Vec<_>>>()?;
        let raw = vs.into_iter().map(|v| v.probs().to_vec()).collect();
        Ok(LotteryPolytope::from_vertices_unchecked(relabeling.target(), raw))
    }

    /// Union of the supports of all members.
    pub fn support_union(&self) -> Vec<Alternative> {
        let set: BTreeSet<Alternative> = self.vertices.iter().flat_map(|v| v.support()).collect();
        set.into_iter().collect()
    }

    /// The face of members whose support lies inside `allowed`.
    pub fn restrict_support(&self, allowed: &[Alternative]) -> LotteryPolytope {
        let keep: Vec<Vec<Q>> = self
            .vertices
            .iter()
            .filter(|v| v.support().iter().all(|x| allowed.contains(x)))
            .map(|v| v.probs().to_vec())
            .collect();
        LotteryPolytope::from_vertices_unchecked(&self.agenda, keep)
    }

    pub fn extend_to(&self, agenda: &Agenda) -> Result<LotteryPolytope> {
        let raw = self
            .vertices
            .iter()
            .map(|v| Ok(v.extend_to(agenda)?.probs().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Ok(LotteryPolytope::from_vertices_unchecked(agenda, raw))
    }

    /// Projections of the vertices onto the coordinates of `coords`, pruned to extreme points.
    pub fn project(&self, coords: &[Alternative]) -> Result<Vec<Vec<Q>>> {
        let idx = coords
            .iter()
            .map(|x| self.agenda.require_index(x))
            .collect::<Result<Vec<_>>>()?;
        let raw = self
            .vertices
            .iter()
            .map(|v| idx.iter().map(|&i| v.probs()[i].clone()).collect())
            .collect();
        Ok(extreme_points(raw))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::agenda::alt;
    use crate::rational::{q, qi};

    fn abc() -> Agenda {
        Agenda::parse("a b c").unwrap()
    }

    fn lot(ps: &[Q]) -> Lottery {
        Lottery::new(&abc(), ps.to_vec()).unwrap()
    }

    #[test]
    fn prunes_interior_points() {
        let pts = vec![
            vec![qi(1), qi(0)],
            vec![q(1, 2), q(1, 2)],
            vec![qi(0), qi(1)],
            vec![qi(1), qi(0)],
        ];
        assert_eq!(extreme_points(pts), vec![vec![qi(0), qi(1)], vec![qi(1), qi(0)]]);
    }

    #[test]
    fn facets_of_simplex() {
        let verts = vec![
            vec![qi(1), qi(0), qi(0)],
            vec![qi(0), qi(1), qi(0)],
            vec![qi(0), qi(0), qi(1)],
        ];
        let h = facets(&verts);
        assert_eq!(h.equalities.len(), 1);
        assert_eq!(h.inequalities.len(), 3);
        assert!(h.contains(&[q(1, 3), q(1, 3), q(1, 3)]));
        assert!(!h.contains(&[q(-1, 3), q(2, 3), q(2, 3)]));
    }

    #[test]
    fn vertex_enumeration_of_simplex() {
        let vs = enumerate_vertices(3, &HalfSpaces::simplex(3));
        assert_eq!(vs.len(), 3);
    }

    #[test]
    fn intersecting_segments() {
        let ab = LotteryPolytope::from_points(&abc(), vec![lot(&[qi(1), qi(0), qi(0)]), lot(&[qi(0), qi(1), qi(0)])]).unwrap();
        let diag = LotteryPolytope::from_points(
            &abc(),
            vec![lot(&[qi(0), qi(0), qi(1)]), lot(&[q(1, 2), q(1, 2), qi(0)])],
        )
        .unwrap();
        let meet = ab.intersect(&diag).unwrap();
        assert_eq!(meet.vertices(), &[lot(&[q(1, 2), q(1, 2), qi(0)])]);

        let full = LotteryPolytope::from_points(
            &abc(),
            vec![lot(&[qi(1), qi(0), qi(0)]), lot(&[qi(0), qi(1), qi(0)]), lot(&[qi(0), qi(0), qi(1)])],
        )
        .unwrap();
        assert_eq!(full.intersect(&ab).unwrap(), ab);
        let c = LotteryPolytope::singleton(lot(&[qi(0), qi(0), qi(1)]));
        assert!(ab.intersect(&c).unwrap().is_empty());
    }

    #[test]
    fn membership_and_faces() {
        let full = LotteryPolytope::from_points(
            &abc(),
            vec![lot(&[qi(1), qi(0), qi(0)]), lot(&[qi(0), qi(1), qi(0)]), lot(&[qi(0), qi(0), qi(1)])],
        )
        .unwrap();
        assert!(full.contains(&lot(&[q(1, 6), q(1, 2), q(1, 3)])));
        let face = full.restrict_support(&[alt("a"), alt("c")]);
        assert_eq!(face.len(), 2);
        assert_eq!(full.support_union(), vec![alt("a"), alt("b"), alt("c")]);
        assert_eq!(full.project(&[alt("a")]).unwrap(), vec![vec![qi(0)], vec![qi(1)]]);
    }

    #[test]
    fn combinations() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| seen.push(c.to_vec()));
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 1]);
        assert_eq!(seen[5], vec![2, 3]);
        let mut count = 0;
        for_each_combination(3, 0, |_| count += 1);
        assert_eq!(count, 1);
    }
}
