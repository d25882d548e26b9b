//! Dense exact linear algebra over the rationals.

use num::{One, Zero};

use crate::rational::Q;

/// Reduces `a` to reduced row echelon form in place; returns the pivot columns.
pub fn rref(a: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Q::one() / &a[r][c];
        for x in a[r][c..].iter_mut() {
            *x *= &inv;
        }
        let (above, rest) = a.split_at_mut(r);
        let (pivot_row, below) = rest.split_first_mut().expect("pivot row");
        for row in above.iter_mut().chain(below.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(a: &[Vec<Q>]) -> usize {
    let mut m = a.to_vec();
    rref(&mut m).len()
}

/// Solution set `point + span(directions)` of a linear system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSolution {
    pub point: Vec<Q>,
    pub directions: Vec<Vec<Q>>,
}

impl AffineSolution {
    pub fn is_unique(&self) -> bool {
        self.directions.is_empty()
    }
}

/// Solves `a x = b` for `x` in `ncols` unknowns; `None` when inconsistent.
pub fn solve_affine(a: &[Vec<Q>], b: &[Q], ncols: usize) -> Option<AffineSolution> {
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            debug_assert_eq!(row.len(), ncols);
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut point = vec![Q::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        point[c] = m[r][ncols].clone();
    }
    Some(AffineSolution {
        point,
        directions: kernel_from_rref(&m, &pivots, ncols),
    })
}

/// Basis of `{x : a x = 0}`.
pub fn nullspace(a: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m);
    kernel_from_rref(&m, &pivots, ncols)
}

fn kernel_from_rref(m: &[Vec<Q>], pivots: &[usize], ncols: usize) -> Vec<Vec<Q>> {
    let mut is_pivot = vec![false; ncols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Q::zero(); ncols];
            v[free] = Q::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m[r][free].clone();
            }
            v
        })
        .collect()
}

/// Dimension of the affine hull of `points` (`-1` is reported as `None`).
pub fn affine_dimension(points: &[Vec<Q>]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Vec<Vec<Q>> = rest
        .iter()
        .map(|p| p.iter().zip(first).map(|(x, y)| x - y).collect())
        .collect();
    Some(rank(&diffs))
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    #[test]
    fn solves_unique_system() {
        let a = vec![vec![qi(2), qi(1)], vec![qi(1), qi(-1)]];
        let s = solve_affine(&a, &[qi(3), qi(0)], 2).unwrap();
        assert!(s.is_unique());
        assert_eq!(s.point, vec![qi(1), qi(1)]);
    }

    #[test]
    fn reports_inconsistent_and_underdetermined() {
        let a = vec![vec![qi(1), qi(1)], vec![qi(2), qi(2)]];
        assert!(solve_affine(&a, &[qi(1), qi(3)], 2).is_none());
        let s = solve_affine(&a, &[qi(1), qi(2)], 2).unwrap();
        assert_eq!(s.directions.len(), 1);
        let d = &s.directions[0];
        assert_eq!(dot(&a[0], d), qi(0));
    }

    #[test]
    fn rank_and_affine_dimension() {
        let pts = vec![
            vec![qi(1), qi(0), qi(0)],
            vec![qi(0), qi(1), qi(0)],
            vec![q(1, 2), q(1, 2), qi(0)],
        ];
        assert_eq!(affine_dimension(&pts), Some(1));
        assert_eq!(rank(&pts), 2);
        assert_eq!(affine_dimension(&[]), None);
        assert_eq!(nullspace(&[vec![qi(1), qi(1), qi(1)]], 3).len(), 2);
    }
}
