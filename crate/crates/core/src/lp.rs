//! Exact feasibility of `A x = b, x >= 0` by phase-one simplex with Bland's rule.

use num::{One, Signed, Zero};

use crate::rational::Q;

/// Returns some `x >= 0` with `a x = b`, or `None` if none exists.
pub fn nonneg_solution(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let m = a.len();
    let k = a.first().map_or(0, Vec::len);
    if m == 0 {
        return Some(vec![Q::zero(); k]);
    }
    let width = k + m + 1;
    let rhs = width - 1;
    let mut t: Vec<Vec<Q>> = Vec::with_capacity(m);
    for (i, (row, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_negative();
        let mut r = vec![Q::zero(); width];
        for (j, x) in row.iter().enumerate() {
            r[j] = if flip { -x.clone() } else { x.clone() };
        }
        r[k + i] = Q::one();
        r[rhs] = if flip { -bi.clone() } else { bi.clone() };
        t.push(r);
    }
    let mut basis: Vec<usize> = (k..k + m).collect();
    // Reduced costs of the phase-one objective (sum of artificials).
    let mut cost = vec![Q::zero(); width];
    for row in &t {
        for j in 0..k {
            cost[j] -= &row[j];
        }
        cost[rhs] -= &row[rhs];
    }

    loop {
        let Some(enter) = (0..k + m).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            leave = match leave {
                None => Some(i),
                Some(l) => {
                    let lhs = &t[i][rhs] * &t[l][enter];
                    let rhs_ = &t[l][rhs] * &t[i][enter];
                    if lhs < rhs_ || (lhs == rhs_ && basis[i] < basis[l]) {
                        Some(i)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        // Phase one is bounded below by zero, so an entering column always has a pivot.
        let l = leave.expect("phase-one objective is bounded");
        pivot(&mut t, &mut cost, l, enter);
        basis[l] = enter;
    }

    if !cost[rhs].is_zero() {
        return None;
    }
    let mut x = vec![Q::zero(); k];
    for (i, &j) in basis.iter().enumerate() {
        if j < k {
            x[j] = t[i][rhs].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<Q>], cost: &mut [Q], l: usize, e: usize) {
    let inv = Q::one() / &t[l][e];
    for x in t[l].iter_mut() {
        *x *= &inv;
    }
    let prow = t[l].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == l || row[e].is_zero() {
            continue;
        }
        let f = row[e].clone();
        for (x, y) in row.iter_mut().zip(&prow) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
    if !cost[e].is_zero() {
        let f = cost[e].clone();
        for (x, y) in cost.iter_mut().zip(&prow) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
}

/// Whether `point` is a convex combination of `points`.
pub fn in_convex_hull(point: &[Q], points: &[Vec<Q>]) -> bool {
    if points.is_empty() {
        return false;
    }
    let dim = point.len();
    let mut a: Vec<Vec<Q>> = (0..dim)
        .map(|c| points.iter().map(|p| p[c].clone()).collect())
        .collect();
    a.push(vec![Q::one(); points.len()]);
    let mut b = point.to_vec();
    b.push(Q::one());
    nonneg_solution(&a, &b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::dot;
    use crate::rational::{q, qi};

    #[test]
    fn finds_feasible_point() {
        let a = vec![vec![qi(1), qi(1), qi(0)], vec![qi(0), qi(1), qi(-1)]];
        let b = vec![qi(2), qi(-1)];
        let x = nonneg_solution(&a, &b).unwrap();
        assert!(x.iter().all(|v| !v.is_negative()));
        assert_eq!(dot(&a[0], &x), qi(2));
        assert_eq!(dot(&a[1], &x), qi(-1));
    }

    #[test]
    fn detects_infeasible() {
        let a = vec![vec![qi(1), qi(1)]];
        assert!(nonneg_solution(&a, &[qi(-1)]).is_none());
        let a = vec![vec![qi(1), qi(0)], vec![qi(1), qi(0)]];
        assert!(nonneg_solution(&a, &[qi(1), qi(2)]).is_none());
    }

    #[test]
    fn hull_membership() {
        let pts = vec![vec![qi(1), qi(0)], vec![qi(0), qi(1)]];
        assert!(in_convex_hull(&[q(1, 3), q(2, 3)], &pts));
        assert!(!in_convex_hull(&[q(1, 2), q(1, 3)], &pts));
        assert!(in_convex_hull(&[qi(1), qi(0)], &pts));
        assert!(!in_convex_hull(&[qi(1), qi(0)], &[]));
    }
}
