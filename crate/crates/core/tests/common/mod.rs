//! Helpers shared by the integration tests, including independent reference
//! implementations used as oracles.

#![allow(dead_code)]

use std::path::PathBuf;

use maxlot::{parse_ballots, LinearOrder, Profile, Q};
use num::{One, Signed, Zero};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("fixtures").join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).expect("fixture exists")
}

pub fn fixture(name: &str) -> Profile {
    parse_ballots(&fixture_text(name)).expect("fixture parses")
}

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// Solves `a x = b` by plain Gaussian elimination; `None` unless the solution is unique.
pub fn unique_solution(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let rows = a.len();
    let cols = a.first()?.len();
    let mut row = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        b.swap(row, p);
        for r in 0..rows {
            if r != row && !a[r][col].is_zero() {
                let f = &a[r][col] / &a[row][col];
                for c in col..cols {
                    let t = &f * &a[row][c];
                    a[r][c] -= t;
                }
                let t = &f * &b[row];
                b[r] -= t;
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    if pivot_cols.len() < cols {
        return None;
    }
    // Remaining rows must be consistent.
    if (row..rows).any(|r| !b[r].is_zero()) {
        return None;
    }
    Some((0..cols).map(|i| &b[i] / &a[i][pivot_cols[i]]).collect())
}

/// Rank by the same elimination, for checking affine independence.
pub fn rank(mut a: Vec<Vec<Q>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            let f = &a[i][c] / &a[r][c];
            for k in c..cols {
                let t = &f * &a[r][k];
                a[i][k] -= t;
            }
        }
        r += 1;
    }
    r
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut with_last = combinations(n - 1, k - 1);
    for c in with_last.iter_mut() {
        c.push(n - 1);
    }
    let mut out = combinations(n - 1, k);
    out.extend(with_last);
    out
}

/// Vertices of `{x : x >= 0, xᵀM >= 0, Σx = 1}` by trying every choice of
/// `n − 1` tight inequalities together with the normalization.
///
/// Every vertex of a polytope in this form is the unique solution of some
/// such system, and every feasible unique solution is a vertex, so no hull
/// pruning is needed.
pub fn oracle_vertices(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = m.len();
    // Inequality k < n is x_k >= 0; inequality n + j is column j of xᵀM.
    let ineq = |k: usize| -> Vec<Q> {
        if k < n {
            (0..n).map(|i| if i == k { Q::one() } else { Q::zero() }).collect()
        } else {
            (0..n).map(|i| m[i][k - n].clone()).collect()
        }
    };
    let mut found: Vec<Vec<Q>> = Vec::new();
    for tight in combinations(2 * n, n - 1) {
        let mut a: Vec<Vec<Q>> = tight.iter().map(|&k| ineq(k)).collect();
        let mut b = vec![Q::zero(); n - 1];
        a.push(vec![Q::one(); n]);
        b.push(Q::one());
        let Some(x) = unique_solution(a, b) else { continue };
        let feasible = (0..2 * n).all(|k| {
            let v: Q = ineq(k).iter().zip(&x).map(|(c, xi)| c * xi).sum();
            !v.is_negative()
        });
        if feasible && !found.contains(&x) {
            found.push(x);
        }
    }
    found.sort();
    found
}

/// Pairwise majority margins computed straight from the orders.
pub fn oracle_margins(p: &Profile) -> Vec<Vec<Q>> {
    let alts = p.agenda().alternatives();
    let n = alts.len();
    let mut m = vec![vec![Q::zero(); n]; n];
    for (order, w) in p.entries() {
        let pos: Vec<usize> = alts
            .iter()
            .map(|x| order.ranking().iter().position(|y| y == x).unwrap())
            .collect();
        for i in 0..n {
            for j in 0..n {
                if pos[i] < pos[j] {
                    m[i][j] += &w;
                } else if pos[i] > pos[j] {
                    m[i][j] -= &w;
                }
            }
        }
    }
    m
}

/// All orders of `ids` as `LinearOrder`s, via recursive insertion.
pub fn all_orders(ids: &[&str]) -> Vec<LinearOrder> {
    fn perms(items: &[String]) -> Vec<Vec<String>> {
        if items.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for (i, x) in items.iter().enumerate() {
            let mut rest = items.to_vec();
            rest.remove(i);
            for mut p in perms(&rest) {
                p.insert(0, x.clone());
                out.push(p);
            }
        }
        out
    }
    let items: Vec<String> = ids.iter().map(|s| s.to_string()).collect();
    perms(&items)
        .into_iter()
        .map(|p| LinearOrder::parse(&p.join(" > ")).unwrap())
        .collect()
}

/// Probability that three impartial-culture voters on three alternatives leave
/// no weak Condorcet winner, by enumerating all 6³ electorates.
pub fn oracle_no_weak_condorcet_3x3() -> Q {
    let orders = all_orders(&["a", "b", "c"]);
    let mut hits = 0i64;
    for x in &orders {
        for y in &orders {
            for z in &orders {
                let beats = |a: &str, b: &str| {
                    [x, y, z]
                        .iter()
                        .filter(|o| {
                            let r = o.ranking();
                            r.iter().position(|t| t.id() == a) < r.iter().position(|t| t.id() == b)
                        })
                        .count()
                };
                let winner = ["a", "b", "c"]
                    .iter()
                    .any(|a| ["a", "b", "c"].iter().all(|b| a == b || beats(a, b) >= beats(b, a)));
                if !winner {
                    hits += 1;
                }
            }
        }
    }
    q(hits, 216)
}
