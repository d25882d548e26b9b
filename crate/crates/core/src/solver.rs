//! Maximal lotteries: the optimal strategies of the symmetric zero-sum game
//! whose payoff matrix is the majority margin matrix.
//!
//! For a skew-symmetric `M` the game has value zero, so the maximal lotteries
//! are exactly `{x ∈ Δ : xᵀM >= 0}`. Its vertices are enumerated by support:
//! if `x` is maximal then `xᵀMx = 0` is a sum of nonnegative terms
//! `(xᵀM)_j x_j`, so every column in the support of `x` is tight. For a support
//! `S`, the system `Σ_{i∈S} x_i M(i,j) = 0 (j ∈ S), Σ x = 1` either pins `x`
//! down already or leaves a `d`-dimensional family that must be cut down by
//! `d` further tight columns outside `S`.

use num::{BigInt, One, Signed, Zero};

use crate::agenda::Alternative;
use crate::linalg::solve_affine;
use crate::lottery::Lottery;
use crate::margins::{margins, MarginMatrix};
use crate::polytope::for_each_combination;
pub use crate::polytope::LotteryPolytope;
use crate::profile::Profile;
use crate::rational::{integral_scaling, Q};
use crate::rng;

/// Vertices of `{x ∈ Δ(A) : xᵀM >= 0}` for a skew-symmetric `M`.
pub fn maximin_polytope(m: &MarginMatrix) -> LotteryPolytope {
    let agenda = m.agenda();
    let n = agenda.len();
    // Positive rescaling leaves the set unchanged and keeps the arithmetic on integers.
    let rows = integral_scaling(m.rows());
    let mut found = std::collections::BTreeSet::new();
    for mask in 1u64..(1u64 << n) {
        let support: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let outside: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 0).collect();
        let k = support.len();
        // Unknowns x_S; equations: tight columns of S, then the normalization.
        let mut eqs: Vec<Vec<Q>> = support
            .iter()
            .map(|&j| support.iter().map(|&i| rows[i][j].clone()).collect())
            .collect();
        eqs.push(vec![Q::one(); k]);
        let mut rhs = vec![Q::zero(); k];
        rhs.push(Q::one());
        let Some(base) = solve_affine(&eqs, &rhs, k) else {
            continue;
        };
        let d = base.directions.len();
        if d == 0 {
            if let Some(x) = accept(&rows, &support, &outside, base.point) {
                found.insert(x);
            }
            continue;
        }
        for_each_combination(outside.len(), d, |extra| {
            let mut eqs = eqs.clone();
            let mut rhs = rhs.clone();
            for &e in extra {
                let j = outside[e];
                eqs.push(support.iter().map(|&i| rows[i][j].clone()).collect());
                rhs.push(Q::zero());
            }
            if let Some(sol) = solve_affine(&eqs, &rhs, k) {
                if sol.is_unique() {
                    if let Some(x) = accept(&rows, &support, &outside, sol.point) {
                        found.insert(x);
                    }
                }
            }
        });
    }
    LotteryPolytope::from_vertices_unchecked(agenda, found.into_iter().collect())
}

/// Full-length vector if `x_S` is strictly positive and no column outside `S` is negative.
fn accept(rows: &[Vec<Q>], support: &[usize], outside: &[usize], xs: Vec<Q>) -> Option<Vec<Q>> {
    if xs.iter().any(|v| !v.is_positive()) {
        return None;
    }
    for &j in outside {
        let col: Q = support.iter().zip(&xs).map(|(&i, v)| v * &rows[i][j]).sum();
        if col.is_negative() {
            return None;
        }
    }
    let mut x = vec![Q::zero(); rows.len()];
    for (&i, v) in support.iter().zip(xs) {
        x[i] = v;
    }
    Some(x)
}

/// The set of maximal lotteries of a profile, as its vertex set.
pub fn maximal_lotteries(profile: &Profile) -> LotteryPolytope {
    maximin_polytope(&margins(profile))
}

/// Whether `q` is maximal: `qᵀM >= 0` against every degenerate lottery.
pub fn is_maximal(profile: &Profile, lottery: &Lottery) -> crate::Result<bool> {
    if lottery.agenda() != profile.agenda() {
        return Err(crate::Error::AgendaMismatch);
    }
    Ok(is_maximal_for(&margins(profile), lottery))
}

pub(crate) fn is_maximal_for(m: &MarginMatrix, lottery: &Lottery) -> bool {
    let n = m.agenda().len();
    (0..n).all(|j| {
        let col: Q = (0..n).map(|i| &lottery.probs()[i] * m.at(i, j)).sum();
        !col.is_negative()
    })
}

/// The maximal lottery, when there is exactly one.
pub fn unique_maximal(profile: &Profile) -> Option<Lottery> {
    maximal_lotteries(profile).unique().cloned()
}

/// Union of the supports of all maximal lotteries.
pub fn essential_set(profile: &Profile) -> Vec<Alternative> {
    maximal_lotteries(profile).support_union()
}

/// Weak and strict Condorcet winners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CondorcetReport {
    pub weak: Vec<Alternative>,
    pub strict: Option<Alternative>,
}

pub fn condorcet_winners(profile: &Profile) -> CondorcetReport {
    condorcet_from_margins(&margins(profile))
}

pub(crate) fn condorcet_from_margins(m: &MarginMatrix) -> CondorcetReport {
    let n = m.agenda().len();
    let mut weak = Vec::new();
    let mut strict = None;
    for i in 0..n {
        let row = (0..n).filter(|&j| j != i);
        if row.clone().all(|j| !m.at(i, j).is_negative()) {
            weak.push(m.agenda().get(i).clone());
            if row.clone().all(|j| m.at(i, j).is_positive()) {
                strict = Some(m.agenda().get(i).clone());
            }
        }
    }
    CondorcetReport { weak, strict }
}

/// Draws an alternative from a lottery, deterministically in `seed`.
///
/// Probabilities are scaled to integers over their common denominator `D`; a
/// uniform integer in `[0, D)` from ChaCha8 seeded with `seed` (see
/// [`crate::rng`]) selects the alternative whose cumulative range contains it,
/// in canonical agenda order.
pub fn sample(lottery: &Lottery, seed: u64) -> Alternative {
    let denom: BigInt = crate::rational::common_denominator(lottery.probs());
    let denom_u = denom.to_biguint().expect("positive denominator");
    let mut rng = rng::seeded(seed);
    let r = BigInt::from(rng::below_big(&mut rng, &denom_u));
    let mut acc = BigInt::zero();
    for (x, p) in lottery.agenda().alternatives().iter().zip(lottery.probs()) {
        acc += (p * Q::from_integer(denom.clone())).to_integer();
        if r < acc {
            return x.clone();
        }
    }
    unreachable!("probabilities sum to one")
}
