//! Random electorates and Monte Carlo statistics on Condorcet winners and
//! maximal-lottery supports.

use std::collections::BTreeMap;

use rand_chacha::rand_core::RngCore;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::agenda::{Agenda, LinearOrder};
use crate::axioms::numbered_agenda;
use crate::error::{Error, Result};
use crate::format::rational_json;
use crate::margins::margins;
use crate::profile::Profile;
use crate::rational::Q;
use crate::rng;
use crate::solver::{condorcet_from_margins, maximin_polytope};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    ImpartialCulture,
    /// Voters and alternatives uniform in the unit cube of this dimension.
    Spatial(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimConfig {
    pub generator: Generator,
    pub n_alternatives: usize,
    pub n_voters: usize,
    pub trials: usize,
    pub seed: u64,
}

impl SimConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidConfig(msg.to_string()));
        if self.trials == 0 {
            return bad("trials must be at least 1");
        }
        if self.n_voters == 0 {
            return bad("voters must be at least 1");
        }
        if self.n_alternatives < 2 {
            return bad("alternatives must be at least 2");
        }
        // Support enumeration visits every subset of the agenda.
        if self.n_alternatives > 16 {
            return bad("at most 16 alternatives are supported");
        }
        if self.generator == Generator::Spatial(0) {
            return bad("spatial dimension must be at least 1");
        }
        Ok(())
    }
}

fn from_rankings(agenda: &Agenda, rankings: Vec<Vec<usize>>) -> Profile {
    let entries: Vec<(LinearOrder, Q)> = rankings
        .into_iter()
        .map(|r| {
            let order = r.iter().map(|&i| agenda.get(i).clone()).collect();
            (LinearOrder::new(order).expect("permutation"), Q::from_integer(1.into()))
        })
        .collect();
    Profile::new(agenda, entries).expect("at least one voter")
}

fn impartial_culture_with(rng: &mut ChaCha8Rng, n_alternatives: usize, n_voters: usize) -> Profile {
    let agenda = numbered_agenda(n_alternatives);
    let rankings = (0..n_voters)
        .map(|_| {
            let mut r: Vec<usize> = (0..n_alternatives).collect();
            rng::shuffle(rng, &mut r);
            r
        })
        .collect();
    from_rankings(&agenda, rankings)
}

/// Alternatives and voters on a `2⁻³²` grid of the unit cube. Voters rank by
/// squared distance, computed exactly in integers, with ties going to the
/// alternative that comes first in the agenda.
fn spatial_with(rng: &mut ChaCha8Rng, n_alternatives: usize, n_voters: usize, dim: usize) -> Profile {
    let agenda = numbered_agenda(n_alternatives);
    let point = |rng: &mut ChaCha8Rng| -> Vec<u32> { (0..dim).map(|_| rng.next_u32()).collect() };
    let alts: Vec<Vec<u32>> = (0..n_alternatives).map(|_| point(rng)).collect();
    let rankings = (0..n_voters)
        .map(|_| {
            let v = point(rng);
            let mut r: Vec<(u128, usize)> = alts
                .iter()
                .enumerate()
                .map(|(i, a)| {
                    let d = a
                        .iter()
                        .zip(&v)
                        .map(|(&x, &y)| {
                            let diff = (x as i64 - y as i64).unsigned_abs() as u128;
                            diff * diff
                        })
                        .sum();
                    (d, i)
                })
                .collect();
            r.sort();
            r.into_iter().map(|(_, i)| i).collect()
        })
        .collect();
    from_rankings(&agenda, rankings)
}

/// `n_voters` uniformly random orders; each order's weight is its share of the voters.
pub fn gen_impartial_culture(n_alternatives: usize, n_voters: usize, seed: u64) -> Profile {
    impartial_culture_with(&mut rng::seeded(seed), n_alternatives, n_voters)
}

pub fn gen_spatial(n_alternatives: usize, n_voters: usize, dim: usize, seed: u64) -> Profile {
    spatial_with(&mut rng::seeded(seed), n_alternatives, n_voters, dim)
}

/// Trial `index` of a run seeded with `seed`.
pub fn trial_profile(cfg: &SimConfig, index: usize) -> Profile {
    let mut rng = rng::trial_rng(cfg.seed, index as u64);
    match cfg.generator {
        Generator::ImpartialCulture => impartial_culture_with(&mut rng, cfg.n_alternatives, cfg.n_voters),
        Generator::Spatial(dim) => spatial_with(&mut rng, cfg.n_alternatives, cfg.n_voters, dim),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimStats {
    pub trials: usize,
    pub weak_count: usize,
    pub strict_count: usize,
    pub condorcet_weak_freq: Q,
    pub condorcet_strict_freq: Q,
    /// Support size of the maximal lottery, over trials where it is unique.
    pub support_size_histogram: BTreeMap<usize, usize>,
    /// Trials with more than one maximal lottery.
    pub tied: usize,
    /// Mean over the histogram; `None` when every trial was tied.
    pub mean_support_size: Option<Q>,
}

impl SimStats {
    pub fn no_weak_freq(&self) -> Q {
        Q::from_integer(1.into()) - &self.condorcet_weak_freq
    }

    pub fn to_json(&self) -> Value {
        json!({
            "trials": self.trials,
            "condorcet_weak_count": self.weak_count,
            "condorcet_strict_count": self.strict_count,
            "condorcet_weak_freq": rational_json(&self.condorcet_weak_freq),
            "condorcet_strict_freq": rational_json(&self.condorcet_strict_freq),
            "support_size_histogram": self
                .support_size_histogram
                .iter()
                .map(|(k, v)| (k.to_string(), json!(v)))
                .collect::<serde_json::Map<_, _>>(),
            "tied": self.tied,
            "mean_support_size": self.mean_support_size.as_ref().map(rational_json),
        })
    }
}

/// Outcome of one trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrialOutcome {
    pub weak: bool,
    pub strict: bool,
    /// Support size of the unique maximal lottery, `None` when there are several.
    pub support: Option<usize>,
}

pub fn run_trial(cfg: &SimConfig, index: usize) -> TrialOutcome {
    let m = margins(&trial_profile(cfg, index));
    let cw = condorcet_from_margins(&m);
    let ml = maximin_polytope(&m);
    TrialOutcome {
        weak: !cw.weak.is_empty(),
        strict: cw.strict.is_some(),
        support: ml.unique().map(|l| l.support().len()),
    }
}

/// Sums counts over outcomes; the result does not depend on their order.
pub fn aggregate(outcomes: impl IntoIterator<Item = TrialOutcome>) -> SimStats {
    let mut trials = 0;
    let mut weak_count = 0;
    let mut strict_count = 0;
    let mut tied = 0;
    let mut hist = BTreeMap::new();
    for o in outcomes {
        trials += 1;
        weak_count += o.weak as usize;
        strict_count += o.strict as usize;
        match o.support {
            Some(k) => *hist.entry(k).or_insert(0) += 1,
            None => tied += 1,
        }
    }
    let frac = |a: usize, b: usize| Q::new(a.into(), b.max(1).into());
    let unique: usize = hist.values().sum();
    let mean = (unique > 0).then(|| {
        let total: usize = hist.iter().map(|(k, v)| k * v).sum();
        frac(total, unique)
    });
    SimStats {
        trials,
        weak_count,
        strict_count,
        condorcet_weak_freq: frac(weak_count, trials),
        condorcet_strict_freq: frac(strict_count, trials),
        support_size_histogram: hist,
        tied,
        mean_support_size: mean,
    }
}

pub fn run_sim(cfg: &SimConfig) -> Result<SimStats> {
    cfg.validate()?;
    Ok(aggregate((0..cfg.trials).map(|i| run_trial(cfg, i))))
}

/// Exact probability that `n_voters` impartial-culture voters over
/// `n_alternatives` produce no weak Condorcet winner, by enumerating every
/// assignment of orders to voters.
pub fn exact_no_weak_condorcet(n_alternatives: usize, n_voters: usize) -> Q {
    let orders = crate::profile::all_rankings(n_alternatives);
    let agenda = numbered_agenda(n_alternatives);
    let total = orders.len().pow(n_voters as u32);
    let mut hits = 0usize;
    let mut choice = vec![0usize; n_voters];
    for _ in 0..total {
        let p = from_rankings(&agenda, choice.iter().map(|&c| orders[c].clone()).collect());
        if condorcet_from_margins(&margins(&p)).weak.is_empty() {
            hits += 1;
        }
        for c in choice.iter_mut() {
            *c += 1;
            if *c < orders.len() {
                break;
            }
            *c = 0;
        }
    }
    Q::new(hits.into(), total.into())
}
