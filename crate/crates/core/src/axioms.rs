//! Executable consistency axioms.
//!
//! Each checker evaluates one rule on one concrete instance. A failed verdict
//! carries a witness: a lottery (or projected point) together with the profiles
//! involved, such that a single membership test reproduces the failure.

use std::fmt;
use std::str::FromStr;

use num::{One, Signed, Zero};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::agenda::{Agenda, Alternative, LinearOrder, Relabeling};
use crate::error::{Error, Result};
use crate::format::{lottery_json, profile_json, rational_json};
use crate::lottery::{compose_lottery_sets, Lottery};
use crate::lp::in_convex_hull;
use crate::margins::{mcgarvey, MarginMatrix};
use crate::polytope::LotteryPolytope;
use crate::profile::{mix, Profile};
use crate::rational::{fmt_rational, Q};
use crate::rng;
use crate::rules::{apply_rule, RuleId};
use crate::solver::condorcet_winners;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Population,
    StrongPopulation,
    Composition,
    Cloning,
    Condorcet,
    Neutrality,
    Unanimity,
    Agenda,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::Population,
        Axiom::StrongPopulation,
        Axiom::Composition,
        Axiom::Cloning,
        Axiom::Condorcet,
        Axiom::Neutrality,
        Axiom::Unanimity,
        Axiom::Agenda,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Population => "population",
            Axiom::StrongPopulation => "strong-population",
            Axiom::Composition => "composition",
            Axiom::Cloning => "cloning",
            Axiom::Condorcet => "condorcet",
            Axiom::Neutrality => "neutrality",
            Axiom::Unanimity => "unanimity",
            Axiom::Agenda => "agenda",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown axiom `{s}`")))
    }
}

/// Evidence for a failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `lottery` is chosen for both profiles but not for their mixture.
    Population {
        first: Profile,
        second: Profile,
        lambda: Q,
        lottery: Lottery,
    },
    /// The two sides share a lottery but differ; `lottery` lies in exactly one
    /// of them (`in_intersection` says which).
    StrongPopulation {
        first: Profile,
        second: Profile,
        lambda: Q,
        lottery: Lottery,
        in_intersection: bool,
    },
    /// `lottery` lies in exactly one of the composed set and `f(R)`.
    Composition {
        profile: Profile,
        component: Vec<Alternative>,
        b: Alternative,
        lottery: Lottery,
        in_composed: bool,
    },
    /// `point`, over the alternatives outside the component, is a projection of
    /// exactly one of `f(R)` and `f(R|A')`.
    Cloning {
        profile: Profile,
        component: Vec<Alternative>,
        b: Alternative,
        outside: Vec<Alternative>,
        point: Vec<Q>,
        from_full: bool,
    },
    /// A weak Condorcet winner whose degenerate lottery is not chosen.
    Condorcet { profile: Profile, winner: Alternative },
    /// `lottery` lies in exactly one of `π(f(R))` and `f(π(R))`.
    Neutrality {
        profile: Profile,
        relabeling: Relabeling,
        lottery: Lottery,
        in_image: bool,
    },
    /// A unanimous two-alternative profile whose outcome is not the degenerate top.
    Unanimity { profile: Profile, top: Alternative },
    /// `lottery` lies in exactly one side of the agenda-consistency equation.
    Agenda {
        profile: Profile,
        first: Vec<Alternative>,
        second: Vec<Alternative>,
        lottery: Lottery,
        in_union_side: bool,
    },
}

impl Witness {
    /// Re-runs the single test that the witness claims fails under `rule`.
    pub fn reproduces(&self, rule: RuleId) -> bool {
        self.try_reproduce(rule).unwrap_or(false)
    }

    fn try_reproduce(&self, rule: RuleId) -> Result<bool> {
        let f = |p: &Profile| apply_rule(rule, p);
        Ok(match self {
            Witness::Population { first, second, lambda, lottery } => {
                let m = mix_pair(first, second, lambda)?;
                f(first).contains(lottery) && f(second).contains(lottery) && !f(&m).contains(lottery)
            }
            Witness::StrongPopulation { first, second, lambda, lottery, in_intersection } => {
                let m = mix_pair(first, second, lambda)?;
                let both = f(first).intersect(&f(second))?;
                !both.is_empty() && both.contains(lottery) == *in_intersection && f(&m).contains(lottery) != *in_intersection
            }
            Witness::Composition { profile, component, b, lottery, in_composed } => {
                let composed = composed_outcome(rule, profile, component, b)?;
                composed.contains(lottery) == *in_composed && f(profile).contains(lottery) != *in_composed
            }
            Witness::Cloning { profile, component, b, point, from_full, .. } => {
                let (full, reduced) = cloning_projections(rule, profile, component, b)?;
                let (has, lacks) = if *from_full { (&full, &reduced) } else { (&reduced, &full) };
                in_convex_hull(point, has) && !in_convex_hull(point, lacks)
            }
            Witness::Condorcet { profile, winner } => {
                condorcet_winners(profile).weak.contains(winner)
                    && !f(profile).contains(&Lottery::degenerate(profile.agenda(), winner)?)
            }
            Witness::Neutrality { profile, relabeling, lottery, in_image } => {
                let image = f(profile).permute(relabeling)?;
                let direct = f(&profile.permute(relabeling)?);
                image.contains(lottery) == *in_image && direct.contains(lottery) != *in_image
            }
            Witness::Unanimity { profile, top } => {
                let target = Lottery::degenerate(profile.agenda(), top)?;
                profile.len() == 1
                    && profile.entries()[0].0.top() == top
                    && f(profile) != LotteryPolytope::singleton(target)
            }
            Witness::Agenda { profile, first, second, lottery, in_union_side } => {
                let (left, right) = agenda_sides(rule, profile, first, second)?;
                left.contains(lottery) == *in_union_side && right.contains(lottery) != *in_union_side
            }
        })
    }

    pub fn to_json(&self) -> Value {
        let alts = |xs: &[Alternative]| xs.iter().map(|x| x.id().to_string()).collect::<Vec<_>>();
        match self {
            Witness::Population { first, second, lambda, lottery } => json!({
                "kind": "population",
                "first": profile_json(first),
                "second": profile_json(second),
                "lambda": rational_json(lambda),
                "lottery": lottery_json(lottery),
            }),
            Witness::StrongPopulation { first, second, lambda, lottery, in_intersection } => json!({
                "kind": "strong-population",
                "first": profile_json(first),
                "second": profile_json(second),
                "lambda": rational_json(lambda),
                "lottery": lottery_json(lottery),
                "in_intersection": in_intersection,
            }),
            Witness::Composition { profile, component, b, lottery, in_composed } => json!({
                "kind": "composition",
                "profile": profile_json(profile),
                "component": alts(component),
                "b": b.id(),
                "lottery": lottery_json(lottery),
                "in_composed": in_composed,
            }),
            Witness::Cloning { profile, component, b, outside, point, from_full } => json!({
                "kind": "cloning",
                "profile": profile_json(profile),
                "component": alts(component),
                "b": b.id(),
                "outside": alts(outside),
                "point": point.iter().map(rational_json).collect::<Vec<_>>(),
                "from_full": from_full,
            }),
            Witness::Condorcet { profile, winner } => json!({
                "kind": "condorcet",
                "profile": profile_json(profile),
                "winner": winner.id(),
            }),
            Witness::Neutrality { profile, relabeling, lottery, in_image } => json!({
                "kind": "neutrality",
                "profile": profile_json(profile),
                "relabeling": relabeling
                    .pairs()
                    .map(|(x, y)| json!([x.id(), y.id()]))
                    .collect::<Vec<_>>(),
                "lottery": lottery_json(lottery),
                "in_image": in_image,
            }),
            Witness::Unanimity { profile, top } => json!({
                "kind": "unanimity",
                "profile": profile_json(profile),
                "top": top.id(),
            }),
            Witness::Agenda { profile, first, second, lottery, in_union_side } => json!({
                "kind": "agenda",
                "profile": profile_json(profile),
                "first": alts(first),
                "second": alts(second),
                "lottery": lottery_json(lottery),
                "in_union_side": in_union_side,
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub rule: RuleId,
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl AxiomVerdict {
    fn pass(axiom: Axiom, rule: RuleId) -> Self {
        AxiomVerdict { axiom, rule, passed: true, witness: None }
    }

    fn fail(axiom: Axiom, rule: RuleId, witness: Witness) -> Self {
        AxiomVerdict { axiom, rule, passed: false, witness: Some(witness) }
    }

    /// A pass carries no witness; a failure carries one that reproduces.
    pub fn revalidate(&self) -> bool {
        match (&self.witness, self.passed) {
            (None, true) => true,
            (Some(w), false) => w.reproduces(self.rule),
            _ => false,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "axiom": self.axiom.name(),
            "rule": self.rule.name(),
            "passed": self.passed,
            "witness": self.witness.as_ref().map(Witness::to_json),
        })
    }
}

fn mix_pair(first: &Profile, second: &Profile, lambda: &Q) -> Result<Profile> {
    if lambda.is_negative() || lambda > &Q::one() {
        return Err(Error::NotConvexCombination);
    }
    mix(&[(first.clone(), lambda.clone()), (second.clone(), Q::one() - lambda)])
}

/// Some vertex of `a` outside `b` or of `b` outside `a`, with a flag that is
/// true when it came from `a`.
fn distinguishing_vertex(a: &LotteryPolytope, b: &LotteryPolytope) -> Option<(Lottery, bool)> {
    if let Some(v) = a.first_vertex_outside(b) {
        return Some((v.clone(), true));
    }
    b.first_vertex_outside(a).map(|v| (v.clone(), false))
}

/// `f(R') ∩ f(R'') ⊆ f(λR' + (1−λ)R'')`.
pub fn check_population_consistency(rule: RuleId, first: &Profile, second: &Profile, lambda: &Q) -> Result<AxiomVerdict> {
    if first.agenda() != second.agenda() {
        return Err(Error::AgendaMismatch);
    }
    let mixture = mix_pair(first, second, lambda)?;
    let both = apply_rule(rule, first).intersect(&apply_rule(rule, second))?;
    let chosen = apply_rule(rule, &mixture);
    Ok(match both.first_vertex_outside(&chosen) {
        None => AxiomVerdict::pass(Axiom::Population, rule),
        Some(v) => AxiomVerdict::fail(
            Axiom::Population,
            rule,
            Witness::Population {
                first: first.clone(),
                second: second.clone(),
                lambda: lambda.clone(),
                lottery: v.clone(),
            },
        ),
    })
}

/// Equality variant: whenever `f(R') ∩ f(R'')` is nonempty it equals the mixture's outcome.
pub fn check_strong_population_consistency(
    rule: RuleId,
    first: &Profile,
    second: &Profile,
    lambda: &Q,
) -> Result<AxiomVerdict> {
    if first.agenda() != second.agenda() {
        return Err(Error::AgendaMismatch);
    }
    let mixture = mix_pair(first, second, lambda)?;
    let both = apply_rule(rule, first).intersect(&apply_rule(rule, second))?;
    if both.is_empty() {
        return Ok(AxiomVerdict::pass(Axiom::StrongPopulation, rule));
    }
    let chosen = apply_rule(rule, &mixture);
    Ok(match distinguishing_vertex(&both, &chosen) {
        None => AxiomVerdict::pass(Axiom::StrongPopulation, rule),
        Some((lottery, in_intersection)) => AxiomVerdict::fail(
            Axiom::StrongPopulation,
            rule,
            Witness::StrongPopulation {
                first: first.clone(),
                second: second.clone(),
                lambda: lambda.clone(),
                lottery,
                in_intersection,
            },
        ),
    })
}

fn component_parts(profile: &Profile, component: &[Alternative], b: &Alternative) -> Result<(Profile, Profile)> {
    if !component.contains(b) {
        return Err(Error::ForeignAlternative(b.to_string()));
    }
    if !profile.is_component(component)? {
        let names: Vec<&str> = component.iter().map(Alternative::id).collect();
        return Err(Error::NotComponent(format!("{{{}}}", names.join(","))));
    }
    let mut reduced: Vec<Alternative> = profile
        .agenda()
        .alternatives()
        .iter()
        .filter(|x| !component.contains(x))
        .cloned()
        .collect();
    reduced.push(b.clone());
    Ok((profile.restrict(&reduced)?, profile.restrict(component)?))
}

fn composed_outcome(rule: RuleId, profile: &Profile, component: &[Alternative], b: &Alternative) -> Result<LotteryPolytope> {
    let (outer, inner) = component_parts(profile, component, b)?;
    let pieces = compose_lottery_sets(apply_rule(rule, &outer).vertices(), apply_rule(rule, &inner).vertices(), b)?;
    LotteryPolytope::from_points(profile.agenda(), pieces)
}

/// `f(R|A') ×_b f(R|B) = f(R)` for a component `B ∋ b` and `A' = (A∖B) ∪ {b}`.
pub fn check_composition_consistency(
    rule: RuleId,
    profile: &Profile,
    component: &[Alternative],
    b: &Alternative,
) -> Result<AxiomVerdict> {
    let composed = composed_outcome(rule, profile, component, b)?;
    let direct = apply_rule(rule, profile);
    Ok(match distinguishing_vertex(&composed, &direct) {
        None => AxiomVerdict::pass(Axiom::Composition, rule),
        Some((lottery, in_composed)) => AxiomVerdict::fail(
            Axiom::Composition,
            rule,
            Witness::Composition {
                profile: profile.clone(),
                component: component.to_vec(),
                b: b.clone(),
                lottery,
                in_composed,
            },
        ),
    })
}

fn outside_of(profile: &Profile, component: &[Alternative]) -> Vec<Alternative> {
    profile
        .agenda()
        .alternatives()
        .iter()
        .filter(|x| !component.contains(x))
        .cloned()
        .collect()
}

/// Extreme points of the projections of `f(R)` and `f(R|A')` onto `A∖B`.
fn cloning_projections(
    rule: RuleId,
    profile: &Profile,
    component: &[Alternative],
    b: &Alternative,
) -> Result<(Vec<Vec<Q>>, Vec<Vec<Q>>)> {
    let (outer, _) = component_parts(profile, component, b)?;
    let outside = outside_of(profile, component);
    let full = apply_rule(rule, profile).project(&outside)?;
    let reduced = apply_rule(rule, &outer).project(&outside)?;
    Ok((full, reduced))
}

/// Probabilities outside a component do not depend on what happens inside it.
pub fn check_cloning_consistency(
    rule: RuleId,
    profile: &Profile,
    component: &[Alternative],
    b: &Alternative,
) -> Result<AxiomVerdict> {
    let (full, reduced) = cloning_projections(rule, profile, component, b)?;
    if full == reduced {
        return Ok(AxiomVerdict::pass(Axiom::Cloning, rule));
    }
    let witness = full
        .iter()
        .find(|p| !in_convex_hull(p, &reduced))
        .map(|p| (p.clone(), true))
        .or_else(|| reduced.iter().find(|p| !in_convex_hull(p, &full)).map(|p| (p.clone(), false)));
    // Both lists are pruned to extreme points, so distinct lists mean distinct hulls.
    let (point, from_full) = witness.expect("distinct extreme point sets");
    Ok(AxiomVerdict::fail(
        Axiom::Cloning,
        rule,
        Witness::Cloning {
            profile: profile.clone(),
            component: component.to_vec(),
            b: b.clone(),
            outside: outside_of(profile, component),
            point,
            from_full,
        },
    ))
}

/// Every weak Condorcet winner is chosen with probability one by some outcome.
pub fn check_condorcet_consistency(rule: RuleId, profile: &Profile) -> AxiomVerdict {
    let chosen = apply_rule(rule, profile);
    for w in condorcet_winners(profile).weak {
        let d = Lottery::degenerate(profile.agenda(), &w).expect("winner is in the agenda");
        if !chosen.contains(&d) {
            return AxiomVerdict::fail(
                Axiom::Condorcet,
                rule,
                Witness::Condorcet { profile: profile.clone(), winner: w },
            );
        }
    }
    AxiomVerdict::pass(Axiom::Condorcet, rule)
}

/// `π(f(R)) = f(π(R))`.
pub fn check_neutrality(rule: RuleId, profile: &Profile, relabeling: &Relabeling) -> Result<AxiomVerdict> {
    if relabeling.source() != profile.agenda() {
        return Err(Error::AgendaMismatch);
    }
    let image = apply_rule(rule, profile).permute(relabeling)?;
    let direct = apply_rule(rule, &profile.permute(relabeling)?);
    Ok(match distinguishing_vertex(&image, &direct) {
        None => AxiomVerdict::pass(Axiom::Neutrality, rule),
        Some((lottery, in_image)) => AxiomVerdict::fail(
            Axiom::Neutrality,
            rule,
            Witness::Neutrality {
                profile: profile.clone(),
                relabeling: relabeling.clone(),
                lottery,
                in_image,
            },
        ),
    })
}

/// One voter over two alternatives gets their top choice, in both directions.
pub fn check_unanimity(rule: RuleId) -> AxiomVerdict {
    let agenda = Agenda::parse("x y").expect("valid ids");
    for order in ["x > y", "y > x"] {
        let order = LinearOrder::parse(order).expect("valid order");
        let top = order.top().clone();
        let profile = Profile::unanimous(&agenda, order).expect("order over the agenda");
        let target = Lottery::degenerate(&agenda, &top).expect("top is in the agenda");
        if apply_rule(rule, &profile) != LotteryPolytope::singleton(target) {
            return AxiomVerdict::fail(Axiom::Unanimity, rule, Witness::Unanimity { profile, top });
        }
    }
    AxiomVerdict::pass(Axiom::Unanimity, rule)
}

/// Both sides over the full agenda: outcomes of `R` supported on `A₁ ∩ A₂`,
/// and the common outcomes of the two restrictions (zero-extended).
fn agenda_sides(
    rule: RuleId,
    profile: &Profile,
    first: &[Alternative],
    second: &[Alternative],
) -> Result<(LotteryPolytope, LotteryPolytope)> {
    let agenda = profile.agenda();
    let a1 = agenda.subset(first)?;
    let a2 = agenda.subset(second)?;
    if a1.union(&a2) != *agenda {
        return Err(Error::AgendaCover);
    }
    let shared = a1.intersection(&a2);
    if shared.is_empty() {
        return Err(Error::EmptyIntersection(a1.to_string(), a2.to_string()));
    }
    let left = apply_rule(rule, profile).restrict_support(&shared);
    let r1 = apply_rule(rule, &profile.restrict(first)?).extend_to(agenda)?.restrict_support(&shared);
    let r2 = apply_rule(rule, &profile.restrict(second)?).extend_to(agenda)?.restrict_support(&shared);
    Ok((left, r1.intersect(&r2)?))
}

/// `{p ∈ f(R) : supp(p) ⊆ A₁ ∩ A₂} = f(R|A₁) ∩ f(R|A₂)` when `A₁ ∪ A₂ = A`.
pub fn check_agenda_consistency(
    rule: RuleId,
    profile: &Profile,
    first: &[Alternative],
    second: &[Alternative],
) -> Result<AxiomVerdict> {
    let (left, right) = agenda_sides(rule, profile, first, second)?;
    Ok(match distinguishing_vertex(&left, &right) {
        None => AxiomVerdict::pass(Axiom::Agenda, rule),
        Some((lottery, in_union_side)) => AxiomVerdict::fail(
            Axiom::Agenda,
            rule,
            Witness::Agenda {
                profile: profile.clone(),
                first: first.to_vec(),
                second: second.to_vec(),
                lottery,
                in_union_side,
            },
        ),
    })
}

// Random instances.

/// Alternatives `x0, x1, ...`; ids sort numerically below ten.
pub fn numbered_agenda(n: usize) -> Agenda {
    Agenda::new((0..n).map(|i| Alternative::new(format!("x{i}")).expect("valid id"))).expect("nonempty agenda")
}

/// Between one and `max_voters` voters with uniformly random orders over `agenda`.
pub fn random_profile(rng: &mut ChaCha8Rng, agenda: &Agenda, max_voters: usize) -> Profile {
    let voters = 1 + rng::below(rng, max_voters);
    let entries = (0..voters).map(|_| {
        let mut ranking = agenda.alternatives().to_vec();
        rng::shuffle(rng, &mut ranking);
        (LinearOrder::new(ranking).expect("permutation of the agenda"), Q::from_integer(1.into()))
    });
    Profile::new(agenda, entries.collect::<Vec<_>>()).expect("positive weights")
}

/// Settings for random instance batches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BatchConfig {
    pub trials: usize,
    pub seed: u64,
    pub max_alternatives: usize,
    /// Also bounds the denominators of the generated weights.
    pub max_voters: usize,
}

impl Default for BatchConfig {
    fn default() -> Self {
        BatchConfig { trials: 200, seed: 1, max_alternatives: 5, max_voters: 6 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatchReport {
    pub axiom: Axiom,
    pub rule: RuleId,
    pub trials: usize,
    pub passed: usize,
    /// Failed verdicts, in trial order.
    pub failures: Vec<(usize, AxiomVerdict)>,
}

impl BatchReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "axiom": self.axiom.name(),
            "rule": self.rule.name(),
            "trials": self.trials,
            "passed": self.passed,
            "failed": self.failures.len(),
            "failures": self
                .failures
                .iter()
                .map(|(i, v)| json!({ "trial": i, "verdict": v.to_json() }))
                .collect::<Vec<_>>(),
        })
    }
}

/// A profile over `A' ∪ B` in which `B` is a component.
///
/// Each voter draws an order of `A'` and an order of `B` and splices the
/// second in at `b`. With finitely many voters the two parts are correlated,
/// unlike the product electorate of `compose_profiles`.
fn random_component_instance(rng: &mut ChaCha8Rng, cfg: &BatchConfig) -> (Profile, Vec<Alternative>, Alternative) {
    let n = 2 + rng::below(rng, cfg.max_alternatives.max(2) - 1);
    let inner_size = 1 + rng::below(rng, n);
    let agenda = numbered_agenda(n);
    let alts = agenda.alternatives();
    // Inner block: the last `inner_size` alternatives; b is its first member.
    let split = n - inner_size;
    let b = alts[split].clone();
    let voters = 1 + rng::below(rng, cfg.max_voters);
    let entries: Vec<(LinearOrder, Q)> = (0..voters)
        .map(|_| {
            let mut outer = alts[..=split].to_vec();
            let mut inner = alts[split..].to_vec();
            rng::shuffle(rng, &mut outer);
            rng::shuffle(rng, &mut inner);
            let order = outer
                .into_iter()
                .flat_map(|x| if x == b { inner.clone() } else { vec![x] })
                .collect();
            (LinearOrder::new(order).expect("permutation"), Q::one())
        })
        .collect();
    let profile = Profile::new(&agenda, entries).expect("positive weights");
    (profile, alts[split..].to_vec(), b)
}

fn random_size(rng: &mut ChaCha8Rng, cfg: &BatchConfig, min: usize) -> usize {
    let max = cfg.max_alternatives.max(min);
    min + rng::below(rng, max - min + 1)
}

/// Runs one randomly generated instance of `axiom` under `rule`.
pub fn random_instance(axiom: Axiom, rule: RuleId, rng: &mut ChaCha8Rng, cfg: &BatchConfig) -> AxiomVerdict {
    match axiom {
        Axiom::Population | Axiom::StrongPopulation => {
            let agenda = numbered_agenda(random_size(rng, cfg, 2));
            let first = random_profile(rng, &agenda, cfg.max_voters);
            let second = random_profile(rng, &agenda, cfg.max_voters);
            let lambda = Q::new(rng::below(rng, 7).into(), 6.into());
            let check = if axiom == Axiom::Population {
                check_population_consistency
            } else {
                check_strong_population_consistency
            };
            check(rule, &first, &second, &lambda).expect("shared agenda")
        }
        Axiom::Composition | Axiom::Cloning => {
            let (profile, component, b) = random_component_instance(rng, cfg);
            let check = if axiom == Axiom::Composition {
                check_composition_consistency
            } else {
                check_cloning_consistency
            };
            check(rule, &profile, &component, &b).expect("component by construction")
        }
        Axiom::Condorcet => {
            let agenda = numbered_agenda(random_size(rng, cfg, 1));
            check_condorcet_consistency(rule, &random_profile(rng, &agenda, cfg.max_voters))
        }
        Axiom::Neutrality => {
            let agenda = numbered_agenda(random_size(rng, cfg, 1));
            let profile = random_profile(rng, &agenda, cfg.max_voters);
            let mut perm: Vec<usize> = (0..agenda.len()).collect();
            rng::shuffle(rng, &mut perm);
            let pi = Relabeling::from_index_permutation(&agenda, &perm).expect("permutation");
            check_neutrality(rule, &profile, &pi).expect("relabeling over the agenda")
        }
        Axiom::Unanimity => check_unanimity(rule),
        Axiom::Agenda => {
            let agenda = numbered_agenda(random_size(rng, cfg, 2));
            let profile = random_profile(rng, &agenda, cfg.max_voters);
            // Each alternative goes to the first agenda, the second, or both; one is forced into both.
            let shared = rng::below(rng, agenda.len());
            let (mut first, mut second) = (Vec::new(), Vec::new());
            for (i, x) in agenda.alternatives().iter().enumerate() {
                let side = if i == shared { 2 } else { rng::below(rng, 3) };
                if side != 1 {
                    first.push(x.clone());
                }
                if side != 0 {
                    second.push(x.clone());
                }
            }
            check_agenda_consistency(rule, &profile, &first, &second).expect("covering, overlapping agendas")
        }
    }
}

/// Checks `axiom` on `cfg.trials` random instances, trial `i` drawing from stream `i` of `cfg.seed`.
pub fn run_batch(axiom: Axiom, rule: RuleId, cfg: &BatchConfig) -> BatchReport {
    let mut failures = Vec::new();
    for i in 0..cfg.trials {
        let mut rng = rng::trial_rng(cfg.seed, i as u64);
        let verdict = random_instance(axiom, rule, &mut rng, cfg);
        if !verdict.passed {
            failures.push((i, verdict));
        }
    }
    BatchReport {
        axiom,
        rule,
        trials: cfg.trials,
        passed: cfg.trials - failures.len(),
        failures,
    }
}

/// A population-consistency counterexample for the cubed-margin rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ml3Witness {
    pub first: Profile,
    pub second: Profile,
    pub lambda: Q,
    pub verdict: AxiomVerdict,
}

/// Searches four-alternative instances for a failure of population-consistency under ML³.
///
/// Both margin matrices contain the balanced cycle `a → b → c → a` with weight
/// 1/2, so the uniform lottery on `{a, b, c}` is ML³-maximal exactly when the
/// cubes of the margins of `a, b, c` against `d` sum to a nonnegative number.
/// Cubing is not additive: two columns with nonnegative cube sums can add up to
/// one with a negative cube sum. Each candidate pair is realized as profiles by
/// McGarvey's construction and mixed with the weight that makes the mixture's
/// margins proportional to the sum of the two matrices; the checker then
/// confirms the failure independently of this reasoning.
pub fn search_ml3_population_witness(seed: u64, attempts: usize) -> Option<Ml3Witness> {
    let agenda = Agenda::parse("a b c d").expect("valid ids");
    let mut rng = rng::seeded(seed);
    let draw = |rng: &mut ChaCha8Rng| -> Vec<Q> {
        (0..3).map(|_| Q::new((rng::below(rng, 21) as i64 - 10).into(), 10.into())).collect()
    };
    let cube_sum = |u: &[Q]| -> Q { u.iter().map(|x| x * x * x).sum() };
    for _ in 0..attempts {
        let u1 = draw(&mut rng);
        let u2 = draw(&mut rng);
        let sum: Vec<Q> = u1.iter().zip(&u2).map(|(x, y)| x + y).collect();
        if cube_sum(&u1).is_negative() || cube_sum(&u2).is_negative() || !cube_sum(&sum).is_negative() {
            continue;
        }
        let (Ok((first, c1)), Ok((second, c2))) = (
            mcgarvey(&cycle_with_column(&agenda, &u1)),
            mcgarvey(&cycle_with_column(&agenda, &u2)),
        ) else {
            continue;
        };
        let lambda = &c2 / (&c1 + &c2);
        let verdict = check_population_consistency(RuleId::Ml3, &first, &second, &lambda).expect("shared agenda");
        if !verdict.passed {
            return Some(Ml3Witness { first, second, lambda, verdict });
        }
    }
    None
}

fn cycle_with_column(agenda: &Agenda, column: &[Q]) -> MarginMatrix {
    let half = Q::new(1.into(), 2.into());
    let mut m = vec![vec![Q::zero(); 4]; 4];
    for (i, j) in [(0, 1), (1, 2), (2, 0)] {
        m[i][j] = half.clone();
        m[j][i] = -half.clone();
    }
    for (i, u) in column.iter().enumerate() {
        m[i][3] = u.clone();
        m[3][i] = -u.clone();
    }
    MarginMatrix::new(agenda, m).expect("skew-symmetric by construction")
}

/// Human-readable one-line summary of a verdict.
pub fn describe(verdict: &AxiomVerdict) -> String {
    let status = if verdict.passed { "passed" } else { "FAILED" };
    let either = |flag: bool, yes: &str, no: &str| if flag { (yes.to_string(), no.to_string()) } else { (no.to_string(), yes.to_string()) };
    let detail = match &verdict.witness {
        None => String::new(),
        Some(Witness::Population { lottery, lambda, .. }) => {
            format!("{lottery} is chosen for both profiles but not for the mixture at λ = {}", fmt_rational(lambda))
        }
        Some(Witness::StrongPopulation { lottery, in_intersection, .. }) => {
            let (has, lacks) = either(*in_intersection, "both profiles", "the mixture");
            format!("{lottery} is chosen for {has} but not for {lacks}")
        }
        Some(Witness::Composition { lottery, in_composed, .. }) => {
            let (has, lacks) = either(*in_composed, "the composed outcome", "the direct outcome");
            format!("{lottery} is in {has} but not in {lacks}")
        }
        Some(Witness::Cloning { outside, point, from_full, .. }) => {
            let (has, lacks) = either(*from_full, "the full profile", "the reduced profile");
            let coords: Vec<String> = outside.iter().zip(point).map(|(x, p)| format!("{x}: {}", fmt_rational(p))).collect();
            format!("({}) comes from {has} but not from {lacks}", coords.join(", "))
        }
        Some(Witness::Condorcet { winner, .. }) => format!("Condorcet winner {winner} is not chosen"),
        Some(Witness::Neutrality { lottery, in_image, .. }) => {
            let (has, lacks) = either(*in_image, "the relabeled outcome", "the outcome of the relabeled profile");
            format!("{lottery} is in {has} but not in {lacks}")
        }
        Some(Witness::Unanimity { top, .. }) => format!("a unanimous electorate's top choice {top} is not the outcome"),
        Some(Witness::Agenda { lottery, in_union_side, .. }) => {
            let (has, lacks) = either(*in_union_side, "the union agenda", "both smaller agendas");
            format!("{lottery} is chosen from {has} but not from {lacks}")
        }
    };
    let sep = if detail.is_empty() { "" } else { ": " };
    format!("{} / {}: {status}{sep}{detail}", verdict.axiom, verdict.rule)
}
