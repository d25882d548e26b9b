//! Exact maximal lotteries and the tools to study them.
//!
//! Profiles, lotteries and margins are exact rationals throughout. The crate
//! computes the full (possibly non-singleton) set of maximal lotteries of a
//! profile, compares it with random dictatorship, Borda and a cubed-margin
//! variant, and checks consistency axioms on concrete instances.

pub mod agenda;
pub mod axioms;
pub mod cli;
pub mod error;
pub mod format;
pub mod linalg;
pub mod lottery;
pub mod lp;
pub mod margins;
pub mod polytope;
pub mod profile;
pub mod rational;
pub mod rng;
pub mod rules;
pub mod sim;
pub mod solver;

pub use agenda::{alt, Agenda, Alternative, LinearOrder, Relabeling};
pub use axioms::{Axiom, AxiomVerdict, Witness};
pub use error::{Error, Result};
pub use format::{parse_ballots, parse_matrix, serialize_ballots};
pub use lottery::{compose_lottery, compose_lottery_sets, Lottery};
pub use margins::{cycle_decompose, is_regular, is_strongly_regular, margins, mcgarvey, CycleTerm, MarginMatrix};
pub use polytope::LotteryPolytope;
pub use profile::{compose_profiles, make_profile, mix, Profile};
pub use rules::{apply_rule, borda, ml_cubed, random_dictatorship, RuleId};
pub use sim::{gen_impartial_culture, gen_spatial, run_sim, Generator, SimConfig, SimStats};
pub use rational::{fmt_rational, parse_rational, q, qi, Q};
pub use solver::{
    condorcet_winners, essential_set, is_maximal, maximal_lotteries, maximin_polytope, sample,
    unique_maximal, CondorcetReport,
};
