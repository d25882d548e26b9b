//! The repo's fixed random-number contract.
//!
//! Every random draw goes through ChaCha8 (`rand_chacha`) seeded with
//! `seed_from_u64`. Range draws read whole 64-bit words from `next_u64`, mask
//! off excess high bits and reject out-of-range values, so results depend only
//! on the ChaCha8 keystream and not on any higher-level `rand` algorithm.

use num::{BigUint, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent generator for trial `index` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform integer in `[0, bound)`.
pub fn below_u64(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    assert!(bound > 0, "empty range");
    let bits = 64 - (bound - 1).leading_zeros();
    let mask = if bits == 64 { u64::MAX } else { (1u64 << bits) - 1 };
    loop {
        let r = rng.next_u64() & mask;
        if r < bound {
            return r;
        }
    }
}

pub fn below(rng: &mut ChaCha8Rng, bound: usize) -> usize {
    below_u64(rng, bound as u64) as usize
}

/// Uniform integer in `[0, bound)` for arbitrarily large bounds.
///
/// Uses `bits(bound - 1)` bits taken from little-endian 64-bit words.
pub fn below_big(rng: &mut ChaCha8Rng, bound: &BigUint) -> BigUint {
    assert!(!bound.is_zero(), "empty range");
    let bits = (bound - 1u32).bits();
    if bits == 0 {
        return BigUint::zero();
    }
    let words = bits.div_ceil(64) as usize;
    let top_mask = match bits % 64 {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    };
    loop {
        let mut digits: Vec<u64> = (0..words).map(|_| rng.next_u64()).collect();
        if let Some(last) = digits.last_mut() {
            *last &= top_mask;
        }
        let limbs: Vec<u32> = digits
            .iter()
            .flat_map(|w| [*w as u32, (*w >> 32) as u32])
            .collect();
        let r = BigUint::from_slice(&limbs);
        if &r < bound {
            return r;
        }
    }
}

/// Fisher–Yates, swapping position `i` with a uniform `j <= i` from the top down.
pub fn shuffle<T>(rng: &mut ChaCha8Rng, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        let j = below(rng, i + 1);
        items.swap(i, j);
    }
}
