//! SplitMix64, the generator behind every random instance.
//!
//! State transition and output, all arithmetic wrapping modulo 2^64:
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! output z ^ (z >> 31)
//! ```
//!
//! Each `(seed, n, trial)` gets its own stream seeded with
//! `mix(seed ^ mix((n << 32) | trial))`, where `mix` is the output function
//! above applied to a single value, so trials can run in any order.
//! Integers in `[lo, hi]` are drawn by rejection: outputs at or above the
//! largest multiple of the span are discarded, the rest reduced modulo the
//! span.

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 output function on a single value.
pub fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Independent stream for one trial of an experiment.
    pub fn for_trial(seed: u64, n: usize, trial: usize) -> Self {
        let key = ((n as u64) << 32) | (trial as u64 & 0xFFFF_FFFF);
        SplitMix64::new(mix(seed ^ mix(key)))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix(self.state)
    }

    /// Uniform integer in `[lo, hi]`.
    pub fn range_inclusive(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range");
        let span = (hi as i128 - lo as i128 + 1) as u128;
        if span > u64::MAX as u128 {
            return self.next_u64() as i64;
        }
        let span = span as u64;
        let limit = u64::MAX - (u64::MAX % span);
        loop {
            let x = self.next_u64();
            if x < limit {
                return (lo as i128 + (x % span) as i128) as i64;
            }
        }
    }
}
