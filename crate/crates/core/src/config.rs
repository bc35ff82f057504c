/// Search caps and the seed for randomized fallbacks.
///
/// Every randomized search in this crate is backed by a deterministic
/// exhaustive fallback; the caps turn combinatorial blowup into an explicit
/// error instead of silence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest number of field elements `p^e` that an exhaustive enumeration
    /// of an endomorphism algebra may visit.
    pub max_enum_field_power: u128,
    /// Largest number of candidates visited when searching a hom space for an
    /// invertible element.
    pub max_hom_enum: u128,
    /// Largest number of nodes a submodule lattice may hold.
    pub max_submodules: usize,
    /// Cap on iterated projective covers; `None` picks `ell + dim` at the
    /// call site.
    pub pd_cap: Option<usize>,
    /// Seed for the randomized search fallbacks.
    pub seed: u64,
    /// Number of random trials before a randomized search gives up.
    pub random_trials: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_enum_field_power: 1 << 20,
            max_hom_enum: 1 << 16,
            max_submodules: 20_000,
            pd_cap: None,
            seed: 0x5eed_1234,
            random_trials: 512,
        }
    }
}

/// SplitMix64; a tiny deterministic generator so that reports are
/// byte-identical across runs with the same seed.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_is_deterministic() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }
}
