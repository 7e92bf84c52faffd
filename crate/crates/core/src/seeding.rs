//! Per-sample random streams derived from a master seed.
//!
//! Every sample gets its own ChaCha stream keyed by the tuple that identifies
//! it, so results never depend on evaluation order or worker count.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Identifies one Monte Carlo sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SampleKey {
    pub master_seed: u64,
    /// Distinguishes experiment families sharing a master seed.
    pub mode_tag: u64,
    pub num_qubits: usize,
    pub amount: usize,
    pub n: usize,
    pub depth: usize,
    pub index: u64,
}

impl SampleKey {
    pub fn seed(&self) -> [u8; 32] {
        let fields = [
            self.master_seed,
            self.mode_tag,
            self.num_qubits as u64,
            self.amount as u64,
            self.n as u64,
            self.depth as u64,
            self.index,
        ];
        let mut state = 0u64;
        for f in fields {
            state = mix(state ^ mix(f));
        }
        let mut seed = [0u8; 32];
        for (k, chunk) in seed.chunks_exact_mut(8).enumerate() {
            chunk.copy_from_slice(&mix(state ^ k as u64).to_le_bytes());
        }
        seed
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::from_seed(self.seed())
    }
}
