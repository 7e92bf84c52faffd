//! Column-major stabilizer states with at most 64 generators.
//!
//! Each qubit stores one word of X bits and one of Z bits, bit `i` belonging
//! to generator `i`. A two-qubit gate then updates all generators with a few
//! word operations, and subsystem entropy needs the rank of at most `2N`
//! single-word vectors.

use crate::clifford::TwoQubitClifford;
use crate::pauli::PauliString;
use crate::state::StabilizerState;

pub const MAX_PACKED_GENERATORS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackedState {
    num_generators: usize,
    x: Vec<u64>,
    z: Vec<u64>,
    signs: u64,
}

/// Rank of a set of words over GF(2).
fn word_rank(words: impl Iterator<Item = u64>) -> usize {
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for mut v in words {
        while v != 0 {
            let top = 63 - v.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = v;
                rank += 1;
                break;
            }
            v ^= basis[top];
        }
    }
    rank
}

impl PackedState {
    /// `None` when the state has more than 64 generators.
    pub fn from_state(state: &StabilizerState) -> Option<Self> {
        let g = state.num_generators();
        if g > MAX_PACKED_GENERATORS {
            return None;
        }
        let n = state.num_qubits();
        let mut packed = Self {
            num_generators: g,
            x: vec![0; n],
            z: vec![0; n],
            signs: 0,
        };
        for (i, gen) in state.generators().iter().enumerate() {
            for q in 0..n {
                packed.x[q] |= (gen.x_bit(q) as u64) << i;
                packed.z[q] |= (gen.z_bit(q) as u64) << i;
            }
            packed.signs |= (gen.is_negative() as u64) << i;
        }
        Some(packed)
    }

    pub fn to_state(&self) -> StabilizerState {
        let n = self.x.len();
        let generators = (0..self.num_generators)
            .map(|i| {
                let mut p = PauliString::identity(n);
                for q in 0..n {
                    p.set_qubit(q, self.x[q] >> i & 1 == 1, self.z[q] >> i & 1 == 1);
                }
                p.set_negative(self.signs >> i & 1 == 1);
                p
            })
            .collect();
        StabilizerState::from_generators(n, generators).expect("packed state keeps its invariants")
    }

    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    #[inline]
    pub fn apply_gate(&mut self, gate: &TwoQubitClifford, a: usize, b: usize) {
        debug_assert!(a != b && a < self.x.len() && b < self.x.len());
        let (out, flip) = gate.apply_bitsliced([self.x[a], self.z[a], self.x[b], self.z[b]]);
        self.x[a] = out[0];
        self.z[a] = out[1];
        self.x[b] = out[2];
        self.z[b] = out[3];
        self.signs ^= flip;
    }

    /// Entropy of a region of `region_len` qubits whose complement is `complement`.
    pub fn entropy_from_complement(&self, region_len: usize, complement: &[usize]) -> usize {
        let rank = word_rank(complement.iter().flat_map(|&q| [self.x[q], self.z[q]]));
        region_len + rank - self.num_generators
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{sample_two_qubit_clifford, two_qubit_cliffords};
    use crate::state::QubitSubset;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn bitsliced_gates_match_lookup_table() {
        for gate in two_qubit_cliffords().iter().step_by(7) {
            let input = [0xAAAA, 0xCCCC, 0xF0F0, 0xFF00];
            let (out, flip) = gate.apply_bitsliced(input);
            for p in 0..16usize {
                let entry = gate.lookup_table()[p];
                for j in 0..4 {
                    assert_eq!((out[j] >> p & 1) as u8, entry >> j & 1);
                }
                assert_eq!((flip >> p & 1) as u8, entry >> 4 & 1);
            }
        }
    }

    #[test]
    fn matches_row_representation() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let n = rng.gen_range(2..=40);
            let h = rng.gen_range(0..=n);
            let encoded = QubitSubset::new((0..h).collect(), n).unwrap();
            let mut rows = StabilizerState::new_mixed_encoding_state(n, &encoded).unwrap();
            let mut packed = PackedState::from_state(&rows).unwrap();
            for _ in 0..200 {
                let a = rng.gen_range(0..n);
                let b = (a + rng.gen_range(1..n)) % n;
                let gate = sample_two_qubit_clifford(&mut rng);
                rows.apply_two_qubit_gate(&gate, (a, b)).unwrap();
                packed.apply_gate(&gate, a, b);
            }
            assert_eq!(packed.to_state(), rows);
            for _ in 0..10 {
                let k = rng.gen_range(0..=n);
                let region = crate::metrics::random_subset(n, k, &mut rng);
                let complement: Vec<usize> = region.complement(n).iter().collect();
                assert_eq!(
                    packed.entropy_from_complement(region.len(), &complement),
                    rows.subsystem_entropy(&region).unwrap()
                );
            }
        }
    }

    #[test]
    fn too_many_generators_fall_back() {
        assert!(PackedState::from_state(&StabilizerState::new_basis_state(65).unwrap()).is_none());
        assert!(PackedState::from_state(&StabilizerState::new_basis_state(64).unwrap()).is_some());
    }
}
