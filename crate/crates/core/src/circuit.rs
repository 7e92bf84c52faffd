//! Brick-wall random circuits on a ring.

use std::fmt::Write as _;

use rand::Rng;

use crate::clifford::{sample_two_qubit_index, two_qubit_cliffords, TwoQubitClifford};
use crate::error::{Error, Result};
use crate::state::StabilizerState;

/// One two-qubit gate: qubit pair plus an index into the canonical enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Brick {
    pub a: usize,
    pub b: usize,
    pub gate_index: u16,
}

impl Brick {
    pub fn gate(&self) -> &'static TwoQubitClifford {
        &two_qubit_cliffords()[self.gate_index as usize]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrickWallCircuit {
    num_qubits: usize,
    layers: Vec<Vec<Brick>>,
}

/// Bonds of layer `layer` on a ring of `num_qubits`.
///
/// Even layers pair `(0,1), (2,3), …`; odd layers pair `(1,2), (3,4), …` and
/// close the ring with `(N-1, 0)` when `N` is even. For odd `N` qubit `N-1`
/// idles on even layers and qubit `0` on odd layers.
pub fn layer_pairs(num_qubits: usize, layer: usize) -> Vec<(usize, usize)> {
    let n = num_qubits;
    let start = layer % 2;
    (0..n / 2)
        .map(|k| {
            let a = start + 2 * k;
            (a, (a + 1) % n)
        })
        .collect()
}

/// Samples a depth-`depth` brick-wall circuit with independent uniform gates.
pub fn build_brick_wall<R: Rng + ?Sized>(
    num_qubits: usize,
    depth: usize,
    rng: &mut R,
) -> Result<BrickWallCircuit> {
    if num_qubits < 2 {
        return Err(Error::TooFewQubits {
            min: 2,
            found: num_qubits,
        });
    }
    let layers = (0..depth)
        .map(|layer| {
            layer_pairs(num_qubits, layer)
                .into_iter()
                .map(|(a, b)| Brick {
                    a,
                    b,
                    gate_index: sample_two_qubit_index(rng) as u16,
                })
                .collect()
        })
        .collect();
    let circuit = BrickWallCircuit { num_qubits, layers };
    debug_assert_eq!(circuit.check_invariants(), Ok(()));
    Ok(circuit)
}

impl BrickWallCircuit {
    /// Builds a circuit from explicit layers, checking ring adjacency and disjointness.
    pub fn from_layers(num_qubits: usize, layers: Vec<Vec<Brick>>) -> Result<Self> {
        if num_qubits < 2 {
            return Err(Error::TooFewQubits {
                min: 2,
                found: num_qubits,
            });
        }
        let circuit = Self { num_qubits, layers };
        circuit
            .check_invariants()
            .map_err(|r| crate::error::invalid("layers", r))?;
        Ok(circuit)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn layers(&self) -> &[Vec<Brick>] {
        &self.layers
    }

    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.num_qubits;
        for (l, layer) in self.layers.iter().enumerate() {
            let mut used = vec![false; n];
            for brick in layer {
                if brick.a >= n || brick.b >= n {
                    return Err(format!(
                        "layer {l}: pair ({}, {}) out of range",
                        brick.a, brick.b
                    ));
                }
                if (brick.a + 1) % n != brick.b && (brick.b + 1) % n != brick.a {
                    return Err(format!(
                        "layer {l}: pair ({}, {}) not adjacent",
                        brick.a, brick.b
                    ));
                }
                for q in [brick.a, brick.b] {
                    if std::mem::replace(&mut used[q], true) {
                        return Err(format!("layer {l}: qubit {q} used twice"));
                    }
                }
                if brick.gate_index as usize >= two_qubit_cliffords().len() {
                    return Err(format!(
                        "layer {l}: gate index {} out of range",
                        brick.gate_index
                    ));
                }
            }
        }
        Ok(())
    }

    /// The first `depth` layers.
    pub fn truncated(&self, depth: usize) -> Self {
        Self {
            num_qubits: self.num_qubits,
            layers: self.layers[..depth.min(self.layers.len())].to_vec(),
        }
    }

    /// One line per brick: `layer qubit_a qubit_b gate_index`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (l, layer) in self.layers.iter().enumerate() {
            for brick in layer {
                writeln!(out, "{l} {} {} {}", brick.a, brick.b, brick.gate_index).unwrap();
            }
        }
        out
    }
}

/// Applies one layer to the first `N` qubits of `state` without validation.
pub(crate) fn apply_layer_unchecked(state: &mut StabilizerState, layer: &[Brick]) {
    let gates = two_qubit_cliffords();
    for brick in layer {
        state.apply_two_qubit_gate_unchecked(&gates[brick.gate_index as usize], brick.a, brick.b);
    }
}

/// Applies `circuit` to a state with exactly the circuit's qubit count.
pub fn apply_circuit(state: &mut StabilizerState, circuit: &BrickWallCircuit) -> Result<()> {
    if state.num_qubits() != circuit.num_qubits {
        return Err(Error::DimensionMismatch {
            expected: circuit.num_qubits,
            found: state.num_qubits(),
        });
    }
    apply_circuit_to_system(state, circuit)
}

/// Applies `circuit` to the leading system qubits; any trailing reference
/// qubits are left alone.
pub fn apply_circuit_to_system(
    state: &mut StabilizerState,
    circuit: &BrickWallCircuit,
) -> Result<()> {
    if state.num_qubits() < circuit.num_qubits {
        return Err(Error::DimensionMismatch {
            expected: circuit.num_qubits,
            found: state.num_qubits(),
        });
    }
    for layer in &circuit.layers {
        apply_layer_unchecked(state, layer);
    }
    debug_assert_eq!(state.check_invariants(), Ok(()));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::QubitSubset;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pairs(c: &BrickWallCircuit, l: usize) -> Vec<(usize, usize)> {
        c.layers()[l].iter().map(|b| (b.a, b.b)).collect()
    }

    #[test]
    fn even_ring_layout() {
        let c = build_brick_wall(4, 2, &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        assert_eq!(pairs(&c, 0), [(0, 1), (2, 3)]);
        assert_eq!(pairs(&c, 1), [(1, 2), (3, 0)]);
    }

    #[test]
    fn odd_ring_idles_alternate() {
        let c = build_brick_wall(5, 2, &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        assert_eq!(pairs(&c, 0), [(0, 1), (2, 3)]);
        assert_eq!(pairs(&c, 1), [(1, 2), (3, 4)]);
        assert!(build_brick_wall(1, 2, &mut ChaCha8Rng::seed_from_u64(0)).is_err());
    }

    #[test]
    fn two_qubit_ring_has_one_brick_per_layer() {
        let c = build_brick_wall(2, 3, &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        assert_eq!(pairs(&c, 0), [(0, 1)]);
        assert_eq!(pairs(&c, 1), [(1, 0)]);
    }

    #[test]
    fn empty_circuit_is_identity() {
        let c = build_brick_wall(6, 0, &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        let mut state = StabilizerState::new_basis_state(6).unwrap();
        let before = state.clone();
        apply_circuit(&mut state, &c).unwrap();
        assert_eq!(state, before);
        assert!(c.dump().is_empty());
    }

    #[test]
    fn layer_order_is_irrelevant() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..20 {
            let c = build_brick_wall(8, 6, &mut rng).unwrap();
            let reversed = BrickWallCircuit::from_layers(
                8,
                c.layers()
                    .iter()
                    .map(|l| l.iter().rev().copied().collect())
                    .collect(),
            )
            .unwrap();
            let mut a = StabilizerState::new_basis_state(8).unwrap();
            let mut b = a.clone();
            apply_circuit(&mut a, &c).unwrap();
            apply_circuit(&mut b, &reversed).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn from_layers_rejects_bad_pairs() {
        let brick = |a, b| Brick {
            a,
            b,
            gate_index: 0,
        };
        assert!(BrickWallCircuit::from_layers(4, vec![vec![brick(0, 2)]]).is_err());
        assert!(BrickWallCircuit::from_layers(4, vec![vec![brick(0, 1), brick(1, 2)]]).is_err());
        assert!(BrickWallCircuit::from_layers(4, vec![vec![brick(3, 0)]]).is_ok());
    }

    #[test]
    fn dump_lists_every_brick() {
        let c = build_brick_wall(5, 3, &mut ChaCha8Rng::seed_from_u64(4)).unwrap();
        let dump = c.dump();
        assert_eq!(dump.lines().count(), 6);
        let first: Vec<usize> = dump
            .lines()
            .next()
            .unwrap()
            .split(' ')
            .map(|s| s.parse().unwrap())
            .collect();
        assert_eq!(first[..3], [0, 0, 1]);
        assert_eq!(first[3], c.layers()[0][0].gate_index as usize);
    }

    #[test]
    fn single_brick_mean_entropy_over_group() {
        let region = QubitSubset::new(vec![0], 2).unwrap();
        let total: usize = two_qubit_cliffords()
            .iter()
            .map(|g| {
                let mut s = StabilizerState::new_basis_state(2).unwrap();
                s.apply_two_qubit_gate(g, (0, 1)).unwrap();
                s.subsystem_entropy(&region).unwrap()
            })
            .sum();
        // 4608 of 11520 gates entangle |00>
        assert_eq!(total, 4608);
        assert!((total as f64 / 11520.0 - 0.4).abs() < 1e-15);
    }

    #[test]
    fn system_only_application_skips_reference() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let c = build_brick_wall(3, 4, &mut rng).unwrap();
        let encoded = QubitSubset::new(vec![1], 3).unwrap();
        let mut pure = StabilizerState::new_purified_state(3, 1, &encoded).unwrap();
        assert!(apply_circuit(&mut pure, &c).is_err());
        apply_circuit_to_system(&mut pure, &c).unwrap();
        let reference = QubitSubset::new(vec![3], 4).unwrap();
        assert_eq!(pure.subsystem_entropy(&reference).unwrap(), 1);
    }
}
