//! Stabilizer simulation of information scrambling in random Clifford circuits.
//!
//! Pauli strings and stabilizer states live in [`pauli`] and [`state`], gate
//! sampling in [`clifford`], brick-wall circuits in [`circuit`], per-sample
//! Holevo and coherent information in [`metrics`], Monte Carlo sweeps in
//! [`harness`], the exact Clifford-orbit average in [`exact`] and oracle
//! self-checks in [`validation`].

pub mod bits;
pub mod circuit;
pub mod clifford;
pub mod dense;
pub mod error;
pub mod exact;
pub mod harness;
pub mod metrics;
pub mod packed;
pub mod pauli;
pub mod seeding;
pub mod state;
pub mod validation;

pub use bits::{gf2_rank, BitVec};
pub use circuit::{apply_circuit, build_brick_wall, BrickWallCircuit};
pub use clifford::{
    apply_global_clifford, enumerate_two_qubit_cliffords, sample_global_clifford,
    sample_two_qubit_clifford, GlobalCliffordTableau, TwoQubitClifford,
};
pub use error::{Error, Result};
pub use metrics::{
    coherent_sample, draw_sample_spec, holevo_sample, Mode, SampleOutcome, SampleSpec,
};
pub use pauli::PauliString;
pub use state::{QubitSubset, StabilizerState};
