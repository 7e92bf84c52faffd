//! Per-realization Holevo and coherent information.

use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::circuit::{apply_circuit_to_system, BrickWallCircuit};
use crate::clifford::{apply_global_clifford, GlobalCliffordTableau};
use crate::error::{invalid, Error, Result};
use crate::state::{QubitSubset, StabilizerState};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Holevo,
    Coherent,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Holevo => "holevo",
            Mode::Coherent => "coherent",
        }
    }

    pub(crate) fn tag(self) -> u64 {
        match self {
            Mode::Holevo => 0,
            Mode::Coherent => 1,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "holevo" => Ok(Mode::Holevo),
            "coherent" => Ok(Mode::Coherent),
            _ => Err(invalid(
                "mode",
                format!("expected holevo or coherent, got {s:?}"),
            )),
        }
    }
}

/// A unitary acting on the first `num_qubits()` qubits of a state.
pub trait SystemUnitary {
    fn num_qubits(&self) -> usize;
    fn apply_to_system(&self, state: &mut StabilizerState) -> Result<()>;
}

impl SystemUnitary for BrickWallCircuit {
    fn num_qubits(&self) -> usize {
        BrickWallCircuit::num_qubits(self)
    }

    fn apply_to_system(&self, state: &mut StabilizerState) -> Result<()> {
        apply_circuit_to_system(state, self)
    }
}

impl SystemUnitary for GlobalCliffordTableau {
    fn num_qubits(&self) -> usize {
        GlobalCliffordTableau::num_qubits(self)
    }

    fn apply_to_system(&self, state: &mut StabilizerState) -> Result<()> {
        if state.num_qubits() == self.num_qubits() {
            apply_global_clifford(state, self)
        } else {
            apply_global_clifford(state, &self.padded(state.num_qubits())?)
        }
    }
}

/// One Monte Carlo draw: retrieval subsystem `q` and encoded set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleSpec {
    pub num_qubits: usize,
    /// `H` classical bits or `C` logical qubits.
    pub amount: usize,
    pub n: usize,
    pub depth: usize,
    pub mode: Mode,
    pub q: QubitSubset,
    pub encoded: QubitSubset,
}

impl SampleSpec {
    pub fn validate(&self) -> Result<()> {
        check_ranges(self.num_qubits, self.amount, self.n)?;
        if self.q.len() != self.n {
            return Err(invalid(
                "q",
                format!("expected {} qubits, got {}", self.n, self.q.len()),
            ));
        }
        if self.encoded.len() != self.amount {
            return Err(invalid(
                "encoded",
                format!(
                    "expected {} qubits, got {}",
                    self.amount,
                    self.encoded.len()
                ),
            ));
        }
        for subset in [&self.q, &self.encoded] {
            if let Some(&q) = subset.members().last() {
                if q >= self.num_qubits {
                    return Err(Error::QubitOutOfRange {
                        index: q,
                        num_qubits: self.num_qubits,
                    });
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn check_ranges(num_qubits: usize, amount: usize, n: usize) -> Result<()> {
    if num_qubits < 1 {
        return Err(Error::TooFewQubits { min: 1, found: 0 });
    }
    if !(1..=num_qubits).contains(&amount) {
        return Err(invalid(
            "amount",
            format!("must lie in [1, {num_qubits}], got {amount}"),
        ));
    }
    if !(1..=num_qubits).contains(&n) {
        return Err(invalid(
            "n",
            format!("must lie in [1, {num_qubits}], got {n}"),
        ));
    }
    Ok(())
}

/// Result of one realization; the value is an integer number of bits.
///
/// In Holevo mode the entropies are `S_Q(U ρ_H U†)` and `S_Q(U |0…0⟩)`.
/// In coherent mode they are `S(ρ^Q)` and the entropy exchange `S(ρ^{QR})`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleOutcome {
    pub mode: Mode,
    pub value: i64,
    pub entropy_mixed: usize,
    pub entropy_pure: usize,
}

fn check_unitary(spec: &SampleSpec, expected: Mode, unitary_qubits: usize) -> Result<()> {
    if spec.mode != expected {
        return Err(invalid(
            "mode",
            format!("{expected} sample requested for a {} spec", spec.mode),
        ));
    }
    spec.validate()?;
    if unitary_qubits != spec.num_qubits {
        return Err(Error::DimensionMismatch {
            expected: spec.num_qubits,
            found: unitary_qubits,
        });
    }
    Ok(())
}

/// `χ = S_Q(U ρ_H U†) − S_Q(U |0…0⟩⟨0…0| U†)` for a single realization `U`.
pub fn holevo_sample<U: SystemUnitary + ?Sized>(
    spec: &SampleSpec,
    unitary: &U,
) -> Result<SampleOutcome> {
    check_unitary(spec, Mode::Holevo, unitary.num_qubits())?;
    let mut mixed = StabilizerState::new_mixed_encoding_state(spec.num_qubits, &spec.encoded)?;
    let mut pure = StabilizerState::new_basis_state(spec.num_qubits)?;
    unitary.apply_to_system(&mut mixed)?;
    unitary.apply_to_system(&mut pure)?;
    let s_mixed = mixed.subsystem_entropy_unchecked(&spec.q);
    let s_pure = pure.subsystem_entropy_unchecked(&spec.q);
    let value = s_mixed as i64 - s_pure as i64;
    debug_assert!(value >= 0 && value <= spec.amount.min(2 * spec.n) as i64);
    Ok(SampleOutcome {
        mode: Mode::Holevo,
        value,
        entropy_mixed: s_mixed,
        entropy_pure: s_pure,
    })
}

/// `η = S(ρ^Q) − S(ρ^{QR})` with `R` the purifying reference.
pub fn coherent_sample<U: SystemUnitary + ?Sized>(
    spec: &SampleSpec,
    unitary: &U,
) -> Result<SampleOutcome> {
    check_unitary(spec, Mode::Coherent, unitary.num_qubits())?;
    let n = spec.num_qubits;
    let c = spec.amount;
    let mut state = StabilizerState::new_purified_state(n, c, &spec.encoded)?;
    unitary.apply_to_system(&mut state)?;
    let s_q = state.subsystem_entropy_unchecked(&spec.q);
    let qr = QubitSubset::new(spec.q.iter().chain(n..n + c).collect(), n + c)?;
    let s_qr = state.subsystem_entropy_unchecked(&qr);
    let value = s_q as i64 - s_qr as i64;
    debug_assert!(value.unsigned_abs() as usize <= c);
    Ok(SampleOutcome {
        mode: Mode::Coherent,
        value,
        entropy_mixed: s_q,
        entropy_pure: s_qr,
    })
}

/// Dispatches on `spec.mode`.
pub fn evaluate<U: SystemUnitary + ?Sized>(
    spec: &SampleSpec,
    unitary: &U,
) -> Result<SampleOutcome> {
    match spec.mode {
        Mode::Holevo => holevo_sample(spec, unitary),
        Mode::Coherent => coherent_sample(spec, unitary),
    }
}

/// Uniformly random subset of `size` qubits out of `num_qubits`.
pub fn random_subset<R: Rng + ?Sized>(num_qubits: usize, size: usize, rng: &mut R) -> QubitSubset {
    let members = index::sample(rng, num_qubits, size).into_vec();
    QubitSubset::new(members, num_qubits).expect("sampled indices are distinct and in range")
}

/// Draws `Q` and the encoded set independently and uniformly.
pub fn draw_sample_spec<R: Rng + ?Sized>(
    num_qubits: usize,
    amount: usize,
    n: usize,
    depth: usize,
    mode: Mode,
    rng: &mut R,
) -> Result<SampleSpec> {
    check_ranges(num_qubits, amount, n)?;
    let q = random_subset(num_qubits, n, rng);
    let encoded = random_subset(num_qubits, amount, rng);
    Ok(SampleSpec {
        num_qubits,
        amount,
        n,
        depth,
        mode,
        q,
        encoded,
    })
}
