//! Dense density matrices for small systems. Used only to cross-check the
//! stabilizer code in tests and validation.
//!
//! Basis index bit `q` is the computational value of qubit `q`.

use nalgebra::{Complex, DMatrix};

use crate::error::{Error, Result};
use crate::pauli::PauliString;
use crate::state::{check_subset, QubitSubset, StabilizerState};

pub type CMatrix = DMatrix<Complex<f64>>;

pub const MAX_DENSE_QUBITS: usize = 8;

fn check_size(num_qubits: usize) -> Result<()> {
    if num_qubits > MAX_DENSE_QUBITS {
        return Err(Error::OracleTooLarge {
            max: MAX_DENSE_QUBITS,
            found: num_qubits,
        });
    }
    Ok(())
}

fn mask_bits(p: &PauliString) -> (usize, usize) {
    let mut x = 0usize;
    let mut z = 0usize;
    for q in 0..p.num_qubits() {
        x |= (p.x_bit(q) as usize) << q;
        z |= (p.z_bit(q) as usize) << q;
    }
    (x, z)
}

/// Matrix of a signed Pauli string.
pub fn pauli_matrix(p: &PauliString) -> Result<CMatrix> {
    let n = p.num_qubits();
    check_size(n)?;
    let dim = 1usize << n;
    let (x, z) = mask_bits(p);
    // Y = iXZ on each qubit carrying both bits.
    let i_power = (x & z).count_ones() + 2 * p.is_negative() as u32;
    let base = match i_power % 4 {
        0 => Complex::new(1.0, 0.0),
        1 => Complex::new(0.0, 1.0),
        2 => Complex::new(-1.0, 0.0),
        _ => Complex::new(0.0, -1.0),
    };
    let mut m = CMatrix::zeros(dim, dim);
    for b in 0..dim {
        let v = if (b & z).count_ones() % 2 == 1 {
            -base
        } else {
            base
        };
        m[(b ^ x, b)] = v;
    }
    Ok(m)
}

/// `ρ = 2^{-N} Σ_{P ∈ S} P`, built as `2^{-N} ∏ (I + g_i)`.
pub fn dense_density_matrix(state: &StabilizerState) -> Result<CMatrix> {
    let n = state.num_qubits();
    check_size(n)?;
    let dim = 1usize << n;
    let mut rho = CMatrix::identity(dim, dim);
    for g in state.generators() {
        let term = CMatrix::identity(dim, dim) + pauli_matrix(g)?;
        rho = rho * term;
    }
    Ok(rho.scale(1.0 / dim as f64))
}

/// Reduced density matrix on `keep`, with `keep[k]` mapped to bit `k`.
pub fn partial_trace(rho: &CMatrix, num_qubits: usize, keep: &QubitSubset) -> Result<CMatrix> {
    check_size(num_qubits)?;
    check_subset(keep, num_qubits)?;
    let dim = 1usize << num_qubits;
    if rho.nrows() != dim || rho.ncols() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: rho.nrows(),
        });
    }
    let kept = keep.members();
    let traced: Vec<usize> = (0..num_qubits).filter(|q| !keep.contains(*q)).collect();
    let spread = |local: usize, qubits: &[usize]| {
        qubits
            .iter()
            .enumerate()
            .fold(0usize, |acc, (k, &q)| acc | ((local >> k) & 1) << q)
    };
    let sub = 1usize << kept.len();
    let env = 1usize << traced.len();
    let mut out = CMatrix::zeros(sub, sub);
    for i in 0..sub {
        let bi = spread(i, kept);
        for j in 0..sub {
            let bj = spread(j, kept);
            let mut acc = Complex::new(0.0, 0.0);
            for e in 0..env {
                let be = spread(e, &traced);
                acc += rho[(bi | be, bj | be)];
            }
            out[(i, j)] = acc;
        }
    }
    Ok(out)
}

/// Von Neumann entropy in bits of a Hermitian density matrix.
pub fn von_neumann_entropy(rho: &CMatrix) -> f64 {
    if rho.nrows() == 0 {
        return 0.0;
    }
    let eig = rho.clone().symmetric_eigen();
    eig.eigenvalues
        .iter()
        .filter(|&&l| l > 1e-12)
        .map(|&l| -l * l.log2())
        .sum()
}

/// Entropy of `region` computed through the dense density matrix.
pub fn dense_subsystem_entropy(state: &StabilizerState, region: &QubitSubset) -> Result<f64> {
    let rho = dense_density_matrix(state)?;
    let reduced = partial_trace(&rho, state.num_qubits(), region)?;
    Ok(von_neumann_entropy(&reduced))
}
