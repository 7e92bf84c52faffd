//! Clifford unitaries as Pauli-image tableaus, with uniform samplers.
//!
//! A Clifford is stored (up to global phase) by the signed images of the
//! single-qubit generators `X_q, Z_q` under conjugation `P ↦ U P U†`.

use std::collections::HashMap;
use std::sync::OnceLock;

use rand::Rng;

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::pauli::PauliString;
use crate::state::StabilizerState;

/// Order of the two-qubit Clifford group modulo phases.
pub const TWO_QUBIT_CLIFFORD_COUNT: usize = 11520;

/// Conjugates `p` given the images of every `X_q` and `Z_q`.
///
/// Uses `Y = i X Z` per qubit, so the product of the two images picks up one
/// extra power of `i`; the total phase of a Hermitian image is always `±1`.
pub(crate) fn conjugate_pauli(
    p: &PauliString,
    x_images: &[PauliString],
    z_images: &[PauliString],
) -> PauliString {
    let out_qubits = x_images[0].num_qubits();
    let mut acc = PauliString::identity(out_qubits);
    let mut phase = 2 * p.is_negative() as u32;
    for q in 0..p.num_qubits() {
        let (x, z) = (p.x_bit(q), p.z_bit(q));
        if x {
            phase += acc.mul_assign_phase(&x_images[q]);
        }
        if z {
            phase += acc.mul_assign_phase(&z_images[q]);
        }
        if x && z {
            phase += 1;
        }
    }
    phase %= 4;
    debug_assert!(phase % 2 == 0, "conjugated Pauli is not Hermitian");
    acc.set_negative(phase == 2);
    acc
}

/// Signed images satisfy the canonical commutation relations and are independent.
fn check_symplectic(
    x_images: &[PauliString],
    z_images: &[PauliString],
) -> std::result::Result<(), String> {
    let n = x_images.len();
    if z_images.len() != n {
        return Err("image count mismatch".into());
    }
    for i in 0..n {
        for j in 0..n {
            if x_images[i].anticommutes_with(&x_images[j]) {
                return Err(format!("X images {i},{j} anticommute"));
            }
            if z_images[i].anticommutes_with(&z_images[j]) {
                return Err(format!("Z images {i},{j} anticommute"));
            }
            if x_images[i].anticommutes_with(&z_images[j]) != (i == j) {
                return Err(format!(
                    "X image {i} and Z image {j} have wrong commutation"
                ));
            }
        }
    }
    // Canonical relations already force independence; checked anyway since it
    // is cheap and guards malformed input.
    let rows: Vec<BitVec> = x_images
        .iter()
        .chain(z_images)
        .map(|p| symplectic_vector(p))
        .collect();
    if crate::bits::gf2_rank(&rows) != 2 * n {
        return Err("images are not independent".into());
    }
    Ok(())
}

fn symplectic_vector(p: &PauliString) -> BitVec {
    let n = p.num_qubits();
    let mut v = BitVec::zeros(2 * n);
    for q in 0..n {
        v.set(q, p.x_bit(q));
        v.set(n + q, p.z_bit(q));
    }
    v
}

fn pauli_from_symplectic(v: &BitVec, sign: bool) -> PauliString {
    let n = v.len() / 2;
    let mut p = PauliString::identity(n);
    for q in 0..n {
        p.set_qubit(q, v.get(q), v.get(n + q));
    }
    p.set_negative(sign);
    p
}

fn symplectic_product(u: &BitVec, v: &BitVec) -> bool {
    let n = u.len() / 2;
    let mut parity = false;
    for q in 0..n {
        parity ^= (u.get(q) & v.get(n + q)) ^ (u.get(n + q) & v.get(q));
    }
    parity
}

/// A two-qubit Clifford: images of `X⊗I, Z⊗I, I⊗X, I⊗Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoQubitClifford {
    images: [PauliString; 4],
    /// Conjugation table indexed by `x_a | z_a<<1 | x_b<<2 | z_b<<3`; the
    /// entry holds the output bits in the same layout plus a sign flip in bit 4.
    table: [u8; 16],
    /// Output bit `j` is the parity of the input bits in `linear[j]`.
    linear: [u8; 4],
    /// Sign flip as a GF(2) polynomial in the input bits: bit `p` set means
    /// the monomial `∏_{i ∈ p} input_i` is present.
    sign_monomials: u16,
}

impl TwoQubitClifford {
    /// Builds a gate from the images of `X⊗I, Z⊗I, I⊗X, I⊗Z`.
    pub fn from_images(images: [PauliString; 4]) -> Result<Self> {
        if images.iter().any(|p| p.num_qubits() != 2) {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: images
                    .iter()
                    .map(|p| p.num_qubits())
                    .find(|&n| n != 2)
                    .unwrap(),
            });
        }
        let xs = [images[0].clone(), images[2].clone()];
        let zs = [images[1].clone(), images[3].clone()];
        check_symplectic(&xs, &zs).map_err(|r| crate::error::invalid("images", r))?;
        let mut table = [0u8; 16];
        for (idx, entry) in table.iter_mut().enumerate() {
            let mut p = PauliString::identity(2);
            p.set_qubit(0, idx & 1 != 0, idx & 2 != 0);
            p.set_qubit(1, idx & 4 != 0, idx & 8 != 0);
            let out = conjugate_pauli(&p, &xs, &zs);
            *entry = out.x_bit(0) as u8
                | (out.z_bit(0) as u8) << 1
                | (out.x_bit(1) as u8) << 2
                | (out.z_bit(1) as u8) << 3
                | (out.is_negative() as u8) << 4;
        }
        let mut linear = [0u8; 4];
        for (j, mask) in linear.iter_mut().enumerate() {
            for i in 0..4 {
                *mask |= ((table[1 << i] >> j) & 1) << i;
            }
        }
        // Möbius transform of the sign truth table gives its algebraic normal form.
        let mut anf: [u8; 16] = table.map(|e| e >> 4 & 1);
        for i in 0..4 {
            for p in 0..16 {
                if p & (1 << i) != 0 {
                    anf[p] ^= anf[p ^ (1 << i)];
                }
            }
        }
        let sign_monomials = (0..16).fold(0u16, |acc, p| acc | (anf[p] as u16) << p);
        Ok(Self {
            images,
            table,
            linear,
            sign_monomials,
        })
    }

    pub fn identity() -> Self {
        Self::from_images([
            "XI".parse().unwrap(),
            "ZI".parse().unwrap(),
            "IX".parse().unwrap(),
            "IZ".parse().unwrap(),
        ])
        .expect("identity is symplectic")
    }

    /// Images of `X⊗I, Z⊗I, I⊗X, I⊗Z`, in that order.
    pub fn images(&self) -> &[PauliString; 4] {
        &self.images
    }

    pub(crate) fn lookup_table(&self) -> &[u8; 16] {
        &self.table
    }

    /// Applies the gate to 64 generators at once, given their bits on the two
    /// qubits as words `[x_a, z_a, x_b, z_b]`; returns the new words and the
    /// mask of generators whose sign flips.
    #[inline]
    pub(crate) fn apply_bitsliced(&self, input: [u64; 4]) -> ([u64; 4], u64) {
        let mut out = [0u64; 4];
        for (j, o) in out.iter_mut().enumerate() {
            let mask = self.linear[j];
            for (i, word) in input.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    *o ^= word;
                }
            }
        }
        let mut flip = 0u64;
        let mut monomials = self.sign_monomials;
        while monomials != 0 {
            let p = monomials.trailing_zeros();
            monomials &= monomials - 1;
            let mut term = !0u64;
            for (i, word) in input.iter().enumerate() {
                if p >> i & 1 == 1 {
                    term &= word;
                }
            }
            flip ^= term;
        }
        (out, flip)
    }

    /// `U P U†` for a two-qubit Pauli `P`.
    pub fn conjugate(&self, p: &PauliString) -> PauliString {
        let idx = p.x_bit(0) as usize
            | (p.z_bit(0) as usize) << 1
            | (p.x_bit(1) as usize) << 2
            | (p.z_bit(1) as usize) << 3;
        let out = self.table[idx];
        let mut r = PauliString::identity(2);
        r.set_qubit(0, out & 1 != 0, out & 2 != 0);
        r.set_qubit(1, out & 4 != 0, out & 8 != 0);
        r.set_negative(p.is_negative() ^ (out & 16 != 0));
        r
    }

    /// The gate that applies `self` first and then `then`.
    pub fn then(&self, then: &TwoQubitClifford) -> TwoQubitClifford {
        let images = self.images.clone().map(|p| then.conjugate(&p));
        Self::from_images(images).expect("composition of Cliffords is Clifford")
    }

    /// 20-bit code: five bits (`x0 z0 x1 z1 sign`) per image.
    pub fn key(&self) -> u32 {
        self.images.iter().enumerate().fold(0u32, |acc, (i, p)| {
            let code = p.x_bit(0) as u32
                | (p.z_bit(0) as u32) << 1
                | (p.x_bit(1) as u32) << 2
                | (p.z_bit(1) as u32) << 3
                | (p.is_negative() as u32) << 4;
            acc | code << (5 * i)
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Embeds the gate on `(a, b)` of an `n`-qubit register.
    pub fn embed(&self, num_qubits: usize, a: usize, b: usize) -> Result<GlobalCliffordTableau> {
        if a == b {
            return Err(Error::RepeatedPairQubit(a));
        }
        for q in [a, b] {
            if q >= num_qubits {
                return Err(Error::QubitOutOfRange {
                    index: q,
                    num_qubits,
                });
            }
        }
        let mut t = GlobalCliffordTableau::identity(num_qubits);
        let lift = |p: &PauliString| {
            let mut out = PauliString::identity(num_qubits);
            out.set_qubit(a, p.x_bit(0), p.z_bit(0));
            out.set_qubit(b, p.x_bit(1), p.z_bit(1));
            out.set_negative(p.is_negative());
            out
        };
        t.x_images[a] = lift(&self.images[0]);
        t.z_images[a] = lift(&self.images[1]);
        t.x_images[b] = lift(&self.images[2]);
        t.z_images[b] = lift(&self.images[3]);
        Ok(t)
    }
}

/// Every two-qubit Clifford modulo phase, in a fixed canonical order.
pub fn enumerate_two_qubit_cliffords() -> Vec<TwoQubitClifford> {
    let pauli = |code: u8, sign: bool| {
        let mut p = PauliString::identity(2);
        p.set_qubit(0, code & 1 != 0, code & 2 != 0);
        p.set_qubit(1, code & 4 != 0, code & 8 != 0);
        p.set_negative(sign);
        p
    };
    let mut out = Vec::with_capacity(TWO_QUBIT_CLIFFORD_COUNT);
    for xa in 1..16u8 {
        for za in 1..16u8 {
            let (pxa, pza) = (pauli(xa, false), pauli(za, false));
            if !pxa.anticommutes_with(&pza) {
                continue;
            }
            for xb in 1..16u8 {
                let pxb = pauli(xb, false);
                if pxb.anticommutes_with(&pxa) || pxb.anticommutes_with(&pza) {
                    continue;
                }
                for zb in 1..16u8 {
                    let pzb = pauli(zb, false);
                    if pzb.anticommutes_with(&pxa)
                        || pzb.anticommutes_with(&pza)
                        || !pzb.anticommutes_with(&pxb)
                    {
                        continue;
                    }
                    for signs in 0..16u8 {
                        let images = [
                            pauli(xa, signs & 1 != 0),
                            pauli(za, signs & 2 != 0),
                            pauli(xb, signs & 4 != 0),
                            pauli(zb, signs & 8 != 0),
                        ];
                        out.push(
                            TwoQubitClifford::from_images(images)
                                .expect("enumerated images are symplectic"),
                        );
                    }
                }
            }
        }
    }
    out
}

struct TwoQubitTable {
    gates: Vec<TwoQubitClifford>,
    index: HashMap<u32, u16>,
}

fn table() -> &'static TwoQubitTable {
    static TABLE: OnceLock<TwoQubitTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let gates = enumerate_two_qubit_cliffords();
        let index = gates
            .iter()
            .enumerate()
            .map(|(i, g)| (g.key(), i as u16))
            .collect();
        TwoQubitTable { gates, index }
    })
}

/// Shared, lazily built enumeration of the two-qubit Clifford group.
pub fn two_qubit_cliffords() -> &'static [TwoQubitClifford] {
    &table().gates
}

/// Position of `gate` in [`two_qubit_cliffords`].
pub fn two_qubit_index(gate: &TwoQubitClifford) -> usize {
    table().index[&gate.key()] as usize
}

/// Uniform index into [`two_qubit_cliffords`].
pub fn sample_two_qubit_index<R: Rng + ?Sized>(rng: &mut R) -> usize {
    rng.gen_range(0..TWO_QUBIT_CLIFFORD_COUNT)
}

/// Uniformly random two-qubit Clifford (signs included).
pub fn sample_two_qubit_clifford<R: Rng + ?Sized>(rng: &mut R) -> TwoQubitClifford {
    two_qubit_cliffords()[sample_two_qubit_index(rng)].clone()
}

/// Signed images of every `X_q` and `Z_q` on `num_qubits` qubits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalCliffordTableau {
    num_qubits: usize,
    x_images: Vec<PauliString>,
    z_images: Vec<PauliString>,
}

impl GlobalCliffordTableau {
    pub fn identity(num_qubits: usize) -> Self {
        Self {
            num_qubits,
            x_images: (0..num_qubits)
                .map(|q| PauliString::single_x(num_qubits, q))
                .collect(),
            z_images: (0..num_qubits)
                .map(|q| PauliString::single_z(num_qubits, q))
                .collect(),
        }
    }

    pub fn from_images(x_images: Vec<PauliString>, z_images: Vec<PauliString>) -> Result<Self> {
        let num_qubits = x_images.len();
        if num_qubits == 0 {
            return Err(Error::TooFewQubits { min: 1, found: 0 });
        }
        if let Some(p) = x_images
            .iter()
            .chain(&z_images)
            .find(|p| p.num_qubits() != num_qubits)
        {
            return Err(Error::DimensionMismatch {
                expected: num_qubits,
                found: p.num_qubits(),
            });
        }
        check_symplectic(&x_images, &z_images).map_err(|r| crate::error::invalid("images", r))?;
        Ok(Self {
            num_qubits,
            x_images,
            z_images,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn x_images(&self) -> &[PauliString] {
        &self.x_images
    }

    pub fn z_images(&self) -> &[PauliString] {
        &self.z_images
    }

    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        check_symplectic(&self.x_images, &self.z_images)
    }

    /// Same unitary on the first `num_qubits()` qubits of a larger register,
    /// identity on the rest.
    pub fn padded(&self, total_qubits: usize) -> Result<Self> {
        if total_qubits < self.num_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.num_qubits,
                found: total_qubits,
            });
        }
        let widen = |p: &PauliString| {
            let mut out = PauliString::identity(total_qubits);
            for q in 0..p.num_qubits() {
                out.set_qubit(q, p.x_bit(q), p.z_bit(q));
            }
            out.set_negative(p.is_negative());
            out
        };
        let mut x_images: Vec<_> = self.x_images.iter().map(widen).collect();
        let mut z_images: Vec<_> = self.z_images.iter().map(widen).collect();
        for q in self.num_qubits..total_qubits {
            x_images.push(PauliString::single_x(total_qubits, q));
            z_images.push(PauliString::single_z(total_qubits, q));
        }
        Ok(Self {
            num_qubits: total_qubits,
            x_images,
            z_images,
        })
    }

    pub fn conjugate(&self, p: &PauliString) -> PauliString {
        conjugate_pauli(p, &self.x_images, &self.z_images)
    }

    /// The tableau that applies `self` first and then `then`.
    pub fn then(&self, then: &GlobalCliffordTableau) -> Result<GlobalCliffordTableau> {
        if then.num_qubits != self.num_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.num_qubits,
                found: then.num_qubits,
            });
        }
        Ok(Self {
            num_qubits: self.num_qubits,
            x_images: self.x_images.iter().map(|p| then.conjugate(p)).collect(),
            z_images: self.z_images.iter().map(|p| then.conjugate(p)).collect(),
        })
    }
}

/// Uniformly random `num_qubits`-qubit Clifford.
///
/// Picks the image of `X_0` uniformly among non-identity Paulis, the image of
/// `Z_0` uniformly among its anticommuting partners, restricts to the
/// symplectic complement of the pair and repeats; signs are uniform.
pub fn sample_global_clifford<R: Rng + ?Sized>(
    num_qubits: usize,
    rng: &mut R,
) -> Result<GlobalCliffordTableau> {
    if num_qubits == 0 {
        return Err(Error::TooFewQubits { min: 1, found: 0 });
    }
    let dim = 2 * num_qubits;
    let mut basis: Vec<BitVec> = (0..dim).map(|i| BitVec::unit(dim, i)).collect();
    let mut x_images = Vec::with_capacity(num_qubits);
    let mut z_images = Vec::with_capacity(num_qubits);

    let random_combination = |basis: &[BitVec], rng: &mut R| {
        let mut v = BitVec::zeros(dim);
        for b in basis {
            if rng.gen::<bool>() {
                v.xor_assign(b);
            }
        }
        v
    };

    for _ in 0..num_qubits {
        let a = loop {
            let v = random_combination(&basis, rng);
            if !v.is_zero() {
                break v;
            }
        };
        let b = loop {
            let v = random_combination(&basis, rng);
            if symplectic_product(&a, &v) {
                break v;
            }
        };
        x_images.push(pauli_from_symplectic(&a, rng.gen()));
        z_images.push(pauli_from_symplectic(&b, rng.gen()));

        // v ↦ v + <v,b> a + <v,a> b maps the subspace onto the complement of span{a, b}.
        let mut echelon: Vec<(usize, BitVec)> = Vec::new();
        let mut next = Vec::with_capacity(basis.len().saturating_sub(2));
        for v in &basis {
            let mut w = v.clone();
            if symplectic_product(v, &b) {
                w.xor_assign(&a);
            }
            if symplectic_product(v, &a) {
                w.xor_assign(&b);
            }
            let mut reduced = w.clone();
            for (pivot, row) in &echelon {
                if reduced.get(*pivot) {
                    reduced.xor_assign(row);
                }
            }
            if let Some(pivot) = (0..dim).find(|&i| reduced.get(i)) {
                echelon.push((pivot, reduced));
                next.push(w);
            }
        }
        debug_assert_eq!(next.len() + 2, basis.len());
        basis = next;
    }
    Ok(GlobalCliffordTableau {
        num_qubits,
        x_images,
        z_images,
    })
}

/// Conjugates every generator of `state` through `tableau`.
pub fn apply_global_clifford(
    state: &mut StabilizerState,
    tableau: &GlobalCliffordTableau,
) -> Result<()> {
    if state.num_qubits() != tableau.num_qubits {
        return Err(Error::DimensionMismatch {
            expected: state.num_qubits(),
            found: tableau.num_qubits,
        });
    }
    for g in state.generators_mut() {
        *g = tableau.conjugate(g);
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
    use std::collections::HashSet;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    fn cnot01() -> TwoQubitClifford {
        TwoQubitClifford::from_images([p("XX"), p("ZI"), p("IX"), p("ZZ")]).unwrap()
    }

    #[test]
    fn enumeration_is_complete_and_distinct() {
        let all = two_qubit_cliffords();
        assert_eq!(all.len(), TWO_QUBIT_CLIFFORD_COUNT);
        let keys: HashSet<u32> = all.iter().map(|g| g.key()).collect();
        assert_eq!(keys.len(), TWO_QUBIT_CLIFFORD_COUNT);
        assert!(all.iter().any(|g| g.is_identity()));
    }

    #[test]
    fn enumeration_closed_under_inverse() {
        let all = two_qubit_cliffords();
        let keys: HashSet<u32> = all.iter().map(|g| g.key()).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let g = &all[sample_two_qubit_index(&mut rng)];
            // g has finite order, so g^(k-1) is its inverse.
            let mut power = g.clone();
            let mut prev = TwoQubitClifford::identity();
            while !power.is_identity() {
                prev = power.clone();
                power = power.then(g);
            }
            assert!(keys.contains(&prev.key()));
            assert!(g.then(&prev).is_identity());
        }
    }

    #[test]
    fn cnot_conjugation() {
        let g = cnot01();
        assert_eq!(g.conjugate(&p("ZI")).to_string(), "+ZI");
        assert_eq!(g.conjugate(&p("IZ")).to_string(), "+ZZ");
        assert_eq!(g.conjugate(&p("YI")).to_string(), "+YX");
        assert_eq!(g.conjugate(&p("YY")).to_string(), "-XZ");
    }

    #[test]
    fn sampling_is_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(9);
        let mut b = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            assert_eq!(
                sample_two_qubit_clifford(&mut a),
                sample_two_qubit_clifford(&mut b)
            );
        }
        let mut a = ChaCha8Rng::seed_from_u64(9);
        let mut b = ChaCha8Rng::seed_from_u64(9);
        assert_eq!(
            sample_global_clifford(7, &mut a).unwrap(),
            sample_global_clifford(7, &mut b).unwrap()
        );
    }

    #[test]
    fn global_samples_are_symplectic() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in [1, 2, 3, 10, 40, 70] {
            for _ in 0..5 {
                let t = sample_global_clifford(n, &mut rng).unwrap();
                assert_eq!(t.check_invariants(), Ok(()));
            }
        }
        assert!(sample_global_clifford(0, &mut rng).is_err());
    }

    #[test]
    fn identity_tableau_is_noop() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut state = StabilizerState::new_basis_state(4).unwrap();
        apply_global_clifford(&mut state, &sample_global_clifford(4, &mut rng).unwrap()).unwrap();
        let before = state.clone();
        apply_global_clifford(&mut state, &GlobalCliffordTableau::identity(4)).unwrap();
        assert_eq!(state, before);
        assert!(apply_global_clifford(&mut state, &GlobalCliffordTableau::identity(3)).is_err());
    }

    #[test]
    fn embedded_gate_matches_direct_application() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let gate = sample_two_qubit_clifford(&mut rng);
            let t0 = sample_global_clifford(5, &mut rng).unwrap();
            let mut direct = StabilizerState::new_basis_state(5).unwrap();
            apply_global_clifford(&mut direct, &t0).unwrap();
            let mut via_tableau = direct.clone();
            direct.apply_two_qubit_gate(&gate, (3, 1)).unwrap();
            apply_global_clifford(&mut via_tableau, &gate.embed(5, 3, 1).unwrap()).unwrap();
            assert_eq!(direct, via_tableau);
        }
    }

    #[test]
    fn entropies_ignore_signs() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let t = sample_global_clifford(6, &mut rng).unwrap();
        let mut state =
            StabilizerState::new_mixed_encoding_state(6, &QubitSubset::new(vec![1, 4], 6).unwrap())
                .unwrap();
        apply_global_clifford(&mut state, &t).unwrap();
        let mut unsigned = state.clone();
        for g in unsigned.generators_mut() {
            g.set_negative(false);
        }
        for mask in 0u32..64 {
            let region =
                QubitSubset::new((0..6).filter(|q| mask >> q & 1 == 1).collect(), 6).unwrap();
            assert_eq!(
                state.subsystem_entropy(&region).unwrap(),
                unsigned.subsystem_entropy(&region).unwrap()
            );
        }
    }
}
