//! Signed Pauli strings in the (x, z) bit representation.
//!
//! A string is `(-1)^sign * P_0 ⊗ P_1 ⊗ ...` where qubit `j` carries
//! `I, X, Z, Y` for `(x_j, z_j) = (0,0), (1,0), (0,1), (1,1)`.

use std::fmt;
use std::str::FromStr;

use crate::bits::BitVec;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    x: BitVec,
    z: BitVec,
    /// `true` means an overall factor of -1.
    sign: bool,
}

/// Powers of `i` picked up when multiplying two Pauli strings, summed over qubits.
///
/// Returns the exponent mod 4 of `i` in `P_a · P_b = i^e (P_a ⊕ P_b)` ignoring the
/// strings' own signs.
fn product_phase_words(ax: &[u64], az: &[u64], bx: &[u64], bz: &[u64]) -> u32 {
    let mut plus = 0u32;
    let mut minus = 0u32;
    for i in 0..ax.len() {
        let (x1, z1, x2, z2) = (ax[i], az[i], bx[i], bz[i]);
        let y1 = x1 & z1;
        let only_x1 = x1 & !z1;
        let only_z1 = z1 & !x1;
        // X·Y = iZ, Y·Z = iX, Z·X = iY and the reverse orders give -i.
        let p = (y1 & z2 & !x2) | (only_x1 & x2 & z2) | (only_z1 & x2 & !z2);
        let m = (y1 & x2 & !z2) | (only_x1 & z2 & !x2) | (only_z1 & x2 & z2);
        plus += p.count_ones();
        minus += m.count_ones();
    }
    (plus + 3 * minus) % 4
}

impl PauliString {
    pub fn identity(num_qubits: usize) -> Self {
        Self {
            x: BitVec::zeros(num_qubits),
            z: BitVec::zeros(num_qubits),
            sign: false,
        }
    }

    pub fn from_masks(x: BitVec, z: BitVec, sign: bool) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::DimensionMismatch {
                expected: x.len(),
                found: z.len(),
            });
        }
        Ok(Self { x, z, sign })
    }

    pub fn single_x(num_qubits: usize, qubit: usize) -> Self {
        let mut p = Self::identity(num_qubits);
        p.x.set(qubit, true);
        p
    }

    pub fn single_z(num_qubits: usize, qubit: usize) -> Self {
        let mut p = Self::identity(num_qubits);
        p.z.set(qubit, true);
        p
    }

    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    pub fn x_mask(&self) -> &BitVec {
        &self.x
    }

    pub fn z_mask(&self) -> &BitVec {
        &self.z
    }

    pub fn is_negative(&self) -> bool {
        self.sign
    }

    pub fn set_negative(&mut self, negative: bool) {
        self.sign = negative;
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i8 {
        if self.sign {
            -1
        } else {
            1
        }
    }

    pub fn x_bit(&self, qubit: usize) -> bool {
        self.x.get(qubit)
    }

    pub fn z_bit(&self, qubit: usize) -> bool {
        self.z.get(qubit)
    }

    pub fn set_qubit(&mut self, qubit: usize, x: bool, z: bool) {
        self.x.set(qubit, x);
        self.z.set(qubit, z);
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Number of qubits on which the string acts non-trivially.
    pub fn weight(&self) -> usize {
        self.x
            .words()
            .iter()
            .zip(self.z.words())
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    /// Parity of the symplectic inner product `x1·z2 + z1·x2`.
    pub fn anticommutes_with(&self, other: &PauliString) -> bool {
        assert_eq!(self.num_qubits(), other.num_qubits());
        let mut parity = 0u32;
        for i in 0..self.x.words().len() {
            parity ^= ((self.x.words()[i] & other.z.words()[i])
                ^ (self.z.words()[i] & other.x.words()[i]))
                .count_ones();
        }
        parity & 1 == 1
    }

    pub fn commutes_with(&self, other: &PauliString) -> bool {
        !self.anticommutes_with(other)
    }

    /// Multiplies `self` on the right by `other` and returns the resulting
    /// power of `i` (mod 4), signs of both operands included.
    ///
    /// The stored sign only captures even powers; callers combining
    /// anticommuting strings must fold the odd part back in themselves.
    pub(crate) fn mul_assign_phase(&mut self, other: &PauliString) -> u32 {
        let e = product_phase_words(
            self.x.words(),
            self.z.words(),
            other.x.words(),
            other.z.words(),
        );
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
        let e = e + 2 * (self.sign as u32) + 2 * (other.sign as u32);
        self.sign = false;
        e % 4
    }

    /// Product of two commuting strings; the result is again Hermitian.
    pub fn mul(&self, other: &PauliString) -> Result<PauliString> {
        if self.anticommutes_with(other) {
            return Err(Error::AnticommutingProduct);
        }
        let mut out = self.clone();
        let e = out.mul_assign_phase(other);
        debug_assert!(e % 2 == 0);
        out.sign = e == 2;
        Ok(out)
    }

    /// Copy with the same masks restricted to the listed qubits, in order.
    pub fn restricted(&self, qubits: &[usize]) -> PauliString {
        let mut out = PauliString::identity(qubits.len());
        for (k, &q) in qubits.iter().enumerate() {
            out.set_qubit(k, self.x_bit(q), self.z_bit(q));
        }
        out.sign = self.sign;
        out
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.sign { '-' } else { '+' })?;
        for q in 0..self.num_qubits() {
            let c = match (self.x_bit(q), self.z_bit(q)) {
                (false, false) => 'I',
                (true, false) => 'X',
                (false, true) => 'Z',
                (true, true) => 'Y',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliString({self})")
    }
}

impl FromStr for PauliString {
    type Err = Error;

    /// Parses strings like `XZ`, `+IYZ` or `-ZZ`; qubit 0 is leftmost.
    fn from_str(s: &str) -> Result<Self> {
        let (sign, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let mut p = PauliString::identity(body.len());
        p.sign = sign;
        for (q, c) in body.chars().enumerate() {
            let (x, z) = match c {
                'I' | '_' => (false, false),
                'X' => (true, false),
                'Z' => (false, true),
                'Y' => (true, true),
                _ => return Err(Error::Parse(format!("bad Pauli character {c:?} in {s:?}"))),
            };
            p.set_qubit(q, x, z);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn single_qubit_products() {
        // X·Z = -iY, Z·X = iY, X·Y = iZ
        let mut a = p("X");
        assert_eq!(a.mul_assign_phase(&p("Z")), 3);
        assert_eq!(a.to_string(), "+Y");
        let mut a = p("Z");
        assert_eq!(a.mul_assign_phase(&p("X")), 1);
        let mut a = p("X");
        assert_eq!(a.mul_assign_phase(&p("Y")), 1);
        assert_eq!(a.to_string(), "+Z");
        let mut a = p("Y");
        assert_eq!(a.mul_assign_phase(&p("Y")), 0);
        assert!(a.is_identity());
    }

    #[test]
    fn commuting_products_keep_sign() {
        assert_eq!(p("XX").mul(&p("ZZ")).unwrap().to_string(), "-YY");
        assert_eq!(p("-XX").mul(&p("ZZ")).unwrap().to_string(), "+YY");
        assert_eq!(p("XI").mul(&p("IZ")).unwrap().to_string(), "+XZ");
        assert!(p("XI").mul(&p("ZI")).is_err());
    }

    #[test]
    fn symplectic_commutation() {
        assert!(p("XX").commutes_with(&p("ZZ")));
        assert!(p("XI").anticommutes_with(&p("ZZ")));
        assert!(p("Y").anticommutes_with(&p("Z")));
        assert!(p("XYZ").commutes_with(&p("XYZ")));
    }

    #[test]
    fn display_round_trip() {
        for s in ["+XIZY", "-ZZ", "+I"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert!("XQ".parse::<PauliString>().is_err());
    }

    #[test]
    fn wide_strings_cross_word_boundary() {
        let mut a = PauliString::single_x(100, 70);
        a.set_qubit(3, true, true);
        let b = PauliString::single_z(100, 70);
        assert!(a.anticommutes_with(&b));
        assert_eq!(a.weight(), 2);
    }
}
