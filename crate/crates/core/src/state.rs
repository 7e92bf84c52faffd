//! Pure and uniformly mixed stabilizer states.
//!
//! A state on `N` qubits with `g ≤ N` independent commuting generators is the
//! uniform mixture over the joint +1 eigenspace, so its global entropy is
//! `N - g` bits. Subsystem entropies come from GF(2) ranks of the generator
//! masks.

use crate::bits::{rank_in_place, words_for, BitVec, WORD_BITS};
use crate::clifford::TwoQubitClifford;
use crate::error::{Error, Result};
use crate::pauli::PauliString;

/// Sorted set of distinct qubit indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QubitSubset {
    members: Vec<usize>,
}

impl QubitSubset {
    /// Validates and sorts `members` against a system of `num_qubits`.
    pub fn new(mut members: Vec<usize>, num_qubits: usize) -> Result<Self> {
        members.sort_unstable();
        for w in members.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateQubit(w[0]));
            }
        }
        if let Some(&last) = members.last() {
            if last >= num_qubits {
                return Err(Error::QubitOutOfRange {
                    index: last,
                    num_qubits,
                });
            }
        }
        Ok(Self { members })
    }

    pub fn empty() -> Self {
        Self { members: vec![] }
    }

    /// `{0, 1, ..., n-1}`.
    pub fn range(n: usize) -> Self {
        Self {
            members: (0..n).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, qubit: usize) -> bool {
        self.members.binary_search(&qubit).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn complement(&self, num_qubits: usize) -> QubitSubset {
        QubitSubset {
            members: (0..num_qubits).filter(|q| !self.contains(*q)).collect(),
        }
    }

    pub fn union(&self, other: &QubitSubset) -> QubitSubset {
        let mut members = self.members.clone();
        members.extend(other.iter().filter(|q| !self.contains(*q)));
        members.sort_unstable();
        QubitSubset { members }
    }

    pub fn intersection_len(&self, other: &QubitSubset) -> usize {
        self.iter().filter(|q| other.contains(*q)).count()
    }

    fn max(&self) -> Option<usize> {
        self.members.last().copied()
    }

    pub(crate) fn mask_words(&self, num_qubits: usize) -> Vec<u64> {
        let mut mask = vec![0u64; words_for(num_qubits)];
        for q in self.iter() {
            mask[q / WORD_BITS] |= 1 << (q % WORD_BITS);
        }
        mask
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerState {
    num_qubits: usize,
    generators: Vec<PauliString>,
}

impl StabilizerState {
    /// Builds a state from explicit generators, checking commutation and independence.
    pub fn from_generators(num_qubits: usize, generators: Vec<PauliString>) -> Result<Self> {
        if num_qubits == 0 {
            return Err(Error::TooFewQubits { min: 1, found: 0 });
        }
        if let Some(bad) = generators.iter().find(|g| g.num_qubits() != num_qubits) {
            return Err(Error::DimensionMismatch {
                expected: num_qubits,
                found: bad.num_qubits(),
            });
        }
        let state = Self {
            num_qubits,
            generators,
        };
        state
            .check_invariants()
            .map_err(|reason| crate::error::invalid("generators", reason))?;
        Ok(state)
    }

    /// `|0…0⟩`: one `Z_i` generator per qubit.
    pub fn new_basis_state(num_qubits: usize) -> Result<Self> {
        Self::new_mixed_encoding_state(num_qubits, &QubitSubset::empty())
    }

    /// Equal mixture of all computational-basis inputs on `encoded`, `|0⟩` elsewhere.
    pub fn new_mixed_encoding_state(num_qubits: usize, encoded: &QubitSubset) -> Result<Self> {
        if num_qubits == 0 {
            return Err(Error::TooFewQubits { min: 1, found: 0 });
        }
        check_subset(encoded, num_qubits)?;
        let generators = (0..num_qubits)
            .filter(|q| !encoded.contains(*q))
            .map(|q| PauliString::single_z(num_qubits, q))
            .collect();
        Ok(Self {
            num_qubits,
            generators,
        })
    }

    /// Purification of the encoding state on `num_qubits + num_encoded` qubits.
    ///
    /// `encoded[i]` shares a Bell pair with reference qubit `num_qubits + i`.
    pub fn new_purified_state(
        num_qubits: usize,
        num_encoded: usize,
        encoded: &QubitSubset,
    ) -> Result<Self> {
        if num_qubits == 0 {
            return Err(Error::TooFewQubits { min: 1, found: 0 });
        }
        check_subset(encoded, num_qubits)?;
        if encoded.len() != num_encoded {
            return Err(crate::error::invalid(
                "encoded",
                format!("expected {num_encoded} qubits, got {}", encoded.len()),
            ));
        }
        let total = num_qubits + num_encoded;
        let mut generators = Vec::with_capacity(total);
        for (i, q) in encoded.iter().enumerate() {
            let r = num_qubits + i;
            let mut xx = PauliString::single_x(total, q);
            xx.set_qubit(r, true, false);
            let mut zz = PauliString::single_z(total, q);
            zz.set_qubit(r, false, true);
            generators.push(xx);
            generators.push(zz);
        }
        generators.extend(
            (0..num_qubits)
                .filter(|q| !encoded.contains(*q))
                .map(|q| PauliString::single_z(total, q)),
        );
        Ok(Self {
            num_qubits: total,
            generators,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[PauliString] {
        &self.generators
    }

    pub(crate) fn generators_mut(&mut self) -> &mut [PauliString] {
        &mut self.generators
    }

    /// Entropy of the whole system in bits, `N - g`.
    pub fn global_entropy(&self) -> usize {
        self.num_qubits - self.generators.len()
    }

    /// Keeps only the generators at the given positions.
    pub fn with_generator_subset(&self, keep: impl IntoIterator<Item = usize>) -> Self {
        Self {
            num_qubits: self.num_qubits,
            generators: keep
                .into_iter()
                .map(|i| self.generators[i].clone())
                .collect(),
        }
    }

    /// Conjugates every generator by `gate` acting on `(a, b)`.
    pub fn apply_two_qubit_gate(
        &mut self,
        gate: &TwoQubitClifford,
        pair: (usize, usize),
    ) -> Result<()> {
        let (a, b) = pair;
        for q in [a, b] {
            if q >= self.num_qubits {
                return Err(Error::QubitOutOfRange {
                    index: q,
                    num_qubits: self.num_qubits,
                });
            }
        }
        if a == b {
            return Err(Error::RepeatedPairQubit(a));
        }
        self.apply_two_qubit_gate_unchecked(gate, a, b);
        debug_assert_eq!(self.check_invariants(), Ok(()));
        Ok(())
    }

    #[inline]
    pub(crate) fn apply_two_qubit_gate_unchecked(
        &mut self,
        gate: &TwoQubitClifford,
        a: usize,
        b: usize,
    ) {
        let table = gate.lookup_table();
        for g in &mut self.generators {
            let idx = (g.x_bit(a) as usize)
                | (g.z_bit(a) as usize) << 1
                | (g.x_bit(b) as usize) << 2
                | (g.z_bit(b) as usize) << 3;
            if idx == 0 {
                continue;
            }
            let out = table[idx];
            g.set_qubit(a, out & 1 != 0, out & 2 != 0);
            g.set_qubit(b, out & 4 != 0, out & 8 != 0);
            if out & 16 != 0 {
                g.set_negative(!g.is_negative());
            }
        }
    }

    /// Von Neumann entropy (bits) of the reduced state on `region`.
    ///
    /// Equals `|region| - (g - r)` with `r` the GF(2) rank of the generator
    /// masks restricted to the complement of `region`.
    pub fn subsystem_entropy(&self, region: &QubitSubset) -> Result<usize> {
        check_subset(region, self.num_qubits)?;
        Ok(self.subsystem_entropy_unchecked(region))
    }

    pub(crate) fn subsystem_entropy_unchecked(&self, region: &QubitSubset) -> usize {
        let mask = region.mask_words(self.num_qubits);
        let w = mask.len();
        let mut scratch = Vec::with_capacity(self.generators.len() * 2 * w);
        for g in &self.generators {
            for (word, m) in g.x_mask().words().iter().zip(&mask) {
                scratch.push(word & !m);
            }
            for (word, m) in g.z_mask().words().iter().zip(&mask) {
                scratch.push(word & !m);
            }
        }
        let rank = rank_in_place(&mut scratch, 2 * w);
        region.len() + rank - self.generators.len()
    }

    /// GF(2) rank of the generator mask matrix (both X and Z columns).
    pub fn mask_rank(&self) -> usize {
        let rows: Vec<BitVec> = self
            .generators
            .iter()
            .map(|g| {
                let mut row = BitVec::zeros(2 * self.num_qubits);
                for q in 0..self.num_qubits {
                    row.set(q, g.x_bit(q));
                    row.set(self.num_qubits + q, g.z_bit(q));
                }
                row
            })
            .collect();
        crate::bits::gf2_rank(&rows)
    }

    /// Checks mutual commutation and GF(2) independence of the generators.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        if self.generators.len() > self.num_qubits {
            return Err(format!(
                "{} generators on {} qubits",
                self.generators.len(),
                self.num_qubits
            ));
        }
        for (i, a) in self.generators.iter().enumerate() {
            for (j, b) in self.generators.iter().enumerate().skip(i + 1) {
                if a.anticommutes_with(b) {
                    return Err(format!("generators {i} and {j} anticommute"));
                }
            }
        }
        let rank = self.mask_rank();
        if rank != self.generators.len() {
            return Err(format!(
                "generators are dependent: rank {rank} < {}",
                self.generators.len()
            ));
        }
        Ok(())
    }
}

pub(crate) fn check_subset(subset: &QubitSubset, num_qubits: usize) -> Result<()> {
    match subset.max() {
        Some(q) if q >= num_qubits => Err(Error::QubitOutOfRange {
            index: q,
            num_qubits,
        }),
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subset(qs: &[usize], n: usize) -> QubitSubset {
        QubitSubset::new(qs.to_vec(), n).unwrap()
    }

    fn gens(state: &StabilizerState) -> Vec<String> {
        state.generators().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn basis_state_generators() {
        assert_eq!(gens(&StabilizerState::new_basis_state(1).unwrap()), ["+Z"]);
        assert_eq!(
            gens(&StabilizerState::new_basis_state(3).unwrap()),
            ["+ZII", "+IZI", "+IIZ"]
        );
        assert!(StabilizerState::new_basis_state(0).is_err());
    }

    #[test]
    fn basis_state_is_product() {
        let s = StabilizerState::new_basis_state(2).unwrap();
        assert_eq!(s.subsystem_entropy(&subset(&[0], 2)).unwrap(), 0);
    }

    #[test]
    fn mixed_encoding_state() {
        let s = StabilizerState::new_mixed_encoding_state(2, &subset(&[0], 2)).unwrap();
        assert_eq!(gens(&s), ["+IZ"]);
        assert_eq!(s.subsystem_entropy(&QubitSubset::range(2)).unwrap(), 1);
        assert_eq!(s.subsystem_entropy(&subset(&[0], 2)).unwrap(), 1);
        assert_eq!(s.subsystem_entropy(&subset(&[1], 2)).unwrap(), 0);
        assert_eq!(
            StabilizerState::new_mixed_encoding_state(3, &QubitSubset::empty()).unwrap(),
            StabilizerState::new_basis_state(3).unwrap()
        );
        let bad = QubitSubset { members: vec![5] };
        assert!(StabilizerState::new_mixed_encoding_state(3, &bad).is_err());
    }

    #[test]
    fn purified_state() {
        let s = StabilizerState::new_purified_state(1, 1, &subset(&[0], 1)).unwrap();
        assert_eq!(gens(&s), ["+XX", "+ZZ"]);
        assert_eq!(s.subsystem_entropy(&subset(&[0], 2)).unwrap(), 1);
        let s = StabilizerState::new_purified_state(2, 1, &subset(&[0], 2)).unwrap();
        assert_eq!(gens(&s), ["+XIX", "+ZIZ", "+IZI"]);
        assert!(StabilizerState::new_purified_state(2, 2, &subset(&[0], 2)).is_err());
    }

    #[test]
    fn subsystem_entropy_examples() {
        let bell =
            StabilizerState::from_generators(2, vec!["XX".parse().unwrap(), "ZZ".parse().unwrap()])
                .unwrap();
        assert_eq!(bell.subsystem_entropy(&subset(&[0], 2)).unwrap(), 1);
        let ghz = StabilizerState::from_generators(
            3,
            vec![
                "XXX".parse().unwrap(),
                "ZZI".parse().unwrap(),
                "IZZ".parse().unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(ghz.subsystem_entropy(&subset(&[0, 1], 3)).unwrap(), 1);
        assert_eq!(ghz.subsystem_entropy(&QubitSubset::empty()).unwrap(), 0);
        assert_eq!(ghz.subsystem_entropy(&QubitSubset::range(3)).unwrap(), 0);
        let out_of_range = QubitSubset { members: vec![3] };
        assert!(ghz.subsystem_entropy(&out_of_range).is_err());
    }

    #[test]
    fn from_generators_rejects_bad_sets() {
        let anti = vec!["XI".parse().unwrap(), "ZI".parse().unwrap()];
        assert!(StabilizerState::from_generators(2, anti).is_err());
        let dependent = vec![
            "ZI".parse().unwrap(),
            "IZ".parse().unwrap(),
            "ZZ".parse().unwrap(),
        ];
        assert!(StabilizerState::from_generators(2, dependent).is_err());
    }

    #[test]
    fn subset_validation() {
        assert!(QubitSubset::new(vec![1, 1], 3).is_err());
        assert!(QubitSubset::new(vec![3], 3).is_err());
        let s = QubitSubset::new(vec![2, 0], 3).unwrap();
        assert_eq!(s.members(), &[0, 2]);
        assert_eq!(s.complement(4).members(), &[1, 3]);
        assert_eq!(s.union(&subset(&[1, 2], 3)).members(), &[0, 1, 2]);
    }
}
