//! Bit-packed vectors over GF(2) and rank by Gaussian elimination.

use std::fmt;

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A fixed-length vector over GF(2), packed little-endian into `u64` words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Parses a string of `0`/`1` characters, index 0 first.
    pub fn from_bit_str(s: &str) -> Option<Self> {
        let mut v = Self::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => return None,
            }
        }
        Some(v)
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        write!(f, "BitVec({s})")
    }
}

/// Rank over GF(2) of a list of equal-length bit vectors.
///
/// The input is copied into a scratch buffer; the caller's rows are untouched.
pub fn gf2_rank(rows: &[BitVec]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let width = first.words.len();
    let mut scratch = Vec::with_capacity(rows.len() * width);
    for row in rows {
        assert_eq!(row.len, first.len, "rows must have equal length");
        scratch.extend_from_slice(&row.words);
    }
    rank_in_place(&mut scratch, width)
}

/// Destructive rank of a row-major packed matrix with `width` words per row.
pub(crate) fn rank_in_place(matrix: &mut [u64], width: usize) -> usize {
    if width == 0 {
        return 0;
    }
    let nrows = matrix.len() / width;
    let mut rank = 0;
    for word in 0..width {
        let mut remaining = 0u64;
        for r in rank..nrows {
            remaining |= matrix[r * width + word];
        }
        while remaining != 0 && rank < nrows {
            let bit = remaining.trailing_zeros();
            let mask = 1u64 << bit;
            remaining &= !mask;
            let Some(pivot) = (rank..nrows).find(|&r| matrix[r * width + word] & mask != 0) else {
                continue;
            };
            if pivot != rank {
                for w in word..width {
                    matrix.swap(pivot * width + w, rank * width + w);
                }
            }
            for r in rank + 1..nrows {
                if matrix[r * width + word] & mask != 0 {
                    for w in word..width {
                        let p = matrix[rank * width + w];
                        matrix[r * width + w] ^= p;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bv(s: &str) -> BitVec {
        BitVec::from_bit_str(s).unwrap()
    }

    /// Size of the span by enumerating every subset of rows.
    fn span_rank(rows: &[BitVec]) -> usize {
        let mut span = std::collections::HashSet::new();
        for mask in 0u32..(1 << rows.len()) {
            let mut acc = BitVec::zeros(rows.first().map_or(0, |r| r.len()));
            for (i, r) in rows.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    acc.xor_assign(r);
                }
            }
            span.insert(acc);
        }
        span.len().trailing_zeros() as usize
    }

    #[test]
    fn empty_list_has_rank_zero() {
        assert_eq!(gf2_rank(&[]), 0);
    }

    #[test]
    fn dependent_rows() {
        let rows = [bv("1010"), bv("0101"), bv("1111")];
        assert_eq!(span_rank(&rows), 2);
        assert_eq!(gf2_rank(&rows), 2);
    }

    #[test]
    fn unit_vectors_are_independent() {
        for k in 0..10 {
            let rows: Vec<_> = (0..k).map(|i| BitVec::unit(150, i * 13)).collect();
            assert_eq!(gf2_rank(&rows), k);
        }
    }

    #[test]
    fn rank_spans_word_boundaries() {
        let mut a = BitVec::zeros(130);
        a.set(63, true);
        a.set(64, true);
        let mut b = BitVec::zeros(130);
        b.set(64, true);
        b.set(129, true);
        let mut c = a.clone();
        c.xor_assign(&b);
        assert_eq!(gf2_rank(&[a.clone(), b.clone(), c]), 2);
        assert_eq!(gf2_rank(&[a, b]), 2);
    }

    fn arb_rows() -> impl Strategy<Value = Vec<BitVec>> {
        (1usize..80, 0usize..9).prop_flat_map(|(len, n)| {
            proptest::collection::vec(proptest::collection::vec(any::<bool>(), len), n).prop_map(
                move |rows| {
                    rows.into_iter()
                        .map(|bits| {
                            let mut v = BitVec::zeros(len);
                            for (i, b) in bits.into_iter().enumerate() {
                                v.set(i, b);
                            }
                            v
                        })
                        .collect()
                },
            )
        })
    }

    proptest! {
        #[test]
        fn matches_span_enumeration(rows in arb_rows()) {
            prop_assert_eq!(gf2_rank(&rows), span_rank(&rows));
        }

        #[test]
        fn invariant_under_permutation_and_row_addition(
            rows in arb_rows(),
            seed in any::<u64>(),
        ) {
            prop_assume!(rows.len() >= 2);
            let r = gf2_rank(&rows);
            let mut shuffled = rows.clone();
            let k = (seed as usize) % shuffled.len();
            shuffled.rotate_left(k);
            shuffled.reverse();
            prop_assert_eq!(gf2_rank(&shuffled), r);
            let (i, j) = ((seed >> 8) as usize % rows.len(), (seed >> 16) as usize % rows.len());
            if i != j {
                let mut added = rows.clone();
                let src = added[j].clone();
                added[i].xor_assign(&src);
                prop_assert_eq!(gf2_rank(&added), r);
            }
        }
    }
}
