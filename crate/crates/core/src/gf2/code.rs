use alloc::vec::Vec;
use core::fmt;

use super::vector::{coord_bit, len_mask, BitCompressor, BitVector, MAX_LEN};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Codeword enumeration is refused above this dimension.
pub const MAX_ENUMERATION_DIM: usize = 16;

/// A binary linear code: a subspace of `GF(2)^n` in reduced row-echelon form.
///
/// Basis rows are sorted by pivot coordinate; the pivot of a row is its first
/// nonzero coordinate, and no other row has a one there. This form is unique
/// for the row space, so structural equality is equality of codes.
#[derive(Clone)]
pub struct LinearCode {
    n: usize,
    basis: Vec<u64>,
    pivots: Vec<usize>,
    checks: Vec<u64>,
    free: BitCompressor,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.basis == other.basis
    }
}

impl Eq for LinearCode {}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearCode")
            .field("n", &self.n)
            .field("r", &self.dimension())
            .field("basis", &self.basis_vectors().collect::<Vec<_>>())
            .finish()
    }
}

impl LinearCode {
    /// Row space of `rows`, all of which must have length `n`.
    pub fn from_rows(n: usize, rows: &[BitVector]) -> Result<Self> {
        if !(1..=MAX_LEN).contains(&n) {
            return Err(Error::BadLength(n));
        }
        for row in rows {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        Ok(Self::from_words(n, rows.iter().map(|r| r.bits())))
    }

    /// Row space of raw words; bits above `n` must be clear.
    pub(crate) fn from_words(n: usize, rows: impl IntoIterator<Item = u64>) -> Self {
        let mut basis: Vec<u64> = Vec::new();
        for mut row in rows {
            debug_assert_eq!(row & !len_mask(n), 0);
            for &b in &basis {
                if row & leading_bit(b) != 0 {
                    row ^= b;
                }
            }
            if row == 0 {
                continue;
            }
            let lead = leading_bit(row);
            for b in basis.iter_mut() {
                if *b & lead != 0 {
                    *b ^= row;
                }
            }
            basis.push(row);
        }
        basis.sort_unstable_by(|a, b| b.cmp(a));
        let pivots = basis
            .iter()
            .map(|&b| n - 1 - (63 - b.leading_zeros() as usize))
            .collect::<Vec<_>>();
        let pivot_mask = basis.iter().fold(0, |m, &b| m | leading_bit(b));
        let free_mask = len_mask(n) & !pivot_mask;
        // One parity check per free column j: e_j plus the pivots of rows
        // that have a one in column j.
        let mut checks = Vec::with_capacity(n - basis.len());
        let mut rest = free_mask;
        while rest != 0 {
            let top = 63 - rest.leading_zeros();
            let col = 1u64 << top;
            rest ^= col;
            let mut h = col;
            for &b in &basis {
                if b & col != 0 {
                    h |= leading_bit(b);
                }
            }
            checks.push(h);
        }
        LinearCode {
            n,
            basis,
            pivots,
            checks,
            free: BitCompressor::new(free_mask),
        }
    }

    pub fn zero_code(n: usize) -> Result<Self> {
        Self::from_rows(n, &[])
    }

    /// The repetition code `{0, 1}`.
    pub fn repetition_code(n: usize) -> Result<Self> {
        Self::from_rows(n, &[BitVector::ones(n)?])
    }

    #[inline]
    pub fn length(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    #[inline]
    pub fn codimension(&self) -> usize {
        self.n - self.basis.len()
    }

    /// Basis rows as raw words (RREF, pivot order).
    pub fn basis_words(&self) -> &[u64] {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = BitVector> + '_ {
        self.basis
            .iter()
            .map(move |&b| BitVector::from_raw(self.n, b))
    }

    /// Pivot coordinates, 0-indexed, ascending.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Words spanning the dual code, one per non-pivot column.
    pub fn parity_check_words(&self) -> &[u64] {
        &self.checks
    }

    pub fn parity_checks(&self) -> impl Iterator<Item = BitVector> + '_ {
        self.checks
            .iter()
            .map(move |&h| BitVector::from_raw(self.n, h))
    }

    /// Clears pivot coordinates by adding basis rows; the result is the
    /// unique element of `x + C` that is zero on every pivot.
    #[inline]
    pub fn reduce_word(&self, mut x: u64) -> u64 {
        for &b in &self.basis {
            if x & leading_bit(b) != 0 {
                x ^= b;
            }
        }
        x
    }

    pub fn contains_word(&self, x: u64) -> bool {
        self.reduce_word(x) == 0
    }

    pub fn contains(&self, v: &BitVector) -> Result<bool> {
        self.check_len(v)?;
        Ok(self.contains_word(v.bits()))
    }

    /// Membership via the parity checks; agrees with [`Self::contains`].
    pub fn passes_parity_checks(&self, v: &BitVector) -> bool {
        self.checks
            .iter()
            .all(|&h| (h & v.bits()).count_ones() & 1 == 0)
    }

    /// Index of the coset `x + C` in `0..2^(n-r)`.
    ///
    /// The index packs the non-pivot coordinates of the reduced word, first
    /// coordinate most significant. It is linear in `x`.
    #[inline]
    pub fn syndrome_word(&self, x: u64) -> u64 {
        self.free.extract(self.reduce_word(x))
    }

    pub fn syndrome(&self, v: &BitVector) -> Result<u64> {
        self.check_len(v)?;
        Ok(self.syndrome_word(v.bits()))
    }

    /// The reduced word of the coset with index `s`.
    #[inline]
    pub fn coset_word(&self, s: u64) -> u64 {
        self.free.deposit(s)
    }

    /// Calls `f` on every codeword (Gray-code order). Requires `r <= 63`.
    pub fn for_each_codeword(&self, mut f: impl FnMut(u64)) {
        let r = self.dimension();
        let mut word = 0u64;
        f(word);
        for step in 1u64..(1u64 << r) {
            word ^= self.basis[step.trailing_zeros() as usize];
            f(word);
        }
    }

    /// All `2^r` codewords as raw words.
    pub fn codewords(&self) -> Result<Vec<u64>> {
        self.enumeration_guard()?;
        let mut out = Vec::with_capacity(1 << self.dimension());
        self.for_each_codeword(|w| out.push(w));
        Ok(out)
    }

    /// Number of codewords of each weight `0..=n`.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        self.enumeration_guard()?;
        let mut counts = alloc::vec![0u64; self.n + 1];
        self.for_each_codeword(|w| counts[w.count_ones() as usize] += 1);
        Ok(counts)
    }

    /// Minimum weight of a nonzero codeword; `None` stands for infinity
    /// (the zero code).
    pub fn min_distance(&self) -> Result<Option<usize>> {
        self.enumeration_guard()?;
        if self.dimension() == 0 {
            return Ok(None);
        }
        let mut best = usize::MAX;
        self.for_each_codeword(|w| {
            if w != 0 {
                best = best.min(w.count_ones() as usize);
            }
        });
        Ok(Some(best))
    }

    /// Every codeword has even weight.
    pub fn is_even(&self) -> bool {
        self.basis.iter().all(|b| b.count_ones() % 2 == 0)
    }

    /// `C ∩ E_n`, the even-weight codewords.
    pub fn even_subcode(&self) -> LinearCode {
        let first_odd = self.basis.iter().copied().find(|b| b.count_ones() % 2 == 1);
        match first_odd {
            None => self.clone(),
            Some(odd) => Self::from_words(
                self.n,
                self.basis
                    .iter()
                    .map(|&b| if b.count_ones() % 2 == 1 { b ^ odd } else { b }),
            ),
        }
    }

    /// Whether every even-weight vector lies in the code.
    pub fn contains_even_weight_space(&self) -> bool {
        let n = self.n;
        n == 1 || (1..n).all(|j| self.contains_word(coord_bit(n, 0) | coord_bit(n, j)))
    }

    /// Deletes coordinate `i` from every codeword.
    pub fn punctured(&self, i: usize) -> Result<LinearCode> {
        if i >= self.n || self.n == 1 {
            return Err(Error::InvalidParameter(alloc::format!(
                "cannot puncture coordinate {i} of a length-{} code",
                self.n
            )));
        }
        let low = coord_bit(self.n, i) - 1;
        let high = !low & !coord_bit(self.n, i);
        Ok(Self::from_words(
            self.n - 1,
            self.basis.iter().map(|&b| ((b & high) >> 1) | (b & low)),
        ))
    }

    /// Whether `sigma` maps every basis row back into the code.
    pub fn is_automorphism(&self, sigma: &Permutation) -> Result<bool> {
        if sigma.degree() != self.n {
            return Err(Error::DegreeMismatch {
                expected: self.n,
                found: sigma.degree(),
            });
        }
        Ok(self
            .basis
            .iter()
            .all(|&b| self.contains_word(super::vector::permute_word(self.n, b, sigma))))
    }

    fn enumeration_guard(&self) -> Result<()> {
        if self.dimension() > MAX_ENUMERATION_DIM {
            Err(Error::DimensionTooLarge {
                dimension: self.dimension(),
                max: MAX_ENUMERATION_DIM,
            })
        } else {
            Ok(())
        }
    }

    fn check_len(&self, v: &BitVector) -> Result<()> {
        if v.len() == self.n {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.n,
                found: v.len(),
            })
        }
    }
}

#[inline]
fn leading_bit(x: u64) -> u64 {
    debug_assert!(x != 0);
    1u64 << (63 - x.leading_zeros())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn v(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    #[test]
    fn zero_and_repetition_rows() {
        let z = LinearCode::from_rows(4, &[]).unwrap();
        assert_eq!(z.dimension(), 0);
        let rep = LinearCode::from_rows(4, &[v("1111"), v("1111")]).unwrap();
        assert_eq!(rep.dimension(), 1);
        assert_eq!(rep, LinearCode::repetition_code(4).unwrap());
    }

    #[test]
    fn row_length_mismatch() {
        let err = LinearCode::from_rows(4, &[v("111")]).unwrap_err();
        assert_eq!(
            err,
            Error::LengthMismatch {
                expected: 4,
                found: 3
            }
        );
    }

    #[test]
    fn rref_is_canonical() {
        let a = LinearCode::from_rows(5, &[v("11000"), v("01100"), v("00111")]).unwrap();
        let b =
            LinearCode::from_rows(5, &[v("10100"), v("00111"), v("11000"), v("01011")]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.pivots(), &[0, 1, 2]);
    }

    #[test]
    fn distances_of_small_codes() {
        assert_eq!(
            LinearCode::zero_code(6).unwrap().min_distance().unwrap(),
            None
        );
        for n in 1..=10 {
            let rep = LinearCode::repetition_code(n).unwrap();
            assert_eq!(rep.min_distance().unwrap(), Some(n));
        }
    }

    #[test]
    fn weight_distributions() {
        assert_eq!(
            LinearCode::zero_code(5)
                .unwrap()
                .weight_distribution()
                .unwrap(),
            vec![1, 0, 0, 0, 0, 0]
        );
        assert_eq!(
            LinearCode::repetition_code(4)
                .unwrap()
                .weight_distribution()
                .unwrap(),
            vec![1, 0, 0, 0, 1]
        );
    }

    #[test]
    fn even_subcodes() {
        assert!(LinearCode::zero_code(3).unwrap().is_even());
        let rep5 = LinearCode::repetition_code(5).unwrap();
        assert!(!rep5.is_even());
        assert_eq!(rep5.even_subcode(), LinearCode::zero_code(5).unwrap());
        let c = LinearCode::from_rows(5, &[v("10000"), v("01000"), v("00110")]).unwrap();
        let e = c.even_subcode();
        assert_eq!(e.dimension(), 2);
        assert!(e.is_even());
    }

    #[test]
    fn parity_checks_agree_with_membership() {
        let c = LinearCode::from_rows(6, &[v("110100"), v("011010"), v("101001")]).unwrap();
        for x in 0..64u64 {
            let w = BitVector::new(6, x).unwrap();
            assert_eq!(c.contains(&w).unwrap(), c.passes_parity_checks(&w));
        }
        assert_eq!(c.parity_check_words().len(), 3);
    }

    #[test]
    fn syndromes_index_cosets() {
        let c = LinearCode::from_rows(6, &[v("110100"), v("011010")]).unwrap();
        let mut seen = [false; 16];
        for x in 0..64u64 {
            let s = c.syndrome_word(x) as usize;
            assert!(s < 16);
            assert!(c.contains_word(x ^ c.coset_word(s as u64)));
            seen[s] = true;
        }
        assert!(seen.iter().all(|&b| b));
    }

    #[test]
    fn puncture_last_coordinate() {
        let c = LinearCode::repetition_code(5).unwrap();
        let p = c.punctured(4).unwrap();
        assert_eq!(p, LinearCode::repetition_code(4).unwrap());
        let c = LinearCode::from_rows(4, &[v("1011")]).unwrap();
        assert_eq!(
            c.punctured(1).unwrap(),
            LinearCode::from_rows(3, &[v("111")]).unwrap()
        );
    }

    #[test]
    fn enumeration_guard() {
        let big = LinearCode::from_words(20, (0..17).map(|i| 1u64 << i));
        assert!(matches!(
            big.min_distance(),
            Err(Error::DimensionTooLarge { .. })
        ));
    }

    #[test]
    fn contains_even_weight_space() {
        let n = 6;
        let rows: Vec<BitVector> = (1..n)
            .map(|j| BitVector::from_coords(n, &[0, j]).unwrap())
            .collect();
        let e = LinearCode::from_rows(n, &rows).unwrap();
        assert!(e.contains_even_weight_space());
        assert!(!LinearCode::repetition_code(n)
            .unwrap()
            .contains_even_weight_space());
    }
}
