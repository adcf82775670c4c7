use core::fmt;
use core::ops::{BitXor, BitXorAssign};
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest supported ambient length; a vector fits in one machine word.
pub const MAX_LEN: usize = 64;

/// Mask of the low `len` bits.
#[inline]
pub fn len_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// Word bit holding coordinate `i` (0-indexed) of a length-`len` vector.
///
/// Coordinate 0 is the most significant of the `len` bits, so numeric order
/// on words is lexicographic order on coordinate strings.
#[inline]
pub fn coord_bit(len: usize, i: usize) -> u64 {
    debug_assert!(i < len);
    1u64 << (len - 1 - i)
}

/// A vector of `GF(2)^len`, `1 <= len <= 64`, packed into one word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BitVector {
    len: u8,
    bits: u64,
}

impl BitVector {
    pub fn new(len: usize, bits: u64) -> Result<Self> {
        check_len(len)?;
        if bits & !len_mask(len) != 0 {
            return Err(Error::InvalidParameter(alloc::format!(
                "word {bits:#x} has bits beyond length {len}"
            )));
        }
        Ok(BitVector {
            len: len as u8,
            bits,
        })
    }

    /// Caller guarantees `1 <= len <= 64` and no stray bits.
    #[inline]
    pub(crate) fn from_raw(len: usize, bits: u64) -> Self {
        debug_assert!((1..=MAX_LEN).contains(&len) && bits & !len_mask(len) == 0);
        BitVector {
            len: len as u8,
            bits,
        }
    }

    pub fn zero(len: usize) -> Result<Self> {
        Self::new(len, 0)
    }

    pub fn ones(len: usize) -> Result<Self> {
        Self::new(len, len_mask(len))
    }

    /// The unit vector `e_{i+1}`.
    pub fn unit(len: usize, i: usize) -> Result<Self> {
        Self::from_coords(len, &[i])
    }

    /// The vector whose support is `coords` (0-indexed).
    pub fn from_coords(len: usize, coords: &[usize]) -> Result<Self> {
        check_len(len)?;
        let mut bits = 0;
        for &c in coords {
            if c >= len {
                return Err(Error::InvalidParameter(alloc::format!(
                    "coordinate {c} out of range for length {len}"
                )));
            }
            bits |= coord_bit(len, c);
        }
        Ok(BitVector {
            len: len as u8,
            bits,
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.bits & coord_bit(self.len(), i) != 0
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.bits ^= coord_bit(self.len(), i);
    }

    /// Standard inner product over GF(2).
    pub fn dot(&self, other: &BitVector) -> bool {
        (self.bits & other.bits).count_ones() & 1 == 1
    }

    /// Support of the vector, 0-indexed, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.get(i))
    }

    /// Right action `v^sigma`: coordinate `i` of `v` moves to `sigma(i)`.
    pub fn permute(&self, sigma: &Permutation) -> Result<BitVector> {
        if sigma.degree() != self.len() {
            return Err(Error::DegreeMismatch {
                expected: self.len(),
                found: sigma.degree(),
            });
        }
        Ok(BitVector {
            len: self.len,
            bits: permute_word(self.len(), self.bits, sigma),
        })
    }
}

/// Word-level form of [`BitVector::permute`]; `sigma` must have degree `len`.
pub fn permute_word(len: usize, word: u64, sigma: &Permutation) -> u64 {
    let mut out = 0;
    let mut rest = word;
    while rest != 0 {
        let b = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let coord = len - 1 - b;
        out |= coord_bit(len, sigma.image(coord));
    }
    out
}

fn check_len(len: usize) -> Result<()> {
    if (1..=MAX_LEN).contains(&len) {
        Ok(())
    } else {
        Err(Error::BadLength(len))
    }
}

impl BitXor for BitVector {
    type Output = BitVector;

    fn bitxor(self, rhs: BitVector) -> BitVector {
        assert_eq!(self.len, rhs.len, "adding vectors of different lengths");
        BitVector {
            len: self.len,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl BitXorAssign for BitVector {
    fn bitxor_assign(&mut self, rhs: BitVector) {
        *self = *self ^ rhs;
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        check_len(s.len())?;
        let mut bits = 0u64;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= coord_bit(s.len(), i),
                other => {
                    return Err(Error::InvalidParameter(alloc::format!(
                        "unexpected character {other:?} in bit string"
                    )))
                }
            }
        }
        Ok(BitVector {
            len: s.len() as u8,
            bits,
        })
    }
}

/// Table-driven bit gather/scatter for a fixed mask (software PEXT/PDEP).
///
/// `extract` packs the bits of `x` selected by `mask` into the low bits of
/// the result, preserving their relative order; `deposit` is its inverse.
#[derive(Clone, Debug)]
pub struct BitCompressor {
    mask: u64,
    width: u32,
    shifts: [u32; 8],
    gather: alloc::boxed::Box<[[u32; 256]; 8]>,
    scatter: alloc::boxed::Box<[[u64; 256]; 8]>,
}

impl BitCompressor {
    pub fn new(mask: u64) -> Self {
        let mut shifts = [0u32; 8];
        let mut gather = alloc::boxed::Box::new([[0u32; 256]; 8]);
        let mut scatter = alloc::boxed::Box::new([[0u64; 256]; 8]);
        let mut below = 0u32;
        for k in 0..8 {
            shifts[k] = below;
            let byte_mask = ((mask >> (8 * k)) & 0xff) as u32;
            for value in 0..256u32 {
                let mut packed = 0u32;
                let mut pos = 0;
                for b in 0..8 {
                    if byte_mask >> b & 1 == 1 {
                        packed |= ((value >> b) & 1) << pos;
                        pos += 1;
                    }
                }
                gather[k][value as usize] = packed;
            }
            let count = byte_mask.count_ones();
            for packed in 0..(1u32 << count) {
                let mut word = 0u64;
                let mut pos = 0;
                for b in 0..8 {
                    if byte_mask >> b & 1 == 1 {
                        word |= (((packed >> pos) & 1) as u64) << (8 * k + b);
                        pos += 1;
                    }
                }
                scatter[k][packed as usize] = word;
            }
            below += count;
        }
        BitCompressor {
            mask,
            width: mask.count_ones(),
            shifts,
            gather,
            scatter,
        }
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    /// Number of bits in the mask.
    #[inline]
    pub fn width(&self) -> u32 {
        self.width
    }

    #[inline]
    pub fn extract(&self, x: u64) -> u64 {
        let mut out = 0u64;
        for k in 0..8 {
            out |= (self.gather[k][((x >> (8 * k)) & 0xff) as usize] as u64) << self.shifts[k];
        }
        out
    }

    #[inline]
    pub fn deposit(&self, y: u64) -> u64 {
        let mut out = 0u64;
        for k in 0..8 {
            let next = if k == 7 {
                self.width
            } else {
                self.shifts[k + 1]
            };
            let count = next - self.shifts[k];
            if count == 0 {
                continue;
            }
            let chunk = (y >> self.shifts[k]) & ((1u64 << count) - 1);
            out |= self.scatter[k][chunk as usize];
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn weight_of_zero_and_pair() {
        assert_eq!(BitVector::zero(24).unwrap().weight(), 0);
        let e12 = BitVector::from_coords(23, &[0, 1]).unwrap();
        assert_eq!(e12.weight(), 2);
        assert_eq!(e12.to_string(), "11000000000000000000000");
    }

    #[test]
    fn parse_and_display_round_trip() {
        let v: BitVector = "0110".parse().unwrap();
        assert_eq!(v.bits(), 0b0110);
        assert!(v.get(1) && v.get(2) && !v.get(0));
        assert_eq!(v.to_string(), "0110");
        assert!("01x".parse::<BitVector>().is_err());
        assert!("".parse::<BitVector>().is_err());
    }

    #[test]
    fn rejects_stray_bits() {
        assert!(BitVector::new(3, 0b1000).is_err());
        assert!(BitVector::new(65, 0).is_err());
        assert!(BitVector::new(64, u64::MAX).is_ok());
    }

    #[test]
    fn permute_moves_coordinates_right() {
        // sigma = (0 1 2): coordinate 0 goes to position 1
        let sigma = Permutation::from_images(alloc::vec![1, 2, 0]).unwrap();
        let v = BitVector::unit(3, 0).unwrap();
        assert_eq!(v.permute(&sigma).unwrap(), BitVector::unit(3, 1).unwrap());
        let bad = Permutation::identity(4);
        assert!(v.permute(&bad).is_err());
    }

    #[test]
    fn compressor_round_trips() {
        let mask = 0b1011_0000_0000_0000_0000_0110_1001u64 | (1 << 63);
        let c = BitCompressor::new(mask);
        assert_eq!(c.width(), mask.count_ones());
        for y in 0..(1u64 << c.width()) {
            let x = c.deposit(y);
            assert_eq!(x & !mask, 0);
            assert_eq!(c.extract(x), y);
        }
        // order preserving
        assert_eq!(c.extract(0b1000), 0b10);
    }
}
