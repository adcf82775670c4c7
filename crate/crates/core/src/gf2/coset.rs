use alloc::vec::Vec;

use super::code::LinearCode;
use super::vector::{len_mask, BitVector};
use crate::error::{Error, Result};

/// Largest codimension for which a coset table is built.
pub const MAX_COSET_CODIM: usize = 24;

/// The cosets of a code with canonical representatives, indexed by syndrome.
///
/// The representative of a coset is its minimum-weight element, ties broken
/// by the lexicographically least coordinate string.
#[derive(Clone, Debug)]
pub struct CosetSpace {
    code: LinearCode,
    representatives: Vec<u64>,
}

impl CosetSpace {
    pub fn new(code: &LinearCode) -> Result<Self> {
        let codim = code.codimension();
        if codim > MAX_COSET_CODIM {
            return Err(Error::QuotientTooLarge {
                codimension: codim,
                max: MAX_COSET_CODIM,
            });
        }
        let n = code.length();
        let total = 1usize << codim;
        const UNSET: u64 = u64::MAX;
        let mut reps = alloc::vec![UNSET; total];
        let mut assigned = 0usize;
        // Visit vectors by weight, then in increasing numeric order (which is
        // lexicographic order of the coordinate strings).
        'weights: for w in 0..=n {
            let mut x = if w == 0 { 0 } else { len_mask(w) };
            loop {
                let s = code.syndrome_word(x) as usize;
                if reps[s] == UNSET {
                    reps[s] = x;
                    assigned += 1;
                    if assigned == total {
                        break 'weights;
                    }
                }
                match next_same_weight(x, n) {
                    Some(next) => x = next,
                    None => break,
                }
            }
        }
        debug_assert_eq!(assigned, total);
        Ok(CosetSpace {
            code: code.clone(),
            representatives: reps,
        })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    /// Number of cosets, `2^(n-r)`.
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn representative(&self, index: usize) -> BitVector {
        BitVector::from_raw(self.code.length(), self.representatives[index])
    }

    pub fn representative_words(&self) -> &[u64] {
        &self.representatives
    }

    pub fn syndrome_of(&self, v: &BitVector) -> Result<usize> {
        Ok(self.code.syndrome(v)? as usize)
    }

    /// Weight of the heaviest coset leader (the covering radius).
    pub fn covering_radius(&self) -> usize {
        self.representatives
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }
}

/// Next word of the same weight in increasing numeric order within `n` bits.
fn next_same_weight(x: u64, n: usize) -> Option<u64> {
    if x == 0 {
        return None;
    }
    let lowest = x & x.wrapping_neg();
    let ripple = x.checked_add(lowest)?;
    let next = ripple | (((x ^ ripple) >> 2) / lowest);
    if next & !len_mask(n) != 0 {
        None
    } else {
        Some(next)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gosper_walks_all_weight_two_words() {
        let mut x = 0b11u64;
        let mut count = 1;
        while let Some(n) = next_same_weight(x, 6) {
            assert!(n > x);
            assert_eq!(n.count_ones(), 2);
            x = n;
            count += 1;
        }
        assert_eq!(count, 15);
        assert_eq!(next_same_weight(u64::MAX, 64), None);
    }

    #[test]
    fn zero_code_cosets_are_all_vectors() {
        let space = CosetSpace::new(&LinearCode::zero_code(3).unwrap()).unwrap();
        assert_eq!(space.len(), 8);
        for i in 0..8 {
            assert_eq!(space.representative(i).bits(), i as u64);
        }
    }

    #[test]
    fn representatives_are_minimal_and_lex_least() {
        let code = LinearCode::repetition_code(4).unwrap();
        let space = CosetSpace::new(&code).unwrap();
        assert_eq!(space.len(), 8);
        // coset of 1100 is {1100, 0011}: lexicographically least is 0011
        let s = code.syndrome_word(0b1100) as usize;
        assert_eq!(space.representative_words()[s], 0b0011);
        assert_eq!(space.covering_radius(), 2);
    }

    #[test]
    fn too_large_quotient() {
        let code = LinearCode::zero_code(30).unwrap();
        assert!(matches!(
            CosetSpace::new(&code),
            Err(Error::QuotientTooLarge { .. })
        ));
    }
}
