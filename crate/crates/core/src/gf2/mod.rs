//! Vectors and binary linear codes over GF(2).

mod code;
mod coset;
mod golay;
mod vector;

pub use code::{LinearCode, MAX_ENUMERATION_DIM};
pub use coset::{CosetSpace, MAX_COSET_CODIM};
pub use golay::{golay23, golay23_even, golay24, GOLAY24_ROWS, GOLAY_PUNCTURE};
pub use vector::{coord_bit, len_mask, permute_word, BitCompressor, BitVector, MAX_LEN};

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Smallest subspace of `GF(2)^n` containing `seeds` and closed under the
/// coordinate permutations `gens`.
///
/// Spins: every vector that enlarges the span is pushed through each
/// generator, until no image enlarges it further.
pub fn spin_submodule(gens: &[Permutation], n: usize, seeds: &[BitVector]) -> Result<LinearCode> {
    for g in gens {
        if g.degree() != n {
            return Err(Error::DegreeMismatch {
                expected: n,
                found: g.degree(),
            });
        }
    }
    for s in seeds {
        if s.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: s.len(),
            });
        }
    }
    let mut span = IncrementalSpan::default();
    let mut queue: Vec<u64> = seeds.iter().map(|s| s.bits()).collect();
    while let Some(x) = queue.pop() {
        if span.insert(x) {
            queue.extend(gens.iter().map(|g| permute_word(n, x, g)));
        }
    }
    let code = LinearCode::from_words(n, span.rows);
    debug_assert!(gens
        .iter()
        .all(|g| code.is_automorphism(g).unwrap_or(false)));
    Ok(code)
}

/// Echelon basis that grows one vector at a time.
#[derive(Default)]
struct IncrementalSpan {
    rows: Vec<u64>,
}

impl IncrementalSpan {
    fn insert(&mut self, mut x: u64) -> bool {
        for &r in &self.rows {
            x = x.min(x ^ r);
        }
        if x == 0 {
            return false;
        }
        self.rows.push(x);
        self.rows.sort_unstable_by(|a, b| b.cmp(a));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_from_pair_under_cycle_gives_even_space() {
        let n = 7;
        let cycle =
            Permutation::from_images((0..n).map(|i| ((i + 1) % n) as u32).collect()).unwrap();
        let transposition = Permutation::transposition(n, 0, 1);
        let seed = BitVector::from_coords(n, &[0, 1]).unwrap();
        let code = spin_submodule(&[cycle, transposition], n, &[seed]).unwrap();
        assert_eq!(code.dimension(), n - 1);
        assert!(code.contains_even_weight_space());
    }

    #[test]
    fn spin_under_trivial_group_is_span() {
        let v = BitVector::from_coords(5, &[1, 3]).unwrap();
        let code = spin_submodule(&[], 5, &[v]).unwrap();
        assert_eq!(code, LinearCode::from_rows(5, &[v]).unwrap());
    }

    #[test]
    fn incremental_span_rejects_dependent_vectors() {
        let mut s = IncrementalSpan::default();
        assert!(s.insert(0b110));
        assert!(s.insert(0b011));
        assert!(!s.insert(0b101));
        assert!(!s.insert(0));
    }
}
