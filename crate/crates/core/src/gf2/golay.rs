//! The binary Golay codes.
//!
//! Coordinates `0..23` are labelled by the field `GF(23)` and coordinate 23
//! by the point at infinity. The extended code is spanned by the translates
//! of the quadratic residues `{1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18}`, each
//! extended by an overall parity bit, together with the all-ones word. The
//! rows below are that span in reduced row-echelon form.

use super::code::LinearCode;

/// Reduced row-echelon basis of the extended Golay code, `[I | A]`.
pub const GOLAY24_ROWS: [u32; 12] = [
    0x800c75, 0x40063b, 0x200f68, 0x1007b4, 0x0803da, 0x040d99, 0x0206cd, 0x010367, 0x008dc6,
    0x004a97, 0x00293e, 0x0018eb,
];

/// Coordinate deleted from the extended code to obtain the perfect code.
pub const GOLAY_PUNCTURE: usize = 23;

/// The extended binary Golay code, a `[24, 12, 8]` code.
pub fn golay24() -> LinearCode {
    LinearCode::from_words(24, GOLAY24_ROWS.iter().map(|&r| r as u64))
}

/// The binary Golay code, a `[23, 12, 7]` code: [`golay24`] punctured at the
/// last coordinate.
pub fn golay23() -> LinearCode {
    golay24()
        .punctured(GOLAY_PUNCTURE)
        .expect("coordinate 23 exists in a length-24 code")
}

/// Even-weight subcode of [`golay23`], a `[23, 11, 8]` code.
pub fn golay23_even() -> LinearCode {
    golay23().even_subcode()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::vector::coord_bit;
    use alloc::vec::Vec;

    /// Rebuild the committed rows from the residue construction.
    #[test]
    fn committed_rows_match_residue_construction() {
        let residues: Vec<usize> = {
            let mut q: Vec<usize> = (1..23).map(|x| x * x % 23).collect();
            q.sort_unstable();
            q.dedup();
            q
        };
        assert_eq!(residues, [1, 2, 3, 4, 6, 8, 9, 12, 13, 16, 18]);
        let mut rows = Vec::new();
        for shift in 0..23 {
            let mut w = 0u64;
            for &q in &residues {
                w |= coord_bit(24, (q + shift) % 23);
            }
            if w.count_ones() % 2 == 1 {
                w |= coord_bit(24, 23);
            }
            rows.push(w);
        }
        rows.push((1 << 24) - 1);
        assert_eq!(LinearCode::from_words(24, rows), golay24());
    }

    #[test]
    fn parameters() {
        let c24 = golay24();
        assert_eq!((c24.length(), c24.dimension()), (24, 12));
        assert_eq!(c24.min_distance().unwrap(), Some(8));
        assert!(c24.is_even());
        let c23 = golay23();
        assert_eq!((c23.length(), c23.dimension()), (23, 12));
        assert_eq!(c23.min_distance().unwrap(), Some(7));
        assert!(!c23.is_even());
        let e = golay23_even();
        assert_eq!((e.length(), e.dimension()), (23, 11));
        assert_eq!(e.min_distance().unwrap(), Some(8));
    }

    #[test]
    fn extended_code_is_self_dual() {
        let rows = golay24().basis_words().to_vec();
        for &a in &rows {
            for &b in &rows {
                assert_eq!((a & b).count_ones() % 2, 0);
            }
        }
    }
}
