use alloc::vec::Vec;

use super::group::PermGroup;
use super::permutation::Permutation;
use crate::error::{Error, Result};
use crate::gf2::{coord_bit, permute_word, BitCompressor, LinearCode};

/// Explicit relabeling tables are refused above this many vertices.
pub const MAX_EXPLICIT_DOMAIN: usize = 1 << 16;

/// The group `T ⋊ H` acting on the cosets of a code, where `T` is
/// generated by translations and `H` by coordinate permutations preserving
/// the code.
///
/// Vertices are syndrome indices of the code; with `restrict_even` only the
/// cosets inside the even-weight space are kept, re-indexed densely. The
/// group is held structurally and only materialized on request.
#[derive(Clone, Debug)]
pub struct AffineGroup {
    code: LinearCode,
    restrict_even: bool,
    linear: Vec<Permutation>,
    translations: Vec<u64>,
    /// Packs an even syndrome into a dense index, with the echelon rows of
    /// the even syndromes for the way back.
    even: Option<(BitCompressor, Vec<u64>)>,
    domain_bits: usize,
}

impl AffineGroup {
    /// Translations by every `e_i`, or every `e_{1,j}` when `restrict_even`,
    /// together with the coordinate permutations `h_gens`.
    pub fn new(code: &LinearCode, h_gens: &[Permutation], restrict_even: bool) -> Result<Self> {
        let n = code.length();
        for h in h_gens {
            if !code.is_automorphism(h)? {
                return Err(Error::NotAutomorphism);
            }
        }
        if restrict_even && !code.is_even() {
            return Err(Error::NotEven);
        }
        let translations: Vec<u64> = if restrict_even {
            (1..n).map(|j| coord_bit(n, 0) | coord_bit(n, j)).collect()
        } else {
            (0..n).map(|i| coord_bit(n, i)).collect()
        };
        let codim = code.codimension();
        let (even, domain_bits) = if restrict_even {
            if codim == 0 {
                return Err(Error::NotEven);
            }
            let syndromes: Vec<u64> = translations
                .iter()
                .map(|&t| code.syndrome_word(t))
                .collect();
            let span = LinearCode::from_words(codim, syndromes);
            let mask = span
                .pivots()
                .iter()
                .fold(0u64, |m, &p| m | coord_bit(codim, p));
            let dim = span.dimension();
            (
                Some((BitCompressor::new(mask), span.basis_words().to_vec())),
                dim,
            )
        } else {
            (None, codim)
        };
        if domain_bits >= usize::BITS as usize {
            return Err(Error::QuotientTooLarge {
                codimension: domain_bits,
                max: usize::BITS as usize - 1,
            });
        }
        Ok(AffineGroup {
            code: code.clone(),
            restrict_even,
            linear: h_gens.to_vec(),
            translations,
            even,
            domain_bits,
        })
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn restrict_even(&self) -> bool {
        self.restrict_even
    }

    pub fn linear_generators(&self) -> &[Permutation] {
        &self.linear
    }

    /// Translation vectors as raw words.
    pub fn translation_words(&self) -> &[u64] {
        &self.translations
    }

    pub fn domain_bits(&self) -> usize {
        self.domain_bits
    }

    pub fn domain_size(&self) -> usize {
        1usize << self.domain_bits
    }

    /// Vertex index of the coset `x + C`; `x` must be even when restricted.
    pub fn vertex_of(&self, x: u64) -> usize {
        let s = self.code.syndrome_word(x);
        match &self.even {
            Some((c, _)) => c.extract(s) as usize,
            None => s as usize,
        }
    }

    /// A vector in the coset with index `vertex`.
    pub fn vertex_vector(&self, vertex: usize) -> u64 {
        let s = match &self.even {
            // Row k carries the k-th highest pivot, which extracts to bit
            // dim-1-k of the index.
            Some((_, rows)) => {
                let dim = rows.len();
                rows.iter()
                    .enumerate()
                    .filter(|&(k, _)| vertex >> (dim - 1 - k) & 1 == 1)
                    .fold(0, |acc, (_, &r)| acc ^ r)
            }
            None => vertex as u64,
        };
        self.code.coset_word(s)
    }

    /// Image of `vertex` under coordinate permutation `linear[k]`.
    pub fn apply_linear(&self, k: usize, vertex: usize) -> usize {
        let n = self.code.length();
        self.vertex_of(permute_word(n, self.vertex_vector(vertex), &self.linear[k]))
    }

    /// Vertex index of each translation; translation `t` acts as `v -> v ^ t`.
    pub fn translation_vertices(&self) -> Vec<usize> {
        self.translations
            .iter()
            .map(|&t| self.vertex_of(t))
            .collect()
    }

    /// The coordinate-permutation part `H` as a group on `[n]`.
    pub fn linear_group(&self) -> Result<PermGroup> {
        PermGroup::new(self.code.length(), &self.linear)
    }

    /// Relabeling tables: translations first, then the linear generators.
    pub fn tables(&self) -> Result<Vec<Permutation>> {
        let size = self.domain_size();
        if size > MAX_EXPLICIT_DOMAIN {
            return Err(Error::TooLarge {
                size,
                max: MAX_EXPLICIT_DOMAIN,
            });
        }
        let mut out = Vec::new();
        for t in self.translation_vertices() {
            let images = (0..size).map(|v| (v ^ t) as u32).collect();
            out.push(Permutation::from_images_unchecked(images));
        }
        for k in 0..self.linear.len() {
            let images = (0..size).map(|v| self.apply_linear(k, v) as u32).collect();
            out.push(Permutation::from_images(images)?);
        }
        Ok(out)
    }

    /// The group as explicit permutations of the vertices.
    pub fn perm_group(&self) -> Result<PermGroup> {
        PermGroup::new(self.domain_size(), &self.tables()?)
    }

    /// `|translations| · |H|`, valid when `H` acts faithfully on the cosets.
    ///
    /// Faithfulness is confirmed by `H` acting faithfully on the translation
    /// vertices, which requires those vertices to be distinct; otherwise the
    /// order is computed from the explicit group.
    pub fn order(&self) -> Result<u128> {
        let tv = self.translation_vertices();
        let mut sorted = tv.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let n = self.code.length();
        // A permutation fixing every e_i coset (or, for n >= 3, every
        // e_{1,j} coset) is the identity.
        if sorted.len() == tv.len() && (!self.restrict_even || n >= 3) {
            return Ok((1u128 << self.domain_bits) * self.linear_group()?.order());
        }
        Ok(self.perm_group()?.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::registry::s_n_gens;

    #[test]
    fn cube_group_order() {
        let code = LinearCode::zero_code(4).unwrap();
        let g = AffineGroup::new(&code, &s_n_gens(4).unwrap(), false).unwrap();
        assert_eq!(g.domain_size(), 16);
        assert_eq!(g.order().unwrap(), 384);
        assert_eq!(g.perm_group().unwrap().order(), 384);
    }

    #[test]
    fn folded_even_group_order() {
        let code = LinearCode::repetition_code(8).unwrap();
        let g = AffineGroup::new(&code, &s_n_gens(8).unwrap(), true).unwrap();
        assert_eq!(g.domain_size(), 64);
        assert_eq!(g.order().unwrap(), 64 * 40320);
        assert_eq!(g.perm_group().unwrap().order(), 64 * 40320);
    }

    #[test]
    fn vertex_indexing_round_trips() {
        let code = LinearCode::repetition_code(6).unwrap();
        let g = AffineGroup::new(&code, &[], true).unwrap();
        for v in 0..g.domain_size() {
            let x = g.vertex_vector(v);
            assert_eq!(x.count_ones() % 2, 0);
            assert_eq!(g.vertex_of(x), v);
        }
    }

    #[test]
    fn rejects_non_automorphisms_and_odd_codes() {
        let code = LinearCode::repetition_code(5).unwrap();
        assert_eq!(
            AffineGroup::new(&code, &[], true).unwrap_err(),
            Error::NotEven
        );
        let c = LinearCode::from_rows(4, &["1100".parse().unwrap()]).unwrap();
        let bad = Permutation::transposition(4, 1, 2);
        assert_eq!(
            AffineGroup::new(&c, &[bad], false).unwrap_err(),
            Error::NotAutomorphism
        );
    }
}
