//! Deterministic input generators shared by the benchmark targets.

use sylv_core::{enumerate_shapes, Word};

/// A reproducible word of the given length over `alphabet` letters,
/// spread by a fixed affine step so small prefixes already mix.
pub fn sample_word(len: usize, alphabet: u32) -> Word {
    let ranks: Vec<u32> = (0..len as u32).map(|i| (i * 37 + 11) % alphabet).collect();
    Word::from_ranks(&ranks)
}

/// A mid-sequence shape with n nodes: neither comb, picked at a fixed
/// offset so class sizes stay non-trivial.
pub fn sample_shape(n: usize) -> sylv_core::TreeShape {
    let shapes = enumerate_shapes(n);
    shapes[shapes.len() / 2].clone()
}
