//! The homogeneity condition on words.
//!
//! A word is homogeneous when between any two equal letters `w_r = w_s`
//! there are two positions `r < t < u < s` whose letters are both neighbors
//! of `w_r`. It is enough to test consecutive occurrences of each letter: if
//! the condition holds between every pair of consecutive occurrences, the
//! positions found for the first gap also lie between any wider pair.

use crate::dynkin::DynkinGraph;
use crate::word::Letter;

/// Whether appending `letter` to the (already homogeneous) `prefix` keeps it
/// homogeneous. Only the previous occurrence of `letter` needs checking.
#[inline]
pub fn extends_homogeneously(prefix: &[Letter], letter: Letter, g: &DynkinGraph) -> bool {
    let mut neighbors_seen = 0;
    for &b in prefix.iter().rev() {
        if b == letter {
            return neighbors_seen >= 2;
        }
        if g.are_neighbors(letter, b) {
            neighbors_seen += 1;
        }
    }
    true
}

pub fn is_homogeneous(w: &[Letter], g: &DynkinGraph) -> bool {
    (0..w.len()).all(|s| extends_homogeneously(&w[..s], w[s], g))
}

/// First offending pair `(r, s)` of 1-based positions, if any.
pub fn homogeneity_witness(w: &[Letter], g: &DynkinGraph) -> Option<(usize, usize)> {
    for s in 0..w.len() {
        if !extends_homogeneously(&w[..s], w[s], g) {
            let r = w[..s].iter().rposition(|&b| b == w[s]).unwrap();
            return Some((r + 1, s + 1));
        }
    }
    None
}
