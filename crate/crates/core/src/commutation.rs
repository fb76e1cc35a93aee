//! Commutation classes and full commutativity.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::dynkin::DynkinGraph;
use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Default bound on the size of a commutation class.
pub const DEFAULT_CLASS_CAP: usize = 1_000_000;

/// Words reachable from `w` by swapping adjacent commuting letters, in
/// lexicographic order. Fails once more than `cap` words have been seen.
pub fn commutation_class_capped(w: &[Letter], g: &DynkinGraph, cap: usize) -> Result<Vec<Word>> {
    g.check_word(w)?;
    let start = Word::from(w);
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(v) = queue.pop_front() {
        for r in 0..v.len().saturating_sub(1) {
            if g.commute(v[r], v[r + 1]) {
                let mut letters = v.to_vec();
                letters.swap(r, r + 1);
                let u = Word::new(letters);
                if !seen.contains(&u) {
                    if seen.len() >= cap {
                        return Err(Error::ResourceLimit(format!(
                            "commutation class of {w:?} exceeds {cap} words"
                        )));
                    }
                    seen.insert(u.clone());
                    queue.push_back(u);
                }
            }
        }
    }
    let sorted: BTreeSet<Word> = seen.into_iter().collect();
    Ok(sorted.into_iter().collect())
}

pub fn commutation_class(w: &[Letter], g: &DynkinGraph) -> Result<Vec<Word>> {
    commutation_class_capped(w, g, DEFAULT_CLASS_CAP)
}

/// Position of a factor `[i, i', i]` with `i, i'` neighbors, if any.
pub fn braid_factor(w: &[Letter], g: &DynkinGraph) -> Option<usize> {
    w.windows(3)
        .position(|f| f[0] == f[2] && g.are_neighbors(f[0], f[1]))
}

/// Whether the reduced word `w` represents a fully commutative element:
/// no word in its commutation class contains a braid factor `[i, i', i]`.
///
/// `w` is assumed reduced. A factor `[i, i]` anywhere in the class is also
/// reported as not fully commutative, since such a word is not reduced.
pub fn is_fully_commutative(w: &[Letter], g: &DynkinGraph) -> Result<bool> {
    let class = commutation_class(w, g)?;
    Ok(class
        .iter()
        .all(|v| braid_factor(v, g).is_none() && v.windows(2).all(|p| p[0] != p[1])))
}
