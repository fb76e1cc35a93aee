//! Canonical reduced words of type `D_n`.
//!
//! Every element of `W(D_n)` has exactly one reduced word of the form
//!
//! ```text
//! s_{1 i_1} s_{2 i_2} .. s_{n-1 i_{n-1}} · s_{n j_1} s_{n-1 j_2} s_{n j_3} ..
//! ```
//!
//! with `1 <= i_k <= k+1` and `1 <= j_1 < .. < j_l <= n-1`. The left part is
//! the prefix and the right part the suffix. `i_k = k+1` encodes an empty
//! prefix segment, and the one-letter suffix segment `[n]` is stored as
//! `j = n-1`.
//!
//! Enumeration order: prefix segments by increasing length with segment 1
//! most significant, then suffix parameters in lexicographic order. The
//! identity comes first.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dynkin::DynkinGraph;
use crate::error::{Error, Result};
use crate::homogeneity::extends_homogeneously;
use crate::word::{Letter, Word};

/// Appends the segment `s_{ij}` of rank `n` to `out`.
fn push_segment(out: &mut Vec<Letter>, i: usize, j: usize, n: usize) {
    if i < n {
        if i >= j {
            out.extend((j..=i).rev().map(|a| a as Letter));
        }
    } else if j <= n - 2 {
        out.push(n as Letter);
        out.extend((j..=n - 2).rev().map(|a| a as Letter));
    } else if j <= n {
        out.push(n as Letter);
    }
}

/// The segment `s_{ij}`: `[i, i-1, .., j]` for `i < n`, and
/// `[n, n-2, .., j]` (or `[n]` when `j` is `n-1` or `n`) for `i = n`.
pub fn segment(i: usize, j: usize, n: usize) -> Result<Word> {
    if i < 1 || i > n {
        return Err(Error::invalid(format!("segment top {i} outside 1..={n}")));
    }
    if j < 1 {
        return Err(Error::invalid("segment bottom must be >= 1"));
    }
    let mut out = Vec::new();
    push_segment(&mut out, i, j, n);
    Ok(Word::new(out))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    n: usize,
    prefix: Vec<u8>,
    suffix: Vec<u8>,
}

impl CanonicalForm {
    /// `prefix[k-1] = i_k`, `suffix = (j_1, .., j_l)`.
    pub fn new(n: usize, prefix: Vec<u8>, suffix: Vec<u8>) -> Result<Self> {
        if n < 4 {
            return Err(Error::invalid("n must be ≥ 4 for type D"));
        }
        if n > Letter::MAX as usize {
            return Err(Error::invalid(format!("rank {n} too large")));
        }
        if prefix.len() != n - 1 {
            return Err(Error::invalid(format!(
                "prefix must have {} indices, got {}",
                n - 1,
                prefix.len()
            )));
        }
        for (idx, &i) in prefix.iter().enumerate() {
            let k = idx + 1;
            if i < 1 || i as usize > k + 1 {
                return Err(Error::invalid(format!("i_{k} = {i} outside 1..={}", k + 1)));
            }
        }
        check_suffix_params(n, &suffix)?;
        Ok(CanonicalForm { n, prefix, suffix })
    }

    /// The identity element.
    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, (2..=n as u8).collect(), Vec::new())
    }

    /// A form with every prefix segment empty.
    pub fn suffix_only(n: usize, suffix: Vec<u8>) -> Result<Self> {
        Self::new(n, (2..=n as u8).collect(), suffix)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn prefix_indices(&self) -> &[u8] {
        &self.prefix
    }

    pub fn suffix_params(&self) -> &[u8] {
        &self.suffix
    }

    pub fn prefix_word(&self) -> Word {
        let mut out = Vec::new();
        for (idx, &i) in self.prefix.iter().enumerate() {
            push_segment(&mut out, idx + 1, i as usize, self.n);
        }
        Word::new(out)
    }

    pub fn suffix_word(&self) -> Word {
        suffix_word(self.n, &self.suffix)
    }

    pub fn realize(&self) -> Word {
        let mut w = self.prefix_word();
        w.extend_from(&self.suffix_word());
        w
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}{{i={:?}, j={:?}}}", self.n, self.prefix, self.suffix)
    }
}

pub(crate) fn check_suffix_params(n: usize, params: &[u8]) -> Result<()> {
    for (m, &j) in params.iter().enumerate() {
        if j < 1 || j as usize > n - 1 {
            return Err(Error::invalid(format!(
                "suffix parameter j_{} = {j} outside 1..={}",
                m + 1,
                n - 1
            )));
        }
        if m > 0 && params[m - 1] >= j {
            return Err(Error::invalid(format!(
                "suffix parameters must increase strictly: {params:?}"
            )));
        }
    }
    Ok(())
}

/// `s_{n j_1} s_{n-1 j_2} s_{n j_3} ..`, without validation.
pub(crate) fn suffix_word(n: usize, params: &[u8]) -> Word {
    let mut out = Vec::new();
    for (m, &j) in params.iter().enumerate() {
        let top = if m % 2 == 0 { n } else { n - 1 };
        push_segment(&mut out, top, j as usize, n);
    }
    Word::new(out)
}

pub fn realize(cf: &CanonicalForm) -> Word {
    cf.realize()
}

/// Reads `w` back into its canonical form.
///
/// Prefix segments are read as maximal descending runs starting at
/// `1, 2, .., n-1` in turn; the remainder must be an alternating suffix.
pub fn split(w: &[Letter], n: usize) -> Result<CanonicalForm> {
    if n < 4 {
        return Err(Error::invalid("n must be ≥ 4 for type D"));
    }
    if let Some(p) = w.iter().position(|&a| a < 1 || a as usize > n) {
        return Err(Error::parse(p, format!("letter {} outside 1..={n}", w[p])));
    }
    let top = n as Letter;
    let mut pos = 0;
    let mut prefix = Vec::with_capacity(n - 1);
    for k in 1..n as Letter {
        if pos < w.len() && w[pos] == k {
            let mut last = k;
            pos += 1;
            while pos < w.len() && last > 1 && w[pos] == last - 1 {
                last -= 1;
                pos += 1;
            }
            prefix.push(last);
        } else {
            prefix.push(k + 1);
        }
    }

    let mut suffix: Vec<u8> = Vec::new();
    let mut expect_top = true;
    while pos < w.len() {
        let start = pos;
        let head = if expect_top { top } else { top - 1 };
        if w[pos] != head {
            return Err(Error::parse(
                pos,
                format!(
                    "expected suffix segment starting with {head}, found {}",
                    w[pos]
                ),
            ));
        }
        pos += 1;
        let mut last = head;
        if expect_top {
            // s_{n j} continues with n-2, n-3, ..
            if pos < w.len() && w[pos] == top - 2 {
                last = top - 2;
                pos += 1;
            }
        }
        if last != top || !expect_top {
            while pos < w.len() && last > 1 && w[pos] == last - 1 {
                last -= 1;
                pos += 1;
            }
        }
        let j = if last == top { top - 1 } else { last };
        if let Some(&prev) = suffix.last() {
            if prev >= j {
                return Err(Error::parse(
                    start,
                    format!("suffix parameters not increasing ({prev} then {j})"),
                ));
            }
        }
        suffix.push(j);
        expect_top = !expect_top;
    }
    CanonicalForm::new(n, prefix, suffix)
}

/// All `2^{n-1}` suffix parameter lists in lexicographic order.
pub fn suffix_params_all(n: usize) -> Vec<Vec<u8>> {
    fn go(next: u8, max: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        out.push(cur.clone());
        for j in next..=max {
            cur.push(j);
            go(j + 1, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::with_capacity(1 << (n - 1));
    go(1, (n - 1) as u8, &mut Vec::new(), &mut out);
    out
}

/// Iterator over all `n! · 2^{n-1}` canonical forms of `D_n`.
pub struct CanonicalForms {
    n: usize,
    /// Current length of each prefix segment; segment `k` has length `0..=k`.
    lengths: Vec<usize>,
    suffixes: Vec<Vec<u8>>,
    suffix_idx: usize,
    done: bool,
}

impl Iterator for CanonicalForms {
    type Item = CanonicalForm;

    fn next(&mut self) -> Option<CanonicalForm> {
        if self.done {
            return None;
        }
        let prefix = self
            .lengths
            .iter()
            .enumerate()
            .map(|(idx, &len)| (idx + 2 - len) as u8)
            .collect();
        let cf = CanonicalForm {
            n: self.n,
            prefix,
            suffix: self.suffixes[self.suffix_idx].clone(),
        };
        self.suffix_idx += 1;
        if self.suffix_idx == self.suffixes.len() {
            self.suffix_idx = 0;
            // odometer, last segment least significant
            let mut idx = self.lengths.len();
            loop {
                if idx == 0 {
                    self.done = true;
                    break;
                }
                idx -= 1;
                if self.lengths[idx] < idx + 1 {
                    self.lengths[idx] += 1;
                    break;
                }
                self.lengths[idx] = 0;
            }
        }
        Some(cf)
    }
}

pub fn enumerate_canonical(n: usize) -> Result<CanonicalForms> {
    if n < 4 {
        return Err(Error::invalid("n must be ≥ 4 for type D"));
    }
    Ok(CanonicalForms {
        n,
        lengths: vec![0; n - 1],
        suffixes: suffix_params_all(n),
        suffix_idx: 0,
        done: false,
    })
}

/// `n! · 2^{n-1}`, the order of `W(D_n)`.
pub fn group_order(n: usize) -> u128 {
    (1..=n as u128).product::<u128>() << (n - 1)
}

/// Depth-first walk over products `s_{1 i_1} .. s_{top i_top}` in the
/// enumeration order. With `prune` set, branches whose partial word is not
/// homogeneous are cut (a prefix of a homogeneous word is homogeneous).
fn walk_prefixes(top: usize, prune: Option<&DynkinGraph>, visit: &mut dyn FnMut(&[u8], &[Letter])) {
    fn go(
        k: usize,
        top: usize,
        prune: Option<&DynkinGraph>,
        indices: &mut Vec<u8>,
        letters: &mut Vec<Letter>,
        visit: &mut dyn FnMut(&[u8], &[Letter]),
    ) {
        if k > top {
            visit(indices, letters);
            return;
        }
        let mark = letters.len();
        indices.push((k + 1) as u8);
        go(k + 1, top, prune, indices, letters, visit);
        indices.pop();
        for len in 1..=k {
            let a = (k + 1 - len) as Letter;
            if let Some(g) = prune {
                if !extends_homogeneously(letters, a, g) {
                    break;
                }
            }
            letters.push(a);
            indices.push(a);
            go(k + 1, top, prune, indices, letters, visit);
            indices.pop();
        }
        letters.truncate(mark);
    }
    go(1, top, prune, &mut Vec::new(), &mut Vec::new(), visit);
}

/// A homogeneous canonical word together with its form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FcWord {
    pub form: CanonicalForm,
    pub word: Word,
}

/// Homogeneous prefixes of `D_n`, i.e. homogeneous canonical words of
/// `A_{n-1}`, as `(indices, word)` pairs in enumeration order.
pub fn homogeneous_prefixes(n: usize) -> Result<Vec<(Vec<u8>, Word)>> {
    let g = DynkinGraph::type_d(n)?;
    let mut out = Vec::new();
    walk_prefixes(n - 1, Some(&g), &mut |idx, letters| {
        out.push((idx.to_vec(), Word::from(letters)));
    });
    Ok(out)
}

/// All homogeneous canonical words of `D_n`, in enumeration order.
///
/// Equivalent to filtering [`enumerate_canonical`] by homogeneity, but
/// prunes non-homogeneous prefixes early.
pub fn homogeneous_canonical(n: usize) -> Result<Vec<FcWord>> {
    let g = DynkinGraph::type_d(n)?;
    let prefixes = homogeneous_prefixes(n)?;
    let suffixes: Vec<(Vec<u8>, Word)> = suffix_params_all(n)
        .into_iter()
        .map(|p| {
            let w = suffix_word(n, &p);
            (p, w)
        })
        .collect();
    let mut out = Vec::new();
    let mut buf: Vec<Letter> = Vec::new();
    for (idx, pw) in &prefixes {
        'suffix: for (params, sw) in &suffixes {
            buf.clear();
            buf.extend_from_slice(pw);
            for &a in sw.iter() {
                if !extends_homogeneously(&buf, a, &g) {
                    continue 'suffix;
                }
                buf.push(a);
            }
            out.push(FcWord {
                form: CanonicalForm {
                    n,
                    prefix: idx.clone(),
                    suffix: params.clone(),
                },
                word: Word::from(buf.as_slice()),
            });
        }
    }
    Ok(out)
}

/// `(n+3)/2 · C_n - 1`, the number of fully commutative elements of `D_n`.
pub fn fc_count_formula_d(n: usize) -> num_bigint::BigUint {
    let c = crate::packets::catalan::catalan_number(n);
    (c * (n as u32 + 3)) / 2u32 - 1u32
}

/// Canonical words `s_{1 i_1} .. s_{n i_n}` of `A_n`, one per element of
/// the symmetric group `S_{n+1}`.
pub fn enumerate_type_a(n: usize) -> Result<Vec<Word>> {
    if n < 1 {
        return Err(Error::invalid("type A requires n >= 1"));
    }
    let mut out = Vec::new();
    walk_prefixes(n, None, &mut |_, letters| out.push(Word::from(letters)));
    Ok(out)
}

/// Homogeneous canonical words of `A_n` (one per fully commutative element).
pub fn homogeneous_type_a(n: usize) -> Result<Vec<Word>> {
    let g = DynkinGraph::type_a(n)?;
    let mut out = Vec::new();
    walk_prefixes(n, Some(&g), &mut |_, letters| out.push(Word::from(letters)));
    Ok(out)
}
