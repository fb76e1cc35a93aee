use std::collections::HashMap;

use crate::dynkin::DynkinGraph;
use crate::error::{Error, Result};
use crate::homogeneity::is_homogeneous;
use crate::klr::linear_op::LinearOp;
use crate::klr::quiver::OrientedQuiver;
use crate::weight_graph::{Component, Content};
use crate::word::Word;

/// The module `S(C)`: basis `v_w` for `w ∈ C`, `e(w')` projects, `y` acts by
/// zero and `ψ_r` swaps positions `r, r+1` whenever that stays inside `C`.
#[derive(Clone, Debug)]
pub struct HomogeneousModule {
    alpha: Content,
    basis: Vec<Word>,
    index: HashMap<Word, usize>,
    graph: DynkinGraph,
}

impl HomogeneousModule {
    /// Skips every check except equal content. Meant for negative tests.
    pub fn from_words_unchecked(words: Vec<Word>, graph: &DynkinGraph) -> Result<Self> {
        let mut basis = words;
        basis.sort();
        basis.dedup();
        let first = basis
            .first()
            .ok_or_else(|| Error::domain("a module needs at least one basis word"))?;
        let alpha = Content::of_word(first, graph.rank());
        if let Some(w) = basis
            .iter()
            .find(|w| Content::of_word(w, graph.rank()) != alpha)
        {
            return Err(Error::domain(format!(
                "{w} has content different from {alpha}"
            )));
        }
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        Ok(HomogeneousModule {
            alpha,
            basis,
            index,
            graph: graph.clone(),
        })
    }

    pub fn content(&self) -> &Content {
        &self.alpha
    }

    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Word length `d`, the number of `y` generators.
    pub fn height(&self) -> usize {
        self.alpha.height()
    }

    pub fn graph(&self) -> &DynkinGraph {
        &self.graph
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }
}

/// Builds `S(C)` after checking that `c` is a full homogeneous component.
pub fn build_module(c: &Component, q: &OrientedQuiver) -> Result<HomogeneousModule> {
    let g = q.graph();
    let m = HomogeneousModule::from_words_unchecked(c.words.clone(), g)?;
    if let Some(w) = m.basis.iter().find(|w| !is_homogeneous(w, g)) {
        return Err(Error::domain(format!("component is not homogeneous: {w}")));
    }
    for w in &m.basis {
        for r in 1..w.len() {
            if g.commute(w[r - 1], w[r]) {
                let v = w.swapped(r).expect("r in range");
                if m.index_of(&v).is_none() {
                    return Err(Error::domain(format!(
                        "not a full component: {w} -> {v} leaves it"
                    )));
                }
            }
        }
    }
    Ok(m)
}

pub fn act_e(m: &HomogeneousModule, w: &Word) -> Result<LinearOp> {
    if Content::of_word(w, m.graph.rank()) != m.alpha || w.iter().any(|&a| !m.graph.contains(a)) {
        return Err(Error::domain(format!(
            "{w} does not have content {}",
            m.alpha
        )));
    }
    Ok(match m.index_of(w) {
        Some(i) => LinearOp::unit(m.dim(), i, i, 1),
        None => LinearOp::zero(m.dim()),
    })
}

pub fn act_y(m: &HomogeneousModule, r: usize) -> Result<LinearOp> {
    if r == 0 || r > m.height() {
        return Err(Error::invalid(format!(
            "y_{r} needs 1 <= r <= {}",
            m.height()
        )));
    }
    Ok(LinearOp::zero(m.dim()))
}

pub fn act_psi(m: &HomogeneousModule, r: usize) -> Result<LinearOp> {
    if r == 0 || r >= m.height() {
        return Err(Error::invalid(format!(
            "psi_{r} needs 1 <= r <= {}",
            m.height().saturating_sub(1)
        )));
    }
    let mut op = LinearOp::zero(m.dim());
    for (col, w) in m.basis.iter().enumerate() {
        let v = w.swapped(r).expect("r in range");
        if let Some(row) = m.index_of(&v) {
            op.set(row, col, 1);
        }
    }
    Ok(op)
}
