use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::dynkin::DynkinGraph;
use crate::klr::module::HomogeneousModule;
use crate::klr::quiver::OrientedQuiver;
use crate::word::{Letter, Word};

/// Degree every `S(C)` is placed in.
pub const MODULE_DEGREE: i32 = 0;

/// `deg ψ_r e(w)`: `-2` for equal letters, `1` for neighbors, `0` otherwise.
pub fn psi_degree(a: Letter, b: Letter, g: &DynkinGraph) -> i32 {
    if a == b {
        -2
    } else if g.are_neighbors(a, b) {
        1
    } else {
        0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingFailure {
    pub word: Word,
    pub r: usize,
    pub degree: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingReport {
    pub edges_checked: usize,
    pub module_degree: i32,
    pub failures: Vec<GradingFailure>,
}

impl GradingReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every `ψ_r` connecting two basis vectors must have degree zero, so the
/// whole module sits in one degree.
pub fn verify_grading(m: &HomogeneousModule, q: &OrientedQuiver) -> GradingReport {
    let g = q.graph();
    let mut edges_checked = 0;
    let mut failures = Vec::new();
    for w in m.basis() {
        for r in 1..w.len() {
            let v = w.swapped(r).expect("r in range");
            if m.index_of(&v).is_none() {
                continue;
            }
            edges_checked += 1;
            let degree = psi_degree(w[r - 1], w[r], g);
            if degree != 0 {
                failures.push(GradingFailure {
                    word: w.clone(),
                    r,
                    degree,
                });
            }
        }
    }
    GradingReport {
        edges_checked,
        module_degree: MODULE_DEGREE,
        failures,
    }
}

/// `ch_q M = Σ_w (dim_q M_w) w`, with each `dim_q` stored as degree → multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct QCharacter {
    pub terms: BTreeMap<Word, BTreeMap<i32, u64>>,
}

impl QCharacter {
    pub fn dimension(&self) -> u64 {
        self.terms.values().flat_map(|p| p.values()).sum()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }
}

impl fmt::Display for QCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (w, poly) in &self.terms {
            for (&deg, &mult) in poly {
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                if mult != 1 {
                    write!(f, "{mult}")?;
                }
                if deg != 0 {
                    write!(f, "q^{deg} ")?;
                }
                write!(f, "{w}")?;
            }
        }
        Ok(())
    }
}

pub fn q_character(m: &HomogeneousModule) -> QCharacter {
    QCharacter {
        terms: m
            .basis()
            .iter()
            .map(|w| (w.clone(), BTreeMap::from([(MODULE_DEGREE, 1)])))
            .collect(),
    }
}
