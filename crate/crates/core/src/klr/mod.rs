//! Homogeneous KLR modules `S(C)` as explicit integer matrices.
//!
//! The basis of `S(C)` is a homogeneous component `C` of the weight graph.
//! Idempotents project, `y` acts by zero and `ψ_r` performs the swap of
//! positions `r, r+1` when the result stays in `C`. Operators live over `Z`;
//! since all entries are `-1, 0, 1` and the relations are integer
//! identities, a pass over `Z` is a pass over any field. `S(C)` is placed in
//! degree 0.

pub mod grading;
pub mod linear_op;
pub mod module;
pub mod quiver;
pub mod relations;

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::dynkin::DynkinGraph;
use crate::error::Result;
use crate::weight_graph::{homogeneous_components_of, Component, Content};
use crate::word::Word;

pub use grading::{q_character, verify_grading, GradingReport, QCharacter};
pub use linear_op::LinearOp;
pub use module::{act_e, act_psi, act_y, build_module, HomogeneousModule};
pub use quiver::OrientedQuiver;
pub use relations::{
    verify_relations, verify_relations_with, IdempotentCoverage, Relation, RelationReport,
};

/// All homogeneous components of `G_α` for every content `α` of the given
/// words, ordered by content and then by minimal word.
pub fn components_for_words(words: &[Word], g: &DynkinGraph) -> Result<Vec<Component>> {
    let contents: BTreeSet<Content> = words
        .iter()
        .map(|w| Content::of_word(w, g.rank()))
        .collect();
    let per: Vec<Vec<Component>> = contents
        .par_iter()
        .map(|a| homogeneous_components_of(a, g))
        .collect::<Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

/// Outcome of checking one module under both orientations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleCheck {
    pub representative: Word,
    pub dim: usize,
    pub relations_default: bool,
    pub relations_reversed: bool,
    pub grading: bool,
    pub checked: usize,
}

impl ModuleCheck {
    pub fn passed(&self) -> bool {
        self.relations_default && self.relations_reversed && self.grading
    }
}

/// Builds and checks `S(C)` for every component.
pub fn check_modules(components: &[Component], g: &DynkinGraph) -> Result<Vec<ModuleCheck>> {
    let q = OrientedQuiver::default_for(g);
    let rev = q.reversed();
    components
        .par_iter()
        .map(|c| {
            let m = build_module(c, &q)?;
            let a = verify_relations(&m, &q);
            let b = verify_relations(&m, &rev);
            Ok(ModuleCheck {
                representative: c.representative().clone(),
                dim: m.dim(),
                relations_default: a.passed(),
                relations_reversed: b.passed(),
                grading: verify_grading(&m, &q).passed(),
                checked: a.checked() + b.checked(),
            })
        })
        .collect()
}
