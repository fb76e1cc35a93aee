//! Defining relations of `R_α` checked as matrix identities on `S(C)`.
//!
//! Both sides of each relation are built from the generator operators, so an
//! orientation-sensitive right-hand side is really evaluated, not assumed zero.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::klr::linear_op::LinearOp;
use crate::klr::module::{act_e, act_psi, act_y, HomogeneousModule};
use crate::klr::quiver::OrientedQuiver;
use crate::weight_graph::words_of_iter;
use crate::word::{Letter, Word};

/// Words of `⟨I⟩_α \ C` sampled by default.
pub const DEFAULT_SAMPLE: usize = 100;
/// Largest height for which [`IdempotentCoverage::Full`] is allowed.
pub const FULL_COVERAGE_MAX_HEIGHT: usize = 8;

/// Which idempotents `e(w)` the relations are checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdempotentCoverage {
    /// All of `C` plus the first `n` lexicographic words outside `C`.
    Sample(usize),
    /// Every word of content `α`.
    Full,
}

impl Default for IdempotentCoverage {
    fn default() -> Self {
        IdempotentCoverage::Sample(DEFAULT_SAMPLE)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `e(w) e(v) = δ_{w,v} e(w)`
    EOrthogonal,
    /// `Σ_w e(w) = 1`
    ESum,
    /// `y_k e(w) = e(w) y_k`
    YE,
    /// `ψ_k e(w) = e(s_k w) ψ_k`
    PsiE,
    /// `y_k y_l = y_l y_k`
    YY,
    /// `y_k ψ_l = ψ_l y_k` for `k ≠ l, l+1`
    YPsi,
    /// `(y_{k+1} ψ_k − ψ_k y_k) e(w) = δ_{w_k, w_{k+1}} e(w)`
    DotSlideLeft,
    /// `(ψ_k y_{k+1} − y_k ψ_k) e(w) = δ_{w_k, w_{k+1}} e(w)`
    DotSlideRight,
    /// quadratic relation for `ψ_k² e(w)`
    PsiSquare,
    /// `ψ_k ψ_l = ψ_l ψ_k` for `|k − l| > 1`
    PsiFar,
    /// `(ψ_{k+1} ψ_k ψ_{k+1} − ψ_k ψ_{k+1} ψ_k) e(w)`
    Braid,
}

impl Relation {
    pub const ALL: [Relation; 11] = [
        Relation::EOrthogonal,
        Relation::ESum,
        Relation::YE,
        Relation::PsiE,
        Relation::YY,
        Relation::YPsi,
        Relation::DotSlideLeft,
        Relation::DotSlideRight,
        Relation::PsiSquare,
        Relation::PsiFar,
        Relation::Braid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relation::EOrthogonal => "e_orthogonal",
            Relation::ESum => "e_sum",
            Relation::YE => "y_e",
            Relation::PsiE => "psi_e",
            Relation::YY => "y_y",
            Relation::YPsi => "y_psi",
            Relation::DotSlideLeft => "dot_slide_left",
            Relation::DotSlideRight => "dot_slide_right",
            Relation::PsiSquare => "psi_square",
            Relation::PsiFar => "psi_far",
            Relation::Braid => "braid",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Generator indices of the failing instance (`k`, `l`, ...).
    pub indices: Vec<usize>,
    /// Idempotent words involved, if any.
    pub words: Vec<Word>,
    pub lhs: Vec<(usize, usize, i64)>,
    pub rhs: Vec<(usize, usize, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationResult {
    pub relation: Relation,
    pub checked: usize,
    pub passed: usize,
    pub failures: Vec<Witness>,
}

impl RelationResult {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub basis: Vec<Word>,
    pub arrows: Vec<(Letter, Letter)>,
    pub idempotents: usize,
    pub relations: Vec<RelationResult>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.relations.iter().all(RelationResult::ok)
    }

    pub fn checked(&self) -> usize {
        self.relations.iter().map(|r| r.checked).sum()
    }

    pub fn failures(&self) -> impl Iterator<Item = (Relation, &Witness)> {
        self.relations
            .iter()
            .flat_map(|r| r.failures.iter().map(move |w| (r.relation, w)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Ctx<'a> {
    m: &'a HomogeneousModule,
    q: &'a OrientedQuiver,
    d: usize,
    words: Vec<Word>,
    /// `psi[k - 1] = ψ_k`
    psi: Vec<LinearOp>,
    /// `y[k - 1] = y_k`
    y: Vec<LinearOp>,
}

impl Ctx<'_> {
    fn e(&self, w: &Word) -> LinearOp {
        act_e(self.m, w).expect("idempotent words have the module's content")
    }

    fn psi(&self, k: usize) -> &LinearOp {
        &self.psi[k - 1]
    }

    fn y(&self, k: usize) -> &LinearOp {
        &self.y[k - 1]
    }

    fn zero(&self) -> LinearOp {
        LinearOp::zero(self.m.dim())
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<Witness>,
}

impl Tally {
    fn check(&mut self, lhs: LinearOp, rhs: LinearOp, indices: &[usize], words: &[&Word]) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(Witness {
                indices: indices.to_vec(),
                words: words.iter().map(|&w| w.clone()).collect(),
                lhs: lhs.triplets(),
                rhs: rhs.triplets(),
            });
        }
    }
}

fn check_relation(ctx: &Ctx<'_>, rel: Relation) -> RelationResult {
    let d = ctx.d;
    let mut t = Tally::default();
    match rel {
        Relation::EOrthogonal => {
            let es: Vec<LinearOp> = ctx.words.iter().map(|w| ctx.e(w)).collect();
            for (i, w) in ctx.words.iter().enumerate() {
                for (j, v) in ctx.words.iter().enumerate() {
                    let rhs = if i == j { es[i].clone() } else { ctx.zero() };
                    t.check(&es[i] * &es[j], rhs, &[], &[w, v]);
                }
            }
        }
        Relation::ESum => {
            let sum = ctx.words.iter().fold(ctx.zero(), |acc, w| &acc + &ctx.e(w));
            t.check(sum, LinearOp::identity(ctx.m.dim()), &[], &[]);
        }
        Relation::YE => {
            for k in 1..=d {
                for w in &ctx.words {
                    let e = ctx.e(w);
                    t.check(ctx.y(k) * &e, &e * ctx.y(k), &[k], &[w]);
                }
            }
        }
        Relation::PsiE => {
            for k in 1..d {
                for w in &ctx.words {
                    let skw = w.swapped(k).expect("k < d");
                    t.check(
                        ctx.psi(k) * &ctx.e(w),
                        &ctx.e(&skw) * ctx.psi(k),
                        &[k],
                        &[w],
                    );
                }
            }
        }
        Relation::YY => {
            for k in 1..=d {
                for l in 1..=d {
                    t.check(ctx.y(k) * ctx.y(l), ctx.y(l) * ctx.y(k), &[k, l], &[]);
                }
            }
        }
        Relation::YPsi => {
            for k in 1..=d {
                for l in 1..d {
                    if k != l && k != l + 1 {
                        t.check(ctx.y(k) * ctx.psi(l), ctx.psi(l) * ctx.y(k), &[k, l], &[]);
                    }
                }
            }
        }
        Relation::DotSlideLeft | Relation::DotSlideRight => {
            for k in 1..d {
                for w in &ctx.words {
                    let e = ctx.e(w);
                    let inner = if rel == Relation::DotSlideLeft {
                        &(ctx.y(k + 1) * ctx.psi(k)) - &(ctx.psi(k) * ctx.y(k))
                    } else {
                        &(ctx.psi(k) * ctx.y(k + 1)) - &(ctx.y(k) * ctx.psi(k))
                    };
                    let rhs = if w[k - 1] == w[k] {
                        e.clone()
                    } else {
                        ctx.zero()
                    };
                    t.check(&inner * &e, rhs, &[k], &[w]);
                }
            }
        }
        Relation::PsiSquare => {
            for k in 1..d {
                let sq = ctx.psi(k) * ctx.psi(k);
                for w in &ctx.words {
                    let e = ctx.e(w);
                    let (a, b) = (w[k - 1], w[k]);
                    let rhs = if a == b {
                        ctx.zero()
                    } else if ctx.q.arrow(a, b) {
                        &(ctx.y(k) - ctx.y(k + 1)) * &e
                    } else if ctx.q.arrow(b, a) {
                        &(ctx.y(k + 1) - ctx.y(k)) * &e
                    } else {
                        e.clone()
                    };
                    t.check(&sq * &e, rhs, &[k], &[w]);
                }
            }
        }
        Relation::PsiFar => {
            for k in 1..d {
                for l in 1..d {
                    if k.abs_diff(l) > 1 {
                        t.check(
                            ctx.psi(k) * ctx.psi(l),
                            ctx.psi(l) * ctx.psi(k),
                            &[k, l],
                            &[],
                        );
                    }
                }
            }
        }
        Relation::Braid => {
            for k in 1..d.saturating_sub(1) {
                let (p, p1) = (ctx.psi(k), ctx.psi(k + 1));
                let diff = &(&(p1 * p) * p1) - &(&(p * p1) * p);
                for w in &ctx.words {
                    let e = ctx.e(w);
                    let (a, b, c) = (w[k - 1], w[k], w[k + 1]);
                    let rhs = if c == a && ctx.q.arrow(a, b) {
                        e.clone()
                    } else if c == a && ctx.q.arrow(b, a) {
                        -&e
                    } else {
                        ctx.zero()
                    };
                    t.check(&diff * &e, rhs, &[k], &[w]);
                }
            }
        }
    }
    RelationResult {
        relation: rel,
        checked: t.checked,
        passed: t.checked - t.failures.len(),
        failures: t.failures,
    }
}

fn idempotent_words(m: &HomogeneousModule, coverage: IdempotentCoverage) -> Result<Vec<Word>> {
    match coverage {
        IdempotentCoverage::Full => {
            if m.height() > FULL_COVERAGE_MAX_HEIGHT {
                return Err(Error::ResourceLimit(format!(
                    "full idempotent coverage allowed up to height {FULL_COVERAGE_MAX_HEIGHT}, got {}",
                    m.height()
                )));
            }
            Ok(words_of_iter(m.content()).collect())
        }
        IdempotentCoverage::Sample(extra) => {
            let inside: HashSet<&Word> = m.basis().iter().collect();
            let mut words = m.basis().to_vec();
            words.extend(
                words_of_iter(m.content())
                    .filter(|w| !inside.contains(w))
                    .take(extra),
            );
            words.sort();
            Ok(words)
        }
    }
}

/// Checks every relation with the default idempotent sample.
pub fn verify_relations(m: &HomogeneousModule, q: &OrientedQuiver) -> RelationReport {
    verify_relations_with(m, q, IdempotentCoverage::default()).expect("sampling never fails")
}

pub fn verify_relations_with(
    m: &HomogeneousModule,
    q: &OrientedQuiver,
    coverage: IdempotentCoverage,
) -> Result<RelationReport> {
    if q.graph() != m.graph() {
        return Err(Error::invalid("quiver and module use different diagrams"));
    }
    let d = m.height();
    let ctx = Ctx {
        m,
        q,
        d,
        words: idempotent_words(m, coverage)?,
        psi: (1..d).map(|k| act_psi(m, k).expect("k in range")).collect(),
        y: (1..=d).map(|k| act_y(m, k).expect("k in range")).collect(),
    };
    let relations = Relation::ALL
        .par_iter()
        .map(|&rel| check_relation(&ctx, rel))
        .collect();
    Ok(RelationReport {
        basis: m.basis().to_vec(),
        arrows: q.arrows().collect(),
        idempotents: ctx.words.len(),
        relations,
    })
}
