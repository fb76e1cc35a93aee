//! Exhaustive checks of the counting theorems and bijections.
//!
//! Failures are collected into reports rather than returned as errors.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::fc_count_formula_d;
use crate::error::Result;
use crate::packets::bijections::{phi_lower, phi_upper, rho_tagged, sigma, tau, PhiSource};
use crate::packets::catalan::{catalan_number, CatalanTriangle};
use crate::packets::collection::{packet_size_formula, Decomposition};
use crate::packets::suffix::Suffix;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollectionCheck {
    pub k: usize,
    pub suffix: Word,
    pub size: usize,
    pub expected: BigUint,
}

impl CollectionCheck {
    pub fn passed(&self) -> bool {
        BigUint::from(self.size) == self.expected
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub n: usize,
    /// One entry per collection, ordered by `(k, suffix)`.
    pub checks: Vec<CollectionCheck>,
    /// `(k, collections found, formula)` per packet.
    pub packet_sizes: Vec<(usize, usize, BigUint)>,
}

impl TheoremReport {
    pub fn violations(&self) -> impl Iterator<Item = &CollectionCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn packet_size_mismatches(&self) -> impl Iterator<Item = &(usize, usize, BigUint)> {
        self.packet_sizes
            .iter()
            .filter(|(_, found, formula)| &BigUint::from(*found) != formula)
    }

    pub fn passed(&self) -> bool {
        self.violations().next().is_none() && self.packet_size_mismatches().next().is_none()
    }
}

/// Compares every collection size against `C(n,k)` and every packet size
/// against its closed formula.
pub fn verify_theorem_with(dec: &Decomposition) -> TheoremReport {
    let n = dec.n;
    let triangle = CatalanTriangle::new(n);
    let mut checks = Vec::new();
    let mut packet_sizes = Vec::new();
    for p in &dec.packets {
        packet_sizes.push((p.k, p.size(), packet_size_formula(n, p.k)));
        for c in &p.collections {
            checks.push(CollectionCheck {
                k: p.k,
                suffix: c.suffix.word(),
                size: c.len(),
                expected: triangle.get(n, p.k).unwrap().clone(),
            });
        }
    }
    TheoremReport {
        n,
        checks,
        packet_sizes,
    }
}

pub fn verify_theorem(n: usize) -> Result<TheoremReport> {
    Ok(verify_theorem_with(&Decomposition::new(n)?))
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub n: usize,
    /// `Σ_k C(n,k) |P(n,k)|` with packet sizes from their closed formula.
    pub lhs: BigUint,
    /// `(n+3)/2 · C_n - 1`.
    pub rhs: BigUint,
    /// Number of homogeneous canonical words, when enumerated.
    pub direct: Option<BigUint>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs && self.direct.as_ref().is_none_or(|d| d == &self.rhs)
    }
}

/// Evaluates both sides of the packet identity; the right side is also
/// compared against direct enumeration when `n <= direct_limit`.
pub fn verify_identity(n: usize, direct_limit: usize) -> Result<IdentityReport> {
    crate::dynkin::DynkinGraph::type_d(n)?;
    let triangle = CatalanTriangle::new(n);
    let lhs: BigUint = (0..=n)
        .map(|k| triangle.get(n, k).unwrap() * packet_size_formula(n, k))
        .sum();
    let rhs = fc_count_formula_d(n);
    debug_assert_eq!(rhs, (catalan_number(n) * (n as u32 + 3)) / 2u32 - 1u32);
    let direct = if n <= direct_limit {
        Some(BigUint::from(
            crate::canonical::homogeneous_canonical(n)?.len(),
        ))
    } else {
        None
    };
    Ok(IdentityReport {
        n,
        lhs,
        rhs,
        direct,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub name: String,
    pub n: usize,
    pub k: usize,
    pub domain_size: usize,
    pub codomain_size: usize,
    pub failures: Vec<String>,
}

impl BijectionReport {
    fn new(name: &str, n: usize, k: usize) -> Self {
        BijectionReport {
            name: name.to_string(),
            n,
            k,
            domain_size: 0,
            codomain_size: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn collection_words(dec: &Decomposition, params: Vec<u8>) -> Result<BTreeSet<Word>> {
    let s = Suffix::new(dec.n, params)?;
    Ok(dec
        .collection(&s)
        .map(|c| c.words.iter().cloned().collect())
        .unwrap_or_default())
}

/// `sigma` and `tau` between `c^n_{s_{nk}}` and `c^n_{s_{n,k+1}s_{n-1}}`:
/// images land in the other collection, the maps are mutually inverse, and
/// `sigma` is onto.
pub fn verify_sigma_tau(dec: &Decomposition, k: usize) -> Result<BijectionReport> {
    let n = dec.n;
    let mut rep = BijectionReport::new("sigma/tau", n, k);
    let domain = collection_words(dec, vec![k as u8])?;
    let codomain = collection_words(dec, vec![k as u8 + 1, n as u8 - 1])?;
    rep.domain_size = domain.len();
    rep.codomain_size = codomain.len();
    let mut hit = BTreeSet::new();
    for w in &domain {
        match sigma(w, n, k) {
            Err(e) => rep.failures.push(format!("sigma({w}): {e}")),
            Ok(v) => {
                if !codomain.contains(&v) {
                    rep.failures
                        .push(format!("sigma({w}) = {v} outside codomain"));
                }
                match tau(&v, n, k) {
                    Ok(back) if &back == w => {}
                    Ok(back) => rep.failures.push(format!("tau(sigma({w})) = {back}")),
                    Err(e) => rep.failures.push(format!("tau({v}): {e}")),
                }
                hit.insert(v);
            }
        }
    }
    for v in &codomain {
        match tau(v, n, k) {
            Err(e) => rep.failures.push(format!("tau({v}): {e}")),
            Ok(w) => {
                if !domain.contains(&w) {
                    rep.failures.push(format!("tau({v}) = {w} outside domain"));
                }
                match sigma(&w, n, k) {
                    Ok(back) if &back == v => {}
                    Ok(back) => rep.failures.push(format!("sigma(tau({v})) = {back}")),
                    Err(e) => rep.failures.push(format!("sigma({w}): {e}")),
                }
            }
        }
    }
    if hit.len() != codomain.len() {
        rep.failures.push(format!(
            "sigma hits {} of {} codomain words",
            hit.len(),
            codomain.len()
        ));
    }
    Ok(rep)
}

/// `phi = φ_1 ⊔ φ_2` onto `c^n_{s_{nk}}` with inverse `rho`. `lower` must be
/// the decomposition of `D_{n-1}`.
pub fn verify_phi_rho(
    dec: &Decomposition,
    lower: &Decomposition,
    k: usize,
) -> Result<BijectionReport> {
    let n = dec.n;
    assert_eq!(lower.n + 1, n, "lower decomposition must be D_(n-1)");
    let mut rep = BijectionReport::new("phi/rho", n, k);
    let upper_dom = collection_words(dec, vec![k as u8, n as u8 - 1])?;
    let lower_dom = collection_words(lower, vec![k as u8])?;
    let codomain = collection_words(dec, vec![k as u8])?;
    rep.domain_size = upper_dom.len() + lower_dom.len();
    rep.codomain_size = codomain.len();
    if !upper_dom.is_disjoint(&lower_dom) {
        rep.failures.push("domains overlap as formal words".into());
    }
    let mut images = BTreeSet::new();
    let sources = upper_dom
        .iter()
        .map(|w| PhiSource::Upper(w.clone()))
        .chain(lower_dom.iter().map(|w| PhiSource::Lower(w.clone())));
    for src in sources {
        let image = match &src {
            PhiSource::Upper(w) => phi_upper(w, n, k),
            PhiSource::Lower(w) => phi_lower(w, n, k),
        };
        match image {
            Err(e) => rep.failures.push(format!("phi({}): {e}", src.word())),
            Ok(v) => {
                if !codomain.contains(&v) {
                    rep.failures
                        .push(format!("phi({}) = {v} outside codomain", src.word()));
                }
                match rho_tagged(&v, n, k) {
                    Ok(back) if back == src => {}
                    Ok(back) => rep
                        .failures
                        .push(format!("rho(phi({})) = {:?}", src.word(), back)),
                    Err(e) => rep.failures.push(format!("rho({v}): {e}")),
                }
                if !images.insert(v.clone()) {
                    rep.failures.push(format!("phi not injective at {v}"));
                }
            }
        }
    }
    for v in &codomain {
        match rho_tagged(v, n, k) {
            Err(e) => rep.failures.push(format!("rho({v}): {e}")),
            Ok(PhiSource::Upper(w)) if !upper_dom.contains(&w) => {
                rep.failures.push(format!("rho({v}) = {w} outside c^n_w1"))
            }
            Ok(PhiSource::Lower(w)) if !lower_dom.contains(&w) => rep
                .failures
                .push(format!("rho({v}) = {w} outside c^(n-1)_w3")),
            Ok(_) => {}
        }
    }
    if images.len() != codomain.len() {
        rep.failures.push(format!(
            "phi hits {} of {} codomain words",
            images.len(),
            codomain.len()
        ));
    }
    Ok(rep)
}

/// All sigma/tau checks (`1 <= k <= n-3`) and, for `n >= 5`, all phi/rho
/// checks (`1 <= k <= n-2`).
pub fn verify_bijections(n: usize) -> Result<Vec<BijectionReport>> {
    let dec = Decomposition::new(n)?;
    let mut out: Vec<BijectionReport> = (1..=n.saturating_sub(3))
        .into_par_iter()
        .map(|k| verify_sigma_tau(&dec, k))
        .collect::<Result<_>>()?;
    if n >= 5 {
        let lower = Decomposition::new(n - 1)?;
        let phis: Vec<BijectionReport> = (1..=n - 2)
            .into_par_iter()
            .map(|k| verify_phi_rho(&dec, &lower, k))
            .collect::<Result<_>>()?;
        out.extend(phis);
    }
    Ok(out)
}

/// Collections labeled `s_{n,k+1} s_{n-1,j_2} ..` (`l >= 2`) share one
/// prefix set. Returns the offending suffixes.
pub fn verify_same_prefixes(dec: &Decomposition) -> Vec<Word> {
    let n = dec.n;
    let mut bad = Vec::new();
    for k in 0..=n.saturating_sub(3) {
        let group: Vec<_> = dec
            .collections()
            .filter(|c| c.suffix.params().len() >= 2 && c.suffix.params()[0] as usize == k + 1)
            .collect();
        if let Some(first) = group.first() {
            let reference: BTreeSet<&Word> = first.prefixes.iter().collect();
            for c in &group[1..] {
                let set: BTreeSet<&Word> = c.prefixes.iter().collect();
                if set != reference {
                    bad.push(c.suffix.word());
                }
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_d4() {
        let rep = verify_theorem(4).unwrap();
        assert!(rep.passed());
        let sizes: Vec<(usize, usize)> = rep.checks.iter().map(|c| (c.k, c.size)).collect();
        assert_eq!(
            sizes,
            vec![
                (0, 1),
                (0, 1),
                (0, 1),
                (1, 4),
                (1, 4),
                (2, 9),
                (3, 14),
                (4, 14)
            ]
        );
    }

    #[test]
    fn identity_values() {
        let r = verify_identity(4, 8).unwrap();
        assert_eq!(r.lhs, BigUint::from(48u32));
        assert!(r.passed());
        assert_eq!(verify_identity(5, 0).unwrap().rhs, BigUint::from(167u32));
        let r = verify_identity(10, 0).unwrap();
        assert_eq!(r.rhs, BigUint::from(109173u32));
        assert!(r.passed());
        assert!(r.direct.is_none());
    }

    #[test]
    fn bijections_d5() {
        let reps = verify_bijections(5).unwrap();
        assert_eq!(reps.len(), 2 + 3);
        for r in &reps {
            assert!(r.passed(), "{r:?}");
        }
        let phi2 = reps
            .iter()
            .find(|r| r.name == "phi/rho" && r.k == 2)
            .unwrap();
        assert_eq!((phi2.domain_size, phi2.codomain_size), (14, 14));
    }

    #[test]
    fn shared_prefix_sets() {
        for n in 4..=6 {
            assert!(verify_same_prefixes(&Decomposition::new(n).unwrap()).is_empty());
        }
    }
}
