//! Explicit bijections between collections.
//!
//! `sigma`/`tau` identify `c^n_{s_{nk}}` with `c^n_{s_{n,k+1} s_{n-1}}`
//! for `1 <= k <= n-3`. `phi` maps `c^n_{w1} ⊔ c^{n-1}_{w3}` onto
//! `c^n_{w2}` for `1 <= k <= n-2`, where
//!
//! ```text
//! w1 = s_{nk} s_{n-1} = [n, n-2, .., k, n-1]     (D_n)
//! w2 = s_{nk}         = [n, n-2, .., k]          (D_n)
//! w3 = s_{n-1,k}      = [n-1, n-3, .., k]        (D_{n-1}; [n-1] when k = n-2)
//! ```
//!
//! and `rho` is its inverse. Every map checks that its input lies in the
//! stated collection and fails with a domain error otherwise.

use crate::canonical::{split, suffix_word};
use crate::dynkin::DynkinGraph;
use crate::error::{Error, Result};
use crate::homogeneity::is_homogeneous;
use crate::word::{Letter, Word};

/// Splits `w` as a member of `c^n_{suffix}`, returning its prefix.
pub(crate) fn prefix_in_collection(w: &[Letter], n: usize, params: &[u8]) -> Result<Word> {
    let wd = Word::from(w);
    let cf =
        split(w, n).map_err(|e| Error::domain(format!("{wd} is not canonical in D{n}: {e}")))?;
    if cf.suffix_params() != params {
        return Err(Error::domain(format!(
            "{wd} has suffix {} in D{n}, expected {}",
            cf.suffix_word(),
            suffix_word(n, params)
        )));
    }
    let g = DynkinGraph::type_d(n)?;
    if !is_homogeneous(w, &g) {
        return Err(Error::domain(format!("{wd} is not homogeneous in D{n}")));
    }
    Ok(cf.prefix_word())
}

fn check_sigma_range(n: usize, k: usize) -> Result<()> {
    if n < 4 || k < 1 || k + 3 > n {
        return Err(Error::invalid(format!(
            "sigma/tau need n >= 4 and 1 <= k <= n-3, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

fn check_phi_range(n: usize, k: usize) -> Result<()> {
    if n < 5 || k < 1 || k + 2 > n {
        return Err(Error::invalid(format!(
            "phi/rho need n >= 5 and 1 <= k <= n-2, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

/// `c^n_{s_{nk}} → c^n_{s_{n,k+1} s_{n-1}}`.
pub fn sigma(w: &[Letter], n: usize, k: usize) -> Result<Word> {
    check_sigma_range(n, k)?;
    let prefix = prefix_in_collection(w, n, &[k as u8])?;
    let w1 = suffix_word(n, &[k as u8 + 1, n as u8 - 1]);
    let top = (n - 1) as Letter;
    let kk = k as Letter;
    match prefix.last() {
        Some(&r) if r == top => {
            // smallest m >= k with [m, m+1, .., n-1] a right factor
            let mut start = prefix.len() - 1;
            while start > 0 && prefix[start - 1] + 1 == prefix[start] && prefix[start - 1] >= kk {
                start -= 1;
            }
            let m = prefix[start];
            let mut out = prefix[..start].to_vec();
            out.extend((kk..=m).rev());
            out.extend_from_slice(&w1);
            Ok(Word::new(out))
        }
        Some(&r) if r >= kk => Err(Error::domain(format!(
            "prefix {prefix} ends with {r}, impossible in c^{n}_{}",
            suffix_word(n, &[kk])
        ))),
        _ => Ok(prefix.concat(&w1)),
    }
}

/// `c^n_{s_{n,k+1} s_{n-1}} → c^n_{s_{nk}}`, the inverse of [`sigma`].
pub fn tau(w: &[Letter], n: usize, k: usize) -> Result<Word> {
    check_sigma_range(n, k)?;
    let prefix = prefix_in_collection(w, n, &[k as u8 + 1, n as u8 - 1])?;
    let w2 = suffix_word(n, &[k as u8]);
    let kk = k as Letter;
    match prefix.last() {
        Some(&r) if r == kk => {
            // last segment s_{mk} = [m, m-1, .., k]
            let mut start = prefix.len() - 1;
            while start > 0 && prefix[start - 1] == prefix[start] + 1 {
                start -= 1;
            }
            let m = prefix[start];
            let mut out = prefix[..start].to_vec();
            out.extend(m..n as Letter);
            out.extend_from_slice(&w2);
            Ok(Word::new(out))
        }
        Some(&r) if r > kk => Err(Error::domain(format!(
            "prefix {prefix} ends with {r} > {k}, impossible in c^{n}_{}",
            suffix_word(n, &[kk + 1, n as u8 - 1])
        ))),
        _ => Ok(prefix.concat(&w2)),
    }
}

/// Which half of the domain of [`phi`] a word came from.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PhiSource {
    /// A `D_n` word in `c^n_{s_{nk} s_{n-1}}`.
    Upper(Word),
    /// A `D_{n-1}` word in `c^{n-1}_{s_{n-1,k}}`.
    Lower(Word),
}

impl PhiSource {
    pub fn word(&self) -> &Word {
        match self {
            PhiSource::Upper(w) | PhiSource::Lower(w) => w,
        }
    }
}

/// `φ_1`: drops the trailing `n-1` of the suffix.
pub fn phi_upper(w: &[Letter], n: usize, k: usize) -> Result<Word> {
    check_phi_range(n, k)?;
    let prefix = prefix_in_collection(w, n, &[k as u8, n as u8 - 1])?;
    Ok(prefix.concat(&suffix_word(n, &[k as u8])))
}

/// `φ_2`: `w0 w3 ↦ w0 [n-1] [n, n-2, .., k]`.
pub fn phi_lower(w: &[Letter], n: usize, k: usize) -> Result<Word> {
    check_phi_range(n, k)?;
    let prefix = prefix_in_collection(w, n - 1, &[k as u8])?;
    let mut out = prefix.into_letters();
    out.push((n - 1) as Letter);
    out.extend_from_slice(&suffix_word(n, &[k as u8]));
    Ok(Word::new(out))
}

/// `φ` on either half of its domain. The halves are told apart by the
/// letter `n`, which every `D_n` word of the upper half contains and no
/// `D_{n-1}` word does.
pub fn phi(w: &[Letter], n: usize, k: usize) -> Result<Word> {
    check_phi_range(n, k)?;
    if w.contains(&(n as Letter)) {
        phi_upper(w, n, k)
    } else {
        phi_lower(w, n, k)
    }
}

/// Inverse of [`phi`], tagged with the half of the domain it lands in.
pub fn rho_tagged(w: &[Letter], n: usize, k: usize) -> Result<PhiSource> {
    check_phi_range(n, k)?;
    let prefix = prefix_in_collection(w, n, &[k as u8])?;
    let top = (n - 1) as Letter;
    if prefix.last() == Some(&top) {
        // w0 ends with n-1: append [n-3, .., k], read in D_{n-1}
        let mut out = prefix.into_letters();
        out.extend((k as Letter..=(n as Letter).saturating_sub(3)).rev());
        Ok(PhiSource::Lower(Word::new(out)))
    } else {
        Ok(PhiSource::Upper(
            prefix.concat(&suffix_word(n, &[k as u8, n as u8 - 1])),
        ))
    }
}

pub fn rho(w: &[Letter], n: usize, k: usize) -> Result<Word> {
    rho_tagged(w, n, k).map(|src| match src {
        PhiSource::Upper(w) | PhiSource::Lower(w) => w,
    })
}
