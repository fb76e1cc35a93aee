//! Collections (homogeneous canonical words sharing a suffix) and packets.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::canonical::{homogeneous_canonical, homogeneous_prefixes};
use crate::dynkin::{DynkinGraph, DynkinKind};
use crate::error::{Error, Result};
use crate::homogeneity::extends_homogeneously;
use crate::packets::suffix::Suffix;
use crate::word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collection {
    pub suffix: Suffix,
    /// Sorted lexicographically.
    pub words: Vec<Word>,
    /// `prefixes[i]` is the prefix of `words[i]`.
    pub prefixes: Vec<Word>,
}

impl Collection {
    fn from_prefixes(suffix: Suffix, mut prefixes: Vec<Word>) -> Self {
        let sw = suffix.word();
        prefixes.sort_by_cached_key(|p| p.concat(&sw));
        let words = prefixes.iter().map(|p| p.concat(&sw)).collect();
        Collection {
            suffix,
            words,
            prefixes,
        }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    pub fn packet_index(&self) -> usize {
        self.suffix.packet_index()
    }
}

fn check_graph(s: &Suffix, g: &DynkinGraph) -> Result<()> {
    if g.kind() != DynkinKind::TypeD || g.rank() != s.rank() {
        return Err(Error::invalid(format!(
            "collections of D{} need the D{} diagram, got {g}",
            s.rank(),
            s.rank()
        )));
    }
    Ok(())
}

/// Homogeneous canonical words of `D_n` whose suffix is `s`.
pub fn build_collection(s: &Suffix, g: &DynkinGraph) -> Result<Collection> {
    check_graph(s, g)?;
    let sw = s.word();
    let mut buf: Vec<Letter> = Vec::new();
    let mut prefixes = Vec::new();
    'prefix: for (_, p) in homogeneous_prefixes(s.rank())? {
        buf.clear();
        buf.extend_from_slice(&p);
        for &a in sw.iter() {
            if !extends_homogeneously(&buf, a, g) {
                continue 'prefix;
            }
            buf.push(a);
        }
        prefixes.push(p);
    }
    Ok(Collection::from_prefixes(s.clone(), prefixes))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Packet {
    pub n: usize,
    pub k: usize,
    /// Ordered by suffix parameters.
    pub collections: Vec<Collection>,
}

impl Packet {
    /// Number of collections.
    pub fn size(&self) -> usize {
        self.collections.len()
    }

    /// Common size of the collections, if they agree.
    pub fn collection_size(&self) -> Option<usize> {
        let first = self.collections.first()?.len();
        self.collections
            .iter()
            .all(|c| c.len() == first)
            .then_some(first)
    }
}

fn check_rank(n: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::invalid("n must be ≥ 4"));
    }
    Ok(())
}

pub fn build_packet(n: usize, k: usize) -> Result<Packet> {
    check_rank(n)?;
    if k > n {
        return Err(Error::invalid(format!(
            "packet index k = {k} outside 0..={n}"
        )));
    }
    let g = DynkinGraph::type_d(n)?;
    let collections = Suffix::all(n)?
        .into_iter()
        .filter(|s| s.packet_index() == k)
        .map(|s| build_collection(&s, &g))
        .collect::<Result<Vec<_>>>()?;
    Ok(Packet { n, k, collections })
}

/// `|P(n,k)|`: `2^{n-2} - 1` for `k = 0`, `2^{n-k-2}` for `1 <= k <= n-2`,
/// and 1 for `k = n-1, n`.
pub fn packet_size_formula(n: usize, k: usize) -> BigUint {
    if k == 0 {
        (BigUint::one() << (n - 2)) - 1u32
    } else if k <= n - 2 {
        BigUint::one() << (n - k - 2)
    } else if k <= n {
        BigUint::one()
    } else {
        BigUint::default()
    }
}

/// The complete packet decomposition of the fully commutative elements of `D_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub n: usize,
    /// Indexed by `k = 0..=n`.
    pub packets: Vec<Packet>,
}

impl Decomposition {
    pub fn new(n: usize) -> Result<Self> {
        check_rank(n)?;
        let mut by_suffix: BTreeMap<Vec<u8>, Vec<Word>> = Suffix::all(n)?
            .into_iter()
            .map(|s| (s.params().to_vec(), Vec::new()))
            .collect();
        for fc in homogeneous_canonical(n)? {
            by_suffix
                .get_mut(fc.form.suffix_params())
                .expect("every suffix is listed")
                .push(fc.form.prefix_word());
        }
        let mut packets: Vec<Packet> = (0..=n)
            .map(|k| Packet {
                n,
                k,
                collections: Vec::new(),
            })
            .collect();
        for (params, prefixes) in by_suffix {
            let s = Suffix::new(n, params)?;
            let k = s.packet_index();
            packets[k]
                .collections
                .push(Collection::from_prefixes(s, prefixes));
        }
        Ok(Decomposition { n, packets })
    }

    pub fn collections(&self) -> impl Iterator<Item = &Collection> {
        self.packets.iter().flat_map(|p| p.collections.iter())
    }

    pub fn collection(&self, s: &Suffix) -> Option<&Collection> {
        self.packets
            .get(s.packet_index())?
            .collections
            .iter()
            .find(|c| &c.suffix == s)
    }

    pub fn word_count(&self) -> usize {
        self.collections().map(Collection::len).sum()
    }

    /// `(k, suffix, word)` for every fully commutative element, ordered by
    /// `k`, then suffix, then word.
    pub fn labeled_words(&self) -> impl Iterator<Item = (usize, &Suffix, &Word)> {
        self.packets.iter().flat_map(|p| {
            p.collections
                .iter()
                .flat_map(move |c| c.words.iter().map(move |w| (p.k, &c.suffix, w)))
        })
    }
}
