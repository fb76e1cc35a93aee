//! Weight graphs `G_α` and their homogeneous components.
//!
//! The vertices of `G_α` are the words of content `α`; two words are joined
//! when they differ by an admissible transposition, i.e. a swap of adjacent
//! letters that are neither equal nor neighbors.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::dynkin::DynkinGraph;
use crate::error::{Error, Result};
use crate::homogeneity::{extends_homogeneously, is_homogeneous};
use crate::word::{Letter, Word};

pub const DEFAULT_HEIGHT_CAP: usize = 12;

/// `α = Σ c_i α_i`; `counts[i - 1] = c_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Content {
    counts: Vec<u32>,
}

impl Content {
    pub fn new(counts: Vec<u32>) -> Self {
        Content { counts }
    }

    /// Content of a word over `{1, .., n}`.
    pub fn of_word(w: &[Letter], n: usize) -> Self {
        Content {
            counts: Word::from(w).content(n),
        }
    }

    pub fn rank(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn multiplicity(&self, i: Letter) -> u32 {
        self.counts.get(i as usize - 1).copied().unwrap_or(0)
    }

    pub fn height(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }

    /// `d! / Π c_i!`.
    pub fn word_count(&self) -> u128 {
        let mut total: u128 = 1;
        let mut placed: u128 = 0;
        for &c in &self.counts {
            for t in 1..=c as u128 {
                placed += 1;
                total = total * placed / t;
            }
        }
        total
    }

    /// The smallest word of this content (letters in increasing order).
    fn sorted_word(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.height());
        for (i, &c) in self.counts.iter().enumerate() {
            out.extend(std::iter::repeat_n((i + 1) as Letter, c as usize));
        }
        out
    }
}

impl fmt::Debug for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if c > 1 {
                write!(f, "{c}")?;
            }
            write!(f, "α{}", i + 1)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Serialized as `{"alpha": {"1": c_1, ...}}`, zero entries omitted.
impl Serialize for Content {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Alpha<'a>(&'a [u32]);
        impl Serialize for Alpha<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let nonzero = self.0.iter().filter(|&&c| c > 0).count();
                let mut map = s.serialize_map(Some(nonzero))?;
                for (i, &c) in self.0.iter().enumerate() {
                    if c > 0 {
                        map.serialize_entry(&(i + 1).to_string(), &c)?;
                    }
                }
                map.end()
            }
        }
        let mut map = s.serialize_map(Some(1))?;
        map.serialize_entry("alpha", &Alpha(&self.counts))?;
        map.end()
    }
}

impl<'de> Deserialize<'de> for Content {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            alpha: BTreeMap<String, u32>,
        }
        let raw = Raw::deserialize(d)?;
        let mut counts = Vec::new();
        for (k, c) in raw.alpha {
            let i: usize = k
                .parse()
                .map_err(|_| D::Error::custom(format!("bad vertex label {k:?}")))?;
            if i == 0 || i > Letter::MAX as usize {
                return Err(D::Error::custom(format!("vertex {i} out of range")));
            }
            if counts.len() < i {
                counts.resize(i, 0);
            }
            counts[i - 1] = c;
        }
        Ok(Content { counts })
    }
}

fn next_permutation(v: &mut [Letter]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Lexicographic iterator over the distinct words of a content.
pub struct WordsOf {
    current: Option<Vec<Letter>>,
}

impl Iterator for WordsOf {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.current.as_mut()?;
        let out = Word::from(cur.as_slice());
        if !next_permutation(cur) {
            self.current = None;
        }
        Some(out)
    }
}

/// Lazy version of [`words_of`]; no height cap.
pub fn words_of_iter(alpha: &Content) -> WordsOf {
    WordsOf {
        current: Some(alpha.sorted_word()),
    }
}

/// All words of content `alpha`, in lexicographic order.
pub fn words_of(alpha: &Content, height_cap: usize) -> Result<Vec<Word>> {
    if alpha.height() > height_cap {
        return Err(Error::ResourceLimit(format!(
            "height {} exceeds cap {height_cap}",
            alpha.height()
        )));
    }
    Ok(words_of_iter(alpha).collect())
}

#[derive(Clone, Debug)]
pub struct WeightGraph {
    pub alpha: Content,
    pub vertices: Vec<Word>,
    /// Index pairs `(a, b)` with `a < b`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl WeightGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_words(&self) -> impl Iterator<Item = (&Word, &Word)> {
        self.edges
            .iter()
            .map(|&(a, b)| (&self.vertices[a], &self.vertices[b]))
    }
}

fn check_support(alpha: &Content, g: &DynkinGraph) -> Result<()> {
    if let Some(i) = (g.rank()..alpha.rank()).find(|&i| alpha.counts[i] > 0) {
        return Err(Error::invalid(format!(
            "content uses vertex {} outside {g}",
            i + 1
        )));
    }
    Ok(())
}

pub fn build_graph(alpha: &Content, g: &DynkinGraph, height_cap: usize) -> Result<WeightGraph> {
    check_support(alpha, g)?;
    let vertices = words_of(alpha, height_cap)?;
    let index: HashMap<&Word, usize> = vertices.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut edges = Vec::new();
    for (a, w) in vertices.iter().enumerate() {
        for r in 0..w.len().saturating_sub(1) {
            if g.commute(w[r], w[r + 1]) {
                let v = w.swapped(r + 1).unwrap();
                let b = index[&v];
                if a < b {
                    edges.push((a, b));
                }
            }
        }
    }
    edges.sort_unstable();
    Ok(WeightGraph {
        alpha: alpha.clone(),
        vertices,
        edges,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Component {
    /// Sorted; `words[0]` is the representative.
    pub words: Vec<Word>,
    pub homogeneous: bool,
}

impl Component {
    pub fn representative(&self) -> &Word {
        &self.words[0]
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

    /// A component given directly by its (commutation class) word list.
    pub fn from_words(mut words: Vec<Word>, g: &DynkinGraph) -> Self {
        words.sort();
        words.dedup();
        let homogeneous = words.first().is_some_and(|w| is_homogeneous(w, g));
        Component { words, homogeneous }
    }
}

/// Connected components ordered by their minimal word. The homogeneous flag
/// is left `false`; see [`homogeneous_components`].
pub fn components(wg: &WeightGraph) -> Vec<Component> {
    let mut uf = UnionFind::<usize>::new(wg.vertices.len());
    for &(a, b) in &wg.edges {
        uf.union(a, b);
    }
    let mut groups: BTreeMap<usize, Vec<Word>> = BTreeMap::new();
    let mut first_of_root: HashMap<usize, usize> = HashMap::new();
    // vertices are sorted, so the first vertex seen in a group is its minimum
    for (i, w) in wg.vertices.iter().enumerate() {
        let root = uf.find(i);
        let first = *first_of_root.entry(root).or_insert(i);
        groups.entry(first).or_default().push(w.clone());
    }
    groups
        .into_values()
        .map(|words| Component {
            words,
            homogeneous: false,
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum HomogeneityCheck {
    /// Test only the minimal word of each component.
    #[default]
    Representative,
    /// Test every word and require all of them to be homogeneous.
    Paranoid,
}

pub fn homogeneous_components(
    wg: &WeightGraph,
    g: &DynkinGraph,
    mode: HomogeneityCheck,
) -> Vec<Component> {
    components(wg)
        .into_iter()
        .filter(|c| match mode {
            HomogeneityCheck::Representative => is_homogeneous(c.representative(), g),
            HomogeneityCheck::Paranoid => c.words.iter().all(|w| is_homogeneous(w, g)),
        })
        .map(|mut c| {
            c.homogeneous = true;
            c
        })
        .collect()
}

/// Homogeneous words of content `alpha` in lexicographic order, found by a
/// pruned search instead of listing all of `⟨I⟩_α`.
pub fn homogeneous_words_of(alpha: &Content, g: &DynkinGraph) -> Result<Vec<Word>> {
    check_support(alpha, g)?;
    fn go(
        remaining: &mut [u32],
        left: usize,
        g: &DynkinGraph,
        cur: &mut Vec<Letter>,
        out: &mut Vec<Word>,
    ) {
        if left == 0 {
            out.push(Word::from(cur.as_slice()));
            return;
        }
        for i in 0..remaining.len() {
            if remaining[i] == 0 {
                continue;
            }
            let a = (i + 1) as Letter;
            if !extends_homogeneously(cur, a, g) {
                continue;
            }
            remaining[i] -= 1;
            cur.push(a);
            go(remaining, left - 1, g, cur, out);
            cur.pop();
            remaining[i] += 1;
        }
    }
    let mut remaining = alpha.counts.clone();
    let mut out = Vec::new();
    go(&mut remaining, alpha.height(), g, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Homogeneous components of `G_α` computed from the homogeneous words alone.
///
/// Relies on homogeneous components consisting only of homogeneous words;
/// cross-checked against [`homogeneous_components`] in the test suite.
pub fn homogeneous_components_of(alpha: &Content, g: &DynkinGraph) -> Result<Vec<Component>> {
    let words = homogeneous_words_of(alpha, g)?;
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut uf = UnionFind::<usize>::new(words.len());
    for (a, w) in words.iter().enumerate() {
        for r in 0..w.len().saturating_sub(1) {
            if g.commute(w[r], w[r + 1]) {
                let v = w.swapped(r + 1).unwrap();
                match index.get(&v) {
                    Some(&b) => {
                        uf.union(a, b);
                    }
                    None => {
                        return Err(Error::domain(format!(
                            "admissible swap leaves the homogeneous words: {w} -> {v}"
                        )))
                    }
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Word>> = BTreeMap::new();
    let mut first_of_root: HashMap<usize, usize> = HashMap::new();
    for (i, w) in words.iter().enumerate() {
        let first = *first_of_root.entry(uf.find(i)).or_insert(i);
        groups.entry(first).or_default().push(w.clone());
    }
    Ok(groups
        .into_values()
        .map(|words| Component {
            words,
            homogeneous: true,
        })
        .collect())
}
