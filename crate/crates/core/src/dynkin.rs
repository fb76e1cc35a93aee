//! Simply-laced Dynkin diagrams on the vertex set `I = {1, .., n}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::Letter;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DynkinKind {
    TypeA,
    TypeD,
    Custom,
}

/// Undirected, irreflexive, symmetric neighbor relation on `{1, .., n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DynkinGraph {
    rank: usize,
    kind: DynkinKind,
    adjacent: Vec<bool>,
    edges: Vec<(Letter, Letter)>,
}

impl DynkinGraph {
    /// The chain `1 - 2 - .. - n`.
    pub fn type_a(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::invalid("type A requires n >= 1"));
        }
        let edges = (1..n).map(|i| (i, i + 1)).collect::<Vec<_>>();
        Self::build(n, DynkinKind::TypeA, &edges)
    }

    /// Chain `1 - .. - (n-2)` with the fork `n-2 - n-1` and `n-2 - n`.
    pub fn type_d(n: usize) -> Result<Self> {
        if n < 4 {
            return Err(Error::invalid("n must be ≥ 4 for type D"));
        }
        let mut edges = (1..=n - 3).map(|i| (i, i + 1)).collect::<Vec<_>>();
        edges.push((n - 2, n - 1));
        edges.push((n - 2, n));
        Self::build(n, DynkinKind::TypeD, &edges)
    }

    /// Arbitrary simply-laced diagram given by its edge list.
    pub fn custom(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(n, DynkinKind::Custom, edges)
    }

    fn build(n: usize, kind: DynkinKind, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > Letter::MAX as usize {
            return Err(Error::invalid(format!("rank {n} out of range")));
        }
        let mut adjacent = vec![false; n * n];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return Err(Error::invalid(format!("bad edge {{{a},{b}}} for rank {n}")));
            }
            let (lo, hi) = (a.min(b), a.max(b));
            if adjacent[(lo - 1) * n + (hi - 1)] {
                return Err(Error::invalid(format!("duplicate edge {{{lo},{hi}}}")));
            }
            adjacent[(lo - 1) * n + (hi - 1)] = true;
            adjacent[(hi - 1) * n + (lo - 1)] = true;
            normalized.push((lo as Letter, hi as Letter));
        }
        normalized.sort_unstable();
        Ok(DynkinGraph {
            rank: n,
            kind,
            adjacent,
            edges: normalized,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn kind(&self) -> DynkinKind {
        self.kind
    }

    /// Edges `{i, j}` with `i < j`, sorted.
    pub fn edges(&self) -> &[(Letter, Letter)] {
        &self.edges
    }

    pub fn contains(&self, a: Letter) -> bool {
        a >= 1 && (a as usize) <= self.rank
    }

    #[inline]
    pub fn are_neighbors(&self, a: Letter, b: Letter) -> bool {
        self.contains(a)
            && self.contains(b)
            && self.adjacent[(a as usize - 1) * self.rank + (b as usize - 1)]
    }

    /// Adjacent letters can be swapped iff they are neither equal nor neighbors.
    #[inline]
    pub fn commute(&self, a: Letter, b: Letter) -> bool {
        a != b && !self.are_neighbors(a, b)
    }

    pub fn neighbors(&self, a: Letter) -> impl Iterator<Item = Letter> + '_ {
        (1..=self.rank as Letter).filter(move |&b| self.are_neighbors(a, b))
    }

    /// Checks that every letter lies in `1..=n`.
    pub fn check_word(&self, letters: &[Letter]) -> Result<()> {
        match letters.iter().position(|&a| !self.contains(a)) {
            None => Ok(()),
            Some(p) => Err(Error::parse(
                p,
                format!("letter {} outside 1..={}", letters[p], self.rank),
            )),
        }
    }
}

impl fmt::Debug for DynkinGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for DynkinGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            DynkinKind::TypeA => write!(f, "A{}", self.rank),
            DynkinKind::TypeD => write!(f, "D{}", self.rank),
            DynkinKind::Custom => write!(f, "Custom{}{:?}", self.rank, self.edges),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_d_fork() {
        let g = DynkinGraph::type_d(5).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (2, 3), (3, 4), (3, 5)]);
        assert!(g.are_neighbors(3, 5));
        assert!(g.are_neighbors(5, 3));
        assert!(!g.are_neighbors(4, 5));
        assert!(g.commute(4, 5));
        assert!(!g.commute(4, 4));
        assert_eq!(g.neighbors(3).collect::<Vec<_>>(), vec![2, 4, 5]);
    }

    #[test]
    fn type_d_four_is_the_star() {
        let g = DynkinGraph::type_d(4).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (2, 3), (2, 4)]);
    }

    #[test]
    fn rank_preconditions() {
        assert!(DynkinGraph::type_d(3).is_err());
        assert!(DynkinGraph::type_a(0).is_err());
        assert!(DynkinGraph::type_a(1).unwrap().edges().is_empty());
    }

    #[test]
    fn custom_rejects_loops_and_duplicates() {
        assert!(DynkinGraph::custom(3, &[(1, 1)]).is_err());
        assert!(DynkinGraph::custom(3, &[(1, 2), (2, 1)]).is_err());
        assert!(DynkinGraph::custom(3, &[(1, 4)]).is_err());
        let g = DynkinGraph::custom(3, &[(3, 1)]).unwrap();
        assert!(g.are_neighbors(1, 3));
        assert!(!g.are_neighbors(1, 1));
    }

    #[test]
    fn check_word_reports_position() {
        let g = DynkinGraph::type_a(3).unwrap();
        assert!(g.check_word(&[1, 2, 3]).is_ok());
        assert_eq!(
            g.check_word(&[1, 4]).unwrap_err(),
            Error::Parse {
                position: 1,
                message: "letter 4 outside 1..=3".into()
            }
        );
    }
}
