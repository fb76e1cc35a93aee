use std::collections::BTreeSet;

use crate::dynkin::{DynkinGraph, DynkinKind};
use crate::error::{Error, Result};
use crate::word::Letter;

/// A Dynkin diagram with one direction chosen on every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedQuiver {
    graph: DynkinGraph,
    /// `(a, b)` means `a → b`.
    arrows: BTreeSet<(Letter, Letter)>,
}

impl OrientedQuiver {
    /// Orients every edge from its smaller to its larger vertex. For type D
    /// this is `i → i+1` along the chain plus `n-2 → n-1` and `n-2 → n`.
    pub fn default_for(graph: &DynkinGraph) -> Self {
        let arrows = graph.edges().iter().copied().collect();
        debug_assert!(matches!(
            graph.kind(),
            DynkinKind::TypeA | DynkinKind::TypeD | DynkinKind::Custom
        ));
        OrientedQuiver {
            graph: graph.clone(),
            arrows,
        }
    }

    /// Requires exactly one arrow per edge and no arrows between non-neighbors.
    pub fn from_arrows(graph: &DynkinGraph, arrows: &[(Letter, Letter)]) -> Result<Self> {
        let set: BTreeSet<(Letter, Letter)> = arrows.iter().copied().collect();
        for &(a, b) in &set {
            if !graph.are_neighbors(a, b) {
                return Err(Error::invalid(format!(
                    "arrow {a}->{b} is not an edge of {graph}"
                )));
            }
            if set.contains(&(b, a)) {
                return Err(Error::invalid(format!(
                    "edge {{{a},{b}}} oriented both ways"
                )));
            }
        }
        if set.len() != graph.edges().len() {
            return Err(Error::invalid("every edge needs exactly one arrow"));
        }
        Ok(OrientedQuiver {
            graph: graph.clone(),
            arrows: set,
        })
    }

    pub fn reversed(&self) -> Self {
        OrientedQuiver {
            graph: self.graph.clone(),
            arrows: self.arrows.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }

    pub fn graph(&self) -> &DynkinGraph {
        &self.graph
    }

    /// `a → b`.
    pub fn arrow(&self, a: Letter, b: Letter) -> bool {
        self.arrows.contains(&(a, b))
    }

    pub fn arrows(&self) -> impl Iterator<Item = (Letter, Letter)> + '_ {
        self.arrows.iter().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_type_d_orientation() {
        let q = OrientedQuiver::default_for(&DynkinGraph::type_d(5).unwrap());
        assert_eq!(
            q.arrows().collect::<Vec<_>>(),
            vec![(1, 2), (2, 3), (3, 4), (3, 5)]
        );
        assert!(q.arrow(3, 5));
        assert!(!q.arrow(5, 3));
        let r = q.reversed();
        assert!(r.arrow(5, 3));
        assert!(!r.arrow(3, 5));
    }

    #[test]
    fn explicit_arrows_are_validated() {
        let g = DynkinGraph::type_a(3).unwrap();
        // the quiver 1 -> 2 <- 3
        let q = OrientedQuiver::from_arrows(&g, &[(1, 2), (3, 2)]).unwrap();
        assert!(q.arrow(3, 2));
        assert!(OrientedQuiver::from_arrows(&g, &[(1, 2)]).is_err());
        assert!(OrientedQuiver::from_arrows(&g, &[(1, 2), (2, 1), (2, 3)]).is_err());
        assert!(OrientedQuiver::from_arrows(&g, &[(1, 3), (2, 3)]).is_err());
    }
}
