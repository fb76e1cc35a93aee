//! Fully commutative elements of the Coxeter group of type `D_n`.
//!
//! The crate enumerates fully commutative elements as homogeneous canonical
//! reduced words, groups them into collections and packets counted by
//! Catalan's triangle, checks the bijections between collections, and builds
//! the homogeneous representations of KLR algebras attached to them as
//! explicit integer matrices whose defining relations are verified.
//!
//! Letters are 1-based throughout.

pub mod canonical;
pub mod cli;
pub mod commutation;
pub mod dynkin;
pub mod error;
pub mod homogeneity;
pub mod klr;
pub mod packets;
pub mod weight_graph;
pub mod word;

pub use canonical::{
    enumerate_canonical, homogeneous_canonical, realize, segment, split, CanonicalForm, FcWord,
};
pub use commutation::{commutation_class, is_fully_commutative};
pub use dynkin::{DynkinGraph, DynkinKind};
pub use error::{Error, Result};
pub use homogeneity::is_homogeneous;
pub use weight_graph::{
    build_graph, components, homogeneous_components, words_of, Component, Content,
    HomogeneityCheck, WeightGraph,
};
pub use word::{Letter, Word};
