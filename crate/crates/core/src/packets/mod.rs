//! Collections, packets, Catalan's triangle and the maps between collections.
//!
//! The fully commutative elements of `D_n`, written as homogeneous canonical
//! words, are grouped by suffix into collections. Collections are grouped
//! into packets `P(n, k)`, `0 <= k <= n`, and every collection in `P(n, k)`
//! has exactly `C(n, k)` elements, the `(n, k)` entry of Catalan's triangle.

pub mod bijections;
pub mod catalan;
pub mod collection;
pub mod export;
pub mod suffix;
pub mod verify;

pub use bijections::{phi, rho, rho_tagged, sigma, tau, PhiSource};
pub use catalan::{catalan, catalan_number, CatalanTriangle, Method};
pub use collection::{
    build_collection, build_packet, packet_size_formula, Collection, Decomposition, Packet,
};
pub use suffix::{packet_index, Suffix};
pub use verify::{
    verify_bijections, verify_identity, verify_theorem, BijectionReport, IdentityReport,
    TheoremReport,
};
