//! Exact invariants, packing certificates and exhaustive generation for small
//! subcubic graphs.
//!
//! Graphs have at most 64 vertices; vertex sets are bit masks
//! ([`VertexSet`]). The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod canon;
pub mod catalog;
pub mod certificate;
pub mod generate;
pub mod graph;
pub mod invariants;
pub mod packing;
pub mod vertex_set;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use catalog::{catalog, CatalogEntry, KnownInvariants, Named};
pub use graph::{Graph, GraphError};
pub use vertex_set::{VertexSet, MAX_VERTICES};
