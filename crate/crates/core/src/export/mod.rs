//! Serialisations of computed artifacts: versioned JSON documents, Graphviz
//! DOT for the Hasse diagram, and aligned plain-text tables.
//!
//! Simple roots appear 1-based in every exported format (`a1`, `"alpha": 1`),
//! matching the usual Bourbaki-style labels; the library API is 0-based.

mod dot;
pub mod json;
pub mod table;

pub use dot::export_hasse_dot;
