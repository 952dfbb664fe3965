//! Glorious and semi-glorious pairs and the structures built from them.
//!
//! A glorious pair is an unordered pair of incomparable positive roots whose
//! sum is `θ`. Such pairs correspond to edges between long simple roots; the
//! unique edge joining a long and a short simple root carries the
//! semi-glorious pair `(θ̃, θ̆)` instead.

mod interval;
mod minimal;
mod pairs;
mod semi;
mod tails;
mod transition;

pub use interval::{interval, meet_distance, CentralPair, Interval, MeetDistance};
pub use minimal::{
    canonical_min_nonabelian, minimal_nonabelian, minimal_nonabelian_by_search, MinimalNonAbelian,
    PairKind,
};
pub use pairs::{classify_pair, owners_of_ordered_pair, edge_from_pair, glorious_pairs, pair_from_edge, GloriousPair};
pub use semi::{semi_glorious, SemiGloriousPair};
pub use tails::{tail_decomposition, TailDecomposition};
pub use transition::{
    incident_triples, long_paths, mixed_transition, transition_chain, transition_root, Transition,
};

use crate::affine;
use crate::rootlets::shortest_taking_theta_to;
use crate::{Result, Root, RootSystem};

/// `w_μ⁻¹(x)`.
pub(crate) fn w_inv(rs: &RootSystem, mu: &Root, x: &Root) -> Result<Root> {
    let w = shortest_taking_theta_to(rs, mu)?;
    Ok(affine::apply_finite(rs, &w.inverse(), x))
}

/// `η_ij = w_{α_i}⁻¹(α_i + α_j)` for adjacent `i, j` with `α_i` long.
pub(crate) fn eta_of(rs: &RootSystem, i: usize, j: usize) -> Result<Root> {
    w_inv(rs, &rs.simple(i), &(&rs.simple(i) + &rs.simple(j)))
}
