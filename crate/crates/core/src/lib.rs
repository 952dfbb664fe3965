//! Root posets of finite simple root systems, their (abelian) ideals, and the
//! glorious pairs of positive roots summing to the highest root.
//!
//! The combinatorial core is exact: roots are integer coefficient vectors over
//! the simple roots, and every inner product is computed in integers and only
//! converted to a caller-chosen [`Scalar`] (by default [`Rational`]) at the
//! API boundary.
//!
//! ```
//! use rootposet::{RootSystem, glorious};
//!
//! let rs = RootSystem::parse("E6").unwrap();
//! assert_eq!(rs.positive_roots().len(), 36);
//! assert_eq!(glorious::glorious_pairs(&rs).unwrap().len(), 5);
//! ```

pub mod affine;
pub mod epsilon;
mod error;
pub mod export;
pub mod glorious;
pub mod ideals;
mod root;
pub mod rootlets;
mod rootset;
mod scalar;
mod system;
pub mod verify;

pub use affine::{AffineRoot, AffineWord};
pub use error::{Error, Result};
pub use ideals::RootIdeal;
pub use root::Root;
pub use rootlets::RootletIndex;
pub use rootset::RootSet;
pub use scalar::Scalar;
pub use system::{Family, RootSystem, RootSystemSpec};

/// Exact rational scalar used for inner products and coroots.
pub type Rational = num_rational::Ratio<i64>;

/// Floating-point scalar for callers that want approximate geometry.
pub type Real = f64;
