//! Matroids, their closure operators, and the dependence spaces they induce.
//!
//! Two subsets of a matroid's ground set are related when they have the
//! same closure. That relation is compatible with unions, so it forms a
//! dependence space whose consistent sets are the independent sets and
//! whose reducts of `X` are the bases of the restriction to `X`. This crate
//! computes those objects over ground sets of at most
//! [`subsets::MAX_UNIVERSE`] elements and checks the correspondences
//! exhaustively.
//!
//! ```
//! use matred::{format::parse_matroid, dependence, SubsetMask};
//!
//! let m = parse_matroid("kind=explicit\nn=3\nindep={};{1};{2};{3};{1,2};{2,3}").unwrap();
//! let x = SubsetMask::from_labels([1, 3]);
//! assert_eq!(m.closure(SubsetMask::from_labels([1])).to_string(), "{1,3}");
//! let space = dependence::theta_from_matroid(&m);
//! assert_eq!(dependence::reducts(&space, x).to_string(), "[{1};{3}]");
//! ```

pub mod commands;
pub mod dependence;
pub mod error;
pub mod format;
pub mod generate;
pub mod hyperplanes;
pub mod matroid;
pub mod rough_sets;
pub mod subsets;

pub use error::{Error, Result};
pub use matroid::{Matroid, Representation, WeightVector};
pub use subsets::{ElementId, SetFamily, SubsetMask};
