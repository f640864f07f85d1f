//! Exact enumeration of unlabeled tanglegrams through cycle-index series.
//!
//! The crate is layered bottom-up:
//!
//! - [`partitions`]: integer partitions and the partition statistics the
//!   power-sum basis needs (`z_λ`, `λᵏ`, multiset union).
//! - [`cycle_index`]: truncated symmetric functions in the power-sum basis with
//!   exact rational coefficients, supporting sum, product, plethysm, Kronecker
//!   product and inner plethysm.
//! - [`species`]: cycle indices of rooted and unrooted binary trees and the
//!   counts of every tanglegram family derived from them.
//! - [`oracle`]: brute-force enumeration of labeled trees and Burnside orbit
//!   counts, used to cross-check the symbolic results.
//! - [`table`]: count tables and their text, CSV, JSON and b-file renderings.

pub mod cycle_index;
pub mod error;
pub mod oracle;
pub mod partitions;
pub mod species;
pub mod table;

pub use cycle_index::{h_series, CycleIndexSeries, Rational};
pub use error::{Error, Result};
pub use partitions::{partitions_of, z, Partition};
pub use species::{TanglegramCounter, TanglegramFamily};
