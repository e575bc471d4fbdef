//! Exact integer arithmetic on Farey sequences and their rank tables,
//! with applications to digital-image geometry.
//!
//! The crate builds the sequence F_n and its dense rank table T_n
//! (O(1) fraction-to-rank lookup), answers closest-fraction queries by
//! binary search or false-position interpolation, and applies rank
//! arithmetic to grid geometry: multiplication-free collinearity,
//! direction-threshold polygonal approximation of digital contours, and
//! rotation-robust shape descriptors. No computational path uses
//! floating point.

pub mod bench;
pub mod descriptor;
pub mod direction;
mod error;
pub mod fraction;
pub mod geometry;
pub mod ratio;
pub mod search;
pub mod sequence;
pub mod table;

pub use direction::DirectionTable;
pub use error::Error;
pub use fraction::Fraction;
pub use ratio::Ratio;
pub use search::{Algorithm, SearchKey, SearchResult};
pub use sequence::{sequence_size, FareySequence};
pub use table::FareyTable;
