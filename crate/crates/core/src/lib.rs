//! Robinson-Schensted cells of the symmetric group, classified by the
//! smoothness of the Schubert varieties of their members.
//!
//! The cells of `S_n` are the fibers of the insertion tableau map
//! [`tableau::rs_insert`], equivalently the Knuth classes of [`knuth`].
//! A permutation is smooth when it avoids the patterns 3412 and 4231
//! ([`smoothness`]). [`cells`] runs the census and the classification
//! predicates, and [`verify`] checks them against brute force.

pub mod cells;
pub mod cli;
pub mod error;
pub mod knuth;
pub mod perm;
pub mod report;
pub mod smoothness;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{Composition, Permutation};
pub use tableau::{rs_insert, Shape, StandardTableau};
