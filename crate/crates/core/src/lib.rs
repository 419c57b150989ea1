//! Explicit geometry of a general web of quadrics in P^3.
//!
//! A web is a three-dimensional linear system of quadric surfaces. From it
//! this crate computes the quartic symmetroid of singular members and its ten
//! nodes, the Steinerian surface, the Reye congruence of lines lying in the
//! base locus of a pencil of the web (with its order 7 and class 3), the
//! bitangent pencils attached to Reye lines, and the double cover of the web
//! parametrizing rulings of its quadrics, including ruling monodromy around
//! the branch surface and the degree-6 fundamental map.
//!
//! Counting statements run on exact rationals whenever the objects are
//! rational; root finding and path tracking use complex doubles.

pub mod double_cover;
pub mod error;
pub mod exec;
pub mod fundamental;
pub mod matrix;
pub mod nodes;
pub mod poly;
pub mod projective;
pub mod report;
pub mod reye;
pub mod rng;
pub mod scalar;
pub mod schubert;
pub mod suite;
pub mod web;

pub use error::{Error, Result};
pub use exec::Exec;
pub use rng::Rng;
