//! Lattices of torsion classes.
//!
//! - [`lattice`]: finite lattices, irreducibles, semidistributivity, the
//!   γ/μ labellings and the κ bijections.
//! - [`galois`]: torsion pairs over a reflexive relation and `tors(Br, →)`.
//! - [`rep`]: type-A quiver presentations, interval modules and exact Hom
//!   spaces.
//! - [`bridge`]: `tors A` from the brick Hom-relation, and algebra quotients
//!   as lattice quotients.
//! - [`oracle`]: brute-force cross-checks and exhaustive searches.
//! - [`suite`]: the property suite run by `check` and by the sweeps.
//! - [`io`]: the JSON input formats.

pub mod bridge;
pub mod error;
pub mod galois;
pub mod io;
pub mod lattice;
pub mod oracle;
pub mod rep;
pub mod suite;

pub use error::{Error, Result};
