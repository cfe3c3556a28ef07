//! Ehrhart h*-vectors of the hypersimplex `Δ_{k,n}` and of the hypercube
//! slices `I^n_{r,k} = [0, r]^n ∩ {sum x_i = k}`.
//!
//! Three independent routes give the same vector:
//!
//! * [`hstar::hstar_closed_form`], an alternating sum of restricted
//!   coefficients;
//! * [`enumerate::hstar_combinatorial`], counting r-hypersimplicial decorated
//!   ordered set partitions by winding number;
//! * [`oracle::hstar_from_oracle`], lattice-point counts of dilates.
//!
//! [`sieve`] and [`verify`] check the identities and bijections connecting
//! the first two exhaustively on small cases.

pub mod coeff;
pub mod dosp;
pub mod enumerate;
pub mod error;
pub mod hstar;
pub mod oracle;
pub mod sieve;
pub mod verify;

pub use dosp::{Dosp, PolytopeSpec, WindingVector};
pub use hstar::HStarVector;
