//! Exact topology of weighted affine line arrangements in ℂ².
//!
//! From the lines `ℓ_j = 0` and weights `e_j` of an arrangement this crate
//! computes the combinatorics, closed-form invariants of the general fiber of
//! `f_e = ∏ ℓ_j^{e_j}`, the characteristic polynomials of the monodromy at
//! infinity and about the zero fiber, the stratified zeta function, and upper
//! bounds on twisted first cohomology of the complement with rank-one
//! local-system coefficients. All arithmetic is exact.

pub mod arrangement;
pub mod census;
pub mod error;
pub mod exact;
pub mod invariants;
pub mod localsys;
pub mod monodromy;
pub mod verify;

pub use arrangement::{
    compute_combinatorics, parse_arrangement, CombinatorialSummary, DirectionClass, Line, Vertex, WeightedArrangement,
};
pub use error::{Error, Result};
pub use exact::{CyclotomicExponents, FactoredUnityPoly, GaussianRational, Rational, RootOfUnity};
pub use invariants::InvariantReport;
pub use localsys::{BoundReport, LocalSystem};
pub use monodromy::{StratumDescriptor, ZetaFunction};
