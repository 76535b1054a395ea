//! Exact computations in Cox rings of simplicial complete toric varieties.
//!
//! Everything here runs over arbitrary-precision rationals; there is no
//! floating point anywhere. The crate is organized bottom-up:
//!
//! * [`linalg`] - exact rational/integer linear algebra (rank, kernels,
//!   Smith normal form) with a certified modular fast path for large systems;
//! * [`fan`] - simplicial complete fans, class groups, divisor classes,
//!   Cartier data, nef/ample tests;
//! * [`cox`] - the Cox ring: graded monomial bases, polynomials, parsing;
//! * [`ideal`] - graded ideals, toric Jacobian ideals, torus-emptiness
//!   certificates;
//! * [`gorenstein`] - socle functionals, apolarity, Cox-Gorenstein
//!   verification, Euler-form coefficients;
//! * [`chow`] - lattice polytopes, mixed volumes, intersection numbers and
//!   degree bounds;
//! * [`nl`] - tangent spaces to Noether-Lefschetz loci of hypersurfaces
//!   containing a prescribed complete-intersection subvariety.
//!
//! The `examples/` directory of this crate is the best starting point: each
//! example is a small, runnable tour of one capability (`cargo run --example
//! fan_classgroup`, `cargo run --example nl_line_in_quartic`, ...). The
//! `coxnl` binary exposes the same operations as subcommands for scripting;
//! `coxnl selftest` runs the full acceptance suite on the bundled fixtures.

pub mod chow;
pub mod cox;
pub mod error;
pub mod fan;
pub mod gen;
pub mod gorenstein;
pub mod ideal;
pub mod linalg;
pub mod nl;
pub mod selftest;

pub use error::{CoxError, Result};

/// Arbitrary-precision integer, re-exported so downstream code and the
/// examples do not need a direct `num` dependency.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Convenience constructor for small integers as `Rat`.
pub fn rint(n: i64) -> Rat {
    Rat::from(Int::from(n))
}
