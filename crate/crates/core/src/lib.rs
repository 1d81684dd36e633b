//! Exact symbolic computation for polynomial functions over division
//! algebras, centered on the rational quaternions.
//!
//! Everything is computed over ℚ with arbitrary-precision rationals; there
//! is no floating point anywhere. The crate models three rings and the maps
//! between them:
//!
//! * **[`FreePoly`]** — the free product `D ∗ ℚ⟨x₁…xₙ⟩` of a validated
//!   finite-dimensional ℚ-algebra `D` ([`Algebra`]) with a free associative
//!   algebra: noncommutative polynomials whose coefficients interlace the
//!   variables, in canonical form on the interlaced-word basis. These are
//!   the expressions that define polynomial functions `Dⁿ → D`.
//! * **[`CentralPoly`]** — the ring `D_c[y_ij]` of polynomials in `m·n`
//!   *central* variables `y_ij` (one per variable/coordinate pair) with
//!   coefficients in `D`, and its scalar subring ℚ`[y_ij]`
//!   ([`ScalarPoly`]).
//! * the [`transport`] maps between them: the coordinate polynomials
//!   `Y_ij` built from each algebra's coordinate functionals
//!   ([`Algebra::coordinate_functionals`]), the isomorphism
//!   [`to_central`](transport::to_central) from functions to central
//!   polynomials, its section [`from_central`](transport::from_central),
//!   and certificates that express any identically-vanishing expression
//!   over the generators of the vanishing ideal
//!   ([`gpi_certificate`](transport::gpi_certificate)).
//!
//! On top of that sit an exact Buchberger engine ([`groebner`]) for ideal
//! membership in ℚ`[y_ij]` and the quaternionic ideal machinery
//! ([`nullstellensatz`]): translating two-sided ideals of the function ring
//! into scalar polynomial ideals, membership tests, zero-locus filtering,
//! and verification of radical-membership certificates built from the
//! quaternion norm.
//!
//! The [`files`] module serializes every artifact (algebras, polynomials,
//! ideals, certificates) as JSON with rationals rendered as `"p/q"`
//! strings, and [`sample`] provides seeded random generators used by the
//! property tests and benchmarks.

pub mod algebra;
pub mod centralpoly;
pub mod error;
pub mod files;
pub mod freepoly;
pub mod groebner;
pub mod linalg;
pub mod nullstellensatz;
pub mod rational;
pub mod sample;
pub mod transport;

pub use algebra::{Algebra, AlgebraElement, CoordTable};
pub use centralpoly::{CentralPoly, Monomial, ScalarPoly};
pub use error::{Error, Result};
pub use freepoly::{FreePoly, Point, Word};
pub use groebner::{buchberger, divide, search_combination, GroebnerBasis};
pub use nullstellensatz::{verify_radical_certificate, Ideal, RadicalCertificate};
pub use rational::Rational;
pub use transport::{
    coord_poly, from_central, gpi_certificate, is_identity, to_central, verify_certificate,
    CertStep, GpiCertificate, GpiGenerators,
};
