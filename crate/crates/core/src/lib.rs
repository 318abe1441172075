//! Exact invariants of orbifold Riemann surfaces and rank-2 V-bundle moduli.
//!
//! An orbifold Riemann surface `M` here is a closed surface of genus `g`
//! with `n ≥ 1` marked points carrying isotropy (cone) orders `αᵢ ≥ 2`.
//! Everything downstream is computed in exact rational arithmetic:
//!
//! * line V-bundles, their tensor calculus and Riemann-Roch data
//!   (`surface`, `divisor`, `line`);
//! * rank-2 V-bundles, stability and stable-pair bookkeeping, reducibility,
//!   moduli dimensions (`ranktwo`);
//! * the Morse-Bott stratification of the rank-2 pair moduli and its
//!   Poincaré-polynomial / Euler-characteristic assembly (`morse`, `poly`);
//! * the determinant fibration over the space of quadratic differentials
//!   (`spectral`);
//! * Fuchsian / central-extension presentations, rotation numbers and
//!   representation-variety bookkeeping (`reps`);
//! * a deterministic self-check suite used by the CLI `check` command
//!   (`checks`).
//!
//! No floating point is used anywhere; all degrees, Euler characteristics
//! and critical values are `i64` or reduced `Rational64` values.

pub mod checks;
pub mod divisor;
pub mod error;
pub mod line;
pub mod morse;
pub mod poly;
pub mod ranktwo;
pub mod rational;
pub mod reps;
pub mod spectral;
pub mod surface;

pub use error::Error;
pub use rational::Rat;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
