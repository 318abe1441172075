//! Domain errors for the invariant calculus.
//!
//! Every variant corresponds to a violated mathematical precondition; the
//! messages state the precondition itself so a caller can surface them
//! directly.

use thiserror::Error;

/// A violated precondition of one of the exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A surface needs at least one marked point.
    #[error("at least one marked point is required")]
    EmptyConeList,

    /// Cone orders must be at least 2.
    #[error("cone order {alpha} is invalid: every alpha must be >= 2")]
    ConeOrderTooSmall { alpha: u32 },

    /// Line-bundle isotropy must satisfy 0 <= y < alpha.
    #[error("isotropy {y} out of range at a point of order {alpha}: requires 0 <= y < alpha")]
    IsotropyOutOfRange { y: u32, alpha: u32 },

    /// Rank-2 isotropy pairs must satisfy 0 <= x <= x' < alpha.
    #[error("isotropy pair ({x},{x_prime}) invalid at order {alpha}: requires 0 <= x <= x' < alpha")]
    IsotropyPairInvalid { x: u32, x_prime: u32, alpha: u32 },

    /// Two bundles live over different surfaces.
    #[error("operands live over different surfaces")]
    SurfaceMismatch,

    /// A marked-point index was out of range.
    #[error("marked-point index {index} out of range (surface has {count} points)")]
    PointIndexOutOfRange { index: usize, count: usize },

    /// An isotropy vector has the wrong length for the bundle.
    #[error("isotropy vector has length {got}, expected {expected}")]
    IsotropyVectorLength { expected: usize, got: usize },

    /// Isotropy-vector entries must be -1, 0 or +1.
    #[error("isotropy vector entry {value} at position {index}: entries must be -1, 0 or +1")]
    IsotropyVectorEntry { index: usize, value: i8 },

    /// epsilon must vanish exactly at points where the isotropy pair is equal.
    #[error("isotropy vector incompatible at position {index}: epsilon must be 0 exactly where x = x'")]
    IsotropyVectorIncompatible { index: usize },

    /// Subset size for the reciprocal-sum bound must satisfy 1 <= k <= n.
    #[error("subset size {k} out of range: requires 1 <= k <= {n}")]
    SubsetSizeOutOfRange { k: usize, n: usize },

    /// The equal-degree wall condition 2 c1(L) = c1(Lambda) fails.
    #[error("requires 2 c1(L) = c1(Lambda): the sub-bundle degree must equal half the determinant degree")]
    WallViolation,

    /// A supplied section count was negative.
    #[error("supplied section count {value} is negative")]
    NegativeSectionCount { value: i64 },

    /// The bundle admits a degree-halving reduction, excluded here.
    #[error("bundle admits a reduction (a sub-bundle of half the determinant degree); requires an irreducible bundle")]
    ReducibleBundle,

    /// Genus-zero moduli need at least three non-degenerate marked points.
    #[error("requires n - n0 >= 3 when g = 0 (found n - n0 = {have})")]
    GenusZeroTooFewPoints { have: i64 },

    /// The surface must be hyperbolic (negative orbifold Euler characteristic).
    #[error("requires a hyperbolic surface: the orbifold Euler characteristic must be negative")]
    NotHyperbolic,

    /// The flat-bundle Euler class must be positive here.
    #[error("requires a positive Euler class b + sum(y_i/alpha_i)")]
    EulerClassNotPositive,

    /// The integer part of the Euler class is bounded by 2g - 2.
    #[error("requires b <= 2g - 2 (found b = {b}, 2g - 2 = {max})")]
    EulerIntegerPartTooLarge { b: i64, max: i64 },

    /// The half-integer degree analysis needs g = 1 and a single
    /// non-degenerate marked point.
    #[error("requires g = 1 and n - n0 = 1")]
    NotSingleEllipticPoint,

    /// Rotation numbers must satisfy 0 <= r <= alpha and r = y (mod 2).
    #[error("rotation number {r} invalid at position {index}: requires 0 <= r <= alpha and r = y (mod 2)")]
    RotationNumberInvalid { index: usize, r: u32 },

    /// Sign-assignment enumerations are capped to keep runtimes exact and small.
    #[error("enumeration over {free} sign positions exceeds the supported cap of 24")]
    EnumerationTooLarge { free: usize },
}
