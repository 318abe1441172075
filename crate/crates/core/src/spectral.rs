//! Determinant-map bookkeeping: the dimension of the space of determinants
//! of Higgs fields, the genus and branching of the associated spectral
//! double cover, and the generic-fibre type.
//!
//! All dimension outputs refer to the normalised data with every degenerate
//! marked point removed, so `k` below always means `n - n₀`. For a generic
//! determinant the fibre is the Prym variety of the spectral cover, which
//! is branched over `4g - 4 + 2k` points and has genus `ĝ = 4g - 3 + k`,
//! giving Prym dimension `ĝ - g = 3g - 3 + k` — the base dimension, as a
//! completely integrable system requires. Two special cases: for `g = 0`,
//! `k = 3` the determinant map is identically zero, and for `g = k = 1`
//! the fibre is a Jacobian torus of dimension 1. Whether a *particular*
//! determinant is generic (simple zeros away from the marked points) is
//! not decidable from topology, so every report carries a genericity
//! caveat.

use crate::error::Error;
use crate::ranktwo::RankTwoVBundle;
use crate::rational::{rat, Rat};
use crate::Result;

/// Generic fibre of the determinant map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fibre {
    /// Prym variety of the spectral cover.
    Prym { dim: i64 },
    /// Jacobian torus (the `g = n - n₀ = 1` special case).
    Jacobian { dim: i64 },
    /// The determinant map is identically zero (`g = 0`, `n - n₀ = 3`).
    ZeroMap,
}

/// Spectral-cover bookkeeping for a rank-2 bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralData {
    /// Dimension `3g - 3 + (n - n₀)` of the space of determinants.
    pub base_dim: i64,
    /// Number of branch points `4g - 4 + 2(n - n₀)` of the spectral cover,
    /// when the cover is defined.
    pub branch_points: Option<i64>,
    /// Genus `ĝ = 4g - 3 + (n - n₀)` of the spectral curve, when defined.
    pub spectral_genus: Option<i64>,
    pub fibre: Fibre,
    /// Always true: fibre statements hold for generic determinants only.
    pub generic_caveat: bool,
}

/// Degree and isotropy of the distinguished sub-bundle in the
/// `g = n - n₀ = 1` analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecialSubBundle {
    pub degree: Rat,
    pub isotropy: u32,
}

/// Dimension `3g - 3 + (n - n₀)` of the space of determinants of Higgs
/// fields; half the moduli dimension.
pub fn hitchin_base_dim(bundle: &RankTwoVBundle) -> i64 {
    let dim = 3 * bundle.surface().genus_i64() - 3 + bundle.free_points() as i64;
    debug_assert_eq!(2 * dim, bundle.moduli_dimension());
    dim
}

/// Spectral-cover data for the (normalised) bundle.
pub fn spectral_data(bundle: &RankTwoVBundle) -> SpectralData {
    let g = bundle.surface().genus_i64();
    let k = bundle.free_points() as i64;
    let base_dim = hitchin_base_dim(bundle);
    if g == 0 && k == 3 {
        return SpectralData {
            base_dim,
            branch_points: None,
            spectral_genus: None,
            fibre: Fibre::ZeroMap,
            generic_caveat: true,
        };
    }
    if g == 1 && k == 1 {
        return SpectralData {
            base_dim,
            branch_points: None,
            spectral_genus: None,
            fibre: Fibre::Jacobian { dim: g },
            generic_caveat: true,
        };
    }
    let branch = 4 * g - 4 + 2 * k;
    let genus_hat = 4 * g - 3 + k;
    // Riemann-Hurwitz for the double cover: 2ĝ - 2 = 2(2g - 2) + branch.
    debug_assert_eq!(2 * genus_hat - 2, 2 * (2 * g - 2) + branch);
    let prym = genus_hat - g;
    debug_assert_eq!(prym, base_dim);
    SpectralData {
        base_dim,
        branch_points: Some(branch),
        spectral_genus: Some(genus_hat),
        fibre: Fibre::Prym { dim: prym },
        generic_caveat: true,
    }
}

/// Degrees of the two distinguished sub-bundles in the `g = n - n₀ = 1`
/// case. After normalising away degenerate points the bundle has a single
/// marked point with pair `(x, x')` and determinant `c₁ = r + (x + x')/α`;
/// the invariant sub-bundle has degree `r/2 + x/α` (isotropy `x`) when `r`
/// is even and `(r-1)/2 + x'/α` (isotropy `x'`) when `r` is odd.
pub fn special_case_subbundle_degrees(bundle: &RankTwoVBundle) -> Result<SpecialSubBundle> {
    if bundle.surface().genus() != 1 || bundle.free_points() != 1 {
        return Err(Error::NotSingleEllipticPoint);
    }
    let reduced = bundle.reduce()?.bundle;
    let (x, x_prime) = reduced.pairs()[0];
    let alpha = reduced.surface().cone_orders()[0] as i64;
    let r = reduced.det_integer_part();
    let result = if r % 2 == 0 {
        SpecialSubBundle {
            degree: rat(r / 2, 1) + rat(x as i64, alpha),
            isotropy: x,
        }
    } else {
        SpecialSubBundle {
            degree: rat((r - 1).div_euclid(2), 1) + rat(x_prime as i64, alpha),
            isotropy: x_prime,
        }
    };
    // 2 c1(L±) - c1(Λ) lands strictly inside (-1, 1).
    let gap = rat(2, 1) * result.degree - reduced.c1_det();
    debug_assert!(rat(-1, 1) < gap && gap < rat(1, 1));
    Ok(result)
}
