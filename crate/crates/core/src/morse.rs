//! Critical strata of the Yang-Mills-Higgs energy on the stable-pair moduli
//! space, the unique minimum, and the Poincaré-polynomial / Euler-number
//! assembly they induce.
//!
//! The non-minimal critical manifolds are indexed by sub-bundle data
//! `(m, ε)` subject to
//!
//! ```text
//! l  <  2m + Σ εᵢ(x'ᵢ-xᵢ)/αᵢ  ≤  l + 2g - 2 + n₋ ,
//! ```
//!
//! each being a `2^{2g}`-fold covering of the `r`-th symmetric power of the
//! underlying surface with
//!
//! ```text
//! r = l - 2m + 2g - 2 + n₋ ,   Morse index = 2(2m - l + g - 1 + n₊) ,
//! ```
//!
//! so that `2r + index = 6g - 6 + 2(n - n₀)` always. Exactly one critical
//! manifold has index zero: generically the moduli of stable bundles, or —
//! exactly when some sign vector with `n₊ + l` odd satisfies
//! `n₊ - Σ εᵢ(x'ᵢ-xᵢ)/αᵢ < 1 - g` — a single projective stratum. Since all
//! indices are even, the stratification assembles Poincaré polynomials
//! additively (perfect-Morse assembly, taken as an assumption flag by
//! consumers).

use std::collections::BTreeMap;

use crate::error::Error;
use crate::poly::PoincarePoly;
use crate::ranktwo::{RankTwoVBundle, SubBundleSpec};
use crate::rational::{floor, int, Rat};
use crate::Result;

/// One non-minimal critical manifold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    /// The `(m, ε)` naming the destabilising sub-bundle.
    pub spec: SubBundleSpec,
    /// Critical value in units of `2π`: `2m - l + Σ εᵢ(x'ᵢ-xᵢ)/αᵢ > 0`.
    pub value_over_2pi: Rat,
    /// Morse index `2(2m - l + g - 1 + n₊)`, even and non-negative.
    pub index: i64,
    /// Symmetric-power degree `r = l - 2m + 2g - 2 + n₋ ≥ 0`.
    pub r: i64,
    /// Order `2^{2g}` of the covering of the symmetric power.
    pub cover_order: u64,
}

/// The unique index-0 critical manifold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimumStratum {
    /// The moduli of stable V-bundles, of the given complex dimension
    /// `3g - 3 + n - n₀`.
    StableBundlesModuli { complex_dim: i64 },
    /// The single projective stratum (only possible at genus zero).
    ProjectiveStratum(Stratum),
}

/// Topological summary of the stable-pair moduli space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TopologyReport {
    pub connected: bool,
    pub simply_connected: bool,
    pub compact: bool,
    pub isolated_point: bool,
    /// `12(g-1) + 4(n-n₀)`.
    pub real_dim: i64,
}

/// Shared preconditions of the stratification theorems: a hyperbolic base
/// orbifold, at least three non-degenerate points when `g = 0`, and no
/// reducible pairs.
pub(crate) fn check_moduli_preconditions(bundle: &RankTwoVBundle) -> Result<()> {
    if !bundle.surface().is_hyperbolic() {
        return Err(Error::NotHyperbolic);
    }
    if bundle.surface().genus() == 0 && bundle.free_points() < 3 {
        return Err(Error::GenusZeroTooFewPoints {
            have: bundle.free_points() as i64,
        });
    }
    if bundle.reduction_witness()?.is_some() {
        return Err(Error::ReducibleBundle);
    }
    Ok(())
}

/// All non-minimal critical strata, sorted by ascending critical value,
/// then index, then lexicographic `(m, ε)`.
pub fn enumerate_strata(bundle: &RankTwoVBundle) -> Result<Vec<Stratum>> {
    check_moduli_preconditions(bundle)?;
    let g = bundle.surface().genus_i64();
    let l = bundle.det_integer_part();
    let k = bundle.free_points() as i64;
    let cover_order = cover_order(bundle.surface().genus());
    let mut strata = Vec::new();
    for eps in bundle.sign_vectors()? {
        let t = bundle.eps_delta_sum(&eps);
        let n_plus = eps.n_plus() as i64;
        let n_minus = eps.n_minus() as i64;
        // l - t < 2m  and  2m <= l + 2g - 2 + n₋ .
        let m_min = floor((int(l) - t) / int(2)) + 1;
        let m_max = (l + 2 * g - 2 + n_minus).div_euclid(2);
        for m in m_min..=m_max {
            let value = int(2 * m - l) + t;
            let index = 2 * (2 * m - l + g - 1 + n_plus);
            let r = l - 2 * m + 2 * g - 2 + n_minus;
            debug_assert!(value > int(0));
            debug_assert!(index >= 0 && index % 2 == 0);
            debug_assert!(r >= 0);
            debug_assert_eq!(2 * r + index, 6 * g - 6 + 2 * k);
            strata.push(Stratum {
                spec: SubBundleSpec {
                    m,
                    eps: eps.clone(),
                },
                value_over_2pi: value,
                index,
                r,
                cover_order,
            });
        }
    }
    strata.sort_by(|a, b| {
        (a.value_over_2pi, a.index, a.spec.m, &a.spec.eps)
            .cmp(&(b.value_over_2pi, b.index, b.spec.m, &b.spec.eps))
    });
    Ok(strata)
}

/// The unique index-0 critical manifold. The projective case occurs exactly
/// when some sign vector with `n₊ + l` odd has `n₊ - Σεᵢ(x'ᵢ-xᵢ)/αᵢ < 1-g`
/// (impossible for `g ≥ 1`); the count of such vectors is asserted `≤ 1`.
pub fn minimum_stratum(bundle: &RankTwoVBundle) -> Result<MinimumStratum> {
    check_moduli_preconditions(bundle)?;
    let g = bundle.surface().genus_i64();
    let l = bundle.det_integer_part();
    let k = bundle.free_points() as i64;
    let mut solutions = 0usize;
    for eps in bundle.sign_vectors()? {
        let n_plus = eps.n_plus() as i64;
        if (n_plus + l) % 2 == 0 {
            continue;
        }
        if int(n_plus) - bundle.eps_delta_sum(&eps) < int(1 - g) {
            solutions += 1;
        }
    }
    assert!(
        solutions <= 1,
        "more than one index-0 candidate: the minimum would not be unique"
    );
    let index_zero: Vec<Stratum> = enumerate_strata(bundle)?
        .into_iter()
        .filter(|s| s.index == 0)
        .collect();
    if solutions == 0 {
        assert!(
            index_zero.is_empty(),
            "index-0 stratum found although the emptiness criterion held"
        );
        Ok(MinimumStratum::StableBundlesModuli {
            complex_dim: 3 * g - 3 + k,
        })
    } else {
        assert_eq!(
            index_zero.len(),
            1,
            "expected exactly one index-0 stratum"
        );
        Ok(MinimumStratum::ProjectiveStratum(
            index_zero.into_iter().next().unwrap(),
        ))
    }
}

/// Perfect-Morse assembly `P(t) = P_min(t) + Σ t^index · P_stratum(t)`.
///
/// Genus-0 strata are symmetric powers of the sphere, contributing
/// `1 + t² + ⋯ + t^{2r}`. An `r = 0` stratum of any genus is `2^{2g}`
/// points. For `g ≥ 1` and `r ≥ 1` the cover's polynomial must be supplied
/// in `cover_polys` (keyed by `r`) or a symbolic term `P(cover_{g,r})` is
/// emitted; similarly the stable-bundles minimum uses `min_poly` or the
/// symbol `P(N0)`.
pub fn poincare_polynomial(
    bundle: &RankTwoVBundle,
    min_poly: Option<&PoincarePoly>,
    cover_polys: &BTreeMap<i64, PoincarePoly>,
) -> Result<PoincarePoly> {
    let g = bundle.surface().genus();
    let strata = enumerate_strata(bundle)?;
    let minimum = minimum_stratum(bundle)?;
    let mut total = match &minimum {
        MinimumStratum::ProjectiveStratum(s) => PoincarePoly::even_geometric(s.r as usize),
        MinimumStratum::StableBundlesModuli { .. } => match min_poly {
            Some(p) => p.clone(),
            None => PoincarePoly::symbol("P(N0)"),
        },
    };
    for s in &strata {
        if s.index == 0 {
            // The projective minimum; already accounted for.
            debug_assert!(matches!(minimum, MinimumStratum::ProjectiveStratum(_)));
            continue;
        }
        let piece = if g == 0 {
            PoincarePoly::even_geometric(s.r as usize)
        } else if s.r == 0 {
            PoincarePoly::constant(s.cover_order as i64)
        } else if let Some(p) = cover_polys.get(&s.r) {
            p.clone()
        } else {
            PoincarePoly::symbol(&format!("P(cover_{{{g},{r}}})", r = s.r))
        };
        total = total.add(&piece.shifted(s.index as usize));
    }
    Ok(total)
}

/// Euler characteristic of the moduli space:
/// `χ = χ_min + Σ 2^{2g} · χ(S^r Σ_g)`, using `χ(S^r Σ_g) = r + 1` for
/// `g = 0` and `(-1)^r · C(2g-2, r)` otherwise (zero past `r = 2g-2`).
/// Returns `None` when the minimum is the stable-bundles moduli and
/// `chi_min` was not supplied.
pub fn euler_characteristic_moduli(
    bundle: &RankTwoVBundle,
    chi_min: Option<i64>,
) -> Result<Option<i64>> {
    let g = bundle.surface().genus_i64();
    let strata = enumerate_strata(bundle)?;
    let minimum = minimum_stratum(bundle)?;
    let base = match &minimum {
        MinimumStratum::ProjectiveStratum(s) => chi_sym_power(0, s.r),
        MinimumStratum::StableBundlesModuli { .. } => match chi_min {
            Some(c) => c as i128,
            None => return Ok(None),
        },
    };
    let mut chi: i128 = base;
    for s in &strata {
        if s.index == 0 {
            continue;
        }
        chi += (s.cover_order as i128) * chi_sym_power(g, s.r);
    }
    Ok(Some(
        i64::try_from(chi).expect("Euler characteristic exceeds i64"),
    ))
}

/// Topological summary: the moduli space is always connected and simply
/// connected; it is compact — a single point — exactly when `g = 0` and
/// `n - n₀ = 3`; its real dimension is `12(g-1) + 4(n-n₀)`.
pub fn topology_report(bundle: &RankTwoVBundle) -> Result<TopologyReport> {
    check_moduli_preconditions(bundle)?;
    let point = bundle.surface().genus() == 0 && bundle.free_points() == 3;
    Ok(TopologyReport {
        connected: true,
        simply_connected: true,
        compact: point,
        isolated_point: point,
        real_dim: bundle.moduli_dimension_real(),
    })
}

/// `2^{2g}`.
pub(crate) fn cover_order(genus: u32) -> u64 {
    assert!(genus <= 31, "cover order 2^(2g) exceeds u64");
    1u64 << (2 * genus)
}

/// Euler characteristic of the `r`-th symmetric power of a closed genus-`g`
/// surface: the `t^r` coefficient of `(1-t)^{2g-2}`.
pub(crate) fn chi_sym_power(g: i64, r: i64) -> i128 {
    assert!(g >= 0 && r >= 0);
    if g == 0 {
        return r as i128 + 1;
    }
    let top = 2 * g - 2;
    if r > top {
        return 0;
    }
    let mut c: i128 = 1;
    for j in 1..=r as i128 {
        c = c * (top as i128 - j + 1) / j;
    }
    if r % 2 == 0 {
        c
    } else {
        -c
    }
}
