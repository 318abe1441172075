//! Rank-2 V-bundles: isotropy pairs, determinant data, sub-bundle degrees,
//! stability bookkeeping and reducibility.
//!
//! A rank-2 V-bundle `E` is classified topologically by isotropy pairs
//! `0 ≤ xᵢ ≤ x'ᵢ < αᵢ` at the marked points together with the integer part
//! `l` of its determinant, so that
//!
//! ```text
//! c₁(Λ²E) = l + Σᵢ (xᵢ + x'ᵢ)/αᵢ .
//! ```
//!
//! Write `n₀ = #{i : xᵢ = x'ᵢ}`. A line sub-bundle is specified by an
//! integer `m` and an isotropy vector `(εᵢ) ∈ {-1,0,+1}ⁿ` (with `εᵢ = 0`
//! exactly at equal pairs), its degree being
//!
//! ```text
//! c₁(L) = m + Σᵢ { εᵢ(x'ᵢ - xᵢ) + (x'ᵢ + xᵢ) } / 2αᵢ .
//! ```
//!
//! The twisted Euler characteristics driving everything downstream are
//!
//! ```text
//! χ(K L⁻² Λ) = l - 2m + g - 1 + n₋ ,   χ(K L² Λ*) = 2m - l + g - 1 + n₊ ,
//! ```
//!
//! whose sum is `2g - 2 + (n - n₀)`. A reduction (a line sub-bundle of half
//! the determinant degree) exists iff some isotropy vector has
//! `Σ εᵢ(x'ᵢ-xᵢ)/αᵢ` an integer congruent to `l` mod 2. The moduli space of
//! stable pairs built on this data has complex dimension `6(g-1) + 2(n-n₀)`.

use crate::error::Error;
use crate::line::LineVBundle;
use crate::rational::{int, rat, sum, Rat};
use crate::surface::OrbifoldSurface;
use crate::Result;

/// Topological class of a rank-2 V-bundle: isotropy pairs and the
/// determinant integer part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTwoVBundle {
    surface: OrbifoldSurface,
    pairs: Vec<(u32, u32)>,
    l: i64,
    n0: usize,
}

/// A sign per marked point, zero exactly at equal isotropy pairs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IsotropyVector {
    eps: Vec<i8>,
}

/// A candidate line sub-bundle: integer part `m` plus an isotropy vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubBundleSpec {
    pub m: i64,
    pub eps: IsotropyVector,
}

/// Section counts on the semi-stable wall `2c₁(L) = c₁(Λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SemistableH0 {
    /// `h⁰(End₀E ⊗ K)` when the defining extension is non-trivial:
    /// `3g - 3 + n - n₀`.
    pub end0_k_nontrivial: i64,
    /// `h⁰(End₀E ⊗ K)` when the extension is trivial (split case):
    /// `3g - 2 + n - n₀`.
    pub end0_k_trivial: i64,
    /// `h⁰(E* ⊗ KL) = 2g - 1 - Σεδ + n₊`.
    pub e_dual_kl: i64,
    /// `h⁰(K L⁻² Λ) = g - 1 + Σεδ + n₋`.
    pub k_lm2_det: i64,
    /// `h⁰(K L² Λ*) = g - 1 - Σεδ + n₊`.
    pub k_l2_det_dual: i64,
}

/// Coarse holomorphic type of `E`, plus whatever section counts the caller
/// actually knows. The counts refer to the destabilising (maximal-degree)
/// line sub-bundle `L_E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityClass {
    pub kind: StabilityKind,
    /// `h⁰(K L_E⁻² Λ)`, if known.
    pub h0_k_lm2_det: Option<i64>,
    /// `h⁰(K L_E² Λ*)`, if known.
    pub h0_k_l2_det_dual: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilityKind {
    Stable,
    SemistableIndecomposable,
    SemistableDecomposable,
    NonSemistableIndecomposable,
    NonSemistableDecomposable,
}

/// Whether a bundle of the given holomorphic type occurs in a stable pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// It does; `isolated_point` marks the `g = 0`, `n - n₀ = 3`
    /// non-semi-stable decomposable case, which contributes an isolated
    /// point of the moduli space.
    Yes { isolated_point: bool },
    /// It does not; `violated` states the failed necessary condition.
    No { violated: String },
    /// Topology alone cannot decide; `needs` lists the missing section
    /// counts with their thresholds.
    Conditional { needs: Vec<String> },
}

/// Per-point parabolic weights `(x/α, x'/α)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicWeight {
    pub lambda: Rat,
    pub lambda_prime: Rat,
    /// True exactly when `x = x'`.
    pub degenerate: bool,
}

/// Result of normalising away the degenerate marked points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedBundle {
    /// The bundle over the surface that keeps only points with `x ≠ x'`;
    /// its `n₀` is zero and its determinant integer part equals the
    /// original `l`.
    pub bundle: RankTwoVBundle,
    /// Record of the normalisation: which points were dropped and the
    /// point-bundle power used to cancel their isotropy.
    pub dropped: Vec<DroppedPoint>,
}

/// A marked point removed by [`RankTwoVBundle::reduce`]: the bundle was
/// twisted by the line bundle of degree `-x/α` supported there.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DroppedPoint {
    pub index: usize,
    pub alpha: u32,
    pub x: u32,
}

impl IsotropyVector {
    /// Build a sign vector, validating entries lie in `{-1, 0, +1}`.
    pub fn new(eps: Vec<i8>) -> Result<Self> {
        for (index, &value) in eps.iter().enumerate() {
            if !(-1..=1).contains(&value) {
                return Err(Error::IsotropyVectorEntry { index, value });
            }
        }
        Ok(IsotropyVector { eps })
    }

    pub fn eps(&self) -> &[i8] {
        &self.eps
    }

    pub fn len(&self) -> usize {
        self.eps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eps.is_empty()
    }

    /// `n₊ = #{εᵢ = +1}`.
    pub fn n_plus(&self) -> usize {
        self.eps.iter().filter(|&&e| e == 1).count()
    }

    /// `n₋ = #{εᵢ = -1}`.
    pub fn n_minus(&self) -> usize {
        self.eps.iter().filter(|&&e| e == -1).count()
    }

    /// The vector with every sign flipped (the complementary sub-bundle).
    pub fn negate(&self) -> IsotropyVector {
        IsotropyVector {
            eps: self.eps.iter().map(|&e| -e).collect(),
        }
    }
}

impl RankTwoVBundle {
    /// Build a bundle, validating `0 ≤ x ≤ x' < α` at each point.
    pub fn new(surface: OrbifoldSurface, pairs: Vec<(u32, u32)>, l: i64) -> Result<Self> {
        if pairs.len() != surface.marked_points() {
            return Err(Error::IsotropyVectorLength {
                expected: surface.marked_points(),
                got: pairs.len(),
            });
        }
        for (&(x, x_prime), &alpha) in pairs.iter().zip(surface.cone_orders()) {
            if x > x_prime || x_prime >= alpha {
                return Err(Error::IsotropyPairInvalid { x, x_prime, alpha });
            }
        }
        let n0 = pairs.iter().filter(|&&(x, xp)| x == xp).count();
        Ok(RankTwoVBundle {
            surface,
            pairs,
            l,
            n0,
        })
    }

    pub fn surface(&self) -> &OrbifoldSurface {
        &self.surface
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    /// Determinant integer part `l`.
    pub fn det_integer_part(&self) -> i64 {
        self.l
    }

    /// `n₀ = #{i : xᵢ = x'ᵢ}`.
    pub fn n0(&self) -> usize {
        self.n0
    }

    /// `n - n₀`, the number of non-degenerate marked points.
    pub fn free_points(&self) -> usize {
        self.pairs.len() - self.n0
    }

    /// The determinant line V-bundle: isotropy `(xᵢ + x'ᵢ) mod αᵢ` with
    /// `c₁(Λ) = l + Σ (xᵢ + x'ᵢ)/αᵢ`.
    pub fn det_class(&self) -> LineVBundle {
        let mut b = self.l;
        let y = self
            .pairs
            .iter()
            .zip(self.surface.cone_orders())
            .map(|(&(x, xp), &alpha)| {
                let s = x + xp;
                b += (s / alpha) as i64;
                s % alpha
            })
            .collect();
        LineVBundle::new(self.surface.clone(), b, y)
            .expect("reduced isotropy sums are valid exponents")
    }

    /// `c₁(Λ) = l + Σ (xᵢ + x'ᵢ)/αᵢ`.
    pub fn c1_det(&self) -> Rat {
        int(self.l)
            + sum(self
                .pairs
                .iter()
                .zip(self.surface.cone_orders())
                .map(|(&(x, xp), &alpha)| rat((x + xp) as i64, alpha as i64)))
    }

    /// Validate that an isotropy vector matches this bundle: right length,
    /// zero exactly at equal pairs.
    pub fn check_isotropy_vector(&self, eps: &IsotropyVector) -> Result<()> {
        if eps.len() != self.pairs.len() {
            return Err(Error::IsotropyVectorLength {
                expected: self.pairs.len(),
                got: eps.len(),
            });
        }
        for (index, (&e, &(x, xp))) in eps.eps().iter().zip(&self.pairs).enumerate() {
            if (e == 0) != (x == xp) {
                return Err(Error::IsotropyVectorIncompatible { index });
            }
        }
        Ok(())
    }

    /// `Σᵢ εᵢ(x'ᵢ - xᵢ)/αᵢ` for a compatible sign vector.
    pub fn eps_delta_sum(&self, eps: &IsotropyVector) -> Rat {
        sum(eps
            .eps()
            .iter()
            .zip(&self.pairs)
            .zip(self.surface.cone_orders())
            .map(|((&e, &(x, xp)), &alpha)| rat(e as i64 * (xp - x) as i64, alpha as i64)))
    }

    /// The line sub-bundle named by `spec`: isotropy `x'ᵢ` where `εᵢ = +1`,
    /// `xᵢ` otherwise, integer part `m`; its degree is the display
    /// `m + Σ {εᵢ(x'ᵢ-xᵢ) + (x'ᵢ+xᵢ)}/2αᵢ`.
    pub fn sub_bundle(&self, spec: &SubBundleSpec) -> Result<LineVBundle> {
        self.check_isotropy_vector(&spec.eps)?;
        let y = spec
            .eps
            .eps()
            .iter()
            .zip(&self.pairs)
            .map(|(&e, &(x, xp))| if e == 1 { xp } else { x })
            .collect();
        let bundle = LineVBundle::new(self.surface.clone(), spec.m, y)?;
        debug_assert_eq!(
            bundle.c1(),
            int(spec.m)
                + sum(spec
                    .eps
                    .eps()
                    .iter()
                    .zip(&self.pairs)
                    .zip(self.surface.cone_orders())
                    .map(|((&e, &(x, xp)), &alpha)| rat(
                        e as i64 * (xp - x) as i64 + (xp + x) as i64,
                        2 * alpha as i64
                    )))
        );
        Ok(bundle)
    }

    /// The two twist bundles `K L⁻² Λ` and `K L² Λ*` built explicitly from
    /// the line-bundle calculus.
    pub fn twist_bundles(&self, spec: &SubBundleSpec) -> Result<(LineVBundle, LineVBundle)> {
        let l = self.sub_bundle(spec)?;
        let k = LineVBundle::canonical(self.surface.clone());
        let det = self.det_class();
        let down = k.tensor(&l.pow(-2))?.tensor(&det)?;
        let up = k.tensor(&l.pow(2))?.tensor(&det.dual())?;
        Ok((down, up))
    }

    /// `(χ(K L⁻² Λ), χ(K L² Λ*)) = (l - 2m + g - 1 + n₋, 2m - l + g - 1 + n₊)`,
    /// cross-checked against the explicitly constructed twist bundles.
    pub fn chi_twists(&self, spec: &SubBundleSpec) -> Result<(i64, i64)> {
        self.check_isotropy_vector(&spec.eps)?;
        let g = self.surface.genus_i64();
        let down = self.l - 2 * spec.m + g - 1 + spec.eps.n_minus() as i64;
        let up = 2 * spec.m - self.l + g - 1 + spec.eps.n_plus() as i64;
        debug_assert_eq!(
            {
                let (d, u) = self.twist_bundles(spec)?;
                (d.chi(), u.chi())
            },
            (down, up)
        );
        Ok((down, up))
    }

    /// Section counts on the semi-stable wall; errors unless
    /// `2 c₁(L) = c₁(Λ)` exactly.
    pub fn semistable_h0(&self, spec: &SubBundleSpec) -> Result<SemistableH0> {
        let l_bundle = self.sub_bundle(spec)?;
        if int(2) * l_bundle.c1() != self.c1_det() {
            return Err(Error::WallViolation);
        }
        // On the wall Σεδ = l - 2m is an integer.
        let eps_delta = self.eps_delta_sum(&spec.eps);
        debug_assert_eq!(eps_delta, int(self.l - 2 * spec.m));
        let g = self.surface.genus_i64();
        let k = self.free_points() as i64;
        let n_plus = spec.eps.n_plus() as i64;
        let n_minus = spec.eps.n_minus() as i64;
        let sigma = self.l - 2 * spec.m;
        let record = SemistableH0 {
            end0_k_nontrivial: 3 * g - 3 + k,
            end0_k_trivial: 3 * g - 2 + k,
            e_dual_kl: 2 * g - 1 - sigma + n_plus,
            k_lm2_det: g - 1 + sigma + n_minus,
            k_l2_det_dual: g - 1 - sigma + n_plus,
        };
        debug_assert_eq!(record.e_dual_kl, -record.k_lm2_det + 3 * g - 2 + k);
        Ok(record)
    }

    /// Whether a bundle of holomorphic type `class` occurs in a stable pair.
    /// Purely topological necessary conditions give `No` outright; missing
    /// section counts give `Conditional`.
    pub fn stable_pair_exists(&self, class: &StabilityClass) -> Result<Verdict> {
        for h0 in [class.h0_k_lm2_det, class.h0_k_l2_det_dual]
            .into_iter()
            .flatten()
        {
            if h0 < 0 {
                return Err(Error::NegativeSectionCount { value: h0 });
            }
        }
        let g = self.surface.genus_i64();
        let k = self.free_points() as i64;
        let yes = Verdict::Yes {
            isolated_point: false,
        };
        let no = |violated: &str| Verdict::No {
            violated: violated.to_string(),
        };
        Ok(match class.kind {
            StabilityKind::Stable => {
                if g == 0 && k < 3 {
                    no("stable bundles require n - n0 >= 3 when g = 0")
                } else {
                    yes
                }
            }
            StabilityKind::SemistableIndecomposable => {
                if k < 2 {
                    no("a strictly semi-stable bundle requires n - n0 >= 2")
                } else if g > 1 {
                    yes
                } else if g + k < 4 {
                    no("requires g + n - n0 >= 4")
                } else {
                    match class.h0_k_lm2_det {
                        Some(a) if a > 1 => yes,
                        Some(a) => Verdict::No {
                            violated: format!(
                                "requires h0(K L^-2 Lambda) > 1 (supplied {a})"
                            ),
                        },
                        None => Verdict::Conditional {
                            needs: vec!["h0(K L^-2 Lambda) > 1".to_string()],
                        },
                    }
                }
            }
            StabilityKind::SemistableDecomposable => {
                if k < 2 {
                    no("a strictly semi-stable bundle requires n - n0 >= 2")
                } else if g > 0 {
                    yes
                } else if k < 4 {
                    no("requires n - n0 >= 4 when g = 0")
                } else {
                    // Both summands must carry sections: h0(K L^-2 Lambda) >= 1
                    // and h0(K L^2 Lambda*) >= 1. On the g = 0 wall the two
                    // counts sum to n - n0 - 2, so either determines the other.
                    let down = class
                        .h0_k_lm2_det
                        .or(class.h0_k_l2_det_dual.map(|b| k - 2 - b));
                    let up = class
                        .h0_k_l2_det_dual
                        .or(class.h0_k_lm2_det.map(|a| k - 2 - a));
                    match (down, up) {
                        (Some(a), Some(b)) if a >= 1 && b >= 1 => yes,
                        (Some(a), Some(b)) => Verdict::No {
                            violated: format!(
                                "requires h0(K L^-2 Lambda) >= 1 and h0(K L^2 Lambda*) >= 1 (have {a} and {b})"
                            ),
                        },
                        _ => Verdict::Conditional {
                            needs: vec![
                                "h0(K L^-2 Lambda) >= 1".to_string(),
                                "h0(K L^2 Lambda*) >= 1".to_string(),
                            ],
                        },
                    }
                }
            }
            StabilityKind::NonSemistableIndecomposable => {
                if !(g >= 2 || g + k >= 4) {
                    no("requires g >= 2 or g + n - n0 >= 4")
                } else {
                    match class.h0_k_lm2_det {
                        Some(a) if a > 1 => yes,
                        Some(a) => Verdict::No {
                            violated: format!(
                                "requires h0(K L^-2 Lambda) > 1 (supplied {a})"
                            ),
                        },
                        None => Verdict::Conditional {
                            needs: vec!["h0(K L^-2 Lambda) > 1".to_string()],
                        },
                    }
                }
            }
            StabilityKind::NonSemistableDecomposable => {
                if !(g >= 1 || k >= 3) {
                    no("requires g >= 1 or n - n0 >= 3")
                } else {
                    match class.h0_k_lm2_det {
                        Some(a) if a >= 1 => Verdict::Yes {
                            isolated_point: g == 0 && k == 3,
                        },
                        Some(a) => Verdict::No {
                            violated: format!(
                                "requires h0(K L^-2 Lambda) >= 1 (supplied {a})"
                            ),
                        },
                        None => Verdict::Conditional {
                            needs: vec!["h0(K L^-2 Lambda) >= 1".to_string()],
                        },
                    }
                }
            }
        })
    }

    /// True iff the decomposition summand named by `spec` makes `E`
    /// invariant under every Higgs field: `g = 0`, `2c₁(L) > c₁(Λ)` and
    /// `χ(K L² Λ*) = 0` (the vanishing bound attained).
    pub fn all_higgs_invariant(&self, spec: &SubBundleSpec) -> Result<bool> {
        let l_bundle = self.sub_bundle(spec)?;
        if self.surface.genus() != 0 {
            return Ok(false);
        }
        let strictly_destabilising = int(2) * l_bundle.c1() > self.c1_det();
        let (_, chi_up) = self.chi_twists(spec)?;
        Ok(strictly_destabilising && chi_up == 0)
    }

    /// All compatible sign vectors, lexicographically ordered with
    /// `-1 < 0 < +1` entrywise; errors past the enumeration cap.
    pub fn sign_vectors(&self) -> Result<impl Iterator<Item = IsotropyVector> + '_> {
        let free: Vec<usize> = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(_, &(x, xp))| x != xp)
            .map(|(i, _)| i)
            .collect();
        let k = free.len();
        if k > 24 {
            return Err(Error::EnumerationTooLarge { free: k });
        }
        let n = self.pairs.len();
        Ok((0..(1u64 << k)).map(move |mask| {
            let mut eps = vec![0i8; n];
            for (j, &pos) in free.iter().enumerate() {
                // Leading free position = most significant bit, so mask
                // order is entrywise lexicographic order.
                let bit = (mask >> (k - 1 - j)) & 1;
                eps[pos] = if bit == 1 { 1 } else { -1 };
            }
            IsotropyVector { eps }
        }))
    }

    /// Lexicographically first `(m, ε)` with `2c₁(L) = c₁(Λ)`, if any:
    /// equivalently the first `ε` making `Σ εᵢ(x'ᵢ-xᵢ)/αᵢ` an integer of the
    /// parity of `l`, with `m` then forced.
    pub fn reduction_witness(&self) -> Result<Option<SubBundleSpec>> {
        let mut best: Option<SubBundleSpec> = None;
        for eps in self.sign_vectors()? {
            let t = self.eps_delta_sum(&eps);
            if !t.is_integer() {
                continue;
            }
            let t = t.to_integer();
            if (self.l - t) % 2 != 0 {
                continue;
            }
            let m = (self.l - t) / 2;
            let candidate = SubBundleSpec { m, eps };
            let better = match &best {
                None => true,
                Some(b) => (candidate.m, &candidate.eps) < (b.m, &b.eps),
            };
            if better {
                best = Some(candidate);
            }
        }
        if let Some(witness) = &best {
            debug_assert_eq!(
                int(2) * self.sub_bundle(witness)?.c1(),
                self.c1_det()
            );
        }
        Ok(best)
    }

    /// Whether the degree bounds are attainable for this bundle: minimum of
    /// `n₊ - Σ εᵢ(x'ᵢ-xᵢ)/αᵢ` over sign vectors with `n₊ + l` odd is `≤ 1`.
    /// A fully degenerate bundle (`n₀ = n`) has no sign vectors to vary and
    /// returns `false` by convention.
    pub fn bounds_attainable(&self) -> Result<bool> {
        if self.free_points() == 0 {
            return Ok(false);
        }
        let mut minimum: Option<Rat> = None;
        for eps in self.sign_vectors()? {
            if (eps.n_plus() as i64 + self.l) % 2 == 0 {
                continue;
            }
            let value = int(eps.n_plus() as i64) - self.eps_delta_sum(&eps);
            if minimum.map_or(true, |m| value < m) {
                minimum = Some(value);
            }
        }
        Ok(minimum.map_or(false, |m| m <= int(1)))
    }

    /// Complex dimension `6(g-1) + 2(n-n₀)` of the stable-pair moduli.
    pub fn moduli_dimension(&self) -> i64 {
        6 * (self.surface.genus_i64() - 1) + 2 * self.free_points() as i64
    }

    /// Real dimension, twice the complex one.
    pub fn moduli_dimension_real(&self) -> i64 {
        2 * self.moduli_dimension()
    }

    /// Per-point parabolic weights `(xᵢ/αᵢ, x'ᵢ/αᵢ)` with degeneracy flags.
    pub fn parabolic_weights(&self) -> Vec<ParabolicWeight> {
        self.pairs
            .iter()
            .zip(self.surface.cone_orders())
            .map(|(&(x, xp), &alpha)| ParabolicWeight {
                lambda: rat(x as i64, alpha as i64),
                lambda_prime: rat(xp as i64, alpha as i64),
                degenerate: x == xp,
            })
            .collect()
    }

    /// Normalise away the degenerate marked points: at each point with
    /// `x = x'`, twist by the line bundle of degree `-x/α` supported there
    /// (killing the isotropy), then forget the point. The determinant degree
    /// drops by exactly the removed fractional contributions `2xᵢ/αᵢ`, so
    /// the integer part `l` is unchanged, and `moduli_dimension` is
    /// preserved. Errors if every point is degenerate, since the result
    /// would carry no marked points at all.
    pub fn reduce(&self) -> Result<ReducedBundle> {
        if self.n0 == 0 {
            return Ok(ReducedBundle {
                bundle: self.clone(),
                dropped: Vec::new(),
            });
        }
        let mut kept_orders = Vec::new();
        let mut kept_pairs = Vec::new();
        let mut dropped = Vec::new();
        for (index, (&(x, xp), &alpha)) in
            self.pairs.iter().zip(self.surface.cone_orders()).enumerate()
        {
            if x == xp {
                dropped.push(DroppedPoint { index, alpha, x });
            } else {
                kept_orders.push(alpha);
                kept_pairs.push((x, xp));
            }
        }
        let surface = OrbifoldSurface::new(self.surface.genus(), kept_orders)?;
        let bundle = RankTwoVBundle::new(surface, kept_pairs, self.l)?;
        debug_assert_eq!(bundle.moduli_dimension(), self.moduli_dimension());
        debug_assert_eq!(
            bundle.c1_det(),
            self.c1_det()
                - sum(dropped
                    .iter()
                    .map(|d| rat(2 * d.x as i64, d.alpha as i64)))
        );
        Ok(ReducedBundle { bundle, dropped })
    }
}

/// Whether the minimum of `Σ 1/α` over `k`-element subsets of the cone
/// orders is `≤ 1` (attained by the `k` largest orders).
pub fn bounds_attainable_surface(surface: &OrbifoldSurface, k: usize) -> Result<bool> {
    let n = surface.marked_points();
    if k == 0 || k > n {
        return Err(Error::SubsetSizeOutOfRange { k, n });
    }
    let mut orders: Vec<u32> = surface.cone_orders().to_vec();
    orders.sort_unstable_by(|a, b| b.cmp(a));
    let minimum = sum(orders[..k].iter().map(|&a| rat(1, a as i64)));
    Ok(minimum <= int(1))
}

/// All topological square roots of the trivial class: classes
/// `⊗_{αᵢ even} Lᵢ^{δᵢ αᵢ/2}` of degree zero. Supported on an even-sized
/// subset `S` of the even-order points, such a root has isotropy `αᵢ/2` on
/// `S` and integer part `-|S|/2`. There are `2^{n₂-1}` of them when the
/// number `n₂` of even orders is positive, and just the trivial class
/// otherwise.
pub fn topological_roots(surface: &OrbifoldSurface) -> Vec<LineVBundle> {
    let even: Vec<usize> = surface
        .cone_orders()
        .iter()
        .enumerate()
        .filter(|(_, &a)| a % 2 == 0)
        .map(|(i, _)| i)
        .collect();
    let mut roots = Vec::new();
    for mask in 0u64..(1u64 << even.len()) {
        if mask.count_ones() % 2 != 0 {
            continue;
        }
        let mut y = vec![0u32; surface.marked_points()];
        for (j, &pos) in even.iter().enumerate() {
            if (mask >> j) & 1 == 1 {
                y[pos] = surface.cone_orders()[pos] / 2;
            }
        }
        let b = -((mask.count_ones() / 2) as i64);
        roots.push(
            LineVBundle::new(surface.clone(), b, y)
                .expect("half orders are valid isotropy exponents"),
        );
    }
    roots
}

/// The square-free normal form of a line V-bundle class: isotropy reduced
/// to 0 at odd orders and mod 2 at even orders; the integer part reduced to
/// 0 when any order is even, else mod 2.
pub fn squarefree_class(bundle: &LineVBundle) -> LineVBundle {
    let surface = bundle.surface().clone();
    let any_even = surface.cone_orders().iter().any(|&a| a % 2 == 0);
    let y = bundle
        .isotropy()
        .iter()
        .zip(surface.cone_orders())
        .map(|(&y, &a)| if a % 2 == 0 { y % 2 } else { 0 })
        .collect();
    let b = if any_even {
        0
    } else {
        bundle.integer_part().rem_euclid(2)
    };
    LineVBundle::new(surface, b, y).expect("normalised exponents stay in range")
}
