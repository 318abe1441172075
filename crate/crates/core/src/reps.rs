//! Fundamental-group presentations, rotation numbers, representation
//! varieties, real fixed loci and flat-bundle Euler-class bounds.
//!
//! The orbifold fundamental group is
//! `⟨a₁,b₁,…,a_g,b_g,q₁,…,qₙ | qᵢ^{αᵢ}, q₁⋯qₙ[a₁,b₁]⋯[a_g,b_g]⟩`; the
//! fundamental group of the unit circle bundle of a line V-bundle
//! `(b,(yᵢ))` adds a central generator `h` with `qᵢ^{αᵢ}h^{yᵢ} = 1` and a
//! long relation ending in `h^{-b}`. A representation sends each elliptic
//! generator to an element with a rotation number `rᵢ ∈ [0, αᵢ]` of the
//! parity of `yᵢ`; the bookkeeping around those numbers (dimension of the
//! representation variety, reducibility, sign-twist symmetry) mirrors the
//! bundle-side calculus exactly.

use crate::error::Error;
use crate::line::LineVBundle;
use crate::morse;
use crate::ranktwo::{IsotropyVector, RankTwoVBundle};
use crate::rational::{congruent_mod2, int, rat, sum, Rat};
use crate::surface::OrbifoldSurface;
use crate::Result;

/// A word in named generators: pairs (generator, exponent), zero exponents
/// omitted.
pub type Word = Vec<(String, i64)>;

/// A finite presentation: named generators and relator words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<Word>,
}

impl Presentation {
    fn new(generators: Vec<String>, relations: Vec<Word>) -> Presentation {
        let p = Presentation {
            generators,
            relations,
        };
        debug_assert!(p.is_well_formed());
        p
    }

    /// Every relator references declared generators only, with no zero
    /// exponents.
    pub fn is_well_formed(&self) -> bool {
        self.relations.iter().all(|w| {
            w.iter()
                .all(|(g, e)| *e != 0 && self.generators.iter().any(|n| n == g))
        })
    }
}

/// Rotation numbers `0 ≤ rᵢ ≤ αᵢ`, one per marked point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RotationData {
    r: Vec<u32>,
    n0: usize,
}

impl RotationData {
    /// Validate bounds `0 ≤ rᵢ ≤ αᵢ` against the surface.
    pub fn new(surface: &OrbifoldSurface, r: Vec<u32>) -> Result<Self> {
        if r.len() != surface.marked_points() {
            return Err(Error::IsotropyVectorLength {
                expected: surface.marked_points(),
                got: r.len(),
            });
        }
        for (index, (&ri, &alpha)) in r.iter().zip(surface.cone_orders()).enumerate() {
            if ri > alpha {
                return Err(Error::RotationNumberInvalid { index, r: ri });
            }
        }
        let n0 = r
            .iter()
            .zip(surface.cone_orders())
            .filter(|(&ri, &alpha)| ri == 0 || ri == alpha)
            .count();
        Ok(RotationData { r, n0 })
    }

    pub fn r(&self) -> &[u32] {
        &self.r
    }

    /// `n₀ = #{i : rᵢ ≡ 0 (mod αᵢ)}`, i.e. `rᵢ ∈ {0, αᵢ}`.
    pub fn n0(&self) -> usize {
        self.n0
    }
}

/// Fixed components of the anti-holomorphic involution on the stable-pair
/// moduli space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealComponent {
    /// The moduli of stable V-bundles (zero Higgs field).
    StableBundles { complex_dim: i64 },
    /// A rank-`rank` vector bundle over a `cover_order`-fold covering of
    /// the `base_sym_power`-th symmetric power of the surface.
    VectorBundleOverCover {
        rank: i64,
        base_sym_power: i64,
        cover_order: u64,
        complex_dim: i64,
    },
}

/// Uniqueness and cone angles of the compatible singular hyperbolic metric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConicalMetricReport {
    /// True exactly when the surface is hyperbolic.
    pub exists_unique: bool,
    /// Cone angles `2π/αᵢ`, reported in units of `π` (so `2/αᵢ`).
    pub cone_angles_over_pi: Vec<Rat>,
}

fn commutator(a: &str, b: &str) -> Word {
    vec![
        (a.to_string(), 1),
        (b.to_string(), 1),
        (a.to_string(), -1),
        (b.to_string(), -1),
    ]
}

fn handle_generators(genus: u32) -> Vec<String> {
    let mut names = Vec::new();
    for j in 1..=genus {
        names.push(format!("a{j}"));
        names.push(format!("b{j}"));
    }
    names
}

fn elliptic_generators(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("q{i}")).collect()
}

/// The long relator `q₁⋯qₙ[a₁,b₁]⋯[a_g,b_g]`, optionally followed by a
/// power of `h`.
fn long_relation(genus: u32, n: usize, h_exponent: i64) -> Word {
    let mut word: Word = (1..=n).map(|i| (format!("q{i}"), 1)).collect();
    for j in 1..=genus {
        word.extend(commutator(&format!("a{j}"), &format!("b{j}")));
    }
    if h_exponent != 0 {
        word.push(("h".to_string(), h_exponent));
    }
    word
}

/// Presentation of the orbifold fundamental group:
/// `⟨aⱼ,bⱼ,qᵢ | qᵢ^{αᵢ}, q₁⋯qₙ[a₁,b₁]⋯[a_g,b_g]⟩`.
pub fn fuchsian_presentation(surface: &OrbifoldSurface) -> Presentation {
    let g = surface.genus();
    let n = surface.marked_points();
    let mut generators = handle_generators(g);
    generators.extend(elliptic_generators(n));
    let mut relations: Vec<Word> = surface
        .cone_orders()
        .iter()
        .enumerate()
        .map(|(i, &alpha)| vec![(format!("q{}", i + 1), alpha as i64)])
        .collect();
    relations.push(long_relation(g, n, 0));
    Presentation::new(generators, relations)
}

/// Presentation of the fundamental group of the unit circle bundle of `L`:
/// the surface generators plus a central `h`, with `qᵢ^{αᵢ}h^{yᵢ} = 1` and
/// the long relation ending in `h^{-b}`. Centrality relators come first,
/// then the elliptic relators, then the long relation.
pub fn circle_group_presentation(line: &LineVBundle) -> Presentation {
    let surface = line.surface();
    let g = surface.genus();
    let n = surface.marked_points();
    let mut generators = handle_generators(g);
    generators.extend(elliptic_generators(n));
    let mut relations: Vec<Word> = generators.iter().map(|x| commutator(x, "h")).collect();
    generators.push("h".to_string());
    for (i, (&alpha, &y)) in surface
        .cone_orders()
        .iter()
        .zip(line.isotropy())
        .enumerate()
    {
        let mut word = vec![(format!("q{}", i + 1), alpha as i64)];
        if y != 0 {
            word.push(("h".to_string(), y as i64));
        }
        relations.push(word);
    }
    relations.push(long_relation(g, n, -line.integer_part()));
    Presentation::new(generators, relations)
}

/// The circle-bundle presentation with `h² = 1` appended, presenting the
/// corresponding central ℤ₂-extension of the orbifold fundamental group.
pub fn z2_extension_presentation(line: &LineVBundle) -> Presentation {
    let mut p = circle_group_presentation(line);
    p.relations.push(vec![("h".to_string(), 2)]);
    p
}

/// All rotation-number vectors compatible with the determinant bundle `Λ`:
/// `0 ≤ rᵢ ≤ αᵢ` with `rᵢ ≡ yᵢ (mod 2)`, in lexicographic order.
pub fn compatible_rotation_numbers<'a>(
    det: &'a LineVBundle,
) -> impl Iterator<Item = RotationData> + 'a {
    let surface = det.surface();
    let choices: Vec<Vec<u32>> = surface
        .cone_orders()
        .iter()
        .zip(det.isotropy())
        .map(|(&alpha, &y)| (y % 2..=alpha).step_by(2).collect())
        .collect();
    let total = compatible_rotation_count(det);
    let mut odometer: Vec<usize> = vec![0; choices.len()];
    let mut emitted: u128 = 0;
    std::iter::from_fn(move || {
        if emitted >= total {
            return None;
        }
        let r: Vec<u32> = odometer
            .iter()
            .zip(&choices)
            .map(|(&i, c)| c[i])
            .collect();
        emitted += 1;
        // Advance the odometer, last position fastest (lexicographic order).
        for pos in (0..odometer.len()).rev() {
            odometer[pos] += 1;
            if odometer[pos] < choices[pos].len() {
                break;
            }
            odometer[pos] = 0;
        }
        Some(RotationData::new(surface, r).expect("enumerated rotation numbers are in range"))
    })
}

/// Number of compatible rotation-number vectors:
/// `Π (⌊(αᵢ - (yᵢ mod 2))/2⌋ + 1)`.
pub fn compatible_rotation_count(det: &LineVBundle) -> u128 {
    det.surface()
        .cone_orders()
        .iter()
        .zip(det.isotropy())
        .map(|(&alpha, &y)| ((alpha - y % 2) / 2 + 1) as u128)
        .product()
}

/// Parity compatibility of rotation numbers with the determinant isotropy:
/// `rᵢ ≡ yᵢ (mod 2)`.
pub fn check_rotation_compatibility(det: &LineVBundle, rd: &RotationData) -> Result<()> {
    if rd.r().len() != det.isotropy().len() {
        return Err(Error::IsotropyVectorLength {
            expected: det.isotropy().len(),
            got: rd.r().len(),
        });
    }
    for (index, (&r, &y)) in rd.r().iter().zip(det.isotropy()).enumerate() {
        if r % 2 != y % 2 {
            return Err(Error::RotationNumberInvalid { index, r });
        }
    }
    Ok(())
}

/// Complex dimension `6(g-1) + 2(n-n₀)` of the representation variety at
/// the given rotation numbers, `n₀` counted from them.
pub fn rep_variety_dimension(det: &LineVBundle, rd: &RotationData) -> Result<i64> {
    check_rotation_compatibility(det, rd)?;
    let g = det.surface().genus_i64();
    let n = det.surface().marked_points() as i64;
    Ok(6 * (g - 1) + 2 * (n - rd.n0() as i64))
}

/// Whether the representation variety contains reducible points: searches
/// for a sign vector (`εᵢ = 0` exactly where `rᵢ ≡ 0 (mod αᵢ)`) with
/// `Σ εᵢrᵢ/αᵢ ≡ b (mod 2)`; returns the lexicographically first witness.
pub fn rep_reducible(det: &LineVBundle, rd: &RotationData) -> Result<Option<IsotropyVector>> {
    check_rotation_compatibility(det, rd)?;
    let surface = det.surface();
    let free: Vec<usize> = rd
        .r()
        .iter()
        .zip(surface.cone_orders())
        .enumerate()
        .filter(|(_, (&r, &alpha))| r != 0 && r != alpha)
        .map(|(i, _)| i)
        .collect();
    let k = free.len();
    if k > 24 {
        return Err(Error::EnumerationTooLarge { free: k });
    }
    let b = int(det.integer_part());
    for mask in 0u64..(1u64 << k) {
        let mut eps = vec![0i8; rd.r().len()];
        for (j, &pos) in free.iter().enumerate() {
            let bit = (mask >> (k - 1 - j)) & 1;
            eps[pos] = if bit == 1 { 1 } else { -1 };
        }
        let weighted = sum(eps.iter().zip(rd.r()).zip(surface.cone_orders()).map(
            |((&e, &r), &alpha)| rat(e as i64 * r as i64, alpha as i64),
        ));
        if congruent_mod2(weighted, b) {
            return Ok(Some(
                IsotropyVector::new(eps).expect("entries are -1, 0 or +1"),
            ));
        }
    }
    Ok(None)
}

/// Orbit of `rd` under flipping `rᵢ ↦ αᵢ - rᵢ` at an even number of
/// positions with even `αᵢ`; sorted lexicographically, duplicates removed.
pub fn sign_twist_orbit(det: &LineVBundle, rd: &RotationData) -> Result<Vec<RotationData>> {
    check_rotation_compatibility(det, rd)?;
    let surface = det.surface();
    let even_positions: Vec<usize> = surface
        .cone_orders()
        .iter()
        .enumerate()
        .filter(|(_, &alpha)| alpha % 2 == 0)
        .map(|(i, _)| i)
        .collect();
    if even_positions.len() > 24 {
        return Err(Error::EnumerationTooLarge {
            free: even_positions.len(),
        });
    }
    let mut orbit = Vec::new();
    for mask in 0u64..(1u64 << even_positions.len()) {
        if mask.count_ones() % 2 != 0 {
            continue;
        }
        let mut r = rd.r().to_vec();
        for (j, &pos) in even_positions.iter().enumerate() {
            if (mask >> j) & 1 == 1 {
                r[pos] = surface.cone_orders()[pos] - r[pos];
            }
        }
        let twisted = RotationData::new(surface, r).expect("flips stay within [0, alpha]");
        debug_assert_eq!(twisted.n0(), rd.n0());
        debug_assert!(check_rotation_compatibility(det, &twisted).is_ok());
        orbit.push(twisted);
    }
    orbit.sort();
    orbit.dedup();
    Ok(orbit)
}

/// Fixed components of the real (anti-holomorphic) involution: the stable
/// V-bundle moduli plus, for each critical-stratum datum `(m, ε)`, a rank
/// `2m - l + g - 1 + n₊` vector bundle over a `2^{2g}`-fold covering of the
/// `r`-th symmetric power. Shares the stratification's preconditions.
pub fn real_fixed_components(bundle: &RankTwoVBundle) -> Result<Vec<RealComponent>> {
    let complex_dim = 3 * bundle.surface().genus_i64() - 3 + bundle.free_points() as i64;
    let mut components = vec![RealComponent::StableBundles { complex_dim }];
    for stratum in morse::enumerate_strata(bundle)? {
        let rank = stratum.index / 2;
        debug_assert_eq!(rank + stratum.r, complex_dim);
        components.push(RealComponent::VectorBundleOverCover {
            rank,
            base_sym_power: stratum.r,
            cover_order: stratum.cover_order,
            complex_dim,
        });
    }
    Ok(components)
}

/// The component of flat `PSL₂(ℝ)` V-bundles with Euler class
/// `e = b + Σ yᵢ/αᵢ > 0`: a rank `g - 1 + b + (n - n₀)` vector bundle over
/// the `(2g - 2 - b)`-th symmetric power of the surface (`n₀` counts zero
/// isotropy exponents). Requires `b ≤ 2g - 2`.
pub fn psl2r_component(
    surface: &OrbifoldSurface,
    b: i64,
    y: &[u32],
) -> Result<RealComponent> {
    let line = LineVBundle::new(surface.clone(), b, y.to_vec())?;
    if line.c1() <= int(0) {
        return Err(Error::EulerClassNotPositive);
    }
    let g = surface.genus_i64();
    if b > 2 * g - 2 {
        return Err(Error::EulerIntegerPartTooLarge { b, max: 2 * g - 2 });
    }
    let n = surface.marked_points() as i64;
    let n0 = y.iter().filter(|&&yi| yi == 0).count() as i64;
    let rank = g - 1 + b + (n - n0);
    let base_sym_power = 2 * g - 2 - b;
    let complex_dim = 3 * g - 3 + (n - n0);
    debug_assert_eq!(rank + base_sym_power, complex_dim);
    Ok(RealComponent::VectorBundleOverCover {
        rank,
        base_sym_power,
        cover_order: 1,
        complex_dim,
    })
}

/// The flat-bundle Euler-class bound: `|e| ≤ -χ(M)`.
pub fn milnor_wood(surface: &OrbifoldSurface, euler_class: Rat) -> bool {
    let bound = -surface.euler_characteristic();
    let magnitude = if euler_class < int(0) {
        -euler_class
    } else {
        euler_class
    };
    magnitude <= bound
}

/// Complex dimension `3g - 3 + n` of the Teichmüller space of the
/// (hyperbolic) orbifold.
pub fn teichmuller_dimension(surface: &OrbifoldSurface) -> Result<i64> {
    if !surface.is_hyperbolic() {
        return Err(Error::NotHyperbolic);
    }
    Ok(3 * surface.genus_i64() - 3 + surface.marked_points() as i64)
}

/// Existence/uniqueness of the compatible metric of curvature -1 with
/// conical singularities, and its cone angles in units of π.
pub fn conical_metric_report(surface: &OrbifoldSurface) -> ConicalMetricReport {
    ConicalMetricReport {
        exists_unique: surface.is_hyperbolic(),
        cone_angles_over_pi: surface
            .cone_orders()
            .iter()
            .map(|&alpha| rat(2, alpha as i64))
            .collect(),
    }
}
