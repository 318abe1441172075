//! Line V-bundles over an orbifold surface and their Riemann-Roch calculus.
//!
//! A line V-bundle `L` is classified topologically by an integer part `b`
//! and isotropy exponents `0 ≤ yᵢ < αᵢ`, one per marked point, with degree
//!
//! ```text
//! c₁(L) = b + Σᵢ yᵢ/αᵢ .
//! ```
//!
//! Tensor product adds isotropy modulo `αᵢ` and carries the overflow into
//! `b`, so `c₁` is additive. The canonical bundle `K` has `b = 2g - 2`,
//! `yᵢ = αᵢ - 1`, hence `c₁(K) = -χ(M)`. The V-bundle Euler characteristic
//!
//! ```text
//! χ(L) = h⁰(L) - h¹(L) = 1 - g + c₁(L) - Σᵢ yᵢ/αᵢ = 1 - g + b
//! ```
//!
//! is always an integer even though `c₁` is fractional, and Serre duality
//! pairs `L` with `L* ⊗ K`. Forcing `h⁰` from topology alone uses two facts:
//! a bundle with `c₁ ≤ 0` has no nonzero sections unless it is trivial, and
//! `h¹(L)` vanishes when the Serre partner's class forbids sections.

use crate::error::Error;
use crate::rational::{int, rat, sum, Rat};
use crate::surface::OrbifoldSurface;
use crate::Result;

/// Topological class of a line V-bundle: integer part `b` and isotropy
/// `0 ≤ yᵢ < αᵢ` at each marked point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineVBundle {
    surface: OrbifoldSurface,
    b: i64,
    y: Vec<u32>,
}

/// What the topological class alone says about `h⁰`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForcedH0 {
    /// `h⁰` equals this value for every holomorphic structure in the class.
    Known(u64),
    /// The class is trivial: `h⁰` is 1 for the trivial structure, 0 for any
    /// other degree-zero structure.
    IndeterminateZeroOrOne,
    /// Topology does not pin `h⁰` down.
    Unknown,
}

impl LineVBundle {
    /// Build a bundle, validating `0 ≤ yᵢ < αᵢ` against the surface.
    pub fn new(surface: OrbifoldSurface, b: i64, y: Vec<u32>) -> Result<Self> {
        if y.len() != surface.marked_points() {
            return Err(Error::IsotropyVectorLength {
                expected: surface.marked_points(),
                got: y.len(),
            });
        }
        for (&yi, &alpha) in y.iter().zip(surface.cone_orders()) {
            if yi >= alpha {
                return Err(Error::IsotropyOutOfRange { y: yi, alpha });
            }
        }
        Ok(LineVBundle { surface, b, y })
    }

    /// The trivial bundle: `b = 0`, all isotropy zero.
    pub fn trivial(surface: OrbifoldSurface) -> Self {
        let y = vec![0; surface.marked_points()];
        LineVBundle { surface, b: 0, y }
    }

    /// The canonical bundle `K`: `b = 2g - 2`, `yᵢ = αᵢ - 1`, so that
    /// `c₁(K) = -χ(M)`.
    pub fn canonical(surface: OrbifoldSurface) -> Self {
        let b = 2 * surface.genus_i64() - 2;
        let y = surface.cone_orders().iter().map(|&a| a - 1).collect();
        LineVBundle { surface, b, y }
    }

    /// The point bundle at marked point `index`: `b = 0`, isotropy 1 there,
    /// 0 elsewhere; `c₁ = 1/α`.
    pub fn point_bundle(surface: OrbifoldSurface, index: usize) -> Result<Self> {
        if index >= surface.marked_points() {
            return Err(Error::PointIndexOutOfRange {
                index,
                count: surface.marked_points(),
            });
        }
        let mut y = vec![0; surface.marked_points()];
        y[index] = 1;
        Ok(LineVBundle { surface, b: 0, y })
    }

    pub fn surface(&self) -> &OrbifoldSurface {
        &self.surface
    }

    pub fn integer_part(&self) -> i64 {
        self.b
    }

    pub fn isotropy(&self) -> &[u32] {
        &self.y
    }

    /// `Σᵢ yᵢ/αᵢ`, the fractional contribution to the degree.
    pub fn isotropy_fraction(&self) -> Rat {
        sum(self
            .y
            .iter()
            .zip(self.surface.cone_orders())
            .map(|(&y, &a)| rat(y as i64, a as i64)))
    }

    /// Degree `c₁(L) = b + Σ yᵢ/αᵢ`.
    pub fn c1(&self) -> Rat {
        int(self.b) + self.isotropy_fraction()
    }

    /// Tensor product: isotropy adds mod `αᵢ`, the carry lands in `b`, and
    /// degrees add exactly.
    pub fn tensor(&self, other: &LineVBundle) -> Result<LineVBundle> {
        if self.surface != other.surface {
            return Err(Error::SurfaceMismatch);
        }
        let mut b = self.b + other.b;
        let mut y = Vec::with_capacity(self.y.len());
        for ((&y1, &y2), &alpha) in self
            .y
            .iter()
            .zip(&other.y)
            .zip(self.surface.cone_orders())
        {
            let s = y1 + y2;
            b += (s / alpha) as i64;
            y.push(s % alpha);
        }
        Ok(LineVBundle {
            surface: self.surface.clone(),
            b,
            y,
        })
    }

    /// Dual bundle: `yᵢ ↦ (-yᵢ) mod αᵢ` with `b ↦ -b - #{i : yᵢ ≠ 0}`, so
    /// that `L ⊗ L*` is trivial and `c₁(L*) = -c₁(L)`.
    pub fn dual(&self) -> LineVBundle {
        let nonzero = self.y.iter().filter(|&&y| y != 0).count() as i64;
        let y = self
            .y
            .iter()
            .zip(self.surface.cone_orders())
            .map(|(&y, &a)| if y == 0 { 0 } else { a - y })
            .collect();
        LineVBundle {
            surface: self.surface.clone(),
            b: -self.b - nonzero,
            y,
        }
    }

    /// `L^k` for any integer `k` (negative powers via the dual).
    pub fn pow(&self, k: i64) -> LineVBundle {
        let mut b = k * self.b;
        let y = self
            .y
            .iter()
            .zip(self.surface.cone_orders())
            .map(|(&y, &a)| {
                let ky = k * y as i64;
                b += ky.div_euclid(a as i64);
                ky.rem_euclid(a as i64) as u32
            })
            .collect();
        LineVBundle {
            surface: self.surface.clone(),
            b,
            y,
        }
    }

    /// Degree of the induced line bundle on the underlying smooth surface:
    /// `c₁(L) - Σ yᵢ/αᵢ`, always the integer `b`.
    pub fn smooth_degree(&self) -> i64 {
        let d = self.c1() - self.isotropy_fraction();
        debug_assert!(d.is_integer());
        d.to_integer()
    }

    /// Euler characteristic `χ(L) = 1 - g + c₁(L) - Σ yᵢ/αᵢ`, computed
    /// rationally and asserted to be an integer.
    pub fn chi(&self) -> i64 {
        let chi = int(1 - self.surface.genus_i64()) + self.c1() - self.isotropy_fraction();
        assert!(chi.is_integer(), "V-bundle Euler characteristic must be an integer");
        chi.to_integer()
    }

    /// Serre partner `L* ⊗ K`; `χ(L) + χ(L* ⊗ K) = 0`.
    pub fn serre_partner(&self) -> LineVBundle {
        self.dual()
            .tensor(&LineVBundle::canonical(self.surface.clone()))
            .expect("dual and canonical bundle share the surface")
    }

    /// What topology forces about `h⁰(L)`:
    ///
    /// * `c₁ < 0`, or `c₁ = 0` with nonzero isotropy: no sections, `Known(0)`;
    /// * the trivial class: `IndeterminateZeroOrOne`;
    /// * the Serre partner's class forbids sections: `h¹ = 0`, so
    ///   `Known(χ(L))`;
    /// * otherwise `Unknown`.
    pub fn forced_h0(&self) -> ForcedH0 {
        let zero = int(0);
        let c1 = self.c1();
        let nonzero_isotropy = self.y.iter().any(|&y| y != 0);
        if c1 < zero || (c1 == zero && nonzero_isotropy) {
            return ForcedH0::Known(0);
        }
        if c1 == zero {
            return ForcedH0::IndeterminateZeroOrOne;
        }
        let partner = self.serre_partner();
        let pc1 = partner.c1();
        let partner_nonzero = partner.y.iter().any(|&y| y != 0);
        if pc1 < zero || (pc1 == zero && partner_nonzero) {
            let chi = self.chi();
            assert!(chi >= 0, "a class with vanishing h1 has chi = h0 >= 0");
            return ForcedH0::Known(chi as u64);
        }
        ForcedH0::Unknown
    }
}
