//! V-divisors: finitely supported `ℤ`-weights on points, where a point
//! carries its cone order (`α = 1` away from the marked set).
//!
//! A divisor `D = Σ (n_p / α_p) · p` has degree `Σ n_p / α_p`, and the
//! correspondence with line V-bundles sends `D` to the class with isotropy
//! `n_{pᵢ} mod αᵢ` at the marked points and `c₁ = deg D`. The correspondence
//! turns divisor addition into tensor product.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::line::LineVBundle;
use crate::rational::{int, rat, sum, Rat};
use crate::surface::OrbifoldSurface;
use crate::Result;

/// A divisor on an orbifold surface: integer weights `n_p` on marked points
/// (indexed against the surface) and on finitely many unmarked points
/// (arbitrary labels, `α = 1`). Zero-weight entries are dropped, so equality
/// of divisors is equality of the maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divisor {
    surface: OrbifoldSurface,
    marked: BTreeMap<usize, i64>,
    unmarked: BTreeMap<String, i64>,
}

impl Divisor {
    /// Build a divisor from `(marked point index, weight)` and
    /// `(label, weight)` entries; marked indices are validated against the
    /// surface and zero weights are discarded.
    pub fn new(
        surface: OrbifoldSurface,
        marked: impl IntoIterator<Item = (usize, i64)>,
        unmarked: impl IntoIterator<Item = (String, i64)>,
    ) -> Result<Self> {
        let mut m = BTreeMap::new();
        for (index, w) in marked {
            if index >= surface.marked_points() {
                return Err(Error::PointIndexOutOfRange {
                    index,
                    count: surface.marked_points(),
                });
            }
            if w != 0 {
                *m.entry(index).or_insert(0) += w;
            }
        }
        m.retain(|_, w| *w != 0);
        let mut u = BTreeMap::new();
        for (label, w) in unmarked {
            if w != 0 {
                *u.entry(label).or_insert(0) += w;
            }
        }
        u.retain(|_, w| *w != 0);
        Ok(Divisor {
            surface,
            marked: m,
            unmarked: u,
        })
    }

    /// The zero divisor.
    pub fn zero(surface: OrbifoldSurface) -> Self {
        Divisor {
            surface,
            marked: BTreeMap::new(),
            unmarked: BTreeMap::new(),
        }
    }

    pub fn surface(&self) -> &OrbifoldSurface {
        &self.surface
    }

    /// Degree `Σ n_p / α_p` (with `α = 1` off the marked set).
    pub fn degree(&self) -> Rat {
        let marked = sum(self.marked.iter().map(|(&i, &w)| {
            rat(w, self.surface.cone_orders()[i] as i64)
        }));
        let unmarked: i64 = self.unmarked.values().sum();
        marked + int(unmarked)
    }

    /// Pointwise sum of two divisors on the same surface.
    pub fn add(&self, other: &Divisor) -> Result<Divisor> {
        if self.surface != other.surface {
            return Err(Error::SurfaceMismatch);
        }
        Divisor::new(
            self.surface.clone(),
            self.marked
                .iter()
                .chain(other.marked.iter())
                .map(|(&i, &w)| (i, w)),
            self.unmarked
                .iter()
                .chain(other.unmarked.iter())
                .map(|(l, &w)| (l.clone(), w)),
        )
    }

    /// The line V-bundle of `D`: isotropy `n_{pᵢ} mod αᵢ`, degree `deg D`.
    pub fn to_bundle(&self) -> LineVBundle {
        let mut b: i64 = self.unmarked.values().sum();
        let mut y = vec![0u32; self.surface.marked_points()];
        for (&i, &w) in &self.marked {
            let alpha = self.surface.cone_orders()[i] as i64;
            b += w.div_euclid(alpha);
            y[i] = w.rem_euclid(alpha) as u32;
        }
        LineVBundle::new(self.surface.clone(), b, y)
            .expect("reduced weights are valid isotropy exponents")
    }
}
