//! Closed orbifold Riemann surfaces: genus plus marked points with cone
//! orders.
//!
//! The orbifold Euler characteristic of a genus-`g` surface with cone orders
//! `α₁,…,αₙ` is
//!
//! ```text
//! χ(M) = 2 - 2g - n + Σᵢ 1/αᵢ
//! ```
//!
//! `M` is hyperbolic exactly when `χ(M) < 0`; the moduli-level operations in
//! this crate require that.

use crate::error::Error;
use crate::rational::{int, rat, sum, Rat};
use crate::Result;

/// A closed orbifold Riemann surface: genus `g` and cone orders `αᵢ ≥ 2`
/// at `n ≥ 1` marked points. The Euler characteristic is computed once at
/// construction and stored exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbifoldSurface {
    genus: u32,
    cone_orders: Vec<u32>,
    chi: Rat,
}

impl OrbifoldSurface {
    /// Build a surface, rejecting an empty marked-point list and cone orders
    /// below 2.
    pub fn new(genus: u32, cone_orders: Vec<u32>) -> Result<Self> {
        if cone_orders.is_empty() {
            return Err(Error::EmptyConeList);
        }
        if let Some(&alpha) = cone_orders.iter().find(|&&a| a < 2) {
            return Err(Error::ConeOrderTooSmall { alpha });
        }
        let g = genus as i64;
        let n = cone_orders.len() as i64;
        let chi = int(2 - 2 * g - n) + sum(cone_orders.iter().map(|&a| rat(1, a as i64)));
        Ok(OrbifoldSurface {
            genus,
            cone_orders,
            chi,
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Genus as a signed integer, convenient in the `g - 1` arithmetic that
    /// pervades the dimension formulas.
    pub fn genus_i64(&self) -> i64 {
        self.genus as i64
    }

    pub fn cone_orders(&self) -> &[u32] {
        &self.cone_orders
    }

    /// Number of marked points `n`.
    pub fn marked_points(&self) -> usize {
        self.cone_orders.len()
    }

    /// The cone order at marked point `index` (0-based).
    pub fn cone_order(&self, index: usize) -> Result<u32> {
        self.cone_orders
            .get(index)
            .copied()
            .ok_or(Error::PointIndexOutOfRange {
                index,
                count: self.cone_orders.len(),
            })
    }

    /// Orbifold Euler characteristic `2 - 2g - n + Σ 1/αᵢ`, exact.
    pub fn euler_characteristic(&self) -> Rat {
        self.chi
    }

    /// `χ(M) < 0`.
    pub fn is_hyperbolic(&self) -> bool {
        self.chi < int(0)
    }

    /// `Σᵢ 1/αᵢ` over all marked points.
    pub fn reciprocal_sum(&self) -> Rat {
        sum(self.cone_orders.iter().map(|&a| rat(1, a as i64)))
    }

    /// Number of marked points with even cone order.
    pub fn even_order_points(&self) -> usize {
        self.cone_orders.iter().filter(|&&a| a % 2 == 0).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_characteristic_of_triangle_groups() {
        let m = OrbifoldSurface::new(0, vec![2, 3, 7]).unwrap();
        assert_eq!(m.euler_characteristic(), rat(-1, 42));
        assert!(m.is_hyperbolic());

        let m = OrbifoldSurface::new(1, vec![2]).unwrap();
        assert_eq!(m.euler_characteristic(), rat(-1, 2));
        assert!(m.is_hyperbolic());

        let m = OrbifoldSurface::new(2, vec![2]).unwrap();
        assert_eq!(m.euler_characteristic(), rat(-5, 2));
    }

    #[test]
    fn flat_example_is_not_hyperbolic() {
        let m = OrbifoldSurface::new(0, vec![2, 2, 2, 2]).unwrap();
        // chi = 2 - 4 + 4/2 = 0: the Euclidean pillowcase.
        assert_eq!(m.euler_characteristic(), int(0));
        assert!(!m.is_hyperbolic());
    }

    #[test]
    fn genus_zero_sphere_with_two_points_is_spherical() {
        let m = OrbifoldSurface::new(0, vec![2, 2]).unwrap();
        assert_eq!(m.euler_characteristic(), int(1));
        assert!(!m.is_hyperbolic());
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            OrbifoldSurface::new(0, vec![]).unwrap_err(),
            Error::EmptyConeList
        );
        assert_eq!(
            OrbifoldSurface::new(0, vec![2, 1]).unwrap_err(),
            Error::ConeOrderTooSmall { alpha: 1 }
        );
    }

    #[test]
    fn point_lookup_is_bounds_checked() {
        let m = OrbifoldSurface::new(0, vec![2, 3, 7]).unwrap();
        assert_eq!(m.cone_order(2).unwrap(), 7);
        assert!(matches!(
            m.cone_order(3),
            Err(Error::PointIndexOutOfRange { index: 3, count: 3 })
        ));
    }
}
