//! Property tests for the algebraic laws the library promises: exactness
//! of the rational bookkeeping, duality, tensor arithmetic, reduction and
//! normal-form behaviour, stratification identities and the agreement of
//! the two reducibility criteria.

use std::collections::BTreeMap;

use proptest::prelude::*;

use orbimod_core::divisor::Divisor;
use orbimod_core::line::{ForcedH0, LineVBundle};
use orbimod_core::morse;
use orbimod_core::ranktwo::{
    bounds_attainable_surface, squarefree_class, topological_roots, RankTwoVBundle,
    SubBundleSpec,
};
use orbimod_core::rational::int;
use orbimod_core::reps::{self, RotationData};
use orbimod_core::spectral;
use orbimod_core::surface::OrbifoldSurface;

/// Strategy: an arbitrary small orbifold surface.
fn surfaces() -> impl Strategy<Value = OrbifoldSurface> {
    (0u32..=4, prop::collection::vec(2u32..=9, 1..=6))
        .prop_map(|(g, alphas)| OrbifoldSurface::new(g, alphas).unwrap())
}

/// Strategy: a surface together with a line V-bundle on it.
fn line_bundles() -> impl Strategy<Value = LineVBundle> {
    surfaces().prop_flat_map(|m| {
        let n = m.marked_points();
        (
            -12i64..=12,
            prop::collection::vec(0u32..=1000, n..=n),
            Just(m),
        )
            .prop_map(|(b, raw, m)| {
                let y: Vec<u32> = raw
                    .iter()
                    .zip(m.cone_orders())
                    .map(|(&r, &a)| r % a)
                    .collect();
                LineVBundle::new(m, b, y).unwrap()
            })
    })
}

/// Strategy: a line bundle small enough that the full list of compatible
/// rotation vectors stays tiny (at most `4^3` entries).
fn small_line_bundles() -> impl Strategy<Value = LineVBundle> {
    (0u32..=2, prop::collection::vec(2u32..=6, 1..=3)).prop_flat_map(|(g, alphas)| {
        let m = OrbifoldSurface::new(g, alphas).unwrap();
        let n = m.marked_points();
        (
            -5i64..=5,
            prop::collection::vec(0u32..=1000, n..=n),
            Just(m),
        )
            .prop_map(|(b, raw, m)| {
                let y: Vec<u32> = raw
                    .iter()
                    .zip(m.cone_orders())
                    .map(|(&r, &a)| r % a)
                    .collect();
                LineVBundle::new(m, b, y).unwrap()
            })
    })
}

/// Strategy: two line bundles over the same surface.
fn line_bundle_pairs() -> impl Strategy<Value = (LineVBundle, LineVBundle)> {
    surfaces().prop_flat_map(|m| {
        let n = m.marked_points();
        (
            -12i64..=12,
            prop::collection::vec(0u32..=1000, n..=n),
            -12i64..=12,
            prop::collection::vec(0u32..=1000, n..=n),
            Just(m),
        )
            .prop_map(|(b1, raw1, b2, raw2, m)| {
                let reduce = |raw: &[u32]| -> Vec<u32> {
                    raw.iter()
                        .zip(m.cone_orders())
                        .map(|(&r, &a)| r % a)
                        .collect()
                };
                let y1 = reduce(&raw1);
                let y2 = reduce(&raw2);
                let l1 = LineVBundle::new(m.clone(), b1, y1).unwrap();
                let l2 = LineVBundle::new(m, b2, y2).unwrap();
                (l1, l2)
            })
    })
}

/// Strategy: a rank-2 bundle with arbitrary isotropy pairs.
fn rank_two_bundles() -> impl Strategy<Value = RankTwoVBundle> {
    surfaces().prop_flat_map(|m| {
        let n = m.marked_points();
        (
            -6i64..=6,
            prop::collection::vec((0u32..=1000, 0u32..=1000), n..=n),
            Just(m),
        )
            .prop_map(|(l, raw, m)| {
                let pairs: Vec<(u32, u32)> = raw
                    .iter()
                    .zip(m.cone_orders())
                    .map(|(&(a, b), &alpha)| {
                        let x = a % alpha;
                        let xp = b % alpha;
                        (x.min(xp), x.max(xp))
                    })
                    .collect();
                RankTwoVBundle::new(m, pairs, l).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn chi_is_one_minus_genus_plus_integer_part(l in line_bundles()) {
        // The rational Riemann-Roch expression collapses to 1 - g + b.
        prop_assert_eq!(l.chi(), 1 - l.surface().genus_i64() + l.integer_part());
    }

    #[test]
    fn serre_duality_on_chi(l in line_bundles()) {
        prop_assert_eq!(l.chi() + l.serre_partner().chi(), 0);
    }

    #[test]
    fn tensor_adds_degrees((a, b) in line_bundle_pairs()) {
        let t = a.tensor(&b).unwrap();
        prop_assert_eq!(t.c1(), a.c1() + b.c1());
        // Commutativity of the isotropy carry arithmetic.
        prop_assert_eq!(&t, &b.tensor(&a).unwrap());
    }

    #[test]
    fn dual_is_an_involution_and_inverts(l in line_bundles()) {
        prop_assert_eq!(&l.dual().dual(), &l);
        prop_assert_eq!(l.dual().c1(), -l.c1());
        let product = l.tensor(&l.dual()).unwrap();
        prop_assert_eq!(&product, &LineVBundle::trivial(l.surface().clone()));
    }

    #[test]
    fn powers_match_repeated_tensor(l in line_bundles(), k in -4i64..=4) {
        let mut expected = LineVBundle::trivial(l.surface().clone());
        let factor = if k < 0 { l.dual() } else { l.clone() };
        for _ in 0..k.unsigned_abs() {
            expected = expected.tensor(&factor).unwrap();
        }
        prop_assert_eq!(&l.pow(k), &expected);
        prop_assert_eq!(l.pow(k).c1(), int(k) * l.c1());
    }

    #[test]
    fn forced_section_counts_are_consistent(l in line_bundles()) {
        match l.forced_h0() {
            ForcedH0::Known(h) => {
                if h > 0 {
                    prop_assert_eq!(h as i64, l.chi());
                } else {
                    prop_assert!(l.c1() <= int(0));
                }
            }
            ForcedH0::IndeterminateZeroOrOne => {
                prop_assert_eq!(&l, &LineVBundle::trivial(l.surface().clone()));
            }
            ForcedH0::Unknown => {}
        }
    }

    #[test]
    fn divisor_degree_is_additive_and_matches_bundles(
        (a, b) in line_bundle_pairs(),
    ) {
        // Encode each bundle as a divisor: isotropy weights on the marked
        // points, the integer part on an unmarked point.
        let to_divisor = |l: &LineVBundle| {
            let marked: Vec<(usize, i64)> = l
                .isotropy()
                .iter()
                .enumerate()
                .map(|(i, &y)| (i, y as i64))
                .collect();
            Divisor::new(
                l.surface().clone(),
                marked,
                vec![("p".to_string(), l.integer_part())],
            )
            .unwrap()
        };
        let da = to_divisor(&a);
        let db = to_divisor(&b);
        prop_assert_eq!(da.degree(), a.c1());
        let sum = da.add(&db).unwrap();
        prop_assert_eq!(sum.degree(), a.c1() + b.c1());
        prop_assert_eq!(&sum.to_bundle(), &a.tensor(&b).unwrap());
    }

    #[test]
    fn squarefree_normal_form_is_idempotent(l in line_bundles()) {
        let n = squarefree_class(&l);
        prop_assert_eq!(&squarefree_class(&n), &n);
        // Isotropy is 0/1 and the integer part is 0 or 1.
        prop_assert!(n.isotropy().iter().all(|&y| y <= 1));
        prop_assert!(n.integer_part() == 0 || n.integer_part() == 1);
    }

    #[test]
    fn squarefree_ignores_squares_when_an_even_order_exists(
        (a, b) in line_bundle_pairs(),
    ) {
        // Multiplying by a square never changes the normal form, except in
        // the all-odd case where the integer part can absorb a carry.
        prop_assume!(a.surface().cone_orders().iter().any(|&x| x % 2 == 0));
        let twisted = a.tensor(&b.pow(2)).unwrap();
        prop_assert_eq!(&squarefree_class(&twisted), &squarefree_class(&a));
    }

    #[test]
    fn roots_square_to_the_trivial_class(m in surfaces()) {
        let roots = topological_roots(&m);
        let n2 = m.even_order_points();
        prop_assert_eq!(roots.len(), 1usize << n2.saturating_sub(1));
        let trivial = LineVBundle::trivial(m);
        for r in &roots {
            prop_assert_eq!(r.c1(), int(0));
            prop_assert_eq!(&r.tensor(r).unwrap(), &trivial);
        }
    }

    #[test]
    fn subset_bound_is_monotone_in_subset_size(m in surfaces(), k in 1usize..=6) {
        prop_assume!(m.marked_points() >= 2);
        let k = k.min(m.marked_points() - 1);
        if bounds_attainable_surface(&m, k + 1).unwrap() {
            prop_assert!(bounds_attainable_surface(&m, k).unwrap());
        }
    }

    #[test]
    fn chi_twists_sum_is_constant(e in rank_two_bundles(), m in -5i64..=5) {
        let g = e.surface().genus_i64();
        let k = e.free_points() as i64;
        for eps in e.sign_vectors().unwrap() {
            let spec = SubBundleSpec { m, eps };
            let (down, up) = e.chi_twists(&spec).unwrap();
            prop_assert_eq!(down + up, 2 * g - 2 + k);
        }
    }

    #[test]
    fn reduction_witness_halves_the_determinant(e in rank_two_bundles()) {
        if let Some(w) = e.reduction_witness().unwrap() {
            let sub = e.sub_bundle(&w).unwrap();
            prop_assert_eq!(int(2) * sub.c1(), e.c1_det());
        }
    }

    #[test]
    fn reduce_preserves_the_invariants(e in rank_two_bundles()) {
        prop_assume!(e.free_points() > 0);
        let reduced = e.reduce().unwrap();
        prop_assert_eq!(reduced.bundle.n0(), 0);
        prop_assert_eq!(reduced.bundle.det_integer_part(), e.det_integer_part());
        prop_assert_eq!(reduced.bundle.free_points(), e.free_points());
        prop_assert_eq!(reduced.bundle.moduli_dimension(), e.moduli_dimension());
        prop_assert_eq!(
            spectral::hitchin_base_dim(&reduced.bundle),
            spectral::hitchin_base_dim(&e)
        );
        prop_assert_eq!(reduced.dropped.len(), e.n0());
    }

    #[test]
    fn strata_satisfy_the_dimension_identity(e in rank_two_bundles()) {
        let g = e.surface().genus_i64();
        let k = e.free_points() as i64;
        match morse::enumerate_strata(&e) {
            Ok(strata) => {
                let mut index_zero = 0usize;
                for s in &strata {
                    prop_assert_eq!(2 * s.r + s.index, 6 * g - 6 + 2 * k);
                    prop_assert!(s.index >= 0 && s.index % 2 == 0);
                    prop_assert!(s.value_over_2pi > int(0));
                    if s.index == 0 {
                        index_zero += 1;
                    }
                }
                prop_assert!(index_zero <= 1);
                // Sorted ascending by (value, index).
                for w in strata.windows(2) {
                    prop_assert!(
                        (w[0].value_over_2pi, w[0].index)
                            <= (w[1].value_over_2pi, w[1].index)
                    );
                }
                // The reported minimum agrees with the index-zero count.
                match morse::minimum_stratum(&e).unwrap() {
                    morse::MinimumStratum::ProjectiveStratum(s) => {
                        prop_assert_eq!(index_zero, 1);
                        prop_assert_eq!(s.index, 0);
                    }
                    morse::MinimumStratum::StableBundlesModuli { complex_dim } => {
                        prop_assert_eq!(index_zero, 0);
                        prop_assert_eq!(complex_dim, 3 * g - 3 + k);
                    }
                }
            }
            Err(_) => {
                // Precondition failures (non-hyperbolic, reducible, too few
                // points) are legitimate outcomes for arbitrary inputs.
            }
        }
    }

    #[test]
    fn poincare_value_at_one_matches_euler_number_at_genus_zero(
        e in rank_two_bundles(),
    ) {
        prop_assume!(e.surface().genus() == 0);
        if let Ok(p) = morse::poincare_polynomial(&e, None, &BTreeMap::new()) {
            let chi = morse::euler_characteristic_moduli(&e, None).unwrap();
            // At genus zero every stratum contribution is numeric, so the
            // polynomial is symbolic exactly when the minimum is the stable
            // moduli (whose Euler number is likewise undetermined).
            match p.value_at_one() {
                Some(v) => prop_assert_eq!(Some(v), chi),
                None => prop_assert_eq!(chi, None),
            }
        }
    }

    #[test]
    fn real_components_obey_the_dimension_law(e in rank_two_bundles()) {
        if let Ok(components) = reps::real_fixed_components(&e) {
            let expected = 3 * e.surface().genus_i64() - 3 + e.free_points() as i64;
            for c in components {
                match c {
                    reps::RealComponent::StableBundles { complex_dim } => {
                        prop_assert_eq!(complex_dim, expected)
                    }
                    reps::RealComponent::VectorBundleOverCover {
                        rank,
                        base_sym_power,
                        complex_dim,
                        ..
                    } => {
                        prop_assert_eq!(rank + base_sym_power, expected);
                        prop_assert_eq!(complex_dim, expected);
                    }
                }
            }
        }
    }

    #[test]
    fn paired_reducibility_criteria_agree(e in rank_two_bundles()) {
        let m = e.surface().clone();
        let deltas: Vec<u32> = e.pairs().iter().map(|&(x, xp)| xp - x).collect();
        let det_pair =
            LineVBundle::new(m.clone(), e.det_integer_part(), deltas.clone()).unwrap();
        let rd = RotationData::new(&m, deltas).unwrap();
        let bundle_side = e.reduction_witness().unwrap().is_some();
        let rep_side = reps::rep_reducible(&det_pair, &rd).unwrap().is_some();
        prop_assert_eq!(bundle_side, rep_side);
    }

    #[test]
    fn rotation_enumeration_matches_count_and_parity(l in small_line_bundles()) {
        let count = reps::compatible_rotation_count(&l);
        let all: Vec<RotationData> = reps::compatible_rotation_numbers(&l).collect();
        prop_assert_eq!(all.len() as u128, count);
        for rd in &all {
            prop_assert!(reps::check_rotation_compatibility(&l, rd).is_ok());
        }
        // Lexicographic enumeration without repeats.
        for w in all.windows(2) {
            prop_assert!(w[0].r() < w[1].r());
        }
    }

    #[test]
    fn sign_twists_preserve_compatibility_and_n0(l in line_bundles()) {
        // Start from the smallest compatible rotation vector (parity of y).
        let first: Vec<u32> = l.isotropy().iter().map(|&y| y % 2).collect();
        let rd = RotationData::new(l.surface(), first).unwrap();
        let orbit = reps::sign_twist_orbit(&l, &rd).unwrap();
        prop_assert!(orbit.contains(&rd));
        for o in &orbit {
            prop_assert_eq!(o.n0(), rd.n0());
            prop_assert!(reps::check_rotation_compatibility(&l, o).is_ok());
        }
    }

    #[test]
    fn milnor_wood_saturates_exactly_at_the_canonical_class(m in surfaces()) {
        prop_assume!(m.is_hyperbolic());
        let k = LineVBundle::canonical(m.clone());
        prop_assert_eq!(k.c1(), -m.euler_characteristic());
        prop_assert!(reps::milnor_wood(&m, k.c1()));
        prop_assert!(!reps::milnor_wood(&m, k.c1() + int(1)));
        prop_assert!(reps::milnor_wood(&m, -k.c1()));
    }

    #[test]
    fn spectral_dimensions_are_consistent(e in rank_two_bundles()) {
        let g = e.surface().genus_i64();
        let k = e.free_points() as i64;
        let special = (g == 0 && k == 3) || (g == 1 && k == 1);
        prop_assume!(!special && !(g == 0 && k < 3));
        let d = spectral::spectral_data(&e);
        let branch = d.branch_points.unwrap();
        let genus_hat = d.spectral_genus.unwrap();
        prop_assert_eq!(2 * genus_hat - 2, 2 * (2 * g - 2) + branch);
        prop_assert_eq!(d.fibre, spectral::Fibre::Prym { dim: d.base_dim });
        prop_assert_eq!(2 * d.base_dim, e.moduli_dimension());
    }
}
