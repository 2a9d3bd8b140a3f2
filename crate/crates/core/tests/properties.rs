mod common;

use common::*;
use parahoric_core::apartment::{self, AffineWeylElement, ApartmentPoint};
use parahoric_core::dimension::{self, ModuliSpec};
use parahoric_core::localtype;
use parahoric_core::parabolic::{self, ParabolicLine};
use parahoric_core::parahoric;
use parahoric_core::{RootSystem, Q};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_systems() -> Vec<RootSystem> {
    [
        "A1", "A2", "A3", "B2", "C2", "G2", "B3", "C3", "F4", "D4", "A1xA1", "A1xG2",
    ]
    .iter()
    .map(|s| RootSystem::parse(s).unwrap())
    .collect()
}

fn pick(seed: u64) -> (RootSystem, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let systems = small_systems();
    let rs = systems[rng.gen_range(0..systems.len())].clone();
    (rs, rng)
}

#[test]
fn flag_dimension_is_antitone() {
    for (k, n) in simple_types(5) {
        let rs = RootSystem::new(&[(k, n)]).unwrap();
        // every subset, as a bitmask, against every superset
        for i in 0u32..(1 << n) {
            for j in 0u32..(1 << n) {
                if i & j == i {
                    let bits = |m: u32| (0..n).filter(|b| m >> b & 1 == 1).collect::<Vec<_>>();
                    assert!(
                        rs.flag_dimension(&bits(i)).unwrap()
                            >= rs.flag_dimension(&bits(j)).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn products_add_up() {
    let parts = ["A2", "G2", "C3"];
    let whole = RootSystem::parse(&parts.join("x")).unwrap();
    let systems: Vec<_> = parts
        .iter()
        .map(|p| RootSystem::parse(p).unwrap())
        .collect();
    assert_eq!(
        whole.roots().len(),
        systems.iter().map(|s| s.roots().len()).sum::<usize>()
    );
    let marks: Vec<i64> = systems.iter().flat_map(|s| s.marks().to_vec()).collect();
    assert_eq!(whole.marks(), marks.as_slice());
}

#[test]
fn waff_soundness_on_1000_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let systems = small_systems();
    for _ in 0..1000 {
        let rs = &systems[rng.gen_range(0..systems.len())];
        let p = random_point(rs, &mut rng, 4, 9);
        let red = apartment::reduce_to_alcove(rs, &p).unwrap();
        assert!(apartment::is_in_closed_alcove(rs, &red.point).unwrap());
        assert_eq!(red.element.apply(rs, &p).unwrap(), red.point);
        assert_eq!(red.element.inverse(rs).apply(rs, &red.point).unwrap(), p);
    }
}

#[test]
fn vertices_and_barycenter_facets() {
    for (k, n) in simple_types(8) {
        let rs = RootSystem::new(&[(k, n)]).unwrap();
        let verts = apartment::alcove_vertices(&rs);
        for v in &verts {
            assert_eq!(apartment::facet_of(&rs, v).unwrap().dimension, 0);
        }
        let bary = apartment::facet_interior_point(&rs, &verts).unwrap();
        assert_eq!(
            apartment::facet_of(&rs, &bary).unwrap().dimension,
            rs.rank()
        );
    }
}

#[test]
fn hyperspecial_iff_zero_e_and_mu_equals_flag() {
    for (k, n) in simple_types(8) {
        let rs = RootSystem::new(&[(k, n)]).unwrap();
        for a in 0..rs.rank() {
            let e = dimension::e_vertex(&rs, a).unwrap().value();
            let hs = rs.marks()[a] == 1;
            let mu_is_flag = dimension::mu(&rs, a).unwrap()
                == dimension::maximal_flag_dimension(&rs, a).unwrap();
            assert_eq!(e == 0, hs, "{k}{n} α{}", a + 1);
            assert_eq!(mu_is_flag, hs);
            // ν(α) = dim P_α / B = #{r ∈ R⁺ supported on S \ {α}}
            let others: Vec<usize> = (0..rs.rank()).filter(|&i| i != a).collect();
            let supported = rs.num_positive() - rs.flag_dimension(&others).unwrap();
            assert_eq!(dimension::nu(&rs, a).unwrap(), supported);
        }
    }
}

#[test]
fn set_exponents_match_barycenter() {
    for rs in small_systems() {
        let verts = apartment::alcove_vertices(&rs);
        let n = verts.len();
        for mask in 1u32..(1 << n) {
            let omega: Vec<ApartmentPoint> = (0..n)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| verts[b].clone())
                .collect();
            let bary = apartment::facet_interior_point(&rs, &omega).unwrap();
            assert_eq!(
                parahoric::descriptor(&rs, &bary).unwrap().exponents,
                parahoric::bounds_exponents(&rs, &omega).unwrap(),
                "{} {:?}",
                rs.name(),
                omega
            );
        }
    }
}

#[test]
fn local_type_round_trip_small_orders() {
    for name in ["A1", "A2", "B2", "G2", "A1xA1"] {
        let rs = RootSystem::parse(name).unwrap();
        for d in 1..=12u64 {
            let di = d as i64;
            let transversal: Vec<Vec<i64>> = if rs.rank() == 1 {
                (0..di).map(|a| vec![a]).collect()
            } else {
                (0..di)
                    .flat_map(|a| (0..di).map(move |b| vec![a, b]))
                    .collect()
            };
            for delta in transversal {
                let red = localtype::weight_of_local_rep(&rs, d, &delta).unwrap();
                let back = localtype::local_rep_of_weight(&rs, &red.point).unwrap();
                assert_eq!(d % back.d, 0);
                let again = localtype::weight_of_local_rep(&rs, back.d, &back.delta).unwrap();
                assert_eq!(again.point, red.point);
                // shifting Δ by d·Y(T) does not move the weight
                let shifted: Vec<i64> = delta
                    .iter()
                    .enumerate()
                    .map(|(i, x)| x + di * (i as i64 + 2))
                    .collect();
                let red2 = localtype::weight_of_local_rep(&rs, d, &shifted).unwrap();
                assert_eq!(red2.point, red.point);
                let lt = localtype::LocalType::new(&rs, d, delta.clone()).unwrap();
                let lt2 = localtype::LocalType::new(&rs, d, shifted).unwrap();
                assert_eq!(lt, lt2);
                for r in rs.root_ids() {
                    assert_eq!(
                        localtype::root_group_action(&rs, &lt, r).unwrap(),
                        localtype::root_group_action(&rs, &lt2, r).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn fixed_roots_are_the_integral_ones() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for rs in small_systems() {
        let mut points = apartment::alcove_vertices(&rs);
        points.extend((0..20).map(|_| random_alcove_point(&rs, &mut rng, 6)));
        for p in points {
            let lt = localtype::local_rep_of_weight(&rs, &p).unwrap();
            let fixed: Vec<_> = rs
                .root_ids()
                .filter(|&r| localtype::root_group_action(&rs, &lt, r).unwrap() == 0)
                .collect();
            assert_eq!(fixed, parahoric::centralizer_roots(&rs, &p).unwrap());
            // off the affine walls the centralizer is the Levi
            let on_affine_wall = (0..rs.factors().len()).any(|f| {
                let (h, _) = rs.highest_root(f).unwrap();
                rs.pairing(p.coords(), h).unwrap() == Q::from(1)
            });
            if !on_affine_wall {
                assert_eq!(fixed, parahoric::levi_roots(&rs, &p).unwrap());
            }
            assert_eq!(
                dimension::e_theta(&rs, &p).unwrap(),
                rs.roots().len() - fixed.len()
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduction_is_a_retraction(seed in any::<u64>()) {
        let (rs, mut rng) = pick(seed);
        let p = random_point(&rs, &mut rng, 3, 7);
        let red = apartment::reduce_to_alcove(&rs, &p).unwrap();
        let again = apartment::reduce_to_alcove(&rs, &red.point).unwrap();
        prop_assert_eq!(&again.point, &red.point);
        prop_assert!(again.element.is_identity());
    }

    #[test]
    fn reduction_is_orbit_invariant(seed in any::<u64>()) {
        let (rs, mut rng) = pick(seed);
        let p = random_point(&rs, &mut rng, 3, 7);
        let len = rng.gen_range(0..8);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..rs.rank())).collect();
        let t: Vec<i64> = (0..rs.rank()).map(|_| rng.gen_range(-3..=3)).collect();
        let g = AffineWeylElement { word, translation: vec![0; rs.rank()] }.compose(
            &rs,
            &AffineWeylElement::translation_by_coroot(&rs, &t).unwrap(),
        );
        let moved = g.apply(&rs, &p).unwrap();
        prop_assert_eq!(
            apartment::reduce_to_alcove(&rs, &moved).unwrap().point,
            apartment::reduce_to_alcove(&rs, &p).unwrap().point
        );
        prop_assert_eq!(dimension::e_theta(&rs, &moved).unwrap(), dimension::e_theta(&rs, &p).unwrap());
    }

    #[test]
    fn alcove_exponents_are_bounded(seed in any::<u64>()) {
        let (rs, mut rng) = pick(seed);
        let p = random_alcove_point(&rs, &mut rng, 8);
        let d = parahoric::descriptor(&rs, &p).unwrap();
        let iw = parahoric::iwahori(&rs).unwrap();
        prop_assert!(parahoric::contains(&d, &iw).unwrap());
        for r in rs.root_ids() {
            let m = d.exponents.get(r);
            prop_assert!((-1..=1).contains(&m));
            let s = m + d.exponents.get(rs.negate(r));
            let integral = rs.pairing(p.coords(), r).unwrap().is_integer();
            prop_assert_eq!(s, if integral { 0 } else { 1 });
        }
        prop_assert_eq!(dimension::e_theta(&rs, &p).unwrap() % 2, 0);
    }

    #[test]
    fn containment_is_a_partial_order(seed in any::<u64>()) {
        let (rs, mut rng) = pick(seed);
        let ds: Vec<_> = (0..3)
            .map(|_| parahoric::descriptor(&rs, &random_alcove_point(&rs, &mut rng, 3)).unwrap())
            .collect();
        let c = |a: usize, b: usize| parahoric::contains(&ds[a], &ds[b]).unwrap();
        prop_assert!(c(0, 0));
        if c(0, 1) && c(1, 0) {
            prop_assert_eq!(&ds[0].exponents, &ds[1].exponents);
        }
        if c(0, 1) && c(1, 2) {
            prop_assert!(c(0, 2));
        }
    }

    #[test]
    fn dimension_bookkeeping(seed in any::<u64>(), genus in 0u32..6, m in 0usize..5) {
        let (rs, mut rng) = pick(seed);
        let weights: Vec<_> = (0..m).map(|_| random_point(&rs, &mut rng, 2, 6)).collect();
        let spec = ModuliSpec::new(&rs, genus, weights).unwrap();
        let report = spec.report(false).unwrap();
        prop_assert_eq!(report.residue, 0);
        prop_assert!(report.e.iter().all(|e| e % 2 == 0));
        prop_assert_eq!(spec.rep_space_dim() - rs.dim_g() as i64, 2 * spec.moduli_dim().unwrap());
    }

    #[test]
    fn pardeg_is_additive(a in -5i64..5, b in -5i64..5, wa in prop::collection::vec((0i128..=12, 1i128..=12), 0..4), wb in prop::collection::vec((0i128..=12, 1i128..=12), 0..4)) {
        let clamp = |v: &[(i128, i128)]| v.iter().map(|&(p, q)| Q::new(p.min(q), q)).collect::<Vec<_>>();
        let (x, y) = (clamp(&wa), clamp(&wb));
        let la = ParabolicLine::new(a, x.clone()).unwrap();
        let lb = ParabolicLine::new(b, y.clone()).unwrap();
        let lab = ParabolicLine::new(a + b, x.into_iter().chain(y).collect()).unwrap();
        prop_assert_eq!(lab.pardeg(), la.pardeg() + lb.pardeg());
    }

    #[test]
    fn cover_weights_half_open(deg in -4i64..4, ex in prop::collection::vec((1i64..10).prop_flat_map(|n| (-(n - 1)..n, Just(n))), 0..5)) {
        let w = parabolic::invariant_weights(&ex).unwrap();
        prop_assert!(w.iter().all(|q| *q >= Q::from(0) && *q < Q::from(1)));
        prop_assert_eq!(
            ParabolicLine::new(deg, w).unwrap().pardeg(),
            parabolic::pardeg_from_cover(deg, &ex).unwrap()
        );
    }
}
