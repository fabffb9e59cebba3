//! The acceptance gate. One test per criterion, one PASS line each, every
//! comparison exact; randomized parts run on fixed seeds.

mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;

use monozeta::cizeta::{
    euler_ci_generic_fiber, facets_outside_dual, zeta_ci_at_infinity, zeta_ci_fiber, FiberMode,
    PolyMap,
};
use monozeta::exactlat::{minkowski_sum, mixed_volume, normalized_volume, volume_as_dim};
use monozeta::newton::{
    check_condition_star, convenience_profile, gamma_infinity, nonempty_subsets, relevant_subsets,
};
use monozeta::polyio::parse_polynomial;
use monozeta::zetacore::{
    bkk_euler, correction_factor, euler_generic_fiber, jumping_number_2d, jumping_number_nd,
    lefschetz_numbers, varchenko_local_zeta, zeta_at_infinity, zeta_central_fiber_smooth,
    zeta_degree, zeta_fiber_nondegenerate, zeta_finite_part_smooth, Route,
};

fn pass(criterion: usize, what: &str) {
    println!("acceptance criterion {criterion}: PASS - {what}");
}

#[test]
fn criterion_1_nonconvenient_plane_curve_suite() {
    let f = parse_polynomial("x - x^2*y", &common::var_names(2)).unwrap();

    assert!(zeta_at_infinity(&f).unwrap().is_one());
    assert_eq!(correction_factor(&f).unwrap(), common::zeta(&[(1, -1)]));
    assert_eq!(zeta_finite_part_smooth(&f).unwrap(), common::zeta(&[(1, 1)]));
    assert!(zeta_central_fiber_smooth(&f, Route::A).unwrap().is_one());
    assert!(zeta_central_fiber_smooth(&f, Route::B).unwrap().is_one());
    assert!(zeta_fiber_nondegenerate(&f, &BigRational::one()).unwrap().is_one());
    assert_eq!(jumping_number_2d(&f, &[]).unwrap(), BigInt::from(1));
    assert_eq!(jumping_number_nd(&f, &[]).unwrap(), BigInt::from(1));

    pass(
        1,
        "x - x^2*y: zeta 1 at infinity, correction (1-t)^-1, finite part (1-t), \
         central fiber 1 on both routes, fiber over 1 trivial, jumping number 1 both ways",
    );
}

#[test]
fn criterion_2_broken_torus_line_suite() {
    let f = parse_polynomial("x*(x^2*y^2 - 1)", &common::var_names(2)).unwrap();
    let z = zeta_at_infinity(&f).unwrap();
    assert_eq!(z, common::zeta(&[(1, -1)]));
    assert_eq!(lefschetz_numbers(&z, 20), vec![BigInt::from(-1); 20]);
    pass(2, "x*(x^2*y^2 - 1): zeta (1-t)^-1 at infinity, twenty Lefschetz numbers all -1");
}

#[test]
fn criterion_3_degree_identities_on_random_polynomials() {
    let mut r = common::rng(0xacce01);
    let mut checked = 0u32;
    let mut attempts = 0u32;
    while checked < 50 {
        attempts += 1;
        assert!(attempts < 20_000, "polynomial generator starved");
        let n = r.gen_range(1..=3);
        let force = r.gen_bool(0.5);
        let constant = match r.gen_range(0..3) {
            0 => None,
            c => Some(c),
        };
        let f = common::random_poly(&mut r, n, 4, 4, force, constant);
        if check_condition_star(&f).is_err() {
            continue;
        }

        let deg_infinity = zeta_degree(&zeta_at_infinity(&f).unwrap());
        let generic = f.constant_term() + BigRational::one();
        let deg_fiber = zeta_degree(&zeta_fiber_nondegenerate(&f, &generic).unwrap());

        let mut alternating = BigInt::from(0);
        for s in relevant_subsets(&f) {
            let body = gamma_infinity(&f, &s).unwrap();
            let v = volume_as_dim(&body, s.len()).unwrap();
            if s.len() % 2 == 1 {
                alternating += v;
            } else {
                alternating -= v;
            }
        }

        assert_eq!(deg_infinity, deg_fiber, "degrees disagree on {f}");
        assert_eq!(deg_infinity, alternating, "volume sum disagrees on {f}");
        checked += 1;
    }
    pass(3, "50 random polynomials: zeta degree at infinity == generic fiber degree == alternating volume sum");
}

#[test]
fn criterion_4_local_zeta_values() {
    let vars = common::var_names(2);
    let local = |text: &str| varchenko_local_zeta(&parse_polynomial(text, &vars).unwrap()).unwrap();

    assert_eq!(local("x^2 + y^3"), common::zeta(&[(2, 1), (3, 1), (6, -1)]));
    assert!(local("x*y").is_one());
    assert_eq!(local("x"), common::zeta(&[(1, 1)]));
    for k in 1..=3i64 {
        let f = parse_polynomial(&format!("x^2 + y^{}", 2 * k + 1), &vars).unwrap();
        assert_eq!(zeta_degree(&varchenko_local_zeta(&f).unwrap()), BigInt::from(1 - 2 * k));
    }
    pass(4, "cusp, node, smooth branch, and the x^2 + y^(2k+1) degree family check out");
}

#[test]
fn criterion_5_geometry_oracles() {
    let mut r = common::rng(0xacce05);

    for _ in 0..100 {
        let n = r.gen_range(1..=3);
        let count = r.gen_range(2..=7);
        let rows = common::random_points(&mut r, n, count, -4, 4);
        let p = common::polytope(&rows, n);
        let lib = normalized_volume(&p).unwrap();
        if p.dim() == n as i64 {
            assert_eq!(lib, BigInt::from(common::vol_oracle(&rows)), "volume of {rows:?}");
        } else {
            assert_eq!(common::vol_oracle(&rows), 0);
        }
        let m = common::random_unimodular(&mut r, n);
        let moved = common::apply_matrix(&m, &rows);
        assert_eq!(normalized_volume(&common::polytope(&moved, n)).unwrap(), lib);
    }

    for _ in 0..50 {
        let ca = r.gen_range(1..=3);
        let cb = r.gen_range(1..=3);
        let cc = r.gen_range(1..=3);
        let a = common::random_points(&mut r, 3, ca, 0, 2);
        let b = common::random_points(&mut r, 3, cb, 0, 2);
        let c = common::random_points(&mut r, 3, cc, 0, 2);
        let (pa, pb, pc) =
            (common::polytope(&a, 3), common::polytope(&b, 3), common::polytope(&c, 3));

        let mv = mixed_volume(&[pa.clone(), pb.clone(), pc.clone()]).unwrap();
        assert_eq!(mv, BigInt::from(common::mv_oracle(&[&a, &b, &c])), "triple {a:?} {b:?} {c:?}");

        // symmetry
        assert_eq!(mixed_volume(&[pb.clone(), pc.clone(), pa.clone()]).unwrap(), mv);
        assert_eq!(mixed_volume(&[pc.clone(), pb.clone(), pa.clone()]).unwrap(), mv);

        // multilinearity in the first slot
        let cd = r.gen_range(1..=3);
        let d = common::random_points(&mut r, 3, cd, 0, 2);
        let pd = common::polytope(&d, 3);
        let lhs =
            mixed_volume(&[minkowski_sum(&pa, &pd).unwrap(), pb.clone(), pc.clone()]).unwrap();
        let rhs = &mv + mixed_volume(&[pd, pb, pc]).unwrap();
        assert_eq!(lhs, rhs, "multilinearity on {a:?} + {d:?}");
    }

    pass(5, "100 volumes match the triangulation oracle and GL_n(Z) images; 50 mixed-volume triples match interpolation, symmetry, multilinearity");
}

#[test]
fn criterion_6_torus_euler_spot_checks() {
    let line = common::polytope(&[vec![0, 0], vec![1, 0], vec![0, 1]], 2);
    assert_eq!(bkk_euler(&[line], 2).unwrap(), BigInt::from(-1));

    let ex = common::polytope(&[vec![0, 0], vec![1, 0]], 2);
    let ey = common::polytope(&[vec![0, 0], vec![0, 1]], 2);
    assert_eq!(bkk_euler(&[ex, ey], 2).unwrap(), BigInt::from(1));

    for d in 1..=5i64 {
        let seg = common::polytope(&[vec![0], vec![d]], 1);
        assert_eq!(bkk_euler(&[seg], 1).unwrap(), BigInt::from(d));
    }
    pass(6, "line in the 2-torus -1, transverse point count 1, d points on the 1-torus");
}

#[test]
fn criterion_7_complete_intersection_suite() {
    let vars = common::var_names(2);
    let map = PolyMap::new(vec![
        parse_polynomial("x + y + 1", &vars).unwrap(),
        parse_polynomial("x^2 + y^2", &vars).unwrap(),
    ])
    .unwrap();
    assert_eq!(zeta_ci_at_infinity(&map).unwrap(), common::zeta(&[(2, 1)]));
    assert_eq!(euler_ci_generic_fiber(&map).unwrap(), BigInt::from(2));

    // single-component maps collapse to the hypersurface functions
    let mut r = common::rng(0xacce07);
    let mut checked = 0u32;
    let mut attempts = 0u32;
    while checked < 30 {
        attempts += 1;
        assert!(attempts < 20_000, "polynomial generator starved");
        let n = r.gen_range(1..=3);
        let force = r.gen_bool(0.5);
        let constant = match r.gen_range(0..3) {
            0 => None,
            c => Some(c),
        };
        let f = common::random_poly(&mut r, n, 3, 4, force, constant);
        if check_condition_star(&f).is_err() {
            continue;
        }
        let single = PolyMap::new(vec![f.clone()]).unwrap();
        let a = f.constant_term();
        let generic = &a + BigRational::one();

        assert_eq!(zeta_ci_at_infinity(&single).unwrap(), zeta_at_infinity(&f).unwrap());
        assert_eq!(euler_ci_generic_fiber(&single).unwrap(), euler_generic_fiber(&f).unwrap());
        assert_eq!(
            zeta_ci_fiber(&single, &generic, FiberMode::Generic, Route::A).unwrap(),
            zeta_fiber_nondegenerate(&f, &generic).unwrap(),
            "generic fiber on {f}"
        );
        // the central-fiber comparison runs on the shared domain: the
        // hypersurface route refuses facet normals on the orthant boundary
        // unless f - a is quasi-convenient, the map route never needs the
        // axis split
        if let Ok(expected) = zeta_central_fiber_smooth(&f, Route::A) {
            let got = zeta_ci_fiber(&single, &a, FiberMode::Central, Route::A)
                .unwrap_or_else(|e| panic!("central fiber on {f}: {e}"));
            assert_eq!(got, expected, "central fiber on {f}");
        }
        if convenience_profile(&f).quasi_convenient {
            assert_eq!(
                zeta_ci_fiber(&single, &a, FiberMode::Central, Route::B).unwrap(),
                zeta_central_fiber_smooth(&f, Route::B).unwrap(),
                "central fiber, second route, on {f}"
            );
        }
        checked += 1;
    }

    // every enumerated facet at infinity decomposes into supporting faces of
    // the summands: the face polytope is the Minkowski sum of its parts and
    // the minima add up
    let mut maps_checked = 0u32;
    let mut facets_checked = 0u32;
    attempts = 0;
    while maps_checked < 20 {
        attempts += 1;
        assert!(attempts < 20_000, "map generator starved");
        let n = r.gen_range(2..=3);
        let force1 = r.gen_bool(0.5);
        let force2 = r.gen_bool(0.5);
        let constant2 = if r.gen_bool(0.5) { Some(1) } else { None };
        let f1 = common::random_poly(&mut r, n, 3, 3, force1, Some(1));
        let f2 = common::random_poly(&mut r, n, 3, 3, force2, constant2);
        let map = PolyMap::new(vec![f1, f2]).unwrap();

        let mut saw_facet = false;
        for s in nonempty_subsets(n) {
            let facets = match facets_outside_dual(&map, &s) {
                Ok(facets) => facets,
                Err(_) => continue,
            };
            for facet in facets {
                assert!(facet.d > BigInt::from(0));

                let mut value_sum = BigInt::from(0);
                let mut sum = None;
                for (_, part) in &facet.parts {
                    value_sum += &part.value;
                    sum = Some(match sum {
                        None => part.polytope.clone(),
                        Some(acc) => minkowski_sum(&acc, &part.polytope).unwrap(),
                    });
                }
                assert_eq!(facet.face.value, value_sum, "minima add over the parts");
                assert_eq!(
                    facet.face.polytope.vertices(),
                    sum.unwrap().vertices(),
                    "facet is the sum of its parts"
                );

                let last = &facet.parts.last().unwrap().1;
                assert_eq!(last.value, -facet.d.clone(), "distance comes from the last body");

                saw_facet = true;
                facets_checked += 1;
            }
        }
        if saw_facet {
            maps_checked += 1;
        }
    }
    assert!(facets_checked >= 40, "only {facets_checked} facets enumerated");

    pass(7, "(x+y+1, x^2+y^2) gives (1-t^2) and euler 2; 30 single-component maps match the hypersurface functions; every enumerated facet decomposes into its supporting-face parts");
}

#[test]
fn criterion_8_route_agreement() {
    let mut r = common::rng(0xacce08);

    let mut checked = 0u32;
    let mut attempts = 0u32;
    while checked < 30 {
        attempts += 1;
        assert!(attempts < 20_000, "polynomial generator starved");
        let n = r.gen_range(1..=3);
        let force = checked % 2 == 0;
        let constant = match r.gen_range(0..3) {
            0 => None,
            c => Some(c),
        };
        let f = common::random_poly(&mut r, n, 3, 4, force, constant);
        if !convenience_profile(&f).quasi_convenient {
            continue;
        }
        assert_eq!(
            zeta_central_fiber_smooth(&f, Route::A).unwrap(),
            zeta_central_fiber_smooth(&f, Route::B).unwrap(),
            "routes disagree on {f}"
        );
        checked += 1;
    }

    let mut maps_checked = 0u32;
    attempts = 0;
    while maps_checked < 20 {
        attempts += 1;
        assert!(attempts < 20_000, "map generator starved");
        let n = r.gen_range(2..=3);
        let force2 = r.gen_bool(0.5);
        let constant2 = r.gen_range(0..=2);
        let f1 = common::random_poly(&mut r, n, 3, 3, true, Some(1));
        let f2 = common::random_poly(&mut r, n, 3, 3, force2, Some(constant2));
        if check_condition_star(&f2).is_err() || !convenience_profile(&f2).quasi_convenient {
            continue;
        }
        let a = f2.constant_term();
        let map = PolyMap::new(vec![f1, f2]).unwrap();
        let za = zeta_ci_fiber(&map, &a, FiberMode::Central, Route::A).unwrap();
        let zb = zeta_ci_fiber(&map, &a, FiberMode::Central, Route::B).unwrap();
        assert_eq!(za, zb, "central routes disagree");
        maps_checked += 1;
    }

    pass(8, "central fiber routes agree on 30 quasi-convenient polynomials and on 20 two-component maps");
}

#[test]
fn criterion_9_correction_trivial_when_convenient() {
    let mut r = common::rng(0xacce09);
    for _ in 0..30 {
        let n = r.gen_range(1..=3);
        let constant = r.gen_range(0..=3);
        let f = common::random_poly(&mut r, n, 4, 4, true, Some(constant));
        let profile = convenience_profile(&f);
        assert!(profile.convenient, "generator must produce convenient input, got {f}");
        assert!(
            correction_factor(&f).unwrap().is_one(),
            "nontrivial correction for convenient {f}"
        );
    }
    pass(9, "correction factor is 1 on 30 random convenient polynomials");
}
