mod common;

use std::sync::Arc;

use common::{phi_raw, re, rng, tc_raw, ts_raw};
use hexfour::dft::{build_dft_plan, hexagon_matrix, plan_interpolate, plan_orthogonality_defect, DftPlan, HalfOpenBox, HexagonDomain};
use hexfour::tri::{tc, ts};
use hexfour::lattice::act;
use hexfour::*;
use nalgebra::Matrix2;
use rand::Rng;

const S3: f64 = 1.732_050_807_568_877_2;

fn close(p: HPoint, q: [f64; 3], tol: f64) -> bool {
    p.coords().iter().zip(q).all(|(a, b)| (a - b).abs() <= tol)
}

#[test]
fn homogeneous_coordinates() {
    assert!(close(to_homogeneous(0.0, 0.0), [0.0; 3], 0.0));
    assert!(close(to_homogeneous(2.0 / S3, 0.0), [1.0, 0.0, -1.0], 1e-15));
    assert!(close(to_homogeneous(0.0, 1.0), [-0.5, 1.0, -0.5], 1e-15));

    assert_eq!(from_homogeneous(HPoint::ORIGIN), (0.0, 0.0));
    let (x, y) = from_homogeneous(HPoint::from_triple(1.0, 0.0, -1.0).unwrap());
    assert!((x - 2.0 / S3).abs() < 1e-15 && y == 0.0);

    let mut r = rng(1);
    for _ in 0..100 {
        let t = HPoint::random_in_hexagon(&mut r);
        let (x, y) = from_homogeneous(t);
        assert!(close(to_homogeneous(x, y), t.coords(), 1e-14));
        assert!(to_homogeneous(x, y).coordinate_sum().abs() <= 1e-12);
    }
}

#[test]
fn rejects_off_plane_triples() {
    assert!(matches!(HPoint::from_triple(1.0, 1.0, 1.0), Err(Error::NotHomogeneous(_))));
    assert!(FreqIndex::from_triple(1, 1, -1).is_err());
    assert_eq!(FreqIndex::from_triple(2, -1, -1).unwrap(), FreqIndex::new(2, -1));
}

#[test]
fn congruence_modulo_three() {
    let o = HPoint::ORIGIN;
    let t = HPoint::new(0.3, -0.7);
    assert!(congruent_mod3(t, t));
    assert!(congruent_mod3(o, HPoint::from_triple(2.0, -1.0, -1.0).unwrap()));
    assert!(!congruent_mod3(o, HPoint::from_triple(1.0, 0.0, -1.0).unwrap()));
    assert!(congruent_mod3(t, t + HPoint::new(-1.0, 2.0)));
}

#[test]
fn periodicity_probe() {
    let mut r = rng(2);
    let k = FreqIndex::new(1, 0);
    assert!(is_h_periodic_probe(|t| hexfour::lattice::phi(k, t), 20, &mut r));
    assert!(!is_h_periodic_probe(|t| re(t.t1()), 20, &mut r));
    assert!(is_h_periodic_probe(|t| ts(FreqIndex::new(1, 1), t), 20, &mut r));
}

#[test]
fn enumeration_examples() {
    let h1 = enumerate(IndexSet::Hex, 1);
    let expect = [FreqIndex::new(-1, 0), FreqIndex::new(0, -1), FreqIndex::ZERO];
    assert_eq!(h1.len(), 3);
    for k in expect {
        assert!(h1.contains(&k));
    }
    assert_eq!(enumerate(IndexSet::HexStar, 1).len(), 7);
    assert_eq!(enumerate(IndexSet::TriangleInterior, 3), vec![FreqIndex::new(1, 1)]);
}

#[test]
fn enumeration_counts_and_order() {
    for n in 1..=32 {
        for set in IndexSet::ALL {
            let v = enumerate(set, n);
            assert_eq!(v.len(), set.cardinality(n), "{set} n={n}");
            assert!(v.windows(2).all(|w| (w[0].k1(), w[0].k2()) < (w[1].k1(), w[1].k2())));
            assert!(v.iter().all(|k| k.coords().iter().sum::<i64>() == 0));
        }
        assert_eq!(IndexSet::Hex.cardinality(n), 3 * n * n);
        assert_eq!(IndexSet::HexStar.cardinality(n), 3 * n * n + 3 * n + 1);
        assert_eq!(IndexSet::Triangle.cardinality(n), (n + 1) * (n + 2) / 2);
        if n >= 2 {
            assert_eq!(IndexSet::TriangleInterior.cardinality(n), (n - 1) * (n - 2) / 2);
        }
    }
}

#[test]
fn index_set_names() {
    for s in IndexSet::ALL {
        assert_eq!(s.name().parse::<IndexSet>().unwrap(), s);
    }
    assert!(matches!("H_m".parse::<IndexSet>(), Err(Error::UnknownIndexSet(_))));
}

#[test]
fn classification_tables() {
    for n in 1..6 {
        let c = classify(FreqIndex::ZERO, n, Shape::Hexagon).unwrap();
        assert_eq!((c.class, c.weight_c), (Position::Interior, 1.0));
        let m = n as i64;
        let c = classify(FreqIndex::new(m, 0), n, Shape::Hexagon).unwrap();
        assert_eq!(c.class, Position::Vertex);
        assert!((c.weight_c - 1.0 / 3.0).abs() < 1e-16);
    }
    for n in 3..8 {
        let m = n as i64;
        let c = classify(FreqIndex::new(1, m - 1), n, Shape::Triangle).unwrap();
        assert_eq!((c.class, c.weight_lambda), (Position::Edge, 3.0));
    }
    let c = classify(FreqIndex::new(2, -1), 3, Shape::Hexagon).unwrap();
    assert_eq!((c.class, c.weight_c), (Position::Interior, 1.0));
    let c = classify(FreqIndex::new(3, -1), 3, Shape::Hexagon).unwrap();
    assert_eq!((c.class, c.weight_c), (Position::Edge, 0.5));
    assert!(matches!(
        classify(FreqIndex::new(4, 0), 3, Shape::Hexagon),
        Err(Error::NotInIndexSet { .. })
    ));
    assert!(classify(FreqIndex::new(-1, 1), 3, Shape::Triangle).is_err());
}

#[test]
fn weight_sums() {
    for n in 1..12 {
        let c: f64 = enumerate(IndexSet::HexStar, n)
            .into_iter()
            .map(|j| classify(j, n, Shape::Hexagon).unwrap().weight_c)
            .sum();
        assert!((c - (3 * n * n) as f64).abs() < 1e-10);
        let l: f64 = enumerate(IndexSet::Triangle, n)
            .into_iter()
            .map(|j| classify(j, n, Shape::Triangle).unwrap().weight_lambda)
            .sum();
        assert!((l - (3 * n * n) as f64).abs() < 1e-10);
    }
}

#[test]
fn group_action() {
    let t = HPoint::from_triple(0.2, 0.5, -0.7).unwrap();
    let s = act(GroupElement::Sigma1, t);
    assert!(close(s, [-0.2, 0.7, -0.5], 1e-16));
    assert_eq!(act(GroupElement::Identity, t), t);
    let r = GroupElement::Sigma1.then(GroupElement::Sigma2);
    let mut u = t;
    for _ in 0..3 {
        u = act(r, u);
    }
    assert!(close(u, t.coords(), 1e-16));
    assert_ne!(act(r, t), t);
}

#[test]
fn group_table() {
    use GroupElement::*;
    for a in GroupElement::ALL {
        assert_eq!(a.then(a.inverse()), Identity);
        for b in GroupElement::ALL {
            let c = a.then(b);
            assert!(GroupElement::ALL.contains(&c));
            assert_eq!(c.sign(), a.sign() * b.sign());
            let t = HPoint::new(0.31, -0.12);
            let lhs = c.act(t);
            let rhs = b.act(a.act(t));
            assert!(close(lhs, rhs.coords(), 1e-15));
        }
    }
    for s in [Sigma1, Sigma2, Sigma3] {
        assert_eq!(s.then(s), Identity);
        assert_eq!(s.sign(), -1);
    }
    assert_eq!(Sigma1.then(Sigma2).then(Sigma1), Sigma3);
    assert_eq!(Sigma2.then(Sigma1).then(Sigma2), Sigma3);
}

#[test]
fn projections() {
    let mut r = rng(3);
    for _ in 0..20 {
        let t = HPoint::random_in_hexagon(&mut r);
        let k = FreqIndex::new(1, 0);
        let p = project(Parity::Plus, |u| hexfour::lattice::phi(k, u), t);
        assert!((p - tc(k, t)).norm() < 1e-12);
        let inv = |u: HPoint| tc(FreqIndex::new(2, 1), u);
        assert!(project(Parity::Minus, inv, t).norm() < 1e-12);
        assert!((project(Parity::Plus, |_| re(1.0), t) - 1.0).norm() < 1e-15);
    }
}

#[test]
fn projections_against_hand_written_orbit() {
    let mut r = rng(4);
    for _ in 0..100 {
        let t = HPoint::random_in_hexagon(&mut r);
        let k = FreqIndex::new(r.gen_range(-5..=5), r.gen_range(-5..=5));
        let plus = project(Parity::Plus, |u| hexfour::lattice::phi(k, u), t);
        let minus = project(Parity::Minus, |u| hexfour::lattice::phi(k, u), t);
        assert!((plus - tc_raw(k.coords(), t.coords())).norm() < 1e-12);
        assert!((minus - ts_raw(k.coords(), t.coords()) * Complex64::new(0.0, 1.0)).norm() < 1e-12);
        assert!((hexfour::lattice::phi(k, t) - phi_raw(k.coords(), t.coords())).norm() < 1e-12);
    }
}

#[test]
fn dft_plan_examples() {
    let id = Matrix2::identity();
    let unit = Arc::new(HalfOpenBox::centered(1.0, 1.0));
    let p = build_dft_plan(id, id, unit.clone(), unit).unwrap();
    assert_eq!(p.n(), &Matrix2::identity());
    assert_eq!(p.lambda_n(), &[[0, 0]]);

    let p = DftPlan::hexagon(2).unwrap();
    assert_eq!(p.det().abs(), 12);
    assert_eq!(p.lambda_n().len(), 12);
    assert_eq!(p.lambda_ntr().len(), 12);

    let p = DftPlan::diagonal([1.0, 1.0], [3.0, 2.0]).unwrap();
    assert_eq!(p.det(), 6);
    assert_eq!(p.lambda_n().len(), 6);
}

#[test]
fn dft_plan_rejects_bad_input() {
    let id = Matrix2::identity();
    let unit = Arc::new(HalfOpenBox::centered(1.0, 1.0));
    let b = Matrix2::new(1.5, 0.0, 0.0, 1.0);
    assert!(matches!(
        build_dft_plan(id, b, unit.clone(), unit.clone()),
        Err(Error::NonIntegralLattice { .. })
    ));
    assert!(matches!(
        build_dft_plan(Matrix2::zeros(), id, unit.clone(), unit.clone()),
        Err(Error::Singular)
    ));
    // a domain too small for the lattice
    let tiny = Arc::new(HalfOpenBox::centered(0.5, 0.5));
    let b = Matrix2::new(2.0, 0.0, 0.0, 2.0);
    assert!(matches!(
        build_dft_plan(id, b, tiny, unit),
        Err(Error::CardinalityMismatch { .. })
    ));
}

#[test]
fn hexagon_plan_matches_hn() {
    for n in 1..=6 {
        let p = DftPlan::hexagon(n).unwrap();
        let mut a: Vec<FreqIndex> = p.lambda_n().iter().map(|j| FreqIndex::new(j[0], j[1])).collect();
        a.sort();
        assert_eq!(a, enumerate(IndexSet::Hex, n));
        let h = hexagon_matrix();
        assert!((h.determinant() - 2.0 * S3).abs() < 1e-14);
        let d = HexagonDomain::new(n as f64);
        for j in enumerate(IndexSet::Hex, n) {
            let (x, y) = from_homogeneous(j.scaled(1));
            assert!(hexfour::dft::FundamentalDomain::contains(&d, [x, y]));
        }
    }
}

fn random_diagonal_plans(seed: u64) -> Vec<DftPlan> {
    let mut r = rng(seed);
    (0..5)
        .map(|_| {
            let a = [r.gen_range(0.5..2.0), r.gen_range(0.5..2.0)];
            let m = [r.gen_range(1..6) as f64, r.gen_range(1..6) as f64];
            DftPlan::diagonal(a, [m[0] / a[0], m[1] / a[1]]).unwrap()
        })
        .collect()
}

#[test]
fn orthogonality_defects() {
    let mut plans: Vec<DftPlan> = (1..=8).map(|n| DftPlan::hexagon(n).unwrap()).collect();
    plans.extend(random_diagonal_plans(5));
    for p in &plans {
        assert_eq!(p.orthogonality_defect([0, 0]), 0.0);
        for k in p.lambda_ntr() {
            assert!(plan_orthogonality_defect(p, *k) < 1e-12);
            assert_eq!(p.is_zero_mod_ntr(*k), *k == [0, 0]);
        }
        let n = p.n();
        for m1 in -2i64..=2 {
            for m2 in -2i64..=2 {
                let k = [n[(0, 0)] * m1 + n[(1, 0)] * m2, n[(0, 1)] * m1 + n[(1, 1)] * m2];
                assert!(p.is_zero_mod_ntr(k));
                assert!(p.orthogonality_defect(k) < 1e-12);
            }
        }
    }
}

#[test]
fn plan_interpolation() {
    let mut r = rng(6);
    let mut plans = vec![DftPlan::hexagon(3).unwrap()];
    plans.extend(random_diagonal_plans(7));
    for p in &plans {
        let nodes = p.nodes();
        let ones = vec![re(1.0); nodes.len()];
        for _ in 0..10 {
            let x = [r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0)];
            assert!((plan_interpolate(p, &ones, x).unwrap() - 1.0).norm() < 1e-10);
        }
        for k in p.lambda_ntr().iter().take(6) {
            let s: Vec<Complex64> = nodes.iter().map(|x| p.basis(*k, *x)).collect();
            for _ in 0..50 {
                let x = [r.gen_range(-2.0..2.0), r.gen_range(-2.0..2.0)];
                assert!((p.interpolate(&s, x).unwrap() - p.basis(*k, x)).norm() < 1e-10);
            }
        }
        let s: Vec<Complex64> = nodes.iter().map(|x| Complex64::new(x[0].sin(), x[1])).collect();
        for (x, f) in nodes.iter().zip(&s) {
            assert!((p.interpolate(&s, *x).unwrap() - f).norm() < 1e-12);
        }
        assert!(matches!(p.interpolate(&s[1..], [0.0, 0.0]), Err(Error::SampleCount { .. })));
    }
}
