use super::*;
use alloc::vec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

#[test]
fn builtins_validate() {
    for name in BUILTIN_NAMES {
        let d = builtin(name).unwrap();
        let r = d.validate();
        assert!(r.is_valid(), "{name}: {r}");
    }
    assert!(builtin("nope").is_none());
}

#[test]
fn tst2_data() {
    let d = builtin("Tst2").unwrap();
    assert_eq!(d.type_tuple, TypeTuple::new(1, 0, 1, 0, 0, 1));
    assert_eq!(d.crossing("p").unwrap().exponent(), Some(-1));
    assert_eq!(d.crossing("q").unwrap().exponent(), Some(0));
    assert_eq!(d.curve("alpha").unwrap().crossings, ["p", "q"]);
    assert_eq!(euler_characteristic(&d.type_tuple), 1);
}

#[test]
fn mutations_are_reported() {
    let mut d = builtin("Tst2").unwrap();
    d.crossings[0].partial_a += q(1, 4);
    let r = d.validate();
    assert!(r.violations.iter().any(|v| v.kind == ViolationKind::Exponent && v.location == "p"));
    let mut d = builtin("Tst2").unwrap();
    d.crossings[0].partial_a += q(1, 2);
    assert!(d.validate().violations.iter().any(|v| v.kind == ViolationKind::Parity));
    let mut d = builtin("Tst2").unwrap();
    d.curves[1].crossings.push("p".into());
    assert!(d.validate().violations.iter().any(|v| v.kind == ViolationKind::Occurrence));
}

#[test]
fn euler_examples() {
    assert_eq!(euler_characteristic(&TypeTuple::new(0, 0, 0, 0, 0, 1)), 1);
    assert_eq!(euler_characteristic(&TypeTuple::new(2, 1, 1, 0, 0, 1)), 1);
}

#[test]
fn boundary_sums() {
    let t1 = builtin("Tst1").unwrap();
    let t2 = builtin("Tst2").unwrap();
    let b4 = builtin("B4").unwrap();
    assert!(boundary_sum(&b4, &t2).unwrap().structurally_equal(&t2));
    assert_eq!(boundary_sum(&t1, &t2).unwrap().type_tuple, TypeTuple::new(2, 1, 1, 0, 0, 1));
    let s = boundary_sum(&t2, &t2).unwrap();
    assert_eq!((s.curves.len(), s.crossings.len()), (6, 4));
    assert!(s.validate().is_valid());
}

#[test]
fn homology_examples() {
    let h = homology(&builtin("Tst2").unwrap()).unwrap();
    assert!(h.h1.is_trivial() && h.h2.is_trivial() && h.h3.is_trivial());
    let h = homology(&builtin("CP2").unwrap()).unwrap();
    assert!(h.h1.is_trivial());
    assert_eq!(h.h2, AbelianGroup { free_rank: 1, torsion: vec![] });
    let h = homology(&builtin("S2xS2").unwrap()).unwrap();
    assert_eq!(h.h2.free_rank, 2);
    assert!(h.h1.is_trivial());
    let mut d = builtin("CP2").unwrap();
    d.homology.as_mut().unwrap().classes.insert("kappa".into(), vec![2, 0]);
    let h = homology(&d).unwrap();
    assert!(h.h1.is_trivial());
    // ker iota is spanned by (0, 1, -2) and j(2, 0) is its negative
    assert!(h.h2.is_trivial());
    assert_eq!(homology(&CombedDiagram::empty(TypeTuple::new(0, 0, 0, 0, 0, 1))).unwrap_err(), "homology unavailable");
}

#[test]
fn stabilized_balls_are_acyclic() {
    let mut d = builtin("B4").unwrap();
    for j in [1, 2, 3, 2, 1] {
        d = stabilize(&d, j).unwrap();
        assert!(d.validate().is_valid());
        let h = homology(&d).unwrap();
        assert!(h.h1.is_trivial() && h.h2.is_trivial() && h.h3.is_trivial(), "{}", d.type_tuple);
        assert_eq!(euler_characteristic(&d.type_tuple), 1);
    }
}

#[test]
fn two_point_round_trip() {
    let d = builtin("Tst2").unwrap();
    let (c, [p, qq]) = two_point_create(&d, "alpha", "beta", 1, 0, q(0, 1), q(1, 4)).unwrap();
    assert!(c.validate().is_valid());
    let (ep, eq) = (c.crossing(&p).unwrap().exponent().unwrap(), c.crossing(&qq).unwrap().exponent().unwrap());
    assert_eq!(eq, ep + 1);
    assert!(two_point_remove(&c, &p, &qq).unwrap().structurally_equal(&d));
    // equal signs are rejected
    let mut bad = c.clone();
    let i = bad.crossing_index(&qq).unwrap();
    bad.crossings[i].partial_b -= q(1, 2);
    bad.crossings[i].sign = -bad.crossings[i].sign;
    assert!(matches!(two_point_remove(&bad, &p, &qq), Err(MoveError::Relation(_))));
}

#[test]
fn spiral_and_reversal_round_trip() {
    let d = builtin("CP2").unwrap();
    let s = spiral(&spiral(&d, "beta", 1).unwrap(), "beta", -1).unwrap();
    assert_eq!(s, d);
    let r = reverse_orientation(&d, "alpha").unwrap();
    assert_eq!(r.curve("alpha").unwrap().total, q(-1, 2));
    assert!(r.validate().is_valid());
    assert_eq!(reverse_orientation(&r, "alpha").unwrap(), d);
}

#[test]
fn isotopy_round_trip() {
    let d = builtin("S2xS2").unwrap();
    for c in ["a1", "b2", "k1"] {
        let f = isotopy_forward(&d, c).unwrap();
        assert!(f.validate().is_valid());
        assert_eq!(isotopy_backward(&f, c).unwrap(), d);
    }
    let b4 = builtin("B4").unwrap();
    assert!(isotopy_forward(&b4, "alpha").is_err());
}

#[test]
fn handle_slide_counts() {
    let d = builtin("S2xS2").unwrap();
    let s = handle_slide(&d, "a1", "a2", 1, 0).unwrap();
    assert!(s.validate().is_valid(), "{}", s.validate());
    assert_eq!(s.curve("a1").unwrap().crossings.len(), 4);
    assert_eq!(s.curve("a1").unwrap().total, q(3, 2));
    assert!(handle_slide(&d, "a1", "a1", 0, 0).is_err());
    assert!(handle_slide(&d, "a1", "b1", 0, 0).is_err());
    let h = homology(&s).unwrap();
    assert_eq!(h.h2.free_rank, 2);
}

#[test]
fn slide_over_empty_curve() {
    let mut d = random_diagram(&mut ChaCha8Rng::seed_from_u64(3), RandomSpec { curves_per_family: 2, crossings: 0, max_total: 1 });
    d.crossings.clear();
    let before = d.curve("a0").unwrap().clone();
    let ti = d.curve("a1").unwrap().total;
    let s = handle_slide(&d, "a0", "a1", 0, 0).unwrap();
    assert_eq!(s.curve("a0").unwrap().total, before.total + ti + q(1, 2));
}

#[test]
fn three_point_twice_is_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let d = random_diagram(&mut rng, RandomSpec { curves_per_family: 1, crossings: 3, max_total: 1 });
        let (d, [x, y, z]) = with_random_triangle(&mut rng, &d).unwrap();
        assert!(d.validate().is_valid());
        let m = three_point(&d, [&x, &y, &z]).unwrap();
        assert!(m.validate().is_valid());
        assert_eq!(m.type_tuple, d.type_tuple);
        assert_eq!(three_point(&m, [&z, &x, &y]).unwrap(), d);
    }
}

#[test]
fn random_moves_preserve_validity() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let d = random_diagram(&mut rng, RandomSpec { curves_per_family: 2, crossings: 6, max_total: 2 });
        assert!(d.validate().is_valid());
        for kind in MoveKind::ALL {
            if let Some((m, what)) = random_move(&mut rng, &d, kind) {
                let r = m.validate();
                assert!(r.is_valid(), "{what}: {r}");
            }
        }
    }
}
