use super::*;
use crate::diagram::{boundary_sum, spiral, stabilize};

fn c(n: i64) -> Cyclo {
    Cyclo::from_int(n)
}

fn d(name: &str) -> CombedDiagram {
    builtin(name).unwrap()
}

#[test]
fn trivial_triplet_gives_one() {
    let t = named_triplet("trivial").unwrap();
    for name in crate::diagram::BUILTIN_NAMES {
        assert_eq!(bracket(&t, &d(name)).unwrap().raw, c(1), "{name}");
    }
    let st = stabilization_brackets(&t).unwrap();
    assert_eq!(st.values, [c(1), c(1), c(1)]);
}

#[test]
fn z2_stabilization_and_cp2() {
    let t = named_triplet("z2").unwrap();
    let st = stabilization_brackets(&t).unwrap();
    assert_eq!(st.values, [c(4), c(4), c(4)]);
    assert!(tau(&t, &d("CP2")).unwrap().raw.is_zero());
    for j in ["Tst1", "Tst2", "Tst3"] {
        assert_eq!(tau(&t, &d(j)).unwrap().raw, c(1));
    }
}

#[test]
fn a8_stabilization_vanishes() {
    let t = named_triplet("a8_t1").unwrap();
    let st = stabilization_brackets(&t).unwrap();
    assert!(!st.all_nonzero());
    assert!(matches!(tau(&t, &d("CP2")), Err(InvariantError::Undefined(_))));
}

#[test]
fn curve_tensor_examples() {
    let t = named_triplet("z2").unwrap();
    let ev = Evaluator::new(&t);
    let mut b4 = d("B4");
    b4.curves.push(crate::diagram::Curve {
        id: "a".into(),
        family: Family::Alpha,
        total: crate::scalar::Rational64::new(1, 2),
        crossings: vec![],
    });
    assert_eq!(ev.curve_tensor(&b4, 0).unwrap().as_scalar(), Some(&c(2)));
}

#[test]
fn spiral_multiplies_by_q() {
    let t = named_triplet("a8_t1").unwrap();
    let ev = Evaluator::new(&t);
    let base = d("S2xS2");
    let b0 = ev.bracket(&base).unwrap().raw;
    for curve in ["a1", "b2", "k1"] {
        let s = spiral(&base, curve, 1).unwrap();
        assert_eq!(ev.bracket(&s).unwrap().raw, &b0 * &t.q);
    }
}

#[test]
fn wirings_agree() {
    for name in ["trivial", "z2", "a8_t1", "h4_qt"] {
        let t = named_triplet(name).unwrap();
        assert!(Evaluator::new(&t).wirings_agree(3), "{name}");
    }
}

#[test]
fn multiplicative_and_stable() {
    let t = named_triplet("z3").unwrap();
    let ev = Evaluator::new(&t);
    let (x, y) = (d("CP2"), d("S2xS2"));
    let s = boundary_sum(&x, &y).unwrap();
    let prod = &ev.bracket(&x).unwrap().raw * &ev.bracket(&y).unwrap().raw;
    assert_eq!(ev.bracket(&s).unwrap().raw, prod);
    let t0 = ev.tau(&x).unwrap().raw;
    for j in 1..=3 {
        assert_eq!(ev.tau(&stabilize(&x, j).unwrap()).unwrap().raw, t0);
    }
}

#[test]
fn rescaling() {
    let t = named_triplet("z2").unwrap();
    for name in ["Tst2", "CP2", "S2xS2"] {
        let r = rescale_check(&t, &d(name), [c(2), c(3), c(5)]).unwrap();
        assert!(r.passed(), "{name}: {r:?}");
        assert_eq!(r.tau_ok, Some(true));
    }
}

#[test]
fn closed_relation_z2() {
    for name in ["z2", "z3", "trivial"] {
        let t = named_triplet(name).unwrap();
        for dn in ["CP2", "S2xS2", "CP2bar"] {
            let r = closed_relation(&t, &d(dn)).unwrap();
            assert!(r.holds, "{name} {dn}: {r:?}");
        }
    }
}

#[test]
fn projective_equality() {
    let a = ProjectiveScalar::new(c(-3), -1);
    assert_eq!(a.value, c(3));
    assert!(a.equals(&ProjectiveScalar::new(c(3), -1)));
    assert!(!ProjectiveScalar::new(c(-3), 1).equals(&ProjectiveScalar::new(c(3), 1)));
}
