use super::*;
use crate::hopf::examples::{group_algebra, group_r_matrix, sweedler, sweedler_r_matrix, trivial_r_matrix};
use crate::scalar::BigRational;

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

#[test]
fn a8_accepted() {
    let t = assemble_triplet(build_a8(&rat(1, 1))).unwrap();
    assert_eq!(t.q, Cyclo::from_int(-1));
    assert!(t.balanced && !t.involutory);
    assert_eq!(t.conventions.wirings, [Wiring::DEFAULT; 3]);
    assert_eq!(t.conventions.phase_exponents, [1, 1, 1]);
}

#[test]
fn a8_unit_mutation() {
    let mut c = build_a8(&rat(1, 1));
    c.pairings[0].set(0, 0, Cyclo::from_int(2));
    let e = assemble_triplet(c).unwrap_err();
    assert_eq!(e.condition, "a_ab");
    let rep = e.report.pairings[0].as_ref().unwrap();
    assert!(rep.failures.iter().any(|f| f.identity == "unit_source"));
}

#[test]
fn bicharacter_and_trivial() {
    assert!(assemble_triplet(build_trivial()).is_ok());
    let t = assemble_triplet(build_cyclic_bicharacter(2, [1, 1, 1]).unwrap()).unwrap();
    assert!(t.q.is_one() && t.involutory);
}

#[test]
fn quasitriangular() {
    let h = group_algebra(2);
    for r in [trivial_r_matrix(&h), group_r_matrix(2, 1).unwrap()] {
        let c = build_from_quasitriangular("z2", &h, &r).unwrap();
        assert!(assemble_triplet(c).is_ok());
    }
    let zero = alloc::vec![Cyclo::zero(); 4];
    assert!(matches!(build_from_quasitriangular("z2", &h, &zero), Err(TripletError::RMatrix(_))));
    let h3 = group_algebra(3);
    let c = build_from_quasitriangular("z3", &h3, &group_r_matrix(3, 2).unwrap()).unwrap();
    assert!(assemble_triplet(c).is_ok());
    let s = sweedler();
    let c = build_from_quasitriangular("h4", &s, &sweedler_r_matrix(&Cyclo::from_int(1))).unwrap();
    let t = assemble_triplet(c).unwrap();
    assert_eq!(t.q, Cyclo::from_int(-1));
}
