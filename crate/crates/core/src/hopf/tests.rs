use super::examples::*;
use super::*;
use crate::scalar::Cyclo;
use alloc::vec;
use alloc::vec::Vec;

fn int(v: i64) -> Cyclo {
    Cyclo::from_int(v)
}

#[test]
fn group_algebra_passes() {
    for n in [1, 2, 3, 4] {
        assert!(check_hopf_axioms(&group_algebra(n)).all_passed(), "n = {n}");
    }
}

#[test]
fn antipode_mutation_has_witness() {
    let h = group_algebra(2);
    // S(g) = 1
    let bad = h.with_antipode(vec![int(1), int(0), int(1), int(0)]).unwrap();
    let r = check_hopf_axioms(&bad);
    let c = r.get(Axiom::Antipode);
    assert!(!c.passed());
    assert_eq!(c.witnesses, vec![vec![1]]);
    assert!(r.failed().all(|c| c.axiom == Axiom::Antipode));
}

#[test]
fn a8_structure() {
    let h = Hopf::new(a8()).unwrap();
    let mut expected_s = vec![int(0); 64];
    for i in 0..8usize {
        let (a, b, c) = (i & 1, (i >> 1) & 1, i >> 2);
        if c == 0 {
            expected_s[i * 8 + i] = int(1);
        } else {
            let sign = if (a + 1 + b) % 2 == 1 { 1 } else { -1 };
            expected_s[i * 8 + ((a + 1) % 2 + 2 * b + 4)] = int(sign);
        }
    }
    assert_eq!(h.data().s(), &expected_s[..]);
    assert_eq!(h.q(), &int(-1));
    assert_eq!(h.a(), &h.data().basis_vector(1)[..]);
    assert_eq!(h.alpha(), &[int(1), int(-1), int(-1), int(1), int(0), int(0), int(0), int(0)][..]);
    assert_eq!(h.e_r(), &[int(0), int(0), int(0), int(0), int(-1), int(1), int(1), int(-1)][..]);
    assert!(h.is_balanced());
    assert!(!h.is_involutory());
    let bad: Vec<_> = h.lemma_checks().unwrap().into_iter().filter(|(_, ok)| !ok).collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn group_algebra_is_involutory() {
    let h = Hopf::new(group_algebra(4)).unwrap();
    assert!(h.is_involutory() && h.is_balanced());
    assert!(h.q().is_one());
    assert_eq!(h.e_l(), h.e_r());
    assert!(h.warnings().is_empty());
}

#[test]
fn dual_is_an_involution() {
    let h = group_algebra(4);
    let dd = derive_variant(&derive_variant(&h, Variant::Dual).unwrap(), Variant::Dual).unwrap();
    assert_eq!(dd, h);
}

#[test]
fn taft3_phase() {
    let h = Hopf::new(taft(3)).unwrap();
    assert_eq!(h.q().multiplicative_order(12), Some(3));
    let bad: Vec<_> = h.lemma_checks().unwrap().into_iter().filter(|(_, ok)| !ok).collect();
    assert!(bad.is_empty(), "{bad:?}");
}
