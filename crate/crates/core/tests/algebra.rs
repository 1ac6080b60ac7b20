use combhopf::hopf::examples::{a8, group_algebra, taft};
use combhopf::hopf::{check_hopf_axioms, Hopf, HopfData};
use combhopf::scalar::*;
use combhopf::triplet::{assemble_triplet, build_a8};
use proptest::prelude::*;

fn cyclo() -> impl Strategy<Value = Cyclo> {
    (prop::sample::select(vec![1u32, 3, 4, 8]), prop::collection::vec(-5i64..=5, 1..4), 1i64..4).prop_map(|(n, cs, den)| {
        cs.iter().enumerate().fold(Cyclo::zero(), |acc, (k, c)| {
            acc + root_of_unity(n, k as i64).unwrap() * Cyclo::from_ratio(*c, den)
        })
    })
}

fn int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..4, 1usize..4).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..=4, c), r))
}

proptest! {
    #[test]
    fn field_laws(a in cyclo(), b in cyclo(), c in cyclo()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn minimized_is_same_value(a in cyclo()) {
        prop_assert_eq!(a.minimized(), a);
    }

    #[test]
    fn matrix_inverse(entries in prop::collection::vec(-3i64..=3, 9)) {
        let m = FieldMatrix::from_flat(3, 3, entries.iter().map(|&v| Cyclo::from_int(v)).collect());
        match m.inverse() {
            Some(inv) => prop_assert!(m.mul(&inv).is_identity()),
            None => prop_assert!(m.rank() < 3),
        }
    }

    #[test]
    fn smith_form_factorizes(rows in int_matrix()) {
        let m = IntMatrix::from_rows(&rows);
        let s = integer_smith_normal_form(&m);
        prop_assert_eq!(s.left.mul(&m).mul(&s.right), s.diagonal.clone());
        for w in s.invariants.windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
        for k in integer_kernel(&m) {
            let img: Vec<i64> = (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j) * k[j]).sum()).collect();
            prop_assert!(img.iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn single_mutations_detected(which in 0usize..3, pos in any::<prop::sample::Index>(), delta in 1i64..3) {
        let h = [group_algebra(2), group_algebra(4), a8()][which].clone();
        let d = h.dim();
        let mut m = h.m().to_vec();
        let i = pos.index(d * d * d);
        m[i] = &m[i] + &Cyclo::from_int(delta);
        let bad = HopfData::new(h.basis().to_vec(), m, h.eta().to_vec(), h.delta().to_vec(), h.eps().to_vec(), h.s().to_vec()).unwrap();
        let rep = check_hopf_axioms(&bad);
        prop_assert!(!rep.all_passed());
        prop_assert!(rep.failed().all(|c| !c.witnesses.is_empty()));
    }

    #[test]
    fn a8_pairing_perturbation_rejected(i in 0usize..8, j in 0usize..8) {
        let mut c = build_a8(&BigRational::from_integer(1.into()));
        let v = c.pairings[1].get(i, j) + &Cyclo::from_int(1);
        c.pairings[1].set(i, j, v);
        prop_assert!(assemble_triplet(c).is_err());
    }
}

#[test]
fn cointegral_eigenvalues() {
    for h in [group_algebra(3), taft(2), a8()] {
        let h = Hopf::new(h).unwrap();
        for tt in (-5..=5).step_by(2) {
            let e = h.generalized_cointegral(tt).unwrap().vector;
            let s2 = h.antipode_power(2).vec_mul(&e);
            let qe: Vec<Cyclo> = e.iter().map(|x| x * h.q()).collect();
            assert_eq!(s2, qe);
        }
    }
}
