//! Exact scalars: cyclotomic rationals, field linear algebra, integer Smith
//! normal form.

mod cyclo;
mod linalg;
mod parse;
mod snf;

use alloc::string::String;

pub use cyclo::{
    conductor_bound, cyclotomic_polynomial, euler_phi, root_of_unity, set_conductor_bound, Cyclo,
    DEFAULT_CONDUCTOR_BOUND,
};
pub use linalg::FieldMatrix;
pub use parse::parse_rational;
pub use snf::{integer_kernel, integer_smith_normal_form, lattice_basis, lattice_coordinates, IntMatrix, Snf};

pub use num_bigint::BigInt;
pub use num_rational::{BigRational, Rational64};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {needed} exceeds the configured bound {bound}")]
    ConductorOverflow { needed: u32, bound: u32 },
    #[error("scalar parse error: {0}")]
    Parse(String),
}

/// Right kernel basis of a field matrix.
pub fn field_kernel_basis(m: &FieldMatrix) -> alloc::vec::Vec<alloc::vec::Vec<Cyclo>> {
    m.kernel_basis()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn c(s: &str) -> Cyclo {
        s.parse().unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(Cyclo::from_ratio(1, 2) + Cyclo::from_ratio(1, 3), Cyclo::from_ratio(5, 6));
    }

    #[test]
    fn zeta4_squared() {
        let i = root_of_unity(4, 1).unwrap();
        assert_eq!(&i * &i, Cyclo::from_int(-1));
    }

    #[test]
    fn cube_roots_sum_to_zero() {
        let s = Cyclo::one() + root_of_unity(3, 1).unwrap() + root_of_unity(3, 2).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn roots_basic() {
        assert_eq!(root_of_unity(1, 0).unwrap(), Cyclo::one());
        assert_eq!(root_of_unity(2, 1).unwrap(), Cyclo::from_int(-1));
        let z = root_of_unity(8, 2).unwrap();
        assert_eq!(z.conductor(), 8);
        assert_eq!(&z * &z, Cyclo::from_int(-1));
        assert_eq!(z, root_of_unity(4, 1).unwrap());
        assert_eq!(z.to_string(), "1*z{4}^{1}");
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(15).len(), 9);
    }

    #[test]
    fn inverse_and_division() {
        let x = c("1 + 2*z{5}^{1} + -1/3*z{5}^{3}");
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert_eq!(Cyclo::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn minimize_and_format() {
        let z6 = root_of_unity(6, 1).unwrap();
        assert_eq!(z6.conductor(), 3);
        let z12_4 = root_of_unity(12, 4).unwrap();
        assert_eq!(z12_4.minimized().conductor(), 3);
        assert_eq!(z12_4.to_string(), "1*z{3}^{1}");
        assert_eq!(Cyclo::from_ratio(-3, 6).to_string(), "-1/2");
        assert_eq!(Cyclo::zero().to_string(), "0");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "5/6", "-1/2 + 3*z{4}^{1}", "2*z{3}^{1}", "1 + -1*z{5}^{2} + 7/2*z{5}^{3}"] {
            let v = c(s);
            assert_eq!(v.to_string(), s);
            assert_eq!(c(&v.to_string()), v);
        }
        assert_eq!(c("z{4}^{2}"), Cyclo::from_int(-1));
        assert_eq!(c("1 - z{4}"), Cyclo::one() - root_of_unity(4, 1).unwrap());
        assert!("1/0".parse::<Cyclo>().is_err());
        assert!("abc".parse::<Cyclo>().is_err());
    }

    #[test]
    fn conductor_guard() {
        let bound = conductor_bound();
        assert!(root_of_unity(bound + 4, 1).is_err());
    }

    #[test]
    fn kernel_examples() {
        assert!(FieldMatrix::identity(2).kernel_basis().is_empty());
        let m = FieldMatrix::from_rows(vec![vec![Cyclo::one(), Cyclo::from_int(-1)]]);
        assert_eq!(m.kernel_basis(), vec![vec![Cyclo::one(), Cyclo::one()]]);
    }

    #[test]
    fn snf_examples() {
        let s = integer_smith_normal_form(&IntMatrix::identity(3));
        assert_eq!(s.invariants, vec![1, 1, 1]);
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        let s = integer_smith_normal_form(&m);
        assert_eq!(s.invariants, vec![1, 6]);
        assert_eq!(s.left.mul(&m).mul(&s.right), s.diagonal);
        let s = integer_smith_normal_form(&IntMatrix::zeros(2, 3));
        assert!(s.invariants.is_empty());
    }
}
