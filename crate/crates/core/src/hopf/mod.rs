//! Finite-dimensional Hopf algebras given by structure constants.

mod axioms;
mod data;
pub mod examples;
mod integrals;
mod variants;

#[cfg(test)]
mod tests;

use alloc::string::String;
use alloc::vec::Vec;

pub use axioms::{check_hopf_axioms, check_morphism, Axiom, AxiomCheck, AxiomReport};
pub use data::{dot, scale, HopfData, StructureArray, Vector};
pub use integrals::{
    a_power, alpha_power, cointegral_on_side, compute_phase_data, conjugation_matrix, integral_theta,
    is_left_cointegral, is_left_integral, is_right_cointegral, is_right_integral, resolve_cointegral_side,
    resolve_tilt, solve_integrals, tilt_fixes, tilt_matrix, GeneralizedCointegral, IntegralKind, Integrals, LegSide,
    PhaseData, TiltOrder,
};
pub use variants::{antipode_inverse, derive_variant, transport, Variant};

use crate::scalar::{Cyclo, FieldMatrix};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("structural error: {0}")]
    Structure(String),
    #[error("axioms fail:\n{0}")]
    Axioms(AxiomReport),
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
    #[error("{which} space has dimension {dim}; not a Hopf algebra over a field / internal inconsistency")]
    IntegralDimension { which: &'static str, dim: usize },
    #[error("u_R(e_R) = 0; cannot normalize")]
    CannotNormalize,
    #[error("{0}/2 is not a proper half-integer")]
    NotHalfInteger(i64),
    #[error("convention error: {0}")]
    Convention(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// Resolved convention choices for one algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conventions {
    pub cointegral_side: LegSide,
    pub tilt_order: TiltOrder,
}

/// A Hopf algebra whose axioms have been verified, with all derived data.
#[derive(Clone, Debug)]
pub struct Hopf {
    data: HopfData,
    s: FieldMatrix,
    s_inv: FieldMatrix,
    integrals: Integrals,
    phase: PhaseData,
    e_l: Vector,
    u_l: Vector,
    tilt: FieldMatrix,
    balanced: bool,
    involutory: bool,
    conventions: Conventions,
    warnings: Vec<String>,
}

impl Hopf {
    /// Verifies the axioms, then populates integrals, phase data and tilt.
    pub fn new(data: HopfData) -> Result<Hopf, HopfError> {
        let report = check_hopf_axioms(&data);
        if !report.all_passed() {
            return Err(HopfError::Axioms(report));
        }
        Hopf::from_verified(data)
    }

    /// Populates derived data for structure already known to satisfy the axioms.
    pub fn from_verified(data: HopfData) -> Result<Hopf, HopfError> {
        let s_inv = antipode_inverse(&data)?;
        let integrals = solve_integrals(&data)?;
        let phase = compute_phase_data(&data, &integrals)?;
        let side = resolve_cointegral_side(&data, &integrals, &phase)?;
        let e_l = cointegral_on_side(&data, &integrals, &phase, 1, side)?;
        let u_l = integral_theta(&data, &integrals, &phase, 1)?;
        if !is_left_integral(&data, &u_l) {
            return Err(HopfError::Convention("u_1/2 is not a left integral".into()));
        }
        let (tilt_order, tilt) = resolve_tilt(&data, &integrals, &phase, side)?;
        let balanced = tilt.is_identity();
        let s = data.antipode_matrix();
        let involutory = s.mul(&s).is_identity();
        if involutory && !balanced {
            return Err(HopfError::Internal("involutory but not balanced".into()));
        }
        let mut warnings = Vec::new();
        let semisimple = !data.counit(&integrals.e_r).is_zero();
        if semisimple != involutory {
            warnings.push(alloc::format!(
                "eps(e_R) != 0 is {semisimple} but involutory is {involutory}"
            ));
        }
        Ok(Hopf {
            data,
            s,
            s_inv,
            integrals,
            phase,
            e_l,
            u_l,
            tilt,
            balanced,
            involutory,
            conventions: Conventions { cointegral_side: side, tilt_order },
            warnings,
        })
    }

    pub fn data(&self) -> &HopfData {
        &self.data
    }
    pub fn dim(&self) -> usize {
        self.data.dim()
    }
    pub fn s(&self) -> &FieldMatrix {
        &self.s
    }
    pub fn s_inv(&self) -> &FieldMatrix {
        &self.s_inv
    }
    pub fn integrals(&self) -> &Integrals {
        &self.integrals
    }
    pub fn e_r(&self) -> &[Cyclo] {
        &self.integrals.e_r
    }
    pub fn u_r(&self) -> &[Cyclo] {
        &self.integrals.u_r
    }
    pub fn e_l(&self) -> &[Cyclo] {
        &self.e_l
    }
    pub fn u_l(&self) -> &[Cyclo] {
        &self.u_l
    }
    pub fn phase(&self) -> &PhaseData {
        &self.phase
    }
    pub fn a(&self) -> &[Cyclo] {
        &self.phase.a
    }
    pub fn alpha(&self) -> &[Cyclo] {
        &self.phase.alpha
    }
    pub fn q(&self) -> &Cyclo {
        &self.phase.q
    }
    pub fn tilt(&self) -> &FieldMatrix {
        &self.tilt
    }
    pub fn is_balanced(&self) -> bool {
        self.balanced
    }
    pub fn is_involutory(&self) -> bool {
        self.involutory
    }
    pub fn conventions(&self) -> Conventions {
        self.conventions
    }
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// S^k as a matrix in the row-vector convention.
    pub fn antipode_power(&self, k: i64) -> FieldMatrix {
        let base = if k < 0 { &self.s_inv } else { &self.s };
        let mut m = FieldMatrix::identity(self.dim());
        for _ in 0..k.unsigned_abs() {
            m = m.mul(base);
        }
        m
    }

    pub fn generalized_cointegral(&self, twice_theta: i64) -> Result<GeneralizedCointegral, HopfError> {
        let vector = cointegral_on_side(
            &self.data,
            &self.integrals,
            &self.phase,
            twice_theta,
            self.conventions.cointegral_side,
        )?;
        Ok(GeneralizedCointegral { twice_theta, vector, side: IntegralKind::Cointegral })
    }

    pub fn generalized_integral(&self, twice_theta: i64) -> Result<GeneralizedCointegral, HopfError> {
        let vector = integral_theta(&self.data, &self.integrals, &self.phase, twice_theta)?;
        Ok(GeneralizedCointegral { twice_theta, vector, side: IntegralKind::Integral })
    }

    /// Named identities relating integrals, cointegrals, phase and antipode.
    pub fn lemma_checks(&self) -> Result<Vec<(String, bool)>, HopfError> {
        let h = &self.data;
        let q_inv = self.phase.q.inv().map_err(|_| HopfError::Internal("q = 0".into()))?;
        let s = h.antipode_matrix();
        let s2 = s.mul(&s);
        let mut out: Vec<(String, bool)> = alloc::vec![
            ("u_R(e_R) = 1".into(), dot(self.u_r(), self.e_r()).is_one()),
            ("u_R(e_L) = 1".into(), dot(self.u_r(), self.e_l()).is_one()),
            ("u_L(e_R) = 1".into(), dot(self.u_l(), self.e_r()).is_one()),
            ("u_L(e_L) = q^-1".into(), dot(self.u_l(), self.e_l()) == q_inv),
            ("e_-1/2 = e_R".into(), self.generalized_cointegral(-1)?.vector == self.integrals.e_r),
            ("e_L left cointegral".into(), is_left_cointegral(h, self.e_l())),
            ("e_R right cointegral".into(), is_right_cointegral(h, self.e_r())),
            ("u_L left integral".into(), is_left_integral(h, self.u_l())),
            ("u_R right integral".into(), is_right_integral(h, self.u_r())),
            ("S(e_R) left cointegral".into(), is_left_cointegral(h, &s.vec_mul(self.e_r()))),
            ("S(e_L) right cointegral".into(), is_right_cointegral(h, &s.vec_mul(self.e_l()))),
        ];
        for tt in [-5i64, -3, -1, 1, 3, 5] {
            let e = self.generalized_cointegral(tt)?.vector;
            out.push((alloc::format!("S^2 e_{tt}/2 = q e_{tt}/2"), s2.vec_mul(&e) == scale(&e, self.q())));
            let u = self.generalized_integral(tt)?.vector;
            out.push((alloc::format!("u_{tt}/2 S^2 = q u_{tt}/2"), s2.mul_vec(&u) == scale(&u, self.q())));
        }
        let conj = conjugation_matrix(h, &self.phase, false);
        out.push(("conj(e_R) = q e_R".into(), conj.vec_mul(self.e_r()) == scale(self.e_r(), self.q())));
        out.push(("u_R conj = q u_R".into(), conj.mul_vec(self.u_r()) == scale(self.u_r(), self.q())));
        for (name, ok) in tilt_fixes(h, &self.integrals, &self.phase, self.conventions.cointegral_side, &self.tilt)? {
            out.push((alloc::format!("tilt fixes {name}"), ok));
        }
        Ok(out)
    }
}
