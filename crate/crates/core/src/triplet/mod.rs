//! Drinfeld pairings, doubles, and Hopf triplets.

mod builders;
mod double;
mod pairing;
mod triangle;

#[cfg(test)]
mod tests;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use builders::{
    a8_pairing, bicharacter, bicharacter_exponent_order, build_a8, build_cyclic_bicharacter, build_trivial,
    check_r_matrix, triplet_from_r_matrix, RCheck,
};
pub use double::{build_double, cross_tensor, double_structure, embeddings, CrossTensor, DoubleAlgebra, Wiring};
pub use pairing::{check_drinfeld_pairing, check_phase_preservation, pair, PairingFailure, PairingReport, PhaseCheck};
pub use triangle::{check_triangle, check_triangle_rotation, resolve_wiring, TriangleCheck};

use crate::hopf::{AxiomReport, Hopf, HopfData, HopfError};
use crate::scalar::{Cyclo, FieldMatrix};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TripletError {
    #[error("structural error: {0}")]
    Structure(String),
    #[error(transparent)]
    Hopf(HopfError),
    #[error("double wiring unresolvable")]
    WiringUnresolvable,
    #[error("triangle rotations disagree: {0:?}")]
    RotationDisagreement([bool; 3]),
    #[error("R-matrix rejected: {0:?}")]
    RMatrix(Vec<&'static str>),
}

/// Names of the three slots, in order alpha, beta, kappa.
pub const SLOTS: [&str; 3] = ["alpha", "beta", "kappa"];
/// Names of the three pairings: alpha-beta, beta-kappa, kappa-alpha.
pub const PAIRINGS: [&str; 3] = ["ab", "bk", "ka"];

/// Unverified triplet data.
#[derive(Clone, Debug)]
pub struct TripletCandidate {
    pub name: String,
    pub algebras: [HopfData; 3],
    /// P_ab (alpha rows, beta cols), P_bk, P_ka.
    pub pairings: [FieldMatrix; 3],
}

impl TripletCandidate {
    /// Indices of (source, target) algebras of pairing k.
    pub fn pairing_ends(k: usize) -> (usize, usize) {
        (k, (k + 1) % 3)
    }
}

/// Resolved conventions recorded with every accepted triplet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TripletConventions {
    pub phase_exponents: [i8; 3],
    pub wirings: [Wiring; 3],
}

/// Verified Hopf triplet.
#[derive(Clone, Debug)]
pub struct HopfTriplet {
    pub name: String,
    pub algebras: [Hopf; 3],
    pub pairings: [FieldMatrix; 3],
    pub q: Cyclo,
    pub balanced: bool,
    pub involutory: bool,
    pub conventions: TripletConventions,
}

impl HopfTriplet {
    pub fn algebra(&self, slot: usize) -> &Hopf {
        &self.algebras[slot]
    }
}

/// Per-condition verdicts for a candidate.
#[derive(Clone, Debug)]
pub struct TripletReport {
    pub name: String,
    pub structure: Option<String>,
    pub hopf: [Option<AxiomReport>; 3],
    pub hopf_errors: [Option<String>; 3],
    pub pairings: [Option<PairingReport>; 3],
    pub phase: [Option<PhaseCheck>; 3],
    pub triangle: Option<Result<[TriangleCheck; 3], TripletError>>,
}

impl TripletReport {
    pub fn condition_a(&self) -> bool {
        self.pairings.iter().all(|p| p.as_ref().is_some_and(PairingReport::passed))
    }
    pub fn condition_b(&self) -> bool {
        self.phase.iter().all(|p| p.as_ref().is_some_and(PhaseCheck::passed))
    }
    pub fn condition_c(&self) -> bool {
        matches!(&self.triangle, Some(Ok(t)) if t.iter().all(|r| r.passed))
    }
    pub fn algebras_ok(&self) -> bool {
        self.structure.is_none() && self.hopf_errors.iter().all(Option::is_none)
    }
    pub fn accepted(&self) -> bool {
        self.algebras_ok() && self.condition_a() && self.condition_b() && self.condition_c()
    }

    /// First failed condition with a human-readable detail.
    pub fn rejection(&self) -> Option<(String, String)> {
        if let Some(s) = &self.structure {
            return Some(("structure".into(), s.clone()));
        }
        for (k, e) in self.hopf_errors.iter().enumerate() {
            if let Some(e) = e {
                return Some((format!("hopf_{}", SLOTS[k]), e.clone()));
            }
        }
        for (k, p) in self.pairings.iter().enumerate() {
            match p {
                Some(p) if !p.passed() => return Some((format!("a_{}", PAIRINGS[k]), format!("{p}"))),
                None => return Some((format!("a_{}", PAIRINGS[k]), "not checked".into())),
                _ => {}
            }
        }
        for (k, p) in self.phase.iter().enumerate() {
            match p {
                Some(p) if !p.passed() => {
                    return Some((format!("b_{}", PAIRINGS[k]), format!("witness {:?}", p.witness)))
                }
                None => return Some((format!("b_{}", PAIRINGS[k]), "not checked".into())),
                _ => {}
            }
        }
        match &self.triangle {
            Some(Ok(t)) => t.iter().find(|r| !r.passed).map(|r| ("c".into(), format!("witness {:?}", r.witness))),
            Some(Err(e)) => Some(("c".into(), format!("{e}"))),
            None => Some(("c".into(), "not checked".into())),
        }
    }
}

impl fmt::Display for TripletReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = |b: bool| if b { "pass" } else { "FAIL" };
        writeln!(f, "triplet {}", self.name)?;
        writeln!(f, "  algebras: {}", v(self.algebras_ok()))?;
        writeln!(f, "  (a) pairings: {}", v(self.condition_a()))?;
        writeln!(f, "  (b) phase: {}", v(self.condition_b()))?;
        writeln!(f, "  (c) triangle: {}", v(self.condition_c()))?;
        if let Some((c, d)) = self.rejection() {
            writeln!(f, "  rejected at {c}: {d}")?;
        }
        Ok(())
    }
}

/// Options for the triangle stage.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Resolve each double's wiring by full axiom verification.
    pub verify_doubles: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { verify_doubles: true }
    }
}

/// Runs every check, stopping a stage early only when its preconditions fail.
pub fn check_triplet(c: &TripletCandidate, opts: CheckOptions) -> (TripletReport, Option<[Hopf; 3]>) {
    let mut rep = TripletReport {
        name: c.name.clone(),
        structure: None,
        hopf: [None, None, None],
        hopf_errors: [None, None, None],
        pairings: [None, None, None],
        phase: [None, None, None],
        triangle: None,
    };
    for k in 0..3 {
        let (s, t) = TripletCandidate::pairing_ends(k);
        let p = &c.pairings[k];
        if p.rows() != c.algebras[s].dim() || p.cols() != c.algebras[t].dim() {
            rep.structure = Some(format!(
                "pairing {} is {}x{} but algebras have dims {} and {}",
                PAIRINGS[k],
                p.rows(),
                p.cols(),
                c.algebras[s].dim(),
                c.algebras[t].dim()
            ));
            return (rep, None);
        }
    }
    let mut hopfs = Vec::with_capacity(3);
    for k in 0..3 {
        let report = crate::hopf::check_hopf_axioms(&c.algebras[k]);
        let ok = report.all_passed();
        rep.hopf[k] = Some(report);
        if !ok {
            rep.hopf_errors[k] = Some("axioms fail".into());
            continue;
        }
        match Hopf::from_verified(c.algebras[k].clone()) {
            Ok(h) => hopfs.push(h),
            Err(e) => rep.hopf_errors[k] = Some(format!("{e}")),
        }
    }
    if hopfs.len() != 3 {
        return (rep, None);
    }
    let hopfs: [Hopf; 3] = match hopfs.try_into() {
        Ok(h) => h,
        Err(_) => return (rep, None),
    };
    for k in 0..3 {
        let (s, t) = TripletCandidate::pairing_ends(k);
        let pr = check_drinfeld_pairing(hopfs[s].data(), hopfs[t].data(), &c.pairings[k], hopfs[t].s_inv());
        let ok = pr.passed();
        rep.pairings[k] = Some(pr);
        if ok {
            rep.phase[k] = Some(check_phase_preservation(&c.pairings[k], hopfs[s].phase(), hopfs[t].phase()));
        }
    }
    if rep.condition_a() && rep.condition_b() {
        let algs = [hopfs[0].data(), hopfs[1].data(), hopfs[2].data()];
        let ps = [&c.pairings[0], &c.pairings[1], &c.pairings[2]];
        rep.triangle = Some(check_triangle(algs, ps, opts.verify_doubles));
    }
    (rep, Some(hopfs))
}

#[derive(Clone, Debug, thiserror::Error)]
#[error("triplet rejected at {condition}: {detail}")]
pub struct Rejection {
    pub condition: String,
    pub detail: String,
    pub report: alloc::boxed::Box<TripletReport>,
}

pub fn assemble_triplet(c: TripletCandidate) -> Result<HopfTriplet, Rejection> {
    assemble_triplet_with(c, CheckOptions::default())
}

pub fn assemble_triplet_with(c: TripletCandidate, opts: CheckOptions) -> Result<HopfTriplet, Rejection> {
    let (rep, hopfs) = check_triplet(&c, opts);
    let reject = |rep: TripletReport| {
        let (condition, detail) = rep.rejection().unwrap_or_else(|| ("phase".into(), "q is not +-1".into()));
        Rejection { condition, detail, report: alloc::boxed::Box::new(rep) }
    };
    let hopfs = match hopfs {
        Some(h) if rep.accepted() => h,
        _ => return Err(reject(rep)),
    };
    let q = hopfs[0].q().clone();
    let q_ok = hopfs.iter().all(|h| h.q() == &q) && (&q * &q).is_one();
    if !q_ok {
        let mut rep = rep;
        rep.structure = Some("phases differ or q^2 != 1".into());
        return Err(reject(rep));
    }
    let phase_exponents = [0, 1, 2].map(|k| rep.phase[k].as_ref().and_then(|p| p.exponent).unwrap_or(1));
    let wirings = match &rep.triangle {
        Some(Ok(t)) => [t[0].wiring, t[1].wiring, t[2].wiring],
        _ => [Wiring::DEFAULT; 3],
    };
    let balanced = hopfs.iter().all(Hopf::is_balanced);
    let involutory = hopfs.iter().all(Hopf::is_involutory);
    Ok(HopfTriplet {
        name: c.name,
        algebras: hopfs,
        pairings: c.pairings,
        q,
        balanced,
        involutory,
        conventions: TripletConventions { phase_exponents, wirings },
    })
}

/// Checks R, then assembles dual(h), cop(h), dual(h) with the induced pairings.
pub fn build_from_quasitriangular(name: &str, h: &HopfData, r: &[Cyclo]) -> Result<TripletCandidate, TripletError> {
    let hv = Hopf::new(h.clone()).map_err(TripletError::Hopf)?;
    let rc = check_r_matrix(h, r, &hv.phase().alpha_inv, hv.a());
    if !rc.failures.is_empty() {
        return Err(TripletError::RMatrix(rc.failures));
    }
    triplet_from_r_matrix(name, h, r)
}
