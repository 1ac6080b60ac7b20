use alloc::vec;
use alloc::vec::Vec;

use super::double::{build_double, cross_tensor, Wiring};
use super::TripletError;
use crate::hopf::{derive_variant, HopfData, Variant};
use crate::scalar::{Cyclo, FieldMatrix};

/// Outcome of one rotation of the triangle check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleCheck {
    pub passed: bool,
    pub wiring: Wiring,
    /// (y, x, k) of the first mismatch.
    pub witness: Option<[usize; 3]>,
}

/// Phi(x (x) y) as a functional on hk: phi[(x*db + y)*dk + k].
fn phi_tensor(hk: &HopfData, pbk: &FieldMatrix, pka: &FieldMatrix) -> (Vec<Cyclo>, usize, usize) {
    let da = pka.cols();
    let db = pbk.rows();
    let dk = hk.dim();
    let s = hk.antipode_matrix();
    // q[a][x] = <S^2 k_a, x>
    let q = s.mul(&s).mul(pka);
    let mut phi = vec![Cyclo::zero(); da * db * dk];
    for k in 0..dk {
        for (a, b, c) in hk.cop_basis(k) {
            for x in 0..da {
                let qa = q.get(*a, x);
                if qa.is_zero() {
                    continue;
                }
                let cq = c * qa;
                for y in 0..db {
                    let pb = pbk.get(y, *b);
                    if !pb.is_zero() {
                        phi[(x * db + y) * dk + k] += &(&cq * pb);
                    }
                }
            }
        }
    }
    (phi, da, db)
}

/// Checks Phi(y x) = Phi(y) Phi(x) for the double of ha^op and hb^cop.
pub fn check_triangle_rotation(
    ha: &HopfData,
    hb: &HopfData,
    hk: &HopfData,
    pab: &FieldMatrix,
    pbk: &FieldMatrix,
    pka: &FieldMatrix,
    wiring: Wiring,
) -> Result<TriangleCheck, TripletError> {
    let g = derive_variant(ha, Variant::Op).map_err(TripletError::Hopf)?;
    let h = derive_variant(hb, Variant::Cop).map_err(TripletError::Hopf)?;
    let u = cross_tensor(&g, &h, pab, wiring)?;
    let (phi, da, db) = phi_tensor(hk, pbk, pka);
    let dk = hk.dim();
    let at = |x: usize, y: usize, k: usize| &phi[(x * db + y) * dk + k];
    // images of y = 1 (x) y and x = x (x) 1
    let mut py = vec![Cyclo::zero(); db * dk];
    let mut px = vec![Cyclo::zero(); da * dk];
    for k in 0..dk {
        for y in 0..db {
            for (x, e) in ha.eta().iter().enumerate() {
                if !e.is_zero() {
                    py[y * dk + k] += &(e * at(x, y, k));
                }
            }
        }
        for x in 0..da {
            for (y, e) in hb.eta().iter().enumerate() {
                if !e.is_zero() {
                    px[x * dk + k] += &(e * at(x, y, k));
                }
            }
        }
    }
    for y in 0..db {
        for x in 0..da {
            for k in 0..dk {
                let mut lhs = Cyclo::zero();
                for (xx, yy, c) in u.terms(y, x) {
                    let v = at(*xx, *yy, k);
                    if !v.is_zero() {
                        lhs += &(c * v);
                    }
                }
                let mut rhs = Cyclo::zero();
                for (a, b, c) in hk.cop_basis(k) {
                    let f = &py[y * dk + a];
                    let g = &px[x * dk + b];
                    if !f.is_zero() && !g.is_zero() {
                        rhs += &(&(c * f) * g);
                    }
                }
                if lhs != rhs {
                    return Ok(TriangleCheck { passed: false, wiring, witness: Some([y, x, k]) });
                }
            }
        }
    }
    Ok(TriangleCheck { passed: true, wiring, witness: None })
}

/// Wiring of the double of ha^op and hb^cop, resolved by full verification.
pub fn resolve_wiring(ha: &HopfData, hb: &HopfData, pab: &FieldMatrix) -> Result<Wiring, TripletError> {
    let g = derive_variant(ha, Variant::Op).map_err(TripletError::Hopf)?;
    let h = derive_variant(hb, Variant::Cop).map_err(TripletError::Hopf)?;
    Ok(build_double(&g, &h, pab)?.wiring)
}

/// Runs the three cyclic rotations. Returns the per-rotation results; a
/// disagreement among them is reported as a convention error.
pub fn check_triangle(
    algebras: [&HopfData; 3],
    pairings: [&FieldMatrix; 3],
    verify_doubles: bool,
) -> Result<[TriangleCheck; 3], TripletError> {
    let [a, b, k] = algebras;
    let [pab, pbk, pka] = pairings;
    let rotations = [(a, b, k, pab, pbk, pka), (b, k, a, pbk, pka, pab), (k, a, b, pka, pab, pbk)];
    let mut out = Vec::with_capacity(3);
    for (x, y, z, p1, p2, p3) in rotations {
        let w = if verify_doubles { resolve_wiring(x, y, p1)? } else { Wiring::DEFAULT };
        out.push(check_triangle_rotation(x, y, z, p1, p2, p3, w)?);
    }
    if !(out[0].passed == out[1].passed && out[1].passed == out[2].passed) {
        return Err(TripletError::RotationDisagreement([out[0].passed, out[1].passed, out[2].passed]));
    }
    let mut it = out.into_iter();
    Ok([it.next().expect("3"), it.next().expect("3"), it.next().expect("3")])
}
