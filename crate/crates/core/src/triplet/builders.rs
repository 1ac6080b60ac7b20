use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{TripletCandidate, TripletError};
use crate::hopf::examples::{a8, group_algebra, trivial};
use crate::hopf::{derive_variant, HopfData, Variant};
use crate::scalar::{root_of_unity, BigRational, Cyclo, FieldMatrix};

/// The pairing on the eight-dimensional algebra with parameter t on the
/// X-block; rows and columns in basis order (1, G, H, GH, X, GX, HX, GHX).
pub fn a8_pairing(t: &BigRational) -> FieldMatrix {
    let one = |v: i64| Cyclo::from_int(v);
    let tv = |v: i64| Cyclo::from_rational(t * BigRational::from_integer(v.into()));
    let r1 = [1, 1, 1, 1];
    let r2 = [1, -1, -1, 1];
    let s1 = [1, -1, -1, 1];
    let s2 = [1, 1, 1, 1];
    let mut m = FieldMatrix::zeros(8, 8);
    for (i, row) in [r1, r2, r2, r1].iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            m.set(i, j, one(*v));
        }
    }
    for (i, row) in [s1, s2, s2, s1].iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            m.set(4 + i, 4 + j, tv(*v));
        }
    }
    m
}

pub fn build_a8(t: &BigRational) -> TripletCandidate {
    let h = a8();
    let p = a8_pairing(t);
    TripletCandidate {
        name: format!("a8_t{t}"),
        algebras: [h.clone(), h.clone(), h],
        pairings: [p.clone(), p.clone(), p],
    }
}

pub fn build_trivial() -> TripletCandidate {
    let h = trivial();
    let p = FieldMatrix::identity(1);
    TripletCandidate { name: "trivial".into(), algebras: [h.clone(), h.clone(), h], pairings: [p.clone(), p.clone(), p] }
}

/// Bicharacter pairing <g^a, g^b> = w^(e a b) on k[Z/n].
pub fn bicharacter(n: usize, e: i64) -> Result<FieldMatrix, TripletError> {
    let mut m = FieldMatrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            let k = (e * (a * b) as i64).rem_euclid(n as i64);
            m.set(a, b, root_of_unity(n as u32, k).map_err(|e| TripletError::Structure(format!("{e}")))?);
        }
    }
    Ok(m)
}

pub fn build_cyclic_bicharacter(n: usize, exps: [i64; 3]) -> Result<TripletCandidate, TripletError> {
    if n == 0 {
        return Err(TripletError::Structure("cyclic order must be positive".into()));
    }
    let h = group_algebra(n);
    Ok(TripletCandidate {
        name: format!("z{n}_{}_{}_{}", exps[0], exps[1], exps[2]),
        algebras: [h.clone(), h.clone(), h],
        pairings: [bicharacter(n, exps[0])?, bicharacter(n, exps[1])?, bicharacter(n, exps[2])?],
    })
}

/// Exponent triples in the order tried when adjusting a bicharacter triple:
/// the requested one first, then all others lexicographically.
pub fn bicharacter_exponent_order(n: usize, first: [i64; 3]) -> Vec<[i64; 3]> {
    let n = n as i64;
    let first = [first[0].rem_euclid(n), first[1].rem_euclid(n), first[2].rem_euclid(n)];
    let mut out = vec![first];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if [a, b, c] != first {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Which identity an R-matrix violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RCheck {
    pub failures: Vec<&'static str>,
    /// Leg used for f_R when the phase condition holds.
    pub phase_leg: Option<u8>,
}

/// Checks the quasi-triangular identities and the phase condition f_R(alpha^-1) = a
/// for R given as R[i*d + j] (coefficient of e_i (x) e_j).
pub fn check_r_matrix(h: &HopfData, r: &[Cyclo], alpha_inv: &[Cyclo], a: &[Cyclo]) -> RCheck {
    let d = h.dim();
    let mut failures = Vec::new();
    if r.len() != d * d {
        return RCheck { failures: vec!["shape"], phase_leg: None };
    }
    let rt = |i: usize, j: usize| &r[i * d + j];
    let nz: Vec<(usize, usize)> = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).filter(|&(i, j)| !rt(i, j).is_zero()).collect();
    // (Delta (x) id) R = R13 R23
    let mut lhs = vec![Cyclo::zero(); d * d * d];
    let mut rhs = vec![Cyclo::zero(); d * d * d];
    for &(i, j) in &nz {
        for (a, b, c) in h.cop_basis(i) {
            lhs[(a * d + b) * d + j] += &(rt(i, j) * c);
        }
    }
    for &(i, j) in &nz {
        for &(k, l) in &nz {
            let c = rt(i, j) * rt(k, l);
            for (m, v) in h.mul_basis(j, l) {
                rhs[(i * d + k) * d + m] += &(&c * v);
            }
        }
    }
    if lhs != rhs {
        failures.push("(Delta x id)R = R13 R23");
    }
    // (id (x) Delta) R = R13 R12
    let mut lhs = vec![Cyclo::zero(); d * d * d];
    let mut rhs = vec![Cyclo::zero(); d * d * d];
    for &(i, j) in &nz {
        for (a, b, c) in h.cop_basis(j) {
            lhs[(i * d + a) * d + b] += &(rt(i, j) * c);
        }
    }
    for &(i, j) in &nz {
        for &(k, l) in &nz {
            let c = rt(i, j) * rt(k, l);
            for (m, v) in h.mul_basis(i, k) {
                rhs[(m * d + l) * d + j] += &(&c * v);
            }
        }
    }
    if lhs != rhs {
        failures.push("(id x Delta)R = R13 R12");
    }
    // Delta^op(x) R = R Delta(x)
    let mut ok = true;
    for x in 0..d {
        let mut l = vec![Cyclo::zero(); d * d];
        let mut rr = vec![Cyclo::zero(); d * d];
        for (a, b, c) in h.cop_basis(x) {
            for &(i, j) in &nz {
                let k = c * rt(i, j);
                // Delta^op(x) R = (x2 e_i) (x) (x1 e_j)
                for (m, u) in h.mul_basis(*b, i) {
                    for (n, v) in h.mul_basis(*a, j) {
                        l[m * d + n] += &(&(&k * u) * v);
                    }
                }
                // R Delta(x) = (e_i x1) (x) (e_j x2)
                for (m, u) in h.mul_basis(i, *a) {
                    for (n, v) in h.mul_basis(j, *b) {
                        rr[m * d + n] += &(&(&k * u) * v);
                    }
                }
            }
        }
        if l != rr {
            ok = false;
            break;
        }
    }
    if !ok {
        failures.push("Delta^op(x) R = R Delta(x)");
    }
    // (eps (x) id) R = 1 = (id (x) eps) R
    let mut left = vec![Cyclo::zero(); d];
    let mut right = vec![Cyclo::zero(); d];
    for &(i, j) in &nz {
        left[j] += &(&h.eps()[i] * rt(i, j));
        right[i] += &(&h.eps()[j] * rt(i, j));
    }
    if left != h.eta() || right != h.eta() {
        failures.push("(eps x id)R = 1 = (id x eps)R");
    }
    // f_R(alpha^-1) = a on either leg
    let mut phase_leg = None;
    for leg in [0u8, 1] {
        let mut v = vec![Cyclo::zero(); d];
        for &(i, j) in &nz {
            if leg == 0 {
                v[j] += &(&alpha_inv[i] * rt(i, j));
            } else {
                v[i] += &(&alpha_inv[j] * rt(i, j));
            }
        }
        if v == a {
            phase_leg = Some(leg);
            break;
        }
    }
    if phase_leg.is_none() {
        failures.push("f_R(alpha^-1) = a");
    }
    RCheck { failures, phase_leg }
}

/// Candidate triple dual(h), cop(h), dual(h) from an R-matrix.
pub fn triplet_from_r_matrix(name: &str, h: &HopfData, r: &[Cyclo]) -> Result<TripletCandidate, TripletError> {
    let d = h.dim();
    let s = h.antipode_matrix();
    let sinv = s.inverse().ok_or(TripletError::Structure("antipode not invertible".into()))?;
    let sm2 = sinv.mul(&sinv);
    let pab = s.transpose();
    let pbk = FieldMatrix::identity(d);
    let mut pka = FieldMatrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            let mut acc = Cyclo::zero();
            for m in 0..d {
                let smj = s.get(m, j);
                if smj.is_zero() {
                    continue;
                }
                for n in 0..d {
                    let rv = &r[m * d + n];
                    if !rv.is_zero() {
                        acc += &(&(rv * smj) * sm2.get(n, i));
                    }
                }
            }
            pka.set(i, j, acc);
        }
    }
    let dual = derive_variant(h, Variant::Dual).map_err(TripletError::Hopf)?;
    let cop = derive_variant(h, Variant::Cop).map_err(TripletError::Hopf)?;
    Ok(TripletCandidate { name: String::from(name), algebras: [dual.clone(), cop, dual], pairings: [pab, pbk, pka] })
}
