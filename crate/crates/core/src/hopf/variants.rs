use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::data::HopfData;
use super::HopfError;
use crate::scalar::{Cyclo, FieldMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Dual,
    Op,
    Cop,
}

fn dual_label(s: &str) -> String {
    match s.strip_suffix('*') {
        Some(base) => base.into(),
        None => format!("{s}*"),
    }
}

pub fn antipode_inverse(h: &HopfData) -> Result<FieldMatrix, HopfError> {
    h.antipode_matrix().inverse().ok_or(HopfError::AntipodeNotInvertible)
}

/// Dual, opposite, or co-opposite Hopf algebra on the same index set.
pub fn derive_variant(h: &HopfData, which: Variant) -> Result<HopfData, HopfError> {
    let d = h.dim();
    let idx = |i: usize, j: usize, k: usize| (i * d + j) * d + k;
    match which {
        Variant::Dual => {
            let mut m = Vec::with_capacity(d * d * d);
            let mut delta = Vec::with_capacity(d * d * d);
            for a in 0..d {
                for b in 0..d {
                    for c in 0..d {
                        m.push(h.delta()[idx(c, a, b)].clone());
                        delta.push(h.m()[idx(b, c, a)].clone());
                    }
                }
            }
            let s = h.antipode_matrix().transpose().data().to_vec();
            let basis = h.basis().iter().map(|b| dual_label(b)).collect();
            HopfData::new(basis, m, h.eps().to_vec(), delta, h.eta().to_vec(), s)
        }
        Variant::Op => {
            let sinv = antipode_inverse(h)?;
            let mut m = Vec::with_capacity(d * d * d);
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        m.push(h.m()[idx(j, i, k)].clone());
                    }
                }
            }
            HopfData::new(
                h.basis().to_vec(),
                m,
                h.eta().to_vec(),
                h.delta().to_vec(),
                h.eps().to_vec(),
                sinv.data().to_vec(),
            )
        }
        Variant::Cop => {
            let sinv = antipode_inverse(h)?;
            let mut delta = Vec::with_capacity(d * d * d);
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        delta.push(h.delta()[idx(i, k, j)].clone());
                    }
                }
            }
            HopfData::new(
                h.basis().to_vec(),
                h.m().to_vec(),
                h.eta().to_vec(),
                delta,
                h.eps().to_vec(),
                sinv.data().to_vec(),
            )
        }
    }
}

/// Structure transported along an invertible linear map: the result has
/// basis phi(e_i) expressed back in the original coordinates, i.e. the
/// unique algebra making phi a Hopf isomorphism from h.
pub fn transport(h: &HopfData, phi: &FieldMatrix) -> Result<HopfData, HopfError> {
    let d = h.dim();
    let inv = phi.inverse().ok_or(HopfError::Structure("transport map is singular".into()))?;
    // new e_i e_j = phi(phi^-1(e_i) phi^-1(e_j))
    let pre: Vec<Vec<Cyclo>> = (0..d).map(|i| inv.row(i).to_vec()).collect();
    let mut m = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            m.extend(phi.vec_mul(&h.mul(&pre[i], &pre[j])));
        }
    }
    let eta = phi.vec_mul(h.eta());
    let mut delta = Vec::with_capacity(d * d * d);
    let pt = phi.transpose();
    for p in pre.iter() {
        let c = h.cop(p);
        // (phi (x) phi) c = phi^T c phi in matrix form
        let cm = FieldMatrix::from_flat(d, d, c);
        delta.extend(pt.mul(&cm).mul(phi).data().iter().cloned());
    }
    let eps: Vec<Cyclo> = pre.iter().map(|p| h.counit(p)).collect();
    let smat = h.antipode_matrix();
    let s = inv.mul(&smat).mul(phi).data().to_vec();
    HopfData::new(h.basis().to_vec(), m, eta, delta, eps, s)
}
