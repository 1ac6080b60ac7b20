use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::TripletError;
use crate::hopf::{check_hopf_axioms, check_morphism, HopfData};
use crate::scalar::{Cyclo, FieldMatrix};

/// Wiring of the cross-relation tensor U(h (x) g) = sum g2 (x) h2 times two
/// pairing factors. `legs` picks which outer legs meet:
/// 0: <g1,h1><g3,S^e h3>, 1: <g3,h1><g1,S^e h3>,
/// 2: <g1,S^e h1><g3,h3>, 3: <g3,S^e h1><g1,h3>.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Wiring {
    pub legs: u8,
    pub exponent: i8,
}

impl Wiring {
    pub const DEFAULT: Wiring = Wiring { legs: 0, exponent: -1 };

    /// Candidates in the order they are tried.
    pub fn candidates() -> Vec<Wiring> {
        let mut out = vec![Wiring::DEFAULT];
        for legs in 0..4u8 {
            for exponent in [-1i8, 1] {
                let w = Wiring { legs, exponent };
                if w != Wiring::DEFAULT {
                    out.push(w);
                }
            }
        }
        out
    }
}

impl core::fmt::Display for Wiring {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "legs{}/S^{}", self.legs, self.exponent)
    }
}

/// Sparse U: for each (h, g), the terms (g', h', coeff) of U(h (x) g).
#[derive(Clone, Debug)]
pub struct CrossTensor {
    pub dim_g: usize,
    pub dim_h: usize,
    terms: Vec<Vec<(usize, usize, Cyclo)>>,
}

impl CrossTensor {
    pub fn terms(&self, h: usize, g: usize) -> &[(usize, usize, Cyclo)] {
        &self.terms[h * self.dim_g + g]
    }
}

fn antipode_power(h: &HopfData, e: i8) -> Result<FieldMatrix, TripletError> {
    let s = h.antipode_matrix();
    let base = if e < 0 { s.inverse().ok_or(TripletError::Structure("antipode not invertible".into()))? } else { s };
    let mut m = FieldMatrix::identity(h.dim());
    for _ in 0..e.unsigned_abs() {
        m = m.mul(&base);
    }
    Ok(m)
}

pub fn cross_tensor(g: &HopfData, h: &HopfData, p: &FieldMatrix, w: Wiring) -> Result<CrossTensor, TripletError> {
    let (dg, dh) = (g.dim(), h.dim());
    let sp = antipode_power(h, w.exponent)?;
    // ps[c][z] = <g_c, S^e h_z>
    let ps = p.mul(&sp.transpose());
    let d3g: Vec<_> = (0..dg).map(|i| g.cop3_basis(i)).collect();
    let d3h: Vec<_> = (0..dh).map(|i| h.cop3_basis(i)).collect();
    let mut terms = Vec::with_capacity(dg * dh);
    let mut acc = vec![Cyclo::zero(); dg * dh];
    for hi in 0..dh {
        for gi in 0..dg {
            for (a, b, c, cg) in &d3g[gi] {
                for (x, y, z, ch) in &d3h[hi] {
                    let f = match w.legs {
                        0 => p.get(*a, *x) * ps.get(*c, *z),
                        1 => p.get(*c, *x) * ps.get(*a, *z),
                        2 => ps.get(*a, *x) * p.get(*c, *z),
                        _ => ps.get(*c, *x) * p.get(*a, *z),
                    };
                    if f.is_zero() {
                        continue;
                    }
                    acc[b * dh + y] += &(&(cg * ch) * &f);
                }
            }
            let mut t = Vec::new();
            for (k, v) in acc.iter_mut().enumerate() {
                if !v.is_zero() {
                    t.push((k / dh, k % dh, core::mem::take(v)));
                }
            }
            terms.push(t);
        }
    }
    Ok(CrossTensor { dim_g: dg, dim_h: dh, terms })
}

/// The double with its resolved wiring. Basis index of g (x) h is g*dim_h + h.
#[derive(Clone, Debug)]
pub struct DoubleAlgebra {
    pub data: HopfData,
    pub wiring: Wiring,
    pub dim_g: usize,
    pub dim_h: usize,
}

/// Structure of the double for a given wiring, without verification.
pub fn double_structure(g: &HopfData, h: &HopfData, p: &FieldMatrix, w: Wiring) -> Result<HopfData, TripletError> {
    let (dg, dh) = (g.dim(), h.dim());
    let n = dg * dh;
    let u = cross_tensor(g, h, p, w)?;
    let mut m = vec![Cyclo::zero(); n * n * n];
    // (g (x) h)(g' (x) h') = g U(h (x) g') h'
    for g1 in 0..dg {
        for h1 in 0..dh {
            for g2 in 0..dg {
                for (b, y, c) in u.terms(h1, g2) {
                    for (gg, cm) in g.mul_basis(g1, *b) {
                        let k = c * cm;
                        for h2 in 0..dh {
                            for (hh, cn) in h.mul_basis(*y, h2) {
                                let idx = ((g1 * dh + h1) * n + g2 * dh + h2) * n + gg * dh + hh;
                                m[idx] += &(&k * cn);
                            }
                        }
                    }
                }
            }
        }
    }
    let mut eta = vec![Cyclo::zero(); n];
    let mut eps = vec![Cyclo::zero(); n];
    let mut delta = vec![Cyclo::zero(); n * n * n];
    for gi in 0..dg {
        for hi in 0..dh {
            let i = gi * dh + hi;
            eta[i] = &g.eta()[gi] * &h.eta()[hi];
            eps[i] = &g.eps()[gi] * &h.eps()[hi];
            for (a, b, c1) in g.cop_basis(gi) {
                for (x, y, c2) in h.cop_basis(hi) {
                    delta[(i * n + a * dh + x) * n + b * dh + y] = c1 * c2;
                }
            }
        }
    }
    // S(g (x) h) = S(h) S(g) = U(S h (x) S g)
    let (sg, sh) = (g.antipode_matrix(), h.antipode_matrix());
    let mut s = vec![Cyclo::zero(); n * n];
    for gi in 0..dg {
        for hi in 0..dh {
            let i = gi * dh + hi;
            for a in 0..dh {
                let x = sh.get(hi, a);
                if x.is_zero() {
                    continue;
                }
                for b in 0..dg {
                    let y = sg.get(gi, b);
                    if y.is_zero() {
                        continue;
                    }
                    let k = x * y;
                    for (c, d, v) in u.terms(a, b) {
                        s[i * n + c * dh + d] += &(&k * v);
                    }
                }
            }
        }
    }
    let basis = g
        .basis()
        .iter()
        .flat_map(|bg| h.basis().iter().map(move |bh| format!("{bg}|{bh}")))
        .collect();
    HopfData::new(basis, m, eta, delta, eps, s).map_err(TripletError::Hopf)
}

/// Embeddings g -> g (x) 1 and h -> 1 (x) h as matrices.
pub fn embeddings(g: &HopfData, h: &HopfData) -> (FieldMatrix, FieldMatrix) {
    let (dg, dh) = (g.dim(), h.dim());
    let n = dg * dh;
    let mut eg = FieldMatrix::zeros(dg, n);
    let mut eh = FieldMatrix::zeros(dh, n);
    for gi in 0..dg {
        for hi in 0..dh {
            let hv = &h.eta()[hi];
            if !hv.is_zero() {
                eg.set(gi, gi * dh + hi, hv.clone());
            }
        }
    }
    for hi in 0..dh {
        for gi in 0..dg {
            let gv = &g.eta()[gi];
            if !gv.is_zero() {
                eh.set(hi, gi * dh + hi, gv.clone());
            }
        }
    }
    (eg, eh)
}

/// Tries the wirings in order and returns the first whose double satisfies
/// every Hopf axiom with both embeddings Hopf morphisms.
pub fn build_double(g: &HopfData, h: &HopfData, p: &FieldMatrix) -> Result<DoubleAlgebra, TripletError> {
    if p.rows() != g.dim() || p.cols() != h.dim() {
        return Err(TripletError::Structure("pairing shape does not match algebras".into()));
    }
    let (eg, eh) = embeddings(g, h);
    for w in Wiring::candidates() {
        let data = match double_structure(g, h, p, w) {
            Ok(d) => d,
            Err(_) => continue,
        };
        if !check_hopf_axioms(&data).all_passed() {
            continue;
        }
        if check_morphism(g, &data, &eg).is_empty() && check_morphism(h, &data, &eh).is_empty() {
            return Ok(DoubleAlgebra { data, wiring: w, dim_g: g.dim(), dim_h: h.dim() });
        }
    }
    Err(TripletError::WiringUnresolvable)
}
