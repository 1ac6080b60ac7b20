use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::hopf::{dot, HopfData, PhaseData};
use crate::scalar::{Cyclo, FieldMatrix};

/// One failed pairing identity with the basis indices exhibiting it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingFailure {
    pub identity: &'static str,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairingReport {
    pub failures: Vec<PairingFailure>,
}

impl PairingReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for PairingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return f.write_str("pass");
        }
        for (k, x) in self.failures.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{} at {:?}", x.identity, x.witness)?;
        }
        Ok(())
    }
}

const CAP: usize = 8;

fn push(r: &mut PairingReport, identity: &'static str, w: &[usize]) {
    if r.failures.iter().filter(|f| f.identity == identity).count() < CAP {
        r.failures.push(PairingFailure { identity, witness: w.to_vec() });
    }
}

/// Checks that P (rows: basis of g, cols: basis of h) is a Drinfeld pairing:
/// <x x', y> = <x, y1><x', y2>, <x, y y'> = <x1, y'><x2, y>,
/// <1, y> = eps(y), <x, 1> = eps(x), <S x, y> = <x, S^-1 y>.
pub fn check_drinfeld_pairing(g: &HopfData, h: &HopfData, p: &FieldMatrix, h_s_inv: &FieldMatrix) -> PairingReport {
    let (dg, dh) = (g.dim(), h.dim());
    let mut r = PairingReport::default();
    if p.rows() != dg || p.cols() != dh {
        push(&mut r, "shape", &[p.rows(), p.cols()]);
        return r;
    }
    for i in 0..dg {
        for j in 0..dg {
            for k in 0..dh {
                let mut lhs = Cyclo::zero();
                for (m, c) in g.mul_basis(i, j) {
                    lhs += &(c * p.get(*m, k));
                }
                let mut rhs = Cyclo::zero();
                for (a, b, c) in h.cop_basis(k) {
                    let x = p.get(i, *a);
                    let y = p.get(j, *b);
                    if !x.is_zero() && !y.is_zero() {
                        rhs += &(&(c * x) * y);
                    }
                }
                if lhs != rhs {
                    push(&mut r, "product_source", &[i, j, k]);
                }
            }
        }
    }
    for i in 0..dh {
        for j in 0..dh {
            for k in 0..dg {
                let mut lhs = Cyclo::zero();
                for (m, c) in h.mul_basis(i, j) {
                    lhs += &(c * p.get(k, *m));
                }
                let mut rhs = Cyclo::zero();
                for (a, b, c) in g.cop_basis(k) {
                    let x = p.get(*a, j);
                    let y = p.get(*b, i);
                    if !x.is_zero() && !y.is_zero() {
                        rhs += &(&(c * x) * y);
                    }
                }
                if lhs != rhs {
                    push(&mut r, "product_target", &[k, i, j]);
                }
            }
        }
    }
    let unit_g = p.vec_mul(g.eta());
    for (j, v) in unit_g.iter().enumerate() {
        if v != &h.eps()[j] {
            push(&mut r, "unit_source", &[j]);
        }
    }
    let unit_h = p.mul_vec(h.eta());
    for (i, v) in unit_h.iter().enumerate() {
        if v != &g.eps()[i] {
            push(&mut r, "unit_target", &[i]);
        }
    }
    let lhs = g.antipode_matrix().mul(p);
    let rhs = p.mul(&h_s_inv.transpose());
    for i in 0..dg {
        for j in 0..dh {
            if lhs.get(i, j) != rhs.get(i, j) {
                push(&mut r, "antipode", &[i, j]);
            }
        }
    }
    r
}

/// Result of the phase-preservation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseCheck {
    /// Exponent s with <a_G, -> = alpha_H^s and <-, a_H> = alpha_G^s, if any.
    pub exponent: Option<i8>,
    /// q_G q_H = 1.
    pub phases_inverse: bool,
    pub witness: Vec<usize>,
}

impl PhaseCheck {
    pub fn passed(&self) -> bool {
        self.exponent.is_some() && self.phases_inverse
    }
}

pub fn check_phase_preservation(p: &FieldMatrix, pg: &PhaseData, ph: &PhaseData) -> PhaseCheck {
    let mut witness = Vec::new();
    let mut exponent = None;
    for s in [1i8, -1] {
        let (ah, ag) = if s == 1 { (&ph.alpha, &pg.alpha) } else { (&ph.alpha_inv, &pg.alpha_inv) };
        let row = p.vec_mul(&pg.a);
        let col = p.mul_vec(&ph.a);
        let bad_row = row.iter().zip(ah.iter()).position(|(x, y)| x != y);
        let bad_col = col.iter().zip(ag.iter()).position(|(x, y)| x != y);
        match (bad_row, bad_col) {
            (None, None) => {
                exponent = Some(s);
                witness.clear();
                break;
            }
            (Some(j), _) if witness.is_empty() => witness = vec![0, j],
            (None, Some(i)) if witness.is_empty() => witness = vec![1, i],
            _ => {}
        }
    }
    let phases_inverse = (&pg.q * &ph.q).is_one();
    PhaseCheck { exponent, phases_inverse, witness }
}

/// <x, y> for arbitrary elements.
pub fn pair(p: &FieldMatrix, x: &[Cyclo], y: &[Cyclo]) -> Cyclo {
    dot(&p.vec_mul(x), y)
}
