//! Combing-free state sum for involutory triplets and the closed-manifold
//! relation against the combed invariant.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use core::fmt;

use super::{iterated_coproduct, Evaluator, InvariantError};
use crate::diagram::{euler_characteristic, CombedDiagram};
use crate::scalar::Cyclo;
use crate::tensor::{Leg, Tensor, TensorNetwork};
use crate::triplet::HopfTriplet;

/// Contraction with e_R on every curve and, at each crossing, the pairing
/// preceded by S on the first leg exactly when the crossing is negative.
/// Rotation numbers and partial rotations are never read.
pub fn semisimple_state_sum(t: &HopfTriplet, d: &CombedDiagram, budget: usize) -> Result<Cyclo, InvariantError> {
    if !t.involutory {
        return Err(InvariantError::InvalidDiagram(format!("triplet {} is not involutory", t.name)));
    }
    let mut net = TensorNetwork::new();
    let mut nodes = BTreeMap::new();
    for c in &d.curves {
        let h = &t.algebras[c.family.index()];
        let data = iterated_coproduct(h.data(), h.e_r(), c.crossings.len());
        let legs = c.crossings.iter().map(|x| Leg::output(x, h.dim())).collect();
        nodes.insert(c.id.as_str(), (net.add_node(Tensor::new(legs, data)?), c.family.index()));
    }
    for x in &d.crossings {
        let (na, slot) = *nodes.get(x.a.as_str()).ok_or_else(|| InvariantError::InvalidDiagram(x.a.clone()))?;
        let (nb, _) = *nodes.get(x.b.as_str()).ok_or_else(|| InvariantError::InvalidDiagram(x.b.clone()))?;
        let p = &t.pairings[slot];
        let m = if x.sign < 0 { t.algebras[slot].s().mul(p) } else { p.clone() };
        let nx = net.add_node(Tensor::new(vec![Leg::input("a", m.rows()), Leg::input("b", m.cols())], m.data().to_vec())?);
        net.connect(na, &x.id, nx, "a")?;
        net.connect(nb, &x.id, nx, "b")?;
    }
    Ok(net.contract(budget)?.0.as_scalar().cloned().unwrap_or_else(Cyclo::zero))
}

/// c * zeta^r with zeta^3 = `zeta_cubed` and 0 <= r < 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaPower {
    pub coeff: Cyclo,
    pub r: u8,
    pub zeta_cubed: Cyclo,
}

impl ZetaPower {
    /// zeta^n times c, reduced to normal form.
    pub fn new(c: Cyclo, n: i64, zeta_cubed: Cyclo) -> Result<ZetaPower, InvariantError> {
        let (m, r) = (n.div_euclid(3), n.rem_euclid(3));
        Ok(ZetaPower { coeff: &c * &zeta_cubed.pow(m)?, r: r as u8, zeta_cubed })
    }

    /// Whether x equals this formal value for some cube root zeta. For r > 0
    /// only the cube of each side is determined, so the test is x^3 = c^3 P^r.
    pub fn matches(&self, x: &Cyclo) -> bool {
        if self.r == 0 {
            return *x == self.coeff;
        }
        let lhs = x * &(x * x);
        let mut rhs = &self.coeff * &(&self.coeff * &self.coeff);
        for _ in 0..self.r {
            rhs = &rhs * &self.zeta_cubed;
        }
        lhs == rhs
    }
}

impl fmt::Display for ZetaPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.r {
            0 => write!(f, "{}", self.coeff),
            r => write!(f, "({}) * zeta^{r}", self.coeff),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ClosedRelation {
    pub tau: Cyclo,
    /// Combing-free state sum Z.
    pub state_sum: Cyclo,
    /// zeta^(-g) Z.
    pub tau_zeta: ZetaPower,
    /// zeta^(chi - 2) tau_zeta, to compare against `tau`.
    pub predicted: ZetaPower,
    pub holds: bool,
}

/// Checks tau(Y) = zeta^(chi(Y) - 2) tau_zeta(Y) with tau_zeta = zeta^(-g) Z,
/// where Y is the closed manifold obtained by capping (p = 0, b = 1) and
/// chi(Y) = chi(X) + 1.
pub fn closed_relation(t: &HopfTriplet, d: &CombedDiagram) -> Result<ClosedRelation, InvariantError> {
    let tt = &d.type_tuple;
    if tt.p != 0 || tt.b != 1 {
        return Err(InvariantError::InvalidDiagram(format!("closed relation needs p = 0 and b = 1, got {tt}")));
    }
    let ev = Evaluator::new(t);
    let st = ev.stabilization_brackets()?;
    let tau = ev.tau_with(d, &st)?.raw;
    let zc = &(&st.values[0] * &st.values[1]) * &st.values[2];
    let state_sum = semisimple_state_sum(t, d, ev.options.budget)?;
    let g = i64::from(tt.g);
    let chi_y = euler_characteristic(tt) + 1;
    let tau_zeta = ZetaPower::new(state_sum.clone(), -g, zc.clone())?;
    let predicted = ZetaPower::new(state_sum.clone(), chi_y - 2 - g, zc)?;
    let holds = predicted.matches(&tau);
    Ok(ClosedRelation { tau, state_sum, tau_zeta, predicted, holds })
}
