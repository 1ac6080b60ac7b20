//! The trisection bracket, stabilization brackets and the normalized invariant.

mod scan;
mod semisimple;

#[cfg(test)]
mod tests;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use crate::diagram::{builtin, euler_characteristic, CombedDiagram, Crossing, Family};
use crate::hopf::{HopfData, HopfError};
use crate::scalar::{Cyclo, FieldMatrix, ScalarError};
use crate::tensor::{ContractionStats, Leg, Tensor, TensorError, TensorNetwork, DEFAULT_ELEMENT_BUDGET};
use crate::triplet::HopfTriplet;

pub use scan::{named_triplet, scan_grid, scan_point, ScanFamily, ScanRow, TRIPLET_NAMES};
pub use semisimple::{closed_relation, semisimple_state_sum, ClosedRelation, ZetaPower};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("invariant undefined for this triplet: stabilization brackets {0:?} vanish")]
    Undefined(Vec<u8>),
    #[error("internal wiring bug: {0}")]
    Internal(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambiguity {
    Exact,
    UpToQ,
}

impl Ambiguity {
    pub fn name(self) -> &'static str {
        match self {
            Ambiguity::Exact => "exact",
            Ambiguity::UpToQ => "up-to-qH",
        }
    }
}

/// A scalar defined up to multiplication by q in {1, -1}. When q = -1 the
/// stored representative has a positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveScalar {
    pub value: Cyclo,
    pub ambiguity: Ambiguity,
    pub q: i8,
}

impl ProjectiveScalar {
    pub fn new(value: Cyclo, q: i8) -> Self {
        if q == 1 {
            return ProjectiveScalar { value, ambiguity: Ambiguity::Exact, q };
        }
        let value = if value.leading_sign() < 0 { -value } else { value };
        ProjectiveScalar { value, ambiguity: Ambiguity::UpToQ, q }
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Equality in k/~.
    pub fn equals(&self, o: &ProjectiveScalar) -> bool {
        if self.value == o.value {
            return true;
        }
        (self.q == -1 || o.q == -1) && self.value == -&o.value
    }

    pub fn mul(&self, o: &ProjectiveScalar) -> ProjectiveScalar {
        ProjectiveScalar::new(&self.value * &o.value, self.q.min(o.q))
    }

    pub fn pow(&self, e: i64) -> Result<ProjectiveScalar, ScalarError> {
        Ok(ProjectiveScalar::new(self.value.pow(e)?, self.q))
    }
}

impl fmt::Display for ProjectiveScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ambiguity {
            Ambiguity::Exact => write!(f, "{}", self.value),
            Ambiguity::UpToQ => write!(f, "±({})", self.value),
        }
    }
}

fn q_sign(t: &HopfTriplet) -> i8 {
    if t.q.is_one() {
        1
    } else {
        -1
    }
}

/// Exponent of a crossing read from curve `mu`: the stored value when `mu`
/// is the cyclically first curve, its negative otherwise.
pub fn crossing_exponent(x: &Crossing, mu: &str) -> Result<i64, InvariantError> {
    let e = x
        .exponent()
        .ok_or_else(|| InvariantError::InvalidDiagram(format!("exponent of {} is not an integer", x.id)))?;
    Ok(if x.a == mu { e } else { -e })
}

/// Delta^(n)(v) as a dense tensor with n legs, first leg most significant.
/// n = 0 gives the scalar eps(v).
pub fn iterated_coproduct(h: &HopfData, v: &[Cyclo], n: usize) -> Vec<Cyclo> {
    if n == 0 {
        return vec![h.counit(v)];
    }
    let d = h.dim();
    let mut cur = v.to_vec();
    for _ in 1..n {
        let mut next = vec![Cyclo::zero(); cur.len() * d];
        for (idx, c) in cur.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (prefix, last) = (idx / d, idx % d);
            for (a, b, k) in h.cop_basis(last) {
                next[(prefix * d + a) * d + b] += &(c * k);
            }
        }
        cur = next;
    }
    cur
}

const DENSE_CURVE_LEGS: usize = 3;
// Internal chain labels; a clashing crossing id fails with DuplicateLabel.
const CHAIN_IN: &str = "\u{1}in";
const CHAIN_OUT: &str = "\u{1}out";

/// Options shared by every evaluation.
#[derive(Clone, Debug)]
pub struct EvalOptions {
    pub budget: usize,
    /// Factors multiplying the cointegral of each family.
    pub scales: [Cyclo; 3],
    /// Also evaluate with the antipode power moved to the second leg.
    pub check_alternate_wiring: bool,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { budget: DEFAULT_ELEMENT_BUDGET, scales: [Cyclo::one(), Cyclo::one(), Cyclo::one()], check_alternate_wiring: false }
    }
}

#[derive(Clone, Debug)]
pub struct Bracket {
    /// Exact network value for the stored data.
    pub raw: Cyclo,
    pub value: ProjectiveScalar,
    pub stats: ContractionStats,
    /// Agreement of the two crossing wirings, when checked.
    pub alternate_agrees: Option<bool>,
}

/// Evaluator bound to one triplet, caching antipode powers and cointegrals.
pub struct Evaluator<'t> {
    pub triplet: &'t HopfTriplet,
    pub options: EvalOptions,
    powers: RefCell<BTreeMap<(usize, i64), FieldMatrix>>,
    cointegrals: RefCell<BTreeMap<(usize, i64), Vec<Cyclo>>>,
}

impl<'t> Evaluator<'t> {
    pub fn new(triplet: &'t HopfTriplet) -> Self {
        Evaluator::with_options(triplet, EvalOptions::default())
    }

    pub fn with_options(triplet: &'t HopfTriplet, options: EvalOptions) -> Self {
        Evaluator { triplet, options, powers: RefCell::new(BTreeMap::new()), cointegrals: RefCell::new(BTreeMap::new()) }
    }

    fn power(&self, slot: usize, e: i64) -> FieldMatrix {
        self.powers
            .borrow_mut()
            .entry((slot, e))
            .or_insert_with(|| self.triplet.algebras[slot].antipode_power(e))
            .clone()
    }

    /// Scaled generalized cointegral of the given family.
    pub fn cointegral(&self, slot: usize, twice_theta: i64) -> Result<Vec<Cyclo>, InvariantError> {
        if let Some(v) = self.cointegrals.borrow().get(&(slot, twice_theta)) {
            return Ok(v.clone());
        }
        let g = self.triplet.algebras[slot].generalized_cointegral(twice_theta)?;
        let c = &self.options.scales[slot];
        let v: Vec<Cyclo> = g.vector.iter().map(|x| x * c).collect();
        self.cointegrals.borrow_mut().insert((slot, twice_theta), v.clone());
        Ok(v)
    }

    /// Crossing matrix on (first-curve leg, second-curve leg): <S^e x, y>.
    pub fn crossing_matrix(&self, slot: usize, e: i64) -> FieldMatrix {
        self.power(slot, e).mul(&self.triplet.pairings[slot])
    }

    /// The same bilinear form written as <x, S^-e y>.
    pub fn crossing_matrix_alternate(&self, slot: usize, e: i64) -> FieldMatrix {
        let next = (slot + 1) % 3;
        self.triplet.pairings[slot].mul(&self.power(next, -e).transpose())
    }

    /// Tensor of one curve: Delta^(n) of its generalized cointegral, one
    /// out-leg per crossing labeled by the crossing id.
    pub fn curve_tensor(&self, d: &CombedDiagram, curve: usize) -> Result<Tensor, InvariantError> {
        let c = &d.curves[curve];
        let slot = c.family.index();
        let tt = c.total * 2;
        if !tt.is_integer() {
            return Err(InvariantError::InvalidDiagram(format!("total rotation of {} is not a half-integer", c.id)));
        }
        let e = self.cointegral(slot, tt.to_integer())?;
        let h = self.triplet.algebras[slot].data();
        let size = h.dim().checked_pow(c.crossings.len() as u32).unwrap_or(usize::MAX);
        if size > self.options.budget {
            return Err(TensorError::BudgetExceeded { step: format!("curve {}", c.id), size, budget: self.options.budget }.into());
        }
        let data = iterated_coproduct(h, &e, c.crossings.len());
        let legs = c.crossings.iter().map(|x| Leg::output(x, h.dim())).collect();
        Ok(Tensor::new(legs, data)?)
    }

    /// Adds the tensor of one curve. Curves with few crossings become a
    /// single dense node; longer ones a chain v -> Delta -> Delta -> ...
    /// whose open legs carry the crossing ids. Returns the node holding each
    /// crossing leg.
    fn add_curve(&self, net: &mut TensorNetwork, d: &CombedDiagram, curve: usize) -> Result<Vec<usize>, InvariantError> {
        let c = &d.curves[curve];
        let n = c.crossings.len();
        if n <= DENSE_CURVE_LEGS {
            let node = net.add_node(self.curve_tensor(d, curve)?);
            return Ok(vec![node; n]);
        }
        let slot = c.family.index();
        let tt = c.total * 2;
        if !tt.is_integer() {
            return Err(InvariantError::InvalidDiagram(format!("total rotation of {} is not a half-integer", c.id)));
        }
        let h = self.triplet.algebras[slot].data();
        let dim = h.dim();
        let v = net.add_node(Tensor::new(vec![Leg::output(CHAIN_OUT, dim)], self.cointegral(slot, tt.to_integer())?)?);
        let mut prev = v;
        let mut out = Vec::with_capacity(n);
        for k in 0..n - 1 {
            let rest = if k + 2 == n { c.crossings[n - 1].as_str() } else { CHAIN_OUT };
            let legs = vec![Leg::input(CHAIN_IN, dim), Leg::output(&c.crossings[k], dim), Leg::output(rest, dim)];
            let node = net.add_node(Tensor::new(legs, h.delta().to_vec())?);
            net.connect(prev, CHAIN_OUT, node, CHAIN_IN)?;
            out.push(node);
            prev = node;
        }
        out.push(prev);
        Ok(out)
    }

    fn network(&self, d: &CombedDiagram, alternate: bool) -> Result<TensorNetwork, InvariantError> {
        let mut net = TensorNetwork::new();
        let mut leg_node = BTreeMap::new();
        for (i, c) in d.curves.iter().enumerate() {
            let nodes = self.add_curve(&mut net, d, i)?;
            for (x, n) in c.crossings.iter().zip(nodes) {
                leg_node.insert((c.id.as_str(), x.as_str()), n);
            }
        }
        let family = |id: &str| d.curve(id).map(|c| c.family);
        for x in &d.crossings {
            let (na, nb, fa) = match (leg_node.get(&(x.a.as_str(), x.id.as_str())), leg_node.get(&(x.b.as_str(), x.id.as_str())), family(&x.a)) {
                (Some(a), Some(b), Some(f)) => (*a, *b, f),
                _ => return Err(InvariantError::InvalidDiagram(format!("crossing {} is not on both of its curves", x.id))),
            };
            let e = crossing_exponent(x, &x.a)?;
            let slot = fa.index();
            let m = if alternate { self.crossing_matrix_alternate(slot, e) } else { self.crossing_matrix(slot, e) };
            let t = Tensor::new(vec![Leg::input("a", m.rows()), Leg::input("b", m.cols())], m.data().to_vec())?;
            let nx = net.add_node(t);
            net.connect(na, &x.id, nx, "a")?;
            net.connect(nb, &x.id, nx, "b")?;
        }
        Ok(net)
    }

    fn contract(&self, d: &CombedDiagram, alternate: bool) -> Result<(Cyclo, ContractionStats), InvariantError> {
        let net = self.network(d, alternate)?;
        let (t, stats) = net.contract(self.options.budget)?;
        let v = t.as_scalar().cloned().ok_or_else(|| InvariantError::Internal("bracket network has open legs".into()))?;
        Ok((v, stats))
    }

    pub fn bracket(&self, d: &CombedDiagram) -> Result<Bracket, InvariantError> {
        let rep = d.validate();
        if !rep.is_valid() {
            return Err(InvariantError::InvalidDiagram(format!("{}", rep.violations[0])));
        }
        let (raw, stats) = self.contract(d, false)?;
        let alternate_agrees = if self.options.check_alternate_wiring {
            Some(self.contract(d, true)?.0 == raw)
        } else {
            None
        };
        Ok(Bracket { value: ProjectiveScalar::new(raw.clone(), q_sign(self.triplet)), raw, stats, alternate_agrees })
    }

    /// Whether S^e P = P (S^-e)^T for every family and |e| <= bound.
    pub fn wirings_agree(&self, bound: i64) -> bool {
        (0..3).all(|s| (-bound..=bound).all(|e| self.crossing_matrix(s, e) == self.crossing_matrix_alternate(s, e)))
    }

    /// Direct evaluation of the genus-one stabilization diagram j without the
    /// network engine: the first role's cointegral e_{1/2} split in two, the
    /// second role's e_{3/2}, the third role's e_{1/2}, exponents -1 and 0.
    pub fn stabilization_closed_form(&self, j: u8) -> Result<Cyclo, InvariantError> {
        let (ra, rb, rk) = match j {
            1 => (Family::Kappa, Family::Alpha, Family::Beta),
            2 => (Family::Alpha, Family::Beta, Family::Kappa),
            3 => (Family::Beta, Family::Kappa, Family::Alpha),
            _ => return Err(InvariantError::InvalidDiagram(format!("no stabilization diagram {j}"))),
        };
        let (a, b, k) = (ra.index(), rb.index(), rk.index());
        let ha = self.triplet.algebras[a].data();
        let ea = self.cointegral(a, 1)?;
        let eb = self.cointegral(b, 3)?;
        let ek = self.cointegral(k, 1)?;
        // p: <S^-1 x, y> with x on the first role, y on the second
        let mp = self.triplet.algebras[a].s_inv().mul(&self.triplet.pairings[a]);
        // q: <z, x> with z on the third role, x on the first
        let mq = &self.triplet.pairings[k];
        let left = mp.mul_vec(&eb);
        let right = mq.vec_mul(&ek);
        let mut acc = Cyclo::zero();
        for (i, c) in ea.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (x, y, v) in ha.cop_basis(i) {
                acc += &(&(&(c * v) * &left[*x]) * &right[*y]);
            }
        }
        Ok(acc)
    }

    pub fn stabilization_brackets(&self) -> Result<StabilizationBrackets, InvariantError> {
        let mut network = Vec::with_capacity(3);
        let mut closed = Vec::with_capacity(3);
        for j in 1..=3u8 {
            let d = builtin(["Tst1", "Tst2", "Tst3"][j as usize - 1]).expect("builtin");
            network.push(self.bracket(&d)?.raw);
            closed.push(self.stabilization_closed_form(j)?);
        }
        if network != closed {
            return Err(InvariantError::Internal(format!(
                "stabilization brackets disagree: network {network:?} vs closed form {closed:?}"
            )));
        }
        let values: [Cyclo; 3] = [network[0].clone(), network[1].clone(), network[2].clone()];
        Ok(StabilizationBrackets { nonzero: [0, 1, 2].map(|i| !values[i].is_zero()), values, q: q_sign(self.triplet) })
    }

    /// Normalized invariant: prod_j <T^st_j>^(-k_j) times the bracket.
    pub fn tau(&self, d: &CombedDiagram) -> Result<Tau, InvariantError> {
        let st = self.stabilization_brackets()?;
        self.tau_with(d, &st)
    }

    pub fn tau_with(&self, d: &CombedDiagram, st: &StabilizationBrackets) -> Result<Tau, InvariantError> {
        let zero: Vec<u8> = (0..3).filter(|&i| !st.nonzero[i]).map(|i| i as u8 + 1).collect();
        let br = self.bracket(d)?;
        if !zero.is_empty() {
            return Err(InvariantError::Undefined(zero));
        }
        let mut v = br.raw.clone();
        for j in 0..3 {
            let k = i64::from(d.type_tuple.k[j]);
            if k != 0 {
                v = &v * &st.values[j].pow(-k)?;
            }
        }
        Ok(Tau { raw: v.clone(), value: ProjectiveScalar::new(v, st.q), bracket: br })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizationBrackets {
    pub values: [Cyclo; 3],
    pub nonzero: [bool; 3],
    pub q: i8,
}

impl StabilizationBrackets {
    pub fn all_nonzero(&self) -> bool {
        self.nonzero.iter().all(|b| *b)
    }
    pub fn projective(&self) -> [ProjectiveScalar; 3] {
        self.values.clone().map(|v| ProjectiveScalar::new(v, self.q))
    }
}

#[derive(Clone, Debug)]
pub struct Tau {
    pub raw: Cyclo,
    pub value: ProjectiveScalar,
    pub bracket: Bracket,
}

/// Convenience wrapper with default options.
pub fn bracket(t: &HopfTriplet, d: &CombedDiagram) -> Result<Bracket, InvariantError> {
    Evaluator::new(t).bracket(d)
}

pub fn tau(t: &HopfTriplet, d: &CombedDiagram) -> Result<Tau, InvariantError> {
    Evaluator::new(t).tau(d)
}

pub fn stabilization_brackets(t: &HopfTriplet) -> Result<StabilizationBrackets, InvariantError> {
    Evaluator::new(t).stabilization_brackets()
}

/// Outcome of comparing evaluations with rescaled cointegrals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RescaleReport {
    pub bracket_exponent: i64,
    pub tau_exponent: i64,
    pub bracket_ok: bool,
    /// `None` when tau is undefined for the triplet.
    pub tau_ok: Option<bool>,
}

impl RescaleReport {
    pub fn passed(&self) -> bool {
        self.bracket_ok && self.tau_ok != Some(false)
    }
}

/// Recomputes bracket and tau with cointegrals scaled by `c` and checks the
/// factors C^(g-p) and C^(chi-4p-2b+1), C = c_alpha c_beta c_kappa.
pub fn rescale_check(t: &HopfTriplet, d: &CombedDiagram, c: [Cyclo; 3]) -> Result<RescaleReport, InvariantError> {
    let base = Evaluator::new(t);
    let scaled = Evaluator::with_options(t, EvalOptions { scales: c.clone(), ..EvalOptions::default() });
    let big_c = &(&c[0] * &c[1]) * &c[2];
    let tt = &d.type_tuple;
    let bracket_exponent = i64::from(tt.g) - i64::from(tt.p);
    let tau_exponent = euler_characteristic(tt) - 4 * i64::from(tt.p) - 2 * i64::from(tt.b) + 1;
    let b0 = base.bracket(d)?.raw;
    let b1 = scaled.bracket(d)?.raw;
    let bracket_ok = b1 == &b0 * &big_c.pow(bracket_exponent)?;
    let tau_ok = match (base.tau(d), scaled.tau(d)) {
        (Ok(t0), Ok(t1)) => Some(t1.raw == &t0.raw * &big_c.pow(tau_exponent)?),
        (Err(InvariantError::Undefined(_)), Err(InvariantError::Undefined(_))) => None,
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    Ok(RescaleReport { bracket_exponent, tau_exponent, bracket_ok, tau_ok })
}
