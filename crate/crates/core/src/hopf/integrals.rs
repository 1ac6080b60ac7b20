use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::data::{dot, scale, HopfData, Vector};
use super::HopfError;
use crate::scalar::{conductor_bound, Cyclo, FieldMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Integrals {
    /// Right cointegral: e_R x = eps(x) e_R.
    pub e_r: Vector,
    /// Right integral, normalized so u_R(e_R) = 1.
    pub u_r: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseData {
    /// Phase element (group-like).
    pub a: Vector,
    /// Cophase functional (algebra morphism).
    pub alpha: Vector,
    /// alpha o S, the convolution inverse of alpha.
    pub alpha_inv: Vector,
    /// S(a), the inverse of a.
    pub a_inv: Vector,
    pub q: Cyclo,
}

/// Which coproduct leg of e_R receives the power of alpha.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LegSide {
    First,
    Second,
}

impl LegSide {
    pub fn name(self) -> &'static str {
        match self {
            LegSide::First => "first",
            LegSide::Second => "second",
        }
    }
}

/// Composition order of the tilt.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TiltOrder {
    /// S^2 applied after inverse conjugation.
    SquareAfterConjugation,
    /// S^2 applied before inverse conjugation.
    SquareBeforeConjugation,
}

impl TiltOrder {
    pub fn name(self) -> &'static str {
        match self {
            TiltOrder::SquareAfterConjugation => "s2_after_conj_inverse",
            TiltOrder::SquareBeforeConjugation => "s2_before_conj_inverse",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntegralKind {
    Cointegral,
    Integral,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedCointegral {
    /// theta = twice_theta / 2, always odd.
    pub twice_theta: i64,
    pub vector: Vector,
    pub side: IntegralKind,
}

fn one_dim_kernel(m: &FieldMatrix, what: &'static str) -> Result<Vector, HopfError> {
    let k = m.kernel_basis();
    if k.len() != 1 {
        return Err(HopfError::IntegralDimension { which: what, dim: k.len() });
    }
    Ok(k.into_iter().next().expect("length checked"))
}

/// Right cointegral and right integral, normalized by u_R(e_R) = 1.
pub fn solve_integrals(h: &HopfData) -> Result<Integrals, HopfError> {
    let d = h.dim();
    let eps = h.eps();
    // rows (j, k): sum_i x_i M[i,j,k] - eps_j x_k
    let mut ce = FieldMatrix::zeros(d * d, d);
    for j in 0..d {
        for i in 0..d {
            for (k, v) in h.mul_basis(i, j) {
                let cur = ce.get(j * d + k, i).clone();
                ce.set(j * d + k, i, &cur + v);
            }
        }
        for k in 0..d {
            let cur = ce.get(j * d + k, k).clone();
            ce.set(j * d + k, k, &cur - &eps[j]);
        }
    }
    let e_r = one_dim_kernel(&ce, "right cointegral")?;
    // rows (i, k): sum_j u_j D[i,j,k] - u_i eta_k
    let eta = h.eta();
    let mut cu = FieldMatrix::zeros(d * d, d);
    for i in 0..d {
        for (j, k, v) in h.cop_basis(i) {
            let cur = cu.get(i * d + k, *j).clone();
            cu.set(i * d + k, *j, &cur + v);
        }
        for k in 0..d {
            let cur = cu.get(i * d + k, i).clone();
            cu.set(i * d + k, i, &cur - &eta[k]);
        }
    }
    let u = one_dim_kernel(&cu, "right integral")?;
    // u_R is scaled to have leading coefficient 1; e_R absorbs the normalization
    let lead = u[first_nonzero(&u).ok_or(HopfError::CannotNormalize)?].inv().map_err(|_| HopfError::CannotNormalize)?;
    let u = scale(&u, &lead);
    let norm = dot(&u, &e_r);
    if norm.is_zero() {
        return Err(HopfError::CannotNormalize);
    }
    let inv = norm.inv().map_err(|_| HopfError::CannotNormalize)?;
    Ok(Integrals { e_r: scale(&e_r, &inv), u_r: u })
}

fn first_nonzero(v: &[Cyclo]) -> Option<usize> {
    v.iter().position(|c| !c.is_zero())
}

/// Phase element a, cophase alpha, and q = alpha(a).
pub fn compute_phase_data(h: &HopfData, ints: &Integrals) -> Result<PhaseData, HopfError> {
    let d = h.dim();
    let e_r = &ints.e_r;
    let p = first_nonzero(e_r).ok_or(HopfError::Internal("zero cointegral".into()))?;
    let ep_inv = e_r[p].inv().map_err(|_| HopfError::Internal("zero pivot".into()))?;
    let mut alpha = Vec::with_capacity(d);
    for i in 0..d {
        let prod = h.mul(&h.basis_vector(i), e_r);
        let c = &prod[p] * &ep_inv;
        if prod != scale(e_r, &c) {
            return Err(HopfError::Internal("cophase system inconsistent".into()));
        }
        alpha.push(c);
    }
    // (id (x) u) Delta(e_i) = u(e_i) a
    let u = &ints.u_r;
    let slices: Vec<Vector> = (0..d)
        .map(|i| {
            let mut v = vec![Cyclo::zero(); d];
            for (j, k, c) in h.cop_basis(i) {
                if !u[*k].is_zero() {
                    v[*j] += &(c * &u[*k]);
                }
            }
            v
        })
        .collect();
    let piv = first_nonzero(u).ok_or(HopfError::Internal("zero integral".into()))?;
    let a = scale(&slices[piv], &u[piv].inv().map_err(|_| HopfError::Internal("zero pivot".into()))?);
    for i in 0..d {
        if slices[i] != scale(&a, &u[i]) {
            return Err(HopfError::Internal("phase element system inconsistent".into()));
        }
    }
    let s = h.antipode_matrix();
    let alpha_inv = s.mul_vec(&alpha);
    let a_inv = s.vec_mul(&a);
    let q = dot(&alpha, &a);

    // group-like a, algebra-morphism alpha
    let mut aa = vec![Cyclo::zero(); d * d];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in a.iter().enumerate() {
            if !x.is_zero() && !y.is_zero() {
                aa[i * d + j] = x * y;
            }
        }
    }
    if h.cop(&a) != aa || !h.counit(&a).is_one() {
        return Err(HopfError::Internal("phase element is not group-like".into()));
    }
    if !dot(&alpha, h.eta()).is_one() {
        return Err(HopfError::Internal("cophase is not unital".into()));
    }
    for i in 0..d {
        for j in 0..d {
            let lhs = dot(&alpha, &h.mul(&h.basis_vector(i), &h.basis_vector(j)));
            if lhs != &alpha[i] * &alpha[j] {
                return Err(HopfError::Internal("cophase is not multiplicative".into()));
            }
        }
    }
    if q.is_zero() || q.multiplicative_order(2 * conductor_bound()).is_none() {
        return Err(HopfError::Internal("phase is not a root of unity".into()));
    }
    Ok(PhaseData { a, alpha, alpha_inv, a_inv, q })
}

/// n-th convolution power of alpha (negative n uses alpha o S).
pub fn alpha_power(h: &HopfData, ph: &PhaseData, n: i64) -> Vector {
    let base = if n < 0 { &ph.alpha_inv } else { &ph.alpha };
    let mut cur = h.eps().to_vec();
    for _ in 0..n.unsigned_abs() {
        cur = h.convolve(&cur, base);
    }
    cur
}

/// n-th power of a in the algebra (negative n uses S(a)).
pub fn a_power(h: &HopfData, ph: &PhaseData, n: i64) -> Vector {
    let base = if n < 0 { &ph.a_inv } else { &ph.a };
    let mut cur = h.eta().to_vec();
    for _ in 0..n.unsigned_abs() {
        cur = h.mul(&cur, base);
    }
    cur
}

fn exponent(twice_theta: i64) -> Result<i64, HopfError> {
    if twice_theta.rem_euclid(2) != 1 {
        return Err(HopfError::NotHalfInteger(twice_theta));
    }
    Ok((twice_theta + 1) / 2)
}

/// e_theta with alpha^n applied to the chosen coproduct leg of e_R,
/// where n = theta + 1/2.
pub fn cointegral_on_side(
    h: &HopfData,
    ints: &Integrals,
    ph: &PhaseData,
    twice_theta: i64,
    side: LegSide,
) -> Result<Vector, HopfError> {
    let d = h.dim();
    let n = exponent(twice_theta)?;
    let f = alpha_power(h, ph, n);
    let c = h.cop(&ints.e_r);
    let mut out = vec![Cyclo::zero(); d];
    for j in 0..d {
        for k in 0..d {
            let v = &c[j * d + k];
            if v.is_zero() {
                continue;
            }
            match side {
                LegSide::Second => out[j] += &(v * &f[k]),
                LegSide::First => out[k] += &(v * &f[j]),
            }
        }
    }
    Ok(out)
}

/// u_theta(x) = u_R(x a^n) with n = theta + 1/2.
pub fn integral_theta(h: &HopfData, ints: &Integrals, ph: &PhaseData, twice_theta: i64) -> Result<Vector, HopfError> {
    let n = exponent(twice_theta)?;
    let an = a_power(h, ph, n);
    Ok((0..h.dim()).map(|i| dot(&ints.u_r, &h.mul(&h.basis_vector(i), &an))).collect())
}

/// y e = eps(y) e for all basis y.
pub fn is_left_cointegral(h: &HopfData, e: &[Cyclo]) -> bool {
    (0..h.dim()).all(|i| h.mul(&h.basis_vector(i), e) == scale(e, &h.eps()[i]))
}

/// e y = eps(y) e for all basis y.
pub fn is_right_cointegral(h: &HopfData, e: &[Cyclo]) -> bool {
    (0..h.dim()).all(|i| h.mul(e, &h.basis_vector(i)) == scale(e, &h.eps()[i]))
}

/// (id (x) u) Delta(x) = u(x) 1.
pub fn is_left_integral(h: &HopfData, u: &[Cyclo]) -> bool {
    let d = h.dim();
    (0..d).all(|i| {
        let mut v = vec![Cyclo::zero(); d];
        for (j, k, c) in h.cop_basis(i) {
            v[*j] += &(c * &u[*k]);
        }
        v == scale(h.eta(), &u[i])
    })
}

/// (u (x) id) Delta(x) = u(x) 1.
pub fn is_right_integral(h: &HopfData, u: &[Cyclo]) -> bool {
    let d = h.dim();
    (0..d).all(|i| {
        let mut v = vec![Cyclo::zero(); d];
        for (j, k, c) in h.cop_basis(i) {
            v[*k] += &(c * &u[*j]);
        }
        v == scale(h.eta(), &u[i])
    })
}

/// Picks the leg side for which e_{1/2} is a left cointegral. If both
/// sides qualify (e.g. alpha = eps) the second leg is kept.
pub fn resolve_cointegral_side(h: &HopfData, ints: &Integrals, ph: &PhaseData) -> Result<LegSide, HopfError> {
    for side in [LegSide::Second, LegSide::First] {
        let e = cointegral_on_side(h, ints, ph, 1, side)?;
        if is_left_cointegral(h, &e) {
            return Ok(side);
        }
    }
    Err(HopfError::Convention("no alpha-leg choice makes e_1/2 a left cointegral".into()))
}

/// conj(x) = alpha(x1) x2 alpha^-1(x3), or with alpha and alpha^-1 swapped.
pub fn conjugation_matrix(h: &HopfData, ph: &PhaseData, inverse: bool) -> FieldMatrix {
    let d = h.dim();
    let (l, r) = if inverse { (&ph.alpha_inv, &ph.alpha) } else { (&ph.alpha, &ph.alpha_inv) };
    let mut m = FieldMatrix::zeros(d, d);
    for i in 0..d {
        let mut row = vec![Cyclo::zero(); d];
        for (a, b, c, v) in h.cop3_basis(i) {
            if !l[a].is_zero() && !r[c].is_zero() {
                row[b] += &(&(&v * &l[a]) * &r[c]);
            }
        }
        for (j, x) in row.into_iter().enumerate() {
            m.set(i, j, x);
        }
    }
    m
}

pub fn tilt_matrix(h: &HopfData, ph: &PhaseData, order: TiltOrder) -> FieldMatrix {
    let s = h.antipode_matrix();
    let s2 = s.mul(&s);
    let ci = conjugation_matrix(h, ph, true);
    // row-vector convention: x -> x A B applies A first
    match order {
        TiltOrder::SquareAfterConjugation => ci.mul(&s2),
        TiltOrder::SquareBeforeConjugation => s2.mul(&ci),
    }
}

/// Fixed-point requirements the tilt must meet.
pub fn tilt_fixes(
    h: &HopfData,
    ints: &Integrals,
    ph: &PhaseData,
    side: LegSide,
    t: &FieldMatrix,
) -> Result<Vec<(String, bool)>, HopfError> {
    let mut out = Vec::new();
    for tt in [-5i64, -3, -1, 1, 3, 5] {
        let e = cointegral_on_side(h, ints, ph, tt, side)?;
        out.push((alloc::format!("e_{tt}/2"), t.vec_mul(&e) == e));
        let u = integral_theta(h, ints, ph, tt)?;
        out.push((alloc::format!("u_{tt}/2"), t.mul_vec(&u) == u));
    }
    out.push(("a".into(), t.vec_mul(&ph.a) == ph.a));
    out.push(("alpha".into(), t.mul_vec(&ph.alpha) == ph.alpha));
    Ok(out)
}

pub fn resolve_tilt(
    h: &HopfData,
    ints: &Integrals,
    ph: &PhaseData,
    side: LegSide,
) -> Result<(TiltOrder, FieldMatrix), HopfError> {
    for order in [TiltOrder::SquareAfterConjugation, TiltOrder::SquareBeforeConjugation] {
        let t = tilt_matrix(h, ph, order);
        if tilt_fixes(h, ints, ph, side, &t)?.iter().all(|(_, ok)| *ok) {
            return Ok((order, t));
        }
    }
    Err(HopfError::Convention("tilt convention unresolvable".into()))
}
