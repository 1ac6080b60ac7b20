use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::HopfError;
use crate::scalar::{Cyclo, FieldMatrix};
use crate::tensor::{Leg, Tensor};

/// Structure constants of a candidate Hopf algebra on a fixed basis.
///
/// Layouts: `m[(i*d + j)*d + k]` is the coefficient of e_k in e_i e_j;
/// `delta[(i*d + j)*d + k]` the coefficient of e_j (x) e_k in the coproduct
/// of e_i; `s[i*d + j]` the coefficient of e_j in S(e_i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    dim: usize,
    basis: Vec<String>,
    m: Vec<Cyclo>,
    eta: Vec<Cyclo>,
    delta: Vec<Cyclo>,
    eps: Vec<Cyclo>,
    s: Vec<Cyclo>,
    mul_sp: Vec<Vec<(usize, Cyclo)>>,
    cop_sp: Vec<Vec<(usize, usize, Cyclo)>>,
}

/// Element of the algebra (or a functional) in basis coordinates.
pub type Vector = Vec<Cyclo>;

impl HopfData {
    pub fn new(
        basis: Vec<String>,
        m: Vec<Cyclo>,
        eta: Vec<Cyclo>,
        delta: Vec<Cyclo>,
        eps: Vec<Cyclo>,
        s: Vec<Cyclo>,
    ) -> Result<HopfData, HopfError> {
        let d = basis.len();
        if d == 0 {
            return Err(HopfError::Structure("dimension must be positive".into()));
        }
        for (name, got, want) in [
            ("M", m.len(), d * d * d),
            ("eta", eta.len(), d),
            ("Delta", delta.len(), d * d * d),
            ("eps", eps.len(), d),
            ("S", s.len(), d * d),
        ] {
            if got != want {
                return Err(HopfError::Structure(format!("{name} has {got} entries, expected {want}")));
            }
        }
        let mut mul_sp = vec![Vec::new(); d * d];
        let mut cop_sp = vec![Vec::new(); d];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let v = &m[(i * d + j) * d + k];
                    if !v.is_zero() {
                        mul_sp[i * d + j].push((k, v.clone()));
                    }
                    let w = &delta[(i * d + j) * d + k];
                    if !w.is_zero() {
                        cop_sp[i].push((j, k, w.clone()));
                    }
                }
            }
        }
        Ok(HopfData { dim: d, basis, m, eta, delta, eps, s, mul_sp, cop_sp })
    }

    /// Builds from dense structure arrays with default basis labels e0, e1, ...
    pub fn from_arrays(
        m: Vec<Cyclo>,
        eta: Vec<Cyclo>,
        delta: Vec<Cyclo>,
        eps: Vec<Cyclo>,
        s: Vec<Cyclo>,
    ) -> Result<HopfData, HopfError> {
        let basis = (0..eta.len()).map(|i| format!("e{i}")).collect();
        HopfData::new(basis, m, eta, delta, eps, s)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn basis(&self) -> &[String] {
        &self.basis
    }
    pub fn m(&self) -> &[Cyclo] {
        &self.m
    }
    pub fn eta(&self) -> &[Cyclo] {
        &self.eta
    }
    pub fn delta(&self) -> &[Cyclo] {
        &self.delta
    }
    pub fn eps(&self) -> &[Cyclo] {
        &self.eps
    }
    pub fn s(&self) -> &[Cyclo] {
        &self.s
    }

    pub fn m_at(&self, i: usize, j: usize, k: usize) -> &Cyclo {
        &self.m[(i * self.dim + j) * self.dim + k]
    }
    pub fn delta_at(&self, i: usize, j: usize, k: usize) -> &Cyclo {
        &self.delta[(i * self.dim + j) * self.dim + k]
    }

    /// Nonzero terms of e_i e_j.
    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Cyclo)] {
        &self.mul_sp[i * self.dim + j]
    }

    /// Nonzero terms of the coproduct of e_i.
    pub fn cop_basis(&self, i: usize) -> &[(usize, usize, Cyclo)] {
        &self.cop_sp[i]
    }

    pub fn antipode_matrix(&self) -> FieldMatrix {
        FieldMatrix::from_flat(self.dim, self.dim, self.s.clone())
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![Cyclo::zero(); self.dim];
        v[i] = Cyclo::one();
        v
    }

    pub fn mul(&self, x: &[Cyclo], y: &[Cyclo]) -> Vector {
        let d = self.dim;
        let mut out = vec![Cyclo::zero(); d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, v) in self.mul_basis(i, j) {
                    out[*k] += &(&c * v);
                }
            }
        }
        out
    }

    /// Coproduct of x as a d*d array (row = first leg).
    pub fn cop(&self, x: &[Cyclo]) -> Vector {
        let d = self.dim;
        let mut out = vec![Cyclo::zero(); d * d];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, k, v) in self.cop_basis(i) {
                out[j * d + k] += &(xi * v);
            }
        }
        out
    }

    pub fn counit(&self, x: &[Cyclo]) -> Cyclo {
        dot(x, &self.eps)
    }

    /// Convolution f * g of two functionals: x -> f(x1) g(x2).
    pub fn convolve(&self, f: &[Cyclo], g: &[Cyclo]) -> Vector {
        (0..self.dim)
            .map(|i| {
                let mut acc = Cyclo::zero();
                for (j, k, v) in self.cop_basis(i) {
                    if !f[*j].is_zero() && !g[*k].is_zero() {
                        acc += &(&(v * &f[*j]) * &g[*k]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Terms (a, b, c, coeff) of the double coproduct of e_i.
    pub fn cop3_basis(&self, i: usize) -> Vec<(usize, usize, usize, Cyclo)> {
        let mut out = Vec::new();
        for (a, m, v) in self.cop_basis(i) {
            for (b, c, w) in self.cop_basis(*m) {
                out.push((*a, *b, *c, v * w));
            }
        }
        out
    }

    /// M as a tensor with legs (in0, in1, out).
    pub fn tensor_m(&self) -> Tensor {
        let d = self.dim;
        Tensor::new(vec![Leg::input("in0", d), Leg::input("in1", d), Leg::output("out", d)], self.m.clone())
            .expect("consistent shape")
    }
    /// Delta as a tensor with legs (in, out0, out1).
    pub fn tensor_delta(&self) -> Tensor {
        let d = self.dim;
        Tensor::new(vec![Leg::input("in", d), Leg::output("out0", d), Leg::output("out1", d)], self.delta.clone())
            .expect("consistent shape")
    }
    pub fn tensor_eta(&self) -> Tensor {
        Tensor::vector("out", self.eta.clone())
    }
    pub fn tensor_eps(&self) -> Tensor {
        Tensor::covector("in", self.eps.clone())
    }
    pub fn tensor_s(&self) -> Tensor {
        let d = self.dim;
        Tensor::new(vec![Leg::input("in", d), Leg::output("out", d)], self.s.clone()).expect("consistent shape")
    }

    /// Copy with the antipode replaced (used by mutation tests and variants).
    pub fn with_antipode(&self, s: Vec<Cyclo>) -> Result<HopfData, HopfError> {
        HopfData::new(self.basis.clone(), self.m.clone(), self.eta.clone(), self.delta.clone(), self.eps.clone(), s)
    }

    /// Copy with one structure array entry replaced.
    pub fn with_entry(&self, which: StructureArray, index: usize, v: Cyclo) -> Result<HopfData, HopfError> {
        let (mut m, mut eta, mut delta, mut eps, mut s) =
            (self.m.clone(), self.eta.clone(), self.delta.clone(), self.eps.clone(), self.s.clone());
        let target = match which {
            StructureArray::M => &mut m,
            StructureArray::Eta => &mut eta,
            StructureArray::Delta => &mut delta,
            StructureArray::Eps => &mut eps,
            StructureArray::S => &mut s,
        };
        if index >= target.len() {
            return Err(HopfError::Structure(format!("entry {index} out of range")));
        }
        target[index] = v;
        HopfData::new(self.basis.clone(), m, eta, delta, eps, s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureArray {
    M,
    Eta,
    Delta,
    Eps,
    S,
}

pub fn dot(x: &[Cyclo], y: &[Cyclo]) -> Cyclo {
    let mut acc = Cyclo::zero();
    for (a, b) in x.iter().zip(y) {
        if !a.is_zero() && !b.is_zero() {
            acc += &(a * b);
        }
    }
    acc
}

pub fn scale(x: &[Cyclo], c: &Cyclo) -> Vector {
    x.iter().map(|v| v * c).collect()
}
