//! Dense labeled tensors over the cyclotomic scalars, network contraction
//! with a greedy order planner, and iterated (co)product builders.

mod iterate;
mod kernel;
mod network;

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::Cyclo;

pub use iterate::{iterate, IterateMode, TreeShape};
pub use network::{ContractionStats, PlanStep, TensorNetwork, DEFAULT_ELEMENT_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TensorError {
    #[error("dimension mismatch joining '{left}' ({left_dim}) with '{right}' ({right_dim})")]
    DimensionMismatch { left: String, left_dim: usize, right: String, right_dim: usize },
    #[error("direction mismatch joining '{left}' with '{right}': need one out-leg and one in-leg")]
    DirectionMismatch { left: String, right: String },
    #[error("unknown leg '{0}'")]
    UnknownLeg(String),
    #[error("duplicate leg label '{0}'")]
    DuplicateLabel(String),
    #[error("leg '{0}' is already glued")]
    LegInUse(String),
    #[error("data length {got} does not match leg dimensions (expected {expected})")]
    DataLength { expected: usize, got: usize },
    #[error("intermediate {step} would hold {size} scalars, over the budget of {budget}")]
    BudgetExceeded { step: String, size: usize, budget: usize },
    #[error("negative power of a map without a stored inverse")]
    NotInvertible,
    #[error("map has the wrong shape for {0}")]
    BadShape(&'static str),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    In,
    Out,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::In => Direction::Out,
            Direction::Out => Direction::In,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Leg {
    pub label: String,
    pub dim: usize,
    pub dir: Direction,
}

impl Leg {
    pub fn new(label: &str, dim: usize, dir: Direction) -> Leg {
        Leg { label: label.to_string(), dim, dir }
    }
    pub fn input(label: &str, dim: usize) -> Leg {
        Leg::new(label, dim, Direction::In)
    }
    pub fn output(label: &str, dim: usize) -> Leg {
        Leg::new(label, dim, Direction::Out)
    }
}

/// Dense tensor with data in row-major order of its leg list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    legs: Vec<Leg>,
    data: Vec<Cyclo>,
}

impl Tensor {
    pub fn new(legs: Vec<Leg>, data: Vec<Cyclo>) -> Result<Tensor, TensorError> {
        for (i, l) in legs.iter().enumerate() {
            if legs[..i].iter().any(|m| m.label == l.label) {
                return Err(TensorError::DuplicateLabel(l.label.clone()));
            }
        }
        let expected: usize = legs.iter().map(|l| l.dim).product();
        if expected != data.len() {
            return Err(TensorError::DataLength { expected, got: data.len() });
        }
        Ok(Tensor { legs, data })
    }

    pub fn zeros(legs: Vec<Leg>) -> Result<Tensor, TensorError> {
        let n = legs.iter().map(|l| l.dim).product();
        Tensor::new(legs, vec![Cyclo::zero(); n])
    }

    pub fn scalar(c: Cyclo) -> Tensor {
        Tensor { legs: Vec::new(), data: vec![c] }
    }

    /// Identity map on a space of dimension `dim`.
    pub fn identity(dim: usize, in_label: &str, out_label: &str) -> Tensor {
        let mut data = vec![Cyclo::zero(); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = Cyclo::one();
        }
        Tensor { legs: vec![Leg::input(in_label, dim), Leg::output(out_label, dim)], data }
    }

    /// Vector with a single out-leg.
    pub fn vector(label: &str, v: Vec<Cyclo>) -> Tensor {
        Tensor { legs: vec![Leg::output(label, v.len())], data: v }
    }

    /// Functional with a single in-leg.
    pub fn covector(label: &str, v: Vec<Cyclo>) -> Tensor {
        Tensor { legs: vec![Leg::input(label, v.len())], data: v }
    }

    pub fn legs(&self) -> &[Leg] {
        &self.legs
    }

    pub fn data(&self) -> &[Cyclo] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Cyclo> {
        self.data
    }

    pub fn dims(&self) -> Vec<usize> {
        self.legs.iter().map(|l| l.dim).collect()
    }

    pub fn size(&self) -> usize {
        self.data.len()
    }

    pub fn rank(&self) -> usize {
        self.legs.len()
    }

    pub fn leg_index(&self, label: &str) -> Result<usize, TensorError> {
        self.legs.iter().position(|l| l.label == label).ok_or_else(|| TensorError::UnknownLeg(label.to_string()))
    }

    /// Entry at a multi-index in leg order.
    pub fn get(&self, idx: &[usize]) -> &Cyclo {
        &self.data[kernel::linear_index(&self.dims(), idx)]
    }

    /// The scalar value of a rank-0 tensor.
    pub fn as_scalar(&self) -> Option<&Cyclo> {
        if self.legs.is_empty() {
            Some(&self.data[0])
        } else {
            None
        }
    }

    pub fn relabel(mut self, old: &str, new: &str) -> Result<Tensor, TensorError> {
        let i = self.leg_index(old)?;
        if old != new && self.legs.iter().any(|l| l.label == new) {
            return Err(TensorError::DuplicateLabel(new.to_string()));
        }
        self.legs[i].label = new.to_string();
        Ok(self)
    }

    /// Flips every leg direction (passage to the dual spaces).
    pub fn reverse_directions(mut self) -> Tensor {
        for l in &mut self.legs {
            l.dir = l.dir.flip();
        }
        self
    }

    /// Reorders legs; `order[k]` is the old position of new leg k.
    pub fn permute(&self, order: &[usize]) -> Tensor {
        let data = kernel::permute(&self.dims(), &self.data, order);
        let legs = order.iter().map(|&i| self.legs[i].clone()).collect();
        Tensor { legs, data }
    }

    /// Reorders legs to the given label sequence.
    pub fn permute_labels(&self, labels: &[&str]) -> Result<Tensor, TensorError> {
        if labels.len() != self.legs.len() {
            return Err(TensorError::BadShape("permutation"));
        }
        let order = labels.iter().map(|l| self.leg_index(l)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.permute(&order))
    }

    /// Multiplies every entry by a scalar.
    pub fn scale(&self, c: &Cyclo) -> Tensor {
        Tensor { legs: self.legs.clone(), data: self.data.iter().map(|x| x * c).collect() }
    }

    /// Structural equality up to leg order (legs matched by label).
    pub fn equals_up_to_leg_order(&self, other: &Tensor) -> bool {
        let labels: Vec<&str> = self.legs.iter().map(|l| l.label.as_str()).collect();
        match other.permute_labels(&labels) {
            Ok(p) => p.legs == self.legs && p.data == self.data,
            Err(_) => false,
        }
    }
}

fn check_join(a: &Leg, b: &Leg) -> Result<(), TensorError> {
    if a.dim != b.dim {
        return Err(TensorError::DimensionMismatch {
            left: a.label.clone(),
            left_dim: a.dim,
            right: b.label.clone(),
            right_dim: b.dim,
        });
    }
    if a.dir == b.dir {
        return Err(TensorError::DirectionMismatch { left: a.label.clone(), right: b.label.clone() });
    }
    Ok(())
}

/// Outer product; legs are concatenated.
pub fn tensor_product(a: &Tensor, b: &Tensor) -> Result<Tensor, TensorError> {
    contract_pair(a, b, &[])
}

/// Partial trace over pairs of (out-leg, in-leg) labels of one tensor.
pub fn contract(a: &Tensor, pairs: &[(&str, &str)]) -> Result<Tensor, TensorError> {
    let mut axes = Vec::new();
    for &(o, i) in pairs {
        let (oi, ii) = (a.leg_index(o)?, a.leg_index(i)?);
        let (lo, li) = (&a.legs[oi], &a.legs[ii]);
        check_join(lo, li)?;
        if lo.dir != Direction::Out {
            return Err(TensorError::DirectionMismatch { left: o.to_string(), right: i.to_string() });
        }
        axes.push((oi, ii));
    }
    let (dims, data) = kernel::trace(&a.dims(), &a.data, &axes);
    let used: Vec<usize> = axes.iter().flat_map(|&(x, y)| [x, y]).collect();
    let legs = a.legs.iter().enumerate().filter(|(i, _)| !used.contains(i)).map(|(_, l)| l.clone()).collect();
    debug_assert_eq!(dims.len(), a.legs.len() - used.len());
    Ok(Tensor { legs, data })
}

/// Contracts leg pairs (label in a, label in b) between two tensors.
/// Result legs: remaining legs of a, then remaining legs of b.
pub fn contract_pair(a: &Tensor, b: &Tensor, pairs: &[(&str, &str)]) -> Result<Tensor, TensorError> {
    let mut ax = Vec::new();
    let mut bx = Vec::new();
    for &(la, lb) in pairs {
        let (i, j) = (a.leg_index(la)?, b.leg_index(lb)?);
        check_join(&a.legs[i], &b.legs[j])?;
        ax.push(i);
        bx.push(j);
    }
    let legs: Vec<Leg> = a
        .legs
        .iter()
        .enumerate()
        .filter(|(i, _)| !ax.contains(i))
        .chain(b.legs.iter().enumerate().filter(|(j, _)| !bx.contains(j)))
        .map(|(_, l)| l.clone())
        .collect();
    for (i, l) in legs.iter().enumerate() {
        if legs[..i].iter().any(|m| m.label == l.label) {
            return Err(TensorError::DuplicateLabel(l.label.clone()));
        }
    }
    let (_, data) = kernel::contract(&a.dims(), &a.data, &ax, &b.dims(), &b.data, &bx);
    Ok(Tensor { legs, data })
}

#[cfg(test)]
mod tests;
