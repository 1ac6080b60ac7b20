use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{contract_pair, Direction, Tensor, TensorError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeShape {
    /// Each new node expands the first leg.
    LeftComb,
    /// Each new node expands the last leg.
    RightComb,
}

#[derive(Clone, Copy, Debug)]
pub enum IterateMode<'a> {
    /// n-fold product from a binary product (2 in, 1 out); n = 0 gives `unit`.
    ProductTree { unit: &'a Tensor, shape: TreeShape },
    /// n-fold coproduct from a binary coproduct (1 in, 2 out); n = 0 gives `counit`.
    CoproductTree { counit: &'a Tensor, shape: TreeShape },
    /// n-th power of an endomorphism (1 in, 1 out).
    Power { inverse: Option<&'a Tensor> },
}

fn split_legs(t: &Tensor) -> (Vec<String>, Vec<String>) {
    let ins = t.legs.iter().filter(|l| l.dir == Direction::In).map(|l| l.label.clone()).collect();
    let outs = t.legs.iter().filter(|l| l.dir == Direction::Out).map(|l| l.label.clone()).collect();
    (ins, outs)
}

/// Normalizes a map's legs to the given names (ins first, then outs).
fn canonical(t: &Tensor, ins: &[&str], outs: &[&str], what: &'static str) -> Result<Tensor, TensorError> {
    let (ti, to) = split_legs(t);
    if ti.len() != ins.len() || to.len() != outs.len() {
        return Err(TensorError::BadShape(what));
    }
    let order: Vec<&str> = ti.iter().chain(to.iter()).map(|s| s.as_str()).collect();
    let mut p = t.permute_labels(&order)?;
    for (k, l) in ins.iter().chain(outs.iter()).enumerate() {
        p.legs[k].label = (*l).into();
    }
    Ok(p)
}

/// Builds iterated products, coproducts, or powers of a map.
pub fn iterate(map: &Tensor, n: i64, mode: IterateMode<'_>) -> Result<Tensor, TensorError> {
    match mode {
        IterateMode::Power { inverse } => power(map, n, inverse),
        IterateMode::CoproductTree { counit, shape } => {
            let n = usize::try_from(n).map_err(|_| TensorError::BadShape("negative tree size"))?;
            coproduct_tree(map, counit, n, shape)
        }
        IterateMode::ProductTree { unit, shape } => {
            let n = usize::try_from(n).map_err(|_| TensorError::BadShape("negative tree size"))?;
            // Reverse every leg, build the coproduct tree, reverse back.
            let m = map.clone().reverse_directions();
            let u = unit.clone().reverse_directions();
            let t = coproduct_tree(&m, &u, n, shape)?.reverse_directions();
            let mut legs = t.legs.clone();
            for l in &mut legs {
                if let Some(rest) = l.label.strip_prefix("out") {
                    l.label = format!("in{rest}");
                } else if l.label == "in" {
                    l.label = "out".into();
                }
            }
            // put the out-leg last
            let t = Tensor { legs, data: t.data };
            let k = t.legs.len();
            let order: Vec<usize> = (1..k).chain(core::iter::once(0)).collect();
            Ok(if k > 0 && t.legs[0].label == "out" { t.permute(&order) } else { t })
        }
    }
}

fn coproduct_tree(delta: &Tensor, counit: &Tensor, n: usize, shape: TreeShape) -> Result<Tensor, TensorError> {
    let d = canonical(delta, &["x"], &["y0", "y1"], "coproduct tree")?;
    let dim = d.legs[0].dim;
    if n == 0 {
        return canonical(counit, &["in"], &[], "counit");
    }
    let mut cur = Tensor::identity(dim, "in", "out0");
    for k in 1..n {
        // cur has legs in, out0..out{k-1}
        let target = match shape {
            TreeShape::LeftComb => 0,
            TreeShape::RightComb => k - 1,
        };
        let tl = format!("out{target}");
        let next = contract_pair(&cur, &d, &[(tl.as_str(), "x")])?;
        // rename: outputs after target shift up by one
        let mut labels: Vec<String> = Vec::new();
        for l in &next.legs {
            let name = if l.label == "y0" {
                format!("out{target}")
            } else if l.label == "y1" {
                format!("out{}", target + 1)
            } else if let Some(rest) = l.label.strip_prefix("out") {
                let i: usize = rest.parse().unwrap_or(0);
                format!("out{}", if i > target { i + 1 } else { i })
            } else {
                l.label.clone()
            };
            labels.push(name);
        }
        let mut next = next;
        for (l, name) in next.legs.iter_mut().zip(labels) {
            l.label = name;
        }
        let want: Vec<String> = core::iter::once("in".into()).chain((0..=k).map(|i| format!("out{i}"))).collect();
        let want_ref: Vec<&str> = want.iter().map(|s| s.as_str()).collect();
        cur = next.permute_labels(&want_ref)?;
    }
    Ok(cur)
}

fn power(s: &Tensor, n: i64, inverse: Option<&Tensor>) -> Result<Tensor, TensorError> {
    let s = canonical(s, &["in"], &["out"], "power")?;
    let dim = s.legs[0].dim;
    let base = if n < 0 {
        canonical(inverse.ok_or(TensorError::NotInvertible)?, &["in"], &["out"], "power")?
    } else {
        s
    };
    let mut cur = Tensor::identity(dim, "in", "out");
    let b = base.relabel("in", "mid")?;
    for _ in 0..n.unsigned_abs() {
        // apply base after cur
        let next = contract_pair(&cur, &b, &[("out", "mid")])?;
        cur = next;
    }
    Ok(cur)
}
