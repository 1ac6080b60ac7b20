use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{CombedDiagram, Family, TypeTuple};
use crate::scalar::{integer_kernel, integer_smith_normal_form, lattice_basis, lattice_coordinates, IntMatrix};

/// Finitely generated abelian group Z^free_rank + sum Z/t_i.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    pub free_rank: usize,
    /// Invariant factors greater than one.
    pub torsion: Vec<i64>,
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
    /// Order if finite.
    pub fn order(&self) -> Option<i64> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            n => parts.push(format!("Z^{n}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CombingCount {
    Finite(i64),
    Infinite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub h1: AbelianGroup,
    pub h2: AbelianGroup,
    pub h3: AbelianGroup,
    pub combings: CombingCount,
}

/// chi = g - k1 - k2 - k3 + 3p + 2b - 1.
pub fn euler_characteristic(t: &TypeTuple) -> i64 {
    let [g, k1, k2, k3, p, b] = t.as_array().map(i64::from);
    g - k1 - k2 - k3 + 3 * p + 2 * b - 1
}

/// Columns as vectors of length `rows`.
fn matrix(rows: usize, cols: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_cols(rows, cols)
}

fn quotient(sub_in_coords: &[Vec<i64>], ambient_rank: usize) -> AbelianGroup {
    if sub_in_coords.is_empty() {
        return AbelianGroup { free_rank: ambient_rank, torsion: vec![] };
    }
    let snf = integer_smith_normal_form(&matrix(ambient_rank, sub_in_coords));
    AbelianGroup {
        free_rank: ambient_rank - snf.rank(),
        torsion: snf.invariants.iter().copied().filter(|&t| t > 1).collect(),
    }
}

/// Basis of the intersection of two lattices given by bases.
fn intersect(r: usize, x: &[Vec<i64>], y: &[Vec<i64>]) -> Vec<Vec<i64>> {
    if x.is_empty() || y.is_empty() {
        return vec![];
    }
    let cols: Vec<Vec<i64>> = x.iter().cloned().chain(y.iter().map(|v| v.iter().map(|t| -t).collect())).collect();
    let ker = integer_kernel(&matrix(r, &cols));
    let pts: Vec<Vec<i64>> = ker
        .iter()
        .map(|k| (0..r).map(|i| x.iter().zip(k).map(|(b, c)| b[i] * c).sum()).collect())
        .collect();
    if pts.is_empty() {
        return vec![];
    }
    lattice_basis(&matrix(r, &pts))
}

fn coords(basis: &[Vec<i64>], r: usize, v: &[i64]) -> Vec<i64> {
    if basis.is_empty() {
        return vec![];
    }
    lattice_coordinates(&matrix(r, basis), v).expect("vector lies in the lattice")
}

/// Homology of the four-manifold from the curve classes, via the complex
/// C3 -> C2 -> C1 -> H1(surface) with C1 = L_beta + L_kappa + L_alpha and
/// C2 the pairwise intersections.
pub fn homology(d: &CombedDiagram) -> Result<Homology, String> {
    let h = d.homology.as_ref().ok_or_else(|| String::from("homology unavailable"))?;
    let r = h.rank;
    if r != d.type_tuple.surface_rank() {
        return Err("homology unavailable: rank does not match 2g+b-1".into());
    }
    let mut span: [Vec<Vec<i64>>; 3] = [vec![], vec![], vec![]];
    for f in Family::ALL {
        let mut vs = Vec::new();
        for c in d.curves_of(f) {
            let v = h.classes.get(&c.id).ok_or_else(|| format!("homology unavailable: no class for {}", c.id))?;
            if v.len() != r {
                return Err(format!("homology unavailable: class of {} has length {}", c.id, v.len()));
            }
            vs.push(v.clone());
        }
        span[f.index()] = if vs.is_empty() { vec![] } else { lattice_basis(&matrix(r, &vs)) };
    }
    let [la, lb, lk] = span;
    // C1 blocks in order beta, kappa, alpha
    let blocks = [&lb, &lk, &la];
    let offsets = [0, lb.len(), lb.len() + lk.len()];
    let n1 = lb.len() + lk.len() + la.len();
    let iota: Vec<Vec<i64>> = blocks.iter().flat_map(|b| b.iter().cloned()).collect();
    let h1 = quotient(&iota, r);
    let ker_iota = if n1 == 0 { vec![] } else { integer_kernel(&matrix(r, &iota)) };

    let ab = intersect(r, &la, &lb);
    let bk = intersect(r, &lb, &lk);
    let ka = intersect(r, &lk, &la);
    let n2 = ab.len() + bk.len() + ka.len();
    let embed = |block: usize, v: &[i64]| {
        let mut out = vec![0i64; n1];
        let c = coords(blocks[block], r, v);
        out[offsets[block]..offsets[block] + c.len()].copy_from_slice(&c);
        out
    };
    let add = |x: &mut Vec<i64>, y: &[i64]| x.iter_mut().zip(y).for_each(|(a, b)| *a += b);
    // j(x, y, z) = (x - y in L_beta, y - z in L_kappa, z - x in L_alpha), on generators
    let mut jcols: Vec<Vec<i64>> = Vec::new();
    for x in &ab {
        let mut c = embed(0, x);
        add(&mut c, &embed(2, &x.iter().map(|t| -t).collect::<Vec<_>>()));
        jcols.push(c);
    }
    for y in &bk {
        let mut c = embed(0, &y.iter().map(|t| -t).collect::<Vec<_>>());
        add(&mut c, &embed(1, y));
        jcols.push(c);
    }
    for z in &ka {
        let mut c = embed(1, &z.iter().map(|t| -t).collect::<Vec<_>>());
        add(&mut c, &embed(2, z));
        jcols.push(c);
    }
    let h2 = if ker_iota.is_empty() {
        AbelianGroup::default()
    } else {
        let im: Vec<Vec<i64>> = jcols.iter().map(|c| coords(&ker_iota, n1, c)).collect();
        let im: Vec<Vec<i64>> = im.into_iter().filter(|v| v.iter().any(|&t| t != 0)).collect();
        quotient(&im, ker_iota.len())
    };

    let ker_j = if n2 == 0 || n1 == 0 {
        (0..n2).map(|i| (0..n2).map(|j| i64::from(i == j)).collect()).collect()
    } else {
        integer_kernel(&matrix(n1, &jcols))
    };
    let triple = intersect(r, &ab, &lk);
    let h3 = if ker_j.is_empty() {
        AbelianGroup::default()
    } else {
        let mut im = Vec::new();
        for w in &triple {
            let mut c = coords(&ab, r, w);
            c.extend(coords(&bk, r, w));
            c.extend(coords(&ka, r, w));
            im.push(coords(&ker_j, n2, &c));
        }
        let im: Vec<Vec<i64>> = im.into_iter().filter(|v| v.iter().any(|&t| t != 0)).collect();
        quotient(&im, ker_j.len())
    };
    let combings = match h1.order() {
        Some(n) => CombingCount::Finite(n),
        None => CombingCount::Infinite,
    };
    Ok(Homology { h1, h2, h3, combings })
}
