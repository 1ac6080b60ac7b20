//! JSON file formats for algebras, triplets and diagrams.
//!
//! Scalars are strings in the canonical cyclotomic syntax, e.g. "1/2",
//! "-1 + 2*z{3}^{1}". Rotation data are rationals written "p/q".

use std::collections::BTreeMap;
use std::path::Path;

use combhopf::diagram::{CombedDiagram, Crossing, Curve, Family, HomologyData, TypeTuple};
use combhopf::hopf::HopfData;
use combhopf::scalar::{Cyclo, FieldMatrix, Rational64};
use combhopf::triplet::TripletCandidate;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub basis: Vec<String>,
    /// Nonzero entries (i, j, k, M[i,j,k]) of e_i e_j = sum_k M[i,j,k] e_k.
    pub m: Vec<(usize, usize, usize, String)>,
    pub eta: Vec<String>,
    /// Nonzero entries (i, j, k, D[i,j,k]) of Delta e_i = sum D[i,j,k] e_j (x) e_k.
    pub delta: Vec<(usize, usize, usize, String)>,
    pub eps: Vec<String>,
    /// Nonzero entries (i, j, S[i,j]) of S(e_i) = sum_j S[i,j] e_j.
    pub s: Vec<(usize, usize, String)>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TripletFile {
    pub name: String,
    /// Algebras of the alpha, beta and kappa families.
    pub algebras: [AlgebraFile; 3],
    /// Dense pairing matrices alpha x beta, beta x kappa, kappa x alpha.
    pub pairings: [Vec<Vec<String>>; 3],
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CurveFile {
    pub family: String,
    pub id: String,
    pub total_rot: String,
    pub crossings: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CrossingFile {
    pub id: String,
    pub a: String,
    pub b: String,
    pub sign: i8,
    pub partial_a: String,
    pub partial_b: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HomologyFile {
    pub rank: usize,
    pub classes: BTreeMap<String, Vec<i64>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DiagramFile {
    #[serde(rename = "type")]
    pub type_tuple: [u32; 6],
    #[serde(default)]
    pub marked: usize,
    pub curves: Vec<CurveFile>,
    pub crossings: Vec<CrossingFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homology: Option<HomologyFile>,
}

fn scalar(s: &str) -> Result<Cyclo, CliError> {
    s.parse().map_err(|e| CliError::Usage(format!("bad scalar '{s}': {e}")))
}

fn rational(s: &str) -> Result<Rational64, CliError> {
    let bad = || CliError::Usage(format!("bad rational '{s}'"));
    let (p, q) = match s.trim().split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let (p, q): (i64, i64) = (p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?);
    if q == 0 {
        return Err(bad());
    }
    Ok(Rational64::new(p, q))
}

fn fmt_rational(r: &Rational64) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl AlgebraFile {
    pub fn from_data(name: Option<String>, h: &HopfData) -> AlgebraFile {
        let d = h.dim();
        let mut m = Vec::new();
        let mut delta = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, v) in h.mul_basis(i, j) {
                    m.push((i, j, *k, v.to_string()));
                }
            }
            for (j, k, v) in h.cop_basis(i) {
                delta.push((i, *j, *k, v.to_string()));
            }
        }
        let s = h
            .s()
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(x, v)| (x / d, x % d, v.to_string()))
            .collect();
        AlgebraFile {
            name,
            basis: h.basis().to_vec(),
            m,
            eta: h.eta().iter().map(ToString::to_string).collect(),
            delta,
            eps: h.eps().iter().map(ToString::to_string).collect(),
            s,
        }
    }

    pub fn to_data(&self) -> Result<HopfData, CliError> {
        let d = self.basis.len();
        let idx = |i: usize| -> Result<usize, CliError> {
            if i < d {
                Ok(i)
            } else {
                Err(CliError::Usage(format!("basis index {i} out of range for dimension {d}")))
            }
        };
        let mut m = vec![Cyclo::zero(); d * d * d];
        for (i, j, k, v) in &self.m {
            m[(idx(*i)? * d + idx(*j)?) * d + idx(*k)?] = scalar(v)?;
        }
        let mut delta = vec![Cyclo::zero(); d * d * d];
        for (i, j, k, v) in &self.delta {
            delta[(idx(*i)? * d + idx(*j)?) * d + idx(*k)?] = scalar(v)?;
        }
        let mut s = vec![Cyclo::zero(); d * d];
        for (i, j, v) in &self.s {
            s[idx(*i)? * d + idx(*j)?] = scalar(v)?;
        }
        let eta = self.eta.iter().map(|v| scalar(v)).collect::<Result<_, _>>()?;
        let eps = self.eps.iter().map(|v| scalar(v)).collect::<Result<_, _>>()?;
        HopfData::new(self.basis.clone(), m, eta, delta, eps, s).map_err(|e| CliError::Usage(e.to_string()))
    }
}

fn matrix_rows(m: &FieldMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect()
}

fn matrix_from_rows(rows: &[Vec<String>]) -> Result<FieldMatrix, CliError> {
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(CliError::Usage("pairing matrix rows differ in length".into()));
    }
    let data = rows.iter().flatten().map(|v| scalar(v)).collect::<Result<Vec<_>, _>>()?;
    Ok(FieldMatrix::from_flat(rows.len(), cols, data))
}

impl TripletFile {
    pub fn from_candidate(c: &TripletCandidate) -> TripletFile {
        TripletFile {
            name: c.name.clone(),
            algebras: [0, 1, 2].map(|k| AlgebraFile::from_data(None, &c.algebras[k])),
            pairings: [0, 1, 2].map(|k| matrix_rows(&c.pairings[k])),
        }
    }

    pub fn to_candidate(&self) -> Result<TripletCandidate, CliError> {
        let [a, b, k] = &self.algebras;
        let [p, q, r] = &self.pairings;
        Ok(TripletCandidate {
            name: self.name.clone(),
            algebras: [a.to_data()?, b.to_data()?, k.to_data()?],
            pairings: [matrix_from_rows(p)?, matrix_from_rows(q)?, matrix_from_rows(r)?],
        })
    }
}

impl DiagramFile {
    pub fn from_diagram(d: &CombedDiagram) -> DiagramFile {
        DiagramFile {
            type_tuple: d.type_tuple.as_array(),
            marked: d.marked,
            curves: d
                .curves
                .iter()
                .map(|c| CurveFile {
                    family: c.family.name().to_string(),
                    id: c.id.clone(),
                    total_rot: fmt_rational(&c.total),
                    crossings: c.crossings.clone(),
                })
                .collect(),
            crossings: d
                .crossings
                .iter()
                .map(|x| CrossingFile {
                    id: x.id.clone(),
                    a: x.a.clone(),
                    b: x.b.clone(),
                    sign: x.sign,
                    partial_a: fmt_rational(&x.partial_a),
                    partial_b: fmt_rational(&x.partial_b),
                })
                .collect(),
            homology: d.homology.as_ref().map(|h| HomologyFile { rank: h.rank, classes: h.classes.clone() }),
        }
    }

    pub fn to_diagram(&self) -> Result<CombedDiagram, CliError> {
        let [g, k1, k2, k3, p, b] = self.type_tuple;
        let mut d = CombedDiagram::empty(TypeTuple::new(g, k1, k2, k3, p, b));
        d.marked = self.marked;
        for c in &self.curves {
            let family = Family::parse(&c.family).ok_or_else(|| CliError::Usage(format!("unknown family '{}'", c.family)))?;
            d.curves.push(Curve { id: c.id.clone(), family, total: rational(&c.total_rot)?, crossings: c.crossings.clone() });
        }
        for x in &self.crossings {
            d.crossings.push(Crossing {
                id: x.id.clone(),
                a: x.a.clone(),
                b: x.b.clone(),
                sign: x.sign,
                partial_a: rational(&x.partial_a)?,
                partial_b: rational(&x.partial_b)?,
            });
        }
        d.homology = self.homology.as_ref().map(|h| HomologyData { rank: h.rank, classes: h.classes.clone() });
        Ok(d)
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}
