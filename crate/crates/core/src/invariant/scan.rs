//! Named triplets and parameter scans over builder families.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Evaluator, StabilizationBrackets};
use crate::hopf::examples::{group_algebra, group_r_matrix, sweedler, sweedler_r_matrix, trivial_r_matrix};
use crate::scalar::{BigRational, Cyclo};
use crate::triplet::{
    assemble_triplet, bicharacter_exponent_order, build_a8, build_cyclic_bicharacter, build_from_quasitriangular,
    build_trivial, HopfTriplet, TripletCandidate,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanFamily {
    /// Parameter t.
    A8,
    /// Parameters n, e1, e2, e3.
    Bicharacter,
    /// Quasi-triangular k[Z/n] with R_k: parameters n, k.
    GroupQt,
    /// Quasi-triangular Sweedler algebra: parameter lambda.
    SweedlerQt,
}

impl ScanFamily {
    pub const ALL: [ScanFamily; 4] = [ScanFamily::A8, ScanFamily::Bicharacter, ScanFamily::GroupQt, ScanFamily::SweedlerQt];

    pub fn name(self) -> &'static str {
        match self {
            ScanFamily::A8 => "a8",
            ScanFamily::Bicharacter => "bicharacter",
            ScanFamily::GroupQt => "group-qt",
            ScanFamily::SweedlerQt => "sweedler-qt",
        }
    }

    pub fn parse(s: &str) -> Option<ScanFamily> {
        ScanFamily::ALL.into_iter().find(|f| f.name() == s)
    }

    pub fn arity(self) -> usize {
        match self {
            ScanFamily::A8 | ScanFamily::SweedlerQt => 1,
            ScanFamily::GroupQt => 2,
            ScanFamily::Bicharacter => 4,
        }
    }

    pub fn candidate(self, params: &[BigRational]) -> Result<TripletCandidate, String> {
        if params.len() != self.arity() {
            return Err(format!("{} takes {} parameters, got {}", self.name(), self.arity(), params.len()));
        }
        let int = |x: &BigRational| -> Result<i64, String> {
            if !x.is_integer() {
                return Err(format!("parameter {x} must be an integer"));
            }
            x.to_integer().try_into().map_err(|_| format!("parameter {x} out of range"))
        };
        let order = |x: &BigRational| -> Result<usize, String> {
            match int(x)? {
                n @ 1..=64 => Ok(n as usize),
                n => Err(format!("cyclic order {n} outside 1..=64")),
            }
        };
        match self {
            ScanFamily::A8 => Ok(build_a8(&params[0])),
            ScanFamily::Bicharacter => {
                let n = order(&params[0])?;
                build_cyclic_bicharacter(n, [int(&params[1])?, int(&params[2])?, int(&params[3])?])
                    .map_err(|e| e.to_string())
            }
            ScanFamily::GroupQt => {
                let (n, k) = (order(&params[0])?, int(&params[1])?);
                let r = group_r_matrix(n, k).map_err(|e| e.to_string())?;
                build_from_quasitriangular(&format!("z{n}_qt{k}"), &group_algebra(n), &r).map_err(|e| e.to_string())
            }
            ScanFamily::SweedlerQt => {
                let l = Cyclo::from_rational(params[0].clone());
                build_from_quasitriangular(&format!("h4_qt{}", params[0]), &sweedler(), &sweedler_r_matrix(&l))
                    .map_err(|e| e.to_string())
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanRow {
    pub index: usize,
    pub params: Vec<BigRational>,
    pub name: String,
    /// `None` when accepted, otherwise (condition, detail).
    pub rejection: Option<(String, String)>,
    pub stabilization: Option<StabilizationBrackets>,
    pub error: Option<String>,
}

impl ScanRow {
    pub fn accepted(&self) -> bool {
        self.rejection.is_none() && self.error.is_none()
    }
    pub fn all_nonzero(&self) -> bool {
        self.stabilization.as_ref().is_some_and(StabilizationBrackets::all_nonzero)
    }
}

/// Assembles one grid point and, if accepted, its stabilization brackets.
pub fn scan_point(family: ScanFamily, index: usize, params: &[BigRational]) -> ScanRow {
    let mut row = ScanRow {
        index,
        params: params.to_vec(),
        name: String::new(),
        rejection: None,
        stabilization: None,
        error: None,
    };
    let cand = match family.candidate(params) {
        Ok(c) => c,
        Err(e) => {
            row.error = Some(e);
            return row;
        }
    };
    row.name = cand.name.clone();
    match assemble_triplet(cand) {
        Ok(t) => match Evaluator::new(&t).stabilization_brackets() {
            Ok(s) => row.stabilization = Some(s),
            Err(e) => row.error = Some(e.to_string()),
        },
        Err(r) => row.rejection = Some((r.condition, r.detail)),
    }
    row
}

/// Sequential scan; rows come back in grid order.
pub fn scan_grid(family: ScanFamily, grid: &[Vec<BigRational>]) -> Vec<ScanRow> {
    grid.iter().enumerate().map(|(i, p)| scan_point(family, i, p)).collect()
}

pub const TRIPLET_NAMES: [&str; 6] = ["trivial", "a8_t1", "z2", "z3", "z3_qt", "h4_qt"];

/// Builtin triplets: `trivial`, `a8_t<rational>`, `z<n>` (first accepted
/// bicharacter exponent triple starting from (1,1,1)), `z<n>_qt` (trivial
/// R-matrix for n = 2, R_1 otherwise) and `h4_qt` (Sweedler, lambda = 1).
pub fn named_triplet(name: &str) -> Result<HopfTriplet, String> {
    let reject = |r: crate::triplet::Rejection| format!("{name} rejected by condition {}: {}", r.condition, r.detail);
    if name == "trivial" {
        return assemble_triplet(build_trivial()).map_err(reject);
    }
    if name == "h4_qt" {
        let c = ScanFamily::SweedlerQt.candidate(&[BigRational::from_integer(1.into())])?;
        return assemble_triplet(c).map_err(reject);
    }
    if let Some(t) = name.strip_prefix("a8_t") {
        let t = crate::scalar::parse_rational(t).map_err(|e| format!("bad parameter in {name}: {e}"))?;
        return assemble_triplet(build_a8(&t)).map_err(reject);
    }
    if let Some(rest) = name.strip_prefix('z') {
        if let Some(n) = rest.strip_suffix("_qt") {
            let n: usize = n.parse().map_err(|_| format!("unknown triplet {name}"))?;
            if !(1..=64).contains(&n) {
                return Err(format!("cyclic order {n} outside 1..=64"));
            }
            let h = group_algebra(n);
            let r = if n == 2 { trivial_r_matrix(&h) } else { group_r_matrix(n, 1).map_err(|e| e.to_string())? };
            let c = build_from_quasitriangular(name, &h, &r).map_err(|e| e.to_string())?;
            return assemble_triplet(c).map_err(reject);
        }
        let n: usize = rest.parse().map_err(|_| format!("unknown triplet {name}"))?;
        if !(1..=64).contains(&n) {
            return Err(format!("cyclic order {n} outside 1..=64"));
        }
        let mut last = String::new();
        for e in bicharacter_exponent_order(n, [1, 1, 1]) {
            let c = build_cyclic_bicharacter(n, e).map_err(|e| e.to_string())?;
            match assemble_triplet(c) {
                Ok(t) => return Ok(t),
                Err(r) => last = reject(r),
            }
        }
        return Err(last);
    }
    Err(format!("unknown triplet {name}; builtins are {}", TRIPLET_NAMES.join(", ")))
}
