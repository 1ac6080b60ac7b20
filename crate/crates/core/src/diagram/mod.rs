//! Marked trisection diagrams carrying combing rotation data.

mod builtins;
mod homology;
mod moves;
mod random;

#[cfg(test)]
mod tests;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

pub use crate::scalar::Rational64;
pub use builtins::{boundary_sum, builtin, stabilize, BUILTIN_NAMES};
pub use homology::{euler_characteristic, homology, AbelianGroup, CombingCount, Homology};
pub use moves::{
    handle_slide, isotopy_backward, isotopy_forward, reverse_orientation, spiral, three_point, three_point_valid,
    two_point_create, two_point_remove, MoveError,
};
pub use random::{random_diagram, random_move, with_random_triangle, MoveKind, RandomSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Alpha,
    Beta,
    Kappa,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Alpha, Family::Beta, Family::Kappa];

    pub fn index(self) -> usize {
        self as usize
    }
    pub fn from_index(i: usize) -> Family {
        Family::ALL[i % 3]
    }
    /// Cyclic successor: alpha -> beta -> kappa -> alpha.
    pub fn next(self) -> Family {
        Family::from_index(self.index() + 1)
    }
    pub fn prev(self) -> Family {
        Family::from_index(self.index() + 2)
    }
    pub fn name(self) -> &'static str {
        ["alpha", "beta", "kappa"][self.index()]
    }
    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "alpha" | "a" | "α" => Some(Family::Alpha),
            "beta" | "b" | "β" => Some(Family::Beta),
            "kappa" | "k" | "κ" => Some(Family::Kappa),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// (g, k1, k2, k3; p, b).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct TypeTuple {
    pub g: u32,
    pub k: [u32; 3],
    pub p: u32,
    pub b: u32,
}

impl TypeTuple {
    pub fn new(g: u32, k1: u32, k2: u32, k3: u32, p: u32, b: u32) -> Self {
        TypeTuple { g, k: [k1, k2, k3], p, b }
    }
    pub fn as_array(&self) -> [u32; 6] {
        [self.g, self.k[0], self.k[1], self.k[2], self.p, self.b]
    }
    /// Curves per family.
    pub fn curves_per_family(&self) -> Option<u32> {
        self.g.checked_sub(self.p)
    }
    /// Rank of the first homology of the surface, 2g + b - 1.
    pub fn surface_rank(&self) -> usize {
        (2 * self.g + self.b).saturating_sub(1) as usize
    }
    /// Type of a boundary sum.
    pub fn boundary_sum(&self, o: &TypeTuple) -> TypeTuple {
        TypeTuple {
            g: self.g + o.g,
            k: [self.k[0] + o.k[0], self.k[1] + o.k[1], self.k[2] + o.k[2]],
            p: self.p + o.p,
            b: self.b + o.b - 1,
        }
    }
}

impl fmt::Display for TypeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{};{},{})", self.g, self.k[0], self.k[1], self.k[2], self.p, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Curve {
    pub id: String,
    pub family: Family,
    /// Total rotation, an element of Z + 1/2.
    pub total: Rational64,
    /// Crossing ids in order from the basepoint along the orientation.
    pub crossings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub id: String,
    /// Curve of the cyclically first family of the pair.
    pub a: String,
    pub b: String,
    pub sign: i8,
    pub partial_a: Rational64,
    pub partial_b: Rational64,
}

impl Crossing {
    /// 2(partial_a - partial_b) + 1/2, which should be an integer.
    pub fn exponent_exact(&self) -> Rational64 {
        (self.partial_a - self.partial_b) * 2 + Rational64::new(1, 2)
    }
    pub fn exponent(&self) -> Option<i64> {
        let e = self.exponent_exact();
        e.is_integer().then(|| e.to_integer())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyData {
    pub rank: usize,
    /// Class of each curve in the first homology of the surface.
    pub classes: BTreeMap<String, Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CombedDiagram {
    pub type_tuple: TypeTuple,
    pub marked: usize,
    pub curves: Vec<Curve>,
    pub crossings: Vec<Crossing>,
    pub homology: Option<HomologyData>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    FamilyCount,
    DuplicateId,
    UnknownCurve,
    Occurrence,
    FamilyOrder,
    Exponent,
    Parity,
    Sign,
    Total,
    Partial,
    Marked,
    HomologyShape,
    Intersection,
}

impl ViolationKind {
    pub fn name(self) -> &'static str {
        match self {
            ViolationKind::FamilyCount => "family-count",
            ViolationKind::DuplicateId => "duplicate-id",
            ViolationKind::UnknownCurve => "unknown-curve",
            ViolationKind::Occurrence => "occurrence",
            ViolationKind::FamilyOrder => "family-order",
            ViolationKind::Exponent => "exponent",
            ViolationKind::Parity => "parity",
            ViolationKind::Sign => "sign",
            ViolationKind::Total => "total-rotation",
            ViolationKind::Partial => "partial-rotation",
            ViolationKind::Marked => "marked-boundary",
            ViolationKind::HomologyShape => "homology-shape",
            ViolationKind::Intersection => "intersection-number",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub location: String,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.kind.name(), self.location, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Conditions that abstract data cannot certify.
    pub unverified_geometric: Vec<&'static str>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            writeln!(f, "valid")?;
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        for u in &self.unverified_geometric {
            writeln!(f, "unverified-geometric: {u}")?;
        }
        Ok(())
    }
}

/// Standard symplectic form on the first 2g coordinates (a1, b1, a2, b2, ...).
pub fn intersection_form(g: usize, x: &[i64], y: &[i64]) -> i64 {
    (0..g).map(|i| x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i]).sum()
}

fn is_half_odd(r: &Rational64) -> bool {
    let t = *r * 2;
    t.is_integer() && t.to_integer().rem_euclid(2) == 1
}

fn is_quarter(r: &Rational64) -> bool {
    (*r * 4).is_integer()
}

impl CombedDiagram {
    pub fn empty(type_tuple: TypeTuple) -> Self {
        CombedDiagram { type_tuple, marked: 0, curves: Vec::new(), crossings: Vec::new(), homology: None }
    }

    pub fn curve_index(&self, id: &str) -> Option<usize> {
        self.curves.iter().position(|c| c.id == id)
    }
    pub fn crossing_index(&self, id: &str) -> Option<usize> {
        self.crossings.iter().position(|c| c.id == id)
    }
    pub fn curve(&self, id: &str) -> Option<&Curve> {
        self.curves.iter().find(|c| c.id == id)
    }
    pub fn crossing(&self, id: &str) -> Option<&Crossing> {
        self.crossings.iter().find(|c| c.id == id)
    }

    /// Exponent of a crossing as seen from `curve`: the stored exponent on
    /// the cyclically first curve, its negative on the other.
    pub fn exponent_on(&self, x: &Crossing, curve: &str) -> Option<i64> {
        let e = x.exponent()?;
        Some(if x.a == curve { e } else { -e })
    }

    pub fn curves_of(&self, f: Family) -> impl Iterator<Item = &Curve> {
        self.curves.iter().filter(move |c| c.family == f)
    }

    pub fn genus(&self) -> u32 {
        self.type_tuple.g
    }

    /// Id not used by any curve or crossing, of the form `stem` or `stem<n>`.
    pub fn fresh_id(&self, stem: &str) -> String {
        let used = |s: &str| self.curves.iter().any(|c| c.id == s) || self.crossings.iter().any(|c| c.id == s);
        if !used(stem) {
            return stem.to_string();
        }
        (1..).map(|n| format!("{stem}{n}")).find(|s| !used(s)).expect("unbounded")
    }

    pub fn validate(&self) -> ValidationReport {
        let mut v = Vec::new();
        let mut push = |kind, location: String, detail: String| v.push(Violation { kind, location, detail });
        let tt = &self.type_tuple;
        match tt.curves_per_family() {
            Some(n) => {
                for f in Family::ALL {
                    let c = self.curves_of(f).count();
                    if c != n as usize {
                        push(ViolationKind::FamilyCount, f.to_string(), format!("{c} curves, expected {n}"));
                    }
                }
            }
            None => push(ViolationKind::FamilyCount, "type".into(), "p exceeds g".into()),
        }
        if tt.b == 0 || self.marked >= tt.b as usize {
            push(ViolationKind::Marked, "marked".into(), format!("index {} with b = {}", self.marked, tt.b));
        }
        let mut ids = BTreeSet::new();
        for c in &self.curves {
            if !ids.insert(c.id.as_str()) {
                push(ViolationKind::DuplicateId, c.id.clone(), "repeated id".into());
            }
            if !is_half_odd(&c.total) {
                push(ViolationKind::Total, c.id.clone(), format!("{} is not in Z + 1/2", c.total));
            }
        }
        for x in &self.crossings {
            if !ids.insert(x.id.as_str()) {
                push(ViolationKind::DuplicateId, x.id.clone(), "repeated id".into());
            }
        }
        let curve_of = |id: &str| self.curves.iter().find(|c| c.id == id);
        let mut expected: BTreeMap<(&str, &str), usize> = BTreeMap::new();
        for x in &self.crossings {
            let (ca, cb) = (curve_of(&x.a), curve_of(&x.b));
            for (c, n) in [(ca, &x.a), (cb, &x.b)] {
                if c.is_none() {
                    push(ViolationKind::UnknownCurve, x.id.clone(), format!("curve {n} does not exist"));
                }
            }
            if let (Some(ca), Some(cb)) = (ca, cb) {
                if ca.family.next() != cb.family {
                    push(
                        ViolationKind::FamilyOrder,
                        x.id.clone(),
                        format!("families {} and {} are not a cyclic pair", ca.family, cb.family),
                    );
                }
                for c in [ca, cb] {
                    let n = c.crossings.iter().filter(|y| **y == x.id).count();
                    if n != 1 {
                        push(ViolationKind::Occurrence, format!("{} on {}", x.id, c.id), format!("listed {n} times"));
                    }
                }
                expected.insert((ca.id.as_str(), x.id.as_str()), 1);
                expected.insert((cb.id.as_str(), x.id.as_str()), 1);
            }
            for (p, side) in [(&x.partial_a, "a"), (&x.partial_b, "b")] {
                if !is_quarter(p) {
                    push(ViolationKind::Partial, format!("{} side {side}", x.id), format!("{p} is not a quarter-integer"));
                }
            }
            if x.sign != 1 && x.sign != -1 {
                push(ViolationKind::Sign, x.id.clone(), format!("sign {}", x.sign));
            }
            match x.exponent() {
                None => push(ViolationKind::Exponent, x.id.clone(), format!("exponent {} is not an integer", x.exponent_exact())),
                Some(e) => {
                    if (e.rem_euclid(2) == 0) != (x.sign == 1) {
                        push(ViolationKind::Parity, x.id.clone(), format!("exponent {e} with sign {}", x.sign));
                    }
                }
            }
        }
        for c in &self.curves {
            for y in &c.crossings {
                if !expected.contains_key(&(c.id.as_str(), y.as_str())) {
                    push(ViolationKind::Occurrence, format!("{y} on {}", c.id), "not a crossing of this curve".into());
                }
            }
        }
        if let Some(h) = &self.homology {
            if h.rank != tt.surface_rank() {
                push(ViolationKind::HomologyShape, "rank".into(), format!("{} but 2g+b-1 = {}", h.rank, tt.surface_rank()));
            }
            let mut shape_ok = true;
            for c in &self.curves {
                match h.classes.get(&c.id) {
                    Some(v) if v.len() == h.rank => {}
                    _ => {
                        shape_ok = false;
                        push(ViolationKind::HomologyShape, c.id.clone(), "missing or wrong-length class".into());
                    }
                }
            }
            if shape_ok && h.rank == tt.surface_rank() {
                let g = tt.g as usize;
                let mut sums: BTreeMap<(&str, &str), i64> = BTreeMap::new();
                for x in &self.crossings {
                    *sums.entry((x.a.as_str(), x.b.as_str())).or_default() += i64::from(x.sign);
                }
                for ca in &self.curves {
                    for cb in self.curves.iter().filter(|c| c.family == ca.family.next()) {
                        let s = sums.get(&(ca.id.as_str(), cb.id.as_str())).copied().unwrap_or(0);
                        let w = -intersection_form(g, &h.classes[&ca.id], &h.classes[&cb.id]);
                        if s != w {
                            push(
                                ViolationKind::Intersection,
                                format!("{} x {}", ca.id, cb.id),
                                format!("signed count {s} but classes give {w}"),
                            );
                        }
                    }
                }
            }
        }
        ValidationReport { violations: v, unverified_geometric: alloc::vec!["combing degree on the marked boundary"] }
    }

    /// Renames crossings to x0, x1, ... in order of first appearance along the
    /// curves and sorts the crossing list, so that diagrams differing only in
    /// crossing names compare equal.
    pub fn canonical(&self) -> CombedDiagram {
        let mut names: BTreeMap<&str, String> = BTreeMap::new();
        for c in &self.curves {
            for x in &c.crossings {
                let n = names.len();
                names.entry(x.as_str()).or_insert_with(|| format!("x{n}"));
            }
        }
        for x in &self.crossings {
            let n = names.len();
            names.entry(x.id.as_str()).or_insert_with(|| format!("x{n}"));
        }
        let mut d = self.clone();
        for c in &mut d.curves {
            for x in &mut c.crossings {
                *x = names[x.as_str()].clone();
            }
        }
        for x in &mut d.crossings {
            x.id = names[x.id.as_str()].clone();
        }
        d.crossings.sort_by_key(|x| x.id[1..].parse::<usize>().unwrap_or(usize::MAX));
        d
    }

    pub fn structurally_equal(&self, o: &CombedDiagram) -> bool {
        self.canonical() == o.canonical()
    }

    /// Adds the given (side a, side b) offsets to the partials of the named crossings.
    pub fn shift_partials(&self, shifts: &BTreeMap<String, (Rational64, Rational64)>) -> CombedDiagram {
        let mut d = self.clone();
        for x in &mut d.crossings {
            if let Some((sa, sb)) = shifts.get(&x.id) {
                x.partial_a += *sa;
                x.partial_b += *sb;
            }
        }
        d
    }

    /// Exponents of all crossings, by id.
    pub fn exponents(&self) -> BTreeMap<String, Option<i64>> {
        self.crossings.iter().map(|x| (x.id.clone(), x.exponent())).collect()
    }

    pub(crate) fn partial_on_mut(&mut self, xi: usize, curve: &str) -> &mut Rational64 {
        let x = &mut self.crossings[xi];
        if x.a == curve {
            &mut x.partial_a
        } else {
            &mut x.partial_b
        }
    }

    pub(crate) fn partner(&self, xi: usize, curve: &str) -> String {
        let x = &self.crossings[xi];
        if x.a == curve {
            x.b.clone()
        } else {
            x.a.clone()
        }
    }
}

pub(crate) fn half() -> Rational64 {
    Rational64::new(1, 2)
}

pub(crate) fn int(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}
