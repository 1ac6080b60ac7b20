use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::data::HopfData;
use crate::scalar::{Cyclo, FieldMatrix};

/// Maximum number of witnesses kept per axiom.
const WITNESS_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    CoproductMultiplicative,
    CoproductUnit,
    CounitMultiplicative,
    CounitUnit,
    Antipode,
}

impl Axiom {
    pub const ALL: [Axiom; 9] = [
        Axiom::Associativity,
        Axiom::Unit,
        Axiom::Coassociativity,
        Axiom::Counit,
        Axiom::CoproductMultiplicative,
        Axiom::CoproductUnit,
        Axiom::CounitMultiplicative,
        Axiom::CounitUnit,
        Axiom::Antipode,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::Unit => "unit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::CoproductMultiplicative => "coproduct_multiplicative",
            Axiom::CoproductUnit => "coproduct_unit",
            Axiom::CounitMultiplicative => "counit_multiplicative",
            Axiom::CounitUnit => "counit_unit",
            Axiom::Antipode => "antipode",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub failures: usize,
    /// Basis index tuples of the first few counterexamples.
    pub witnesses: Vec<Vec<usize>>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, a: Axiom) -> &AxiomCheck {
        self.checks.iter().find(|c| c.axiom == a).expect("every axiom is checked")
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed() {
                writeln!(f, "{}: pass", c.axiom)?;
            } else {
                writeln!(f, "{}: FAIL ({} cases, first {:?})", c.axiom, c.failures, c.witnesses.first())?;
            }
        }
        Ok(())
    }
}

struct Recorder {
    axiom: Axiom,
    failures: usize,
    witnesses: Vec<Vec<usize>>,
}

impl Recorder {
    fn new(axiom: Axiom) -> Self {
        Recorder { axiom, failures: 0, witnesses: Vec::new() }
    }
    fn check(&mut self, ok: bool, w: &[usize]) {
        if !ok {
            self.failures += 1;
            if self.witnesses.len() < WITNESS_CAP {
                self.witnesses.push(w.to_vec());
            }
        }
    }
    fn finish(self) -> AxiomCheck {
        AxiomCheck { axiom: self.axiom, failures: self.failures, witnesses: self.witnesses }
    }
}

/// Dense accumulator that remembers which slots were touched so it can be
/// compared and cleared cheaply.
pub(crate) struct Acc {
    v: Vec<Cyclo>,
    touched: Vec<usize>,
    mark: Vec<bool>,
}

impl Acc {
    pub(crate) fn new(n: usize) -> Self {
        Acc { v: vec![Cyclo::zero(); n], touched: Vec::new(), mark: vec![false; n] }
    }
    pub(crate) fn add(&mut self, i: usize, c: &Cyclo) {
        if c.is_zero() {
            return;
        }
        if !self.mark[i] {
            self.mark[i] = true;
            self.touched.push(i);
        }
        self.v[i] += c;
    }
    pub(crate) fn sub(&mut self, i: usize, c: &Cyclo) {
        self.add(i, &-c);
    }
    /// True if every entry is zero; clears the accumulator.
    pub(crate) fn drain_is_zero(&mut self) -> bool {
        let mut zero = true;
        for &i in &self.touched {
            if !self.v[i].is_zero() {
                zero = false;
            }
            self.v[i] = Cyclo::zero();
            self.mark[i] = false;
        }
        self.touched.clear();
        zero
    }
}

/// Checks the Hopf algebra axioms as exact identities on basis elements.
pub fn check_hopf_axioms(h: &HopfData) -> AxiomReport {
    let d = h.dim();
    let mut checks = Vec::new();

    // (e_i e_j) e_k = e_i (e_j e_k)
    let mut r = Recorder::new(Axiom::Associativity);
    let mut acc = Acc::new(d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for (m, c) in h.mul_basis(i, j) {
                    for (o, v) in h.mul_basis(*m, k) {
                        acc.add(*o, &(c * v));
                    }
                }
                for (m, c) in h.mul_basis(j, k) {
                    for (o, v) in h.mul_basis(i, *m) {
                        acc.sub(*o, &(c * v));
                    }
                }
                r.check(acc.drain_is_zero(), &[i, j, k]);
            }
        }
    }
    checks.push(r.finish());

    let eta = h.eta();
    let mut r = Recorder::new(Axiom::Unit);
    for i in 0..d {
        let mut left = Acc::new(d);
        let mut right = Acc::new(d);
        for (u, cu) in eta.iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            for (o, v) in h.mul_basis(u, i) {
                left.add(*o, &(cu * v));
            }
            for (o, v) in h.mul_basis(i, u) {
                right.add(*o, &(cu * v));
            }
        }
        left.sub(i, &Cyclo::one());
        right.sub(i, &Cyclo::one());
        let ok = left.drain_is_zero() & right.drain_is_zero();
        r.check(ok, &[i]);
    }
    checks.push(r.finish());

    // (Delta (x) id) Delta = (id (x) Delta) Delta
    let mut r = Recorder::new(Axiom::Coassociativity);
    let mut acc = Acc::new(d * d * d);
    for i in 0..d {
        for (a, m, c) in h.cop_basis(i) {
            for (b, e, v) in h.cop_basis(*m) {
                acc.add((a * d + b) * d + e, &(c * v));
            }
            for (x, y, v) in h.cop_basis(*a) {
                acc.sub((x * d + y) * d + m, &(c * v));
            }
        }
        r.check(acc.drain_is_zero(), &[i]);
    }
    checks.push(r.finish());

    let eps = h.eps();
    let mut r = Recorder::new(Axiom::Counit);
    for i in 0..d {
        let mut left = Acc::new(d);
        let mut right = Acc::new(d);
        for (a, b, c) in h.cop_basis(i) {
            left.add(*b, &(c * &eps[*a]));
            right.add(*a, &(c * &eps[*b]));
        }
        left.sub(i, &Cyclo::one());
        right.sub(i, &Cyclo::one());
        let ok = left.drain_is_zero() & right.drain_is_zero();
        r.check(ok, &[i]);
    }
    checks.push(r.finish());

    // Delta(e_i e_j) = Delta(e_i) Delta(e_j)
    let mut r = Recorder::new(Axiom::CoproductMultiplicative);
    let mut acc = Acc::new(d * d);
    for i in 0..d {
        for j in 0..d {
            for (m, c) in h.mul_basis(i, j) {
                for (a, b, v) in h.cop_basis(*m) {
                    acc.add(a * d + b, &(c * v));
                }
            }
            for (a1, b1, c1) in h.cop_basis(i) {
                for (a2, b2, c2) in h.cop_basis(j) {
                    let c = c1 * c2;
                    for (x, u) in h.mul_basis(*a1, *a2) {
                        let cu = &c * u;
                        for (y, w) in h.mul_basis(*b1, *b2) {
                            acc.sub(x * d + y, &(&cu * w));
                        }
                    }
                }
            }
            r.check(acc.drain_is_zero(), &[i, j]);
        }
    }
    checks.push(r.finish());

    let mut r = Recorder::new(Axiom::CoproductUnit);
    let mut acc = Acc::new(d * d);
    for (u, cu) in eta.iter().enumerate() {
        if cu.is_zero() {
            continue;
        }
        for (a, b, v) in h.cop_basis(u) {
            acc.add(a * d + b, &(cu * v));
        }
    }
    for (a, ca) in eta.iter().enumerate() {
        for (b, cb) in eta.iter().enumerate() {
            if !ca.is_zero() && !cb.is_zero() {
                acc.sub(a * d + b, &(ca * cb));
            }
        }
    }
    let witness: Vec<usize> = (0..d).filter(|&u| !eta[u].is_zero()).collect();
    r.check(acc.drain_is_zero(), &witness);
    checks.push(r.finish());

    let mut r = Recorder::new(Axiom::CounitMultiplicative);
    for i in 0..d {
        for j in 0..d {
            let mut lhs = Cyclo::zero();
            for (m, c) in h.mul_basis(i, j) {
                if !eps[*m].is_zero() {
                    lhs += &(c * &eps[*m]);
                }
            }
            r.check(lhs == &eps[i] * &eps[j], &[i, j]);
        }
    }
    checks.push(r.finish());

    let mut r = Recorder::new(Axiom::CounitUnit);
    r.check(h.counit(eta).is_one(), &[]);
    checks.push(r.finish());

    // S(x1) x2 = eps(x) 1 = x1 S(x2)
    let mut r = Recorder::new(Axiom::Antipode);
    let s = h.s();
    let mut left = Acc::new(d);
    let mut right = Acc::new(d);
    for i in 0..d {
        for (a, b, c) in h.cop_basis(i) {
            for l in 0..d {
                let sa = &s[a * d + l];
                if !sa.is_zero() {
                    let k = c * sa;
                    for (o, v) in h.mul_basis(l, *b) {
                        left.add(*o, &(&k * v));
                    }
                }
                let sb = &s[b * d + l];
                if !sb.is_zero() {
                    let k = c * sb;
                    for (o, v) in h.mul_basis(*a, l) {
                        right.add(*o, &(&k * v));
                    }
                }
            }
        }
        for (u, cu) in eta.iter().enumerate() {
            let e = &eps[i] * cu;
            left.sub(u, &e);
            right.sub(u, &e);
        }
        let ok = left.drain_is_zero() & right.drain_is_zero();
        r.check(ok, &[i]);
    }
    checks.push(r.finish());

    AxiomReport { checks }
}

/// Failures of phi: h1 -> h2 being a Hopf algebra morphism. `phi` has one row
/// per basis element of h1, holding its image in h2 coordinates.
pub fn check_morphism(h1: &HopfData, h2: &HopfData, phi: &FieldMatrix) -> Vec<(&'static str, Vec<usize>)> {
    let (d1, d2) = (h1.dim(), h2.dim());
    let mut out = Vec::new();
    if phi.rows() != d1 || phi.cols() != d2 {
        out.push(("shape", vec![phi.rows(), phi.cols()]));
        return out;
    }
    let img: Vec<Vec<Cyclo>> = (0..d1).map(|i| phi.row(i).to_vec()).collect();
    for i in 0..d1 {
        for j in 0..d1 {
            let lhs = phi.vec_mul(&h1.mul(&h1.basis_vector(i), &h1.basis_vector(j)));
            if lhs != h2.mul(&img[i], &img[j]) {
                out.push(("multiplication", vec![i, j]));
            }
        }
    }
    if phi.vec_mul(h1.eta()) != h2.eta() {
        out.push(("unit", vec![]));
    }
    for i in 0..d1 {
        // (phi (x) phi) Delta(e_i) against Delta(phi(e_i))
        let mut lhs = vec![Cyclo::zero(); d2 * d2];
        for (a, b, c) in h1.cop_basis(i) {
            for (x, px) in img[*a].iter().enumerate() {
                if px.is_zero() {
                    continue;
                }
                let k = c * px;
                for (y, py) in img[*b].iter().enumerate() {
                    if !py.is_zero() {
                        lhs[x * d2 + y] += &(&k * py);
                    }
                }
            }
        }
        if lhs != h2.cop(&img[i]) {
            out.push(("comultiplication", vec![i]));
        }
        if h2.counit(&img[i]) != h1.eps()[i] {
            out.push(("counit", vec![i]));
        }
        let s1 = phi.vec_mul(&h1.antipode_matrix().vec_mul(&h1.basis_vector(i)));
        let s2 = h2.antipode_matrix().vec_mul(&img[i]);
        if s1 != s2 {
            out.push(("antipode", vec![i]));
        }
    }
    out
}
