//! Random diagrams and random move applications for fuzzing.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use super::moves::{
    handle_slide, isotopy_backward, isotopy_forward, reverse_orientation, spiral, three_point, three_point_valid,
    two_point_create, two_point_remove,
};
use super::{CombedDiagram, Crossing, Curve, Family, Rational64, TypeTuple};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomSpec {
    pub curves_per_family: usize,
    pub crossings: usize,
    /// Totals are drawn from (2t+1)/2 with |t| <= max_total.
    pub max_total: i64,
}

impl Default for RandomSpec {
    fn default() -> Self {
        RandomSpec { curves_per_family: 1, crossings: 4, max_total: 2 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    TwoPointCreate,
    TwoPointRemove,
    ThreePoint,
    HandleSlide,
    IsotopyForward,
    IsotopyBackward,
    Spiral,
    Reversal,
}

impl MoveKind {
    pub const ALL: [MoveKind; 8] = [
        MoveKind::TwoPointCreate,
        MoveKind::TwoPointRemove,
        MoveKind::ThreePoint,
        MoveKind::HandleSlide,
        MoveKind::IsotopyForward,
        MoveKind::IsotopyBackward,
        MoveKind::Spiral,
        MoveKind::Reversal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::TwoPointCreate => "two-point-create",
            MoveKind::TwoPointRemove => "two-point-remove",
            MoveKind::ThreePoint => "three-point",
            MoveKind::HandleSlide => "handle-slide",
            MoveKind::IsotopyForward => "isotopy-forward",
            MoveKind::IsotopyBackward => "isotopy-backward",
            MoveKind::Spiral => "spiral",
            MoveKind::Reversal => "reversal",
        }
    }
}

/// Partials (a, b) with 2(a - b) + 1/2 = e and b a random quarter-integer.
fn partials_for<R: Rng + ?Sized>(rng: &mut R, e: i64) -> (Rational64, Rational64) {
    let b = Rational64::new(rng.gen_range(-8..=8), 4);
    (b + Rational64::new(2 * e - 1, 4), b)
}

fn sign(e: i64) -> i8 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// A diagram with random crossings between random curves. It satisfies every
/// combinatorial invariant but need not come from a trisection.
pub fn random_diagram<R: Rng + ?Sized>(rng: &mut R, spec: RandomSpec) -> CombedDiagram {
    let n = spec.curves_per_family;
    let mut d = CombedDiagram::empty(TypeTuple::new(n as u32, 0, 0, 0, 0, 1));
    for f in Family::ALL {
        for i in 0..n {
            let t = rng.gen_range(-spec.max_total..=spec.max_total);
            d.curves.push(Curve {
                id: format!("{}{i}", &f.name()[..1]),
                family: f,
                total: Rational64::new(2 * t + 1, 2),
                crossings: Vec::new(),
            });
        }
    }
    if n == 0 {
        return d;
    }
    for k in 0..spec.crossings {
        let f = Family::from_index(rng.gen_range(0..3));
        let c1 = f.index() * n + rng.gen_range(0..n);
        let c2 = f.next().index() * n + rng.gen_range(0..n);
        let e = rng.gen_range(-3..=3);
        let (pa, pb) = partials_for(rng, e);
        let id = format!("x{k}");
        d.crossings.push(Crossing {
            id: id.clone(),
            a: d.curves[c1].id.clone(),
            b: d.curves[c2].id.clone(),
            sign: sign(e),
            partial_a: pa,
            partial_b: pb,
        });
        for c in [c1, c2] {
            let at = rng.gen_range(0..=d.curves[c].crossings.len());
            d.curves[c].crossings.insert(at, id.clone());
        }
    }
    d
}

/// Inserts a fresh triangle admitting a three-point move on one curve of each
/// family. Returns the ids (alpha-beta, beta-kappa, kappa-alpha). The new
/// crossings change signed intersection counts, so homology data is dropped.
pub fn with_random_triangle<R: Rng + ?Sized>(rng: &mut R, d: &CombedDiagram) -> Option<(CombedDiagram, [String; 3])> {
    let pick = |rng: &mut R, f: Family| -> Option<usize> {
        let idx: Vec<usize> = (0..d.curves.len()).filter(|&i| d.curves[i].family == f).collect();
        idx.choose(rng).copied()
    };
    let (ka, kb, kk) = (pick(rng, Family::Alpha)?, pick(rng, Family::Beta)?, pick(rng, Family::Kappa)?);
    let orders = [rng.gen_bool(0.5), rng.gen_bool(0.5), rng.gen_bool(0.5)];
    let mut valid = Vec::new();
    for x in -3..=3 {
        for y in -3..=3 {
            for z in -3..=3 {
                if three_point_valid(orders, [x, y, z]) {
                    valid.push([x, y, z]);
                }
            }
        }
    }
    let e = *valid.choose(rng)?;
    let mut out = d.clone();
    out.homology = None;
    let curve_ids = [ka, kb, kk].map(|k| d.curves[k].id.clone());
    let mut ids: [String; 3] = Default::default();
    for k in 0..3 {
        let id = out.fresh_id("v");
        let (pa, pb) = partials_for(rng, e[k]);
        out.crossings.push(Crossing {
            id: id.clone(),
            a: curve_ids[k].clone(),
            b: curve_ids[(k + 1) % 3].clone(),
            sign: sign(e[k]),
            partial_a: pa,
            partial_b: pb,
        });
        ids[k] = id;
    }
    let [x, y, z] = ids.clone();
    let pairs = [(ka, x.clone(), z.clone(), orders[0]), (kb, x, y.clone(), orders[1]), (kk, y, z, orders[2])];
    for (c, u, v, first) in pairs {
        let at = rng.gen_range(0..=out.curves[c].crossings.len());
        let pair = if first { [u, v] } else { [v, u] };
        out.curves[c].crossings.splice(at..at, pair);
    }
    Some((out, ids))
}

fn removable_pairs(d: &CombedDiagram) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for c in &d.curves {
        for w in c.crossings.windows(2) {
            if two_point_remove(d, &w[0], &w[1]).is_ok() {
                out.push((w[0].clone(), w[1].clone()));
            }
        }
    }
    out
}

/// Applies one random move of the given kind, returning the result and a
/// description, or `None` when the diagram offers no site for it.
pub fn random_move<R: Rng + ?Sized>(rng: &mut R, d: &CombedDiagram, kind: MoveKind) -> Option<(CombedDiagram, String)> {
    let ncurves = d.curves.len();
    if ncurves == 0 {
        return None;
    }
    let any_curve = |rng: &mut R| d.curves[rng.gen_range(0..ncurves)].id.clone();
    match kind {
        MoveKind::TwoPointCreate => {
            let c1 = rng.gen_range(0..ncurves);
            let f = d.curves[c1].family.next();
            let partners: Vec<usize> = (0..ncurves).filter(|&i| d.curves[i].family == f).collect();
            let c2 = *partners.choose(rng)?;
            let i = rng.gen_range(0..=d.curves[c1].crossings.len());
            let j = rng.gen_range(0..=d.curves[c2].crossings.len());
            let e = rng.gen_range(-3..=3);
            let (a, b) = partials_for(rng, e);
            let (a_id, b_id) = (d.curves[c1].id.clone(), d.curves[c2].id.clone());
            let (out, _) = two_point_create(d, &a_id, &b_id, i, j, a, b).ok()?;
            Some((out, format!("create bigon {a_id}[{i}] {b_id}[{j}]")))
        }
        MoveKind::TwoPointRemove => {
            let pairs = removable_pairs(d);
            let (p, q) = pairs.choose(rng)?;
            Some((two_point_remove(d, p, q).ok()?, format!("remove bigon {p} {q}")))
        }
        MoveKind::ThreePoint => {
            let mut sites = Vec::new();
            let by = |f: Family| d.crossings.iter().filter(move |x| d.curve(&x.a).is_some_and(|c| c.family == f));
            for x in by(Family::Alpha) {
                for y in by(Family::Beta) {
                    for z in by(Family::Kappa) {
                        if three_point(d, [&x.id, &y.id, &z.id]).is_ok() {
                            sites.push([x.id.clone(), y.id.clone(), z.id.clone()]);
                        }
                    }
                }
            }
            let [x, y, z] = sites.choose(rng)?.clone();
            Some((three_point(d, [&x, &y, &z]).ok()?, format!("three-point {x} {y} {z}")))
        }
        MoveKind::HandleSlide => {
            let mut pairs = Vec::new();
            for i in 0..ncurves {
                for j in 0..ncurves {
                    if i != j && d.curves[i].family == d.curves[j].family {
                        pairs.push((i, j));
                    }
                }
            }
            let (i, j) = *pairs.choose(rng)?;
            let pos = rng.gen_range(0..=d.curves[j].crossings.len());
            let n = rng.gen_range(-2..=2);
            let (ci, cj) = (&d.curves[i].id, &d.curves[j].id);
            Some((handle_slide(d, cj, ci, pos, n).ok()?, format!("slide {cj} over {ci} at {pos} with n = {n}")))
        }
        MoveKind::IsotopyForward | MoveKind::IsotopyBackward => {
            let nonempty: Vec<&String> = d.curves.iter().filter(|c| !c.crossings.is_empty()).map(|c| &c.id).collect();
            let c = (*nonempty.choose(rng)?).clone();
            let out = if kind == MoveKind::IsotopyForward { isotopy_forward(d, &c) } else { isotopy_backward(d, &c) };
            Some((out.ok()?, format!("{} on {c}", kind.name())))
        }
        MoveKind::Spiral => {
            let c = any_curve(rng);
            let k = if rng.gen_bool(0.5) { 1 } else { -1 };
            Some((spiral(d, &c, k).ok()?, format!("spiral {k:+} on {c}")))
        }
        MoveKind::Reversal => {
            let c = any_curve(rng);
            Some((reverse_orientation(d, &c).ok()?, format!("reverse {c}")))
        }
    }
}
