use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{CombedDiagram, Crossing, Curve, Family, HomologyData, MoveError, Rational64, TypeTuple};

pub const BUILTIN_NAMES: [&str; 7] = ["Tst1", "Tst2", "Tst3", "CP2", "CP2bar", "S2xS2", "B4"];

fn r(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn curve(id: &str, family: Family, total: Rational64, xs: &[&str]) -> Curve {
    Curve { id: id.into(), family, total, crossings: xs.iter().map(|s| s.to_string()).collect() }
}

fn crossing(id: &str, a: &str, b: &str, pa: Rational64, pb: Rational64) -> Crossing {
    let mut x = Crossing { id: id.into(), a: a.into(), b: b.into(), sign: 1, partial_a: pa, partial_b: pb };
    x.sign = if x.exponent().is_some_and(|e| e.rem_euclid(2) == 1) { -1 } else { 1 };
    x
}

fn classes(items: &[(&str, &[i64])]) -> BTreeMap<String, Vec<i64>> {
    items.iter().map(|(k, v)| (k.to_string(), v.to_vec())).collect()
}

fn sort_curves(d: &mut CombedDiagram) {
    d.curves.sort_by(|x, y| (x.family, &x.id).cmp(&(y.family, &y.id)));
}

/// Stabilization diagram j in {1, 2, 3}. For j = 2 the alpha curve meets both
/// others; j = 1 and j = 3 permute the family labels cyclically.
fn stabilization(j: u8) -> CombedDiagram {
    // roles (A, B, K) of the j = 2 picture
    let (fa, fb, fk) = match j {
        1 => (Family::Kappa, Family::Alpha, Family::Beta),
        2 => (Family::Alpha, Family::Beta, Family::Kappa),
        _ => (Family::Beta, Family::Kappa, Family::Alpha),
    };
    let (a, b, k) = (fa.name(), fb.name(), fk.name());
    let mut kk = [0u32; 3];
    kk[j as usize - 1] = 1;
    let mut d = CombedDiagram {
        type_tuple: TypeTuple::new(1, kk[0], kk[1], kk[2], 0, 1),
        marked: 0,
        curves: vec![
            curve(a, fa, r(1, 2), &["p", "q"]),
            curve(b, fb, r(3, 2), &["p"]),
            curve(k, fk, r(1, 2), &["q"]),
        ],
        crossings: vec![crossing("p", a, b, r(0, 1), r(3, 4)), crossing("q", k, a, r(0, 1), r(1, 4))],
        homology: Some(HomologyData { rank: 2, classes: classes(&[(a, &[1, 0]), (b, &[0, 1]), (k, &[0, 1])]) }),
    };
    sort_curves(&mut d);
    d
}

/// Genus-one diagram with one curve per family meeting pairwise once.
/// `mirror` negates all rotation data and the form.
fn projective_plane(mirror: bool) -> CombedDiagram {
    let s = if mirror { -1 } else { 1 };
    let curves = vec![
        curve("alpha", Family::Alpha, r(s, 2), &["x", "z"]),
        curve("beta", Family::Beta, r(s, 2), &["x", "y"]),
        curve("kappa", Family::Kappa, r(s, 2), &["y", "z"]),
    ];
    let crossings = vec![
        crossing("x", "alpha", "beta", r(0, 1), r(-s, 4)),
        crossing("y", "beta", "kappa", r(0, 1), r(s, 4)),
        crossing("z", "kappa", "alpha", r(0, 1), r(s, 4)),
    ];
    let cl: [(&str, &[i64]); 3] = if mirror {
        [("alpha", &[0, 1]), ("beta", &[1, 0]), ("kappa", &[1, 1])]
    } else {
        [("alpha", &[1, 0]), ("beta", &[0, 1]), ("kappa", &[1, 1])]
    };
    CombedDiagram {
        type_tuple: TypeTuple::new(1, 0, 0, 0, 0, 1),
        marked: 0,
        curves,
        crossings,
        homology: Some(HomologyData { rank: 2, classes: classes(&cl) }),
    }
}

fn s2_x_s2() -> CombedDiagram {
    let h = r(1, 2);
    let curves = vec![
        curve("a1", Family::Alpha, h, &["a1b1", "k2a1"]),
        curve("a2", Family::Alpha, h, &["a2b2", "k1a2"]),
        curve("b1", Family::Beta, h, &["a1b1", "b1k1"]),
        curve("b2", Family::Beta, h, &["a2b2", "b2k2"]),
        curve("k1", Family::Kappa, h, &["b1k1", "k1a2"]),
        curve("k2", Family::Kappa, h, &["b2k2", "k2a1"]),
    ];
    let (neg, pos) = (r(-1, 4), r(1, 4));
    let z = r(0, 1);
    let crossings = vec![
        crossing("a1b1", "a1", "b1", z, neg),
        crossing("a2b2", "a2", "b2", z, neg),
        crossing("b1k1", "b1", "k1", z, pos),
        crossing("b2k2", "b2", "k2", z, pos),
        crossing("k1a2", "k1", "a2", z, pos),
        crossing("k2a1", "k2", "a1", z, pos),
    ];
    let cl = classes(&[
        ("a1", &[1, 0, 0, 0]),
        ("b1", &[0, 1, 0, 0]),
        ("a2", &[0, 0, 1, 0]),
        ("b2", &[0, 0, 0, 1]),
        ("k1", &[1, 0, 0, 1]),
        ("k2", &[0, 1, 1, 0]),
    ]);
    CombedDiagram {
        type_tuple: TypeTuple::new(2, 0, 0, 0, 0, 1),
        marked: 0,
        curves,
        crossings,
        homology: Some(HomologyData { rank: 4, classes: cl }),
    }
}

pub fn builtin(name: &str) -> Option<CombedDiagram> {
    Some(match name {
        "Tst1" => stabilization(1),
        "Tst2" => stabilization(2),
        "Tst3" => stabilization(3),
        "CP2" => projective_plane(false),
        "CP2bar" => projective_plane(true),
        "S2xS2" => s2_x_s2(),
        "B4" => {
            let mut d = CombedDiagram::empty(TypeTuple::new(0, 0, 0, 0, 0, 1));
            d.homology = Some(HomologyData { rank: 0, classes: BTreeMap::new() });
            d
        }
        _ => return None,
    })
}

fn fresh(taken: &BTreeSet<String>, id: &str) -> String {
    if !taken.contains(id) {
        return id.to_string();
    }
    (2..).map(|n| format!("{id}_{n}")).find(|s| !taken.contains(s)).expect("unbounded")
}

/// Boundary sum along the marked components. Ids of the second summand are
/// renamed on collision; homology coordinates are merged as
/// (surface part of d1, surface part of d2, boundary part of d1, boundary part of d2).
pub fn boundary_sum(d1: &CombedDiagram, d2: &CombedDiagram) -> Result<CombedDiagram, MoveError> {
    for (k, d) in [(1, d1), (2, d2)] {
        let rep = d.validate();
        if !rep.is_valid() {
            return Err(MoveError::Invalid(format!("summand {k}: {}", rep.violations[0])));
        }
    }
    let mut taken: BTreeSet<String> = d1.curves.iter().map(|c| c.id.clone()).collect();
    taken.extend(d1.crossings.iter().map(|x| x.id.clone()));
    let mut rename = BTreeMap::new();
    for id in d2.curves.iter().map(|c| &c.id).chain(d2.crossings.iter().map(|x| &x.id)) {
        let n = fresh(&taken, id);
        taken.insert(n.clone());
        rename.insert(id.clone(), n);
    }
    let rn = |s: &String| rename[s].clone();
    let mut out = d1.clone();
    out.type_tuple = d1.type_tuple.boundary_sum(&d2.type_tuple);
    for c in &d2.curves {
        out.curves.push(Curve {
            id: rn(&c.id),
            family: c.family,
            total: c.total,
            crossings: c.crossings.iter().map(rn).collect(),
        });
    }
    for x in &d2.crossings {
        out.crossings.push(Crossing { id: rn(&x.id), a: rn(&x.a), b: rn(&x.b), ..x.clone() });
    }
    out.homology = match (&d1.homology, &d2.homology) {
        (Some(h1), Some(h2)) => {
            let (s1, s2) = (2 * d1.type_tuple.g as usize, 2 * d2.type_tuple.g as usize);
            let (r1, r2) = (h1.rank, h2.rank);
            let mut cl = BTreeMap::new();
            for (id, v) in &h1.classes {
                let mut w = v[..s1].to_vec();
                w.extend(core::iter::repeat(0).take(s2));
                w.extend_from_slice(&v[s1..]);
                w.extend(core::iter::repeat(0).take(r2 - s2));
                cl.insert(id.clone(), w);
            }
            for (id, v) in &h2.classes {
                let mut w = vec![0; s1];
                w.extend_from_slice(&v[..s2]);
                w.extend(core::iter::repeat(0).take(r1 - s1));
                w.extend_from_slice(&v[s2..]);
                cl.insert(rn(id), w);
            }
            Some(HomologyData { rank: r1 + r2, classes: cl })
        }
        _ => None,
    };
    sort_curves(&mut out);
    Ok(out)
}

pub fn stabilize(d: &CombedDiagram, j: u8) -> Result<CombedDiagram, MoveError> {
    if !(1..=3).contains(&j) {
        return Err(MoveError::Invalid(format!("stabilization index {j} not in 1..=3")));
    }
    boundary_sum(d, &stabilization(j))
}
