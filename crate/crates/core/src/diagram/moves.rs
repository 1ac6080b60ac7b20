//! Diagram and combing moves. Each returns a new diagram and leaves the input
//! untouched.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{half, int, CombedDiagram, Crossing, Family, Rational64};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MoveError {
    #[error("unknown curve {0}")]
    UnknownCurve(String),
    #[error("unknown crossing {0}")]
    UnknownCrossing(String),
    #[error("invalid move: {0}")]
    Invalid(String),
    #[error("crossings are not adjacent: {0}")]
    NotAdjacent(String),
    #[error("rotation relation violated: {0}")]
    Relation(String),
}

fn curve_idx(d: &CombedDiagram, id: &str) -> Result<usize, MoveError> {
    d.curve_index(id).ok_or_else(|| MoveError::UnknownCurve(id.into()))
}

fn crossing_idx(d: &CombedDiagram, id: &str) -> Result<usize, MoveError> {
    d.crossing_index(id).ok_or_else(|| MoveError::UnknownCrossing(id.into()))
}

fn position(d: &CombedDiagram, curve: usize, x: &str) -> Result<usize, MoveError> {
    d.curves[curve]
        .crossings
        .iter()
        .position(|y| y == x)
        .ok_or_else(|| MoveError::Invalid(format!("{x} is not on {}", d.curves[curve].id)))
}

fn exponent(x: &Crossing) -> Result<i64, MoveError> {
    x.exponent().ok_or_else(|| MoveError::Relation(format!("exponent of {} is not an integer", x.id)))
}

fn sign_of(e: i64) -> i8 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Adds `k` to every partial on the curve. The bracket picks up q^k.
pub fn spiral(d: &CombedDiagram, curve: &str, k: i64) -> Result<CombedDiagram, MoveError> {
    let ci = curve_idx(d, curve)?;
    let mut out = d.clone();
    for x in d.curves[ci].crossings.iter() {
        let xi = crossing_idx(d, x)?;
        *out.partial_on_mut(xi, curve) += int(k);
    }
    Ok(out)
}

/// Reverses the orientation of a curve: partials shift by minus the total,
/// the total is negated, the order reversed, and crossing signs flip.
pub fn reverse_orientation(d: &CombedDiagram, curve: &str) -> Result<CombedDiagram, MoveError> {
    let ci = curve_idx(d, curve)?;
    let mut out = d.clone();
    let t = d.curves[ci].total;
    for x in d.curves[ci].crossings.iter() {
        let xi = crossing_idx(d, x)?;
        *out.partial_on_mut(xi, curve) -= t;
        out.crossings[xi].sign = -out.crossings[xi].sign;
    }
    let c = &mut out.curves[ci];
    c.total = -t;
    c.crossings.reverse();
    if let Some(h) = out.homology.as_mut() {
        if let Some(v) = h.classes.get_mut(curve) {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
    Ok(out)
}

/// Creates a bigon between `c1` (cyclically first family) and `c2`: crossings
/// p = (a, b) and q = (a, b - 1/2), so q's exponent is p's plus one. The pair
/// goes in at position `i` of `c1` and `j` of `c2`. Returns the new ids (p, q).
pub fn two_point_create(
    d: &CombedDiagram,
    c1: &str,
    c2: &str,
    i: usize,
    j: usize,
    a: Rational64,
    b: Rational64,
) -> Result<(CombedDiagram, [String; 2]), MoveError> {
    let (k1, k2) = (curve_idx(d, c1)?, curve_idx(d, c2)?);
    if d.curves[k1].family.next() != d.curves[k2].family {
        return Err(MoveError::Invalid(format!("{c1} does not precede {c2} cyclically")));
    }
    if i > d.curves[k1].crossings.len() || j > d.curves[k2].crossings.len() {
        return Err(MoveError::Invalid("creation site out of range".into()));
    }
    let mut out = d.clone();
    let pid = out.fresh_id("t");
    let mut p = Crossing { id: pid.clone(), a: c1.into(), b: c2.into(), sign: 1, partial_a: a, partial_b: b };
    let ep = exponent(&p)?;
    p.sign = sign_of(ep);
    out.crossings.push(p);
    let qid = out.fresh_id("t");
    let q = Crossing { id: qid.clone(), a: c1.into(), b: c2.into(), sign: sign_of(ep + 1), partial_a: a, partial_b: b - half() };
    out.crossings.push(q);
    out.curves[k1].crossings.splice(i..i, [pid.clone(), qid.clone()]);
    let pair = if ep.rem_euclid(2) == 0 { [pid.clone(), qid.clone()] } else { [qid.clone(), pid.clone()] };
    out.curves[k2].crossings.splice(j..j, pair);
    Ok((out, [pid, qid]))
}

/// Removes a bigon. The two crossings must join the same curves, sit next to
/// each other on both, and have exponents differing by one with the partner
/// order matching the creation rule.
pub fn two_point_remove(d: &CombedDiagram, p: &str, q: &str) -> Result<CombedDiagram, MoveError> {
    let (pi, qi) = (crossing_idx(d, p)?, crossing_idx(d, q)?);
    let (xp, xq) = (&d.crossings[pi], &d.crossings[qi]);
    if pi == qi || xp.a != xq.a || xp.b != xq.b {
        return Err(MoveError::Invalid(format!("{p} and {q} do not join the same two curves")));
    }
    let (k1, k2) = (curve_idx(d, &xp.a)?, curve_idx(d, &xp.b)?);
    let (i1, j1) = (position(d, k1, p)?, position(d, k1, q)?);
    let (i2, j2) = (position(d, k2, p)?, position(d, k2, q)?);
    if i1.abs_diff(j1) != 1 || i2.abs_diff(j2) != 1 {
        return Err(MoveError::NotAdjacent(format!("{p}, {q}")));
    }
    if xp.sign == xq.sign {
        return Err(MoveError::Relation(format!("{p} and {q} have equal signs")));
    }
    let (f, s) = if i1 < j1 { (xp, xq) } else { (xq, xp) };
    let (ef, es) = (exponent(f)?, exponent(s)?);
    let same_order = (i1 < j1) == (i2 < j2);
    let expected = match es - ef {
        1 => ef.rem_euclid(2) == 0,
        -1 => ef.rem_euclid(2) == 1,
        _ => return Err(MoveError::Relation(format!("exponents {ef} and {es} do not differ by one"))),
    };
    if same_order != expected {
        return Err(MoveError::Relation("order on the second curve does not match the exponents".into()));
    }
    let mut out = d.clone();
    for k in [k1, k2] {
        out.curves[k].crossings.retain(|x| x != p && x != q);
    }
    out.crossings.retain(|x| x.id != p && x.id != q);
    Ok(out)
}

/// Whether a triangle with the given orders and exponents admits the move.
/// `orders` = (x before z on alpha, x before y on beta, y before z on kappa);
/// `e` = exponents of (x, y, z) for x = alpha-beta, y = beta-kappa, z = kappa-alpha.
pub fn three_point_valid(orders: [bool; 3], e: [i64; 3]) -> bool {
    let (ra, rb, rk) = (orders[0], !orders[1], orders[2]);
    let par = [!(ra ^ rb), rb ^ rk, ra ^ rk];
    let odd = e.map(|v| v.rem_euclid(2) == 1);
    match e.iter().sum::<i64>() {
        1 => odd == par,
        2 => odd == par.map(|b| !b),
        _ => false,
    }
}

struct Triangle {
    ids: [usize; 3],
    curves: [usize; 3],
    /// positions (x, z) on alpha, (x, y) on beta, (y, z) on kappa
    pos: [[usize; 2]; 3],
}

fn triangle(d: &CombedDiagram, ids: [&str; 3]) -> Result<Triangle, MoveError> {
    let mut slot: [Option<usize>; 3] = [None; 3];
    for id in ids {
        let xi = crossing_idx(d, id)?;
        let x = &d.crossings[xi];
        let f = d.curve(&x.a).ok_or_else(|| MoveError::UnknownCurve(x.a.clone()))?.family;
        if slot[f.index()].replace(xi).is_some() {
            return Err(MoveError::Invalid("two crossings of the same family pair".into()));
        }
    }
    let [Some(x), Some(y), Some(z)] = slot else {
        return Err(MoveError::Invalid("triangle needs one crossing per family pair".into()));
    };
    let (cx, cy, cz) = (&d.crossings[x], &d.crossings[y], &d.crossings[z]);
    if cx.a != cz.b || cx.b != cy.a || cy.b != cz.a {
        return Err(MoveError::Invalid("crossings do not bound a triangle on three curves".into()));
    }
    let curves = [curve_idx(d, &cx.a)?, curve_idx(d, &cx.b)?, curve_idx(d, &cy.b)?];
    debug_assert_eq!(d.curves[curves[0]].family, Family::Alpha);
    let pairs = [(x, z), (x, y), (y, z)];
    let mut pos = [[0; 2]; 3];
    for k in 0..3 {
        let (u, v) = pairs[k];
        let pu = position(d, curves[k], &d.crossings[u].id)?;
        let pv = position(d, curves[k], &d.crossings[v].id)?;
        if pu.abs_diff(pv) != 1 {
            return Err(MoveError::NotAdjacent(format!("on {}", d.curves[curves[k]].id)));
        }
        pos[k] = [pu, pv];
    }
    Ok(Triangle { ids: [x, y, z], curves, pos })
}

/// Three-point move: swaps the order of each adjacent pair of the triangle,
/// keeping all rotation data.
pub fn three_point(d: &CombedDiagram, ids: [&str; 3]) -> Result<CombedDiagram, MoveError> {
    let t = triangle(d, ids)?;
    let orders = t.pos.map(|[u, v]| u < v);
    let mut e = [0i64; 3];
    for k in 0..3 {
        e[k] = exponent(&d.crossings[t.ids[k]])?;
    }
    if !three_point_valid(orders, e) {
        return Err(MoveError::Relation(format!("exponents {e:?} with orders {orders:?} admit no three-point move")));
    }
    let mut out = d.clone();
    for k in 0..3 {
        let [u, v] = t.pos[k];
        out.curves[t.curves[k]].crossings.swap(u, v);
    }
    Ok(out)
}

/// Slides curve `cj` over `ci` (same family). The copy of `ci` enters `cj`
/// at position `pos`, its partials on the `cj` side offset by `n`.
pub fn handle_slide(d: &CombedDiagram, cj: &str, ci: &str, pos: usize, n: i64) -> Result<CombedDiagram, MoveError> {
    let (kj, ki) = (curve_idx(d, cj)?, curve_idx(d, ci)?);
    if kj == ki {
        return Err(MoveError::Invalid("a curve cannot slide over itself".into()));
    }
    if d.curves[kj].family != d.curves[ki].family {
        return Err(MoveError::Invalid("handle slides need curves of one family".into()));
    }
    if pos > d.curves[kj].crossings.len() {
        return Err(MoveError::Invalid("slide position out of range".into()));
    }
    let (ti, tj) = (d.curves[ki].total, d.curves[kj].total);
    let mut out = d.clone();
    let shift = ti + half();
    for x in &d.curves[kj].crossings[pos..] {
        let xi = crossing_idx(d, x)?;
        *out.partial_on_mut(xi, cj) += shift;
    }
    let mut new_ids = Vec::with_capacity(d.curves[ki].crossings.len());
    for q in &d.curves[ki].crossings {
        let qi = crossing_idx(d, q)?;
        let xq = d.crossings[qi].clone();
        let first = xq.a == ci;
        let partner = d.partner(qi, ci);
        let id = out.fresh_id(&format!("{q}'"));
        let copy = if first {
            Crossing { id: id.clone(), a: cj.into(), b: partner.clone(), sign: xq.sign, partial_a: xq.partial_a + int(n), partial_b: xq.partial_b }
        } else {
            Crossing { id: id.clone(), a: partner.clone(), b: cj.into(), sign: xq.sign, partial_a: xq.partial_a, partial_b: xq.partial_b + int(n) }
        };
        out.crossings.push(copy);
        let e = exponent(&xq)?;
        let after = (e.rem_euclid(2) == 1) ^ first;
        let kp = curve_idx(&out, &partner)?;
        let at = position(&out, kp, q)?;
        out.curves[kp].crossings.insert(if after { at + 1 } else { at }, id.clone());
        new_ids.push(id);
    }
    out.curves[kj].crossings.splice(pos..pos, new_ids);
    out.curves[kj].total = tj + ti + half();
    if let Some(h) = out.homology.as_mut() {
        if let (Some(vi), Some(vj)) = (h.classes.get(ci).cloned(), h.classes.get_mut(cj)) {
            vj.iter_mut().zip(vi).for_each(|(a, b)| *a += b);
        }
    }
    Ok(out)
}

/// Sign of the partner update in a basepoint isotopy across `x`.
fn isotopy_step(d: &CombedDiagram, xi: usize, curve: &str) -> Result<i64, MoveError> {
    let x = &d.crossings[xi];
    let e = exponent(x)?;
    Ok(if (e.rem_euclid(2) == 0) == (x.a == curve) { 1 } else { -1 })
}

/// Pushes the basepoint of `curve` backwards across its last crossing, which
/// becomes the first.
pub fn isotopy_forward(d: &CombedDiagram, curve: &str) -> Result<CombedDiagram, MoveError> {
    let ci = curve_idx(d, curve)?;
    let Some(x) = d.curves[ci].crossings.last().cloned() else {
        return Err(MoveError::Invalid(format!("{curve} has no crossings")));
    };
    let xi = crossing_idx(d, &x)?;
    let s = isotopy_step(d, xi, curve)?;
    let mut out = d.clone();
    let theta = d.curves[ci].total;
    *out.partial_on_mut(xi, curve) -= theta;
    let c = &mut out.curves[ci].crossings;
    c.rotate_right(1);
    shift_partner(&mut out, xi, curve, &x, s)?;
    Ok(out)
}

/// Inverse of [`isotopy_forward`]: the first crossing becomes the last.
pub fn isotopy_backward(d: &CombedDiagram, curve: &str) -> Result<CombedDiagram, MoveError> {
    let ci = curve_idx(d, curve)?;
    let Some(x) = d.curves[ci].crossings.first().cloned() else {
        return Err(MoveError::Invalid(format!("{curve} has no crossings")));
    };
    let xi = crossing_idx(d, &x)?;
    let s = isotopy_step(d, xi, curve)?;
    let mut out = d.clone();
    let theta = d.curves[ci].total;
    *out.partial_on_mut(xi, curve) += theta;
    out.curves[ci].crossings.rotate_left(1);
    shift_partner(&mut out, xi, curve, &x, -s)?;
    Ok(out)
}

fn shift_partner(out: &mut CombedDiagram, xi: usize, curve: &str, x: &str, s: i64) -> Result<(), MoveError> {
    let partner = out.partner(xi, curve);
    let kp = curve_idx(out, &partner)?;
    *out.partial_on_mut(xi, &partner) += Rational64::new(s, 2);
    let at = position(out, kp, x)?;
    let later: Vec<String> = out.curves[kp].crossings[at + 1..].to_vec();
    for y in later {
        let yi = crossing_idx(out, &y)?;
        *out.partial_on_mut(yi, &partner) += int(s);
    }
    out.curves[kp].total += int(s);
    Ok(())
}
