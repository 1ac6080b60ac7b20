//! Explicit Hopf algebras and R-matrices used throughout the crate.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{derive_variant, HopfData, HopfError, Variant};
use crate::scalar::{root_of_unity, Cyclo, FieldMatrix};

/// Antipode determined by S(x1) x2 = eps(x) 1, solved as a linear system.
/// Returns None when the bialgebra has no antipode.
pub fn solve_antipode(
    d: usize,
    m: &[Cyclo],
    eta: &[Cyclo],
    delta: &[Cyclo],
    eps: &[Cyclo],
) -> Option<Vec<Cyclo>> {
    let mut sys = FieldMatrix::zeros(d * d, d * d);
    let mut rhs = vec![Cyclo::zero(); d * d];
    for i in 0..d {
        for o in 0..d {
            rhs[i * d + o] = &eps[i] * &eta[o];
        }
        for j in 0..d {
            for k in 0..d {
                let c = &delta[(i * d + j) * d + k];
                if c.is_zero() {
                    continue;
                }
                for l in 0..d {
                    for o in 0..d {
                        let v = &m[(l * d + k) * d + o];
                        if !v.is_zero() {
                            let r = i * d + o;
                            let col = j * d + l;
                            let cur = sys.get(r, col).clone();
                            sys.set(r, col, &cur + &(c * v));
                        }
                    }
                }
            }
        }
    }
    sys.solve(&rhs)
}

fn assemble(
    basis: Vec<String>,
    m: Vec<Cyclo>,
    eta: Vec<Cyclo>,
    delta: Vec<Cyclo>,
    eps: Vec<Cyclo>,
) -> HopfData {
    let d = basis.len();
    let s = solve_antipode(d, &m, &eta, &delta, &eps).expect("example bialgebra has an antipode");
    HopfData::new(basis, m, eta, delta, eps, s).expect("consistent example")
}

fn unit_vec(d: usize, i: usize) -> Vec<Cyclo> {
    let mut v = vec![Cyclo::zero(); d];
    v[i] = Cyclo::one();
    v
}

/// The one-dimensional Hopf algebra k.
pub fn trivial() -> HopfData {
    assemble(vec!["1".into()], vec![Cyclo::one()], vec![Cyclo::one()], vec![Cyclo::one()], vec![Cyclo::one()])
}

/// Group algebra of Z/n with basis g^0, ..., g^(n-1).
pub fn group_algebra(n: usize) -> HopfData {
    assert!(n > 0);
    let mut m = vec![Cyclo::zero(); n * n * n];
    let mut delta = vec![Cyclo::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            m[(i * n + j) * n + (i + j) % n] = Cyclo::one();
        }
        delta[(i * n + i) * n + i] = Cyclo::one();
    }
    let basis = (0..n).map(|i| if i == 0 { "1".into() } else { format!("g^{i}") }).collect();
    assemble(basis, m, unit_vec(n, 0), delta, vec![Cyclo::one(); n])
}

/// Functions on Z/n, the dual of the group algebra.
pub fn function_algebra(n: usize) -> HopfData {
    derive_variant(&group_algebra(n), Variant::Dual).expect("group algebra antipode is invertible")
}

/// Gaussian binomial coefficient in w.
fn q_binomial(c: usize, k: usize, w: &Cyclo) -> Cyclo {
    // [c]_w! / ([k]_w! [c-k]_w!)
    let qint = |j: usize| -> Cyclo { (0..j).map(|e| w.pow(e as i64).expect("root of unity")).sum() };
    let fact = |j: usize| -> Cyclo { (1..=j).fold(Cyclo::one(), |acc, t| &acc * &qint(t)) };
    &fact(c) / &(&fact(k) * &fact(c - k))
}

/// Taft algebra of order n: g^n = 1, x^n = 0, x g = w g x with w a primitive
/// n-th root of unity, Delta(g) = g(x)g, Delta(x) = x(x)g + 1(x)x.
/// Basis g^a x^c at index a + n c.
pub fn taft(n: usize) -> HopfData {
    assert!(n >= 2);
    let w = root_of_unity(n as u32, 1).expect("conductor within bound");
    let d = n * n;
    let idx = |a: usize, c: usize| a % n + n * c;
    let mut m = vec![Cyclo::zero(); d * d * d];
    let mut delta = vec![Cyclo::zero(); d * d * d];
    for a1 in 0..n {
        for c1 in 0..n {
            for a2 in 0..n {
                for c2 in 0..n {
                    if c1 + c2 < n {
                        let sign = w.pow((c1 * a2) as i64).expect("root of unity");
                        m[(idx(a1, c1) * d + idx(a2, c2)) * d + idx(a1 + a2, c1 + c2)] = sign;
                    }
                }
            }
            for k in 0..=c1 {
                let coeff = q_binomial(c1, k, &w);
                delta[(idx(a1, c1) * d + idx(a1, k)) * d + idx(a1 + k, c1 - k)] = coeff;
            }
        }
    }
    let mut eps = vec![Cyclo::zero(); d];
    for a in 0..n {
        eps[idx(a, 0)] = Cyclo::one();
    }
    let basis = (0..d)
        .map(|i| {
            let (a, c) = (i % n, i / n);
            let g = match a {
                0 => String::new(),
                1 => "G".into(),
                _ => format!("G^{a}"),
            };
            let x = match c {
                0 => String::new(),
                1 => "X".into(),
                _ => format!("X^{c}"),
            };
            if a == 0 && c == 0 {
                "1".into()
            } else {
                format!("{g}{x}")
            }
        })
        .collect();
    assemble(basis, m, unit_vec(d, 0), delta, eps)
}

/// Sweedler's four-dimensional algebra, basis (1, G, X, GX).
pub fn sweedler() -> HopfData {
    taft(2)
}

/// The eight-dimensional algebra generated by G, H, X with G^2 = H^2 = 1,
/// X^2 = 0, GH = HG, GX = -XG, HX = -XH, G and H group-like and
/// Delta(X) = X(x)G + 1(x)X. Basis (1, G, H, GH, X, GX, HX, GHX).
pub fn a8() -> HopfData {
    let d = 8;
    let idx = |a: usize, b: usize, c: usize| (a % 2) + 2 * (b % 2) + 4 * c;
    let mut m = vec![Cyclo::zero(); d * d * d];
    let mut delta = vec![Cyclo::zero(); d * d * d];
    let mut eps = vec![Cyclo::zero(); d];
    for i in 0..d {
        let (a1, b1, c1) = (i & 1, (i >> 1) & 1, i >> 2);
        for j in 0..d {
            let (a2, b2, c2) = (j & 1, (j >> 1) & 1, j >> 2);
            if c1 + c2 < 2 {
                let sign = if c1 * (a2 + b2) % 2 == 1 { -1 } else { 1 };
                m[(i * d + j) * d + idx(a1 + a2, b1 + b2, c1 + c2)] = Cyclo::from_int(sign);
            }
        }
        if c1 == 0 {
            delta[(i * d + i) * d + i] = Cyclo::one();
            eps[i] = Cyclo::one();
        } else {
            delta[(i * d + i) * d + idx(a1 + 1, b1, 0)] = Cyclo::one();
            delta[(i * d + idx(a1, b1, 0)) * d + i] = Cyclo::one();
        }
    }
    let basis = ["1", "G", "H", "GH", "X", "GX", "HX", "GHX"].iter().map(|s| String::from(*s)).collect();
    assemble(basis, m, unit_vec(d, 0), delta, eps)
}

/// R = (1/n) sum_{a,b} w^(k a b) g^a (x) g^b on k[Z/n], w = exp(2 pi i / n);
/// flat layout R[a*n + b].
pub fn group_r_matrix(n: usize, k: i64) -> Result<Vec<Cyclo>, HopfError> {
    let inv_n = Cyclo::from_ratio(1, n as i64);
    let mut out = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let e = (k * (a * b) as i64).rem_euclid(n as i64);
            let z = root_of_unity(n as u32, e).map_err(|e| HopfError::Structure(format!("{e}")))?;
            out.push(&z * &inv_n);
        }
    }
    Ok(out)
}

/// The one-parameter family of R-matrices on Sweedler's algebra, basis
/// (1, G, X, GX); flat layout R[i*4 + j].
pub fn sweedler_r_matrix(lambda: &Cyclo) -> Vec<Cyclo> {
    let h = Cyclo::from_ratio(1, 2);
    let z = Cyclo::zero();
    let l = lambda.clone();
    vec![
        h.clone(),
        h.clone(),
        z.clone(),
        z.clone(),
        h.clone(),
        -&h,
        z.clone(),
        z.clone(),
        z.clone(),
        z.clone(),
        l.clone(),
        l.clone(),
        z.clone(),
        z,
        -&l,
        l,
    ]
}

/// R = 1 (x) 1 on any algebra.
pub fn trivial_r_matrix(h: &HopfData) -> Vec<Cyclo> {
    let d = h.dim();
    let mut out = vec![Cyclo::zero(); d * d];
    for (i, a) in h.eta().iter().enumerate() {
        for (j, b) in h.eta().iter().enumerate() {
            out[i * d + j] = a * b;
        }
    }
    out
}
