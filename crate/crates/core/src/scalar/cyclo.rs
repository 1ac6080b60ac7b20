use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::sync::atomic::{AtomicU32, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ScalarError;

/// Default upper bound on conductors reachable by arithmetic.
pub const DEFAULT_CONDUCTOR_BOUND: u32 = 64;

static CONDUCTOR_BOUND: AtomicU32 = AtomicU32::new(DEFAULT_CONDUCTOR_BOUND);

/// Current conductor bound.
pub fn conductor_bound() -> u32 {
    CONDUCTOR_BOUND.load(Ordering::Relaxed)
}

/// Sets the process-wide conductor bound.
pub fn set_conductor_bound(n: u32) {
    CONDUCTOR_BOUND.store(n.max(1), Ordering::Relaxed);
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> usize {
    let mut m = n;
    let mut r = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            r -= r / p;
        }
        p += 1;
    }
    if m > 1 {
        r -= r / m;
    }
    r as usize
}

fn smallest_prime_factor(n: u32) -> u32 {
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return p;
        }
        p += 1;
    }
    n
}

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    if n == 1 {
        return vec![-1, 1];
    }
    let p = smallest_prime_factor(n);
    let mut pk = p;
    while n % (pk * p) == 0 {
        pk *= p;
    }
    if pk == n {
        // Phi_{p^k}(x) = Phi_p(x^{p^{k-1}})
        let step = (n / p) as usize;
        let mut out = vec![0; step * (p as usize - 1) + 1];
        for i in 0..p as usize {
            out[i * step] = 1;
        }
        return out;
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = exact_poly_div(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_poly_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; rem.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    q
}

fn normalize_conductor(n: u32) -> u32 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

/// Exact element of the cyclotomic field Q(zeta_n).
///
/// Stored as coefficients of 1, z, ..., z^(phi(n)-1) reduced modulo the
/// n-th cyclotomic polynomial. Conductors congruent to 2 mod 4 are folded
/// to n/2, which generates the same field.
#[derive(Clone, Debug)]
pub struct Cyclo {
    n: u32,
    c: Vec<BigRational>,
}

fn reduce(mut poly: Vec<BigRational>, n: u32) -> Vec<BigRational> {
    let phi = euler_phi(n);
    if poly.len() <= phi {
        poly.resize(phi, BigRational::zero());
        return poly;
    }
    let cp = cyclotomic_polynomial(n);
    for deg in (phi..poly.len()).rev() {
        if poly[deg].is_zero() {
            continue;
        }
        let c = core::mem::replace(&mut poly[deg], BigRational::zero());
        for (i, &pi) in cp.iter().enumerate().take(phi) {
            if pi != 0 {
                let t = &c * BigRational::from_integer(BigInt::from(pi));
                poly[deg - phi + i] -= t;
            }
        }
    }
    poly.truncate(phi);
    poly
}

impl Cyclo {
    /// The rational zero.
    pub fn zero() -> Self {
        Cyclo { n: 1, c: vec![BigRational::zero()] }
    }

    /// The rational one.
    pub fn one() -> Self {
        Cyclo::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Cyclo { n: 1, c: vec![BigRational::from_integer(BigInt::from(v))] }
    }

    /// p/q as a rational scalar. Panics if q = 0.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        Cyclo { n: 1, c: vec![BigRational::new(BigInt::from(p), BigInt::from(q))] }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Cyclo { n: 1, c: vec![r] }
    }

    /// Builds an element from raw power-basis coefficients at conductor n.
    /// Coefficients beyond phi(n) are reduced.
    pub fn from_power_coeffs(n: u32, coeffs: Vec<BigRational>) -> Result<Self, ScalarError> {
        if n == 0 {
            return Err(ScalarError::Parse("conductor must be positive".into()));
        }
        check_bound(n)?;
        if n % 4 == 2 {
            // zeta_n^k = (-1)^k zeta_m^(k(m+1)/2) with m = n/2 odd
            let m = n / 2;
            let mut acc = Cyclo { n: m, c: vec![BigRational::zero(); euler_phi(m)] };
            for (k, ck) in coeffs.into_iter().enumerate() {
                if ck.is_zero() {
                    continue;
                }
                let term = root_of_unity(n, k as i64)?.scale(&ck);
                acc += term;
            }
            return Ok(acc);
        }
        Ok(Cyclo { n, c: reduce(coeffs, n) })
    }

    /// Working conductor of this representation.
    pub fn conductor(&self) -> u32 {
        self.n
    }

    /// Power-basis coefficients at the working conductor.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|x| x.is_zero())
    }

    /// Returns the rational value if the element lies in Q.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.c[1..].iter().all(|x| x.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// Multiplies by a rational.
    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclo { n: self.n, c: self.c.iter().map(|x| x * r).collect() }
    }

    /// Re-expresses the element at conductor m, a multiple of the current one.
    pub fn embed(&self, m: u32) -> Result<Self, ScalarError> {
        let m = normalize_conductor(m);
        if m == self.n {
            return Ok(self.clone());
        }
        if m % self.n != 0 {
            return Err(ScalarError::Parse(alloc::format!(
                "cannot embed conductor {} into {}",
                self.n,
                m
            )));
        }
        check_bound(m)?;
        let step = (m / self.n) as usize;
        let mut poly = vec![BigRational::zero(); step * self.c.len().max(1)];
        for (k, ck) in self.c.iter().enumerate() {
            poly[k * step] = ck.clone();
        }
        Ok(Cyclo { n: m, c: reduce(poly, m) })
    }

    fn unify(a: &Cyclo, b: &Cyclo) -> Result<(Cyclo, Cyclo), ScalarError> {
        let m = lcm(a.n, b.n);
        Ok((a.embed(m)?, b.embed(m)?))
    }

    pub fn checked_add(&self, o: &Cyclo) -> Result<Cyclo, ScalarError> {
        if self.n == o.n {
            return Ok(self.add_same(o));
        }
        let (a, b) = Cyclo::unify(self, o)?;
        Ok(a.add_same(&b))
    }

    fn add_same(&self, o: &Cyclo) -> Cyclo {
        Cyclo { n: self.n, c: self.c.iter().zip(&o.c).map(|(x, y)| x + y).collect() }
    }

    pub fn checked_mul(&self, o: &Cyclo) -> Result<Cyclo, ScalarError> {
        if self.n == 1 && o.n == 1 {
            return Ok(Cyclo { n: 1, c: vec![&self.c[0] * &o.c[0]] });
        }
        if o.n == 1 {
            return Ok(self.scale(&o.c[0]));
        }
        if self.n == 1 {
            return Ok(o.scale(&self.c[0]));
        }
        let (a, b) = if self.n == o.n { (self.clone(), o.clone()) } else { Cyclo::unify(self, o)? };
        let phi = a.c.len();
        let mut poly = vec![BigRational::zero(); 2 * phi - 1];
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] += x * y;
                }
            }
        }
        Ok(Cyclo { n: a.n, c: reduce(poly, a.n) })
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Cyclo, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.n == 1 {
            return Ok(Cyclo { n: 1, c: vec![self.c[0].recip()] });
        }
        // Solve (self * y) = 1 via the multiplication matrix.
        let phi = self.c.len();
        let mut cols = Vec::with_capacity(phi);
        for j in 0..phi {
            let mut poly = vec![BigRational::zero(); phi + j];
            for (i, x) in self.c.iter().enumerate() {
                poly[i + j] = x.clone();
            }
            cols.push(reduce(poly, self.n));
        }
        let a: Vec<Vec<BigRational>> =
            (0..phi).map(|r| (0..phi).map(|j| cols[j][r].clone()).collect()).collect();
        let mut rhs = vec![BigRational::zero(); phi];
        rhs[0] = BigRational::one();
        let y = solve_rational(&a, &rhs).ok_or(ScalarError::DivisionByZero)?;
        Ok(Cyclo { n: self.n, c: y })
    }

    pub fn checked_div(&self, o: &Cyclo) -> Result<Cyclo, ScalarError> {
        self.checked_mul(&o.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Cyclo, ScalarError> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = Cyclo::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Same value expressed at the smallest conductor containing it.
    pub fn minimized(&self) -> Cyclo {
        if self.n == 1 {
            return self.clone();
        }
        if let Some(r) = self.to_rational() {
            return Cyclo::from_rational(r);
        }
        let n = self.n;
        for d in 2..n {
            if n % d != 0 || d % 4 == 2 {
                continue;
            }
            let step = (n / d) as usize;
            let pd = euler_phi(d);
            let cols: Vec<Vec<BigRational>> = (0..pd)
                .map(|j| {
                    let mut poly = vec![BigRational::zero(); j * step + 1];
                    poly[j * step] = BigRational::one();
                    reduce(poly, n)
                })
                .collect();
            let a: Vec<Vec<BigRational>> =
                (0..self.c.len()).map(|r| (0..pd).map(|j| cols[j][r].clone()).collect()).collect();
            if let Some(y) = solve_rational(&a, &self.c) {
                return Cyclo { n: d, c: y };
            }
        }
        self.clone()
    }

    /// Sign of the first nonzero coefficient of the minimized form.
    pub fn leading_sign(&self) -> i32 {
        let m = self.minimized();
        for x in &m.c {
            if x.is_positive() {
                return 1;
            }
            if x.is_negative() {
                return -1;
            }
        }
        0
    }

    /// Smallest m with self^m = 1, searched up to `limit`.
    pub fn multiplicative_order(&self, limit: u32) -> Option<u32> {
        let mut acc = self.clone();
        for m in 1..=limit {
            if acc.is_one() || acc == Cyclo::one() {
                return Some(m);
            }
            acc = acc.checked_mul(self).ok()?;
        }
        None
    }
}

fn check_bound(n: u32) -> Result<(), ScalarError> {
    let b = conductor_bound();
    if n > b {
        Err(ScalarError::ConductorOverflow { needed: n, bound: b })
    } else {
        Ok(())
    }
}

/// zeta_n^k in canonical form.
pub fn root_of_unity(n: u32, k: i64) -> Result<Cyclo, ScalarError> {
    if n == 0 {
        return Err(ScalarError::Parse("conductor must be positive".into()));
    }
    let k = k.rem_euclid(n as i64) as u32;
    if n % 4 == 2 {
        let m = n / 2;
        let e = (k as u64 * ((m as u64 + 1) / 2)) % m as u64;
        let r = root_of_unity(m, e as i64)?;
        return Ok(if k % 2 == 1 { -r } else { r });
    }
    check_bound(n)?;
    let mut poly = vec![BigRational::zero(); k as usize + 1];
    poly[k as usize] = BigRational::one();
    Ok(Cyclo { n, c: reduce(poly, n) })
}

/// Solves a x = b over Q; returns one solution if consistent.
pub(crate) fn solve_rational(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut v = r.clone();
            v.push(bi.clone());
            v
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=cols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}

impl PartialEq for Cyclo {
    fn eq(&self, o: &Cyclo) -> bool {
        if self.n == o.n {
            return self.c == o.c;
        }
        match Cyclo::unify(self, o) {
            Ok((a, b)) => a.c == b.c,
            Err(_) => self.minimized().c == o.minimized().c && self.minimized().n == o.minimized().n,
        }
    }
}

impl Eq for Cyclo {}

impl Default for Cyclo {
    fn default() -> Self {
        Cyclo::zero()
    }
}

impl From<i64> for Cyclo {
    fn from(v: i64) -> Self {
        Cyclo::from_int(v)
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { n: self.n, c: self.c.into_iter().map(|x| -x).collect() }
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { n: self.n, c: self.c.iter().map(|x| -x).collect() }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:expr) => {
        impl $tr<&Cyclo> for &Cyclo {
            type Output = Cyclo;
            fn $m(self, o: &Cyclo) -> Cyclo {
                let f: fn(&Cyclo, &Cyclo) -> Result<Cyclo, ScalarError> = $f;
                match f(self, o) {
                    Ok(v) => v,
                    Err(e) => panic!("scalar arithmetic failed: {}", e),
                }
            }
        }
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, o: Cyclo) -> Cyclo {
                (&self).$m(&o)
            }
        }
        impl $tr<&Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, o: &Cyclo) -> Cyclo {
                (&self).$m(o)
            }
        }
        impl $tr<Cyclo> for &Cyclo {
            type Output = Cyclo;
            fn $m(self, o: Cyclo) -> Cyclo {
                self.$m(&o)
            }
        }
    };
}

binop!(Add, add, |a, b| a.checked_add(b));
binop!(Sub, sub, |a, b| a.checked_add(&-b));
binop!(Mul, mul, |a, b| a.checked_mul(b));
binop!(Div, div, |a, b| a.checked_div(b));

impl AddAssign<&Cyclo> for Cyclo {
    fn add_assign(&mut self, o: &Cyclo) {
        if self.n == o.n {
            for (x, y) in self.c.iter_mut().zip(&o.c) {
                *x += y;
            }
        } else {
            *self = &*self + o;
        }
    }
}

impl AddAssign<Cyclo> for Cyclo {
    fn add_assign(&mut self, o: Cyclo) {
        *self += &o;
    }
}

impl SubAssign<&Cyclo> for Cyclo {
    fn sub_assign(&mut self, o: &Cyclo) {
        *self += &-o;
    }
}

impl MulAssign<&Cyclo> for Cyclo {
    fn mul_assign(&mut self, o: &Cyclo) {
        *self = &*self * o;
    }
}

impl Zero for Cyclo {
    fn zero() -> Self {
        Cyclo::zero()
    }
    fn is_zero(&self) -> bool {
        Cyclo::is_zero(self)
    }
}

impl One for Cyclo {
    fn one() -> Self {
        Cyclo::one()
    }
}

impl core::iter::Sum for Cyclo {
    fn sum<I: Iterator<Item = Cyclo>>(it: I) -> Cyclo {
        let mut acc = Cyclo::zero();
        for x in it {
            acc += &x;
        }
        acc
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyclo {
    /// Canonical string: minimized conductor, terms in power order joined by " + ".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.minimized();
        let mut first = true;
        for (k, ck) in m.c.iter().enumerate() {
            if ck.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            fmt_rational(ck, f)?;
            if k > 0 {
                write!(f, "*z{{{}}}^{{{}}}", m.n, k)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
