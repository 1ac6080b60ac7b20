use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{root_of_unity, Cyclo, ScalarError};

fn perr(msg: &str, s: &str) -> ScalarError {
    ScalarError::Parse(alloc::format!("{msg}: '{s}'"))
}

/// Parses "p" or "p/q".
pub fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p = BigInt::from_str(p).map_err(|_| perr("bad integer", p))?;
    let q = BigInt::from_str(q).map_err(|_| perr("bad integer", q))?;
    if q.is_zero() {
        return Err(ScalarError::DivisionByZero);
    }
    Ok(BigRational::new(p, q))
}

fn split_terms(s: &str) -> Result<Vec<String>, ScalarError> {
    let mut terms = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        match ch {
            '{' => depth += 1,
            '}' => depth -= 1,
            _ => {}
        }
        let boundary_plus = ch == '+' && depth == 0;
        let boundary_minus = ch == '-'
            && depth == 0
            && prev.is_some_and(|p| !matches!(p, '+' | '-' | '*' | '/' | '^'))
            && !cur.trim().is_empty();
        if boundary_plus || boundary_minus {
            if cur.trim().is_empty() {
                return Err(perr("empty term", s));
            }
            terms.push(core::mem::take(&mut cur));
            if boundary_minus {
                cur.push('-');
            }
        } else {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            prev = Some(ch);
        }
    }
    if depth != 0 {
        return Err(perr("unbalanced braces", s));
    }
    if cur.trim().is_empty() {
        return Err(perr("empty term", s));
    }
    terms.push(cur);
    Ok(terms)
}

fn parse_braced_int(s: &str) -> Result<(i64, &str), ScalarError> {
    let s = s.trim_start();
    if let Some(rest) = s.strip_prefix('{') {
        let end = rest.find('}').ok_or_else(|| perr("missing '}'", s))?;
        let v = rest[..end].trim().parse::<i64>().map_err(|_| perr("bad integer", &rest[..end]))?;
        Ok((v, &rest[end + 1..]))
    } else {
        let end = s
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_digit() || (i == 0 && c == '-')))
            .map(|(i, _)| i)
            .unwrap_or(s.len());
        let v = s[..end].parse::<i64>().map_err(|_| perr("bad integer", s))?;
        Ok((v, &s[end..]))
    }
}

fn parse_term(t: &str) -> Result<Cyclo, ScalarError> {
    let t = t.trim();
    let Some(zpos) = t.find('z') else {
        return Ok(Cyclo::from_rational(parse_rational(t)?));
    };
    let head = t[..zpos].trim();
    let coeff = if head.is_empty() || head == "+" {
        BigRational::one()
    } else if head == "-" {
        -BigRational::one()
    } else {
        let h = head.strip_suffix('*').ok_or_else(|| perr("expected '*' before z", t))?;
        parse_rational(h)?
    };
    let (n, rest) = parse_braced_int(&t[zpos + 1..])?;
    if n <= 0 {
        return Err(perr("conductor must be positive", t));
    }
    let rest = rest.trim();
    let (k, rest) = match rest.strip_prefix('^') {
        Some(r) => parse_braced_int(r)?,
        None => (1, rest),
    };
    if !rest.trim().is_empty() {
        return Err(perr("trailing characters", t));
    }
    Ok(root_of_unity(n as u32, k)?.scale(&coeff))
}

impl FromStr for Cyclo {
    type Err = ScalarError;

    /// Grammar: term (" + " term)*, term = "p/q" | "p/q*z{n}^{k}".
    fn from_str(s: &str) -> Result<Self, ScalarError> {
        if s.trim().is_empty() {
            return Err(perr("empty scalar", s));
        }
        let mut acc = Cyclo::zero();
        for t in split_terms(s)? {
            acc = acc.checked_add(&parse_term(&t)?)?;
        }
        Ok(acc)
    }
}

impl Cyclo {
    /// Canonical serialization; inverse of `from_str`.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }
}
