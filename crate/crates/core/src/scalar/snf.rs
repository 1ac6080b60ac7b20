use alloc::vec;
use alloc::vec::Vec;

use num_rational::Rational64;
use num_traits::Zero;

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        IntMatrix { rows: r, cols: c, data: rows.iter().flatten().copied().collect() }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_cols(rows: usize, cols: &[Vec<i64>]) -> Self {
        let mut m = IntMatrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, &v) in c.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn col(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut r = IntMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..o.cols {
                    r.data[i * o.cols + j] += a * o.get(k, j);
                }
            }
        }
        r
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += f * row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: i64) {
        for j in 0..self.cols {
            let v = self.get(src, j);
            self.data[dst * self.cols + j] += f * v;
        }
    }

    /// col[dst] += f * col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: i64) {
        for i in 0..self.rows {
            let v = self.get(i, src);
            self.data[i * self.cols + dst] += f * v;
        }
    }

    /// Determinant by fraction-free expansion over Q (small matrices only).
    pub fn det(&self) -> i64 {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m: Vec<Vec<Rational64>> =
            (0..n).map(|i| (0..n).map(|j| Rational64::from_integer(self.get(i, j))).collect()).collect();
        let mut det = Rational64::from_integer(1);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else { return 0 };
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= m[c][c];
            for i in c + 1..n {
                let f = m[i][c] / m[c][c];
                for j in c..n {
                    let t = f * m[c][j];
                    m[i][j] -= t;
                }
            }
        }
        det.to_integer()
    }
}

/// Smith normal form with unimodular transforms: left * m * right = diagonal.
#[derive(Clone, Debug)]
pub struct Snf {
    /// Nonzero diagonal entries, positive, each dividing the next.
    pub invariants: Vec<i64>,
    pub diagonal: IntMatrix,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }
}

pub fn integer_smith_normal_form(m: &IntMatrix) -> Snf {
    let (r, c) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut left = IntMatrix::identity(r);
    let mut right = IntMatrix::identity(c);
    let mut t = 0;
    while t < r.min(c) {
        // pivot: smallest nonzero magnitude in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                let v = a.get(i, j);
                if v != 0 && best.map_or(true, |(bi, bj)| v.abs() < a.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap_rows(t, pi);
        left.swap_rows(t, pi);
        a.swap_cols(t, pj);
        right.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..r {
                let q = a.get(i, t).div_euclid(a.get(t, t));
                if q != 0 {
                    a.add_row(i, t, -q);
                    left.add_row(i, t, -q);
                }
                if a.get(i, t) != 0 {
                    a.swap_rows(t, i);
                    left.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..c {
                let q = a.get(t, j).div_euclid(a.get(t, t));
                if q != 0 {
                    a.add_col(j, t, -q);
                    right.add_col(j, t, -q);
                }
                if a.get(t, j) != 0 {
                    a.swap_cols(t, j);
                    right.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            let p = a.get(t, t);
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| a.get(i, j) % p != 0));
            match bad {
                Some(i) => {
                    a.add_row(t, i, 1);
                    left.add_row(t, i, 1);
                }
                None => break,
            }
        }
        if a.get(t, t) < 0 {
            for j in 0..c {
                let v = a.get(t, j);
                a.set(t, j, -v);
            }
            for j in 0..r {
                let v = left.get(t, j);
                left.set(t, j, -v);
            }
        }
        t += 1;
    }
    let invariants = (0..r.min(c)).map(|i| a.get(i, i)).filter(|&v| v != 0).collect();
    Snf { invariants, diagonal: a, left, right }
}

/// Z-basis of the integer kernel of m (as column vectors).
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<i64>> {
    let s = integer_smith_normal_form(m);
    (s.rank()..m.cols).map(|j| s.right.col(j)).collect()
}

/// Z-basis of the column lattice of m.
pub fn lattice_basis(m: &IntMatrix) -> Vec<Vec<i64>> {
    let s = integer_smith_normal_form(m);
    let mr = m.mul(&s.right);
    (0..s.rank()).map(|j| mr.col(j)).collect()
}

/// Integer coordinates of v in the lattice spanned by the independent
/// columns of `basis`, if v lies in it.
pub fn lattice_coordinates(basis: &IntMatrix, v: &[i64]) -> Option<Vec<i64>> {
    let (r, c) = (basis.rows, basis.cols);
    let mut m: Vec<Vec<Rational64>> = (0..r)
        .map(|i| {
            let mut row: Vec<Rational64> = (0..c).map(|j| Rational64::from_integer(basis.get(i, j))).collect();
            row.push(Rational64::from_integer(v[i]));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..c {
        let Some(p) = (row..r).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= inv;
        }
        for i in 0..r {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col];
                for j in col..=c {
                    let t = f * m[row][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|x| !x[c].is_zero()) {
        return None;
    }
    let mut out = vec![0i64; c];
    for (i, &pc) in pivots.iter().enumerate() {
        let x = m[i][c];
        if !x.is_integer() {
            return None;
        }
        out[pc] = x.to_integer();
    }
    Some(out)
}
