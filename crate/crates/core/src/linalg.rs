//! Dense linear algebra over a prime field, plus an exact rational rank
//! (fraction-free Bareiss elimination on big integers) for cross-checks.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Default modulus. Ranks of the 0/±1 systems built here do not depend on
/// the characteristic once it is this large.
pub const DEFAULT_PRIME: u64 = 1_000_003;

/// Arithmetic used for rank computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Field {
    Prime(u64),
    Rational,
}

impl Default for Field {
    fn default() -> Self {
        Field::Prime(DEFAULT_PRIME)
    }
}

/// Row-major matrix with entries reduced modulo a prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Mat::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            m.data[i * c..(i + 1) * c].copy_from_slice(row);
        }
        m
    }

    /// Matrix whose columns are the given vectors; `rows` fixes the height
    /// when there are no columns.
    pub fn from_cols(rows: usize, cols: &[Vec<u64>]) -> Self {
        let mut m = Mat::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn col(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn mul(&self, other: &Mat, p: u64) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = (out.get(i, j) + a * other.get(k, j)) % p;
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Reduce a signed integer into `[0, p)`.
#[inline]
pub fn reduce(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

/// In-place reduced row echelon form. Returns pivot columns.
pub fn rref(m: &mut Mat, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
            continue;
        };
        if piv != r {
            for j in 0..m.cols {
                m.data.swap(piv * m.cols + j, r * m.cols + j);
            }
        }
        let inv = inv_mod(m.get(r, c), p);
        for j in c..m.cols {
            let v = m.get(r, j) * inv % p;
            m.set(r, j, v);
        }
        for i in 0..m.rows {
            if i == r {
                continue;
            }
            let f = m.get(i, c);
            if f == 0 {
                continue;
            }
            for j in c..m.cols {
                let v = (m.get(i, j) + p - f * m.get(r, j) % p) % p;
                m.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_mod(m: &Mat, p: u64) -> usize {
    let mut w = m.clone();
    rref(&mut w, p).len()
}

/// Basis of the right kernel `{x : m x = 0}`, one vector per free column.
pub fn nullspace_mod(m: &Mat, p: u64) -> Vec<Vec<u64>> {
    let mut w = m.clone();
    let pivots = rref(&mut w, p);
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u64; m.cols];
        v[free] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - w.get(row, free)) % p;
        }
        basis.push(v);
    }
    basis
}

/// Solve `a x = b` for a matrix `x`; `None` if some column is inconsistent.
pub fn solve_mod(a: &Mat, b: &Mat, p: u64) -> Option<Mat> {
    assert_eq!(a.rows, b.rows);
    let mut aug = Mat::zeros(a.rows, a.cols + b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            aug.set(i, j, a.get(i, j));
        }
        for j in 0..b.cols {
            aug.set(i, a.cols + j, b.get(i, j));
        }
    }
    let pivots = rref(&mut aug, p);
    if pivots.iter().any(|&c| c >= a.cols) {
        return None;
    }
    let mut x = Mat::zeros(a.cols, b.cols);
    for (row, &pc) in pivots.iter().enumerate() {
        for j in 0..b.cols {
            x.set(pc, j, aug.get(row, a.cols + j));
        }
    }
    Some(x)
}

/// Exact rank of an integer matrix via fraction-free elimination.
pub fn rank_exact(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(piv, rank);
        for i in rank + 1..m.len() {
            for j in c + 1..ncols {
                let v = (&m[rank][c] * &m[i][j] - &m[i][c] * &m[rank][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[rank][c].abs();
        if prev.is_zero() {
            prev = BigInt::one();
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Rank of an integer coefficient matrix under the chosen arithmetic.
pub fn rank_int(rows: &[Vec<i64>], ncols: usize, field: Field) -> usize {
    match field {
        Field::Prime(p) => {
            let mut m = Mat::zeros(rows.len(), ncols);
            for (i, r) in rows.iter().enumerate() {
                for (j, &x) in r.iter().enumerate() {
                    m.set(i, j, reduce(x, p));
                }
            }
            rank_mod(&m, p)
        }
        Field::Rational => rank_exact(rows),
    }
}
