//! Dense rational matrices and fraction-free elimination.
//!
//! Rank, determinant and pivot-column selection all run through a single
//! Bareiss-style elimination over integers: rows are scaled to clear
//! denominators, then the one-step fraction-free update keeps every
//! intermediate entry an exact minor of the scaled matrix. Divisions by the
//! previous pivot are therefore exact, and entry growth stays polynomial.

use crate::scalar::Rational;
use num::{BigInt, Integer, One, Zero};

/// Row-major matrix over arbitrary-precision rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    /// Builds from row vectors; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Option<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return None;
        }
        Some(RatMatrix { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() })
    }

    /// Builds from column vectors of the stated height.
    pub fn from_columns(height: usize, columns: &[Vec<Rational>]) -> Option<Self> {
        if columns.iter().any(|c| c.len() != height) {
            return None;
        }
        Some(RatMatrix::from_fn(height, columns.len(), |i, j| columns[j][i].clone()))
    }

    pub fn identity(n: usize) -> Self {
        RatMatrix::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// The submatrix formed by the given columns, in the given order.
    pub fn select_columns(&self, columns: &[usize]) -> RatMatrix {
        RatMatrix::from_fn(self.rows, columns.len(), |i, j| self.get(i, columns[j]).clone())
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn matmul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        RatMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                if !self.get(i, k).is_zero() && !rhs.get(k, j).is_zero() {
                    acc += self.get(i, k) * rhs.get(k, j);
                }
            }
            acc
        })
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "apply shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    if !self.get(i, k).is_zero() && !v[k].is_zero() {
                        acc += self.get(i, k) * &v[k];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == RatMatrix::identity(self.rows)
    }
}

/// Outcome of one fraction-free elimination pass.
struct Elimination {
    /// Columns in which a pivot was placed, ascending.
    pivot_cols: Vec<usize>,
    /// Parity of the row swaps performed.
    sign: i8,
    /// The final pivot, which for a square full-rank input equals the
    /// determinant of the row-scaled integer matrix (up to `sign`).
    last_pivot: BigInt,
}

/// Clears denominators row by row; the scaling product multiplies the
/// determinant and leaves rank and column dependencies unchanged.
fn integerize_rows(m: &RatMatrix) -> (Vec<BigInt>, BigInt) {
    let mut data = Vec::with_capacity(m.rows() * m.cols());
    let mut scale_product = BigInt::one();
    for i in 0..m.rows() {
        let mut lcm = BigInt::one();
        for j in 0..m.cols() {
            lcm = lcm.lcm(m.get(i, j).denom());
        }
        for j in 0..m.cols() {
            let e = m.get(i, j);
            data.push(e.numer() * (&lcm / e.denom()));
        }
        scale_product *= lcm;
    }
    (data, scale_product)
}

fn eliminate(a: &mut [BigInt], rows: usize, cols: usize) -> Elimination {
    let mut pivot_cols = Vec::new();
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot_row) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
            continue;
        };
        if pivot_row != r {
            for j in 0..cols {
                a.swap(pivot_row * cols + j, r * cols + j);
            }
            sign = -sign;
        }
        let pivot = a[r * cols + c].clone();
        for i in (r + 1)..rows {
            let lead = std::mem::replace(&mut a[i * cols + c], BigInt::zero());
            if lead.is_zero() && pivot.is_one() && prev.is_one() {
                continue;
            }
            for j in (c + 1)..cols {
                let num = &pivot * &a[i * cols + j] - &lead * &a[r * cols + j];
                debug_assert!((&num % &prev).is_zero(), "fraction-free division must be exact");
                a[i * cols + j] = num / &prev;
            }
        }
        prev = pivot;
        pivot_cols.push(c);
        r += 1;
    }
    Elimination { pivot_cols, sign, last_pivot: prev }
}

/// Exact rank via fraction-free elimination.
pub fn rank_of(m: &RatMatrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    let (mut a, _) = integerize_rows(m);
    eliminate(&mut a, m.rows(), m.cols()).pivot_cols.len()
}

/// Indices of the leftmost maximal independent column set.
pub fn leftmost_independent_columns(m: &RatMatrix) -> Vec<usize> {
    if m.rows() == 0 || m.cols() == 0 {
        return Vec::new();
    }
    let (mut a, _) = integerize_rows(m);
    eliminate(&mut a, m.rows(), m.cols()).pivot_cols
}

/// Exact determinant of a square matrix. The empty matrix has determinant 1.
pub fn det(m: &RatMatrix) -> Rational {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Rational::one();
    }
    let (mut a, scale) = integerize_rows(m);
    let elim = eliminate(&mut a, n, n);
    if elim.pivot_cols.len() < n {
        return Rational::zero();
    }
    let signed = if elim.sign < 0 { -elim.last_pivot } else { elim.last_pivot };
    Rational::new(signed, scale)
}
