//! Dense exact linear algebra over arbitrary-precision rationals.
//!
//! Rank and kernel computations use Gaussian elimination with the first
//! nonzero entry in column order as pivot; results are exact, never floating
//! point.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rational scalar: arbitrary-precision numerator and denominator,
/// always stored in lowest terms with a positive denominator.
pub type Rational = num_rational::Ratio<BigInt>;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from numerator and denominator. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Errors from matrix construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    /// Ragged construction input or incompatible shapes for an operation.
    DimensionMismatch {
        context: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
}

impl fmt::Display for LinAlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinAlgError::DimensionMismatch {
                context,
                left,
                right,
            } => write!(
                f,
                "dimension mismatch in {}: {}x{} vs {}x{}",
                context, left.0, left.1, right.0, right.1
            ),
        }
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    /// Zero matrix of the given shape (either dimension may be 0).
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Build from a closure over (row, col).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    /// Build from explicit rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinAlgError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            if r.len() != ncols {
                return Err(LinAlgError::DimensionMismatch {
                    context: "from_rows",
                    left: (nrows, ncols),
                    right: (nrows, r.len()),
                });
            }
        }
        Ok(RationalMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Build from integer rows; all rows must have equal length.
    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self, LinAlgError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| rat(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn negated(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| -self.get(r, c).clone())
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        if self.cols != rhs.rows {
            return Err(LinAlgError::DimensionMismatch {
                context: "mul",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(l, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = a * b;
                    let cur = out.get(i, j);
                    out.set(i, j, cur + t);
                }
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        if self.rows != rhs.rows {
            return Err(LinAlgError::DimensionMismatch {
                context: "hstack",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(Self::from_fn(self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                rhs.get(r, c - self.cols).clone()
            }
        }))
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block2x2(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self, LinAlgError> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(LinAlgError::DimensionMismatch {
                context: "block2x2",
                left: (a.rows, a.cols),
                right: (d.rows, d.cols),
            });
        }
        Ok(Self::from_fn(a.rows + c.rows, a.cols + b.cols, |r, col| {
            match (r < a.rows, col < a.cols) {
                (true, true) => a.get(r, col).clone(),
                (true, false) => b.get(r, col - a.cols).clone(),
                (false, true) => c.get(r - a.rows, col).clone(),
                (false, false) => d.get(r - a.rows, col - a.cols).clone(),
            }
        }))
    }

    /// Kronecker product `self (x) rhs`.
    pub fn kronecker(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            let a = self.get(r / rhs.rows, c / rhs.cols);
            if a.is_zero() {
                Rational::zero()
            } else {
                a * rhs.get(r % rhs.rows, c % rhs.cols)
            }
        })
    }

    /// Columns of `self` selected by index, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    /// The `n x k` matrix whose columns are the standard basis vectors
    /// `e_{cols[0]}, ..., e_{cols[k-1]}`.
    pub fn column_selection(n: usize, cols: &[usize]) -> Self {
        let mut m = Self::zeros(n, cols.len());
        for (j, &i) in cols.iter().enumerate() {
            m.set(i, j, Rational::one());
        }
        m
    }

    fn to_row_vecs(&self) -> Vec<Vec<Rational>> {
        self.data.chunks(self.cols.max(1)).map(<[_]>::to_vec).collect()
    }

    /// Forward elimination; returns the pivot column indices.
    fn echelon_pivots(work: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
        let rows = work.len();
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..cols {
            if pr == rows {
                break;
            }
            let Some(p) = (pr..rows).find(|&r| !work[r][c].is_zero()) else {
                continue;
            };
            work.swap(pr, p);
            for r in (pr + 1)..rows {
                if work[r][c].is_zero() {
                    continue;
                }
                let f = &work[r][c] / &work[pr][c];
                let (lo, hi) = work.split_at_mut(r);
                let (dst, src) = (&mut hi[0], &lo[pr]);
                for j in c..cols {
                    if !src[j].is_zero() {
                        dst[j] = &dst[j] - &(&src[j] * &f);
                    }
                }
            }
            pivots.push(c);
            pr += 1;
        }
        pivots
    }

    /// Continue forward elimination to reduced row echelon form.
    fn back_substitute(work: &mut [Vec<Rational>], cols: usize, pivots: &[usize]) {
        for (pr, &pc) in pivots.iter().enumerate().rev() {
            let d = work[pr][pc].clone();
            if !d.is_one() {
                for e in &mut work[pr][pc..cols] {
                    if !e.is_zero() {
                        *e = &*e / &d;
                    }
                }
            }
            for r in 0..pr {
                if work[r][pc].is_zero() {
                    continue;
                }
                let f = work[r][pc].clone();
                let (lo, hi) = work.split_at_mut(pr);
                let (dst, src) = (&mut lo[r], &hi[0]);
                for j in pc..cols {
                    if !src[j].is_zero() {
                        dst[j] = &dst[j] - &(&src[j] * &f);
                    }
                }
            }
        }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut work = self.to_row_vecs();
        Self::echelon_pivots(&mut work, self.cols).len()
    }

    /// Indices of the pivot columns under elimination in column order. The
    /// corresponding standard basis vectors span a complement of the kernel.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut work = self.to_row_vecs();
        Self::echelon_pivots(&mut work, self.cols)
    }

    /// Canonical kernel basis read off the reduced row echelon form: one
    /// vector per free column, carrying 1 at that column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let mut work = self.to_row_vecs();
        let pivots = Self::echelon_pivots(&mut work, self.cols);
        Self::back_substitute(&mut work, self.cols, &pivots);
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (pr, &pc) in pivots.iter().enumerate() {
                if !work[pr][free].is_zero() {
                    v[pc] = -work[pr][free].clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Apply the matrix to a vector.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch {
                context: "apply",
                left: (self.rows, self.cols),
                right: (v.len(), 1),
            });
        }
        let mut out = vec![Rational::zero(); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.get(r, c);
                if !a.is_zero() {
                    out[r] = &out[r] + &(a * &v[c]);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{} ", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
