//! Dense exact linear algebra over any [`Field`].
//!
//! Determinants use Bareiss fraction-free elimination; rank, kernels and
//! inverses use Gauss–Jordan elimination with the first nonzero pivot.
//! Kernels are returned as the rows of a reduced row echelon matrix, so two
//! equal subspaces always produce identical bases.

use std::fmt;

use crate::cyclofield::CycNum;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<K: Field = CycNum> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Field> Matrix<K> {
    pub fn new(rows: usize, cols: usize, data: Vec<K>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "new",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from nested rows; panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| K::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| if r == c { K::one() } else { K::zero() })
    }

    pub fn diag(entries: Vec<K>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    /// Column vector.
    pub fn column(entries: Vec<K>) -> Self {
        let n = entries.len();
        Matrix {
            rows: n,
            cols: 1,
            data: entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[K] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &K {
        &self.data[r * self.cols + c]
    }

    pub fn try_get(&self, r: usize, c: usize) -> Result<&K> {
        if r >= self.rows || c >= self.cols {
            return Err(self.index_error(r, c));
        }
        Ok(self.get(r, c))
    }

    pub fn set(&mut self, r: usize, c: usize, v: K) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[K] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<K> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    fn index_error(&self, row: usize, col: usize) -> Error {
        Error::IndexOutOfRange {
            row,
            col,
            rows: self.rows,
            cols: self.cols,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(K::is_zero)
    }

    pub fn map(&self, f: impl Fn(&K) -> K) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&K) -> Result<K>) -> Result<Self> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn scale(&self, k: &K) -> Self {
        self.map(|e| e.mul_ref(k))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "add")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.add_ref(b)).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "sub")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.sub_ref(b)).collect(),
        })
    }

    fn same_shape(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    /// Exact product `self · other`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = out.data[idx].add_ref(&a.mul_ref(b));
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[K]) -> Result<Vec<K>> {
        Ok(self.checked_mul(&Matrix::column(v.to_vec()))?.data)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        self.require_square()?;
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        Ok(())
    }

    /// Bareiss fraction-free determinant.
    pub fn det(&self) -> Result<K> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(K::one());
        }
        let mut a = self.clone();
        let mut sign_flip = false;
        let mut prev = K::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a.get(r, k).is_zero()) else {
                    return Ok(K::zero());
                };
                a.swap_rows(k, p);
                sign_flip = !sign_flip;
            }
            let prev_inv = prev.inv().expect("Bareiss pivots are nonzero");
            let akk = a.get(k, k).clone();
            for i in k + 1..n {
                let aik = a.get(i, k).clone();
                for j in k + 1..n {
                    let v = akk.mul_ref(a.get(i, j)).sub_ref(&aik.mul_ref(a.get(k, j)));
                    a.set(i, j, v.mul_ref(&prev_inv));
                }
                a.set(i, k, K::zero());
            }
            prev = akk;
        }
        let d = a.get(n - 1, n - 1).clone();
        Ok(if sign_flip { -d } else { d })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(row, p);
            let inv = a.get(row, col).inv().expect("pivot is nonzero");
            for c in col..a.cols {
                let v = a.get(row, c).mul_ref(&inv);
                a.set(row, c, v);
            }
            for r in 0..a.rows {
                if r == row {
                    continue;
                }
                let factor = a.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..a.cols {
                    let pv = a.get(row, c);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = a.get(r, c).sub_ref(&factor.mul_ref(pv));
                    a.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self·v = 0}` as the rows of a reduced echelon matrix.
    pub fn kernel_basis(&self) -> Vec<Vec<K>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![K::zero(); self.cols];
            v[free] = K::one();
            for (prow, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(prow, free).clone();
            }
            basis.push(v);
        }
        echelon_basis(basis)
    }

    /// Exact inverse by Gauss–Jordan elimination on `[A | E]`.
    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                K::one()
            } else {
                K::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        Ok(Self::from_fn(n, n, |r, c| red.get(r, c + n).clone()))
    }

    /// Signed minor `(-1)^(i+j) det(A without row i, column j)`, 0-based.
    pub fn cofactor(&self, i: usize, j: usize) -> Result<K> {
        self.require_square()?;
        if i >= self.rows || j >= self.cols {
            return Err(self.index_error(i, j));
        }
        let n = self.rows;
        let minor = Self::from_fn(n - 1, n - 1, |r, c| {
            let rr = if r < i { r } else { r + 1 };
            let cc = if c < j { c } else { c + 1 };
            self.get(rr, cc).clone()
        });
        let d = minor.det()?;
        Ok(if (i + j) % 2 == 1 { -d } else { d })
    }

    /// Monic characteristic polynomial `det(λE - A)` (Faddeev–LeVerrier).
    pub fn char_poly(&self) -> Result<UniPoly<K>> {
        self.require_square()?;
        let n = self.rows;
        let mut coeffs = vec![K::zero(); n + 1];
        coeffs[n] = K::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} E
            let mut next = self.checked_mul(&m)?;
            for d in 0..n {
                let v = next.get(d, d).add_ref(&coeffs[n - k + 1]);
                next.set(d, d, v);
            }
            let am = self.checked_mul(&next)?;
            let trace = (0..n).fold(K::zero(), |acc, d| acc.add_ref(am.get(d, d)));
            let kinv = K::from_int(k as i64).inv().expect("characteristic zero");
            coeffs[n - k] = -(trace.mul_ref(&kinv));
            m = next;
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Basis of the eigenspace `ker(A - λE)`.
    pub fn eigenvectors_for(&self, lambda: &K) -> Result<Vec<Vec<K>>> {
        self.require_square()?;
        let shifted = self.checked_sub(&Self::identity(self.rows).scale(lambda))?;
        Ok(shifted.kernel_basis())
    }

    /// `Some(λ)` with `self = λ·other`; `None` if no such λ or `other` is zero.
    pub fn proportional(&self, other: &Self) -> Option<K> {
        if self.shape() != other.shape() {
            return None;
        }
        let idx = other.data.iter().position(|e| !e.is_zero())?;
        let lambda = self.data[idx].div_ref(&other.data[idx])?;
        self.data
            .iter()
            .zip(&other.data)
            .all(|(a, b)| *a == b.mul_ref(&lambda))
            .then_some(lambda)
    }
}

impl<K: Field> std::ops::Mul for &Matrix<K> {
    type Output = Matrix<K>;

    /// Panics on incompatible shapes; use [`Matrix::checked_mul`] to get an error.
    fn mul(self, rhs: &Matrix<K>) -> Matrix<K> {
        self.checked_mul(rhs).expect("incompatible matrix shapes")
    }
}

/// Row-reduces a list of vectors into a reduced echelon basis of their span.
pub fn echelon_basis<K: Field>(vectors: Vec<Vec<K>>) -> Vec<Vec<K>> {
    if vectors.is_empty() {
        return vectors;
    }
    let cols = vectors[0].len();
    let rows = vectors.len();
    let m = Matrix::new(rows, cols, vectors.into_iter().flatten().collect()).expect("uniform length");
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// Row-per-line text, entries separated by ` ; ` in the scalar syntax.
impl<K: Field> fmt::Display for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "[ {} ]", line.join(" ; "))?;
        }
        Ok(())
    }
}

/// Univariate polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniPoly<K: Field = CycNum> {
    coeffs: Vec<K>,
}

impl<K: Field> UniPoly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(K::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// `Π (λ - rᵢ)`
    pub fn from_roots(roots: &[K]) -> Self {
        let mut p = vec![K::one()];
        for r in roots {
            let mut next = vec![K::zero(); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                next[i + 1] = next[i + 1].add_ref(c);
                next[i] = next[i].sub_ref(&c.mul_ref(r));
            }
            p = next;
        }
        Self::new(p)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &K) -> K {
        self.coeffs
            .iter()
            .rev()
            .fold(K::zero(), |acc, c| acc.mul_ref(x).add_ref(c))
    }

    /// Evaluates at a square matrix (Horner).
    pub fn eval_matrix(&self, a: &Matrix<K>) -> Result<Matrix<K>> {
        a.require_square()?;
        let n = a.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(a)?.checked_add(&Matrix::identity(n).scale(c))?;
        }
        Ok(acc)
    }
}

impl<K: Field> fmt::Display for UniPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*L")?,
                _ => write!(f, "({c})*L^{k}")?,
            }
        }
        Ok(())
    }
}
