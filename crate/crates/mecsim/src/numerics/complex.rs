//! Complex vectors and matrices sized for zero-forcing detection.
//!
//! Only the shapes the simulator needs: tall channel matrices (antennas x
//! users), their small Gram matrices, and inverses of those via Gaussian
//! elimination with partial pivoting.

use num_complex::Complex64;

use crate::{Error, Result};

/// Relative pivot threshold: pivots below this multiple of the largest input
/// magnitude are treated as a rank deficiency instead of producing garbage.
const PIVOT_TOL: f64 = 1e-14;

/// A fixed-length complex column vector (one user's channel).
#[derive(Debug, Clone, PartialEq)]
pub struct CVector {
    pub entries: Vec<Complex64>,
}

impl CVector {
    pub fn new(entries: Vec<Complex64>) -> Self {
        Self { entries }
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            entries: vec![Complex64::new(0.0, 0.0); n],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Squared Euclidean norm, a real number.
    pub fn norm_sqr(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

/// A row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    entries: Vec<Complex64>,
    rows: usize,
    cols: usize,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            entries: vec![Complex64::new(0.0, 0.0); rows * cols],
            rows,
            cols,
        }
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Complex64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { entries, rows, cols })
    }

    /// Stacks per-user channel vectors as columns, the antennas-by-users layout.
    pub fn from_columns(columns: &[CVector]) -> Result<Self> {
        let cols = columns.len();
        if cols == 0 {
            return Err(Error::DimensionMismatch("no columns".into()));
        }
        let rows = columns[0].len();
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch(
                "columns have unequal lengths".into(),
            ));
        }
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.iter().enumerate() {
            for (i, z) in col.entries.iter().enumerate() {
                m.set(i, j, *z);
            }
        }
        Ok(m)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Largest entry magnitude; scale reference for pivot tolerances.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn matmul(&self, other: &CMatrix) -> Result<CMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = CMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }
}

/// Gram matrix of a tall channel matrix: the users-by-users product of the
/// conjugate transpose with the matrix itself.
///
/// Hermitian by construction: the upper triangle is computed and mirrored,
/// and diagonal entries are accumulated as real sums of squared magnitudes.
pub fn gram(h: &CMatrix) -> Result<CMatrix> {
    if h.rows() <= h.cols() {
        return Err(Error::DimensionMismatch(format!(
            "channel matrix must be tall (rows > cols), got {}x{}",
            h.rows(),
            h.cols()
        )));
    }
    if !h.is_finite() {
        return Err(Error::NonFinite("channel matrix".into()));
    }
    let m = h.cols();
    let mut g = CMatrix::zeros(m, m);
    for i in 0..m {
        let mut diag = 0.0;
        for k in 0..h.rows() {
            diag += h.get(k, i).norm_sqr();
        }
        g.set(i, i, Complex64::new(diag, 0.0));
        for j in (i + 1)..m {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..h.rows() {
                acc += h.get(k, i).conj() * h.get(k, j);
            }
            g.set(i, j, acc);
            g.set(j, i, acc.conj());
        }
    }
    Ok(g)
}

/// Inverse of a square complex matrix via Gaussian elimination with partial
/// pivoting. Rejects singular and near-singular inputs outright rather than
/// letting NaNs propagate.
pub fn cinverse(g: &CMatrix) -> Result<CMatrix> {
    if g.rows() != g.cols() {
        return Err(Error::DimensionMismatch(format!(
            "matrix must be square, got {}x{}",
            g.rows(),
            g.cols()
        )));
    }
    if !g.is_finite() {
        return Err(Error::NonFinite("matrix to invert".into()));
    }
    let n = g.rows();
    let tol = PIVOT_TOL * g.max_abs();
    if tol == 0.0 {
        return Err(Error::Singular("zero matrix".into()));
    }

    // Augmented elimination [G | I] -> [I | G^-1].
    let mut a = g.clone();
    let mut inv = CMatrix::identity(n);
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r, &s| {
                a.get(r, col)
                    .norm()
                    .partial_cmp(&a.get(s, col).norm())
                    .expect("finite pivot magnitudes")
            })
            .expect("non-empty pivot range");
        let pivot = a.get(pivot_row, col);
        if pivot.norm() < tol {
            return Err(Error::Singular(format!(
                "pivot magnitude {:.3e} below tolerance {:.3e} at column {col}",
                pivot.norm(),
                tol
            )));
        }
        if pivot_row != col {
            for j in 0..n {
                let tmp = a.get(col, j);
                a.set(col, j, a.get(pivot_row, j));
                a.set(pivot_row, j, tmp);
                let tmp = inv.get(col, j);
                inv.set(col, j, inv.get(pivot_row, j));
                inv.set(pivot_row, j, tmp);
            }
        }
        let inv_pivot = Complex64::new(1.0, 0.0) / pivot;
        for j in 0..n {
            a.set(col, j, a.get(col, j) * inv_pivot);
            inv.set(col, j, inv.get(col, j) * inv_pivot);
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = a.get(r, col);
            if factor.norm() == 0.0 {
                continue;
            }
            for j in 0..n {
                a.set(r, j, a.get(r, j) - factor * a.get(col, j));
                inv.set(r, j, inv.get(r, j) - factor * inv.get(col, j));
            }
        }
    }
    Ok(inv)
}

/// Diagonal of the inverse Gram matrix: the per-user noise-amplification
/// factors of the zero-forcing detector. Strictly positive for any
/// full-column-rank channel.
pub fn zf_diag(h: &CMatrix) -> Result<Vec<f64>> {
    let g = gram(h)?;
    let ginv = cinverse(&g)?;
    let diag: Vec<f64> = (0..g.rows()).map(|i| ginv.get(i, i).re).collect();
    if diag.iter().any(|&d| !(d > 0.0) || !d.is_finite()) {
        return Err(Error::Singular(
            "inverse Gram diagonal not strictly positive".into(),
        ));
    }
    Ok(diag)
}
