//! Dense complex linear algebra for matrices of at most 16x16.
//!
//! Composite basis indices are big-endian over qubits: qubit 0 (party A) is
//! the most significant bit, so `|i_A j_B k_C>` sits at row `4i + 2j + k`.

mod density;
mod eigen;

pub(crate) use density::{bit, compose};
pub use density::{partial_trace, tensor_product, validate_density, DensityMatrix, PureState};
pub use eigen::{hermitian_eigenvalues, Spectrum};

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const DEFAULT_VALIDATION_TOL: f64 = 1e-9;
pub const DEFAULT_RANK_TOL: f64 = 1e-10;

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub fn r(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Square complex matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![C64::default(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = r(1.0);
        }
        m
    }

    /// Builds a matrix from row-major entries, rejecting wrong lengths and
    /// non-finite values.
    pub fn from_entries(dim: usize, entries: Vec<C64>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::BadShape {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        let m = Self { dim, entries };
        m.check_finite()?;
        Ok(m)
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::BadShape {
                    expected: dim,
                    got: row.len(),
                });
            }
            entries.extend(row.iter().map(|&x| r(x)));
        }
        Self::from_entries(dim, entries)
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = r(d);
        }
        m
    }

    /// `|v><v|`.
    pub fn outer(v: &[C64]) -> Self {
        let dim = v.len();
        let mut m = Self::zeros(dim);
        for a in 0..dim {
            for b in 0..dim {
                m[(a, b)] = v[a] * v[b].conj();
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn check_finite(&self) -> Result<()> {
        match self
            .entries
            .iter()
            .position(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            Some(pos) => Err(Error::NonFinite {
                row: pos / self.dim,
                col: pos % self.dim,
            }),
            None => Ok(()),
        }
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.dim);
        for a in 0..self.dim {
            for b in 0..self.dim {
                out[(a, b)] = self[(b, a)].conj();
            }
        }
        out
    }

    /// Largest `|M[a][b] - conj(M[b][a])|`.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0_f64;
        for a in 0..self.dim {
            for b in a..self.dim {
                worst = worst.max((self[(a, b)] - self[(b, a)].conj()).norm());
            }
        }
        worst
    }

    pub fn scale(&self, k: f64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * k).collect(),
        }
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Numerical rank; see [`matrix_rank`].
    pub fn rank(&self, tol: f64) -> Result<usize> {
        matrix_rank(self.dim, self.dim, &self.entries, tol)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;
    #[inline]
    fn index(&self, (row, col): (usize, usize)) -> &C64 {
        &self.entries[row * self.dim + col]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    #[inline]
    fn index_mut(&mut self, (row, col): (usize, usize)) -> &mut C64 {
        &mut self.entries[row * self.dim + col]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == C64::default() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for a in 0..self.dim {
            write!(f, "  ")?;
            for b in 0..self.dim {
                let z = self[(a, b)];
                write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Kronecker product: `out[(a*dB + b, c*dB + d)] = A[a][c] * B[b][d]`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    a.check_finite()?;
    b.check_finite()?;
    let (da, db) = (a.dim, b.dim);
    let mut out = ComplexMatrix::zeros(da * db);
    for ar in 0..da {
        for ac in 0..da {
            let x = a[(ar, ac)];
            for br in 0..db {
                for bc in 0..db {
                    out[(ar * db + br, ac * db + bc)] = x * b[(br, bc)];
                }
            }
        }
    }
    Ok(out)
}

/// Numerical rank of a `rows x cols` row-major matrix: the number of singular
/// values above `tol * sigma_max`.
///
/// Singular values are read off the spectrum of the Hermitian dilation
/// `[[0, M], [M^H, 0]]`, whose eigenvalues are `+-sigma_i` padded with zeros.
pub fn matrix_rank(rows: usize, cols: usize, entries: &[C64], tol: f64) -> Result<usize> {
    if entries.len() != rows * cols {
        return Err(Error::BadShape {
            expected: rows * cols,
            got: entries.len(),
        });
    }
    if let Some(pos) = entries
        .iter()
        .position(|z| !z.re.is_finite() || !z.im.is_finite())
    {
        return Err(Error::NonFinite {
            row: pos / cols,
            col: pos % cols,
        });
    }
    let n = rows + cols;
    let mut dilation = ComplexMatrix::zeros(n);
    for i in 0..rows {
        for j in 0..cols {
            let z = entries[i * cols + j];
            dilation[(i, rows + j)] = z;
            dilation[(rows + j, i)] = z.conj();
        }
    }
    let spectrum = hermitian_eigenvalues(&dilation, DEFAULT_VALIDATION_TOL)?;
    let sigma_max = spectrum.max().max(0.0);
    if sigma_max == 0.0 {
        return Ok(0);
    }
    let cutoff = tol * sigma_max;
    Ok(spectrum.values().iter().filter(|&&s| s > cutoff).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_identities() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(kron(&i2, &i2).unwrap(), ComplexMatrix::identity(4));
        let p0 = ComplexMatrix::from_diagonal(&[1.0, 0.0]);
        assert_eq!(
            kron(&p0, &p0).unwrap(),
            ComplexMatrix::from_diagonal(&[1.0, 0.0, 0.0, 0.0])
        );
    }

    #[test]
    fn kron_places_bell_block_in_a0_sector() {
        let h = 0.5;
        let bell = ComplexMatrix::from_real_rows(&[
            &[h, 0.0, 0.0, h],
            &[0.0; 4],
            &[0.0; 4],
            &[h, 0.0, 0.0, h],
        ])
        .unwrap();
        let p0 = ComplexMatrix::from_diagonal(&[1.0, 0.0]);
        let k = kron(&p0, &bell).unwrap();
        assert_eq!(k.dim(), 8);
        for a in 0..8 {
            for b in 0..8 {
                let expected = if a < 4 && b < 4 { bell[(a, b)] } else { r(0.0) };
                assert_eq!(k[(a, b)], expected, "({a},{b})");
            }
        }
    }

    #[test]
    fn kron_rejects_nan() {
        let mut m = ComplexMatrix::identity(2);
        m.entries[1] = c(f64::NAN, 0.0);
        assert!(matches!(
            kron(&m, &ComplexMatrix::identity(2)),
            Err(Error::NonFinite { row: 0, col: 1 })
        ));
    }

    #[test]
    fn rank_examples() {
        let zero = vec![r(0.0); 8];
        assert_eq!(matrix_rank(2, 4, &zero, DEFAULT_RANK_TOL).unwrap(), 0);

        let s = std::f64::consts::FRAC_1_SQRT_2;
        let mut ghz = vec![r(0.0); 8];
        ghz[0] = r(s);
        ghz[7] = r(s);
        assert_eq!(matrix_rank(2, 4, &ghz, DEFAULT_RANK_TOL).unwrap(), 2);

        let u = [c(0.6, 0.0), c(0.0, 0.8)];
        let v = [c(0.5, 0.5), r(0.5), c(0.0, -0.5), r(0.0)];
        let outer: Vec<C64> = u
            .iter()
            .flat_map(|&x| v.iter().map(move |&y| x * y))
            .collect();
        assert_eq!(matrix_rank(2, 4, &outer, DEFAULT_RANK_TOL).unwrap(), 1);

        assert_eq!(
            ComplexMatrix::identity(5).rank(DEFAULT_RANK_TOL).unwrap(),
            5
        );
    }

    #[test]
    fn rank_rejects_bad_input() {
        assert!(matches!(
            matrix_rank(2, 4, &[r(0.0); 7], 1e-10),
            Err(Error::BadShape { .. })
        ));
        let mut v = vec![r(0.0); 8];
        v[5] = c(0.0, f64::INFINITY);
        assert!(matches!(
            matrix_rank(2, 4, &v, 1e-10),
            Err(Error::NonFinite { row: 1, col: 1 })
        ));
    }
}
