use serde::{Deserialize, Serialize};

use super::ComplexMatrix;
use crate::error::{Error, Result};

const OFF_DIAGONAL_TARGET: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues sorted ascending.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn new(mut eigenvalues: Vec<f64>) -> Self {
        eigenvalues.sort_by(f64::total_cmp);
        Self { eigenvalues }
    }

    pub fn values(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(f64::NAN)
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(f64::NAN)
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }
}

/// All eigenvalues of a Hermitian matrix, ascending.
///
/// `H = A + iB` is diagonalized through its real symmetric embedding
/// `[[A, -B], [B, A]]`, which carries every eigenvalue of `H` twice. Cyclic
/// Jacobi rotations run until the off-diagonal Frobenius norm drops below
/// `1e-12` (relative to the matrix norm when that exceeds one).
pub fn hermitian_eigenvalues(m: &ComplexMatrix, tol: f64) -> Result<Spectrum> {
    m.check_finite()?;
    let defect = m.hermiticity_defect();
    if defect > tol {
        return Err(Error::NotHermitian(defect));
    }
    let n = m.dim();
    let size = 2 * n;
    let mut s = vec![0.0_f64; size * size];
    for a in 0..n {
        for b in 0..n {
            // symmetrize away sub-tolerance Hermiticity noise
            let z = 0.5 * (m[(a, b)] + m[(b, a)].conj());
            s[a * size + b] = z.re;
            s[(a + n) * size + (b + n)] = z.re;
            s[a * size + (b + n)] = -z.im;
            s[(a + n) * size + b] = z.im;
        }
    }
    let doubled = jacobi_symmetric(&mut s, size)?;
    // embedded eigenvalues arrive in equal adjacent pairs after sorting
    let values = doubled.chunks(2).map(|p| 0.5 * (p[0] + p[1])).collect();
    Ok(Spectrum::new(values))
}

fn off_diagonal_norm(s: &[f64], n: usize) -> f64 {
    let mut acc = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                acc += s[p * n + q] * s[p * n + q];
            }
        }
    }
    acc.sqrt()
}

/// Cyclic Jacobi on a dense real symmetric matrix; returns sorted eigenvalues.
fn jacobi_symmetric(s: &mut [f64], n: usize) -> Result<Vec<f64>> {
    let scale = s.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    let target = OFF_DIAGONAL_TARGET * scale;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(s, n) < target {
            let mut diag: Vec<f64> = (0..n).map(|i| s[i * n + i]).collect();
            diag.sort_by(f64::total_cmp);
            return Ok(diag);
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = s[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = s[p * n + p];
                let aqq = s[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                // theta == 0 gives signum 1, i.e. a 45 degree rotation
                let cos = 1.0 / (t * t + 1.0).sqrt();
                let sin = t * cos;
                for k in 0..n {
                    let skp = s[k * n + p];
                    let skq = s[k * n + q];
                    s[k * n + p] = cos * skp - sin * skq;
                    s[k * n + q] = sin * skp + cos * skq;
                }
                for k in 0..n {
                    let spk = s[p * n + k];
                    let sqk = s[q * n + k];
                    s[p * n + k] = cos * spk - sin * sqk;
                    s[q * n + k] = sin * spk + cos * sqk;
                }
                s[p * n + q] = 0.0;
                s[q * n + p] = 0.0;
            }
        }
    }
    Err(Error::NoConvergence(MAX_SWEEPS))
}
