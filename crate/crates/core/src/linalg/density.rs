use super::{hermitian_eigenvalues, kron, ComplexMatrix, C64, DEFAULT_VALIDATION_TOL};
use crate::error::{Error, Result};

/// A validated n-qubit density matrix: Hermitian, unit trace and positive
/// semidefinite, each to within `tol`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    n_qubits: usize,
    mat: ComplexMatrix,
    tol: f64,
}

impl DensityMatrix {
    pub fn new(mat: ComplexMatrix, n_qubits: usize) -> Result<Self> {
        validate_density(mat, n_qubits, DEFAULT_VALIDATION_TOL)
    }

    /// Wraps a matrix without checking positivity or trace. Only the
    /// dimension is enforced; analyses of such inputs must say so.
    pub fn new_unchecked(mat: ComplexMatrix, n_qubits: usize) -> Result<Self> {
        check_dim(&mat, n_qubits)?;
        mat.check_finite()?;
        Ok(Self {
            n_qubits,
            mat,
            tol: DEFAULT_VALIDATION_TOL,
        })
    }

    /// `I / 2^n`.
    pub fn maximally_mixed(n_qubits: usize) -> Self {
        let dim = 1 << n_qubits;
        Self {
            n_qubits,
            mat: ComplexMatrix::identity(dim).scale(1.0 / dim as f64),
            tol: DEFAULT_VALIDATION_TOL,
        }
    }

    /// Convex combination `sum_k w_k rho_k`. Weights must be nonnegative and
    /// sum to one.
    pub fn mixture(parts: &[(f64, &DensityMatrix)]) -> Result<Self> {
        let first = parts
            .first()
            .ok_or_else(|| Error::BadParams("empty mixture".into()))?;
        let n = first.1.n_qubits;
        let mut total = 0.0;
        let mut acc = ComplexMatrix::zeros(1 << n);
        for &(w, rho) in parts {
            if rho.n_qubits != n {
                return Err(Error::WrongArity {
                    expected: n,
                    got: rho.n_qubits,
                });
            }
            if w.is_nan() || w < 0.0 {
                return Err(Error::BadParams(format!("negative mixture weight {w}")));
            }
            total += w;
            acc = &acc + &rho.mat.scale(w);
        }
        if (total - 1.0).abs() > DEFAULT_VALIDATION_TOL {
            return Err(Error::BadParams(format!("mixture weights sum to {total}")));
        }
        validate_density(acc, n, DEFAULT_VALIDATION_TOL)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.mat
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Entry `[rho]_{ket, bra}` addressed by per-qubit bits, party A first.
    pub fn entry(&self, ket: &[usize], bra: &[usize]) -> C64 {
        self.mat[(compose(ket), compose(bra))]
    }
}

/// Big-endian composite index of a bit string, party A most significant.
pub(crate) fn compose(bits: &[usize]) -> usize {
    bits.iter().fold(0, |acc, &b| (acc << 1) | (b & 1))
}

/// Bit of qubit `q` in composite index `idx` for an `n`-qubit system.
#[inline]
pub(crate) fn bit(idx: usize, q: usize, n: usize) -> usize {
    (idx >> (n - 1 - q)) & 1
}

fn check_dim(m: &ComplexMatrix, n_qubits: usize) -> Result<()> {
    if n_qubits == 0 || n_qubits > 4 {
        return Err(Error::BadParams(format!(
            "qubit count {n_qubits} outside 1..=4"
        )));
    }
    let expected = 1 << n_qubits;
    if m.dim() != expected {
        return Err(Error::WrongDim {
            expected,
            got: m.dim(),
        });
    }
    Ok(())
}

/// Checks Hermiticity, unit trace and positivity, in that order, and reports
/// the first violated invariant with its measured magnitude.
pub fn validate_density(m: ComplexMatrix, n_qubits: usize, tol: f64) -> Result<DensityMatrix> {
    check_dim(&m, n_qubits)?;
    m.check_finite()?;
    let defect = m.hermiticity_defect();
    if defect > tol {
        return Err(Error::NotHermitian(defect));
    }
    let tr = m.trace();
    let trace_defect = (tr - C64::new(1.0, 0.0)).norm();
    if trace_defect > tol {
        return Err(Error::TraceNotOne(tr.re - 1.0));
    }
    let lmin = hermitian_eigenvalues(&m, tol)?.min();
    if lmin < -tol {
        return Err(Error::NotPsd(lmin));
    }
    Ok(DensityMatrix {
        n_qubits,
        mat: m,
        tol,
    })
}

/// Traces out every party not listed in `keep`. The output's qubits follow
/// the order of `keep`.
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let n = rho.n_qubits;
    if keep.is_empty() || keep.len() >= n {
        return Err(Error::BadSubset(format!(
            "keep {keep:?} must be a nonempty strict subset of {n} parties"
        )));
    }
    let mut seen = vec![false; n];
    for &q in keep {
        if q >= n || seen[q] {
            return Err(Error::BadSubset(format!(
                "keep {keep:?} is not a set of parties below {n}"
            )));
        }
        seen[q] = true;
    }
    let traced: Vec<usize> = (0..n).filter(|q| !seen[*q]).collect();
    let k = keep.len();
    let out_dim = 1 << k;
    let mut out = ComplexMatrix::zeros(out_dim);
    let mut ket = vec![0usize; n];
    let mut bra = vec![0usize; n];
    for a in 0..out_dim {
        for b in 0..out_dim {
            let mut acc = C64::default();
            for t in 0..(1usize << traced.len()) {
                for (pos, &q) in keep.iter().enumerate() {
                    ket[q] = bit(a, pos, k);
                    bra[q] = bit(b, pos, k);
                }
                for (pos, &q) in traced.iter().enumerate() {
                    let v = bit(t, pos, traced.len());
                    ket[q] = v;
                    bra[q] = v;
                }
                acc += rho.entry(&ket, &bra);
            }
            out[(a, b)] = acc;
        }
    }
    Ok(DensityMatrix {
        n_qubits: k,
        mat: out,
        tol: rho.tol,
    })
}

/// Normalized state vector on `n` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    n_qubits: usize,
    coeffs: Vec<C64>,
}

impl PureState {
    pub fn new(coeffs: Vec<C64>, tol: f64) -> Result<Self> {
        let len = coeffs.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::BadShape {
                expected: len.next_power_of_two().max(2),
                got: len,
            });
        }
        if coeffs
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NotNormalized(f64::NAN));
        }
        let norm2: f64 = coeffs.iter().map(|z| z.norm_sqr()).sum();
        if (norm2 - 1.0).abs() > tol {
            return Err(Error::NotNormalized(norm2 - 1.0));
        }
        Ok(Self {
            n_qubits: len.trailing_zeros() as usize,
            coeffs,
        })
    }

    /// Tensor product of single-qubit factors, party A first.
    pub fn product(factors: &[[C64; 2]], tol: f64) -> Result<Self> {
        let mut coeffs = vec![C64::new(1.0, 0.0)];
        for f in factors {
            let norm2 = f[0].norm_sqr() + f[1].norm_sqr();
            if (norm2 - 1.0).abs() > tol {
                return Err(Error::NotNormalized(norm2 - 1.0));
            }
            coeffs = coeffs.iter().flat_map(|&x| [x * f[0], x * f[1]]).collect();
        }
        Self::new(coeffs, tol)
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    /// Coefficient of `|bits>`, party A first.
    pub fn coeff(&self, bits: &[usize]) -> C64 {
        self.coeffs[compose(bits)]
    }

    /// `|psi><psi|`.
    pub fn density(&self) -> DensityMatrix {
        DensityMatrix {
            n_qubits: self.n_qubits,
            mat: ComplexMatrix::outer(&self.coeffs),
            tol: DEFAULT_VALIDATION_TOL,
        }
    }
}

/// `rho_1 (x) rho_2 (x) ...` for validated factors.
pub fn tensor_product(factors: &[&DensityMatrix]) -> Result<DensityMatrix> {
    let mut mat = ComplexMatrix::identity(1);
    let mut n = 0;
    for f in factors {
        mat = kron(&mat, &f.mat)?;
        n += f.n_qubits;
    }
    validate_density(mat, n, DEFAULT_VALIDATION_TOL)
}
