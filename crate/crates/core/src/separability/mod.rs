//! PPT verdicts on two-qubit reductions and the resulting entanglement
//! witness.
//!
//! For two qubits a positive partial transpose is necessary and sufficient
//! for separability, so each per-reduction verdict is exact. The witness over
//! all reductions is one-sided: a single non-PPT reduction proves the full
//! state entangled, while an all-PPT result proves nothing. Mixed states are
//! therefore never reported as separable.

mod pure;

pub use pure::{pure_fully_separable, pure_split_separable, Split, SplitVerdict};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, ComplexMatrix, DensityMatrix, Spectrum};
use crate::reductions::{reduce_all_for, reduce_matrix, ReductionLabel};

pub const DEFAULT_PPT_TOL: f64 = 1e-9;

/// Which tensor factor of a two-qubit matrix gets transposed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

/// Partial transpose of a 4x4 matrix on one factor.
///
/// `Y`: `out[mn, rs] = sigma[ms, rn]`; `X`: `out[mn, rs] = sigma[rn, ms]`.
pub fn partial_transpose(sigma: &ComplexMatrix, side: Side) -> Result<ComplexMatrix> {
    if sigma.dim() != 4 {
        return Err(Error::WrongDim {
            expected: 4,
            got: sigma.dim(),
        });
    }
    let mut out = ComplexMatrix::zeros(4);
    for m in 0..2 {
        for n in 0..2 {
            for r in 0..2 {
                for s in 0..2 {
                    let src = match side {
                        Side::Y => sigma[(2 * m + s, 2 * r + n)],
                        Side::X => sigma[(2 * r + n, 2 * m + s)],
                    };
                    out[(2 * m + n, 2 * r + s)] = src;
                }
            }
        }
    }
    Ok(out)
}

/// Spectrum of `sigma^{T_Y}`.
pub fn pt_spectrum(sigma: &ComplexMatrix, hermitian_tol: f64) -> Result<Spectrum> {
    hermitian_eigenvalues(&partial_transpose(sigma, Side::Y)?, hermitian_tol)
}

/// Result of the two-qubit PPT test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PptOutcome {
    pub min_pt_eigenvalue: f64,
    pub separable: bool,
    pub tolerance_used: f64,
}

/// Exact separability decision for a two-qubit density matrix. The `T_X`
/// and `T_Y` spectra coincide, so only `T_Y` is computed.
pub fn ppt_separable(sigma: &DensityMatrix, tol: f64) -> Result<PptOutcome> {
    if sigma.n_qubits() != 2 {
        return Err(Error::WrongDim {
            expected: 4,
            got: sigma.dim(),
        });
    }
    outcome(sigma.matrix(), tol, sigma.tol())
}

fn outcome(sigma: &ComplexMatrix, tol: f64, hermitian_tol: f64) -> Result<PptOutcome> {
    let min = pt_spectrum(sigma, hermitian_tol)?.min();
    Ok(PptOutcome {
        min_pt_eigenvalue: min,
        separable: min >= -tol,
        tolerance_used: tol,
    })
}

/// PPT outcome of one named reduction.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PptVerdict {
    pub label: ReductionLabel,
    pub min_pt_eigenvalue: f64,
    pub separable: bool,
    pub tolerance_used: f64,
}

impl PptVerdict {
    fn new(label: ReductionLabel, o: PptOutcome) -> Self {
        Self {
            label,
            min_pt_eigenvalue: o.min_pt_eigenvalue,
            separable: o.separable,
            tolerance_used: o.tolerance_used,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Conclusion {
    Entangled,
    Inconclusive,
}

impl std::fmt::Display for Conclusion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Conclusion::Entangled => "ENTANGLED",
            Conclusion::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessReport {
    pub verdicts: Vec<PptVerdict>,
    pub conclusion: Conclusion,
    /// Reduction with the most negative PT eigenvalue, when entangled.
    pub culprit: Option<ReductionLabel>,
}

impl WitnessReport {
    fn from_verdicts(verdicts: Vec<PptVerdict>) -> Self {
        let worst = verdicts
            .iter()
            .min_by(|a, b| a.min_pt_eigenvalue.total_cmp(&b.min_pt_eigenvalue));
        let culprit = worst.filter(|v| !v.separable).map(|v| v.label.clone());
        let conclusion = if culprit.is_some() {
            Conclusion::Entangled
        } else {
            Conclusion::Inconclusive
        };
        Self {
            verdicts,
            conclusion,
            culprit,
        }
    }

    pub fn is_entangled(&self) -> bool {
        self.conclusion == Conclusion::Entangled
    }

    /// Smallest PT eigenvalue over all reductions.
    pub fn min_pt_eigenvalue(&self) -> f64 {
        self.verdicts
            .iter()
            .map(|v| v.min_pt_eigenvalue)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn verdict(&self, label: &ReductionLabel) -> Option<&PptVerdict> {
        self.verdicts.iter().find(|v| &v.label == label)
    }
}

/// Runs the PPT test on every reduction of a three- or four-party state.
/// All reductions are evaluated even after the first failure.
pub fn witness(rho: &DensityMatrix, tol: f64) -> Result<WitnessReport> {
    let set = reduce_all_for(rho)?;
    let verdicts = set
        .iter()
        .map(|(label, sigma)| Ok(PptVerdict::new(label.clone(), ppt_separable(sigma, tol)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(WitnessReport::from_verdicts(verdicts))
}

pub fn witness_tripartite(rho: &DensityMatrix, tol: f64) -> Result<WitnessReport> {
    if rho.n_qubits() != 3 {
        return Err(Error::WrongArity {
            expected: 3,
            got: rho.n_qubits(),
        });
    }
    witness(rho, tol)
}

pub fn witness_quadripartite(rho: &DensityMatrix, tol: f64) -> Result<WitnessReport> {
    if rho.n_qubits() != 4 {
        return Err(Error::WrongArity {
            expected: 4,
            got: rho.n_qubits(),
        });
    }
    witness(rho, tol)
}

/// Witness on an input that skipped density validation. Reductions are not
/// validated either and are symmetrized before diagonalization, so the
/// verdicts are only meaningful for near-density inputs.
pub fn witness_unvalidated(rho: &DensityMatrix, tol: f64) -> Result<WitnessReport> {
    let labels = ReductionLabel::all(rho.n_qubits())?;
    let verdicts = labels
        .into_iter()
        .map(|label| {
            let m = reduce_matrix(rho, &label)?;
            Ok(PptVerdict::new(label, outcome(&m, tol, f64::INFINITY)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(WitnessReport::from_verdicts(verdicts))
}

/// True when every reduction is PPT. A necessary condition for
/// separability only: bound entangled states pass it too.
pub fn necessary_condition_holds(rho: &DensityMatrix, tol: f64) -> Result<bool> {
    Ok(!witness(rho, tol)?.is_entangled())
}
