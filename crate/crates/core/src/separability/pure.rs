use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{PureState, C64};

/// A one-vs-two bipartition of a three-qubit pure state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Split {
    #[serde(rename = "A-BC")]
    ABc,
    #[serde(rename = "B-CA")]
    BCa,
    #[serde(rename = "C-AB")]
    CAb,
}

impl Split {
    pub const ALL: [Split; 3] = [Split::ABc, Split::BCa, Split::CAb];

    /// The 2x4 coefficient matrix: rows indexed by the single party's bit,
    /// columns by the other two parties in `A, B, C` order.
    pub fn coefficient_matrix(self, psi: &PureState) -> [[C64; 4]; 2] {
        let mut m = [[C64::default(); 4]; 2];
        for (row, out) in m.iter_mut().enumerate() {
            for (col, slot) in out.iter_mut().enumerate() {
                let (u, v) = (col >> 1, col & 1);
                let bits = match self {
                    Split::ABc => [row, u, v],
                    Split::BCa => [u, row, v],
                    Split::CAb => [u, v, row],
                };
                *slot = psi.coeff(&bits);
            }
        }
        m
    }
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Split::ABc => "A-BC",
            Split::BCa => "B-CA",
            Split::CAb => "C-AB",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SplitVerdict {
    pub split: Split,
    pub separable: bool,
    pub max_minor_modulus: f64,
}

/// Decides whether `psi` factorizes across `split`: the 2x4 coefficient
/// matrix must have rank below two, i.e. all six 2x2 minors vanish.
pub fn pure_split_separable(psi: &PureState, split: Split, tol: f64) -> Result<SplitVerdict> {
    if psi.n_qubits() != 3 {
        return Err(Error::WrongArity {
            expected: 3,
            got: psi.n_qubits(),
        });
    }
    let norm2: f64 = psi.coeffs().iter().map(|z| z.norm_sqr()).sum();
    if (norm2 - 1.0).abs() > crate::linalg::DEFAULT_VALIDATION_TOL {
        return Err(Error::NotNormalized(norm2 - 1.0));
    }
    let m = split.coefficient_matrix(psi);
    let mut worst = 0.0_f64;
    for a in 0..4 {
        for b in (a + 1)..4 {
            let minor = m[0][a] * m[1][b] - m[0][b] * m[1][a];
            worst = worst.max(minor.norm());
        }
    }
    Ok(SplitVerdict {
        split,
        separable: worst <= tol,
        max_minor_modulus: worst,
    })
}

/// A three-qubit pure state is fully separable iff it factorizes across all
/// three one-vs-two splits.
pub fn pure_fully_separable(psi: &PureState, tol: f64) -> Result<bool> {
    for split in Split::ALL {
        if !pure_split_separable(psi, split, tol)?.separable {
            return Ok(false);
        }
    }
    Ok(true)
}
