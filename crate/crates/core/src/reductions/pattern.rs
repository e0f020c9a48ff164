//! The pairing-pattern map behind every reduction.
//!
//! Output qubit X carries the leader of the X group, output qubit Y the
//! leader of the Y group. Every other group member is tied to its leader by a
//! flip bit `f` (member = leader XOR f), and each traced party takes a value
//! `t`. Summing over all `(f, t)` with the same choice on ket and bra gives
//!
//! ```text
//! out[xy, x'y'] = sum_{f,t} rho[b(x,y,f,t), b(x',y',f,t)]
//! ```
//!
//! which is the operator-sum form `sum_{f,t} K_{f,t} rho K_{f,t}^H` with
//! `K_{f,t} = sum_{x,y} |xy><b(x,y,f,t)|`. Because `(x, y, f, t) -> b` is a
//! bijection onto the computational basis, `sum K^H K = I` and the map is
//! completely positive and trace preserving.

use super::label::ReductionLabel;
use crate::linalg::{bit, ComplexMatrix, DensityMatrix, C64};

pub(crate) struct PatternMap {
    n: usize,
    x: Vec<usize>,
    y: Vec<usize>,
    traced: Vec<usize>,
}

impl PatternMap {
    pub(crate) fn new(label: &ReductionLabel) -> Self {
        Self {
            n: label.n_parties(),
            x: label.x_group().iter().map(|p| p.index()).collect(),
            y: label.y_group().iter().map(|p| p.index()).collect(),
            traced: label.traced().iter().map(|p| p.index()).collect(),
        }
    }

    fn followers(&self) -> usize {
        self.x.len() - 1 + self.y.len() - 1
    }

    /// Number of Kraus operators, `2^(followers + traced)`.
    pub(crate) fn n_kraus(&self) -> usize {
        1 << (self.followers() + self.traced.len())
    }

    /// Composite index of `|b(x, y, f, t)>` where `k` packs the flip bits
    /// (X followers, then Y followers) above the traced values.
    fn basis_index(&self, xv: usize, yv: usize, k: usize) -> usize {
        let nf = self.followers();
        let nt = self.traced.len();
        let total = nf + nt;
        let mut bits = vec![0usize; self.n];
        let mut slot = 0;
        for (group, lead) in [(&self.x, xv), (&self.y, yv)] {
            bits[group[0]] = lead;
            for &q in &group[1..] {
                bits[q] = lead ^ bit(k, slot, total);
                slot += 1;
            }
        }
        for &q in &self.traced {
            bits[q] = bit(k, slot, total);
            slot += 1;
        }
        bits.iter().fold(0, |acc, &b| (acc << 1) | b)
    }

    /// Entrywise sum over pairing patterns and traced values.
    pub(crate) fn apply(&self, rho: &DensityMatrix) -> ComplexMatrix {
        let m = rho.matrix();
        let mut out = ComplexMatrix::zeros(4);
        for row in 0..4 {
            for col in 0..4 {
                let mut acc = C64::default();
                for k in 0..self.n_kraus() {
                    let a = self.basis_index(row >> 1, row & 1, k);
                    let b = self.basis_index(col >> 1, col & 1, k);
                    acc += m[(a, b)];
                }
                out[(row, col)] = acc;
            }
        }
        out
    }

    /// Explicit Kraus operators as 4 x 2^n row-major matrices.
    pub(crate) fn kraus_operators(&self) -> Vec<Vec<C64>> {
        let cols = 1 << self.n;
        (0..self.n_kraus())
            .map(|k| {
                let mut op = vec![C64::default(); 4 * cols];
                for row in 0..4 {
                    op[row * cols + self.basis_index(row >> 1, row & 1, k)] = C64::new(1.0, 0.0);
                }
                op
            })
            .collect()
    }
}

/// `sum_k K_k rho K_k^H` with the Kraus operators given as 4 x d matrices.
pub(crate) fn apply_kraus(ops: &[Vec<C64>], rho: &ComplexMatrix) -> ComplexMatrix {
    let d = rho.dim();
    let mut out = ComplexMatrix::zeros(4);
    let mut tmp = vec![C64::default(); 4 * d];
    for op in ops {
        // tmp = K rho
        for i in 0..4 {
            for j in 0..d {
                tmp[i * d + j] = (0..d).map(|l| op[i * d + l] * rho[(l, j)]).sum();
            }
        }
        // out += tmp K^H
        for i in 0..4 {
            for j in 0..4 {
                out[(i, j)] += (0..d)
                    .map(|l| tmp[i * d + l] * op[j * d + l].conj())
                    .sum::<C64>();
            }
        }
    }
    out
}

/// `sum_k K_k^H K_k`, which must be the identity on `C^d`.
pub(crate) fn kraus_completeness(ops: &[Vec<C64>], d: usize) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(d);
    for op in ops {
        for a in 0..d {
            for b in 0..d {
                out[(a, b)] += (0..4)
                    .map(|i| op[i * d + a].conj() * op[i * d + b])
                    .sum::<C64>();
            }
        }
    }
    out
}
