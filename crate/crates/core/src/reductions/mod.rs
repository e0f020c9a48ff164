//! Bipartite qubit reductions of three- and four-qubit states.
//!
//! Besides the ordinary two-party partial traces there are the split
//! reductions, which fold a group of parties onto one output qubit by
//! summing the two coherence patterns "same bit" and "flipped bit":
//!
//! ```text
//! [rho_(A,BC)]_{ij,rs} = [rho]_{ij j, rs s} + [rho]_{ij (1-j), rs (1-s)}
//! ```
//!
//! and cyclically for `(B,CA)` and `(C,AB)`. Four-party systems add the
//! trace-then-split reductions, the one-vs-three splits and the two-vs-two
//! splits; all are instances of the same pairing-pattern map (see
//! `pattern.rs`), for 25 distinct reductions in total.
//!
//! Two four-party forms are interpretations. The two-vs-two reduction uses
//! the four-pattern sum
//! `[rho_(AB,CD)]_{ij,rs} = sum_{p,q} [rho]_{i(i^p)j(j^q), r(r^p)s(s^q)}`,
//! the only reading that keeps the map trace preserving and Hermiticity
//! preserving. One-vs-three splits flip both followers independently.

mod label;
mod pattern;

pub use label::{Party, ReductionKind, ReductionLabel};

use crate::error::{Error, Result};
use crate::linalg::{partial_trace, validate_density, ComplexMatrix, DensityMatrix};
use pattern::{apply_kraus, kraus_completeness, PatternMap};

fn check_arity(rho: &DensityMatrix, expected: usize) -> Result<()> {
    if rho.n_qubits() != expected {
        return Err(Error::WrongArity {
            expected,
            got: rho.n_qubits(),
        });
    }
    Ok(())
}

fn check_label(label: &ReductionLabel, kinds: &[ReductionKind], n: usize) -> Result<()> {
    if label.n_parties() != n || !kinds.contains(&label.kind()) {
        return Err(Error::BadLabel {
            label: label.to_string(),
            valid: ReductionLabel::all(n)?
                .into_iter()
                .filter(|l| kinds.contains(&l.kind()))
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        });
    }
    Ok(())
}

fn finish(m: ComplexMatrix, rho: &DensityMatrix) -> Result<DensityMatrix> {
    validate_density(m, 2, rho.tol())
}

/// Any reduction as a raw 4x4 matrix, without validating the output.
pub fn reduce_matrix(rho: &DensityMatrix, label: &ReductionLabel) -> Result<ComplexMatrix> {
    check_arity(rho, label.n_parties())?;
    Ok(PatternMap::new(label).apply(rho))
}

/// Any reduction, validated as a two-qubit density matrix.
pub fn reduce(rho: &DensityMatrix, label: &ReductionLabel) -> Result<DensityMatrix> {
    finish(reduce_matrix(rho, label)?, rho)
}

/// `rho_(a,b) = tr_rest(rho)` on a three-party state.
pub fn reduce_pair(rho: &DensityMatrix, label: &ReductionLabel) -> Result<DensityMatrix> {
    check_arity(rho, 3)?;
    check_label(label, &[ReductionKind::PairTrace], 3)?;
    let keep = [label.x_group()[0].index(), label.y_group()[0].index()];
    partial_trace(rho, &keep)
}

/// One of `(A,BC)`, `(B,CA)`, `(C,AB)` on a three-party state.
pub fn reduce_split(rho: &DensityMatrix, label: &ReductionLabel) -> Result<DensityMatrix> {
    check_arity(rho, 3)?;
    check_label(label, &[ReductionKind::OneVsTwo], 3)?;
    reduce(rho, label)
}

/// The same split computed as `sum_p (I (x) K_p) rho (I (x) K_p)^H` from
/// explicit Kraus matrices. Serves as an independent cross-check of
/// [`reduce_split`].
pub fn reduce_split_channel(rho: &DensityMatrix, label: &ReductionLabel) -> Result<DensityMatrix> {
    check_arity(rho, 3)?;
    check_label(label, &[ReductionKind::OneVsTwo], 3)?;
    finish(reduce_channel_matrix(rho, label)?, rho)
}

/// Operator-sum evaluation of any reduction.
pub fn reduce_channel_matrix(rho: &DensityMatrix, label: &ReductionLabel) -> Result<ComplexMatrix> {
    check_arity(rho, label.n_parties())?;
    let ops = PatternMap::new(label).kraus_operators();
    Ok(apply_kraus(&ops, rho.matrix()))
}

/// Largest deviation of `sum_k K_k^H K_k` from the identity for a label's
/// Kraus operators.
pub fn kraus_completeness_defect(label: &ReductionLabel) -> f64 {
    let ops = PatternMap::new(label).kraus_operators();
    let d = 1 << label.n_parties();
    kraus_completeness(&ops, d).max_abs_diff(&ComplexMatrix::identity(d))
}

/// `(A,BCD)` and its cyclic relatives on a four-party state.
pub fn reduce_one_vs_three(rho: &DensityMatrix, label: &ReductionLabel) -> Result<DensityMatrix> {
    check_arity(rho, 4)?;
    check_label(label, &[ReductionKind::OneVsThree], 4)?;
    reduce(rho, label)
}

/// `(AB,CD)`, `(AC,BD)` or `(AD,BC)` on a four-party state.
pub fn reduce_two_vs_two(rho: &DensityMatrix, label: &ReductionLabel) -> Result<DensityMatrix> {
    check_arity(rho, 4)?;
    check_label(label, &[ReductionKind::TwoVsTwo], 4)?;
    reduce(rho, label)
}

/// A four-party one-vs-two split such as `(D,AB)`: trace out the fourth
/// party, then apply the three-party split to what remains.
pub fn reduce_trace_then_split(
    rho: &DensityMatrix,
    label: &ReductionLabel,
) -> Result<DensityMatrix> {
    check_arity(rho, 4)?;
    check_label(label, &[ReductionKind::OneVsTwo], 4)?;
    let traced = label.traced()[0];
    let live: Vec<usize> = (0..4).filter(|&q| q != traced.index()).collect();
    let reduced = partial_trace(rho, &live)?;
    // relabel the live parties as A, B, C in order
    let pos = live
        .iter()
        .position(|&q| q == label.x_group()[0].index())
        .expect("x party is live");
    let inner = ReductionLabel::one_vs_rest(Party::new(pos)?, None, 3)?;
    reduce_split(&reduced, &inner)
}

/// Reductions of one state, in report order.
#[derive(Debug, Clone)]
pub struct ReductionSet {
    entries: Vec<(ReductionLabel, DensityMatrix)>,
}

impl ReductionSet {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, label: &ReductionLabel) -> Option<&DensityMatrix> {
        self.entries
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, m)| m)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ReductionLabel, &DensityMatrix)> {
        self.entries.iter().map(|(l, m)| (l, m))
    }

    pub fn labels(&self) -> impl Iterator<Item = &ReductionLabel> {
        self.entries.iter().map(|(l, _)| l)
    }
}

fn reduce_all(rho: &DensityMatrix, n: usize) -> Result<ReductionSet> {
    check_arity(rho, n)?;
    let entries = ReductionLabel::all(n)?
        .into_iter()
        .map(|label| {
            let m = match label.kind() {
                ReductionKind::PairTrace if n == 3 => reduce_pair(rho, &label)?,
                ReductionKind::OneVsTwo if n == 4 => reduce_trace_then_split(rho, &label)?,
                _ => reduce(rho, &label)?,
            };
            Ok((label, m))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ReductionSet { entries })
}

/// The six reductions of a three-party state.
pub fn reduce_all_tripartite(rho: &DensityMatrix) -> Result<ReductionSet> {
    reduce_all(rho, 3)
}

/// The 25 distinct reductions of a four-party state.
pub fn reduce_all_quadripartite(rho: &DensityMatrix) -> Result<ReductionSet> {
    reduce_all(rho, 4)
}

/// Arity-dispatching form of the two above.
pub fn reduce_all_for(rho: &DensityMatrix) -> Result<ReductionSet> {
    match rho.n_qubits() {
        3 | 4 => reduce_all(rho, rho.n_qubits()),
        n => Err(Error::WrongArity {
            expected: 3,
            got: n,
        }),
    }
}
