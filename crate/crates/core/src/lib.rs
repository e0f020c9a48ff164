//! Entanglement witnesses for three- and four-qubit density matrices.
//!
//! A multi-qubit state is mapped onto a handful of two-qubit density
//! matrices: ordinary pair traces plus "split" reductions that fold a group
//! of parties onto a single qubit. Each two-qubit image is decided exactly by
//! the partial-transpose test, and any entangled image proves the original
//! state entangled. For three-qubit pure states the six images decide full
//! separability exactly; a direct rank test on the coefficient tensor is
//! provided as well.
//!
//! Basis convention: party A is the most significant qubit, so the
//! three-qubit ket `|i j k>` has composite index `4i + 2j + k`.

pub mod error;
pub mod linalg;
pub mod random;
pub mod reductions;
pub mod separability;
pub mod states;
pub mod sweep;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, DensityMatrix, PureState, Spectrum, C64};
pub use reductions::{Party, ReductionKind, ReductionLabel, ReductionSet};
pub use separability::{Conclusion, PptVerdict, WitnessReport};
