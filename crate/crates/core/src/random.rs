//! Random state generators for property tests and demos.
//!
//! All functions take the RNG explicitly so callers control seeding.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::linalg::{
    c, tensor_product, validate_density, ComplexMatrix, DensityMatrix, PureState, C64,
};
use crate::separability::{ppt_separable, DEFAULT_PPT_TOL};
use crate::states::MoleculeParams;

fn gaussian_vector<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Vec<C64> {
    (0..len)
        .map(|_| c(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect()
}

fn normalize(mut v: Vec<C64>) -> Vec<C64> {
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in &mut v {
        *z /= norm;
    }
    v
}

/// Haar-random pure state on `n` qubits.
pub fn pure_state<R: Rng + ?Sized>(n_qubits: usize, rng: &mut R) -> PureState {
    PureState::new(normalize(gaussian_vector(1 << n_qubits, rng)), 1e-9)
        .expect("normalized by construction")
}

/// Haar-random single-qubit amplitudes.
pub fn qubit<R: Rng + ?Sized>(rng: &mut R) -> [C64; 2] {
    let v = normalize(gaussian_vector(2, rng));
    [v[0], v[1]]
}

pub fn product_pure_state<R: Rng + ?Sized>(n_qubits: usize, rng: &mut R) -> PureState {
    let factors: Vec<[C64; 2]> = (0..n_qubits).map(|_| qubit(rng)).collect();
    PureState::product(&factors, 1e-9).expect("unit factors")
}

/// Three-qubit state that factorizes as one random qubit times a random
/// two-qubit state, with the lone qubit at party `single` (0, 1 or 2).
pub fn biseparable_pure_state<R: Rng + ?Sized>(single: usize, rng: &mut R) -> PureState {
    let lone = qubit(rng);
    let pair = normalize(gaussian_vector(4, rng));
    let mut coeffs = vec![C64::default(); 8];
    for (idx, slot) in coeffs.iter_mut().enumerate() {
        let bits = [(idx >> 2) & 1, (idx >> 1) & 1, idx & 1];
        let rest: Vec<usize> = (0..3).filter(|&q| q != single).map(|q| bits[q]).collect();
        *slot = lone[bits[single]] * pair[2 * rest[0] + rest[1]];
    }
    PureState::new(coeffs, 1e-9).expect("product of unit vectors")
}

/// Random convex weights, uniform on the simplex.
pub fn simplex_weights<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Vec<f64> {
    let raw: Vec<f64> = (0..k)
        .map(|_| -rng.random::<f64>().max(1e-300).ln())
        .collect();
    let total: f64 = raw.iter().sum();
    raw.into_iter().map(|x| x / total).collect()
}

/// Mixture of `components` Haar-random pure states with random weights.
pub fn density_matrix<R: Rng + ?Sized>(
    n_qubits: usize,
    components: usize,
    rng: &mut R,
) -> DensityMatrix {
    let weights = simplex_weights(components.max(1), rng);
    let mut acc = ComplexMatrix::zeros(1 << n_qubits);
    for w in weights {
        let psi = pure_state(n_qubits, rng);
        acc = &acc + &ComplexMatrix::outer(psi.coeffs()).scale(w);
    }
    validate_density(acc, n_qubits, 1e-9).expect("mixture of pure states")
}

/// Random single-qubit mixed state.
pub fn qubit_density<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    density_matrix(1, 2, rng)
}

/// `rho_1 (x) ... (x) rho_n` with random mixed factors.
pub fn product_mixed_state<R: Rng + ?Sized>(n_qubits: usize, rng: &mut R) -> DensityMatrix {
    let factors: Vec<DensityMatrix> = (0..n_qubits).map(|_| qubit_density(rng)).collect();
    let refs: Vec<&DensityMatrix> = factors.iter().collect();
    tensor_product(&refs).expect("product of valid factors")
}

/// Convex mixture of `components` random product pure states.
pub fn separable_mixture<R: Rng + ?Sized>(
    n_qubits: usize,
    components: usize,
    rng: &mut R,
) -> DensityMatrix {
    let weights = simplex_weights(components.max(1), rng);
    let mut acc = ComplexMatrix::zeros(1 << n_qubits);
    for w in weights {
        let psi = product_pure_state(n_qubits, rng);
        acc = &acc + &ComplexMatrix::outer(psi.coeffs()).scale(w);
    }
    validate_density(acc, n_qubits, 1e-9).expect("mixture of product states")
}

/// Two-qubit density matrix rejection-sampled until its partial transpose
/// has a negative eigenvalue below `-margin`.
pub fn entangled_two_qubit<R: Rng + ?Sized>(margin: f64, rng: &mut R) -> DensityMatrix {
    loop {
        let k = rng.random_range(1..=3);
        let rho = density_matrix(2, k, rng);
        let o = ppt_separable(&rho, DEFAULT_PPT_TOL).expect("valid two-qubit state");
        if o.min_pt_eigenvalue < -margin {
            return rho;
        }
    }
}

/// Uniform point on the probability simplex of the three molecule weights.
pub fn molecule_params<R: Rng + ?Sized>(rng: &mut R) -> MoleculeParams {
    let w = simplex_weights(3, rng);
    MoleculeParams::new(w[0], w[1], 1.0 - w[0] - w[1]).expect("simplex point")
}
