use proptest::prelude::*;
use qsep_core::linalg::{
    hermitian_eigenvalues, kron, partial_trace, validate_density, ComplexMatrix, DensityMatrix,
};
use qsep_core::random;
use qsep_core::reductions::{reduce_all_for, reduce_matrix, ReductionLabel};
use qsep_core::separability::{
    partial_transpose, pt_spectrum, pure_fully_separable, witness, Conclusion, Side,
};
use qsep_core::states::{embed_bipartite, molecule_pair_reduction_entries, molecule_state};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_hermitian(n: usize, seed: u64) -> ComplexMatrix {
    let rho = random::density_matrix(4, 3, &mut rng(seed));
    let m = rho.matrix();
    // 16x16 Hermitian with indefinite spectrum, truncated to n
    let mut out = ComplexMatrix::zeros(n);
    for a in 0..n {
        for b in 0..n {
            out[(a, b)] = m[(a, b)] * 10.0;
        }
        out[(a, a)] -= qsep_core::linalg::r(0.3);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eigenvalues_sum_to_trace_and_shift(seed in any::<u64>(), n in 1usize..=16, shift in -3.0f64..3.0) {
        let h = random_hermitian(n, seed);
        let s = hermitian_eigenvalues(&h, 1e-12).unwrap();
        prop_assert!((s.sum() - h.trace().re).abs() < 1e-9);
        let shifted = &h + &ComplexMatrix::identity(n).scale(shift);
        let t = hermitian_eigenvalues(&shifted, 1e-12).unwrap();
        for (a, b) in s.values().iter().zip(t.values()) {
            prop_assert!((b - a - shift).abs() < 1e-9);
        }
    }

    #[test]
    fn partial_trace_preserves_density_and_composes(seed in any::<u64>()) {
        let rho = random::density_matrix(3, 2, &mut rng(seed));
        for keep in [&[0usize, 1][..], &[0, 2], &[1, 2], &[0], &[1], &[2], &[2, 0]] {
            let red = partial_trace(&rho, keep).unwrap();
            prop_assert!(validate_density(red.matrix().clone(), keep.len(), 1e-9).is_ok());
        }
        let ab = partial_trace(&rho, &[0, 1]).unwrap();
        let a_two_step = partial_trace(&ab, &[0]).unwrap();
        let a_direct = partial_trace(&rho, &[0]).unwrap();
        prop_assert!(a_two_step.matrix().max_abs_diff(a_direct.matrix()) < 1e-12);
    }

    #[test]
    fn kron_trace_is_product(seed in any::<u64>()) {
        let mut g = rng(seed);
        let a = random::density_matrix(1, 2, &mut g).matrix().scale(2.5);
        let b = random_hermitian(4, seed ^ 0x55);
        let k = kron(&a, &b).unwrap();
        prop_assert!((k.trace() - a.trace() * b.trace()).norm() < 1e-12);
    }

    #[test]
    fn partial_transpose_properties(seed in any::<u64>()) {
        let sigma = random::density_matrix(2, 3, &mut rng(seed)).into_matrix();
        for side in [Side::X, Side::Y] {
            let pt = partial_transpose(&sigma, side).unwrap();
            prop_assert_eq!(&partial_transpose(&pt, side).unwrap(), &sigma);
            prop_assert_eq!(pt.trace(), sigma.trace());
            prop_assert!(pt.hermiticity_defect() <= sigma.hermiticity_defect());
        }
        let tx = hermitian_eigenvalues(&partial_transpose(&sigma, Side::X).unwrap(), 1e-9).unwrap();
        let ty = pt_spectrum(&sigma, 1e-9).unwrap();
        for (a, b) in tx.values().iter().zip(ty.values()) {
            prop_assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn reductions_are_linear(seed in any::<u64>(), n in 3usize..=4) {
        let mut g = rng(seed);
        let parts: Vec<DensityMatrix> = (0..3).map(|_| random::density_matrix(n, 2, &mut g)).collect();
        let w = random::simplex_weights(3, &mut g);
        let mix = DensityMatrix::mixture(&[(w[0], &parts[0]), (w[1], &parts[1]), (w[2], &parts[2])]).unwrap();
        for label in ReductionLabel::all(n).unwrap() {
            let whole = reduce_matrix(&mix, &label).unwrap();
            let mut sum = ComplexMatrix::zeros(4);
            for (wk, pk) in w.iter().zip(&parts) {
                sum = &sum + &reduce_matrix(pk, &label).unwrap().scale(*wk);
            }
            prop_assert!(whole.max_abs_diff(&sum) < 1e-12, "{}", label);
        }
    }

    #[test]
    fn pure_split_reductions_have_rank_at_most_two(seed in any::<u64>()) {
        let rho = random::pure_state(3, &mut rng(seed)).density();
        for label in ReductionLabel::all(3).unwrap() {
            let m = reduce_matrix(&rho, &label).unwrap();
            prop_assert!(m.rank(1e-10).unwrap() <= 2, "{}", label);
        }
    }

    #[test]
    fn product_and_separable_mixtures_are_inconclusive(seed in any::<u64>(), n in 3usize..=4, k in 1usize..=6) {
        let mut g = rng(seed);
        let prod = random::product_mixed_state(n, &mut g);
        prop_assert_eq!(witness(&prod, 1e-9).unwrap().conclusion, Conclusion::Inconclusive);
        let mix = random::separable_mixture(n, k, &mut g);
        prop_assert_eq!(witness(&mix, 1e-9).unwrap().conclusion, Conclusion::Inconclusive);
    }

    #[test]
    fn embeddings_of_entangled_r_are_detected(seed in any::<u64>()) {
        let r = random::entangled_two_qubit(1e-6, &mut rng(seed));
        for way in 1..=6 {
            let rho = embed_bipartite(&r, way).unwrap();
            prop_assert!(witness(&rho, 1e-9).unwrap().is_entangled(), "way {}", way);
        }
    }

    #[test]
    fn molecules_have_a_negative_pair_reduction(seed in any::<u64>()) {
        let p = random::molecule_params(&mut rng(seed));
        prop_assume!(p.p_ab().max(p.p_ac()).max(p.p_bc()) > 1e-6);
        let mut most_negative = f64::INFINITY;
        for pair in ["A,B", "A,C", "B,C"] {
            let l = ReductionLabel::parse(pair, 3).unwrap();
            let red = molecule_pair_reduction_entries(p, &l).unwrap();
            most_negative = most_negative.min(pt_spectrum(red.matrix(), 1e-9).unwrap().min());
        }
        prop_assert!(most_negative < 0.0);
        prop_assert!(witness(&molecule_state(p).unwrap(), 1e-9).unwrap().is_entangled());
    }

    #[test]
    fn pure_witness_agrees_with_rank_test(seed in any::<u64>(), kind in 0usize..5) {
        let mut g = rng(seed);
        let psi = match kind {
            0 => random::product_pure_state(3, &mut g),
            1..=3 => random::biseparable_pure_state(kind - 1, &mut g),
            _ => random::pure_state(3, &mut g),
        };
        let sep = pure_fully_separable(&psi, 1e-10).unwrap();
        let rep = witness(&psi.density(), 1e-9).unwrap();
        prop_assert_eq!(sep, !rep.is_entangled());
    }

    #[test]
    fn every_reduction_is_a_density_matrix(seed in any::<u64>(), n in 3usize..=4, k in 1usize..=4) {
        let rho = random::density_matrix(n, k, &mut rng(seed));
        let set = reduce_all_for(&rho).unwrap();
        prop_assert_eq!(set.len(), if n == 3 { 6 } else { 25 });
        for (_, m) in set.iter() {
            prop_assert!(validate_density(m.matrix().clone(), 2, 1e-9).is_ok());
        }
    }
}
