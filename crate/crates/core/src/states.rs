//! Constructors for the three-qubit state families used as test cases, plus
//! the closed-form product-state blocks used as oracles.
//!
//! Entries are built from exact dyadic rationals wherever the family allows
//! it, so outputs validate at `1e-12`.

use crate::error::{Error, Result};
use crate::linalg::{compose, r, validate_density, ComplexMatrix, DensityMatrix, PureState, C64};
use crate::reductions::{reduce_pair, ReductionLabel};

const CONSTRUCTION_TOL: f64 = 1e-12;

fn finish(m: ComplexMatrix, n: usize) -> Result<DensityMatrix> {
    validate_density(m, n, CONSTRUCTION_TOL)
}

/// `(|0...0> + |1...1>) / sqrt 2` on `n` qubits.
pub fn ghz_n(n_qubits: usize) -> Result<DensityMatrix> {
    if !(2..=4).contains(&n_qubits) {
        return Err(Error::BadParams(format!(
            "GHZ needs 2..=4 qubits, got {n_qubits}"
        )));
    }
    let last = (1 << n_qubits) - 1;
    let mut m = ComplexMatrix::zeros(1 << n_qubits);
    for a in [0, last] {
        for b in [0, last] {
            m[(a, b)] = r(0.5);
        }
    }
    finish(m, n_qubits)
}

pub fn ghz() -> DensityMatrix {
    ghz_n(3).expect("three-qubit GHZ is valid")
}

/// `|Phi+><Phi+|` with `|Phi+> = (|00> + |11>) / sqrt 2`.
pub fn bell() -> DensityMatrix {
    ghz_n(2).expect("Bell state is valid")
}

/// Singlet-type two-qubit Werner state `x S + (1 - x) I/4` with
/// `S = |Psi-><Psi-|`.
pub fn werner_two_qubit(x: f64) -> Result<DensityMatrix> {
    check_unit_interval("x", x)?;
    let mut m = ComplexMatrix::identity(4).scale((1.0 - x) / 4.0);
    m[(1, 1)] += r(x / 2.0);
    m[(2, 2)] += r(x / 2.0);
    m[(1, 2)] -= r(x / 2.0);
    m[(2, 1)] -= r(x / 2.0);
    finish(m, 2)
}

fn check_unit_interval(name: &'static str, x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name,
            value: x,
            range: "[0, 1]",
        })
    }
}

/// `x R + (1 - x) I/8` where `R` is an equal mixture of
/// `(|010> - |101>)/sqrt 2` and `(|011> - |100>)/sqrt 2`.
///
/// Its `(A,BC)` reduction is the two-qubit Werner state of parameter `x`,
/// which is entangled iff `x > 1/3`.
pub fn werner_embedded(x: f64) -> Result<DensityMatrix> {
    check_unit_interval("x", x)?;
    let mut m = ComplexMatrix::identity(8).scale((1.0 - x) / 8.0);
    let q = x / 4.0;
    for idx in [0b010, 0b011, 0b100, 0b101] {
        m[(idx, idx)] += r(q);
    }
    for (a, b) in [(0b010, 0b101), (0b011, 0b100)] {
        m[(a, b)] -= r(q);
        m[(b, a)] -= r(q);
    }
    finish(m, 3)
}

/// Lifts a two-qubit state `R` into three qubits so that a chosen reduction
/// returns `R` exactly. With `i j` the ket indices of `R` and `p` a free
/// pattern bit, each nonzero entry equals `R/2` at:
///
/// | way | `(A, B, C)`          | recovered by |
/// |-----|----------------------|--------------|
/// | 1   | `(i, j, j^p)`        | `(A,BC)`     |
/// | 2   | `(j^p, i, j)`        | `(B,CA)`     |
/// | 3   | `(j, j^p, i)`        | `(C,AB)`     |
/// | 4   | `(i, j, p)`          | `(A,B)`      |
/// | 5   | `(i, p, j)`          | `(A,C)`      |
/// | 6   | `(p, i, j)`          | `(B,C)`      |
///
/// The bra side uses the same `p`.
pub fn embed_bipartite(big_r: &DensityMatrix, way: u8) -> Result<DensityMatrix> {
    if big_r.n_qubits() != 2 {
        return Err(Error::WrongArity {
            expected: 2,
            got: big_r.n_qubits(),
        });
    }
    let place = |i: usize, j: usize, p: usize| -> [usize; 3] {
        match way {
            1 => [i, j, j ^ p],
            2 => [j ^ p, i, j],
            3 => [j, j ^ p, i],
            4 => [i, j, p],
            5 => [i, p, j],
            _ => [p, i, j],
        }
    };
    if !(1..=6).contains(&way) {
        return Err(Error::BadWay(way));
    }
    let rm = big_r.matrix();
    let mut m = ComplexMatrix::zeros(8);
    for row in 0..4 {
        for col in 0..4 {
            let half = rm[(row, col)] * 0.5;
            for p in 0..2 {
                let a = compose(&place(row >> 1, row & 1, p));
                let b = compose(&place(col >> 1, col & 1, p));
                m[(a, b)] = half;
            }
        }
    }
    finish(m, 3)
}

/// Reduction that recovers `R` from [`embed_bipartite`] for a given way.
pub fn embedding_witness_label(way: u8) -> Result<ReductionLabel> {
    let text = match way {
        1 => "A,BC",
        2 => "B,CA",
        3 => "C,AB",
        4 => "A,B",
        5 => "A,C",
        6 => "B,C",
        _ => return Err(Error::BadWay(way)),
    };
    ReductionLabel::parse(text, 3)
}

/// Weights of the three "entanglement molecule" pairs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoleculeParams {
    p_ab: f64,
    p_ac: f64,
    p_bc: f64,
}

impl MoleculeParams {
    pub fn new(p_ab: f64, p_ac: f64, p_bc: f64) -> Result<Self> {
        let all = [p_ab, p_ac, p_bc];
        if all.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return Err(Error::BadParams(format!(
                "molecule weights {all:?} must lie in [0, 1]"
            )));
        }
        let sum: f64 = all.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::BadParams(format!(
                "molecule weights sum to {sum}, expected 1"
            )));
        }
        Ok(Self { p_ab, p_ac, p_bc })
    }

    pub fn p_ab(&self) -> f64 {
        self.p_ab
    }

    pub fn p_ac(&self) -> f64 {
        self.p_ac
    }

    pub fn p_bc(&self) -> f64 {
        self.p_bc
    }

    /// Weight of the molecule living on a pair label `(r,s)`.
    pub fn weight_for(&self, pair: &ReductionLabel) -> Option<f64> {
        match pair.to_string().as_str() {
            "A,B" => Some(self.p_ab),
            "A,C" => Some(self.p_ac),
            "B,C" => Some(self.p_bc),
            _ => None,
        }
    }
}

/// `sum_rs p_rs |Psi_rs><Psi_rs|` with
/// `|Psi_rs> = (|0_r 1_s> + |1_r 0_s>) / sqrt 2 (x) |0_rest>`.
pub fn molecule_state(params: MoleculeParams) -> Result<DensityMatrix> {
    let mut m = ComplexMatrix::zeros(8);
    // support indices of each molecule: AB -> |010>,|100>; AC -> |001>,|100>;
    // BC -> |001>,|010>
    for (p, (a, b)) in [
        (params.p_ab, (0b010, 0b100)),
        (params.p_ac, (0b001, 0b100)),
        (params.p_bc, (0b001, 0b010)),
    ] {
        let h = r(p / 2.0);
        m[(a, a)] += h;
        m[(b, b)] += h;
        m[(a, b)] += h;
        m[(b, a)] += h;
    }
    finish(m, 3)
}

/// Pair reduction `rho_(r,s)` of the molecule state. Its `|01><10|`
/// coherence equals `p_rs / 2`.
pub fn molecule_pair_reduction_entries(
    params: MoleculeParams,
    pair: &ReductionLabel,
) -> Result<DensityMatrix> {
    reduce_pair(&molecule_state(params)?, pair)
}

/// Integer kets of the Shifts unextendible product basis with their squared
/// norms: `|0,1,+>`, `|1,+,0>`, `|+,0,1>`, `|-,-,->`.
fn upb_kets() -> [([i32; 8], i32); 4] {
    let ket = |f: [[i32; 2]; 3]| {
        let mut v = [0i32; 8];
        for (idx, slot) in v.iter_mut().enumerate() {
            *slot = f[0][idx >> 2] * f[1][(idx >> 1) & 1] * f[2][idx & 1];
        }
        v
    };
    let (zero, one, plus, minus) = ([1, 0], [0, 1], [1, 1], [1, -1]);
    [
        (ket([zero, one, plus]), 2),
        (ket([one, plus, zero]), 2),
        (ket([plus, zero, one]), 2),
        (ket([minus, minus, minus]), 8),
    ]
}

/// The four normalized UPB vectors.
pub fn upb_vectors() -> Vec<PureState> {
    upb_kets()
        .iter()
        .map(|(v, n2)| {
            let s = 1.0 / (*n2 as f64).sqrt();
            PureState::new(v.iter().map(|&x| r(x as f64 * s)).collect(), 1e-12)
                .expect("UPB kets are normalized")
        })
        .collect()
}

/// `(I - sum_i |psi_i><psi_i|) / 4` over the Shifts UPB. Bound entangled:
/// every bipartite reduction is PPT.
pub fn upb_state() -> DensityMatrix {
    let kets = upb_kets();
    for (i, (u, _)) in kets.iter().enumerate() {
        for (v, _) in &kets[i + 1..] {
            let dot: i32 = u.iter().zip(v).map(|(a, b)| a * b).sum();
            assert_eq!(dot, 0, "UPB kets must be orthogonal");
        }
    }
    let mut m = ComplexMatrix::identity(8);
    for (v, n2) in &kets {
        for a in 0..8 {
            for b in 0..8 {
                m[(a, b)] -= r((v[a] * v[b]) as f64 / *n2 as f64);
            }
        }
    }
    finish(m.scale(0.25), 3).expect("UPB state is a density matrix")
}

/// Pure product state `a (x) b (x) c`.
pub fn product_pure(a: [C64; 2], b: [C64; 2], c: [C64; 2]) -> Result<DensityMatrix> {
    Ok(PureState::product(&[a, b, c], 1e-9)?.density())
}

/// `[[|u0|^2, g u0 u1*], [g u0* u1, |u1|^2]]`, the two-qubit factor that
/// appears when a split reduction acts on a product state.
pub fn omega_matrix(u: [C64; 2], gamma: f64) -> Result<ComplexMatrix> {
    if gamma.is_nan() || gamma.abs() > 1.0 {
        return Err(Error::BadGamma(gamma));
    }
    let norm2 = u[0].norm_sqr() + u[1].norm_sqr();
    if (norm2 - 1.0).abs() > 1e-9 {
        return Err(Error::NotNormalized(norm2 - 1.0));
    }
    let off = u[0] * u[1].conj() * gamma;
    ComplexMatrix::from_entries(
        2,
        vec![r(u[0].norm_sqr()), off, off.conj(), r(u[1].norm_sqr())],
    )
}

/// `2 Re(v0 v1*)` of a single-qubit amplitude pair.
pub fn coherence_factor(v: [C64; 2]) -> f64 {
    2.0 * (v[0] * v[1].conj()).re
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{c, kron};
    use crate::reductions::{reduce_split, ReductionLabel};
    use crate::separability::{ppt_separable, witness, Conclusion};

    fn lab(s: &str) -> ReductionLabel {
        ReductionLabel::parse(s, 3).unwrap()
    }

    #[test]
    fn ghz_entries() {
        let g = ghz();
        assert_eq!(g.matrix()[(0, 0)], r(0.5));
        assert_eq!(g.matrix()[(0, 7)], r(0.5));
        assert_eq!(g.matrix()[(1, 1)], r(0.0));
        assert_eq!(g.matrix().rank(1e-10).unwrap(), 1);
    }

    #[test]
    fn werner_family() {
        let w0 = werner_embedded(0.0).unwrap();
        assert!(
            w0.matrix()
                .max_abs_diff(&ComplexMatrix::identity(8).scale(0.125))
                == 0.0
        );
        let w1 = werner_embedded(1.0).unwrap();
        assert_eq!(w1.entry(&[0, 1, 0], &[0, 1, 0]), r(0.25));
        assert_eq!(w1.entry(&[1, 0, 1], &[0, 1, 0]), r(-0.25));
        for x in [0.0, 0.3, 0.6, 1.0] {
            let split = reduce_split(&werner_embedded(x).unwrap(), &lab("A,BC")).unwrap();
            let expected = werner_two_qubit(x).unwrap();
            assert!(
                split.matrix().max_abs_diff(expected.matrix()) < 1e-15,
                "x={x}"
            );
        }
        let pt = ppt_separable(&reduce_split(&w1, &lab("A,BC")).unwrap(), 1e-9).unwrap();
        assert!((pt.min_pt_eigenvalue + 0.5).abs() < 1e-12);
        assert!(matches!(
            werner_embedded(1.5),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn embeddings_recover_r() {
        let b = bell();
        for way in 1..=6 {
            let rho = embed_bipartite(&b, way).unwrap();
            let l = embedding_witness_label(way).unwrap();
            let back = crate::reductions::reduce(&rho, &l).unwrap();
            assert!(back.matrix().max_abs_diff(b.matrix()) < 1e-15, "way {way}");
            assert_eq!(
                witness(&rho, 1e-9).unwrap().conclusion,
                Conclusion::Entangled
            );
        }
        let mixed = embed_bipartite(&DensityMatrix::maximally_mixed(2), 4).unwrap();
        assert!(
            mixed
                .matrix()
                .max_abs_diff(&ComplexMatrix::identity(8).scale(0.125))
                < 1e-15
        );
        assert!(matches!(embed_bipartite(&b, 7), Err(Error::BadWay(7))));
        assert!(matches!(
            embed_bipartite(&ghz(), 1),
            Err(Error::WrongArity { .. })
        ));
    }

    #[test]
    fn molecule_examples() {
        let p = MoleculeParams::new(1.0, 0.0, 0.0).unwrap();
        let rho = molecule_state(p).unwrap();
        assert_eq!(rho.entry(&[0, 1, 0], &[1, 0, 0]), r(0.5));
        let ab = molecule_pair_reduction_entries(p, &lab("A,B")).unwrap();
        assert_eq!(ab.matrix()[(1, 2)], r(0.5));
        assert!(ppt_separable(&ab, 1e-9).unwrap().min_pt_eigenvalue < 0.0);

        let p = MoleculeParams::new(0.0, 1.0, 0.0).unwrap();
        let ab = molecule_pair_reduction_entries(p, &lab("A,B")).unwrap();
        assert_eq!(ab.matrix()[(1, 2)], r(0.0));
        assert!((ab.matrix().trace().re - 1.0).abs() < 1e-15);

        let third = 1.0 / 3.0;
        let p = MoleculeParams::new(third, third, third).unwrap();
        assert!(witness(&molecule_state(p).unwrap(), 1e-9)
            .unwrap()
            .is_entangled());

        let p = MoleculeParams::new(0.0, 0.0, 1.0).unwrap();
        let rep = witness(&molecule_state(p).unwrap(), 1e-9).unwrap();
        for s in ["A,B", "A,C", "A,BC"] {
            assert!(rep.verdict(&lab(s)).unwrap().separable, "{s}");
        }
        assert!(!rep.verdict(&lab("B,C")).unwrap().separable);

        assert!(MoleculeParams::new(0.5, 0.6, 0.0).is_err());
        assert!(MoleculeParams::new(-0.1, 0.6, 0.5).is_err());
    }

    #[test]
    fn upb_basics() {
        let u = upb_state();
        assert!((u.matrix().trace().re - 1.0).abs() < 1e-15);
        for psi in upb_vectors() {
            let v = psi.coeffs();
            let m = u.matrix();
            let mut acc = C64::default();
            for a in 0..8 {
                for b in 0..8 {
                    acc += v[a].conj() * m[(a, b)] * v[b];
                }
            }
            assert!(acc.norm() < 1e-15);
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(
            omega_matrix([r(1.0), r(0.0)], 0.3).unwrap(),
            ComplexMatrix::from_diagonal(&[1.0, 0.0])
        );
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let half = omega_matrix([r(s), r(s)], 0.0).unwrap();
        assert!(half.max_abs_diff(&ComplexMatrix::identity(2).scale(0.5)) < 1e-15);
        let proj = omega_matrix([r(s), r(s)], 1.0).unwrap();
        for z in proj.entries() {
            assert!((z - r(0.5)).norm() < 1e-15);
        }
        assert!(matches!(
            omega_matrix([r(1.0), r(0.0)], 1.5),
            Err(Error::BadGamma(_))
        ));
    }

    #[test]
    fn plus_product_split_is_rho_a_times_projector() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let plus = [r(s), r(s)];
        let rho = product_pure(plus, plus, plus).unwrap();
        let split = reduce_split(&rho, &lab("A,BC")).unwrap();
        assert!((coherence_factor(plus) - 1.0).abs() < 1e-15);
        let rho_a = ComplexMatrix::outer(&plus);
        let expected = kron(&rho_a, &omega_matrix(plus, 1.0).unwrap()).unwrap();
        assert!(split.matrix().max_abs_diff(&expected) < 1e-15);
        assert!(product_pure([r(1.0), r(1.0)], plus, plus).is_err());
        let z = product_pure([r(1.0), r(0.0)], [r(1.0), r(0.0)], [c(1.0, 0.0), r(0.0)]).unwrap();
        assert_eq!(z.matrix()[(0, 0)], r(1.0));
    }
}
