use anyhow::{bail, Context, Result};
use qsep_core::linalg::{
    c, hermitian_eigenvalues, validate_density, DensityMatrix, PureState, C64,
    DEFAULT_VALIDATION_TOL,
};
use qsep_core::reductions::{reduce, reduce_matrix, ReductionLabel};
use qsep_core::separability::{witness, witness_unvalidated, DEFAULT_PPT_TOL};
use qsep_core::states::{
    bell, embed_bipartite, ghz_n, molecule_state, upb_state, werner_embedded, MoleculeParams,
};
use qsep_core::sweep::{sweep, SweepFamily};
use sha2::{Digest, Sha256};

use crate::matrix_file::MatrixFile;
use crate::report::{InputInfo, ReportDocument, SweepDocument, Tolerances, ValidationSummary};

/// Flags shared by every subcommand.
#[derive(Debug, Clone, Copy, Default)]
pub struct Settings {
    pub tol: Option<f64>,
    pub no_validate: bool,
}

impl Settings {
    fn ppt_tol(&self) -> f64 {
        self.tol.unwrap_or(DEFAULT_PPT_TOL)
    }

    fn validation_tol(&self, file: &MatrixFile) -> f64 {
        self.tol.or(file.tol).unwrap_or(DEFAULT_VALIDATION_TOL)
    }
}

/// Raw input text with the name it was read from.
#[derive(Debug, Clone)]
pub struct Input {
    pub source: String,
    pub text: String,
}

impl Input {
    pub fn read(path: &str) -> Result<Self> {
        let text = if path == "-" {
            std::io::read_to_string(std::io::stdin()).context("reading standard input")?
        } else {
            std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?
        };
        Ok(Self {
            source: if path == "-" {
                "<stdin>".into()
            } else {
                path.into()
            },
            text,
        })
    }

    fn info(&self) -> InputInfo {
        let digest = Sha256::digest(self.text.as_bytes());
        InputInfo {
            source: self.source.clone(),
            sha256: digest.iter().map(|b| format!("{b:02x}")).collect(),
        }
    }
}

fn summarize(rho: &DensityMatrix, performed: bool) -> Result<ValidationSummary> {
    let m = rho.matrix();
    let herm_part = (m + &m.adjoint()).scale(0.5);
    Ok(ValidationSummary {
        performed,
        hermiticity_defect: m.hermiticity_defect(),
        trace_deviation: m.trace().re - 1.0,
        min_eigenvalue: hermitian_eigenvalues(&herm_part, f64::INFINITY)?.min(),
    })
}

/// Parses and, unless disabled, validates a matrix file.
fn load(input: &Input, settings: Settings) -> Result<(DensityMatrix, f64)> {
    let file = MatrixFile::parse(&input.text).with_context(|| input.source.clone())?;
    let m = file.to_matrix().with_context(|| input.source.clone())?;
    let vtol = settings.validation_tol(&file);
    let rho = if settings.no_validate {
        DensityMatrix::new_unchecked(m, file.n_qubits)?
    } else {
        validate_density(m, file.n_qubits, vtol)
            .with_context(|| format!("{} failed density validation", input.source))?
    };
    Ok((rho, vtol))
}

pub fn analyze(input: &Input, settings: Settings) -> Result<ReportDocument> {
    let (rho, vtol) = load(input, settings)?;
    let n = rho.n_qubits();
    if !(3..=4).contains(&n) {
        bail!(
            "analyze needs a 3- or 4-qubit state, {} has {n}",
            input.source
        );
    }
    let ppt = settings.ppt_tol();
    let rep = if settings.no_validate {
        witness_unvalidated(&rho, ppt)?
    } else {
        witness(&rho, ppt)?
    };
    Ok(ReportDocument::new(
        input.info(),
        n,
        Tolerances {
            validation: vtol,
            ppt,
        },
        summarize(&rho, !settings.no_validate)?,
        &rep,
    ))
}

pub fn reduce_file(input: &Input, label: &str, settings: Settings) -> Result<MatrixFile> {
    let (rho, _) = load(input, settings)?;
    let label = ReductionLabel::parse(label, rho.n_qubits())?;
    let m = if settings.no_validate {
        reduce_matrix(&rho, &label)?
    } else {
        reduce(&rho, &label)?.into_matrix()
    };
    Ok(MatrixFile::from_matrix(&m, 2))
}

/// Families accepted by `make-state`.
#[derive(Debug, Clone)]
pub enum Family {
    Ghz { qubits: usize },
    Werner { x: f64 },
    Embed { way: u8, r: Option<Input> },
    Molecule { p_ab: f64, p_ac: f64, p_bc: f64 },
    Upb,
    Product { factors: Vec<Vec<f64>> },
}

/// Reads 2 numbers as a real qubit vector or 4 as `re0, im0, re1, im1`, and
/// normalizes it.
fn qubit(name: char, v: &[f64]) -> Result<[C64; 2]> {
    let q = match *v {
        [a, b] => [c(a, 0.0), c(b, 0.0)],
        [a, ai, b, bi] => [c(a, ai), c(b, bi)],
        _ => bail!(
            "--{name} takes 2 real or 4 (re, im, re, im) numbers, got {}",
            v.len()
        ),
    };
    let norm = (q[0].norm_sqr() + q[1].norm_sqr()).sqrt();
    if !(norm.is_finite() && norm > 0.0) {
        bail!("--{name} must be a nonzero finite vector");
    }
    Ok([q[0] / norm, q[1] / norm])
}

pub fn make_state(family: &Family, settings: Settings) -> Result<MatrixFile> {
    let rho = match family {
        Family::Ghz { qubits } => ghz_n(*qubits)?,
        Family::Werner { x } => werner_embedded(*x)?,
        Family::Embed { way, r } => {
            let big_r = match r {
                Some(input) => {
                    let (rho, _) = load(input, settings)?;
                    if rho.n_qubits() != 2 {
                        bail!(
                            "--r must be a 2-qubit matrix file, got {} qubits",
                            rho.n_qubits()
                        );
                    }
                    rho
                }
                None => bell(),
            };
            embed_bipartite(&big_r, *way)?
        }
        Family::Molecule { p_ab, p_ac, p_bc } => {
            molecule_state(MoleculeParams::new(*p_ab, *p_ac, *p_bc)?)?
        }
        Family::Upb => upb_state(),
        Family::Product { factors } => {
            let qubits = factors
                .iter()
                .zip(['a', 'b', 'c', 'd'])
                .map(|(v, name)| qubit(name, v))
                .collect::<Result<Vec<_>>>()?;
            PureState::product(&qubits, 1e-12)?.density()
        }
    };
    Ok(MatrixFile::from_matrix(rho.matrix(), rho.n_qubits()))
}

pub fn run_sweep(
    family: &str,
    from: f64,
    to: f64,
    steps: usize,
    settings: Settings,
) -> Result<SweepDocument> {
    let fam = SweepFamily::parse(family)?;
    let tol = settings.ppt_tol();
    Ok(SweepDocument::new(
        sweep(fam, from, to, steps, tol)?,
        from,
        to,
        steps,
        tol,
    ))
}
