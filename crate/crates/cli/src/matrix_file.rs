use anyhow::{bail, Context, Result};
use qsep_core::linalg::{c, ComplexMatrix};
use serde::{Deserialize, Serialize};

/// On-disk density matrix: real and imaginary parts as separate row-major
/// arrays of `2^n_qubits` rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub n_qubits: usize,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
}

impl MatrixFile {
    pub fn from_matrix(m: &ComplexMatrix, n_qubits: usize) -> Self {
        let dim = m.dim();
        let rows = |part: fn(&qsep_core::C64) -> f64| {
            (0..dim)
                .map(|i| (0..dim).map(|j| part(&m[(i, j)])).collect())
                .collect()
        };
        Self {
            n_qubits,
            re: rows(|z| z.re),
            im: rows(|z| z.im),
            tol: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).context("input is not a valid matrix file")
    }

    /// Checks the array shapes and assembles the complex matrix.
    pub fn to_matrix(&self) -> Result<ComplexMatrix> {
        if !(1..=4).contains(&self.n_qubits) {
            bail!("n_qubits must be between 1 and 4, got {}", self.n_qubits);
        }
        let dim = 1usize << self.n_qubits;
        for (name, part) in [("re", &self.re), ("im", &self.im)] {
            if part.len() != dim {
                bail!("{name} has {} rows, expected {dim}", part.len());
            }
            for (i, row) in part.iter().enumerate() {
                if row.len() != dim {
                    bail!("{name} row {i} has {} entries, expected {dim}", row.len());
                }
            }
        }
        if let Some(t) = self.tol {
            if !(t.is_finite() && t >= 0.0) {
                bail!("tol must be a nonnegative number, got {t}");
            }
        }
        let entries = (0..dim)
            .flat_map(|i| (0..dim).map(move |j| (i, j)))
            .map(|(i, j)| c(self.re[i][j], self.im[i][j]))
            .collect();
        Ok(ComplexMatrix::from_entries(dim, entries)?)
    }

    /// Pretty JSON with one matrix row per line. Numbers use the shortest
    /// decimal that parses back to the same `f64`.
    pub fn to_json(&self) -> String {
        let block = |rows: &[Vec<f64>]| {
            let lines: Vec<String> = rows
                .iter()
                .map(|r| format!("    {}", serde_json::to_string(r).expect("finite row")))
                .collect();
            format!("[\n{}\n  ]", lines.join(",\n"))
        };
        let mut s = format!("{{\n  \"n_qubits\": {},\n", self.n_qubits);
        s += &format!(
            "  \"re\": {},\n  \"im\": {}",
            block(&self.re),
            block(&self.im)
        );
        if let Some(t) = self.tol {
            s += &format!(
                ",\n  \"tol\": {}",
                serde_json::to_string(&t).expect("finite tol")
            );
        }
        s + "\n}"
    }
}
