use std::fmt::Write as _;

use qsep_core::separability::{Conclusion, WitnessReport};
use qsep_core::sweep::{SweepResult, Threshold};
use serde::{Deserialize, Serialize};

/// Version of the machine-readable documents. Bump on any field change.
pub const SCHEMA: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputInfo {
    pub source: String,
    pub sha256: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub validation: f64,
    pub ppt: f64,
}

/// How far the input is from a density matrix, measured whether or not
/// validation was enforced.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ValidationSummary {
    pub performed: bool,
    pub hermiticity_defect: f64,
    pub trace_deviation: f64,
    /// Smallest eigenvalue of the Hermitian part.
    pub min_eigenvalue: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReductionRow {
    pub label: String,
    pub kind: String,
    pub min_pt_eigenvalue: f64,
    pub separable: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema: u32,
    pub tool_version: String,
    pub input: InputInfo,
    pub n_qubits: usize,
    pub tolerances: Tolerances,
    pub validation: ValidationSummary,
    pub reductions: Vec<ReductionRow>,
    pub conclusion: Conclusion,
    pub culprit: Option<String>,
    pub min_pt_eigenvalue: f64,
    pub warnings: Vec<String>,
}

impl ReportDocument {
    pub fn new(
        input: InputInfo,
        n_qubits: usize,
        tolerances: Tolerances,
        validation: ValidationSummary,
        rep: &WitnessReport,
    ) -> Self {
        let reductions = rep
            .verdicts
            .iter()
            .map(|v| ReductionRow {
                label: v.label.to_string(),
                kind: serde_json::to_value(v.label.kind())
                    .ok()
                    .and_then(|k| k.as_str().map(str::to_owned))
                    .unwrap_or_default(),
                min_pt_eigenvalue: v.min_pt_eigenvalue,
                separable: v.separable,
            })
            .collect();
        let mut warnings = Vec::new();
        if !validation.performed {
            warnings.push(
                "density validation was skipped (--no-validate); reductions of a \
                 non-density input need not be states, so verdicts are only \
                 indicative"
                    .to_owned(),
            );
        }
        Self {
            schema: SCHEMA,
            tool_version: TOOL_VERSION.to_owned(),
            input,
            n_qubits,
            tolerances,
            validation,
            reductions,
            conclusion: rep.conclusion,
            culprit: rep.culprit.as_ref().map(|l| l.to_string()),
            min_pt_eigenvalue: rep.min_pt_eigenvalue(),
            warnings,
        }
    }

    /// 2 for ENTANGLED, 0 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self.conclusion {
            Conclusion::Entangled => 2,
            Conclusion::Inconclusive => 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_human(&self) -> String {
        let mut s = String::new();
        let bar = "!".repeat(72);
        if !self.warnings.is_empty() {
            let _ = writeln!(s, "{bar}");
            for w in &self.warnings {
                let _ = writeln!(s, "!! WARNING: {w}");
            }
            let _ = writeln!(s, "{bar}");
        }
        let v = &self.validation;
        let _ = writeln!(s, "input       {}", self.input.source);
        let _ = writeln!(s, "sha256      {}", self.input.sha256);
        let _ = writeln!(s, "qubits      {}", self.n_qubits);
        let _ = writeln!(
            s,
            "tolerances  validation {:e}, ppt {:e}",
            self.tolerances.validation, self.tolerances.ppt
        );
        let _ = writeln!(
            s,
            "validation  {}: hermiticity defect {:.3e}, trace - 1 = {:.3e}, min eigenvalue {:.6e}",
            if v.performed { "passed" } else { "SKIPPED" },
            v.hermiticity_defect,
            v.trace_deviation,
            v.min_eigenvalue
        );
        let _ = writeln!(s);
        let _ = writeln!(
            s,
            "{:<8} {:<13} {:>17}  verdict",
            "label", "kind", "min PT eigenvalue"
        );
        for row in &self.reductions {
            let _ = writeln!(
                s,
                "{:<8} {:<13} {:>17.9e}  {}",
                row.label,
                row.kind,
                row.min_pt_eigenvalue,
                if row.separable { "PPT" } else { "NPT" }
            );
        }
        let _ = writeln!(s);
        match &self.culprit {
            Some(c) => {
                let _ = writeln!(
                    s,
                    "conclusion  {} (culprit {c}, min PT eigenvalue {:.9e})",
                    self.conclusion, self.min_pt_eigenvalue
                );
            }
            None => {
                let _ = writeln!(
                    s,
                    "conclusion  {} (every reduction is PPT; min PT eigenvalue {:.9e})",
                    self.conclusion, self.min_pt_eigenvalue
                );
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepDocument {
    pub schema: u32,
    pub tool_version: String,
    pub from: f64,
    pub to: f64,
    pub steps: usize,
    pub ppt_tolerance: f64,
    #[serde(flatten)]
    pub result: SweepResult,
}

impl SweepDocument {
    pub fn new(result: SweepResult, from: f64, to: f64, steps: usize, ppt_tolerance: f64) -> Self {
        Self {
            schema: SCHEMA,
            tool_version: TOOL_VERSION.to_owned(),
            from,
            to,
            steps,
            ppt_tolerance,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("sweep serializes")
    }

    pub fn to_human(&self) -> String {
        let mut s = String::new();
        let rows = &self.result.rows;
        let labels: Vec<&str> = rows
            .first()
            .map(|r| r.reductions.iter().map(|(l, _)| l.as_str()).collect())
            .unwrap_or_default();
        let _ = write!(s, "{:>10}", "param");
        for l in &labels {
            let _ = write!(s, " {l:>11}");
        }
        let _ = writeln!(s, " {:>11}  verdict", "min");
        for row in rows {
            let _ = write!(s, "{:>10.6}", row.param);
            for (_, v) in &row.reductions {
                let _ = write!(s, " {v:>11.4e}");
            }
            let _ = writeln!(s, " {:>11.4e}  {}", row.min_pt_eigenvalue, row.conclusion);
        }
        let _ = writeln!(s);
        if self.result.thresholds.is_empty() {
            let _ = writeln!(s, "no threshold in [{}, {}]", self.from, self.to);
        }
        for Threshold {
            lower,
            upper,
            estimate,
            entangled_above,
        } in &self.result.thresholds
        {
            let _ = writeln!(
                s,
                "threshold {estimate:.9} in [{lower:.9}, {upper:.9}], {} above",
                if *entangled_above {
                    "ENTANGLED"
                } else {
                    "INCONCLUSIVE"
                }
            );
        }
        s
    }
}
