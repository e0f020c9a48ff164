//! WebAssembly bindings for the browser demo. Every entry point returns a
//! JSON string; failures come back as `{"error": "..."}`.

use qsep_core::linalg::{c, validate_density, ComplexMatrix, DEFAULT_VALIDATION_TOL};
use qsep_core::reductions::{reduce_split, ReductionLabel};
use qsep_core::separability::{pt_spectrum, witness, WitnessReport, DEFAULT_PPT_TOL};
use qsep_core::states::{ghz_n, molecule_state, upb_state, werner_embedded, MoleculeParams};
use qsep_core::sweep::{sweep, SweepFamily};
use serde::{Deserialize, Serialize};
use serde_json::json;
use wasm_bindgen::prelude::*;

#[derive(Serialize, Deserialize)]
struct MatrixText {
    n_qubits: usize,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

fn table(rep: &WitnessReport) -> serde_json::Value {
    json!({
        "rows": rep.verdicts.iter().map(|v| json!({
            "label": v.label.to_string(),
            "min_pt": v.min_pt_eigenvalue,
            "separable": v.separable,
        })).collect::<Vec<_>>(),
        "conclusion": rep.conclusion,
        "culprit": rep.culprit.as_ref().map(|l| l.to_string()),
        "min_pt": rep.min_pt_eigenvalue(),
    })
}

fn respond(r: Result<serde_json::Value, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn werner_inner(x: f64) -> Result<serde_json::Value, String> {
    let rho = werner_embedded(x).map_err(|e| e.to_string())?;
    let label = ReductionLabel::parse("A,BC", 3).map_err(|e| e.to_string())?;
    let red = reduce_split(&rho, &label).map_err(|e| e.to_string())?;
    let spectrum = pt_spectrum(red.matrix(), DEFAULT_VALIDATION_TOL).map_err(|e| e.to_string())?;
    let rep = witness(&rho, DEFAULT_PPT_TOL).map_err(|e| e.to_string())?;
    Ok(json!({
        "x": x,
        "spectrum": spectrum.values(),
        "witness": table(&rep),
    }))
}

/// Werner state on A,BC at `x`: PT spectrum of the A,BC reduction and the
/// full witness table.
#[wasm_bindgen]
pub fn werner(x: f64) -> String {
    respond(werner_inner(x))
}

/// Minimum PT eigenvalue of the Werner family over `[0, 1]` at `steps`
/// points, plus the bisected threshold.
#[wasm_bindgen]
pub fn werner_curve(steps: usize) -> String {
    respond(
        sweep(SweepFamily::Werner, 0.0, 1.0, steps.clamp(2, 1001), DEFAULT_PPT_TOL)
            .map(|scan| {
                json!({
                    "curve": scan.rows.iter().map(|r| [r.param, r.min_pt_eigenvalue]).collect::<Vec<_>>(),
                    "threshold": scan.thresholds.first().map(|t| t.estimate),
                })
            })
            .map_err(|e| e.to_string()),
    )
}

/// Witness table for the molecule mixture. Weights are rescaled to sum to one.
#[wasm_bindgen]
pub fn molecule(p_ab: f64, p_ac: f64, p_bc: f64) -> String {
    respond((|| {
        let total = p_ab + p_ac + p_bc;
        if total.is_nan() || total <= 0.0 {
            return Err("weights must have a positive sum".to_owned());
        }
        let p = MoleculeParams::new(p_ab / total, p_ac / total, p_bc / total)
            .map_err(|e| e.to_string())?;
        let rep = witness(
            &molecule_state(p).map_err(|e| e.to_string())?,
            DEFAULT_PPT_TOL,
        )
        .map_err(|e| e.to_string())?;
        Ok(json!({
            "weights": [p.p_ab(), p.p_ac(), p.p_bc()],
            "witness": table(&rep),
        }))
    })())
}

/// Runs the witness on a pasted matrix document
/// `{"n_qubits": 3|4, "re": [[..]], "im": [[..]]}`.
#[wasm_bindgen]
pub fn analyze(text: &str) -> String {
    respond((|| {
        let doc: MatrixText = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if !(3..=4).contains(&doc.n_qubits) {
            return Err(format!("need 3 or 4 qubits, got {}", doc.n_qubits));
        }
        let dim = 1usize << doc.n_qubits;
        let ok = |rows: &Vec<Vec<f64>>| rows.len() == dim && rows.iter().all(|r| r.len() == dim);
        if !ok(&doc.re) || !ok(&doc.im) {
            return Err(format!("re and im must both be {dim}x{dim}"));
        }
        let entries = (0..dim * dim)
            .map(|k| c(doc.re[k / dim][k % dim], doc.im[k / dim][k % dim]))
            .collect();
        let m = ComplexMatrix::from_entries(dim, entries).map_err(|e| e.to_string())?;
        let rho =
            validate_density(m, doc.n_qubits, DEFAULT_VALIDATION_TOL).map_err(|e| e.to_string())?;
        Ok(table(
            &witness(&rho, DEFAULT_PPT_TOL).map_err(|e| e.to_string())?,
        ))
    })())
}

/// Matrix document for a named state: ghz, ghz4, upb, werner.
#[wasm_bindgen]
pub fn preset(name: &str) -> String {
    respond((|| {
        let rho = match name {
            "ghz" => ghz_n(3),
            "ghz4" => ghz_n(4),
            "upb" => Ok(upb_state()),
            "werner" => werner_embedded(0.5),
            other => return Err(format!("unknown preset {other:?}")),
        }
        .map_err(|e| e.to_string())?;
        let m = rho.matrix();
        let dim = m.dim();
        let part = |f: fn(&qsep_core::C64) -> f64| -> Vec<Vec<f64>> {
            (0..dim)
                .map(|i| (0..dim).map(|j| f(&m[(i, j)])).collect())
                .collect()
        };
        serde_json::to_value(MatrixText {
            n_qubits: rho.n_qubits(),
            re: part(|z| z.re),
            im: part(|z| z.im),
        })
        .map_err(|e| e.to_string())
    })())
}
