//! One-parameter scans of the witness with bisection of the verdict change.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::DensityMatrix;
use crate::separability::{witness, Conclusion};
use crate::states::{molecule_state, werner_embedded, MoleculeParams};

/// Bracket width at which bisection stops.
pub const THRESHOLD_WIDTH: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepFamily {
    /// `werner_embedded(x)`, `x` in `[0, 1]`.
    Werner,
    /// Molecule state along `p_AB = t`, `p_AC = 0`, `p_BC = 1 - t`.
    MoleculePath,
}

impl SweepFamily {
    pub fn parse(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "werner" => Ok(Self::Werner),
            "molecule" | "molecule-path" => Ok(Self::MoleculePath),
            other => Err(Error::BadParams(format!(
                "unknown sweep family {other:?}; expected werner or molecule"
            ))),
        }
    }

    pub fn state(self, t: f64) -> Result<DensityMatrix> {
        match self {
            Self::Werner => werner_embedded(t),
            Self::MoleculePath => molecule_state(MoleculeParams::new(t, 0.0, 1.0 - t)?),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub param: f64,
    /// `(label, min PT eigenvalue)` in report order.
    pub reductions: Vec<(String, f64)>,
    pub min_pt_eigenvalue: f64,
    pub conclusion: Conclusion,
}

/// Parameter where the verdict flips, bracketed to [`THRESHOLD_WIDTH`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Threshold {
    pub lower: f64,
    pub upper: f64,
    pub estimate: f64,
    /// Verdict just above the threshold.
    pub entangled_above: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub family: SweepFamily,
    pub rows: Vec<SweepRow>,
    pub thresholds: Vec<Threshold>,
}

fn evaluate(family: SweepFamily, t: f64, tol: f64) -> Result<SweepRow> {
    let rep = witness(&family.state(t)?, tol)?;
    Ok(SweepRow {
        param: t,
        min_pt_eigenvalue: rep.min_pt_eigenvalue(),
        reductions: rep
            .verdicts
            .iter()
            .map(|v| (v.label.to_string(), v.min_pt_eigenvalue))
            .collect(),
        conclusion: rep.conclusion,
    })
}

fn entangled_at(family: SweepFamily, t: f64, tol: f64) -> Result<bool> {
    Ok(witness(&family.state(t)?, tol)?.is_entangled())
}

/// Evaluates the witness at `steps` evenly spaced points of `[from, to]` and
/// refines every verdict change by bisection.
pub fn sweep(
    family: SweepFamily,
    from: f64,
    to: f64,
    steps: usize,
    tol: f64,
) -> Result<SweepResult> {
    if !(from.is_finite() && to.is_finite()) || from >= to {
        return Err(Error::BadRange(format!(
            "need finite from < to, got [{from}, {to}]"
        )));
    }
    if !(0.0..=1.0).contains(&from) || !(0.0..=1.0).contains(&to) {
        return Err(Error::BadRange(format!(
            "[{from}, {to}] leaves the family domain [0, 1]"
        )));
    }
    if steps < 2 {
        return Err(Error::BadRange(format!(
            "need at least 2 steps, got {steps}"
        )));
    }
    let rows = (0..steps)
        .map(|k| {
            let t = if k + 1 == steps {
                to
            } else {
                from + (to - from) * k as f64 / (steps - 1) as f64
            };
            evaluate(family, t, tol)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut thresholds = Vec::new();
    for pair in rows.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        if a.conclusion == b.conclusion {
            continue;
        }
        let low_state = a.conclusion == Conclusion::Entangled;
        let (mut lo, mut hi) = (a.param, b.param);
        while hi - lo > THRESHOLD_WIDTH {
            let mid = 0.5 * (lo + hi);
            if entangled_at(family, mid, tol)? == low_state {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        thresholds.push(Threshold {
            lower: lo,
            upper: hi,
            estimate: 0.5 * (lo + hi),
            entangled_above: !low_state,
        });
    }
    Ok(SweepResult {
        family,
        rows,
        thresholds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn werner_threshold_at_one_third() {
        let res = sweep(SweepFamily::Werner, 0.0, 1.0, 101, 1e-9).unwrap();
        assert_eq!(res.rows.len(), 101);
        assert_eq!(res.thresholds.len(), 1);
        let t = res.thresholds[0];
        assert!(t.upper - t.lower <= THRESHOLD_WIDTH);
        assert!((t.estimate - 1.0 / 3.0).abs() < 1e-6);
        assert!(t.entangled_above);
    }

    #[test]
    fn werner_low_range_has_no_threshold() {
        let res = sweep(SweepFamily::Werner, 0.0, 0.3, 31, 1e-9).unwrap();
        assert!(res.thresholds.is_empty());
        assert!(res
            .rows
            .iter()
            .all(|r| r.conclusion == Conclusion::Inconclusive));
    }

    #[test]
    fn molecule_path_entangled_everywhere() {
        let res = sweep(SweepFamily::MoleculePath, 0.01, 0.99, 50, 1e-9).unwrap();
        assert!(res.thresholds.is_empty());
        assert!(res
            .rows
            .iter()
            .all(|r| r.conclusion == Conclusion::Entangled));
    }

    #[test]
    fn bad_ranges() {
        for (a, b, n) in [
            (0.5, 0.5, 10),
            (0.8, 0.2, 10),
            (0.0, 1.0, 1),
            (-0.1, 0.5, 10),
            (0.0, f64::NAN, 5),
        ] {
            assert!(matches!(
                sweep(SweepFamily::Werner, a, b, n, 1e-9),
                Err(Error::BadRange(_))
            ));
        }
        assert!(SweepFamily::parse("ghz").is_err());
    }
}
