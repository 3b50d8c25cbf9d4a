//! Plain-text report for one scenario: Choi matrix, spectrum, negativity.

use negchan::channel::{Channel, ChoiMatrix};
use negchan::energy::{
    analytic_choi_copy, analytic_choi_extended, analytic_choi_rotated, LabeledSpectrum,
    Labeling,
};
use negchan::matrix::CMatrix;

use crate::error::Result;
use crate::scenario::{AnalyticForm, ResolvedDynamics, ScenarioConfig};

fn push_matrix_part(out: &mut String, label: &str, matrix: &CMatrix, imaginary: bool) {
    out.push_str(label);
    out.push('\n');
    for i in 0..matrix.dim() {
        let row: Vec<String> = (0..matrix.dim())
            .map(|j| {
                let entry = matrix.get(i, j);
                let value = if imaginary { entry.im } else { entry.re };
                format!("{:>12.8}", value)
            })
            .collect();
        out.push_str("  ");
        out.push_str(&row.join("  "));
        out.push('\n');
    }
}

fn analytic_choi(
    form: AnalyticForm,
    spectrum: &LabeledSpectrum,
    t: f64,
) -> Result<(ChoiMatrix, f64)> {
    let (choi, f_nu) = match form {
        AnalyticForm::Copy => (analytic_choi_copy(spectrum, t)?, spectrum.f_nu()?),
        AnalyticForm::Rotated => (analytic_choi_rotated(spectrum, t)?.0, spectrum.f_nu()?),
        AnalyticForm::Extended => {
            (analytic_choi_extended(spectrum, t)?, spectrum.f_nu_extended())
        }
    };
    Ok((choi, f_nu))
}

/// Render the full report for a scenario as one deterministic string.
pub fn run_report(config: &ScenarioConfig) -> Result<String> {
    let scenario = config.resolve()?;
    let channel = Channel::new(scenario.unitary()?, scenario.map.clone())?;
    let choi = channel.choi()?;

    let mut out = String::new();
    out.push_str(&format!("scenario: {}\n", scenario.description));
    out.push('\n');
    push_matrix_part(&mut out, "choi matrix, real part:", choi.matrix(), false);
    push_matrix_part(&mut out, "choi matrix, imaginary part:", choi.matrix(), true);
    out.push('\n');

    let eigenvalues: Vec<String> =
        choi.eigenvalues().iter().map(|v| format!("{v:.10}")).collect();
    out.push_str(&format!("eigenvalues (ascending): {}\n", eigenvalues.join(", ")));
    out.push_str(&format!("trace norm: {:.10}\n", choi.trace_norm()));
    out.push_str(&format!("negativity: {:.10}\n", choi.negativity()));
    let (cp, min_eig) = (choi.is_cp(scenario.tolerance), choi.min_eigenvalue());
    out.push_str(&format!(
        "completely positive: {} (smallest eigenvalue {:.3e}, tolerance {:.0e})\n",
        if cp { "yes" } else { "no" },
        min_eig,
        scenario.tolerance
    ));

    if let ResolvedDynamics::Hamiltonian { spec, t, .. } = &scenario.dynamics {
        if spec.is_diagonal(1e-12) {
            if let Some(form) = scenario.analytic {
                let spectrum = spec.spectrum(&Labeling::DiagonalOrder)?;
                let (reference, f_nu) = analytic_choi(form, &spectrum, *t)?;
                let residual = choi.matrix().max_abs_diff(reference.matrix());
                out.push('\n');
                out.push_str(&format!("characteristic frequency: {f_nu:.10}\n"));
                out.push_str(&format!(
                    "closed-form residual (max entry difference): {residual:.3e}\n"
                ));
            }
        }
    }

    Ok(out)
}
