//! Negativity sweeps over a coupling/time grid, with CSV and SVG output.

use std::str::FromStr;

use rayon::prelude::*;

use negchan::channel::Channel;
use negchan::energy::{rotated_negativity, HamiltonianSpec, Labeling};
use negchan::qubit::hadamard;

use crate::error::{CliError, Result};
use crate::scenario::{AssignmentConfig, DynamicsConfig, RotationSpec, ScenarioConfig};

/// Evenly spaced grid axis, parsed from "min:max:count".
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridAxis {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl GridAxis {
    pub fn new(min: f64, max: f64, count: usize) -> Result<Self> {
        if !(min.is_finite() && max.is_finite()) {
            return Err(CliError::Config(format!(
                "axis endpoints must be finite, got {min}:{max}"
            )));
        }
        if count < 2 {
            return Err(CliError::Config(format!(
                "axis needs at least 2 points, got {count}"
            )));
        }
        Ok(GridAxis { min, max, count })
    }

    /// Grid points, endpoints exact.
    pub fn values(&self) -> Vec<f64> {
        let steps = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| self.min + (self.max - self.min) * (i as f64 / steps))
            .collect()
    }
}

impl FromStr for GridAxis {
    type Err = CliError;

    fn from_str(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(':').collect();
        let [min, max, count] = parts.as_slice() else {
            return Err(CliError::Config(format!(
                "axis must look like min:max:count, got `{text}`"
            )));
        };
        let parse = |s: &str| {
            s.parse::<f64>()
                .map_err(|_| CliError::Config(format!("bad axis number `{s}` in `{text}`")))
        };
        let count = count
            .parse::<usize>()
            .map_err(|_| CliError::Config(format!("bad axis count `{count}` in `{text}`")))?;
        GridAxis::new(parse(min)?, parse(max)?, count)
    }
}

/// How each grid cell's negativity is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Pipeline {
    /// Closed-form negativity of the Hadamard-rotated preparation.
    Analytic,
    /// Full simulated-tomography reconstruction at every cell.
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub k: f64,
    pub t: f64,
    pub eta: f64,
}

/// Grid of (k, t, eta) triples in row-major order with k as the outer index.
#[derive(Debug, Clone)]
pub struct SweepResult {
    rows: Vec<SweepRow>,
    k_axis: GridAxis,
    t_axis: GridAxis,
}

enum SweepHamiltonian {
    Ising,
    IsingTransverse { kprime: f64 },
}

impl SweepHamiltonian {
    fn from_config(config: &ScenarioConfig) -> Result<Self> {
        match &config.dynamics {
            DynamicsConfig::Hamiltonian { name, matrix: None, kprime, .. } => {
                match name.as_deref() {
                    Some("ising") => Ok(SweepHamiltonian::Ising),
                    Some("ising_transverse") => {
                        Ok(SweepHamiltonian::IsingTransverse { kprime: *kprime })
                    }
                    _ => Err(CliError::Config(
                        "sweep needs hamiltonian dynamics named ising or ising_transverse"
                            .to_string(),
                    )),
                }
            }
            DynamicsConfig::Hamiltonian { .. } => Err(CliError::Config(
                "sweep needs a named hamiltonian; a fixed matrix has no coupling to vary"
                    .to_string(),
            )),
            DynamicsConfig::Gate { .. } => Err(CliError::Config(
                "sweep needs hamiltonian dynamics; a gate has no k or t parameters"
                    .to_string(),
            )),
        }
    }

    fn spec(&self, k: f64) -> HamiltonianSpec {
        match self {
            SweepHamiltonian::Ising => HamiltonianSpec::ising(k),
            SweepHamiltonian::IsingTransverse { kprime } => {
                HamiltonianSpec::ising_transverse(k, *kprime)
            }
        }
    }

    /// The level-difference frequency under the labeling each model keeps:
    /// diagonal order for the diagonal model, the explicit energy-basis
    /// labeling for the transverse one.
    fn f_nu(&self, k: f64) -> Result<f64> {
        match self {
            SweepHamiltonian::Ising => Ok(HamiltonianSpec::ising(k)
                .spectrum(&Labeling::DiagonalOrder)?
                .f_nu()?),
            SweepHamiltonian::IsingTransverse { kprime } => {
                Ok(negchan::energy::transverse_spectrum(k, *kprime).f_nu()?)
            }
        }
    }
}

fn assignment_is_hadamard_rotated(config: &ScenarioConfig) -> bool {
    match &config.assignment {
        AssignmentConfig::Rotated { rotation } => match rotation {
            RotationSpec::Named(name) => matches!(name.as_str(), "hadamard"),
            RotationSpec::Matrix(spec) => crate::scenario::parse_matrix(spec)
                .map(|r| r.dim() == 2 && r.max_abs_diff(&hadamard()) <= 1e-12)
                .unwrap_or(false),
        },
        _ => false,
    }
}

/// Evaluate negativity over the (k, t) grid. `threads` caps the worker count;
/// `None` leaves the choice to the runtime. Row order is independent of both.
pub fn run_sweep(
    config: &ScenarioConfig,
    k_axis: GridAxis,
    t_axis: GridAxis,
    pipeline: Pipeline,
    threads: Option<usize>,
) -> Result<SweepResult> {
    let model = SweepHamiltonian::from_config(config)?;
    if pipeline == Pipeline::Analytic && !assignment_is_hadamard_rotated(config) {
        return Err(CliError::Config(
            "the analytic pipeline covers only the rotated(hadamard) assignment; \
             use --pipeline numeric for other preparations"
                .to_string(),
        ));
    }
    let map = config.resolve()?.map;
    if map.dim() != 4 {
        return Err(CliError::Config(format!(
            "sweep dynamics act on one system and one bath qubit, but the assignment \
             prepares a composite of dimension {}",
            map.dim()
        )));
    }

    let mut cells = Vec::with_capacity(k_axis.count * t_axis.count);
    for &k in &k_axis.values() {
        for &t in &t_axis.values() {
            cells.push((k, t));
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Config(format!("cannot build thread pool: {e}")))?;
    let rows: Result<Vec<SweepRow>> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(k, t)| {
                let eta = match pipeline {
                    Pipeline::Analytic => rotated_negativity(model.f_nu(k)? * t),
                    Pipeline::Numeric => {
                        let u = model.spec(k).propagator(t)?;
                        Channel::new(u, map.clone())?.choi()?.negativity()
                    }
                };
                Ok(SweepRow { k, t, eta })
            })
            .collect()
    });
    let rows = rows?;
    assert!(
        rows.iter().all(|row| (0.0..0.5).contains(&row.eta)),
        "negativity must stay in [0, 0.5)"
    );
    Ok(SweepResult { rows, k_axis, t_axis })
}

impl SweepResult {
    pub fn rows(&self) -> &[SweepRow] {
        &self.rows
    }

    pub fn max_eta(&self) -> f64 {
        self.rows.iter().map(|row| row.eta).fold(0.0, f64::max)
    }

    /// CSV with header `k,t,eta`, LF line endings, 12 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,t,eta\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{}\n",
                format_g12(row.k),
                format_g12(row.t),
                format_g12(row.eta)
            ));
        }
        out
    }

    /// Grayscale heatmap: one rect per cell, white at eta = 0, black at 0.18.
    pub fn to_svg(&self) -> String {
        let cell = 6usize;
        let margin = 40usize;
        let grid_w = self.t_axis.count * cell;
        let grid_h = self.k_axis.count * cell;
        let width = grid_w + 2 * margin;
        let height = grid_h + 2 * margin;
        let mut out = String::new();
        out.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
             viewBox=\"0 0 {width} {height}\">\n"
        ));
        out.push_str(&format!(
            "  <rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"#ffffff\"/>\n"
        ));
        for (index, row) in self.rows.iter().enumerate() {
            let i = index / self.t_axis.count;
            let j = index % self.t_axis.count;
            let x = margin + j * cell;
            let y = margin + grid_h - (i + 1) * cell;
            let shade = 1.0 - (row.eta / 0.18).clamp(0.0, 1.0);
            let level = (shade * 255.0).round() as u8;
            out.push_str(&format!(
                "  <rect x=\"{x}\" y=\"{y}\" width=\"{cell}\" height=\"{cell}\" \
                 fill=\"#{level:02x}{level:02x}{level:02x}\"/>\n"
            ));
        }
        let labels = [
            (margin + grid_w / 2, margin + grid_h + 24, "middle", "t".to_string()),
            (margin, margin + grid_h + 24, "middle", format_g12(self.t_axis.min)),
            (margin + grid_w, margin + grid_h + 24, "middle", format_g12(self.t_axis.max)),
            (margin / 2, margin + grid_h / 2, "middle", "k".to_string()),
            (margin / 2, margin + grid_h, "middle", format_g12(self.k_axis.min)),
            (margin / 2, margin, "middle", format_g12(self.k_axis.max)),
        ];
        for (x, y, anchor, text) in labels {
            out.push_str(&format!(
                "  <text x=\"{x}\" y=\"{y}\" text-anchor=\"{anchor}\" \
                 font-family=\"monospace\" font-size=\"12\">{text}</text>\n"
            ));
        }
        out.push_str("</svg>\n");
        out
    }
}

/// Parse a sweep CSV produced by `to_csv` back into its rows.
pub fn parse_csv(text: &str) -> Result<Vec<SweepRow>> {
    let mut lines = text.lines();
    match lines.next() {
        Some("k,t,eta") => {}
        other => {
            return Err(CliError::Config(format!(
                "expected header `k,t,eta`, got {other:?}"
            )))
        }
    }
    let mut rows = Vec::new();
    for (number, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        let [k, t, eta] = fields.as_slice() else {
            return Err(CliError::Config(format!(
                "line {}: expected 3 fields, got {}",
                number + 2,
                fields.len()
            )));
        };
        let parse = |s: &str| {
            s.parse::<f64>()
                .map_err(|_| CliError::Config(format!("line {}: bad number `{s}`", number + 2)))
        };
        rows.push(SweepRow { k: parse(k)?, t: parse(t)?, eta: parse(eta)? });
    }
    Ok(rows)
}

/// Format with 12 significant digits, trimming trailing zeros, switching to
/// scientific notation outside the fixed-point range.
pub fn format_g12(value: f64) -> String {
    if value == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{value:.11e}");
    let (mantissa, exponent) = sci.split_once('e').expect("exponential format");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if !(-4..12).contains(&exponent) {
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{exponent}")
    } else {
        let decimals = (11 - exponent).max(0) as usize;
        let fixed = format!("{value:.decimals$}");
        fixed.trim_end_matches('0').trim_end_matches('.').to_string()
    }
}
