//! Report records and the CSV/JSON file formats.

use std::io::{Read, Write};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::absorber::{CurrentDistribution, EmissionSpectrum};
use crate::dirac::{probability_current, DiracSpinorSolution};
use crate::error::{Error, Result};
use crate::lattice::{Lattice, LatticeSpec};
use crate::propagators::{KernelKind, SpacetimePoint};

/// Bumped whenever a report field changes.
pub fn report_schema_version() -> &'static str {
    "1"
}

/// One verified identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    /// The relation the check exercises, in words.
    pub paper_ref: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Size of the deliberately broken variant; must stay far from zero.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub negative_control: Option<f64>,
}

impl CheckRecord {
    pub fn console_line(&self) -> String {
        let mut line = format!(
            "{}  {:<40} max_residual={:.3e}  tolerance={:.1e}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.max_residual,
            self.tolerance
        );
        if let Some(c) = self.negative_control {
            line.push_str(&format!("  negative_control={c:.3e}"));
        }
        line
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport<C> {
    pub schema_version: String,
    pub config: C,
    pub checks: Vec<CheckRecord>,
}

impl<C> VerifyReport<C> {
    pub fn new(config: C, checks: Vec<CheckRecord>) -> Self {
        VerifyReport {
            schema_version: report_schema_version().to_string(),
            config,
            checks,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub schema_version: String,
    pub check: String,
    pub n_points: usize,
    pub max_residual: f64,
    pub lattice: LatticeSpec,
}

impl ResidualReport {
    pub fn new(check: &str, n_points: usize, max_residual: f64, lattice: &Lattice) -> Self {
        ResidualReport {
            schema_version: report_schema_version().to_string(),
            check: check.to_string(),
            n_points,
            max_residual,
            lattice: *lattice.spec(),
        }
    }
}

/// One kernel sample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KernelSample {
    pub kind: String,
    pub t: f64,
    pub x: f64,
    pub re: f64,
    pub im: f64,
}

impl KernelSample {
    pub fn new(kind: KernelKind, p: SpacetimePoint, value: Complex64) -> Self {
        KernelSample {
            kind: kind.name().to_string(),
            t: p.t,
            x: p.x,
            re: value.re,
            im: value.im,
        }
    }
}

/// CSV with header `kind,t,x,re,im`.
pub fn write_kernel_csv<W: Write>(out: W, samples: &[KernelSample]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if samples.is_empty() {
        w.write_record(["kind", "t", "x", "re", "im"])?;
    }
    for s in samples {
        w.serialize(s)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_kernel_json<W: Write>(out: W, samples: &[KernelSample]) -> Result<()> {
    serde_json::to_writer_pretty(out, samples)?;
    Ok(())
}

/// Time-ordered VEV against `i·D_F`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VevComparison {
    pub x: [f64; 2],
    pub y: [f64; 2],
    pub vev: [f64; 2],
    pub i_feynman: [f64; 2],
    pub abs_diff: f64,
}

impl VevComparison {
    pub fn new(x: SpacetimePoint, y: SpacetimePoint, vev: Complex64, i_feynman: Complex64) -> Self {
        VevComparison {
            x: [x.t, x.x],
            y: [y.t, y.x],
            vev: [vev.re, vev.im],
            i_feynman: [i_feynman.re, i_feynman.im],
            abs_diff: (vev - i_feynman).norm(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiracRecord {
    pub index: u8,
    pub p: [f64; 3],
    pub m: f64,
    #[serde(rename = "E")]
    pub energy: f64,
    pub spinor: [[f64; 2]; 4],
    pub current: [f64; 4],
}

impl From<&DiracSpinorSolution> for DiracRecord {
    fn from(sol: &DiracSpinorSolution) -> Self {
        DiracRecord {
            index: sol.index,
            p: sol.momentum,
            m: sol.mass,
            energy: sol.energy,
            spinor: std::array::from_fn(|i| [sol.spinor[i].re, sol.spinor[i].im]),
            current: probability_current(sol).j,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct SpectrumRow {
    k: f64,
    omega: f64,
    energy: f64,
}

/// CSV with header `k,omega,energy`.
pub fn write_spectrum_csv<W: Write>(out: W, spectrum: &EmissionSpectrum) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for ((k, omega), energy) in spectrum.momenta.iter().zip(&spectrum.frequencies).zip(&spectrum.energies) {
        w.serialize(SpectrumRow {
            k: *k,
            omega: *omega,
            energy: *energy,
        })?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumSummary {
    pub schema_version: String,
    pub total: f64,
    pub n_modes: usize,
    pub light_tight: bool,
    pub tolerance: f64,
}

impl SpectrumSummary {
    pub fn new(spectrum: &EmissionSpectrum, tolerance: f64) -> Self {
        SpectrumSummary {
            schema_version: report_schema_version().to_string(),
            total: spectrum.total,
            n_modes: spectrum.energies.len(),
            light_tight: spectrum.total <= tolerance,
            tolerance,
        }
    }
}

#[derive(Debug, Deserialize)]
struct CurrentRow {
    t_index: usize,
    x_index: usize,
    value: f64,
}

/// Reads a current from CSV rows `t_index,x_index,value`; unlisted samples are zero.
pub fn read_current_csv<R: Read>(input: R, lattice: &Lattice) -> Result<CurrentDistribution> {
    let mut j = CurrentDistribution::zeros(lattice);
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(input);
    for row in reader.deserialize() {
        let row: CurrentRow = row?;
        if !row.value.is_finite() {
            return Err(Error::InvalidParameter {
                field: "value",
                reason: format!("non-finite sample at ({}, {})", row.t_index, row.x_index),
            });
        }
        j.set(row.t_index, row.x_index, row.value)?;
    }
    Ok(j)
}

pub fn write_current_csv<W: Write>(out: W, current: &CurrentDistribution) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t_index", "x_index", "value"])?;
    let nx = current.spec().n_space;
    for (idx, v) in current.samples().iter().enumerate() {
        if *v != 0.0 {
            w.write_record([(idx / nx).to_string(), (idx % nx).to_string(), format!("{v:?}")])?;
        }
    }
    w.flush()?;
    Ok(())
}
