//! Periodic 1+1D box: spatial grid, discrete momenta and the on-shell dispersion.
//!
//! Units are natural (ħ = c = 1). Momenta are `k_n = 2πn/L` for
//! `n = -(N/2 - 1) ..= N/2 - 1`; the unpaired edge mode `n = -N/2` is left out so
//! the grid is closed under `k -> -k`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Discretization parameters for the spacetime box.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LatticeSpec {
    /// Number of spatial sites `N` (even, at least 2).
    pub n_space: usize,
    /// Box length `L`.
    pub box_length: f64,
    /// Field mass `m`.
    pub mass: f64,
    /// Time step `Δt` of the sampled time axis.
    pub dt: f64,
    /// Number of time samples `N_t`.
    pub n_time: usize,
}

impl Default for LatticeSpec {
    fn default() -> Self {
        LatticeSpec {
            n_space: 64,
            box_length: 10.0,
            mass: 1.0,
            dt: 0.1,
            n_time: 64,
        }
    }
}

impl LatticeSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n_space < 2 || !self.n_space.is_multiple_of(2) {
            return Err(Error::InvalidParameter {
                field: "n_space",
                reason: format!("must be even and at least 2, got {}", self.n_space),
            });
        }
        positive("box_length", self.box_length)?;
        positive("mass", self.mass)?;
        positive("dt", self.dt)?;
        if self.n_time == 0 {
            return Err(Error::InvalidParameter {
                field: "n_time",
                reason: "must be at least 1".into(),
            });
        }
        Ok(())
    }

    /// Same box and mass with a different spatial and temporal resolution.
    pub fn resized(&self, n_space: usize, n_time: usize) -> LatticeSpec {
        LatticeSpec {
            n_space,
            n_time,
            ..*self
        }
    }
}

fn positive(field: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            field,
            reason: format!("must be a positive finite number, got {value}"),
        })
    }
}

/// On-shell frequency `√(m² + k²)`.
pub fn omega(k: f64, mass: f64) -> Result<f64> {
    positive("mass", mass)?;
    Ok(mass.hypot(k))
}

/// Immutable lattice: spec plus momentum grid and frequencies.
#[derive(Debug, Clone, PartialEq)]
pub struct Lattice {
    spec: LatticeSpec,
    indices: Vec<i64>,
    momenta: Vec<f64>,
    frequencies: Vec<f64>,
}

impl Lattice {
    pub fn new(spec: LatticeSpec) -> Result<Lattice> {
        spec.validate()?;
        let half = (spec.n_space / 2) as i64;
        Ok(Self::from_indices(spec, (-(half - 1)..half).collect()))
    }

    /// Lattice that keeps the unpaired edge mode `n = -N/2`. The resulting grid
    /// is not closed under negation; it exists for negative controls.
    pub fn with_edge_mode(spec: LatticeSpec) -> Result<Lattice> {
        spec.validate()?;
        let half = (spec.n_space / 2) as i64;
        Ok(Self::from_indices(spec, (-half..half).collect()))
    }

    fn from_indices(spec: LatticeSpec, indices: Vec<i64>) -> Lattice {
        let momenta: Vec<f64> = indices
            .iter()
            .map(|&n| 2.0 * PI * n as f64 / spec.box_length)
            .collect();
        let frequencies = momenta.iter().map(|k| spec.mass.hypot(*k)).collect();
        Lattice {
            spec,
            indices,
            momenta,
            frequencies,
        }
    }

    pub fn spec(&self) -> &LatticeSpec {
        &self.spec
    }

    pub fn box_length(&self) -> f64 {
        self.spec.box_length
    }

    pub fn mass(&self) -> f64 {
        self.spec.mass
    }

    /// Integer labels `n` of the momentum grid, ascending.
    pub fn indices(&self) -> &[i64] {
        &self.indices
    }

    pub fn momenta(&self) -> &[f64] {
        &self.momenta
    }

    pub fn frequencies(&self) -> &[f64] {
        &self.frequencies
    }

    pub fn n_modes(&self) -> usize {
        self.indices.len()
    }

    /// Position of mode label `n` in the grid.
    pub fn position(&self, n: i64) -> Option<usize> {
        self.indices.iter().position(|&i| i == n)
    }

    pub fn is_negation_closed(&self) -> bool {
        self.indices.iter().all(|&n| self.position(-n).is_some())
    }

    pub fn require_negation_closed(&self) -> Result<()> {
        if self.is_negation_closed() {
            Ok(())
        } else {
            let unpaired: Vec<i64> = self
                .indices
                .iter()
                .copied()
                .filter(|&n| self.position(-n).is_none())
                .collect();
            Err(Error::NotNegationClosed(format!(
                "modes {unpaired:?} have no partner"
            )))
        }
    }

    /// Spatial spacing `L / N`.
    pub fn dx(&self) -> f64 {
        self.spec.box_length / self.spec.n_space as f64
    }

    pub fn dt(&self) -> f64 {
        self.spec.dt
    }

    /// Sample times `i·Δt`, `i = 0..N_t`.
    pub fn times(&self) -> Vec<f64> {
        (0..self.spec.n_time).map(|i| i as f64 * self.spec.dt).collect()
    }

    /// Site positions `j·Δx`, `j = 0..N`.
    pub fn positions(&self) -> Vec<f64> {
        let dx = self.dx();
        (0..self.spec.n_space).map(|j| j as f64 * dx).collect()
    }

    /// Reduce a coordinate into `[0, L)`.
    pub fn wrap(&self, x: f64) -> f64 {
        let l = self.spec.box_length;
        let r = x.rem_euclid(l);
        // rem_euclid can round up to exactly L for tiny negative inputs
        if r >= l {
            0.0
        } else {
            r
        }
    }
}
