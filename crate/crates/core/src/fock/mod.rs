//! Truncated Fock space over a discrete set of box modes, with particle (`a`)
//! and antiparticle (`b`) ladders.
//!
//! The field follows the box-normalized mode expansion
//! `Ψ(t, x) = Σₖ (2ωₖL)^{-1/2} [a(k) e^{i(kx−ωt)} + b†(k) e^{−i(kx−ωt)}]`.
//! States are sparse maps from occupation tuples to amplitudes; operators are
//! sums of products of ladder factors, each carrying its `e^{±iωt}` phase rate.

mod checks;
mod field;
mod matrix;
mod operator;
mod state;

pub use checks::{
    antiparticle_energy, canonical_commutator_residual, convergence_order,
    heisenberg_b_derivative_check, momentum_sign_check, reinterpretation_check,
    translation_generator_check, EnergyCheck, MomentumSignCheck, OscillatorQuadratures,
    TimeDependence,
};
pub use field::{
    advanced_coefficient, confirmation_inner, field, field_adjoint, hamiltonian, momentum_operator,
    offer_state, time_ordered_vev, VevResult,
};
pub use matrix::{FockBasis, SparseMatrix};
pub use operator::{Factor, Ladder, ModeOperator, Sector, Term};
pub use state::{Applied, FockState};

use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// Discrete set of lattice modes plus the per-mode occupation cap.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeSpec {
    box_length: f64,
    labels: Vec<i64>,
    momenta: Vec<f64>,
    frequencies: Vec<f64>,
    max_occupation: u8,
}

impl ModeSpec {
    /// Every mode of the lattice grid.
    pub fn full(lattice: &Lattice, max_occupation: u8) -> Result<ModeSpec> {
        Self::subset(lattice, lattice.indices(), max_occupation)
    }

    /// The lattice modes with the given integer labels `n` (`k = 2πn/L`).
    pub fn subset(lattice: &Lattice, labels: &[i64], max_occupation: u8) -> Result<ModeSpec> {
        if labels.is_empty() {
            return Err(Error::InvalidParameter {
                field: "modes",
                reason: "need at least one mode".into(),
            });
        }
        if max_occupation == 0 {
            return Err(Error::InvalidParameter {
                field: "max_occupation",
                reason: "must be at least 1".into(),
            });
        }
        let mut momenta = Vec::with_capacity(labels.len());
        let mut frequencies = Vec::with_capacity(labels.len());
        for (i, &n) in labels.iter().enumerate() {
            if labels[..i].contains(&n) {
                return Err(Error::InvalidParameter {
                    field: "modes",
                    reason: format!("mode {n} listed twice"),
                });
            }
            let pos = lattice.position(n).ok_or(Error::UnknownMode(n))?;
            momenta.push(lattice.momenta()[pos]);
            frequencies.push(lattice.frequencies()[pos]);
        }
        Ok(ModeSpec {
            box_length: lattice.box_length(),
            labels: labels.to_vec(),
            momenta,
            frequencies,
            max_occupation,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn momenta(&self) -> &[f64] {
        &self.momenta
    }

    pub fn frequencies(&self) -> &[f64] {
        &self.frequencies
    }

    pub fn max_occupation(&self) -> u8 {
        self.max_occupation
    }

    pub fn box_length(&self) -> f64 {
        self.box_length
    }

    /// Position of mode label `n` within this set.
    pub fn position(&self, n: i64) -> Result<usize> {
        self.labels
            .iter()
            .position(|&l| l == n)
            .ok_or(Error::UnknownMode(n))
    }

    /// Box normalization `(2ωL)^{-1/2}` of mode `pos`.
    pub fn normalization(&self, pos: usize) -> f64 {
        (2.0 * self.frequencies[pos] * self.box_length).sqrt().recip()
    }

    pub fn is_negation_closed(&self) -> bool {
        self.labels.iter().all(|&n| self.labels.contains(&-n))
    }
}
