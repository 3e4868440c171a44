//! Dirac gamma algebra, rest-frame and plane-wave spinors, and probability currents.
//!
//! Standard (Dirac) representation with metric `(+, −, −, −)`:
//! `γ⁰ = diag(1, 1, −1, −1)`, `γⁱ = [[0, σⁱ], [−σⁱ, 0]]`. Solutions are
//! `ψ = u e^{−i(Et − p·x)}` with signed energy `E`, so the Dirac equation reads
//! `(γ^μ p_μ − m) u = 0` with `p⁰ = E`. Spinors are normalized to unit
//! probability density `u†u = 1`.

use nalgebra::{Matrix4, Vector4};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

pub type Spinor = Vector4<Complex64>;
pub type GammaMatrix = Matrix4<Complex64>;

const METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiracMatrixSet {
    pub gamma: [GammaMatrix; 4],
}

pub fn gamma_matrices() -> DiracMatrixSet {
    let (o, l, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    #[rustfmt::skip]
    let g0 = Matrix4::new(
        l, o, o, o,
        o, l, o, o,
        o, o, -l, o,
        o, o, o, -l,
    );
    #[rustfmt::skip]
    let g1 = Matrix4::new(
        o, o, o, l,
        o, o, l, o,
        o, -l, o, o,
        -l, o, o, o,
    );
    #[rustfmt::skip]
    let g2 = Matrix4::new(
        o, o, o, -i,
        o, o, i, o,
        o, i, o, o,
        -i, o, o, o,
    );
    #[rustfmt::skip]
    let g3 = Matrix4::new(
        o, o, l, o,
        o, o, o, -l,
        -l, o, o, o,
        o, l, o, o,
    );
    DiracMatrixSet {
        gamma: [g0, g1, g2, g3],
    }
}

impl DiracMatrixSet {
    /// Largest entry of `{γ^μ, γ^ν} − 2g^{μν}·1` over all `μ, ν`.
    pub fn clifford_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for mu in 0..4 {
            for nu in 0..4 {
                let anti = self.gamma[mu] * self.gamma[nu] + self.gamma[nu] * self.gamma[mu];
                let g = if mu == nu { 2.0 * METRIC[mu] } else { 0.0 };
                let diff = anti - GammaMatrix::identity() * c(g, 0.0);
                worst = worst.max(diff.iter().map(|z| z.norm()).fold(0.0, f64::max));
            }
        }
        worst
    }

    /// `γ^μ p_μ` for contravariant `p = (E, p¹, p², p³)`.
    pub fn slash(&self, p: [f64; 4]) -> GammaMatrix {
        (0..4).fold(GammaMatrix::zeros(), |acc, mu| {
            acc + self.gamma[mu] * c(METRIC[mu] * p[mu], 0.0)
        })
    }
}

/// A four-component solution `u` with its momentum label and signed energy.
#[derive(Debug, Clone, PartialEq)]
pub struct DiracSpinorSolution {
    /// 1, 2 for positive energy; 3, 4 for negative energy.
    pub index: u8,
    pub spinor: Spinor,
    pub momentum: [f64; 3],
    pub mass: f64,
    pub energy: f64,
}

impl DiracSpinorSolution {
    fn four_momentum(&self) -> [f64; 4] {
        [self.energy, self.momentum[0], self.momentum[1], self.momentum[2]]
    }

    /// Largest component of `(γ^μ p_μ − m) u`.
    pub fn dirac_residual(&self, gammas: &DiracMatrixSet) -> f64 {
        let op = gammas.slash(self.four_momentum()) - GammaMatrix::identity() * c(self.mass, 0.0);
        (op * self.spinor).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

fn validate_mass(m: f64) -> Result<()> {
    if m.is_finite() && m > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            field: "mass",
            reason: format!("must be positive, got {m}"),
        })
    }
}

/// The four solutions at `p = 0`: basis spinors, `E = +m` for 1, 2 and `E = −m` for 3, 4.
pub fn rest_frame_solutions(m: f64) -> Result<[DiracSpinorSolution; 4]> {
    validate_mass(m)?;
    Ok(std::array::from_fn(|i| {
        let mut spinor = Spinor::zeros();
        spinor[i] = c(1.0, 0.0);
        DiracSpinorSolution {
            index: i as u8 + 1,
            spinor,
            momentum: [0.0; 3],
            mass: m,
            energy: if i < 2 { m } else { -m },
        }
    }))
}

/// Plane-wave solution with momentum label `p` and energy `±√(m² + |p|²)`.
///
/// The spinor is `(γ^μ p_μ + m) e_s`, normalized, with `e_s` the rest-frame
/// basis vector of the same energy sign and spin label; this lands on the null
/// space of `γ^μ p_μ − m` and reduces to the rest-frame solution at `p = 0`.
pub fn plane_wave_solution(p: [f64; 3], m: f64, energy_sign: i8, spin: u8) -> Result<DiracSpinorSolution> {
    validate_mass(m)?;
    if !(energy_sign == 1 || energy_sign == -1) {
        return Err(Error::InvalidParameter {
            field: "energy_sign",
            reason: format!("must be +1 or -1, got {energy_sign}"),
        });
    }
    if !(spin == 1 || spin == 2) {
        return Err(Error::InvalidParameter {
            field: "spin",
            reason: format!("must be 1 or 2, got {spin}"),
        });
    }
    let gammas = gamma_matrices();
    let p2 = p.iter().map(|x| x * x).sum::<f64>();
    let energy = f64::from(energy_sign) * (m * m + p2).sqrt();
    let four = [energy, p[0], p[1], p[2]];
    let slash = gammas.slash(four);
    let id = GammaMatrix::identity();

    let nullity = null_space_dimension(&(slash - id * c(m, 0.0)), m.max(energy.abs()));
    if nullity != 2 {
        return Err(Error::Degeneracy {
            found: nullity,
            expected: 2,
        });
    }

    let index = if energy_sign > 0 { spin } else { spin + 2 };
    let mut seed = Spinor::zeros();
    seed[usize::from(index - 1)] = c(1.0, 0.0);
    let raw = (slash + id * c(m, 0.0)) * seed;
    let norm = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    Ok(DiracSpinorSolution {
        index,
        spinor: raw / c(norm, 0.0),
        momentum: p,
        mass: m,
        energy,
    })
}

fn null_space_dimension(op: &GammaMatrix, scale: f64) -> usize {
    let svd = op.svd(false, false);
    svd.singular_values
        .iter()
        .filter(|s| **s <= 1e-10 * scale)
        .count()
}

/// Probability 4-current `j^μ = u†γ⁰γ^μ u`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbabilityCurrent {
    pub j: [f64; 4],
    /// Largest discarded imaginary part.
    pub max_imag: f64,
}

pub fn probability_current(sol: &DiracSpinorSolution) -> ProbabilityCurrent {
    let gammas = gamma_matrices();
    let bar = sol.spinor.adjoint() * gammas.gamma[0];
    let mut j = [0.0; 4];
    let mut max_imag: f64 = 0.0;
    for mu in 0..4 {
        let v = (bar * gammas.gamma[mu] * sol.spinor)[(0, 0)];
        j[mu] = v.re;
        max_imag = max_imag.max(v.im.abs());
    }
    ProbabilityCurrent { j, max_imag }
}

/// Largest entry of `U†U − 1` for the matrix whose columns are the four spinors.
pub fn orthonormality_residual(solutions: &[DiracSpinorSolution; 4]) -> f64 {
    let u = Matrix4::from_columns(&solutions.clone().map(|s| s.spinor));
    let gram = u.adjoint() * u - GammaMatrix::identity();
    gram.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
