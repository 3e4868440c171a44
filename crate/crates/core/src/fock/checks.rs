//! Matrix-level checks of the mode-operator relations on the truncated space.

use num_complex::Complex64;

use super::field::{advanced_coefficient, field, hamiltonian, momentum_operator, offer_state};
use super::matrix::{FockBasis, SparseMatrix};
use super::operator::{ModeOperator, Sector};
use super::ModeSpec;
use crate::error::{Error, Result};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn matrix(op: &ModeOperator, spec: &ModeSpec) -> Result<SparseMatrix> {
    SparseMatrix::from_operator(op, spec)
}

/// Retarded (`e^{−iωt}`) or advanced (`e^{+iωt}`) time dependence of `a(k, t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TimeDependence {
    Retarded,
    Advanced,
}

/// `a(k, t)` with the chosen time dependence.
fn annihilator(spec: &ModeSpec, pos: usize, t: f64, dep: TimeDependence) -> ModeOperator {
    let w = spec.frequencies()[pos];
    let rate = match dep {
        TimeDependence::Retarded => -w,
        TimeDependence::Advanced => w,
    };
    ModeOperator::evolving(Sector::Particle, pos, false, rate, t)
}

/// Oscillator coordinate `q = a(k,t) + a†(k,t)` and its momentum `p = ∂ₜq`.
#[derive(Debug, Clone, PartialEq)]
pub struct OscillatorQuadratures {
    pub q_operator: ModeOperator,
    pub p_operator: ModeOperator,
}

impl OscillatorQuadratures {
    pub fn new(spec: &ModeSpec, n: i64, t: f64, dep: TimeDependence) -> Result<Self> {
        let a = annihilator(spec, spec.position(n)?, t, dep);
        let q_operator = a.clone().plus(a.adjoint());
        let p_operator = q_operator.time_derivative();
        Ok(OscillatorQuadratures {
            q_operator,
            p_operator,
        })
    }
}

/// Residual of `i d/dt b†(k, t) = −ω b†(k, t)` for `b†(k, t) = b†(k) e^{+iωt}`.
pub fn heisenberg_b_derivative_check(spec: &ModeSpec, n: i64, t: f64) -> Result<f64> {
    let pos = spec.position(n)?;
    let w = spec.frequencies()[pos];
    let b_dag = ModeOperator::evolving(Sector::Antiparticle, pos, true, w, t);
    let lhs = matrix(&b_dag.time_derivative().scaled(I), spec)?;
    let rhs = matrix(&b_dag.scaled(real(-w)), spec)?;
    Ok(lhs.sub(&rhs).norm())
}

/// Energy of the antiparticle offer state under the normal-ordered Hamiltonian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyCheck {
    /// Rayleigh quotient `⟨k̄|H|k̄⟩`.
    pub eigenvalue: f64,
    /// `‖H|k̄⟩ − λ|k̄⟩‖`; zero when `|k̄⟩` is an eigenvector.
    pub residual: f64,
    pub frequency: f64,
}

pub fn antiparticle_energy(spec: &ModeSpec, n: i64) -> Result<EnergyCheck> {
    let pos = spec.position(n)?;
    let h = hamiltonian(spec);
    let kbar = offer_state(spec, n)?;
    let hk = h.apply(&kbar, spec)?.state;
    let lambda = kbar.inner(&hk);
    let residual = hk.plus(&kbar.scaled(-lambda)).norm();
    Ok(EnergyCheck {
        eigenvalue: lambda.re,
        residual: residual.max(lambda.im.abs()),
        frequency: spec.frequencies()[pos],
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct MomentumSignCheck {
    /// `∂ₜ q` with retarded phases.
    pub p_ret: SparseMatrix,
    /// `∂ₜ q` with advanced phases.
    pub p_adv: SparseMatrix,
    /// Larger of `‖p_ret − F(a_ret)‖` and `‖p_adv + F(a_adv)‖`, where
    /// `F(A) = −iω(A − A†)` is the retarded momentum written in terms of the
    /// time-dependent coefficient `A = a(k, t)`.
    pub residual: f64,
}

/// Momentum of the advanced oscillator is the retarded expression with the
/// opposite sign.
pub fn momentum_sign_check(spec: &ModeSpec, n: i64, t: f64) -> Result<MomentumSignCheck> {
    let pos = spec.position(n)?;
    let w = spec.frequencies()[pos];
    let retarded_form = |a: ModeOperator| -> Result<SparseMatrix> {
        let adj = a.adjoint();
        matrix(&a.minus(adj).scaled(-I * w), spec)
    };
    let ret = OscillatorQuadratures::new(spec, n, t, TimeDependence::Retarded)?;
    let adv = OscillatorQuadratures::new(spec, n, t, TimeDependence::Advanced)?;
    let p_ret = matrix(&ret.p_operator, spec)?;
    let p_adv = matrix(&adv.p_operator, spec)?;
    let ret_form = retarded_form(annihilator(spec, pos, t, TimeDependence::Retarded))?;
    let adv_form = retarded_form(annihilator(spec, pos, t, TimeDependence::Advanced))?;
    let residual = p_ret.sub(&ret_form).norm().max(p_adv.add(&adv_form).norm());
    Ok(MomentumSignCheck {
        p_ret,
        p_adv,
        residual,
    })
}

/// Builds the field two ways and returns the matrix-norm difference:
/// (A) retarded `a(k)e^{−iωt}` terms plus the advanced coefficients
/// `â_adv(k, t) = b̂†(−k)e^{+iωt}`, both multiplying `e^{ikx}`;
/// (B) the relabeled form `a(k)e^{i(kx−ωt)} + b̂†(k)e^{−i(kx−ωt)}`.
/// Also folds in the adjoint relation `â†_adv(k, t) = b̂(−k)e^{−iωt}`.
pub fn reinterpretation_check(spec: &ModeSpec, t: f64, x: f64) -> Result<f64> {
    if !spec.is_negation_closed() {
        return Err(Error::NotNegationClosed(format!(
            "mode set {:?} cannot be relabeled k -> -k",
            spec.labels()
        )));
    }
    let mut route_a = ModeOperator::zero();
    let mut adjoint_gap: f64 = 0.0;
    for (pos, &n) in spec.labels().iter().enumerate() {
        let (k, w) = (spec.momenta()[pos], spec.frequencies()[pos]);
        let spatial = Complex64::from_polar(spec.normalization(pos), k * x);
        let retarded = annihilator(spec, pos, t, TimeDependence::Retarded);
        let advanced = advanced_coefficient(spec, n, t)?;
        let partner = spec.position(-n)?;
        let expected_adj = ModeOperator::evolving(Sector::Antiparticle, partner, false, -w, t);
        adjoint_gap = adjoint_gap.max(matrix(&advanced.adjoint(), spec)?.sub(&matrix(&expected_adj, spec)?).norm());
        route_a = route_a.plus(retarded.plus(advanced).scaled(spatial));
    }
    let route_b = field(spec, t, x);
    let diff = matrix(&route_a, spec)?.sub(&matrix(&route_b, spec)?).norm();
    Ok(diff.max(adjoint_gap))
}

/// `‖[P, Ψ(t,x)] − i (Ψ(t,x+dx) − Ψ(t,x−dx)) / (2dx)‖` with `P = Σ k(a†a + b†b)`.
pub fn translation_generator_check(spec: &ModeSpec, t: f64, x: f64, dx: f64) -> Result<f64> {
    if dx.is_nan() || dx <= 0.0 {
        return Err(Error::InvalidParameter {
            field: "dx",
            reason: "must be positive".into(),
        });
    }
    let p = matrix(&momentum_operator(spec), spec)?;
    let psi = matrix(&field(spec, t, x), spec)?;
    let ahead = matrix(&field(spec, t, x + dx), spec)?;
    let behind = matrix(&field(spec, t, x - dx), spec)?;
    let derivative = ahead.sub(&behind).scale(real(0.5 / dx));
    Ok(p.commutator(&psi).sub(&derivative.scale(I)).norm())
}

/// Least-squares slope of `ln residual` against `ln dx`.
pub fn convergence_order(dxs: &[f64], residuals: &[f64]) -> f64 {
    assert_eq!(dxs.len(), residuals.len());
    let n = dxs.len() as f64;
    let xs: Vec<f64> = dxs.iter().map(|d| d.ln()).collect();
    let ys: Vec<f64> = residuals.iter().map(|r| r.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let cov: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    cov / var
}

/// Largest deviation from the canonical commutators
/// `[a_k, a†_k′] = [b_k, b†_k′] = δ_kk′` (all others zero), measured on the
/// columns with total occupation below the cap.
pub fn canonical_commutator_residual(spec: &ModeSpec) -> Result<f64> {
    let basis = FockBasis::new(spec)?;
    let cap = u32::from(spec.max_occupation());
    let interior = |j: usize| basis.occupation(j).iter().map(|&n| u32::from(n)).sum::<u32>() < cap;
    let id = SparseMatrix::identity(basis.dim());
    let zero = SparseMatrix::zeros(basis.dim());
    let mut ladders = Vec::new();
    for sector in [Sector::Particle, Sector::Antiparticle] {
        for pos in 0..spec.len() {
            let lower = matrix(&ModeOperator::ladder(sector, pos, false), spec)?;
            let upper = matrix(&ModeOperator::ladder(sector, pos, true), spec)?;
            ladders.push((sector, pos, lower, upper));
        }
    }
    let mut worst: f64 = 0.0;
    for (s1, p1, low1, up1) in &ladders {
        for (s2, p2, low2, up2) in &ladders {
            let same = s1 == s2 && p1 == p2;
            let expected = if same { &id } else { &zero };
            worst = worst
                .max(low1.commutator(up2).sub(expected).norm_on_columns(interior))
                .max(low1.commutator(low2).norm_on_columns(interior))
                .max(up1.commutator(up2).norm_on_columns(interior));
        }
    }
    Ok(worst)
}
