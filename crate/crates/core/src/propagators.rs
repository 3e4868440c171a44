//! Scalar-field propagator kernels as exact discrete mode sums on the periodic box,
//! and the checks of the identities relating them.
//!
//! # Convention ledger
//!
//! With `W±(t, x) = (1/L) Σₙ e^{∓i(ωₙt − kₙx)} / (2ωₙ)`:
//!
//! | kernel | definition |
//! |---|---|
//! | `D⁺` | `−i W₋`, i.e. `−(i/L) Σ e^{−i(ωt−kx)}/(2ω)` |
//! | `D⁻` | `+i W₊`, i.e. `+(i/L) Σ e^{+i(ωt−kx)}/(2ω)` |
//! | `D` (commutator) | `D⁺ + D⁻` |
//! | `D₁` (Hadamard) | `½(D⁺ − D⁻)` |
//! | retarded | `θ(t) D` |
//! | advanced | `−θ(−t) D` |
//! | `D̄` | `½(retarded + advanced)` |
//! | `D_F` | `θ(t) D⁺ − θ(−t) D⁻` |
//!
//! The overall `−i` makes the field-theory dictionary read
//! `i·D_F = ⟨0|T Ψ(x)Ψ†(y)|0⟩`, `i·D = ⟨0|[Ψ(x), Ψ†(y)]|0⟩` and
//! `i·D₁ = ½⟨0|{Ψ(x), Ψ†(y)}|0⟩`. `D` and `D̄` come out real; `D₁` imaginary.
//! On a negation-closed grid `D⁺(x−y) = −D⁻(y−x)` and `D_F = D̄ + D₁` hold
//! exactly, and `D` vanishes at equal times.
//!
//! The step-function kernels are undefined at `t = 0` and [`eval_kernel`]
//! rejects that point.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::quadrature::{self, Tolerance};
use crate::sum::pairwise;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// The eight scalar propagator kernels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelKind {
    WightmanPlus,
    WightmanMinus,
    Commutator,
    Hadamard,
    Retarded,
    Advanced,
    TimeSymmetric,
    Feynman,
}

impl KernelKind {
    pub const ALL: [KernelKind; 8] = [
        KernelKind::WightmanPlus,
        KernelKind::WightmanMinus,
        KernelKind::Commutator,
        KernelKind::Hadamard,
        KernelKind::Retarded,
        KernelKind::Advanced,
        KernelKind::TimeSymmetric,
        KernelKind::Feynman,
    ];

    pub fn name(self) -> &'static str {
        match self {
            KernelKind::WightmanPlus => "wightman_plus",
            KernelKind::WightmanMinus => "wightman_minus",
            KernelKind::Commutator => "commutator",
            KernelKind::Hadamard => "hadamard",
            KernelKind::Retarded => "retarded",
            KernelKind::Advanced => "advanced",
            KernelKind::TimeSymmetric => "time_symmetric",
            KernelKind::Feynman => "feynman",
        }
    }

    /// Kinds built from step functions of `t`, undefined at `t = 0`.
    pub fn has_step(self) -> bool {
        matches!(
            self,
            KernelKind::Retarded
                | KernelKind::Advanced
                | KernelKind::TimeSymmetric
                | KernelKind::Feynman
        )
    }
}

impl fmt::Display for KernelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KernelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        let alias = match norm.as_str() {
            "dplus" | "d_plus" => "wightman_plus",
            "dminus" | "d_minus" => "wightman_minus",
            "d1" => "hadamard",
            "dbar" => "time_symmetric",
            "df" | "d_f" => "feynman",
            other => other,
        };
        KernelKind::ALL
            .into_iter()
            .find(|k| k.name() == alias)
            .ok_or_else(|| Error::InvalidParameter {
                field: "kind",
                reason: format!("unknown kernel `{s}`"),
            })
    }
}

/// A point of the 1+1D box, or a separation between two points.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpacetimePoint {
    pub t: f64,
    pub x: f64,
}

impl SpacetimePoint {
    /// Point with `x` reduced into `[0, L)`.
    pub fn on(lattice: &Lattice, t: f64, x: f64) -> SpacetimePoint {
        SpacetimePoint {
            t,
            x: lattice.wrap(x),
        }
    }

    /// Separation `self − other`, spatial part reduced into `[0, L)`.
    pub fn minus(&self, other: &SpacetimePoint, lattice: &Lattice) -> SpacetimePoint {
        SpacetimePoint::on(lattice, self.t - other.t, self.x - other.x)
    }
}

/// The two base sums `W∓(t, x)`, each summed over `±k` partners first.
fn base_sums(lattice: &Lattice, t: f64, x: f64) -> (Complex64, Complex64) {
    let idx = lattice.indices();
    let k = lattice.momenta();
    let w = lattice.frequencies();
    let mut minus = Vec::with_capacity(idx.len());
    let mut plus = Vec::with_capacity(idx.len());
    for (pos, &n) in idx.iter().enumerate() {
        let time_phase = Complex64::from_polar(1.0, -w[pos] * t);
        match lattice.position(-n) {
            Some(_) if n < 0 => continue,
            Some(_) if n > 0 => {
                // e^{ikx} + e^{-ikx} for the pair, with ω(k) = ω(-k)
                let spatial = (k[pos] * x).cos() / w[pos];
                minus.push(time_phase * spatial);
                plus.push(time_phase.conj() * spatial);
            }
            _ => {
                let phase = Complex64::from_polar(1.0, k[pos] * x) / (2.0 * w[pos]);
                minus.push(time_phase * phase);
                plus.push(time_phase.conj() * phase.conj());
            }
        }
    }
    let l = lattice.box_length();
    (pairwise(&minus) / l, pairwise(&plus) / l)
}

/// `D⁺(t, x)` without the closure check; for diagnostics on arbitrary grids.
pub fn dplus_unchecked(lattice: &Lattice, t: f64, x: f64) -> Complex64 {
    -I * base_sums(lattice, t, x).0
}

/// `D⁻(t, x)` without the closure check; for diagnostics on arbitrary grids.
pub fn dminus_unchecked(lattice: &Lattice, t: f64, x: f64) -> Complex64 {
    I * base_sums(lattice, t, x).1
}

fn combine(kind: KernelKind, t: f64, dplus: Complex64, dminus: Complex64) -> Complex64 {
    let step = |s: f64| if s > 0.0 { 1.0 } else { 0.0 };
    let comm = dplus + dminus;
    match kind {
        KernelKind::WightmanPlus => dplus,
        KernelKind::WightmanMinus => dminus,
        KernelKind::Commutator => comm,
        KernelKind::Hadamard => 0.5 * (dplus - dminus),
        KernelKind::Retarded => step(t) * comm,
        KernelKind::Advanced => -step(-t) * comm,
        KernelKind::TimeSymmetric => 0.5 * (step(t) * comm - step(-t) * comm),
        KernelKind::Feynman => step(t) * dplus - step(-t) * dminus,
    }
}

/// Evaluate one kernel at the separation `p`.
pub fn eval_kernel(lattice: &Lattice, kind: KernelKind, p: SpacetimePoint) -> Result<Complex64> {
    lattice.require_negation_closed()?;
    if kind.has_step() && p.t == 0.0 {
        return Err(Error::EqualTime { kind: kind.name() });
    }
    let (minus, plus) = base_sums(lattice, p.t, lattice.wrap(p.x));
    Ok(combine(kind, p.t, -I * minus, I * plus))
}

/// All eight kernels at once, sharing the mode sums.
pub fn eval_all(lattice: &Lattice, p: SpacetimePoint) -> Result<[Complex64; 8]> {
    lattice.require_negation_closed()?;
    if p.t == 0.0 {
        return Err(Error::EqualTime { kind: "step kernels" });
    }
    let (minus, plus) = base_sums(lattice, p.t, lattice.wrap(p.x));
    Ok(KernelKind::ALL.map(|k| combine(k, p.t, -I * minus, I * plus)))
}

/// Kernel value that is also defined at `t = 0`: step kernels take the mean of
/// their one-sided limits there. On a negation-closed grid `D(0, x) = 0`, so
/// both limits agree and the extension is continuous.
pub fn eval_kernel_extended(lattice: &Lattice, kind: KernelKind, p: SpacetimePoint) -> Result<Complex64> {
    if p.t != 0.0 {
        return eval_kernel(lattice, kind, p);
    }
    lattice.require_negation_closed()?;
    let (minus, plus) = base_sums(lattice, 0.0, lattice.wrap(p.x));
    let (dp, dm) = (-I * minus, I * plus);
    let after = combine(kind, 1.0, dp, dm);
    let before = combine(kind, -1.0, dp, dm);
    Ok(0.5 * (after + before))
}

/// Largest `|D_F − D̄ − ½(D⁺ − D⁻)|` over the given separations.
pub fn verify_decomposition(lattice: &Lattice, points: &[SpacetimePoint]) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for p in points {
        let k = eval_all(lattice, *p)?;
        let [dp, dm, _, _, _, _, dbar, df] = k;
        worst = worst.max((df - dbar - 0.5 * (dp - dm)).norm());
    }
    Ok(worst)
}

/// Largest `|D⁺(x − y) + D⁻(y − x)|` over the given point pairs.
pub fn verify_antisymmetry(
    lattice: &Lattice,
    pairs: &[(SpacetimePoint, SpacetimePoint)],
) -> Result<f64> {
    lattice.require_negation_closed()?;
    let mut worst: f64 = 0.0;
    for (x, y) in pairs {
        let forward = x.minus(y, lattice);
        let backward = y.minus(x, lattice);
        let dp = eval_kernel(lattice, KernelKind::WightmanPlus, forward)?;
        let dm = eval_kernel(lattice, KernelKind::WightmanMinus, backward)?;
        worst = worst.max((dp + dm).norm());
    }
    Ok(worst)
}

/// Parameters of the single-mode frequency integral
/// `(1/2π) ∫ dν e^{−iνt} i/(ν² − ω² + iε)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrequencyIntegralSpec {
    pub mode_frequency: f64,
    pub time: f64,
    pub epsilon: f64,
    pub frequency_cutoff: f64,
}

impl FrequencyIntegralSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |field, reason: &str| {
            Err(Error::InvalidParameter {
                field,
                reason: reason.to_string(),
            })
        };
        if !(self.mode_frequency.is_finite() && self.mode_frequency > 0.0) {
            return bad("mode_frequency", "must be positive");
        }
        if !self.time.is_finite() {
            return bad("time", "must be finite");
        }
        if !(self.epsilon.is_finite() && self.epsilon > 0.0) {
            return bad("epsilon", "must be positive");
        }
        if !(self.frequency_cutoff.is_finite() && self.frequency_cutoff > 10.0 * self.mode_frequency) {
            return bad("frequency_cutoff", "must exceed 10 times the mode frequency");
        }
        Ok(())
    }
}

/// Closed form `e^{−iω|t|} / (2ω)` the frequency integral converges to.
pub fn feynman_mode_closed_form(omega: f64, t: f64) -> Complex64 {
    Complex64::from_polar(1.0 / (2.0 * omega), -omega * t.abs())
}

const QUAD_TOL: Tolerance = Tolerance {
    absolute: 1e-11,
    max_intervals: 50_000,
};

/// `(1/2π) e^{−iνt}` times the propagator factor.
fn fourier_factor(nu: f64, t: f64) -> Complex64 {
    Complex64::from_polar(1.0 / (2.0 * PI), -nu * t)
}

/// Integrates `g` over `[-Ω, Ω]`, folding `g(p + s) + g(p − s)` around each pole
/// `p = ±ω` for `s ∈ [s_min, ω/2]` with breakpoints graded toward `s_min`.
/// A positive `s_min` excludes a symmetric window of half-width `s_min`.
fn integrate_around_poles<G>(g: G, spec: &FrequencyIntegralSpec, s_min: f64, grading: f64) -> Result<Complex64>
where
    G: Fn(f64) -> Complex64,
{
    let w = spec.mode_frequency;
    let cutoff = spec.frequency_cutoff;
    let half = 0.5 * w;
    let chunk = if spec.time == 0.0 {
        2.0
    } else {
        (PI / spec.time.abs()).min(2.0)
    };
    let mut parts = Vec::new();
    for (a, b) in [(-cutoff, -w - half), (-w + half, w - half), (w + half, cutoff)] {
        let bp = quadrature::uniform_breakpoints(a, b, chunk.min(half.max(1e-3)));
        parts.push(quadrature::integrate(&g, &bp, QUAD_TOL)?.value);
    }
    for pole in [-w, w] {
        let folded = |s: f64| g(pole + s) + g(pole - s);
        let mut bp = quadrature::geometric_breakpoints(grading, half);
        if s_min > 0.0 {
            bp.retain(|&s| s > s_min);
            bp.insert(0, s_min);
        }
        parts.push(quadrature::integrate(folded, &bp, QUAD_TOL)?.value);
    }
    Ok(pairwise(&parts))
}

/// `(i/2π) ∫_{|ν|>Ω} e^{−iνt} / (ν² − ω²) dν`, the part of the frequency line
/// beyond the cutoff. `ε` is dropped there; its effect is `O(ε/Ω³)`.
pub fn cutoff_tail(omega: f64, t: f64, cutoff: f64) -> Result<Complex64> {
    let integral = if t == 0.0 {
        ((cutoff + omega) / (cutoff - omega)).ln() / (2.0 * omega)
    } else {
        let at = t.abs();
        // ∫_Ω^∞ cos(νt)/ν² dν
        let leading = (cutoff * at).cos() / cutoff
            - at * (std::f64::consts::FRAC_PI_2 - quadrature::sine_integral(cutoff * at));
        // ∫_Ω^{20Ω} cos(νt) ω²/(ν²(ν² − ω²)) dν; beyond 20Ω it is below ω²/(24000 Ω³)
        let rest = |nu: f64| {
            Complex64::new((nu * t).cos() * omega * omega / (nu * nu * (nu * nu - omega * omega)), 0.0)
        };
        let bp = quadrature::uniform_breakpoints(cutoff, 20.0 * cutoff, (PI / at).min(cutoff));
        let correction = quadrature::integrate(rest, &bp, Tolerance {
            absolute: 1e-13,
            max_intervals: 200_000,
        })?;
        leading + correction.value.re
    };
    // both half-lines contribute the cosine part; the sine parts cancel
    Ok(I * integral / PI)
}

/// Adaptive-quadrature value of `(1/2π) ∫ dν e^{−iνt} i/(ν² − ω² + iε)` over
/// `[−Ω, Ω]`, plus the analytic tail beyond the cutoff.
pub fn frequency_integral_feynman(spec: &FrequencyIntegralSpec) -> Result<Complex64> {
    spec.validate()?;
    let (w, eps, t) = (spec.mode_frequency, spec.epsilon, spec.time);
    let g = |nu: f64| fourier_factor(nu, t) * I / Complex64::new(nu * nu - w * w, eps);
    let core = integrate_around_poles(g, spec, 0.0, eps / (2.0 * w) * 1e-3)?;
    Ok(core + cutoff_tail(w, t, spec.frequency_cutoff)?)
}

/// Principal-part and delta-function pieces of the frequency integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencySplit {
    /// `(i/2π) PP∫ e^{−iνt}/(ν² − ω²) dν`
    pub pp_part: Complex64,
    /// `(i/2π)(−iπ) ∫ δ(ν² − ω²) e^{−iνt} dν = cos(ωt)/(2ω)`
    pub delta_part: Complex64,
    /// Full `iε` integral, as [`frequency_integral_feynman`].
    pub full: Complex64,
    /// `|pp_part + delta_part − full|`
    pub residual: f64,
}

/// Principal part by symmetric exclusion windows of half-width `window` and
/// `window/2` around `ν = ±ω`, combined to cancel the leading `O(window)` error.
pub fn principal_part(spec: &FrequencyIntegralSpec, window: f64) -> Result<Complex64> {
    spec.validate()?;
    if !(window > 0.0 && window < 0.25 * spec.mode_frequency) {
        return Err(Error::InvalidParameter {
            field: "window",
            reason: "must lie in (0, ω/4)".into(),
        });
    }
    let (w, t) = (spec.mode_frequency, spec.time);
    let g = |nu: f64| fourier_factor(nu, t) * I / (nu * nu - w * w);
    let outside = |h: f64| integrate_around_poles(g, spec, h, h);
    let coarse = outside(window)?;
    let fine = outside(0.5 * window)?;
    Ok(2.0 * fine - coarse + cutoff_tail(w, t, spec.frequency_cutoff)?)
}

/// Delta-function term: `δ(ν² − ω²) = [δ(ν − ω) + δ(ν + ω)]/(2ω)`.
pub fn delta_part(spec: &FrequencyIntegralSpec) -> Complex64 {
    let w = spec.mode_frequency;
    Complex64::new((w * spec.time).cos() / (2.0 * w), 0.0)
}

pub fn verify_frequency_split(spec: &FrequencyIntegralSpec, window: f64) -> Result<FrequencySplit> {
    let full = frequency_integral_feynman(spec)?;
    let pp_part = principal_part(spec, window)?;
    let delta = delta_part(spec);
    Ok(FrequencySplit {
        pp_part,
        delta_part: delta,
        full,
        residual: (pp_part + delta - full).norm(),
    })
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use crate::lattice::LatticeSpec;

    fn lattice(n: usize) -> Lattice {
        Lattice::new(LatticeSpec {
            n_space: n,
            ..LatticeSpec::default()
        })
        .unwrap()
    }

    fn pt(t: f64, x: f64) -> SpacetimePoint {
        SpacetimePoint { t, x }
    }

    // Reference values from a 30-digit mode sum (mpmath), N=64, L=10, m=1,
    // summed from the highest |n| inward.
    #[test]
    fn dplus_matches_high_precision_mode_sum() {
        let lat = lattice(64);
        let v = eval_kernel(&lat, KernelKind::WightmanPlus, pt(0.5, 0.0)).unwrap();
        let expect = Complex64::new(-0.249_363_450_788_362_430_58, -0.105_120_425_427_214_614_91);
        assert!((v - expect).norm() < 1e-14, "{v}");
        let v = eval_kernel(&lat, KernelKind::WightmanPlus, pt(1.25, 3.7)).unwrap();
        let expect = Complex64::new(-0.000_580_567_144_758_424_42, -0.000_867_391_155_868_263_63);
        assert!((v - expect).norm() < 1e-14, "{v}");
    }

    #[test]
    fn equal_time_commutator_vanishes() {
        let lat = lattice(64);
        for x in [0.0, 0.3, 2.9, 7.7] {
            let d = eval_kernel(&lat, KernelKind::Commutator, pt(0.0, x)).unwrap();
            assert!(d.norm() < 1e-15);
        }
    }

    #[test]
    fn time_symmetric_is_even_in_time() {
        let lat = lattice(64);
        let a = eval_kernel(&lat, KernelKind::TimeSymmetric, pt(0.7, 1.3)).unwrap();
        let b = eval_kernel(&lat, KernelKind::TimeSymmetric, pt(-0.7, 1.3)).unwrap();
        assert!((a - b).norm() < 1e-14);
        assert!(a.im.abs() < 1e-15);
    }

    #[test]
    fn step_kernels_reject_equal_time() {
        let lat = lattice(8);
        for kind in KernelKind::ALL {
            let r = eval_kernel(&lat, kind, pt(0.0, 1.0));
            assert_eq!(r.is_err(), kind.has_step(), "{kind}");
        }
    }

    #[test]
    fn non_closed_grid_is_rejected() {
        let lat = Lattice::with_edge_mode(LatticeSpec {
            n_space: 8,
            ..LatticeSpec::default()
        })
        .unwrap();
        assert!(matches!(
            eval_kernel(&lat, KernelKind::WightmanPlus, pt(0.5, 0.0)),
            Err(Error::NotNegationClosed(_))
        ));
    }

    #[test]
    fn feynman_branches() {
        let lat = lattice(64);
        let fwd = pt(0.5, 0.4);
        let back = pt(-0.5, 0.4);
        let df = eval_kernel(&lat, KernelKind::Feynman, fwd).unwrap();
        assert_eq!(df, eval_kernel(&lat, KernelKind::WightmanPlus, fwd).unwrap());
        let df = eval_kernel(&lat, KernelKind::Feynman, back).unwrap();
        assert_eq!(df, -eval_kernel(&lat, KernelKind::WightmanMinus, back).unwrap());
        assert!(verify_decomposition(&lat, &[fwd, back]).unwrap() < 1e-15);
    }

    #[test]
    fn antisymmetry_on_coincident_points() {
        let lat = lattice(16);
        let p = pt(0.3, 4.0);
        assert!(verify_antisymmetry(&lat, &[(p, p)]).unwrap() < 1e-16);
    }

    #[test]
    fn extension_is_continuous_at_equal_time() {
        let lat = lattice(32);
        for kind in KernelKind::ALL {
            let at = eval_kernel_extended(&lat, kind, pt(0.0, 1.1)).unwrap();
            let near = eval_kernel(&lat, kind, pt(1e-9, 1.1)).unwrap();
            let near_back = eval_kernel(&lat, kind, pt(-1e-9, 1.1)).unwrap();
            assert!((at - near).norm() < 1e-8, "{kind}");
            assert!((at - near_back).norm() < 1e-8, "{kind}");
        }
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in KernelKind::ALL {
            assert_eq!(kind.name().parse::<KernelKind>().unwrap(), kind);
        }
        assert_eq!("Feynman".parse::<KernelKind>().unwrap(), KernelKind::Feynman);
        assert_eq!("dbar".parse::<KernelKind>().unwrap(), KernelKind::TimeSymmetric);
        assert!("photon".parse::<KernelKind>().is_err());
    }

    fn fspec(omega: f64, t: f64, cutoff: f64) -> FrequencyIntegralSpec {
        FrequencyIntegralSpec {
            mode_frequency: omega,
            time: t,
            epsilon: 1e-6,
            frequency_cutoff: cutoff,
        }
    }

    #[test]
    fn frequency_integral_closed_forms() {
        for (w, t, cutoff) in [(1.0, 0.0, 200.0), (1.0, 2.0, 200.0), (2.0, -1.0, 400.0)] {
            let v = frequency_integral_feynman(&fspec(w, t, cutoff)).unwrap();
            let expect = feynman_mode_closed_form(w, t);
            assert!((v - expect).norm() < 1e-5, "ω={w} t={t}: {v} vs {expect}");
        }
    }

    #[test]
    fn tail_matches_direct_integration() {
        // direct quadrature of the tail on [Ω, 2000] plus a 1/ν² bound beyond
        let (w, t, cutoff) = (1.0, 0.0, 50.0);
        let direct = quadrature::integrate(
            |nu| Complex64::new(1.0 / (nu * nu - w * w), 0.0),
            &quadrature::uniform_breakpoints(cutoff, 1e5, 100.0),
            Tolerance::default(),
        )
        .unwrap()
        .value
            + 1e-5;
        let tail = cutoff_tail(w, t, cutoff).unwrap();
        assert!((tail - I * direct / PI).norm() < 1e-10);
    }

    #[test]
    fn split_reassembles() {
        let split = verify_frequency_split(&fspec(1.0, 2.0, 200.0), 1e-3).unwrap();
        assert!(split.residual < 1e-4);
        assert!((split.delta_part - Complex64::new(2f64.cos() / 2.0, 0.0)).norm() < 1e-15);
        // PP part ↔ i·D̄ for one mode: -i sin(ω|t|)/(2ω)
        assert!((split.pp_part - Complex64::new(0.0, -(2f64).sin() / 2.0)).norm() < 1e-5);
        let at_zero = verify_frequency_split(&fspec(1.0, 0.0, 200.0), 1e-3).unwrap();
        assert!(at_zero.pp_part.im.abs() < 1e-6);
    }

    #[test]
    fn frequency_spec_validation() {
        assert!(frequency_integral_feynman(&fspec(1.0, 0.0, 5.0)).is_err());
        assert!(frequency_integral_feynman(&FrequencyIntegralSpec {
            epsilon: 0.0,
            ..fspec(1.0, 0.0, 200.0)
        })
        .is_err());
    }
}
