//! Classical real currents on the spacetime grid coupled through the propagator
//! kernels: double sums, emission spectra and light-tight configurations.
//!
//! All double sums are `Σ_{x,y} a(x) K(x−y) b(y) (Δt Δx)²` over grid points.
//! Kernels are tabulated once on the grid of separations; at zero time
//! separation the step kernels use their continuous extension.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{Lattice, LatticeSpec};
use crate::propagators::{eval_kernel_extended, KernelKind, SpacetimePoint};
use crate::sum::{pairwise, pairwise_real};

/// Real current samples `j(tᵢ, xⱼ)`, stored time-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CurrentDistribution {
    spec: LatticeSpec,
    samples: Vec<f64>,
}

/// Inclusive index box holding every nonzero sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Support {
    pub t: (usize, usize),
    pub x: (usize, usize),
}

impl CurrentDistribution {
    pub fn zeros(lattice: &Lattice) -> CurrentDistribution {
        let spec = *lattice.spec();
        CurrentDistribution {
            spec,
            samples: vec![0.0; spec.n_time * spec.n_space],
        }
    }

    pub fn from_samples(lattice: &Lattice, samples: Vec<f64>) -> Result<CurrentDistribution> {
        let spec = *lattice.spec();
        if samples.len() != spec.n_time * spec.n_space {
            return Err(Error::InvalidParameter {
                field: "samples",
                reason: format!(
                    "expected {} x {} samples, got {}",
                    spec.n_time,
                    spec.n_space,
                    samples.len()
                ),
            });
        }
        if let Some(bad) = samples.iter().find(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter {
                field: "samples",
                reason: format!("non-finite sample {bad}"),
            });
        }
        Ok(CurrentDistribution { spec, samples })
    }

    /// Accepts complex samples only when every imaginary part is exactly zero.
    pub fn from_complex(lattice: &Lattice, samples: &[Complex64]) -> Result<CurrentDistribution> {
        let nx = lattice.spec().n_space;
        for (idx, s) in samples.iter().enumerate() {
            if s.im != 0.0 {
                return Err(Error::ComplexCurrent {
                    t_index: idx / nx,
                    x_index: idx % nx,
                    imag: s.im,
                });
            }
        }
        Self::from_samples(lattice, samples.iter().map(|s| s.re).collect())
    }

    /// Single point source of strength `value`.
    pub fn point(lattice: &Lattice, t_index: usize, x_index: usize, value: f64) -> Result<CurrentDistribution> {
        let mut j = Self::zeros(lattice);
        j.set(t_index, x_index, value)?;
        Ok(j)
    }

    pub fn set(&mut self, t_index: usize, x_index: usize, value: f64) -> Result<()> {
        if t_index >= self.spec.n_time || x_index >= self.spec.n_space {
            return Err(Error::InvalidParameter {
                field: "index",
                reason: format!("({t_index}, {x_index}) lies outside the grid"),
            });
        }
        self.samples[t_index * self.spec.n_space + x_index] = value;
        Ok(())
    }

    pub fn get(&self, t_index: usize, x_index: usize) -> f64 {
        self.samples[t_index * self.spec.n_space + x_index]
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn spec(&self) -> &LatticeSpec {
        &self.spec
    }

    pub fn support(&self) -> Option<Support> {
        let nx = self.spec.n_space;
        let mut bounds: Option<Support> = None;
        for (idx, v) in self.samples.iter().enumerate() {
            if *v == 0.0 {
                continue;
            }
            let (ti, xi) = (idx / nx, idx % nx);
            bounds = Some(match bounds {
                None => Support {
                    t: (ti, ti),
                    x: (xi, xi),
                },
                Some(b) => Support {
                    t: (b.t.0.min(ti), b.t.1.max(ti)),
                    x: (b.x.0.min(xi), b.x.1.max(xi)),
                },
            });
        }
        bounds
    }

    pub fn scaled(&self, c: f64) -> CurrentDistribution {
        CurrentDistribution {
            spec: self.spec,
            samples: self.samples.iter().map(|v| v * c).collect(),
        }
    }

    fn nonzero(&self) -> Vec<(usize, usize, f64)> {
        let nx = self.spec.n_space;
        self.samples
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0.0)
            .map(|(idx, v)| (idx / nx, idx % nx, *v))
            .collect()
    }
}

fn check_lattice(lattice: &Lattice, currents: &[&CurrentDistribution]) -> Result<()> {
    if currents.iter().all(|c| c.spec == *lattice.spec()) {
        Ok(())
    } else {
        Err(Error::LatticeMismatch)
    }
}

/// Sum of a list of currents.
pub fn total_current(lattice: &Lattice, currents: &[CurrentDistribution]) -> Result<CurrentDistribution> {
    check_lattice(lattice, &currents.iter().collect::<Vec<_>>())?;
    let mut total = CurrentDistribution::zeros(lattice);
    for c in currents {
        for (s, v) in total.samples.iter_mut().zip(&c.samples) {
            *s += v;
        }
    }
    Ok(total)
}

/// Which separation the kernel is evaluated at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// `K(x − y)`
    Forward,
    /// `K(y − x)`
    Reversed,
}

/// Kernel values on every grid separation `(d·Δt, e·Δx)`,
/// `d ∈ [−(N_t−1), N_t−1]`, `e ∈ [0, N)`.
#[derive(Debug, Clone)]
pub struct KernelTable {
    n_time: usize,
    n_space: usize,
    values: Vec<Complex64>,
}

impl KernelTable {
    pub fn new(lattice: &Lattice, kind: KernelKind) -> Result<KernelTable> {
        let spec = lattice.spec();
        let (nt, nx) = (spec.n_time, spec.n_space);
        let mut values = Vec::with_capacity((2 * nt - 1) * nx);
        for d in -(nt as i64 - 1)..=(nt as i64 - 1) {
            for e in 0..nx {
                let p = SpacetimePoint {
                    t: d as f64 * spec.dt,
                    x: e as f64 * lattice.dx(),
                };
                values.push(eval_kernel_extended(lattice, kind, p)?);
            }
        }
        Ok(KernelTable {
            n_time: nt,
            n_space: nx,
            values,
        })
    }

    /// Kernel at time-index separation `d` and space-index separation `e` (mod N).
    pub fn at(&self, d: i64, e: i64) -> Complex64 {
        let row = (d + self.n_time as i64 - 1) as usize;
        let col = e.rem_euclid(self.n_space as i64) as usize;
        self.values[row * self.n_space + col]
    }
}

/// `Σ_{x,y} a(x) K(±(x−y)) b(y) (ΔtΔx)²` with a pre-built table.
pub fn bilinear(
    lattice: &Lattice,
    a: &CurrentDistribution,
    b: &CurrentDistribution,
    table: &KernelTable,
    orientation: Orientation,
) -> Complex64 {
    let sign = match orientation {
        Orientation::Forward => 1,
        Orientation::Reversed => -1,
    };
    let bs = b.nonzero();
    let rows: Vec<Complex64> = a
        .nonzero()
        .into_iter()
        .map(|(ta, xa, va)| {
            let terms: Vec<Complex64> = bs
                .iter()
                .map(|&(tb, xb, vb)| {
                    let d = sign * (ta as i64 - tb as i64);
                    let e = sign * (xa as i64 - xb as i64);
                    table.at(d, e) * (va * vb)
                })
                .collect();
            pairwise(&terms)
        })
        .collect();
    let cell = lattice.dt() * lattice.dx();
    pairwise(&rows) * (cell * cell)
}

/// Discrete double integral of one kernel between two currents.
pub fn interaction_sum(
    a: &CurrentDistribution,
    b: &CurrentDistribution,
    kind: KernelKind,
    lattice: &Lattice,
) -> Result<Complex64> {
    check_lattice(lattice, &[a, b])?;
    let table = KernelTable::new(lattice, kind)?;
    Ok(bilinear(lattice, a, b, &table, Orientation::Forward))
}

fn pair_sum(
    lattice: &Lattice,
    currents: &[CurrentDistribution],
    pairs: &[(usize, usize)],
    table: &KernelTable,
    orientation: Orientation,
) -> Complex64 {
    let parts: Vec<Complex64> = pairs
        .iter()
        .map(|&(i, j)| bilinear(lattice, &currents[i], &currents[j], table, orientation))
        .collect();
    pairwise(&parts)
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
}

fn check_pairs(currents: &[CurrentDistribution], pairs: &[(usize, usize)]) -> Result<()> {
    if currents.is_empty() {
        return Err(Error::InvalidParameter {
            field: "currents",
            reason: "need at least one current".into(),
        });
    }
    match pairs.iter().find(|(i, j)| *i >= currents.len() || *j >= currents.len()) {
        Some(p) => Err(Error::InvalidParameter {
            field: "pairs",
            reason: format!("pair {p:?} refers to a missing current"),
        }),
        None => Ok(()),
    }
}

/// `|Σ_{(i,j)∈pairs} I(jᵢ, jⱼ; ½(D⁺−D⁻)) − Σ_{(i,j)∈pairs} I(jᵢ, jⱼ; D⁺)|`.
pub fn free_field_residual_over_pairs(
    currents: &[CurrentDistribution],
    pairs: &[(usize, usize)],
    lattice: &Lattice,
) -> Result<f64> {
    check_pairs(currents, pairs)?;
    check_lattice(lattice, &currents.iter().collect::<Vec<_>>())?;
    let hadamard = KernelTable::new(lattice, KernelKind::Hadamard)?;
    let dplus = KernelTable::new(lattice, KernelKind::WightmanPlus)?;
    let s1 = pair_sum(lattice, currents, pairs, &hadamard, Orientation::Forward);
    let s2 = pair_sum(lattice, currents, pairs, &dplus, Orientation::Forward);
    Ok((s1 - s2).norm())
}

/// Over the full symmetric double sum, the `½(D⁺ − D⁻)` coupling equals the
/// pure positive-frequency `D⁺` coupling.
pub fn free_field_identity(currents: &[CurrentDistribution], lattice: &Lattice) -> Result<f64> {
    free_field_residual_over_pairs(currents, &all_pairs(currents.len()), lattice)
}

/// `|Σ I(jᵢ, jⱼ; D⁺(x−y)) − Σ I(jᵢ, jⱼ; D⁺(y−x))|` over the given pairs.
pub fn direction_residual_over_pairs(
    currents: &[CurrentDistribution],
    pairs: &[(usize, usize)],
    lattice: &Lattice,
) -> Result<f64> {
    check_pairs(currents, pairs)?;
    check_lattice(lattice, &currents.iter().collect::<Vec<_>>())?;
    let dplus = KernelTable::new(lattice, KernelKind::WightmanPlus)?;
    let fwd = pair_sum(lattice, currents, pairs, &dplus, Orientation::Forward);
    let rev = pair_sum(lattice, currents, pairs, &dplus, Orientation::Reversed);
    Ok((fwd - rev).norm())
}

/// Under the full double sum `D⁺(x−y)` and `D⁺(y−x)` couple currents identically.
pub fn dplus_direction_equivalence(currents: &[CurrentDistribution], lattice: &Lattice) -> Result<f64> {
    direction_residual_over_pairs(currents, &all_pairs(currents.len()), lattice)
}

/// Per-mode emitted energy.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EmissionSpectrum {
    pub momenta: Vec<f64>,
    pub frequencies: Vec<f64>,
    pub energies: Vec<f64>,
    pub total: f64,
}

/// On-shell Fourier components `J̃(ωₙ, kₙ) = Σ J(t, x) e^{−i(ωₙt − kₙx)}`.
pub fn on_shell_components(lattice: &Lattice, current: &CurrentDistribution) -> Vec<Complex64> {
    let times = lattice.times();
    let positions = lattice.positions();
    let entries = current.nonzero();
    lattice
        .momenta()
        .iter()
        .zip(lattice.frequencies())
        .map(|(&k, &w)| {
            let terms: Vec<Complex64> = entries
                .iter()
                .map(|&(ti, xi, v)| Complex64::from_polar(v, -(w * times[ti] - k * positions[xi])))
                .collect();
            pairwise(&terms)
        })
        .collect()
}

/// `Eₙ = |J̃(ωₙ, kₙ)|² (ΔtΔx)² / (2ωₙL)` for the total current `J = Σ jᵢ`.
pub fn emitted_spectrum(currents: &[CurrentDistribution], lattice: &Lattice) -> Result<EmissionSpectrum> {
    let total = total_current(lattice, currents)?;
    let cell = lattice.dt() * lattice.dx();
    let l = lattice.box_length();
    let energies: Vec<f64> = on_shell_components(lattice, &total)
        .iter()
        .zip(lattice.frequencies())
        .map(|(j, w)| j.norm_sqr() * cell * cell / (2.0 * w * l))
        .collect();
    Ok(EmissionSpectrum {
        momenta: lattice.momenta().to_vec(),
        frequencies: lattice.frequencies().to_vec(),
        total: pairwise_real(&energies),
        energies,
    })
}

/// `|Σₙ Eₙ − i·Σ_{ij} I(jᵢ, jⱼ; D⁺)|`: the mode decomposition reproduces the
/// full double sum (with `iD⁺` the positive-frequency Wightman function).
pub fn spectrum_consistency_residual(currents: &[CurrentDistribution], lattice: &Lattice) -> Result<f64> {
    let spectrum = emitted_spectrum(currents, lattice)?;
    let dplus = KernelTable::new(lattice, KernelKind::WightmanPlus)?;
    let total = total_current(lattice, currents)?;
    let double = bilinear(lattice, &total, &total, &dplus, Orientation::Forward);
    Ok((Complex64::new(spectrum.total, 0.0) - Complex64::new(0.0, 1.0) * double).norm())
}

/// Total emitted energy; the configuration is light-tight when it is within tolerance.
pub fn light_tight_check(currents: &[CurrentDistribution], lattice: &Lattice) -> Result<f64> {
    if currents.is_empty() {
        return Ok(0.0);
    }
    Ok(emitted_spectrum(currents, lattice)?.total)
}

/// Orthogonal projection of `current` onto the complement of every on-shell
/// Fourier mode (the real vectors `cos(ωₙt − kₙx)` and `sin(ωₙt − kₙx)`).
pub fn project_light_tight(lattice: &Lattice, current: &CurrentDistribution) -> Result<CurrentDistribution> {
    check_lattice(lattice, &[current])?;
    let times = lattice.times();
    let positions = lattice.positions();
    let nx = lattice.spec().n_space;
    let grid: Vec<(f64, f64)> = (0..current.samples.len())
        .map(|idx| (times[idx / nx], positions[idx % nx]))
        .collect();
    let dot = |u: &[f64], v: &[f64]| pairwise_real(&u.iter().zip(v).map(|(a, b)| a * b).collect::<Vec<_>>());

    let mut basis: Vec<Vec<f64>> = Vec::new();
    for (&k, &w) in lattice.momenta().iter().zip(lattice.frequencies()) {
        for shift in [0.0, std::f64::consts::FRAC_PI_2] {
            let mut v: Vec<f64> = grid.iter().map(|&(t, x)| (w * t - k * x - shift).cos()).collect();
            let scale = dot(&v, &v).sqrt();
            // two passes of modified Gram–Schmidt
            for _ in 0..2 {
                for e in &basis {
                    let c = dot(e, &v);
                    v.iter_mut().zip(e).for_each(|(a, b)| *a -= c * b);
                }
            }
            let n = dot(&v, &v).sqrt();
            if n > 1e-9 * scale {
                v.iter_mut().for_each(|a| *a /= n);
                basis.push(v);
            }
        }
    }

    let mut out = current.samples.clone();
    for _ in 0..2 {
        for e in &basis {
            let c = dot(e, &out);
            out.iter_mut().zip(e).for_each(|(a, b)| *a -= c * b);
        }
    }
    CurrentDistribution::from_samples(lattice, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling;

    fn lattice(n: usize, nt: usize) -> Lattice {
        Lattice::new(LatticeSpec {
            n_space: n,
            n_time: nt,
            ..LatticeSpec::default()
        })
        .unwrap()
    }

    #[test]
    fn zero_current_gives_zero() {
        let lat = lattice(8, 8);
        let a = sampling::current(&mut sampling::rng(3), &lat);
        let zero = CurrentDistribution::zeros(&lat);
        for kind in KernelKind::ALL {
            assert_eq!(interaction_sum(&a, &zero, kind, &lat).unwrap(), Complex64::default());
        }
        let spectrum = emitted_spectrum(&[zero], &lat).unwrap();
        assert!(spectrum.energies.iter().all(|e| *e == 0.0));
        assert_eq!(light_tight_check(&[], &lat).unwrap(), 0.0);
    }

    #[test]
    fn time_symmetric_coupling_is_symmetric_and_real() {
        let lat = lattice(8, 8);
        let mut rng = sampling::rng(11);
        let a = sampling::current(&mut rng, &lat);
        let b = sampling::current(&mut rng, &lat);
        let ab = interaction_sum(&a, &b, KernelKind::TimeSymmetric, &lat).unwrap();
        let ba = interaction_sum(&b, &a, KernelKind::TimeSymmetric, &lat).unwrap();
        assert!((ab - ba).norm() < 1e-15);
        assert!(ab.im.abs() < 1e-15);
        let p = CurrentDistribution::point(&lat, 2, 3, 1.5).unwrap();
        let pp = interaction_sum(&p, &p, KernelKind::TimeSymmetric, &lat).unwrap();
        assert_eq!(pp.im, 0.0);
    }

    #[test]
    fn point_source_spectrum_is_flat_in_modulus() {
        let lat = lattice(16, 16);
        let p = CurrentDistribution::point(&lat, 5, 9, 1.0).unwrap();
        let s = emitted_spectrum(&[p], &lat).unwrap();
        let cell = lat.dt() * lat.dx();
        for (e, w) in s.energies.iter().zip(&s.frequencies) {
            let expect = cell * cell / (2.0 * w * lat.box_length());
            assert!((e - expect).abs() < 1e-15 * expect.max(1.0));
        }
    }

    #[test]
    fn projected_current_is_light_tight() {
        let lat = lattice(16, 16);
        let j = sampling::current(&mut sampling::rng(5), &lat);
        assert!(light_tight_check(std::slice::from_ref(&j), &lat).unwrap() > 0.0);
        let tight = project_light_tight(&lat, &j).unwrap();
        assert!(light_tight_check(&[tight], &lat).unwrap() <= 1e-10);
    }

    #[test]
    fn rejects_mismatched_lattices_and_complex_samples() {
        let a = CurrentDistribution::zeros(&lattice(8, 8));
        let b = CurrentDistribution::zeros(&lattice(16, 8));
        assert_eq!(
            interaction_sum(&a, &b, KernelKind::Feynman, &lattice(8, 8)),
            Err(Error::LatticeMismatch)
        );
        let lat = lattice(4, 2);
        let mut samples = vec![Complex64::new(1.0, 0.0); 8];
        samples[5].im = 1e-3;
        assert!(matches!(
            CurrentDistribution::from_complex(&lat, &samples),
            Err(Error::ComplexCurrent { t_index: 1, x_index: 1, .. })
        ));
    }

    #[test]
    fn support_box() {
        let lat = lattice(8, 8);
        let mut j = CurrentDistribution::zeros(&lat);
        assert_eq!(j.support(), None);
        j.set(2, 5, 1.0).unwrap();
        j.set(4, 1, -1.0).unwrap();
        assert_eq!(j.support(), Some(Support { t: (2, 4), x: (1, 5) }));
        assert!(j.set(8, 0, 1.0).is_err());
    }
}
