//! Seeded generation of test points and current distributions.
//!
//! Everything draws from a `ChaCha8Rng`, so a seed fixes every sample across
//! platforms and releases.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::absorber::CurrentDistribution;
use crate::lattice::Lattice;
use crate::propagators::SpacetimePoint;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Point with `t ∈ [-t_max, t_max]`, `|t| ≥ t_min`, and `x ∈ [0, L)`.
pub fn point<R: Rng>(rng: &mut R, lattice: &Lattice, t_min: f64, t_max: f64) -> SpacetimePoint {
    let magnitude = rng.gen_range(t_min..=t_max);
    let t = if rng.gen_bool(0.5) { magnitude } else { -magnitude };
    SpacetimePoint::on(lattice, t, rng.gen_range(0.0..lattice.box_length()))
}

pub fn points<R: Rng>(rng: &mut R, lattice: &Lattice, n: usize, t_min: f64, t_max: f64) -> Vec<SpacetimePoint> {
    (0..n).map(|_| point(rng, lattice, t_min, t_max)).collect()
}

/// Pairs of points whose time difference is at least `dt_min` in magnitude.
pub fn pairs<R: Rng>(
    rng: &mut R,
    lattice: &Lattice,
    n: usize,
    t_max: f64,
    dt_min: f64,
) -> Vec<(SpacetimePoint, SpacetimePoint)> {
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let a = point(rng, lattice, 0.0, t_max);
        let b = point(rng, lattice, 0.0, t_max);
        if (a.t - b.t).abs() >= dt_min {
            out.push((a, b));
        }
    }
    out
}

/// Current with uniform samples in `[-1, 1]` on a random sub-box of the grid.
pub fn current<R: Rng>(rng: &mut R, lattice: &Lattice) -> CurrentDistribution {
    let spec = lattice.spec();
    let (nt, nx) = (spec.n_time, spec.n_space);
    let t0 = rng.gen_range(0..nt);
    let t1 = rng.gen_range(t0..nt);
    let x0 = rng.gen_range(0..nx);
    let x1 = rng.gen_range(x0..nx);
    let mut samples = vec![0.0; nt * nx];
    for ti in t0..=t1 {
        for xi in x0..=x1 {
            samples[ti * nx + xi] = rng.gen_range(-1.0..=1.0);
        }
    }
    CurrentDistribution::from_samples(lattice, samples).expect("sizes match the lattice")
}

pub fn currents<R: Rng>(rng: &mut R, lattice: &Lattice, n: usize) -> Vec<CurrentDistribution> {
    (0..n).map(|_| current(rng, lattice)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeSpec;

    #[test]
    fn same_seed_same_samples() {
        let lat = Lattice::new(LatticeSpec::default()).unwrap();
        let a = points(&mut rng(42), &lat, 10, 0.05, 5.0);
        let b = points(&mut rng(42), &lat, 10, 0.05, 5.0);
        assert_eq!(a, b);
        assert!(a.iter().all(|p| p.t.abs() >= 0.05 && p.x >= 0.0 && p.x < 10.0));
        let c = points(&mut rng(43), &lat, 10, 0.05, 5.0);
        assert_ne!(a, c);
    }

    #[test]
    fn pairs_respect_time_gap() {
        let lat = Lattice::new(LatticeSpec::default()).unwrap();
        for (a, b) in pairs(&mut rng(1), &lat, 50, 3.0, 0.01) {
            assert!((a.t - b.t).abs() >= 0.01);
        }
    }
}
