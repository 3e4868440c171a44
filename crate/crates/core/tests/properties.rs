use dalab::absorber::{emitted_spectrum, free_field_identity, interaction_sum, CurrentDistribution};
use dalab::dirac::{gamma_matrices, plane_wave_solution, probability_current};
use dalab::fock::{time_ordered_vev, ModeSpec};
use dalab::propagators::{eval_all, eval_kernel, KernelKind, SpacetimePoint};
use dalab::{sampling, Lattice, LatticeSpec};
use num_complex::Complex64;
use proptest::prelude::*;

fn lattice(n: usize, mass: f64) -> Lattice {
    Lattice::new(LatticeSpec {
        n_space: n,
        mass,
        ..LatticeSpec::default()
    })
    .unwrap()
}

fn even_n() -> impl Strategy<Value = usize> {
    (1usize..=32).prop_map(|h| 2 * h)
}

fn nonzero_time() -> impl Strategy<Value = f64> {
    prop_oneof![0.01f64..6.0, -6.0f64..-0.01]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn grid_is_negation_closed(n in even_n()) {
        let spec = LatticeSpec { n_space: n, ..LatticeSpec::default() };
        let lat = Lattice::new(spec).unwrap();
        prop_assert!(lat.is_negation_closed());
        prop_assert_eq!(lat.n_modes(), n - 1);
        for &i in lat.indices() {
            prop_assert!(lat.position(-i).is_some());
        }
        prop_assert!(!Lattice::with_edge_mode(spec).unwrap().is_negation_closed());
    }

    #[test]
    fn kernels_are_periodic_in_space(t in nonzero_time(), x in 0.0f64..10.0, wraps in -3i32..=3) {
        let lat = lattice(16, 1.0);
        let shifted = SpacetimePoint { t, x: x + f64::from(wraps) * lat.box_length() };
        let base = eval_all(&lat, SpacetimePoint { t, x })?;
        let moved = eval_all(&lat, SpacetimePoint::on(&lat, shifted.t, shifted.x))?;
        for (a, b) in base.iter().zip(&moved) {
            prop_assert!((a - b).norm() <= 1e-12);
        }
    }

    #[test]
    fn kernel_symmetries(t in nonzero_time(), x in 0.0f64..10.0, m in 0.2f64..3.0) {
        let lat = lattice(16, m);
        let p = SpacetimePoint::on(&lat, t, x);
        let q = SpacetimePoint::on(&lat, -t, -x);
        let k = |kind, at| eval_kernel(&lat, kind, at).unwrap();
        let dp = k(KernelKind::WightmanPlus, p);
        prop_assert!((k(KernelKind::WightmanMinus, p) - dp.conj()).norm() <= 1e-14);
        let d = k(KernelKind::Commutator, p);
        prop_assert!(d.im.abs() <= 1e-14);
        prop_assert!((d + k(KernelKind::Commutator, q)).norm() <= 1e-13);
        let d1 = k(KernelKind::Hadamard, p);
        prop_assert!(d1.re.abs() <= 1e-14);
        prop_assert!((d1 - k(KernelKind::Hadamard, q)).norm() <= 1e-13);
        let dbar = k(KernelKind::TimeSymmetric, p);
        prop_assert!((dbar - k(KernelKind::TimeSymmetric, q)).norm() <= 1e-13);
        prop_assert!(dbar.im.abs() <= 1e-14);
        let ret = k(KernelKind::Retarded, p);
        let adv = k(KernelKind::Advanced, p);
        prop_assert!((ret - adv - d).norm() <= 1e-13);
        prop_assert!((k(KernelKind::Retarded, q) - adv).norm() <= 1e-13);
    }

    #[test]
    fn exchange_antisymmetry(t in -6.0f64..6.0, x in -20.0f64..20.0, n in even_n()) {
        let lat = lattice(n, 1.0);
        let fwd = eval_kernel(&lat, KernelKind::WightmanPlus, SpacetimePoint::on(&lat, t, x))?;
        let back = eval_kernel(&lat, KernelKind::WightmanMinus, SpacetimePoint::on(&lat, -t, -x))?;
        prop_assert!((fwd + back).norm() <= 1e-13);
    }

    #[test]
    fn decomposition_everywhere(t in nonzero_time(), x in 0.0f64..10.0, n in even_n()) {
        let lat = lattice(n, 1.0);
        let [dp, dm, _, _, _, _, dbar, df] = eval_all(&lat, SpacetimePoint::on(&lat, t, x))?;
        prop_assert!((df - dbar - 0.5 * (dp - dm)).norm() <= 1e-13);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn emission_scales_quadratically(seed in any::<u64>(), c in -4.0f64..4.0) {
        let lat = Lattice::new(LatticeSpec { n_space: 16, n_time: 12, ..LatticeSpec::default() }).unwrap();
        let j = sampling::current(&mut sampling::rng(seed), &lat);
        let base = emitted_spectrum(std::slice::from_ref(&j), &lat)?;
        let scaled = emitted_spectrum(&[j.scaled(c)], &lat)?;
        for (a, b) in base.energies.iter().zip(&scaled.energies) {
            prop_assert!(*a >= 0.0);
            prop_assert!((b - c * c * a).abs() <= 1e-12 * (1.0 + c * c * a));
        }
    }

    #[test]
    fn interaction_sum_is_bilinear(seed in any::<u64>(), c in -3.0f64..3.0) {
        let lat = Lattice::new(LatticeSpec { n_space: 8, n_time: 8, ..LatticeSpec::default() }).unwrap();
        let mut rng = sampling::rng(seed);
        let (a, b, e) = (sampling::current(&mut rng, &lat), sampling::current(&mut rng, &lat), sampling::current(&mut rng, &lat));
        let sum: Vec<f64> = b.samples().iter().zip(e.samples()).map(|(x, y)| c * x + y).collect();
        let be = CurrentDistribution::from_samples(&lat, sum)?;
        for kind in KernelKind::ALL {
            let lhs = interaction_sum(&a, &be, kind, &lat)?;
            let rhs = interaction_sum(&a, &b, kind, &lat)? * c + interaction_sum(&a, &e, kind, &lat)?;
            prop_assert!((lhs - rhs).norm() <= 1e-13 * (1.0 + rhs.norm()));
        }
    }

    #[test]
    fn free_field_identity_for_any_seed(seed in any::<u64>(), count in 1usize..5) {
        let lat = Lattice::new(LatticeSpec { n_space: 8, n_time: 8, ..LatticeSpec::default() }).unwrap();
        let currents = sampling::currents(&mut sampling::rng(seed), &lat, count);
        prop_assert!(free_field_identity(&currents, &lat)? <= 1e-13);
    }

    #[test]
    fn vev_oracle_for_random_points(xt in -3.0f64..3.0, xx in 0.0f64..10.0, yt in -3.0f64..3.0, yx in 0.0f64..10.0) {
        prop_assume!((xt - yt).abs() > 1e-6);
        let lat = lattice(8, 1.0);
        let spec = ModeSpec::full(&lat, 1)?;
        let (x, y) = (SpacetimePoint { t: xt, x: xx }, SpacetimePoint { t: yt, x: yx });
        let vev = time_ordered_vev(&spec, x, y)?;
        let df = eval_kernel(&lat, KernelKind::Feynman, x.minus(&y, &lat))?;
        prop_assert_eq!(vev.truncations, 0);
        prop_assert!((vev.value - Complex64::i() * df).norm() <= 1e-13);
    }

    #[test]
    fn plane_waves_solve_dirac_and_flow_with_energy(px in -3.0f64..3.0, py in -3.0f64..3.0, pz in -3.0f64..3.0,
                                                   m in 0.1f64..4.0, negative in any::<bool>(), spin in 1u8..=2) {
        let sign = if negative { -1 } else { 1 };
        let sol = plane_wave_solution([px, py, pz], m, sign, spin)?;
        prop_assert!(sol.dirac_residual(&gamma_matrices()) <= 1e-13 * (1.0 + sol.energy.abs()));
        let j = probability_current(&sol);
        prop_assert!((j.j[0] - 1.0).abs() <= 1e-14);
        prop_assert!(j.max_imag <= 1e-15);
        // the velocity is p/E
        for (i, p) in [px, py, pz].iter().enumerate() {
            prop_assert!((j.j[i + 1] - p / sol.energy).abs() <= 1e-13);
        }
    }
}
