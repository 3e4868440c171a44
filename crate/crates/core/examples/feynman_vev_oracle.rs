//! Builds the time-ordered two-point function by applying field operators to
//! the Fock vacuum and compares it with i D_F from the mode sum.

use dalab::fock::{time_ordered_vev, ModeSpec};
use dalab::propagators::{eval_kernel, KernelKind};
use dalab::{sampling, Lattice, LatticeSpec};
use num_complex::Complex64;

fn main() -> dalab::Result<()> {
    let lattice = Lattice::new(LatticeSpec {
        n_space: 16,
        ..LatticeSpec::default()
    })?;
    let modes = ModeSpec::full(&lattice, 1)?;
    let pairs = sampling::pairs(&mut sampling::rng(7), &lattice, 8, 3.0, 1e-3);

    println!("{:>8} {:>8} {:>8} {:>8}   {:>24} {:>10}", "x.t", "x.x", "y.t", "y.x", "<T Psi Psi+>", "|diff|");
    for (x, y) in pairs {
        let vev = time_ordered_vev(&modes, x, y)?;
        let df = eval_kernel(&lattice, KernelKind::Feynman, x.minus(&y, &lattice))?;
        let diff = (vev.value - Complex64::i() * df).norm();
        println!(
            "{:8.3} {:8.3} {:8.3} {:8.3}   {:+.5e} {:+.5e}i {:10.2e}",
            x.t, x.x, y.t, y.x, vev.value.re, vev.value.im, diff
        );
        assert_eq!(vev.truncations, 0);
    }
    Ok(())
}
