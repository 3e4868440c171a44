//! Evaluates all eight propagator kernels at a few separations.

use dalab::propagators::{eval_all, KernelKind, SpacetimePoint};
use dalab::{Lattice, LatticeSpec};

fn main() -> dalab::Result<()> {
    let lattice = Lattice::new(LatticeSpec::default())?;
    println!("N = {}, L = {}, m = {}", lattice.spec().n_space, lattice.box_length(), lattice.mass());

    for (t, x) in [(0.5, 0.0), (-0.5, 0.0), (1.25, 3.7), (-2.0, 9.1)] {
        let p = SpacetimePoint::on(&lattice, t, x);
        println!("\nt = {t:+.2}, x = {x:.2}");
        for (kind, value) in KernelKind::ALL.iter().zip(eval_all(&lattice, p)?) {
            println!("  {:<16} {:+.12e} {:+.12e}i", kind.name(), value.re, value.im);
        }
    }
    Ok(())
}
