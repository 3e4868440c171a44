//! Advanced mode coefficients as antiparticle operators: phase, energy, momentum
//! sign and the creation/annihilation relabeling.

use dalab::fock::{
    antiparticle_energy, heisenberg_b_derivative_check, momentum_sign_check, reinterpretation_check, ModeSpec,
    SparseMatrix,
};
use dalab::{Lattice, LatticeSpec};

fn main() -> dalab::Result<()> {
    let lattice = Lattice::new(LatticeSpec {
        n_space: 8,
        ..LatticeSpec::default()
    })?;
    let modes = ModeSpec::subset(&lattice, &[-1, 0, 1], 1)?;

    for t in [0.0, 1.3, -2.2] {
        println!("t = {t:+.1}: i d/dt b+ + omega b+ residual {:.2e}", heisenberg_b_derivative_check(&modes, 1, t)?);
    }

    let e = antiparticle_energy(&modes, 1)?;
    println!("<kbar|H|kbar> = {:.15}, omega = {:.15}", e.eigenvalue, e.frequency);

    let m = momentum_sign_check(&modes, 1, 0.0)?;
    let sum: SparseMatrix = m.p_adv.add(&m.p_ret);
    println!("|p_adv + p_ret| at t = 0: {:.2e}; sign-flip residual {:.2e}", sum.norm(), m.residual);
    println!("|p_ret| = {:.6}", m.p_ret.norm());

    println!("reinterpretation residual {:.2e}", reinterpretation_check(&modes, 0.83, 2.71)?);
    Ok(())
}
