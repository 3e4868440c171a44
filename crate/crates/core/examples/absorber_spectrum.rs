//! Couples seeded random currents through the kernels: the free-field and
//! direction identities, their single-pair negative controls, and the
//! emission spectrum.

use dalab::absorber::{
    direction_residual_over_pairs, dplus_direction_equivalence, emitted_spectrum, free_field_identity,
    free_field_residual_over_pairs, spectrum_consistency_residual,
};
use dalab::{sampling, Lattice, LatticeSpec};

fn main() -> dalab::Result<()> {
    let lattice = Lattice::new(LatticeSpec {
        n_space: 16,
        n_time: 16,
        ..LatticeSpec::default()
    })?;
    let currents = sampling::currents(&mut sampling::rng(42), &lattice, 3);

    println!("free-field identity        {:.3e}", free_field_identity(&currents, &lattice)?);
    println!("  single pair (control)    {:.3e}", free_field_residual_over_pairs(&currents, &[(0, 1)], &lattice)?);
    println!("D+ direction equivalence   {:.3e}", dplus_direction_equivalence(&currents, &lattice)?);
    println!("  single pair (control)    {:.3e}", direction_residual_over_pairs(&currents, &[(0, 1)], &lattice)?);
    println!("spectrum vs double sum     {:.3e}", spectrum_consistency_residual(&currents, &lattice)?);

    let spectrum = emitted_spectrum(&currents, &lattice)?;
    println!("\n{:>8} {:>10} {:>14}", "k", "omega", "energy");
    for ((k, w), e) in spectrum.momenta.iter().zip(&spectrum.frequencies).zip(&spectrum.energies) {
        println!("{k:8.4} {w:10.6} {e:14.6e}");
    }
    println!("total {:.6e}", spectrum.total);
    Ok(())
}
