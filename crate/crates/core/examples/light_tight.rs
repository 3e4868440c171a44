//! Projects a random current onto the complement of every on-shell mode and
//! confirms it no longer emits. Also loads a current from CSV.

use dalab::absorber::{light_tight_check, project_light_tight, CurrentDistribution};
use dalab::report::{read_current_csv, write_current_csv};
use dalab::{sampling, Lattice, LatticeSpec};

fn main() -> dalab::Result<()> {
    let lattice = Lattice::new(LatticeSpec::default())?;
    let raw = sampling::current(&mut sampling::rng(3), &lattice);
    let tight = project_light_tight(&lattice, &raw)?;
    println!("emission before projection {:.6e}", light_tight_check(std::slice::from_ref(&raw), &lattice)?);
    println!("emission after projection  {:.6e}", light_tight_check(std::slice::from_ref(&tight), &lattice)?);

    let mut buf = Vec::new();
    write_current_csv(&mut buf, &tight)?;
    let back: CurrentDistribution = read_current_csv(buf.as_slice(), &lattice)?;
    println!("CSV round trip exact: {}", back == tight);
    Ok(())
}
