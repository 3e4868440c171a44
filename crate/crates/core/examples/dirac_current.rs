//! Dirac solutions and their probability currents. Negative-energy solutions
//! still have positive density but move against their momentum label.

use dalab::dirac::{gamma_matrices, plane_wave_solution, probability_current, rest_frame_solutions};

fn main() -> dalab::Result<()> {
    let gammas = gamma_matrices();
    println!("Clifford residual {:.1e}", gammas.clifford_residual());

    for sol in rest_frame_solutions(1.0)? {
        let j = probability_current(&sol).j;
        println!("rest u{}  E = {:+.1}  Dirac residual {:.1e}  j0 = {}", sol.index, sol.energy, sol.dirac_residual(&gammas), j[0]);
    }

    let p = [0.5, 0.0, 0.0];
    for sign in [1, -1] {
        for spin in [1, 2] {
            let sol = plane_wave_solution(p, 1.0, sign, spin)?;
            let j = probability_current(&sol).j;
            println!(
                "p = 0.5  E = {:+.6}  spin {spin}  j = [{:.6}, {:+.6}, {:.1}, {:.1}]  j1*p1 = {:+.6}",
                sol.energy, j[0], j[1], j[2], j[3], j[1] * p[0]
            );
        }
    }
    Ok(())
}
