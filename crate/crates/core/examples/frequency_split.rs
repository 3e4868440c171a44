//! The i epsilon frequency integral of a single mode, split into its principal
//! part and its delta-function part.

use dalab::propagators::{feynman_mode_closed_form, verify_frequency_split, FrequencyIntegralSpec};

fn main() -> dalab::Result<()> {
    for (w, t) in [(1.0, 0.0), (1.0, 2.0), (2.0, -1.0), (0.5, 4.0)] {
        let spec = FrequencyIntegralSpec {
            mode_frequency: w,
            time: t,
            epsilon: 1e-6,
            frequency_cutoff: 200.0,
        };
        let split = verify_frequency_split(&spec, 1e-3)?;
        let exact = feynman_mode_closed_form(w, t);
        println!("omega = {w}, t = {t:+}");
        println!("  full        {:+.8} {:+.8}i  (closed form {:+.8} {:+.8}i)", split.full.re, split.full.im, exact.re, exact.im);
        println!("  principal   {:+.8} {:+.8}i", split.pp_part.re, split.pp_part.im);
        println!("  delta       {:+.8} {:+.8}i", split.delta_part.re, split.delta_part.im);
        println!("  reassembly  {:.2e}", split.residual);
    }
    Ok(())
}
