//! [P, Psi] against i times the central difference of Psi: the residual
//! shrinks with the square of the step.

use dalab::suite::{translation_convergence, SuiteConfig, TRANSLATION_STEPS};

fn main() -> dalab::Result<()> {
    let (residuals, order) = translation_convergence(&SuiteConfig::default())?;
    for (dx, r) in TRANSLATION_STEPS.iter().zip(&residuals) {
        println!("dx = {dx:<6} residual = {r:.6e}");
    }
    println!("fitted order {order:.4}");
    Ok(())
}
