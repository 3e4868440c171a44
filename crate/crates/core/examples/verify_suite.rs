//! Runs the full verification suite in-process and prints one line per check.

use dalab::suite::{run_all, SuiteConfig};

fn main() -> dalab::Result<()> {
    let records = run_all(&SuiteConfig::default())?;
    for r in &records {
        println!("{}", r.console_line());
    }
    let failed = records.iter().filter(|r| !r.pass).count();
    println!("{} checks, {failed} failed", records.len());
    Ok(())
}
