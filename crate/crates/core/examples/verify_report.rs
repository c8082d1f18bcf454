//! Runs the verification suite in-process and writes its JSON report.
//!
//! ```bash
//! cargo run --release --example verify_report -- target/verify.json
//! ```

use hitchin_lattice::cli::{run_verify, RunConfig};

fn main() -> hitchin_lattice::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "verify_report.json".into());
    let cfg = RunConfig { pairs: 25, ..RunConfig::default() };
    let report = run_verify(&cfg)?;

    for (name, check) in &report.checks {
        let mark = if check.pass { "ok  " } else { "FAIL" };
        println!("{mark} {name:<28} {:>10.2e} <= {:.0e}", check.measured, check.tolerance);
    }
    for (suite, secs) in &report.timing {
        println!("{suite:<16} {secs:.3}s");
    }
    std::fs::write(&path, report.to_json())?;
    println!("wrote {path}; pass = {}", report.pass);
    Ok(())
}
