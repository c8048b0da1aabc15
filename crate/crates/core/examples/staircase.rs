//! Compare every skew shape inside a staircase with its transpose.
//!
//!     cargo run --release --example staircase -- 5

use skewgroth::equivalence::search::{check_staircase, StaircaseBudget};

fn main() -> skewgroth::Result<()> {
    let n = std::env::args().nth(1).map_or(Ok(4), |v| v.parse()).expect("staircase size");
    let report = check_staircase(n, StaircaseBudget::default())?;
    for c in &report.checks {
        let mark = if c.holds() { "" } else { "  <-- differs" };
        println!("mu = {:<10} g {:<5} G {:<5}{mark}", c.inner.to_string(), c.g.verdict.equal, c.big_g.verdict.equal);
    }
    println!("{} inner shapes, {} violations", report.checks.len(), report.violations);
    Ok(())
}
