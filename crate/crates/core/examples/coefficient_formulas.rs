//! Compare closed-form two-variable coefficients of g with enumeration.
//!
//!     cargo run --example coefficient_formulas -- 5,5,4,2,2,2/4,2,1,1,1

use skewgroth::equivalence::formulas::{self, CoeffFormulaReport, Formula};
use skewgroth::SkewShape;

fn main() -> skewgroth::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "5,5,4,2,2,2/4,2,1,1,1".into());
    let s: SkewShape = arg.parse()?;
    let n = s.cols();

    println!("{s}: n = {n}, b = {:?}", s.bottlenecks());
    for f in Formula::all_for(n) {
        let r = CoeffFormulaReport::new(&s, f)?;
        println!(
            "{:<22} {:<12} closed form {:>4}  enumerated {:>4}  {}",
            f.to_string(),
            r.monomial.to_string(),
            r.closed_form,
            r.brute_force,
            if r.agrees { "ok" } else { "DIFFERS" }
        );
    }
    if n >= 3 {
        println!("adjusted x1^3 x2^(n-1): {}", formulas::coeff_x1cube_x2nm1_adjusted(&s)?);
    }

    let sweep = formulas::sweep(7, SkewShape::is_connected, |f| f == Formula::CubeTimesNMinusOne);
    println!("\nx1^3 x2^(n-1) on connected shapes up to 7 cells: {} checked, {} differ", sweep.checked, sweep.discrepancies.len());
    for r in sweep.discrepancies.iter().take(5) {
        println!("  {}: {} vs {}", r.shape, r.closed_form, r.brute_force);
    }
    Ok(())
}
