//! Group all shapes of a given size by their polynomial.
//!
//!     cargo run --release --example coincidence_search -- 7 g

use skewgroth::equivalence::search::{search_coincidences_with, SearchBudget, ShapeClass};
use skewgroth::Family;

fn main() -> skewgroth::Result<()> {
    let mut args = std::env::args().skip(1);
    let cells = args.next().map_or(Ok(6), |v| v.parse()).expect("cell count");
    let family: Family = args.next().unwrap_or_else(|| "g".into()).parse()?;

    let budget = SearchBudget::new(family);
    let report = search_coincidences_with(cells, ShapeClass::Skew, &budget, |class| {
        if !class.is_singleton() {
            let members: Vec<_> = class.shapes.iter().map(ToString::to_string).collect();
            println!("{}", members.join("  "));
        }
    });
    let nontrivial = report.classes.iter().filter(|c| !c.is_singleton()).count();
    println!(
        "\n{} shapes of {cells} cells, {} classes for {family}, {nontrivial} with more than one shape",
        report.shapes,
        report.classes.len()
    );
    Ok(())
}
