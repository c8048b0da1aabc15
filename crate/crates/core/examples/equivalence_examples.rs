//! Pairs of shapes that separate s, g and G.

use skewgroth::equivalence::{self, obstructions};
use skewgroth::{coefficient, ExponentVector, Family, SkewShape};

fn shape(s: &str) -> SkewShape {
    s.parse().expect("valid shape")
}

fn main() -> skewgroth::Result<()> {
    // s agrees, g does not: the bottleneck filter rejects
    let (a, b) = (shape("6,5,5,3,2,2/4,2,1,1"), shape("6,5,5,4,4,2/4,3,3,1"));
    let s = equivalence::schur_equivalent(&a, &b, 5);
    let g = equivalence::g_equivalent(&a, &b, 8);
    println!("{a} vs {b}");
    println!("  s equal: {} ({})", s.verdict.equal, s.verdict.evidence);
    println!("  g equal: {} ({}), witness {}", g.verdict.equal, g.verdict.evidence, g.obstruction.map(|o| o.to_string()).unwrap_or_default());

    // g agrees, G does not
    let (a, b) = (shape("8,6,4,2/4,1"), shape("8,6,4,2/3,2"));
    let e: ExponentVector = "x1^6 x2^6 x3^3 x4".parse()?;
    let g = equivalence::g_equivalent(&a, &b, a.num_cells());
    println!("\n{a} vs {b}");
    println!("  g equal: {} ({})", g.verdict.equal, g.verdict.evidence);
    println!(
        "  G coefficient of {e}: {} vs {}",
        coefficient(Family::Grothendieck, &a, &e),
        coefficient(Family::Grothendieck, &b, &e)
    );

    // G agrees in low degree, g does not
    let (a, b) = (shape("8,6,4,2/3,3,1"), shape("8,6,4,2/5,1,1"));
    let big = equivalence::G_equivalent(&a, &b, 4, a.num_cells() + 1)?;
    println!("\n{a} vs {b}");
    println!("  G equal: {} ({})", big.verdict.equal, big.verdict.evidence);
    for o in obstructions(Family::DualGrothendieck, &a, &b) {
        println!("  g obstruction: {o}");
    }
    Ok(())
}
