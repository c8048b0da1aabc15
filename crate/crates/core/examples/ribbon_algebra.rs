//! Ribbons: composition, irreducible factorization, and the binomial
//! expansion of g into ribbon Schur functions.

use skewgroth::ribbons::ribbon;
use skewgroth::Ribbon;

fn main() -> skewgroth::Result<()> {
    let a = ribbon(&[1, 2]);
    let b = ribbon(&[2, 1]);
    let c = a.compose(&b);
    println!("{a} ∘ {b} = {c}");
    println!("factorization of {c}: {}", c.irreducible_factorization());
    println!("reverse {}, transpose {}", c.reverse(), c.transpose());

    let r: Ribbon = "[3,2]".parse()?;
    println!("\ng of {r} in ribbon Schur functions:");
    for (k, coeff) in r.g_schur_expansion() {
        println!("  {coeff} s{k}  columns {}", k.column_string());
    }

    for size in 1..=6 {
        let ribbons = Ribbon::all_of_size(size);
        let classes = ribbons.iter().filter(|r| **r <= r.reverse()).count();
        println!("size {size}: {} ribbons, {classes} g-classes", ribbons.len());
    }
    Ok(())
}
