//! Build s, G and g for a shape and print them in the monomial basis.
//!
//!     cargo run --example polynomials -- 3,2/1 3

use skewgroth::{dual_grothendieck, grothendieck, schur, SkewShape};

fn main() -> skewgroth::Result<()> {
    let mut args = std::env::args().skip(1);
    let s: SkewShape = args.next().unwrap_or_else(|| "3,2/1".into()).parse()?;
    let vars = args.next().map_or(Ok(3), |v| v.parse()).expect("number of variables");

    let sp = schur(&s, vars);
    println!("s_{s} in {vars} variables ({}):\n{sp}\n", sp.evidence());

    let g = dual_grothendieck(&s, vars);
    println!("g_{s} ({}):\n{g}\n", g.evidence());
    println!("lowest degree part equals s: {}", g.homogeneous_part(s.num_cells()).equal(&sp).equal);

    let big = grothendieck(&s, vars, s.num_cells() + 2)?;
    println!("\nG_{s} up to degree {} ({}):\n{big}", s.num_cells() + 2, big.evidence());
    Ok(())
}
