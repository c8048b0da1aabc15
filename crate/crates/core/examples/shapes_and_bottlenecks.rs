//! Parse a skew shape, look at it from a few angles, and list its
//! bottleneck invariants.
//!
//!     cargo run --example shapes_and_bottlenecks -- 5,5,4,2,2,2/4,2,1,1,1

use skewgroth::SkewShape;

fn main() -> skewgroth::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "5,5,4,2,2,2/4,2,1,1,1".into());
    let s: SkewShape = arg.parse()?;

    println!("shape      {s}");
    println!("cells      {}, rows {}, columns {}", s.num_cells(), s.rows(), s.cols());
    println!("connected  {}", s.is_connected());
    println!("rotated    {}", s.rotate180());
    println!("transposed {}", s.transpose());
    if let Some(r) = s.ribbon_view() {
        println!("ribbon     {r}");
    }

    let p = s.bottleneck_profile(3)?;
    println!("\nb          {:?}  (total {})", p.b, p.total());
    for (w, v) in &p.wide {
        println!("b({w})       {v:?}");
    }
    println!("pair sums  {:?}", p.pair_sums);
    for (k, v) in &p.overlaps {
        println!("overlap {k}  {v:?}");
    }
    Ok(())
}
