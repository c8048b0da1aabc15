//! Enumerate the three kinds of fillings on a small shape and walk the
//! lattice-path picture of plane partitions with entries 1 and 2.

use skewgroth::tableaux::{enumerate_rpp, enumerate_ssyt, enumerate_svt, path_to_rpp12, rpp12_to_path};
use skewgroth::SkewShape;

fn main() -> skewgroth::Result<()> {
    let s: SkewShape = "3,2/1".parse()?;

    let ssyt: Vec<_> = enumerate_ssyt(&s, 2)?.collect();
    println!("{} semistandard tableaux of {s} with entries <= 2", ssyt.len());
    for t in &ssyt {
        println!("{t}\nweight {}\n", t.weight());
    }

    let svt = enumerate_svt(&s, 2, s.num_cells() + 1)?.count();
    println!("{svt} set-valued tableaux with entries <= 2 and at most one extra entry");

    let rpp: Vec<_> = enumerate_rpp(&s, 2)?.collect();
    println!("{} reverse plane partitions with entries <= 2\n", rpp.len());
    for f in &rpp {
        let path = rpp12_to_path(f)?;
        assert_eq!(&path_to_rpp12(&path), f);
        println!("{f}\nheights {:?}, interior edges {:?}\n", path.heights(), path.interior_edges());
    }
    Ok(())
}
