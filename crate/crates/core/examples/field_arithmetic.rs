//! Arithmetic in GF(9): the multiplication table, inverses and the
//! Frobenius map `x -> x^3`.
//!
//! ```text
//! cargo run --example field_arithmetic -- 9
//! ```

use component_graphs::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = std::env::args().nth(1).map_or(Ok(9), |s| s.parse())?;
    let f = Field::new(q)?;
    println!("GF({q}): characteristic {}, degree {}", f.characteristic(), f.degree());

    print!("  *|");
    for b in f.elements() {
        print!("{b:>3}");
    }
    println!();
    for a in f.elements() {
        print!("{a:>3}|");
        for b in f.elements() {
            print!("{:>3}", f.mul(a, b));
        }
        println!();
    }

    for a in f.elements().skip(1) {
        let inv = f.inv(a).expect("nonzero elements are invertible");
        let frob = (1..f.characteristic()).fold(a, |x, _| f.mul(x, a));
        println!("{a:>3}: inverse {inv:>3}, Frobenius image {frob:>3}");
    }
    Ok(())
}
