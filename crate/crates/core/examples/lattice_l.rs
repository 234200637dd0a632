//! The lattice L of a vector space, its atoms, the atom partition, the
//! compressed lattice [L] and the dual lattice.
//!
//! ```text
//! cargo run --example lattice_l -- 3 2
//! ```

use component_graphs::io::poset_to_dot;
use component_graphs::order::{atom_partition, build_l, compress};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>());
    let q = args.next().unwrap_or(Ok(3))?;
    let n = args.next().unwrap_or(Ok(2))?;

    let l = build_l(q, n)?;
    let p = l.poset();
    println!("L has {} elements, 0 = {:?}, 1 = {:?}", l.len(), p.label(l.zero()), p.label(l.one()));
    let atoms: Vec<&str> = p.atoms()?.into_iter().map(|a| p.label(a)).collect();
    println!("atoms: {atoms:?}");
    println!("0-distributive: {}, 1-distributive: {}", l.is_0_distributive(), l.is_1_distributive());

    for class in atom_partition(p)? {
        let members: Vec<&str> = class.members.iter().map(|&m| p.label(m)).collect();
        println!("class {:<8} {members:?}", class.key.to_string());
    }

    let c = compress(p)?;
    println!("[L] has {} elements", c.len());

    let dual = l.dual();
    let dual_atoms: Vec<&str> = dual.poset().atoms()?.into_iter().map(|a| dual.poset().label(a)).collect();
    println!("atoms of the dual: {dual_atoms:?}");

    if l.len() <= 12 {
        print!("{}", poset_to_dot(p));
    }
    Ok(())
}
