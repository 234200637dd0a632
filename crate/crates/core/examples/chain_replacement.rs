//! Replacing an element of a lattice by a chain, over every lattice with at
//! most five elements.
//!
//! ```text
//! cargo run --example chain_replacement
//! ```

use component_graphs::order::all_lattices;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for l in all_lattices(5) {
        let p = l.poset();
        print!("{:<28}", format!("{:?}", p.labels()));
        for x in 0..l.len() {
            let r = l.chain_replace(x, 2)?;
            let kept =
                (!l.is_0_distributive() || r.is_0_distributive()) && (!l.is_1_distributive() || r.is_1_distributive());
            print!(" {}:{}", p.label(x), if kept { "ok" } else { "lost" });
        }
        println!();
    }
    Ok(())
}
