//! IG(GF(q)^n) is isomorphic to the complement of the ring zero-divisor
//! graph joined with K_t; print the isomorphism found.
//!
//! ```text
//! cargo run --example isomorphism -- 2 3
//! ```

use component_graphs::props::{are_isomorphic, is_isomorphism};
use component_graphs::vspace::{build_ig, partition_classes};
use component_graphs::zdg::{complete, join, ring_zdg};
use component_graphs::IndexSet;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>());
    let q = args.next().unwrap_or(Ok(2))?;
    let n = args.next().unwrap_or(Ok(3))?;

    let ig = build_ig(q, n)?;
    let units = complete(partition_classes(q, n)?[&IndexSet::full(n)].iter().map(|v| format!("u{}", v.label())))?;
    let target = join(&ring_zdg(q, n)?.complement(), &units);

    match are_isomorphic(&ig, &target, 256)? {
        Some(map) => {
            assert!(is_isomorphism(&ig, &target, &map));
            for (v, &w) in map.iter().enumerate() {
                println!("{:>6} -> {}", ig.label(v), target.label(w));
            }
        }
        None => println!("not isomorphic"),
    }
    Ok(())
}
