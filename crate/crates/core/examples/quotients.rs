//! Twin quotients: the reduced graph IG_red and the neighbourhood quotient
//! [UG], compared with the Boolean zero-divisor graph.
//!
//! ```text
//! cargo run --example quotients -- 3 3
//! ```

use component_graphs::props::are_isomorphic;
use component_graphs::quotient::{neighborhood_quotient_with_classes, reduce_with_classes};
use component_graphs::vspace::{build_ig, build_ug};
use component_graphs::zdg::{complete, join, ring_zdg};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>());
    let q = args.next().unwrap_or(Ok(3))?;
    let n = args.next().unwrap_or(Ok(3))?;

    let ig = build_ig(q, n)?;
    let red = reduce_with_classes(&ig)?;
    println!("IG: {} vertices -> IG_red: {} vertices", ig.order(), red.graph.order());
    for (c, members) in red.classes.iter().enumerate().filter(|(_, m)| m.len() > 1) {
        let labels: Vec<&str> = members.iter().map(|&m| ig.label(m)).collect();
        println!("  {} <- {labels:?}", red.graph.label(c));
    }

    let ug = build_ug(q, n)?;
    let quot = neighborhood_quotient_with_classes(&ug);
    println!("UG: {} vertices -> [UG]: {} vertices", ug.order(), quot.graph.order());

    let z2 = ring_zdg(2, n)?;
    let k1 = complete(["k"])?;
    let iso = are_isomorphic(&red.graph, &join(&z2.complement(), &k1), 256)?;
    println!("IG_red isomorphic to Gammac(Z2^{n}) + K1: {}", iso.is_some());
    Ok(())
}
