//! The nonzero component graph IG and the component union graph UG of
//! GF(q)^n, with vertex degrees grouped by skeleton.
//!
//! ```text
//! cargo run --example component_graphs -- 3 2
//! ```

use component_graphs::io::graph_to_json;
use component_graphs::vspace::{build_ig, build_ug, partition_classes};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>());
    let q = args.next().unwrap_or(Ok(3))?;
    let n = args.next().unwrap_or(Ok(2))?;

    let ig = build_ig(q, n)?;
    let ug = build_ug(q, n)?;
    println!("IG(GF({q})^{n}): {} vertices, {} edges", ig.order(), ig.size());
    println!("UG(GF({q})^{n}): {} vertices, {} edges", ug.order(), ug.size());

    println!("skeleton  vectors  deg IG  deg UG");
    for (skeleton, vectors) in partition_classes(q, n)? {
        if skeleton.is_empty() {
            continue;
        }
        let v = ig.index_of(&vectors[0].label()).expect("nonzero vector");
        println!("{:<9} {:>7} {:>7} {:>7}", skeleton.to_string(), vectors.len(), ig.degree(v), ug.degree(v));
    }

    if ig.order() <= 16 {
        print!("IG as JSON: {}", graph_to_json(&ig));
    }
    Ok(())
}
