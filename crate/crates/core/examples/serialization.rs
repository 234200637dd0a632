//! JSON and DOT for graphs and posets, with a JSON round trip.
//!
//! ```text
//! cargo run --example serialization
//! ```

use component_graphs::io::{
    graph_from_json, graph_to_dot, graph_to_json, poset_from_json, poset_to_dot, poset_to_json,
};
use component_graphs::order::build_l;
use component_graphs::vspace::build_ug;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ug = build_ug(2, 3)?;
    let json = graph_to_json(&ug);
    print!("{json}{}", graph_to_dot(&ug));
    assert_eq!(graph_from_json(&json)?, ug);

    let l = build_l(3, 2)?.into_poset();
    let json = poset_to_json(&l);
    print!("{json}{}", poset_to_dot(&l));
    assert!(poset_from_json(&json)?.same_labeled_order(&l));
    Ok(())
}
