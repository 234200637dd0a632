//! Zero-divisor graphs of posets and of the rings F^n, and the labelled
//! identities IG = G^c(L) + K_t and UG = G(L^dual) + K_t.
//!
//! ```text
//! cargo run --example zero_divisor_graphs -- 3 3
//! ```

use component_graphs::order::{boolean_lattice, build_l, chain};
use component_graphs::props::graphs_equal_labeled;
use component_graphs::vspace::{build_ig, build_ug, partition_classes};
use component_graphs::zdg::{complete, join, ring_zdg, zdg_poset};
use component_graphs::IndexSet;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>());
    let q = args.next().unwrap_or(Ok(3))?;
    let n = args.next().unwrap_or(Ok(3))?;

    let b3 = zdg_poset(&boolean_lattice(3))?.graph;
    println!("G(2^3): {} vertices, {} edges", b3.order(), b3.size());
    println!("G(chain of 3) is trivial: {}", zdg_poset(&chain(3))?.trivial);
    let ring = ring_zdg(q, n)?;
    println!("Gamma(GF({q})^{n}): {} vertices, {} edges", ring.order(), ring.size());

    let l = build_l(q, n)?;
    let gl = zdg_poset(l.poset())?.graph;
    let gl_dual = zdg_poset(l.dual().poset())?.graph;
    let full = &partition_classes(q, n)?[&IndexSet::full(n)];
    let kt = complete(full.iter().map(|v| v.label()))?;
    println!("t = {}", kt.order());

    let ig = graphs_equal_labeled(&build_ig(q, n)?, &join(&gl.complement(), &kt));
    let ug = graphs_equal_labeled(&build_ug(q, n)?, &join(&gl_dual, &kt));
    println!("IG = Gc(L) + Kt: {ig:?}");
    println!("UG = G(Ldual) + Kt: {ug:?}");
    Ok(())
}
