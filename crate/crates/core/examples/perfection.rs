//! Chordality and perfection of IG and UG, with certificates, plus the
//! clique and chromatic numbers.
//!
//! ```text
//! cargo run --release --example perfection -- 2 5
//! ```

use component_graphs::props::{
    chromatic_number, clique_number, is_chordal, is_perfect, ChordalCertificate, PerfectCertificate,
};
use component_graphs::vspace::{build_ig, build_ug};
use component_graphs::Graph;

fn report(name: &str, g: &Graph) -> Result<(), Box<dyn std::error::Error>> {
    let labels = |vs: &[usize]| vs.iter().map(|&v| g.label(v).to_owned()).collect::<Vec<_>>();
    let chordal = is_chordal(g);
    match &chordal.certificate {
        ChordalCertificate::EliminationOrder(_) => println!("{name}: chordal"),
        ChordalCertificate::ChordlessCycle(c) => println!("{name}: not chordal, hole {:?}", labels(c)),
    }
    let perfect = is_perfect(g, 64)?;
    match &perfect.certificate {
        None => println!("{name}: perfect (twin kernel of {} vertices)", perfect.kernel_order),
        Some(PerfectCertificate::OddHole(c)) => println!("{name}: odd hole {:?}", labels(c)),
        Some(PerfectCertificate::OddAntihole(c)) => println!("{name}: odd antihole {:?}", labels(c)),
    }
    if g.order() <= 128 {
        println!("{name}: omega = {}, chi = {}", clique_number(g, 128)?, chromatic_number(g, 128)?);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>());
    let q = args.next().unwrap_or(Ok(2))?;
    let n = args.next().unwrap_or(Ok(4))?;
    report("IG", &build_ig(q, n)?)?;
    report("UG", &build_ug(q, n)?)
}
