use crate::graph::Graph;
use crate::index_set::IndexSet;
use crate::order::{
    all_lattices, annihilator_class_order, build_boolean_vlattice, build_l_by_chain_replacement, compress, Lattice,
};
use crate::props::{
    are_isomorphic, diameter, distances_from, graphs_equal_labeled, is_chordal, is_perfect, max_clique,
    optimal_coloring, ChordalCertificate, LabeledEquality, PerfectCertificate, PropsError,
};
use crate::quotient::QuotientError;

use super::{Caps, CheckId, GraphName, Instance, Status, VerifyError, Witness};

#[derive(Debug, Default)]
pub(super) struct Outcome {
    failures: Vec<Witness>,
    evidence: Vec<Witness>,
    notes: Vec<String>,
    skipped: Vec<String>,
}

impl Outcome {
    pub(super) fn fail(&mut self, w: Witness) {
        self.failures.push(w);
    }

    fn evidence(&mut self, w: Witness) {
        self.evidence.push(w);
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn skip(&mut self, reason: String) {
        self.skipped.push(reason);
    }

    pub(super) fn finish(self) -> (Status, String, Vec<Witness>) {
        let mut text = self.skipped.clone();
        text.extend(self.notes);
        let detail = text.join("; ");
        if !self.failures.is_empty() {
            (Status::Fail, detail, self.failures)
        } else if !self.skipped.is_empty() {
            (Status::Skipped, detail, self.evidence)
        } else {
            (Status::Pass, detail, self.evidence)
        }
    }
}

pub(super) fn run(inst: &Instance, check: CheckId, caps: &Caps) -> Result<Outcome, VerifyError> {
    let mut o = Outcome::default();
    match check {
        CheckId::Igv => igv(&mut o, inst)?,
        CheckId::Ugv => labeled(&mut o, inst, GraphName::Ug, GraphName::GLDualJoinKt)?,
        CheckId::GammaIso => isomorphic(&mut o, inst, GraphName::Ig, GraphName::RingCJoinKt, caps)?,
        CheckId::Reduced => reduced(&mut o, inst, caps)?,
        CheckId::BooleanCompress => boolean_compress(&mut o, inst, caps)?,
        CheckId::ChainReplace => chain_replace(&mut o, inst)?,
        CheckId::Lemma22 => {
            lemma22(&mut o, &inst.l, &inst.gl, GraphName::GL, "L")?;
            lemma22(&mut o, &inst.l_dual, &inst.gl_dual, GraphName::GLDual, "Ldual")?;
        }
        CheckId::ChordalCor => chordal_cor(&mut o, inst)?,
        CheckId::PerfectCor => perfect_cor(&mut o, inst, caps)?,
        CheckId::Diameter => diameters(&mut o, inst)?,
        CheckId::WeaklyPerfect => {
            for name in [GraphName::Ig, GraphName::Ug] {
                weakly_perfect(&mut o, inst, name, caps)?;
            }
        }
    }
    Ok(o)
}

fn names(g: &Graph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.label(v).to_owned()).collect()
}

/// The graph being quotiented when `name` is a reduction.
fn reduced_source(name: GraphName) -> GraphName {
    match name {
        GraphName::IgRed => GraphName::Ig,
        GraphName::GcLRed => GraphName::GcL,
        other => other,
    }
}

/// Fetches a graph, turning a non-transitive twin relation into a failure.
fn fetch(o: &mut Outcome, inst: &Instance, name: GraphName) -> Result<Option<Graph>, VerifyError> {
    match inst.graph(name) {
        Ok(g) => Ok(Some(g)),
        Err(VerifyError::Quotient(QuotientError::NonTransitive(a, b, c))) => {
            o.fail(Witness::NonTransitive { graph: reduced_source(name), a, b, c });
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

fn labeled(o: &mut Outcome, inst: &Instance, left: GraphName, right: GraphName) -> Result<(), VerifyError> {
    let (Some(g), Some(h)) = (fetch(o, inst, left)?, fetch(o, inst, right)?) else {
        return Ok(());
    };
    match graphs_equal_labeled(&g, &h) {
        LabeledEquality::Equal => {
            o.note(format!("{left} = {right}: {} vertices, {} edges", g.order(), g.size()));
        }
        LabeledEquality::VertexMismatch { label, .. } => o.fail(Witness::VertexMismatch { left, right, label }),
        LabeledEquality::EdgeMismatch { a, b, .. } => o.fail(Witness::EdgeMismatch { left, right, a, b }),
    }
    Ok(())
}

fn isomorphic(
    o: &mut Outcome,
    inst: &Instance,
    from: GraphName,
    to: GraphName,
    caps: &Caps,
) -> Result<(), VerifyError> {
    let (Some(g), Some(h)) = (fetch(o, inst, from)?, fetch(o, inst, to)?) else {
        return Ok(());
    };
    match are_isomorphic(&g, &h, caps.iso) {
        Ok(Some(map)) => {
            o.note(format!("{from} ~ {to}: {} vertices, {} edges", g.order(), g.size()));
            let pairs = map.iter().enumerate().map(|(u, &v)| (g.label(u).to_owned(), h.label(v).to_owned())).collect();
            o.evidence(Witness::Isomorphism { from, to, pairs });
        }
        Ok(None) => o.fail(Witness::NotIsomorphic { left: from, right: to }),
        Err(PropsError::TooLarge { order, cap }) => {
            o.skip(format!("{from} vs {to}: order {order} exceeds isomorphism cap {cap}"))
        }
    }
    Ok(())
}

fn igv(o: &mut Outcome, inst: &Instance) -> Result<(), VerifyError> {
    let t = (inst.q - 1).pow(inst.n as u32);
    if inst.units.order() != t {
        o.fail(Witness::Value {
            quantity: "t".into(),
            expected: t.to_string(),
            actual: inst.units.order().to_string(),
        });
    }
    labeled(o, inst, GraphName::Ig, GraphName::GcLJoinKt)
}

fn reduced(o: &mut Outcome, inst: &Instance, caps: &Caps) -> Result<(), VerifyError> {
    isomorphic(o, inst, GraphName::IgRed, GraphName::BoolRingCJoinK1, caps)?;
    isomorphic(o, inst, GraphName::UgQuotient, GraphName::BoolRingJoinKt, caps)?;
    labeled(o, inst, GraphName::GcLRed, GraphName::GcCompressed)?;
    labeled(o, inst, GraphName::GLQuotient, GraphName::GCompressed)?;
    labeled(o, inst, GraphName::GLDualQuotient, GraphName::GCompressedDual)
}

fn boolean_compress(o: &mut Outcome, inst: &Instance, caps: &Caps) -> Result<(), VerifyError> {
    let expected = 1usize << inst.n;
    for (lattice, structure, graph) in
        [(&inst.l, "L", GraphName::GCompressed), (&inst.l_dual, "Ldual", GraphName::GCompressedDual)]
    {
        let comp = compress(lattice)?;
        if comp.len() != expected {
            o.fail(Witness::Value {
                quantity: format!("|[{structure}]|"),
                expected: expected.to_string(),
                actual: comp.len().to_string(),
            });
        }
        let boolean = Lattice::from_poset(comp.poset.clone()).is_ok_and(|c| c.is_boolean());
        if !boolean {
            o.fail(Witness::Value {
                quantity: format!("[{structure}] is a Boolean lattice"),
                expected: "true".into(),
                actual: "false".into(),
            });
        }
        isomorphic(o, inst, graph, GraphName::BoolRing, caps)?;
    }

    // [L] against [V], matching the class keyed I with V_I
    let comp = compress(&inst.l)?;
    let v = build_boolean_vlattice(inst.q, inst.n)?;
    let image: Vec<Option<usize>> = comp.classes.iter().map(|c| v.index_of(&format!("V{}", c.key))).collect();
    'outer: for i in 0..comp.len() {
        for j in 0..comp.len() {
            let (Some(vi), Some(vj)) = (image[i], image[j]) else {
                o.fail(Witness::Value {
                    quantity: "class keys of [L]".into(),
                    expected: "subsets of {1..n}".into(),
                    actual: comp.classes[if image[i].is_none() { i } else { j }].key.to_string(),
                });
                break 'outer;
            };
            if comp.poset.leq(i, j) != v.leq(vi, vj) {
                o.fail(Witness::OrderMismatch {
                    structure: "[L] vs [V]".into(),
                    a: comp.poset.label(i).to_owned(),
                    b: comp.poset.label(j).to_owned(),
                });
                break 'outer;
            }
        }
    }
    o.note(format!("[L] and [Ldual] have {expected} classes"));
    Ok(())
}

fn chain_replace(o: &mut Outcome, inst: &Instance) -> Result<(), VerifyError> {
    let rebuilt = build_l_by_chain_replacement(inst.q, inst.n)?;
    if !rebuilt.same_labeled_order(&inst.l) {
        let mismatch = (0..inst.l.len()).find_map(|a| {
            let ra = rebuilt.index_of(inst.l.label(a))?;
            (0..inst.l.len())
                .find(|&b| rebuilt.index_of(inst.l.label(b)).is_some_and(|rb| rebuilt.leq(ra, rb) != inst.l.leq(a, b)))
                .map(|b| (a, b))
        });
        o.fail(match mismatch {
            Some((a, b)) => Witness::OrderMismatch {
                structure: "L vs chain replacement in [V]".into(),
                a: inst.l.label(a).to_owned(),
                b: inst.l.label(b).to_owned(),
            },
            None => Witness::Value {
                quantity: "elements of L by chain replacement".into(),
                expected: inst.l.len().to_string(),
                actual: rebuilt.len().to_string(),
            },
        });
    }
    distributive(o, &inst.l, "L", true, true);

    let corpus = all_lattices(6);
    let mut replacements = 0;
    for (k, lat) in corpus.iter().enumerate() {
        let (d0, d1) = (lat.is_0_distributive(), lat.is_1_distributive());
        for x in 0..lat.len() {
            match lat.chain_replace(x, 1) {
                Ok(same) if same.same_labeled_order(lat) => {}
                _ => o.fail(Witness::Value {
                    quantity: format!("lattice #{k} with {} replaced by a 1-chain", lat.label(x)),
                    expected: "unchanged".into(),
                    actual: "changed".into(),
                }),
            }
            for m in [2, 3] {
                let structure = format!("lattice #{k} with {} replaced by a {m}-chain", lat.label(x));
                match lat.chain_replace(x, m) {
                    Ok(r) => distributive(o, &r, &structure, d0, d1),
                    Err(e) => o.fail(Witness::Value {
                        quantity: structure,
                        expected: "lattice".into(),
                        actual: e.to_string(),
                    }),
                }
                replacements += 1;
            }
        }
    }
    o.note(format!("{replacements} chain replacements over {} lattices with at most 6 elements", corpus.len()));
    Ok(())
}

fn distributive(o: &mut Outcome, lat: &Lattice, structure: &str, zero: bool, one: bool) {
    let found =
        [(zero, false, lat.find_0_distributivity_violation()), (one, true, lat.find_1_distributivity_violation())];
    for (wanted, dual, violation) in found {
        if let (true, Some((a, b, c))) = (wanted, violation) {
            o.fail(Witness::Distributivity {
                structure: structure.to_owned(),
                dual,
                a: lat.label(a).to_owned(),
                b: lat.label(b).to_owned(),
                c: lat.label(c).to_owned(),
            });
        }
    }
}

fn lemma22(o: &mut Outcome, lat: &Lattice, g: &Graph, name: GraphName, structure: &str) -> Result<(), VerifyError> {
    let comp = compress(lat)?;
    let class: Vec<usize> = (0..g.order())
        .map(|v| {
            lat.index_of(g.label(v)).map(|x| comp.class_of(x)).ok_or_else(|| {
                VerifyError::Config(format!("vertex {:?} of {name} is not an element of {structure}", g.label(v)))
            })
        })
        .collect::<Result<_, _>>()?;
    let key = |v: usize| comp.classes[class[v]].key;

    let adjacency = (0..g.order())
        .find_map(|u| (u + 1..g.order()).find(|&v| g.has_edge(u, v) != key(u).is_disjoint(key(v))).map(|v| (u, v)));
    if let Some((u, v)) = adjacency {
        o.fail(Witness::Adjacency {
            graph: name,
            a: g.label(u).to_owned(),
            b: g.label(v).to_owned(),
            expected_adjacent: key(u).is_disjoint(key(v)),
        });
    }

    let uneven = (0..g.order())
        .find_map(|u| (u + 1..g.order()).find(|&v| class[u] == class[v] && g.degree(u) != g.degree(v)).map(|v| (u, v)));
    if let Some((u, v)) = uneven {
        o.fail(Witness::Degrees { graph: name, a: g.label(u).to_owned(), b: g.label(v).to_owned() });
    }

    let mut atom_classes: Vec<usize> = lat.atoms()?.into_iter().map(|a| comp.class_of(a)).collect();
    atom_classes.sort_unstable();
    atom_classes.dedup();
    let compressed_atoms = comp.poset.atoms()?;
    if atom_classes != compressed_atoms {
        let show = |v: &[usize]| format!("{:?}", v.iter().map(|&c| comp.poset.label(c)).collect::<Vec<_>>());
        o.fail(Witness::Value {
            quantity: format!("atoms of [{structure}]"),
            expected: show(&atom_classes),
            actual: show(&compressed_atoms),
        });
    }

    let by_annihilator = annihilator_class_order(lat, &comp)?;
    let disagreement = (0..comp.len())
        .find_map(|i| (0..comp.len()).find(|&j| by_annihilator[i][j] != comp.poset.leq(i, j)).map(|j| (i, j)));
    if let Some((i, j)) = disagreement {
        o.fail(Witness::OrderMismatch {
            structure: format!("[{structure}] by annihilators vs by atom keys"),
            a: comp.poset.label(i).to_owned(),
            b: comp.poset.label(j).to_owned(),
        });
    }
    o.note(format!("{structure}: {} classes over {} vertices", comp.len() - 1, g.order()));
    Ok(())
}

/// Atom count and atom-class sizes of a poset whose compression is Boolean.
fn atom_profile(o: &mut Outcome, lat: &Lattice, structure: &str) -> Result<(usize, Vec<usize>), VerifyError> {
    let comp = compress(lat)?;
    if !Lattice::from_poset(comp.poset.clone()).is_ok_and(|c| c.is_boolean()) {
        o.fail(Witness::Value {
            quantity: format!("[{structure}] is a Boolean lattice"),
            expected: "true".into(),
            actual: "false".into(),
        });
    }
    let k = lat.atoms()?.len();
    let sizes = (1..=k)
        .map(|i| comp.class_with_key(IndexSet::from_members([i])).map_or(0, |c| comp.classes[c].members.len()))
        .collect();
    Ok((k, sizes))
}

fn expect_chordal(o: &mut Outcome, inst: &Instance, name: GraphName, expected: bool) -> Result<(), VerifyError> {
    let g = inst.graph(name)?;
    let r = is_chordal(&g);
    let witness = match r.certificate {
        ChordalCertificate::ChordlessCycle(c) => Witness::Hole { graph: name, vertices: names(&g, &c) },
        ChordalCertificate::EliminationOrder(order) => {
            Witness::EliminationOrder { graph: name, order: names(&g, &order) }
        }
    };
    if r.chordal != expected {
        o.fail(witness);
    } else if !r.chordal {
        o.evidence(witness);
    }
    o.note(format!("{name} {}chordal", if r.chordal { "" } else { "not " }));
    Ok(())
}

fn chordal_cor(o: &mut Outcome, inst: &Instance) -> Result<(), VerifyError> {
    let (q, n) = (inst.q, inst.n);
    expect_chordal(o, inst, GraphName::Ig, n <= 3)?;
    expect_chordal(o, inst, GraphName::Ug, n == 1 || (q == 2 && n <= 3))?;
    for (lat, structure, g, gc) in
        [(&inst.l, "L", GraphName::GL, GraphName::GcL), (&inst.l_dual, "Ldual", GraphName::GLDual, GraphName::GcLDual)]
    {
        let (k, sizes) = atom_profile(o, lat, structure)?;
        let g_chordal = k == 1 || (k == 2 && sizes.contains(&1)) || (k == 3 && sizes.iter().all(|&s| s == 1));
        expect_chordal(o, inst, g, g_chordal)?;
        expect_chordal(o, inst, gc, k <= 3)?;
    }
    Ok(())
}

fn expect_perfect(
    o: &mut Outcome,
    inst: &Instance,
    name: GraphName,
    expected: bool,
    caps: &Caps,
) -> Result<(), VerifyError> {
    let g = inst.graph(name)?;
    let r = match is_perfect(&g, caps.perfect) {
        Ok(r) => r,
        Err(PropsError::TooLarge { order, cap }) => {
            o.skip(format!("{name}: twin kernel of order {order} exceeds perfect cap {cap}"));
            return Ok(());
        }
    };
    let witness = r.certificate.map(|c| match c {
        PerfectCertificate::OddHole(h) => Witness::Hole { graph: name, vertices: names(&g, &h) },
        PerfectCertificate::OddAntihole(h) => Witness::Antihole { graph: name, vertices: names(&g, &h) },
    });
    match (r.perfect == expected, witness) {
        (true, Some(w)) => o.evidence(w),
        (true, None) => {}
        (false, Some(w)) => o.fail(w),
        (false, None) => o.fail(Witness::Value {
            quantity: format!("{name} has an odd hole or antihole"),
            expected: "true".into(),
            actual: format!("false (twin kernel of order {})", r.kernel_order),
        }),
    }
    o.note(format!("{name} {}perfect", if r.perfect { "" } else { "not " }));
    Ok(())
}

fn perfect_cor(o: &mut Outcome, inst: &Instance, caps: &Caps) -> Result<(), VerifyError> {
    let expected = inst.n <= 4;
    expect_perfect(o, inst, GraphName::Ig, expected, caps)?;
    expect_perfect(o, inst, GraphName::Ug, expected, caps)?;
    for (lat, structure, g) in [(&inst.l, "L", GraphName::GL), (&inst.l_dual, "Ldual", GraphName::GLDual)] {
        let (k, _) = atom_profile(o, lat, structure)?;
        expect_perfect(o, inst, g, k <= 4, caps)?;
    }
    Ok(())
}

/// First pair farther apart than `bound`, unreachable pairs included.
fn far_pair(g: &Graph, bound: usize) -> Option<(usize, usize)> {
    (0..g.order()).find_map(|u| {
        let d = distances_from(g, u);
        (u + 1..g.order()).find(|&v| d[v].is_none_or(|x| x > bound)).map(|v| (u, v))
    })
}

fn diameters(o: &mut Outcome, inst: &Instance) -> Result<(), VerifyError> {
    for (name, bound) in [(GraphName::GL, 3), (GraphName::GLDual, 3), (GraphName::Ig, 2), (GraphName::Ug, 2)] {
        let g = inst.graph(name)?;
        if g.is_empty() {
            o.note(format!("{name} has no vertices"));
            continue;
        }
        if let Some((a, b)) = far_pair(&g, bound) {
            o.fail(Witness::Distance { graph: name, a: g.label(a).to_owned(), b: g.label(b).to_owned(), bound });
        } else {
            o.note(format!("diam {name} = {}", diameter(&g).expect("connected")));
        }
    }
    for (&key, &size) in &inst.class_sizes {
        let expected = (inst.q - 1).pow(key.len() as u32);
        if size != expected {
            o.fail(Witness::Value {
                quantity: format!("|V_{key}|"),
                expected: expected.to_string(),
                actual: size.to_string(),
            });
        }
    }
    let (q, n) = (inst.q, inst.n as u32);
    let expected = q.pow(n) - (q - 1).pow(n) - 1;
    if inst.ring.order() != expected {
        o.fail(Witness::Value {
            quantity: "|V(Gamma(F^n))|".into(),
            expected: expected.to_string(),
            actual: inst.ring.order().to_string(),
        });
    }
    Ok(())
}

fn weakly_perfect(o: &mut Outcome, inst: &Instance, name: GraphName, caps: &Caps) -> Result<(), VerifyError> {
    let g = inst.graph(name)?;
    let solved = max_clique(&g, caps.color).and_then(|c| Ok((c, optimal_coloring(&g, caps.color)?)));
    let (clique, coloring) = match solved {
        Ok(x) => x,
        Err(PropsError::TooLarge { order, cap }) => {
            o.skip(format!("{name}: order {order} exceeds colour cap {cap}"));
            return Ok(());
        }
    };
    let chi = coloring.iter().max().map_or(0, |c| c + 1);
    let witness = Witness::CliqueAndColoring {
        graph: name,
        clique: names(&g, &clique),
        coloring: coloring.iter().enumerate().map(|(v, &c)| (g.label(v).to_owned(), c)).collect(),
    };
    o.note(format!("{name}: omega = {}, chi = {chi}", clique.len()));
    if chi == clique.len() {
        o.evidence(witness);
    } else {
        o.fail(witness);
    }
    Ok(())
}
