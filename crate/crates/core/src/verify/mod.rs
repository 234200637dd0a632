//! Machine checks of the identities relating component graphs, the lattice
//! `L`, its dual, and zero-divisor graphs, one `(q, n)` instance at a time.
//!
//! Every check yields an [`Entry`] with a status and witnesses phrased in
//! vertex and element labels, so they can be re-validated against the named
//! graphs of the same [`Instance`].

mod checks;
mod sweep;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{complete, join, Graph};
use crate::index_set::IndexSet;
use crate::order::{build_l, compress, Lattice, OrderError};
use crate::props::{DEFAULT_COLOR_CAP, DEFAULT_ISO_CAP, DEFAULT_PERFECT_CAP};
use crate::quotient::{neighborhood_quotient, reduce, QuotientError};
use crate::vspace::{VectorSpace, VspaceError};
use crate::zdg::{ring_zdg, zdg_poset};

pub use sweep::{parse_grid, run_sweep, run_sweep_with, Report, Summary, SweepConfig};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Vspace(#[from] VspaceError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    Igv,
    Ugv,
    GammaIso,
    Reduced,
    BooleanCompress,
    ChainReplace,
    Lemma22,
    ChordalCor,
    PerfectCor,
    Diameter,
    WeaklyPerfect,
}

impl CheckId {
    pub const ALL: [CheckId; 11] = [
        CheckId::Igv,
        CheckId::Ugv,
        CheckId::GammaIso,
        CheckId::Reduced,
        CheckId::BooleanCompress,
        CheckId::ChainReplace,
        CheckId::Lemma22,
        CheckId::ChordalCor,
        CheckId::PerfectCor,
        CheckId::Diameter,
        CheckId::WeaklyPerfect,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Igv => "igv",
            CheckId::Ugv => "ugv",
            CheckId::GammaIso => "gamma-iso",
            CheckId::Reduced => "reduced",
            CheckId::BooleanCompress => "boolean-compress",
            CheckId::ChainReplace => "chain-replace",
            CheckId::Lemma22 => "lemma22",
            CheckId::ChordalCor => "chordal-cor",
            CheckId::PerfectCor => "perfect-cor",
            CheckId::Diameter => "diameter",
            CheckId::WeaklyPerfect => "weakly-perfect",
        }
    }

    /// One-line statement of what the check establishes.
    pub fn claim(self) -> &'static str {
        match self {
            CheckId::Igv => "IG(V) = Gc(L) + K_t as labelled graphs",
            CheckId::Ugv => "UG(V) = G(L^d) + K_t as labelled graphs",
            CheckId::GammaIso => "IG(V) is isomorphic to Gammac(F^n) + K_t",
            CheckId::Reduced => {
                "IG_red ~ Gammac(Z2^n) + K_1, [UG] ~ Gamma(Z2^n) + K_t, and the labelled quotient identities"
            }
            CheckId::BooleanCompress => "[L] is Boolean with 2^n classes and G([L]) ~ Gamma(Z2^n)",
            CheckId::ChainReplace => "chain replacement keeps lattices and 0/1-distributivity",
            CheckId::Lemma22 => "atom classes of L are independent, uniform, and adjacent iff disjoint",
            CheckId::ChordalCor => "IG chordal iff n <= 3; UG chordal iff n = 1 or q = 2, n <= 3",
            CheckId::PerfectCor => "IG and UG perfect iff n <= 4",
            CheckId::Diameter => "G(L) has diameter <= 3, IG and UG diameter <= 2, |V_I| = (q-1)^|I|",
            CheckId::WeaklyPerfect => "chromatic number equals clique number for IG and UG",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for CheckId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckId::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| VerifyError::UnknownCheck(s.to_owned()))
    }
}

/// Vertex caps handed to the exact solvers. Exceeding one skips the check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Applies to the twin-free kernel searched for odd holes.
    pub perfect: usize,
    pub color: usize,
    pub iso: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { perfect: DEFAULT_PERFECT_CAP, color: DEFAULT_COLOR_CAP, iso: DEFAULT_ISO_CAP }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

/// Graphs an [`Instance`] can produce, by the names used in witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphName {
    #[serde(rename = "IG")]
    Ig,
    #[serde(rename = "UG")]
    Ug,
    #[serde(rename = "G(L)")]
    GL,
    #[serde(rename = "Gc(L)")]
    GcL,
    #[serde(rename = "G(Ldual)")]
    GLDual,
    #[serde(rename = "Gc(Ldual)")]
    GcLDual,
    #[serde(rename = "Kt")]
    Kt,
    #[serde(rename = "Gamma(F^n)")]
    Ring,
    #[serde(rename = "Gamma(Z2^n)")]
    BoolRing,
    #[serde(rename = "Gc(L)+Kt")]
    GcLJoinKt,
    #[serde(rename = "G(Ldual)+Kt")]
    GLDualJoinKt,
    #[serde(rename = "Gammac(F^n)+Kt")]
    RingCJoinKt,
    #[serde(rename = "IG_red")]
    IgRed,
    #[serde(rename = "[UG]")]
    UgQuotient,
    #[serde(rename = "Gammac(Z2^n)+K1")]
    BoolRingCJoinK1,
    #[serde(rename = "Gamma(Z2^n)+Kt")]
    BoolRingJoinKt,
    #[serde(rename = "Gc(L)_red")]
    GcLRed,
    #[serde(rename = "Gc([L])")]
    GcCompressed,
    #[serde(rename = "[G(L)]")]
    GLQuotient,
    #[serde(rename = "G([L])")]
    GCompressed,
    #[serde(rename = "[G(Ldual)]")]
    GLDualQuotient,
    #[serde(rename = "G([Ldual])")]
    GCompressedDual,
}

impl fmt::Display for GraphName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let json = serde_json::to_string(self).expect("unit variant");
        f.pad(json.trim_matches('"'))
    }
}

/// Evidence attached to an entry. On PASS it certifies the claim where a
/// certificate exists; on FAIL it pins down the violation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// `a` and `b` are adjacent in exactly one of the two graphs.
    EdgeMismatch { left: GraphName, right: GraphName, a: String, b: String },
    /// `label` is a vertex of exactly one of the two graphs.
    VertexMismatch { left: GraphName, right: GraphName, label: String },
    /// The adjacency of `a` and `b` contradicts `expected_adjacent`.
    Adjacency { graph: GraphName, a: String, b: String, expected_adjacent: bool },
    /// Two members of one atom class with different degrees.
    Degrees { graph: GraphName, a: String, b: String },
    /// `a` and `b` lie farther apart than `bound`, possibly in different components.
    Distance { graph: GraphName, a: String, b: String, bound: usize },
    /// An induced cycle, in cyclic order.
    Hole { graph: GraphName, vertices: Vec<String> },
    /// Vertices inducing the complement of a cycle; consecutive entries are non-adjacent.
    Antihole { graph: GraphName, vertices: Vec<String> },
    /// A perfect elimination ordering.
    EliminationOrder { graph: GraphName, order: Vec<String> },
    /// An isomorphism, as (vertex of `from`, image in `to`) pairs.
    Isomorphism { from: GraphName, to: GraphName, pairs: Vec<(String, String)> },
    /// The exhaustive isomorphism search found no mapping.
    NotIsomorphic { left: GraphName, right: GraphName },
    /// A clique and a proper colouring; equal sizes certify `χ = ω`.
    CliqueAndColoring { graph: GraphName, clique: Vec<String>, coloring: Vec<(String, usize)> },
    /// `a ≃ b ≃ c` holds but `a ≃ c` does not.
    NonTransitive { graph: GraphName, a: String, b: String, c: String },
    /// `a∧b = 0 = a∧c` but `a∧(b∨c) ≠ 0`; with `dual`, the statement with meets and joins swapped.
    Distributivity { structure: String, dual: bool, a: String, b: String, c: String },
    /// Two elements related in one description of an order and not in the other.
    OrderMismatch { structure: String, a: String, b: String },
    /// A computed quantity that differs from its predicted value.
    Value { quantity: String, expected: String, actual: String },
}

/// Outcome of one check on one instance. The wall time is not serialised.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub check: CheckId,
    pub q: usize,
    pub n: usize,
    pub status: Status,
    pub detail: String,
    pub witnesses: Vec<Witness>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// All objects a check may consult for one `(q, n)`.
///
/// Fields are public so tests can plant faults; derived graphs are always
/// recomputed from them through [`Instance::graph`].
#[derive(Debug, Clone)]
pub struct Instance {
    pub q: usize,
    pub n: usize,
    pub ig: Graph,
    pub ug: Graph,
    pub l: Lattice,
    pub l_dual: Lattice,
    /// `G(L)`
    pub gl: Graph,
    /// `G(L^∂)`
    pub gl_dual: Graph,
    /// `K_t` on the vectors of full skeleton.
    pub units: Graph,
    /// `Γ(F^n)`
    pub ring: Graph,
    /// `Γ(Z_2^n)`
    pub bool_ring: Graph,
    /// `|V_I|` for every `I ⊆ {1..n}`.
    pub class_sizes: BTreeMap<IndexSet, usize>,
}

impl Instance {
    pub fn build(q: usize, n: usize) -> Result<Self, VerifyError> {
        let space = VectorSpace::new(q, n)?;
        let classes = space.partition_classes();
        let l = build_l(q, n)?;
        let l_dual = l.dual();
        let gl = zdg_poset(&l)?.graph;
        let gl_dual = zdg_poset(&l_dual)?.graph;
        let units = complete(classes[&IndexSet::full(n)].iter().map(|v| v.label())).expect("distinct vectors");
        Ok(Instance {
            q,
            n,
            ig: space.intersection_graph(),
            ug: space.union_graph(),
            l,
            l_dual,
            gl,
            gl_dual,
            units,
            ring: ring_zdg(q, n)?,
            bool_ring: ring_zdg(2, n)?,
            class_sizes: classes.iter().map(|(k, v)| (*k, v.len())).collect(),
        })
    }

    pub fn graph(&self, name: GraphName) -> Result<Graph, VerifyError> {
        use GraphName::*;
        Ok(match name {
            Ig => self.ig.clone(),
            Ug => self.ug.clone(),
            GL => self.gl.clone(),
            GcL => self.gl.complement(),
            GLDual => self.gl_dual.clone(),
            GcLDual => self.gl_dual.complement(),
            Kt => self.units.clone(),
            Ring => self.ring.clone(),
            BoolRing => self.bool_ring.clone(),
            GcLJoinKt => join(&self.gl.complement(), &self.units),
            GLDualJoinKt => join(&self.gl_dual, &self.units),
            RingCJoinKt => join(&self.ring.complement(), &self.units),
            IgRed => reduce(&self.ig)?,
            UgQuotient => neighborhood_quotient(&self.ug),
            BoolRingCJoinK1 => join(&self.bool_ring.complement(), &complete(["k1"]).unwrap()),
            BoolRingJoinKt => join(&self.bool_ring, &self.units),
            GcLRed => reduce(&self.gl.complement())?,
            GcCompressed => zdg_poset(&compress(&self.l)?.poset)?.graph.complement(),
            GLQuotient => neighborhood_quotient(&self.gl),
            GCompressed => zdg_poset(&compress(&self.l)?.poset)?.graph,
            GLDualQuotient => neighborhood_quotient(&self.gl_dual),
            GCompressedDual => zdg_poset(&compress(&self.l_dual)?.poset)?.graph,
        })
    }
}

/// Builds the instance for `(q, n)` and runs one check on it.
pub fn run_check(check: CheckId, q: usize, n: usize, caps: &Caps) -> Result<Entry, VerifyError> {
    let start = Instant::now();
    let inst = Instance::build(q, n)?;
    let mut entry = run_check_on(&inst, check, caps);
    entry.elapsed = start.elapsed();
    Ok(entry)
}

/// Runs one check against a prepared instance. Internal errors surface as
/// FAIL entries carrying the error text.
pub fn run_check_on(inst: &Instance, check: CheckId, caps: &Caps) -> Entry {
    let start = Instant::now();
    let outcome = checks::run(inst, check, caps).unwrap_or_else(|e| {
        let mut o = checks::Outcome::default();
        o.fail(Witness::Value { quantity: "error".into(), expected: "none".into(), actual: e.to_string() });
        o
    });
    let (status, detail, witnesses) = outcome.finish();
    Entry { check, q: inst.q, n: inst.n, status, detail, witnesses, elapsed: start.elapsed() }
}
