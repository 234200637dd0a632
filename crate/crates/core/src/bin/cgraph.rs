use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use component_graphs::io::{graph_to_dot, graph_to_json, poset_from_json, poset_to_dot, poset_to_json, write_atomic};
use component_graphs::order::{build_boolean_vlattice, build_l, Poset};
use component_graphs::props::{DEFAULT_COLOR_CAP, DEFAULT_ISO_CAP, DEFAULT_PERFECT_CAP};
use component_graphs::verify::{parse_grid, run_check, run_sweep, Caps, CheckId, Report, SweepConfig};
use component_graphs::vspace::{build_ig, build_ug};
use component_graphs::zdg::{ring_zdg, zdg_poset};
use component_graphs::Graph;

#[derive(Parser)]
#[command(
    name = "cgraph",
    version,
    about = "Component graphs of finite vector spaces and zero-divisor graphs of posets"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a graph or lattice and print it (or write it under --out)
    Build {
        kind: Kind,
        /// Field order
        #[arg(long)]
        q: Option<usize>,
        /// Dimension
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Directory for {kind}_q{q}_n{n}.{json,dot}
        #[arg(long)]
        out: Option<PathBuf>,
        /// Poset JSON file for zdg-poset (defaults to the lattice L for --q/--n)
        #[arg(long)]
        poset: Option<PathBuf>,
    },
    /// Run one check on one (q, n)
    Verify {
        /// One of igv, ugv, gamma-iso, reduced, boolean-compress, chain-replace,
        /// lemma22, chordal-cor, perfect-cor, diameter, weakly-perfect
        check: String,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        caps: CapArgs,
        /// Directory for report.json and report.txt
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every check over a grid of (q, n)
    Sweep {
        /// Field orders and dimensions, e.g. 2,3:1-4
        #[arg(long, default_value = "2,3:1-4")]
        grid: String,
        #[command(flatten)]
        caps: CapArgs,
        /// Directory for report.json and report.txt
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CapArgs {
    /// Largest twin-free kernel searched for odd holes
    #[arg(long, default_value_t = DEFAULT_PERFECT_CAP)]
    perfect_cap: usize,
    /// Largest graph coloured exactly
    #[arg(long, default_value_t = DEFAULT_COLOR_CAP)]
    color_cap: usize,
    /// Largest graph tested for isomorphism
    #[arg(long, default_value_t = DEFAULT_ISO_CAP)]
    iso_cap: usize,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps { perfect: self.perfect_cap, color: self.color_cap, iso: self.iso_cap }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Ig,
    Ug,
    #[value(name = "L")]
    L,
    #[value(name = "dualL")]
    DualL,
    ZdgPoset,
    RingZdg,
    BooleanV,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

enum Built {
    Graph(Graph),
    Poset(Poset),
}

type AnyError = Box<dyn std::error::Error>;

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, AnyError> {
    match cli.cmd {
        Cmd::Build { kind, q, n, format, out, poset } => {
            let (built, name) = build(kind, q, n, poset.as_deref())?;
            let text = match (&built, format) {
                (Built::Graph(g), Format::Json) => graph_to_json(g),
                (Built::Graph(g), Format::Dot) => graph_to_dot(g),
                (Built::Poset(p), Format::Json) => poset_to_json(p),
                (Built::Poset(p), Format::Dot) => poset_to_dot(p),
            };
            match out {
                Some(dir) => {
                    std::fs::create_dir_all(&dir)?;
                    let ext = if format == Format::Json { "json" } else { "dot" };
                    let path = dir.join(format!("{name}.{ext}"));
                    write_atomic(&path, &text)?;
                    println!("{}", path.display());
                }
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { check, q, n, caps, out } => {
            let check: CheckId = check.parse()?;
            let config = SweepConfig { q: vec![q], n: vec![n], checks: vec![check], caps: caps.caps() };
            config.validate()?;
            let entry = run_check(check, q, n, &config.caps)?;
            finish(Report { entries: vec![entry] }, out.as_deref())
        }
        Cmd::Sweep { grid, caps, out } => {
            let (q, n) = parse_grid(&grid)?;
            let config = SweepConfig { q, n, checks: CheckId::ALL.to_vec(), caps: caps.caps() };
            finish(run_sweep(&config)?, out.as_deref())
        }
    }
}

fn finish(report: Report, out: Option<&Path>) -> Result<ExitCode, AnyError> {
    print!("{}", report.table(true));
    if let Some(dir) = out {
        report.write_files(dir)?;
    }
    Ok(ExitCode::from(report.exit_code() as u8))
}

fn build(kind: Kind, q: Option<usize>, n: Option<usize>, poset: Option<&Path>) -> Result<(Built, String), AnyError> {
    if let (Kind::ZdgPoset, Some(path)) = (kind, poset) {
        let p = poset_from_json(&std::fs::read_to_string(path)?)?;
        let stem = path.file_stem().map_or("poset".into(), |s| s.to_string_lossy().into_owned());
        return Ok((Built::Graph(zdg_poset(&p)?.graph), format!("zdg-poset_{stem}")));
    }
    let (Some(q), Some(n)) = (q, n) else {
        return Err("--q and --n are required".into());
    };
    let built = match kind {
        Kind::Ig => Built::Graph(build_ig(q, n)?),
        Kind::Ug => Built::Graph(build_ug(q, n)?),
        Kind::L => Built::Poset(build_l(q, n)?.into_poset()),
        Kind::DualL => Built::Poset(build_l(q, n)?.dual().into_poset()),
        Kind::ZdgPoset => Built::Graph(zdg_poset(build_l(q, n)?.poset())?.graph),
        Kind::RingZdg => Built::Graph(ring_zdg(q, n)?),
        Kind::BooleanV => Built::Poset(build_boolean_vlattice(q, n)?.into_poset()),
    };
    let name = kind.to_possible_value().expect("no skipped variants").get_name().to_owned();
    Ok((built, format!("{name}_q{q}_n{n}")))
}
