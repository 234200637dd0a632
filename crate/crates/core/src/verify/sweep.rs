use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::field::SUPPORTED_ORDERS;
use crate::io::{write_atomic, IoError};
use crate::vspace::MAX_VECTORS;

use super::{run_check_on, Caps, CheckId, Entry, Instance, Status, VerifyError};

/// A grid of `(q, n)` pairs and the checks to run on each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub q: Vec<usize>,
    pub n: Vec<usize>,
    pub checks: Vec<CheckId>,
    pub caps: Caps,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { q: vec![2, 3], n: vec![1, 2, 3, 4], checks: CheckId::ALL.to_vec(), caps: Caps::default() }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), VerifyError> {
        let bad = |msg: String| Err(VerifyError::Config(msg));
        if let Some(q) = self.q.iter().find(|q| !SUPPORTED_ORDERS.contains(q)) {
            return bad(format!("field order {q} is not one of {SUPPORTED_ORDERS:?}"));
        }
        if self.n.contains(&0) {
            return bad("dimension must be at least 1".into());
        }
        if self.caps.perfect == 0 || self.caps.color == 0 || self.caps.iso == 0 {
            return bad("caps must be positive".into());
        }
        for &q in &self.q {
            for &n in &self.n {
                let size = u32::try_from(n).ok().and_then(|n| q.checked_pow(n));
                if size.is_none_or(|s| s > MAX_VECTORS) {
                    return bad(format!("GF({q})^{n} has more than {MAX_VECTORS} vectors"));
                }
            }
        }
        Ok(())
    }

    /// `(q, n)` pairs in ascending order, duplicates removed.
    pub fn grid(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = self.q.iter().flat_map(|&q| self.n.iter().map(move |&n| (q, n))).collect();
        pairs.sort_unstable();
        pairs.dedup();
        pairs
    }

    fn checks(&self) -> Vec<CheckId> {
        let mut c = self.checks.clone();
        c.sort_unstable();
        c.dedup();
        c
    }
}

/// Parses `qlist:nlist`, where each list is comma separated and may contain
/// ranges such as `1-4`. Either list may be empty.
pub fn parse_grid(spec: &str) -> Result<(Vec<usize>, Vec<usize>), VerifyError> {
    let (qs, ns) = spec
        .split_once(':')
        .ok_or_else(|| VerifyError::Config(format!("grid {spec:?} is not of the form qlist:nlist")))?;
    Ok((parse_list(qs)?, parse_list(ns)?))
}

fn parse_list(list: &str) -> Result<Vec<usize>, VerifyError> {
    let num = |s: &str| {
        s.trim().parse::<usize>().map_err(|_| VerifyError::Config(format!("{s:?} is not a non-negative integer")))
    };
    let mut out = Vec::new();
    for part in list.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once('-') {
            Some((lo, hi)) => {
                let (lo, hi) = (num(lo)?, num(hi)?);
                if lo > hi {
                    return Err(VerifyError::Config(format!("empty range {part:?}")));
                }
                out.extend(lo..=hi);
            }
            None => out.push(num(part)?),
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn summary(&self) -> Summary {
        let count = |s: Status| self.entries.iter().filter(|e| e.status == s).count();
        Summary { pass: count(Status::Pass), fail: count(Status::Fail), skipped: count(Status::Skipped) }
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.summary().fail > 0)
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            summary: Summary,
            entries: &'a [Entry],
        }
        let mut s = serde_json::to_string_pretty(&Doc { summary: self.summary(), entries: &self.entries })
            .expect("report serialises");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Report, serde_json::Error> {
        #[derive(Deserialize)]
        struct Doc {
            entries: Vec<Entry>,
        }
        let doc: Doc = serde_json::from_str(text)?;
        Ok(Report { entries: doc.entries })
    }

    /// Plain-text table, one row per entry, with an optional timing column.
    pub fn table(&self, timing: bool) -> String {
        let mut s = String::new();
        let time_head = if timing { format!(" {:>9}", "time") } else { String::new() };
        writeln!(s, "{:<17} {:>3} {:>2}  {:<7}{time_head}  detail", "check", "q", "n", "status").unwrap();
        for e in &self.entries {
            let time = if timing { format!(" {:>8.3}s", e.elapsed.as_secs_f64()) } else { String::new() };
            writeln!(s, "{:<17} {:>3} {:>2}  {:<7}{time}  {}", e.check.name(), e.q, e.n, e.status, e.detail).unwrap();
        }
        let sum = self.summary();
        writeln!(s, "{} passed, {} failed, {} skipped", sum.pass, sum.fail, sum.skipped).unwrap();
        s
    }

    /// Writes `report.json` and `report.txt` (the table without timings).
    /// Both are byte-identical across runs with the same configuration.
    pub fn write_files(&self, dir: &Path) -> Result<(), IoError> {
        std::fs::create_dir_all(dir)?;
        write_atomic(&dir.join("report.json"), &self.to_json())?;
        write_atomic(&dir.join("report.txt"), &self.table(false))
    }
}

pub fn run_sweep(config: &SweepConfig) -> Result<Report, VerifyError> {
    run_sweep_with(config, Instance::build)
}

/// Like [`run_sweep`], with a caller-supplied instance builder.
///
/// Instances are built in parallel, then every `(instance, check)` pair
/// runs in parallel; entries come back ordered by `q`, `n`, then check.
pub fn run_sweep_with<F>(config: &SweepConfig, build: F) -> Result<Report, VerifyError>
where
    F: Fn(usize, usize) -> Result<Instance, VerifyError> + Sync,
{
    config.validate()?;
    let grid = config.grid();
    let checks = config.checks();
    let instances: Vec<(Instance, std::time::Duration)> = grid
        .par_iter()
        .map(|&(q, n)| {
            let start = Instant::now();
            build(q, n).map(|inst| (inst, start.elapsed()))
        })
        .collect::<Result<_, _>>()?;
    let jobs: Vec<(usize, CheckId)> = (0..instances.len()).flat_map(|i| checks.iter().map(move |&c| (i, c))).collect();
    let entries = jobs
        .par_iter()
        .map(|&(i, check)| {
            let (inst, build_time) = &instances[i];
            let mut entry = run_check_on(inst, check, &config.caps);
            entry.elapsed += *build_time;
            entry
        })
        .collect();
    Ok(Report { entries })
}
