//! `bench`: approximation size against the exact optimum, one CSV row per
//! instance and mode.

use std::fmt::Write as _;

use rayon::prelude::*;
use rectmatch::geometry::{candidate_bichromatic, candidate_monochromatic};
use rectmatch::matchers::{approx_mbrm, approx_mmrm, brute_force_max_matching_guarded, Mode};
use rectmatch::reductions::random_instance;

use crate::{oracle_guard, write_output, BenchArgs, BenchMode, Failure, Outcome};

pub const HEADER: &str = "seed,n,mode,candidates,approx,opt,ratio";

struct Row {
    seed: u64,
    n: usize,
    mode: Mode,
    candidates: usize,
    approx: usize,
    /// `None` when the instance is above the oracle guard.
    opt: Option<usize>,
}

impl Row {
    /// `approx / opt`, blank when the oracle was skipped or the optimum is 0.
    fn ratio(&self) -> Option<f64> {
        self.opt
            .filter(|&o| o > 0)
            .map(|o| self.approx as f64 / o as f64)
    }
}

fn trial(seed: u64, a: &BenchArgs, modes: &[Mode], guard: usize) -> Result<Vec<Row>, Failure> {
    let s = random_instance(a.n, a.grid, a.red_fraction, seed)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    modes
        .iter()
        .map(|&mode| {
            let (report, candidates) = match mode {
                Mode::Mono => (approx_mmrm(&s)?, candidate_monochromatic(&s).len()),
                Mode::Bi => (approx_mbrm(&s)?, candidate_bichromatic(&s).len()),
            };
            let opt = if s.len() <= guard {
                Some(brute_force_max_matching_guarded(&s, mode, guard)?.len())
            } else {
                None
            };
            Ok(Row {
                seed,
                n: s.len(),
                mode,
                candidates,
                approx: report.matching.len(),
                opt,
            })
        })
        .collect()
}

pub fn run(a: BenchArgs) -> Outcome {
    let guard = oracle_guard()?;
    let modes: &[Mode] = match a.mode {
        BenchMode::Mono => &[Mode::Mono],
        BenchMode::Bi => &[Mode::Bi],
        BenchMode::Both => &[Mode::Mono, Mode::Bi],
    };
    let end = a
        .seed
        .checked_add(a.trials)
        .ok_or_else(|| Failure::Usage("seed + trials overflows".into()))?;
    let mut rows: Vec<Row> = (a.seed..end)
        .into_par_iter()
        .map(|seed| trial(seed, &a, modes, guard))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    rows.sort_by_key(|r| (r.seed, r.mode == Mode::Bi));

    let mut csv = String::from(HEADER);
    csv.push('\n');
    for r in &rows {
        let opt = r.opt.map(|o| o.to_string()).unwrap_or_default();
        let ratio = r.ratio().map(|q| format!("{q:.4}")).unwrap_or_default();
        writeln!(
            csv,
            "{},{},{},{},{},{opt},{ratio}",
            r.seed,
            r.n,
            r.mode.name(),
            r.candidates,
            r.approx
        )
        .unwrap();
    }
    write_output(a.output.as_deref(), &csv)?;

    let below: Vec<_> = rows
        .iter()
        .filter(|r| r.opt.is_some_and(|o| 4 * r.approx < o))
        .collect();
    match below.first() {
        None => Ok(()),
        Some(r) => Err(Failure::Domain(format!(
            "{} rows below a quarter of the optimum, first: seed {} {}",
            below.len(),
            r.seed,
            r.mode.name()
        ))),
    }
}
