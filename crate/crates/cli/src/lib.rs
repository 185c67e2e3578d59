//! Command-line front end for `sl2-blocks`: job planning, the check suite
//! and report rendering.

use std::fmt;
use std::time::Instant;

use anyhow::{Context, Result};
use rayon::prelude::*;
use sl2_blocks::{Character, FiltrationKind, PrimeP};

pub mod args;
pub mod render;
pub mod report;
pub mod suite;

use args::{ChiTag, Cli, Command, Common, Format};
use report::Report;
use suite::{Job, Selector, Task, REGULAR_MAX_P};

/// Largest prime accepted on the command line.
pub const MAX_P: u32 = 13;

/// Bad flags or an impossible job; the binary exits with status 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn primes(common: &Common) -> Result<(Vec<PrimeP>, bool), UsageError> {
    match (common.p, common.max_p) {
        (Some(p), None) => {
            let p = PrimeP::with_bound(p, MAX_P).map_err(|e| usage(e.to_string()))?;
            Ok((vec![p], true))
        }
        (None, Some(n)) => {
            if !(3..=MAX_P).contains(&n) {
                return Err(usage(format!("--max-p must lie in 3..={MAX_P}")));
            }
            Ok(((3..=n).filter_map(|q| PrimeP::new(q).ok()).collect(), false))
        }
        (None, None) => Err(usage("one of --p or --max-p is required")),
        (Some(_), Some(_)) => Err(usage("--p and --max-p are exclusive")),
    }
}

/// Expands flags into jobs, ordered by `p`, then character, then `a`.
/// Ranges silently drop regular jobs above the regular bound; an explicit
/// `--p` beyond it is an error.
pub fn plan_jobs(common: &Common, chis: &[ChiTag]) -> Result<Vec<Job>, UsageError> {
    if common.jobs == 0 {
        return Err(usage("--jobs must be positive"));
    }
    let mut chis = chis.to_vec();
    chis.sort();
    chis.dedup();
    let regular = chis.contains(&ChiTag::Regular);
    if common.a.is_some() && !regular {
        return Err(usage("--a requires --chi regular"));
    }
    let (ps, explicit) = primes(common)?;
    let mut jobs = Vec::new();
    for p in ps {
        let q = p.get();
        for &chi in &chis {
            match chi {
                ChiTag::Zero => jobs.push(Job {
                    p,
                    chi: Character::Zero,
                }),
                ChiTag::E => jobs.push(Job {
                    p,
                    chi: Character::NilpotentE,
                }),
                ChiTag::Regular => {
                    if q > REGULAR_MAX_P {
                        if explicit {
                            return Err(usage(format!(
                                "regular characters are supported for p <= {REGULAR_MAX_P}"
                            )));
                        }
                        continue;
                    }
                    match common.a {
                        Some(a) if (1..q).contains(&a) => jobs.push(Job {
                            p,
                            chi: Character::Regular(a),
                        }),
                        Some(a) if explicit => return Err(usage(format!("--a {a} must lie in 1..{q}"))),
                        Some(_) => {}
                        None => jobs.extend((1..q).map(|a| Job {
                            p,
                            chi: Character::Regular(a),
                        })),
                    }
                }
            }
        }
    }
    if jobs.is_empty() {
        return Err(usage("no jobs selected"));
    }
    Ok(jobs)
}

/// The task and job list for a parsed command line.
pub fn plan(command: &Command) -> Result<(Task, Vec<Job>), UsageError> {
    match command {
        Command::Blocks(a) => Ok((Task::Blocks, plan_jobs(&a.common, &a.chi)?)),
        Command::Filtration(a) => {
            let selector = match (&a.omega, &a.alpha) {
                (Some(w), _) => Some(Selector::Omega(*w)),
                (None, Some(s)) => Some(Selector::Alpha(s.clone())),
                (None, None) => None,
            };
            let kinds = match a.kind {
                Some(k) => vec![k.into()],
                None => FiltrationKind::ALL.to_vec(),
            };
            Ok((Task::Filtration { selector, kinds }, plan_jobs(&a.common, &a.chi)?))
        }
        Command::Verify(a) => Ok((
            Task::Verify {
                corrupt_idempotent: a.corrupt_idempotent,
            },
            plan_jobs(&a.common, &a.chi)?,
        )),
    }
}

/// Runs every job on `threads` workers; results keep the job order.
pub fn run_jobs(jobs: &[Job], task: &Task, threads: usize, timings: bool) -> Result<Vec<Report>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .context("building the worker pool")?;
    pool.install(|| {
        jobs.par_iter()
            .map(|job| {
                let start = Instant::now();
                let out = suite::run(job, task);
                if timings {
                    let (chi, a) = suite::chi_tag(job.chi);
                    let a = a.map(|a| format!(" a={a}")).unwrap_or_default();
                    eprintln!("p={} chi={chi}{a}: {:.3}s", job.p.get(), start.elapsed().as_secs_f64());
                }
                out
            })
            .collect()
    })
}

/// Rendered output and whether every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let (task, jobs) = plan(&cli.command)?;
    let common = cli.command.common();
    let reports = run_jobs(&jobs, &task, common.jobs, common.timings)?;
    let passed = reports.iter().all(Report::passed);
    for r in &reports {
        for c in r.failures() {
            eprintln!("FAIL p={} chi={}: {}", r.p, r.chi, c.name);
        }
    }
    let as_array = matches!(task, Task::Verify { .. }) || common.max_p.is_some() || reports.len() != 1;
    let text = match common.format {
        Format::Json => render::json(&reports, as_array)?,
        Format::Csv => render::csv(&reports)?,
        Format::Md => render::markdown(&reports),
    };
    Ok(Outcome { text, passed })
}
