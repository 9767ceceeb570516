//! Parameter sweeps persisted as line-delimited JSON.
//!
//! Tasks are enumerated in a fixed order (s, b, a, check, flavor, m) and run
//! on a bounded worker pool; a single writer emits records in task order,
//! so the same configuration always produces the same bytes. Re-running
//! against an existing file skips every task already recorded.

use std::collections::{BTreeMap, HashSet};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::sync::mpsc;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::checks::{run_check, CheckLimits, CheckName, Status};
use crate::error::{Error, Result};
use crate::fold::uniform_params;
use crate::symbolic::Flavor;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub s: RangeInclusive<u32>,
    pub b: RangeInclusive<u32>,
    /// `None` sweeps every `a` with `b ≤ a ≤ s b`.
    pub a: Option<RangeInclusive<u32>>,
    /// Values of `m` for the checks that run once per `m`.
    pub m: RangeInclusive<u32>,
    pub limits: CheckLimits,
    pub flavors: Vec<Flavor>,
    pub checks: Vec<CheckName>,
    pub out: Option<PathBuf>,
    pub jobs: usize,
    pub timing: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            s: 1..=4,
            b: 1..=2,
            a: None,
            m: 1..=2,
            limits: CheckLimits::default(),
            flavors: vec![Flavor::Ordinary, Flavor::Star],
            checks: CheckName::ALL.to_vec(),
            out: None,
            jobs: 4,
            timing: false,
        }
    }
}

/// One unit of work. Its key identifies the record on resume.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TaskKey {
    pub s: u32,
    pub a: u32,
    pub b: u32,
    pub check: CheckName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flavor: Option<Flavor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    #[serde(flatten)]
    pub key: TaskKey,
    pub status: Status,
    pub payload: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub written: usize,
    pub skipped: usize,
    pub pass: usize,
    pub fail: usize,
    pub out_of_regime: usize,
    pub resource_limit: usize,
}

impl SweepSummary {
    fn count(&mut self, status: Status) {
        match status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::OutOfRegime => self.out_of_regime += 1,
            Status::ResourceLimit => self.resource_limit += 1,
        }
    }
}

/// Every task of the grid in emission order.
pub fn tasks(config: &SweepConfig) -> Vec<TaskKey> {
    let mut out = Vec::new();
    for s in config.s.clone() {
        for b in config.b.clone() {
            if s == 0 || b == 0 {
                continue;
            }
            let valid = b..=s * b;
            let a_range = match &config.a {
                Some(r) => *r.start().max(valid.start())..=*r.end().min(valid.end()),
                None => valid,
            };
            for a in a_range {
                for &check in &config.checks {
                    let flavors: Vec<Option<Flavor>> = if check.flavored() {
                        config.flavors.iter().copied().map(Some).collect()
                    } else {
                        vec![None]
                    };
                    for flavor in flavors {
                        let ms: Vec<Option<u32>> = if check.per_m() {
                            config.m.clone().map(Some).collect()
                        } else {
                            vec![None]
                        };
                        for m in ms {
                            out.push(TaskKey {
                                s,
                                a,
                                b,
                                check,
                                flavor,
                                m,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn run_task(key: &TaskKey, config: &SweepConfig) -> ResultRecord {
    let start = Instant::now();
    let outcome = match uniform_params(key.s, key.a, key.b) {
        Ok(params) => run_check(
            key.check,
            &params,
            key.m.unwrap_or(1),
            key.flavor.unwrap_or(Flavor::Ordinary),
            &config.limits,
        ),
        Err(e) => crate::checks::Outcome::from_error(&e),
    };
    ResultRecord {
        key: key.clone(),
        status: outcome.status,
        payload: outcome.payload,
        wall_ms: config
            .timing
            .then(|| start.elapsed().as_secs_f64() * 1000.0),
    }
}

/// Runs every task not in `done`, writing one line per record in task order.
pub fn sweep_to_writer<W: Write + Send>(
    config: &SweepConfig,
    done: &HashSet<TaskKey>,
    out: W,
) -> Result<SweepSummary> {
    let (skipped, todo): (Vec<TaskKey>, Vec<TaskKey>) =
        tasks(config).into_iter().partition(|k| done.contains(k));
    let mut summary = SweepSummary {
        skipped: skipped.len(),
        ..Default::default()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| Error::Parameter(format!("worker pool: {e}")))?;
    let (tx, rx) = mpsc::channel::<(usize, ResultRecord)>();

    std::thread::scope(|scope| -> Result<SweepSummary> {
        let writer = scope.spawn(move || -> Result<SweepSummary> {
            let mut out = BufWriter::new(out);
            let mut pending = BTreeMap::new();
            let mut next = 0usize;
            for (idx, record) in rx {
                pending.insert(idx, record);
                while let Some(record) = pending.remove(&next) {
                    let line = serde_json::to_string(&record).map_err(io_error)?;
                    writeln!(out, "{line}").map_err(io_error)?;
                    summary.count(record.status);
                    summary.written += 1;
                    next += 1;
                }
            }
            out.flush().map_err(io_error)?;
            Ok(summary)
        });
        pool.install(|| {
            todo.par_iter()
                .enumerate()
                .for_each_with(tx, |tx, (i, key)| {
                    let _ = tx.send((i, run_task(key, config)));
                })
        });
        writer.join().expect("writer thread panicked")
    })
}

fn io_error(e: impl std::fmt::Display) -> Error {
    Error::Parameter(format!("output: {e}"))
}

/// Keys already recorded in `path`. A trailing partial line, left by an
/// interrupted run, is cut off so appending resumes on a clean boundary.
pub fn recorded_keys(path: &Path) -> Result<HashSet<TaskKey>> {
    let mut keys = HashSet::new();
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(keys),
        Err(e) => return Err(io_error(e)),
    };
    let mut reader = BufReader::new(file);
    let mut good_len = 0u64;
    let mut line = String::new();
    loop {
        line.clear();
        let n = reader.read_line(&mut line).map_err(io_error)?;
        if n == 0 {
            break;
        }
        if !line.ends_with('\n') {
            break;
        }
        match serde_json::from_str::<ResultRecord>(line.trim_end()) {
            Ok(record) => {
                keys.insert(record.key);
                good_len += n as u64;
            }
            Err(_) => break,
        }
    }
    let file = OpenOptions::new()
        .write(true)
        .open(path)
        .map_err(io_error)?;
    file.set_len(good_len).map_err(io_error)?;
    Ok(keys)
}

/// Runs the sweep into `config.out`, resuming from whatever it holds.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepSummary> {
    let path = config
        .out
        .as_ref()
        .ok_or_else(|| Error::Parameter("sweep needs an output path".into()))?;
    let done = recorded_keys(path)?;
    let file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(io_error)?;
    sweep_to_writer(config, &done, file)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SweepConfig {
        SweepConfig {
            s: 2..=3,
            b: 1..=2,
            m: 1..=1,
            limits: CheckLimits { m_max: 4, r_max: 4 },
            checks: vec![CheckName::Saturation, CheckName::Sdefect],
            ..Default::default()
        }
    }

    #[test]
    fn task_order_is_stable() {
        let t = tasks(&small());
        assert_eq!(t[0].s, 2);
        assert_eq!(t[0].b, 1);
        assert_eq!(t[0].check, CheckName::Saturation);
        assert_eq!(t[1].flavor, Some(Flavor::Ordinary));
        assert_eq!(t[2].flavor, Some(Flavor::Star));
        let mut seen = HashSet::new();
        assert!(t.iter().all(|k| seen.insert(k.clone())));
    }

    #[test]
    fn empty_grid() {
        let config = SweepConfig {
            s: RangeInclusive::new(1, 0),
            ..small()
        };
        assert!(tasks(&config).is_empty());
        let mut buf = Vec::new();
        let summary = sweep_to_writer(&config, &HashSet::new(), &mut buf).unwrap();
        assert_eq!(summary.written, 0);
        assert!(buf.is_empty());
    }

    #[test]
    fn output_is_deterministic_across_pool_sizes() {
        let run = |jobs| {
            let mut buf = Vec::new();
            let config = SweepConfig { jobs, ..small() };
            sweep_to_writer(&config, &HashSet::new(), &mut buf).unwrap();
            buf
        };
        assert_eq!(run(1), run(4));
    }

    #[test]
    fn records_round_trip() {
        let config = small();
        let record = run_task(&tasks(&config)[1], &config);
        let line = serde_json::to_string(&record).unwrap();
        assert!(!line.contains("wall_ms"));
        let back: ResultRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(back, record);
    }
}
