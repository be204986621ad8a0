use std::collections::BTreeMap;
use std::io::Write;

use rayon::prelude::*;
use serde_json::Value;

use super::check::CheckId;
use super::instance::{enumerate_instances, random_instance, Instance, InstanceKind};
use super::run::{run_checks, CheckConfig, CheckRecord, Status};
use crate::error::{Error, Result};

/// What a verification run covers.
///
/// Without `samples`, every instance of `kind` on `min_vertices..=max_vertices`
/// vertices is enumerated. With `samples = Some(m)`, `m` random instances are
/// drawn instead: instance `k` has `min + k mod (max - min + 1)` vertices and
/// seed `seed + k`.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub kind: InstanceKind,
    pub min_vertices: Option<usize>,
    pub max_vertices: usize,
    pub checks: CheckConfig,
    pub seed: u64,
    pub samples: Option<usize>,
    pub up_to_iso: bool,
    pub threads: Option<usize>,
}

impl SuiteConfig {
    pub fn exhaustive(kind: InstanceKind, max_vertices: usize, checks: CheckConfig) -> Self {
        SuiteConfig {
            kind,
            min_vertices: None,
            max_vertices,
            checks,
            seed: 0,
            samples: None,
            up_to_iso: false,
            threads: None,
        }
    }

    pub fn random(kind: InstanceKind, vertices: std::ops::RangeInclusive<usize>, samples: usize, seed: u64, checks: CheckConfig) -> Self {
        SuiteConfig {
            kind,
            min_vertices: Some(*vertices.start()),
            max_vertices: *vertices.end(),
            checks,
            seed,
            samples: Some(samples),
            up_to_iso: false,
            threads: None,
        }
    }
}

pub fn suite_instances(config: &SuiteConfig) -> Result<Vec<Instance>> {
    let hi = config.max_vertices;
    match config.samples {
        None => {
            let lo = config.min_vertices.unwrap_or(1);
            let mut out = Vec::new();
            for r in lo..=hi {
                out.extend(enumerate_instances(config.kind, r, config.up_to_iso)?);
            }
            Ok(out)
        }
        Some(m) => {
            let lo = config.min_vertices.unwrap_or(hi);
            if lo > hi {
                return Err(Error::Invalid(format!("empty vertex range {lo}..={hi}")));
            }
            (0..m)
                .map(|k| {
                    let r = lo + k % (hi - lo + 1);
                    random_instance(config.kind, r, config.seed.wrapping_add(k as u64))
                })
                .collect()
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub instance_count: usize,
    pub records: Vec<CheckRecord>,
}

impl SuiteReport {
    /// Failures that count against the run (report-only checks excluded).
    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records
            .iter()
            .filter(|r| r.status == Status::Fail && !r.report_only)
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn count(&self, check: CheckId, status: Status) -> usize {
        self.records
            .iter()
            .filter(|r| r.check == check && r.status == status)
            .count()
    }

    pub fn write_jsonl(&self, mut w: impl Write) -> std::io::Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut w, r)?;
            w.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn to_jsonl(&self) -> String {
        let mut buf = Vec::new();
        self.write_jsonl(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("JSON is UTF-8")
    }

    /// The JSON-lines report with the `elapsed_us` timing fields removed.
    pub fn to_jsonl_without_timing(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let mut v = serde_json::to_value(r).expect("serializable");
            if let Value::Object(m) = &mut v {
                m.remove("elapsed_us");
            }
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }

    /// `check,pass,fail,skip,report_only` for every check that produced records.
    pub fn summary_csv(&self) -> String {
        let mut rows: BTreeMap<CheckId, [usize; 3]> = BTreeMap::new();
        for r in &self.records {
            let row = rows.entry(r.check).or_default();
            match r.status {
                Status::Pass => row[0] += 1,
                Status::Fail => row[1] += 1,
                Status::Skip => row[2] += 1,
            }
        }
        let mut out = String::from("check,pass,fail,skip,report_only\n");
        for (c, [p, f, s]) in rows {
            out.push_str(&format!("{c},{p},{f},{s},{}\n", c.is_report_only()));
        }
        out
    }
}

/// Runs every instance of the suite through [`run_checks`] on a worker pool.
/// Records keep the instance order, so reports are reproducible.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    config.checks.validate()?;
    let instances = suite_instances(config)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = config.threads {
        builder = builder.num_threads(t);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Invalid(format!("cannot start worker pool: {e}")))?;
    let per_instance: Vec<Vec<CheckRecord>> = pool.install(|| {
        instances
            .par_iter()
            .map(|i| run_checks(i, &config.checks))
            .collect::<Result<_>>()
    })?;
    Ok(SuiteReport {
        instance_count: instances.len(),
        records: per_instance.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graph_suite_passes_and_is_deterministic() {
        let cfg = SuiteConfig::exhaustive(InstanceKind::Graph, 3, CheckConfig::new(2));
        let a = run_suite(&cfg).unwrap();
        assert!(a.all_passed(), "{}", a.summary_csv());
        assert_eq!(a.instance_count, 1 + 2 + 8);
        let b = run_suite(&cfg).unwrap();
        assert_eq!(a.to_jsonl_without_timing(), b.to_jsonl_without_timing());
        assert!(a.summary_csv().starts_with("check,pass,fail,skip,report_only\nTHM_2_2,"));
    }

    #[test]
    fn random_suites_cycle_sizes() {
        let cfg = SuiteConfig::random(InstanceKind::Graph, 3..=4, 4, 9, CheckConfig::new(1));
        let sizes: Vec<usize> = suite_instances(&cfg).unwrap().iter().map(|i| i.r()).collect();
        assert_eq!(sizes, vec![3, 4, 3, 4]);
    }
}
