//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//!
//! Runs as a plain binary (`harness = false`) so the lines always reach the
//! terminal: `cargo test --test acceptance`.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use serde_json::json;
use symreg::combinatorics::SimplicialComplex;
use symreg::exactalg::rational_int;
use symreg::polyhedra::delta_invariant;
use symreg::verify::{
    enumerate_instances, run_checks, run_suite, suite_instances, uniform_matroid, CheckConfig, CheckId, Instance,
    InstanceKind, Status, SuiteConfig, SuiteReport,
};

struct Verdict {
    ok: bool,
    summary: String,
}

fn complexes_up_to(r: usize) -> Vec<Instance> {
    (1..=r)
        .flat_map(|k| enumerate_instances(InstanceKind::Complex, k, false).unwrap())
        .collect()
}

fn graphs_up_to(r: usize) -> Vec<Instance> {
    (1..=r)
        .flat_map(|k| enumerate_instances(InstanceKind::Graph, k, false).unwrap())
        .collect()
}

fn random_graphs() -> Vec<Instance> {
    let cfg = SuiteConfig::random(InstanceKind::Graph, 6..=7, 200, 20_240_601, CheckConfig::new(3));
    suite_instances(&cfg).unwrap()
}

/// The first 200 random complexes on 5 vertices whose ideal is nonzero.
fn random_complexes() -> Vec<Instance> {
    let cfg = SuiteConfig::random(InstanceKind::Complex, 5..=5, 400, 7_000_001, CheckConfig::new(3));
    suite_instances(&cfg)
        .unwrap()
        .into_iter()
        .filter(|i| !i.complex().is_full_simplex())
        .take(200)
        .collect()
}

/// Runs `checks` on every instance; returns (pass, fail, skip) and the first failure.
fn tally(instances: &[Instance], config: &CheckConfig) -> (usize, usize, usize, Option<String>) {
    let (mut p, mut f, mut s, mut first) = (0, 0, 0, None);
    for inst in instances {
        for rec in run_checks(inst, config).unwrap() {
            match rec.status {
                Status::Pass => p += 1,
                Status::Fail if rec.report_only => p += 1,
                Status::Fail => {
                    f += 1;
                    if first.is_none() {
                        first = Some(serde_json::to_string(&rec).unwrap());
                    }
                }
                Status::Skip => s += 1,
            }
        }
    }
    (p, f, s, first)
}

fn verdict_from_tally(label: &str, t: (usize, usize, usize, Option<String>), min_pass: usize) -> Verdict {
    let (p, f, s, first) = t;
    let mut summary = format!("{label}: {p} pass, {f} fail, {s} skip");
    if let Some(line) = first {
        summary.push_str(&format!("; first failure {line}"));
    }
    if p < min_pass {
        summary.push_str(&format!("; expected at least {min_pass} passing records"));
    }
    Verdict {
        ok: f == 0 && p >= min_pass,
        summary,
    }
}

fn criterion_1() -> Verdict {
    let suite = complexes_up_to(4);
    let cfg = CheckConfig::new(3).with_checks([CheckId::OracleEq]);
    let t = tally(&suite, &cfg);
    // every non-simplex complex contributes one record per n
    let nonzero = suite.iter().filter(|i| !i.complex().is_full_simplex()).count();
    verdict_from_tally(&format!("{} complexes, n = 1..3", suite.len()), t, 3 * nonzero)
}

fn criterion_2() -> Verdict {
    let suite = complexes_up_to(4);
    let cfg = CheckConfig::new(1).with_checks([CheckId::HochsterN1]);
    let nonzero = suite.iter().filter(|i| !i.complex().is_full_simplex()).count();
    let mut v = verdict_from_tally(&format!("{} complexes, n = 1", suite.len()), tally(&suite, &cfg), nonzero);
    let triangle = SimplicialComplex::from_lists(3, &[vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
    let rec = run_checks(&Instance::Complex(triangle), &cfg).unwrap();
    let triangle_ok = rec.len() == 1 && rec[0].status == Status::Pass && rec[0].lhs == json!(3);
    v.summary.push_str(&format!("; hollow triangle reg(I) = {}", rec[0].lhs));
    v.ok &= triangle_ok;
    v
}

fn criterion_3() -> Verdict {
    let cfg = CheckConfig::new(3).with_checks([CheckId::Thm2_2, CheckId::Thm2_3, CheckId::Cor2_4]);
    let exhaustive = complexes_up_to(4);
    let random = random_complexes();
    let a = tally(&exhaustive, &cfg);
    let b = tally(&random, &cfg);
    let nonzero_random = random.iter().filter(|i| !i.complex().is_full_simplex()).count();
    let va = verdict_from_tally(&format!("{} exhaustive", exhaustive.len()), a, 1);
    let vb = verdict_from_tally(&format!("{} random r = 5", random.len()), b, 9 * nonzero_random);
    Verdict {
        ok: va.ok && vb.ok && nonzero_random >= 200,
        summary: format!("{}; {}", va.summary, vb.summary),
    }
}

fn criterion_4() -> Verdict {
    let cfg = CheckConfig::new(3).with_checks([CheckId::Lem1_8Lower, CheckId::Thm3_4Ordmatch]);
    let exhaustive = graphs_up_to(5);
    let random = random_graphs();
    let edged = random.iter().filter(|i| !i.complex().is_full_simplex()).count();
    let va = verdict_from_tally(&format!("{} graphs on <= 5 vertices", exhaustive.len()), tally(&exhaustive, &cfg), 1);
    let vb = verdict_from_tally(&format!("{} random graphs on 6-7 vertices", random.len()), tally(&random, &cfg), 6 * edged);
    Verdict {
        ok: va.ok && vb.ok && random.len() >= 200,
        summary: format!("{}; {}", va.summary, vb.summary),
    }
}

fn criterion_5() -> Verdict {
    let mut graphs = graphs_up_to(5);
    graphs.extend(random_graphs());
    let two = rational_int(2);
    let mut checked = 0;
    let mut bad = Vec::new();
    for inst in &graphs {
        let Instance::Graph(g) = inst else { unreachable!() };
        if g.edges().is_empty() {
            continue;
        }
        checked += 1;
        let d = delta_invariant(&g.independence_complex()).unwrap();
        if d.delta != two {
            bad.push(format!("{}: {}", serde_json::to_string(inst).unwrap(), d.delta));
        }
    }
    Verdict {
        ok: bad.is_empty() && checked > 0,
        summary: match bad.first() {
            None => format!("{checked} graphs with an edge, all with delta = 2"),
            Some(first) => format!("{checked} graphs with an edge, {} with delta != 2, first {first}", bad.len()),
        },
    }
}

fn criterion_6() -> Verdict {
    let cfg = CheckConfig::new(3).with_checks([CheckId::Ex2_7]);
    let mut instances = Vec::new();
    for m in 2..=5 {
        for k in 1..m {
            let c = uniform_matroid(k, m);
            if !c.is_cone() {
                instances.push(Instance::Complex(c));
            }
        }
    }
    let count = instances.len();
    let mut v = verdict_from_tally(&format!("{count} uniform matroids"), tally(&instances, &cfg), 3 * count);
    let u24 = run_checks(&Instance::Complex(uniform_matroid(2, 4)), &cfg).unwrap();
    let regs: Vec<_> = u24.iter().map(|r| r.lhs.clone()).collect();
    v.ok &= regs == vec![json!(3), json!(6), json!(9)];
    v.summary.push_str(&format!("; U(2,4) reg = {}", serde_json::Value::Array(regs)));
    v
}

fn criterion_7() -> Verdict {
    let complexes: Vec<Instance> = (1..=5)
        .flat_map(|k| enumerate_instances(InstanceKind::Complex, k, true).unwrap())
        .collect();
    let hypergraphs: Vec<Instance> = (1..=4)
        .flat_map(|k| enumerate_instances(InstanceKind::Hypergraph, k, false).unwrap())
        .collect();
    let terai = CheckConfig::new(1).with_checks([CheckId::Lem1_3Terai]);
    let ds = CheckConfig::new(1).with_checks([CheckId::Lem1_7Ds]);
    let va = verdict_from_tally(&format!("Terai on {} complexes (up to iso)", complexes.len()), tally(&complexes, &terai), 1);
    let vb = verdict_from_tally(&format!("Dao-Schweig on {} hypergraphs", hypergraphs.len()), tally(&hypergraphs, &ds), 1);
    Verdict {
        ok: va.ok && vb.ok,
        summary: format!("{}; {}", va.summary, vb.summary),
    }
}

fn criterion_8() -> Verdict {
    let hypergraphs: Vec<Instance> = graphs_up_to(5)
        .into_iter()
        .map(|i| match i {
            Instance::Graph(g) => Instance::Hypergraph(g.to_hypergraph()),
            other => other,
        })
        .collect();
    let cfg = CheckConfig::new(3).with_checks([CheckId::Thm2_6]);
    let edged = hypergraphs.iter().filter(|i| !i.complex().is_full_simplex()).count();
    verdict_from_tally(&format!("{} graphs as hypergraphs, n = 1..3", hypergraphs.len()), tally(&hypergraphs, &cfg), 3 * edged)
}

fn criterion_9() -> Verdict {
    let suite = complexes_up_to(4);
    let cfg = CheckConfig::new(2).with_checks([CheckId::Lem2_1Restrict]);
    let nonzero = suite.iter().filter(|i| !i.complex().is_full_simplex()).count();
    verdict_from_tally(&format!("{} complexes, n = 1..2", suite.len()), tally(&suite, &cfg), 2 * nonzero)
}

fn criterion_10() -> Verdict {
    let configs = [
        SuiteConfig::exhaustive(InstanceKind::Graph, 4, CheckConfig::new(2)),
        SuiteConfig::exhaustive(InstanceKind::Complex, 3, CheckConfig::new(2)),
        SuiteConfig::random(InstanceKind::Complex, 4..=5, 20, 99, CheckConfig::new(2)),
        SuiteConfig::random(InstanceKind::Hypergraph, 3..=4, 20, 5, CheckConfig::new(2)),
    ];
    let mut lines = 0;
    let mut differing = BTreeSet::new();
    for (k, cfg) in configs.iter().enumerate() {
        let run = |threads: usize| -> SuiteReport {
            let mut c = cfg.clone();
            c.threads = Some(threads);
            run_suite(&c).unwrap()
        };
        let a = run(1).to_jsonl_without_timing();
        let b = run(2).to_jsonl_without_timing();
        lines += a.lines().count();
        if a != b || a.is_empty() {
            differing.insert(k);
        }
    }
    Verdict {
        ok: differing.is_empty(),
        summary: if differing.is_empty() {
            format!("{lines} report lines identical across 1 and 2 threads")
        } else {
            format!("{lines} report lines compared, suites differing: {differing:?}")
        },
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict, u64); 10] = [
        ("1 oracle equivalence (Takayama = Betti), complexes r <= 4, n <= 3", criterion_1, 600),
        ("2 Hochster link formula at n = 1", criterion_2, 600),
        ("3 a-invariant bound, main bound and dimension bound", criterion_3, 900),
        ("4 matching sandwich for graphs", criterion_4, 1200),
        ("5 delta(I(G)) = 2", criterion_5, 600),
        ("6 matroid equality", criterion_6, 600),
        ("7 Terai duality and Dao-Schweig", criterion_7, 600),
        ("8 hypergraph bound with edgewise domination", criterion_8, 600),
        ("9 restriction monotonicity", criterion_9, 600),
        ("10 report determinism", criterion_10, 600),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let id = name.split(' ').next().unwrap();
        if !filter.is_empty() && !filter.iter().any(|f| f == id) {
            continue;
        }
        let start = Instant::now();
        let v = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let ok = v.ok && in_time;
        if !ok {
            failed += 1;
        }
        println!(
            "{} criterion {name} [{:.1}s, limit {limit}s]: {}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            v.summary
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance criteria failed");
        ExitCode::FAILURE
    }
}
