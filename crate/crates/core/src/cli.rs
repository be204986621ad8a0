//! The `symreg` command line.
//!
//! Exit codes: 0 success (or every check passed), 1 a mathematical
//! disagreement or failed check, 2 a usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cohomology::{a_invariants, reg_links, reg_symbolic_with_witness};
use crate::combinatorics::{Graph, Hypergraph, SimplicialComplex};
use crate::error::{Error, Result};
use crate::exactalg::{FieldSpec, HomologyCache};
use crate::extended::ExtInt;
use crate::ideals::{reg_via_betti, stanley_reisner, symbolic_power};
use crate::invariants::{b_invariant, epsilon, matching_numbers};
use crate::io::{read_json, to_json};
use crate::polyhedra::delta_invariant;
use crate::verify::{enumerate_instances, run_suite, CheckConfig, CheckId, InstanceKind, SuiteConfig};

#[derive(Parser, Debug)]
#[command(name = "symreg", version, about = "Regularity of symbolic powers of square-free monomial ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Takayama,
    Betti,
    Both,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct DualInput {
    #[arg(long, value_name = "FILE")]
    complex: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    hypergraph: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct InvariantsInput {
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    hypergraph: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    complex: Option<PathBuf>,
}

fn parse_field(s: &str) -> std::result::Result<FieldSpec, String> {
    s.parse::<FieldSpec>().map_err(|e| e.to_string())
}

fn parse_kind(s: &str) -> std::result::Result<InstanceKind, String> {
    s.parse::<InstanceKind>().map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// reg(I_Δ^(n)) by local cohomology, by Betti numbers, or both.
    Reg {
        #[arg(long, value_name = "FILE")]
        complex: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// Field characteristic: 0 for Q, or a prime.
        #[arg(long = "char", value_name = "P", default_value = "0", value_parser = parse_field)]
        field: FieldSpec,
        /// Also print the a-invariants and a degree realizing the regularity.
        #[arg(long)]
        witness: bool,
        #[arg(long, value_enum, default_value = "takayama")]
        method: Method,
    },
    /// δ(I_Δ) with a vertex of the symbolic polyhedron attaining it.
    Delta {
        #[arg(long, value_name = "FILE")]
        complex: PathBuf,
    },
    /// Minimal generators of I_Δ^(n).
    SymbolicPower {
        #[arg(long, value_name = "FILE")]
        complex: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Alexander dual of a complex, or the dual (minimal vertex covers) of a hypergraph.
    Dual {
        #[command(flatten)]
        input: DualInput,
    },
    /// Every combinatorial invariant of a graph, hypergraph, or complex.
    Invariants {
        #[command(flatten)]
        input: InvariantsInput,
        #[arg(long = "char", value_name = "P", default_value = "0", value_parser = parse_field)]
        field: FieldSpec,
    },
    /// Run the machine checks over enumerated or random instances.
    Verify {
        /// complex, graph, hypergraph or matroid.
        #[arg(long, value_parser = parse_kind)]
        kind: InstanceKind,
        #[arg(long)]
        max_vertices: usize,
        /// Smallest vertex count (default 1, or max-vertices with --samples).
        #[arg(long)]
        min_vertices: Option<usize>,
        #[arg(long, default_value_t = 3)]
        n_max: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Draw this many random instances instead of enumerating.
        #[arg(long)]
        samples: Option<usize>,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        /// JSON-lines report; a CSV summary is written next to it.
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
        #[arg(long = "char", value_name = "P", default_value = "0", value_parser = parse_field)]
        field: FieldSpec,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        up_to_iso: bool,
    },
    /// List every instance of a kind on r vertices as JSON lines.
    Enumerate {
        #[arg(long, value_parser = parse_kind)]
        kind: InstanceKind,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        up_to_iso: bool,
    },
}

/// Where the CSV summary of a report at `out` goes: `report.jsonl` → `report.summary.csv`.
pub fn summary_path(out: &Path) -> PathBuf {
    out.with_extension("summary.csv")
}

fn betti_reg(complex: &SimplicialComplex, n: u32, field: FieldSpec) -> Result<ExtInt> {
    if complex.is_full_simplex() {
        return Ok(ExtInt::NegInfinity);
    }
    Ok(ExtInt::Finite(reg_via_betti(&symbolic_power(complex, n)?, field)?))
}

fn reg_command(path: &Path, n: u32, field: FieldSpec, witness: bool, method: Method) -> Result<(Value, i32)> {
    let complex: SimplicialComplex = read_json(path)?;
    let mut out = serde_json::Map::new();
    let mut code = 0;
    let takayama = if method == Method::Betti {
        None
    } else {
        let mut cache = HomologyCache::new(field);
        Some(reg_symbolic_with_witness(&complex, n, &mut cache)?)
    };
    let betti = if method == Method::Takayama {
        None
    } else {
        Some(betti_reg(&complex, n, field)?)
    };
    match (&takayama, betti) {
        (Some((t, _)), Some(b)) if *t == b => {
            out.insert("reg".into(), json!(t));
            out.insert("methods_agree".into(), json!(true));
        }
        (Some((t, _)), Some(b)) => {
            out.insert("reg_takayama".into(), json!(t));
            out.insert("reg_betti".into(), json!(b));
            out.insert("methods_agree".into(), json!(false));
            code = 1;
        }
        (Some((t, _)), None) => {
            out.insert("reg".into(), json!(t));
        }
        (None, Some(b)) => {
            out.insert("reg".into(), json!(b));
        }
        (None, None) => unreachable!(),
    }
    if witness {
        if let Some((_, w)) = &takayama {
            out.insert("witness".into(), json!(w));
        }
        let profile = a_invariants(&complex, n, field)?;
        out.insert("a_invariants".into(), json!(profile.values()));
    }
    Ok((Value::Object(out), code))
}

fn complex_invariants(complex: &SimplicialComplex, field: FieldSpec) -> Result<serde_json::Map<String, Value>> {
    let mut m = serde_json::Map::new();
    m.insert("r".into(), json!(complex.r()));
    m.insert("dim".into(), json!(complex.dim()));
    m.insert("is_matroid".into(), json!(complex.is_matroid()));
    m.insert("is_cone".into(), json!(complex.is_cone()));
    if complex.is_void() || complex.is_full_simplex() {
        return Ok(m);
    }
    let ideal = stanley_reisner(complex)?;
    m.insert("d".into(), json!(ideal.max_gen_degree()?));
    m.insert("reg".into(), json!(reg_links(complex, field)? + 1));
    m.insert("delta".into(), json!(delta_invariant(complex)?));
    let b = b_invariant(complex, field)?;
    m.insert(
        "b".into(),
        json!({
            "value": b.value,
            "witness": b.witness.iter().map(|&j| complex.facets()[j].to_vec()).collect::<Vec<_>>(),
        }),
    );
    Ok(m)
}

fn hypergraph_invariants(h: &Hypergraph, field: FieldSpec) -> Result<serde_json::Map<String, Value>> {
    let complex = crate::ideals::MonomialIdeal::edge_ideal(h).complex_of();
    let mut m = complex_invariants(&complex, field)?;
    m.insert("independence_complex".into(), json!(complex.facet_lists()));
    if !h.edges().is_empty() {
        let dual = h.dual()?;
        m.insert("epsilon".into(), json!(epsilon(h)?));
        m.insert("epsilon_dual".into(), json!(epsilon(&dual)?));
        m.insert("dual_edges".into(), json!(dual.edge_lists()));
    }
    Ok(m)
}

fn invariants_command(input: &InvariantsInput, field: FieldSpec) -> Result<Value> {
    let m = if let Some(p) = &input.graph {
        let g: Graph = read_json(p)?;
        let mut m = hypergraph_invariants(&g.to_hypergraph(), field)?;
        let mn = serde_json::to_value(matching_numbers(&g)).expect("serializable");
        if let Value::Object(mn) = mn {
            m.extend(mn);
        }
        m
    } else if let Some(p) = &input.hypergraph {
        let h: Hypergraph = read_json(p)?;
        hypergraph_invariants(&h, field)?
    } else {
        let c: SimplicialComplex = read_json(input.complex.as_ref().expect("clap enforces one input"))?;
        complex_invariants(&c, field)?
    };
    Ok(Value::Object(m))
}

fn dispatch(cli: Cli, stdout: &mut dyn Write) -> Result<i32> {
    let print = |stdout: &mut dyn Write, v: &str| {
        writeln!(stdout, "{v}").map_err(|e| Error::Invalid(format!("cannot write output: {e}")))
    };
    match cli.command {
        Command::Reg { complex, n, field, witness, method } => {
            let (v, code) = reg_command(&complex, n, field, witness, method)?;
            print(stdout, &v.to_string())?;
            Ok(code)
        }
        Command::Delta { complex } => {
            let c: SimplicialComplex = read_json(&complex)?;
            print(stdout, &to_json(&delta_invariant(&c)?))?;
            Ok(0)
        }
        Command::SymbolicPower { complex, n } => {
            let c: SimplicialComplex = read_json(&complex)?;
            print(stdout, &to_json(&symbolic_power(&c, n)?))?;
            Ok(0)
        }
        Command::Dual { input } => {
            let text = if let Some(p) = input.complex {
                let c: SimplicialComplex = read_json(&p)?;
                to_json(&c.alexander_dual()?)
            } else {
                let h: Hypergraph = read_json(input.hypergraph.as_ref().expect("clap enforces one input"))?;
                to_json(&h.dual()?)
            };
            print(stdout, &text)?;
            Ok(0)
        }
        Command::Invariants { input, field } => {
            print(stdout, &invariants_command(&input, field)?.to_string())?;
            Ok(0)
        }
        Command::Verify {
            kind,
            max_vertices,
            min_vertices,
            n_max,
            seed,
            samples,
            checks,
            out,
            field,
            threads,
            up_to_iso,
        } => {
            let checks: Vec<CheckId> = CheckId::parse_list(&checks)?.into_iter().collect();
            let config = SuiteConfig {
                kind,
                min_vertices,
                max_vertices,
                checks: CheckConfig::new(n_max).with_checks(checks).with_field(field),
                seed,
                samples,
                up_to_iso,
                threads,
            };
            let report = run_suite(&config)?;
            let write_err = |e: std::io::Error| Error::Invalid(format!("cannot write {}: {e}", out.display()));
            let file = std::fs::File::create(&out).map_err(write_err)?;
            report.write_jsonl(std::io::BufWriter::new(file)).map_err(write_err)?;
            let csv = summary_path(&out);
            std::fs::write(&csv, report.summary_csv())
                .map_err(|e| Error::Invalid(format!("cannot write {}: {e}", csv.display())))?;
            let failures = report.failures().count();
            let summary = json!({
                "instances": report.instance_count,
                "records": report.records.len(),
                "failures": failures,
                "report": out.display().to_string(),
                "summary": csv.display().to_string(),
            });
            print(stdout, &summary.to_string())?;
            Ok(if failures == 0 { 0 } else { 1 })
        }
        Command::Enumerate { kind, r, up_to_iso } => {
            for inst in enumerate_instances(kind, r, up_to_iso)? {
                print(stdout, &to_json(&inst))?;
            }
            Ok(0)
        }
    }
}

/// Parses `args` (program name first) and runs the command, returning the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
