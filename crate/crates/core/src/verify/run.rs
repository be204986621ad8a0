use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use super::check::CheckId;
use super::instance::Instance;
use crate::cohomology::{
    a_invariants_with, nonvanishing_degrees_with, reg_links_with, reg_symbolic_with, AInvariantProfile,
    DegreeVector,
};
use crate::combinatorics::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::exactalg::{fraction_string, FieldSpec, HomologyCache, Rational};
use crate::extended::ExtInt;
use crate::ideals::{betti_table_with, contraction, stanley_reisner, symbolic_power, MonomialIdeal};
use crate::invariants::{b_invariant_with, epsilon, matching_numbers, BInvariant, MatchingNumbers};
use crate::polyhedra::{chamber_polytope, delta_invariant, delta_of, witness_chamber, DeltaResult};

pub const MAX_N: u32 = 4;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// One line of a verification report: a check evaluated on one instance at one `n`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct CheckRecord {
    pub check: CheckId,
    pub n: Option<u32>,
    pub status: Status,
    pub lhs: Value,
    pub rhs: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub report_only: bool,
    pub instance: Instance,
    pub elapsed_us: u64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckConfig {
    pub n_max: u32,
    pub field: FieldSpec,
    pub checks: BTreeSet<CheckId>,
}

impl CheckConfig {
    pub fn new(n_max: u32) -> Self {
        CheckConfig {
            n_max,
            field: FieldSpec::RATIONALS,
            checks: CheckId::ALL.into_iter().collect(),
        }
    }

    pub fn with_checks(mut self, checks: impl IntoIterator<Item = CheckId>) -> Self {
        self.checks = checks.into_iter().collect();
        self
    }

    pub fn with_field(mut self, field: FieldSpec) -> Self {
        self.field = field;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(1..=MAX_N).contains(&self.n_max) {
            return Err(Error::Invalid(format!(
                "n_max must be between 1 and {MAX_N} (got {})",
                self.n_max
            )));
        }
        Ok(())
    }
}

struct Outcome {
    status: Status,
    lhs: Value,
    rhs: Value,
    detail: Option<Value>,
    reason: Option<String>,
}

impl Outcome {
    fn compare(ok: bool, lhs: impl Into<Value>, rhs: impl Into<Value>) -> Self {
        Outcome {
            status: if ok { Status::Pass } else { Status::Fail },
            lhs: lhs.into(),
            rhs: rhs.into(),
            detail: None,
            reason: None,
        }
    }

    fn skip(reason: impl Into<String>) -> Self {
        Outcome {
            status: Status::Skip,
            lhs: Value::Null,
            rhs: Value::Null,
            detail: None,
            reason: Some(reason.into()),
        }
    }

    fn with_detail(mut self, detail: Value) -> Self {
        self.detail = Some(detail);
        self
    }
}

fn q(v: &Rational) -> Value {
    Value::String(fraction_string(v))
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn ext(v: ExtInt) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn at_most(a: ExtInt, b: &Rational) -> bool {
    match a {
        ExtInt::NegInfinity => true,
        ExtInt::Finite(v) => int(v) <= *b,
    }
}

/// Everything the checks share for one instance, computed on first use.
struct Context<'a> {
    instance: &'a Instance,
    complex: SimplicialComplex,
    ideal: MonomialIdeal,
    cache: HomologyCache,
    keep_degrees: bool,
    delta: Option<DeltaResult>,
    b: Option<BInvariant>,
    matching: Option<MatchingNumbers>,
    degrees: BTreeMap<u32, Vec<(usize, DegreeVector)>>,
    profiles: BTreeMap<u32, AInvariantProfile>,
    betti_reg: BTreeMap<u32, i64>,
}

impl<'a> Context<'a> {
    fn delta(&mut self) -> Result<Rational> {
        if self.delta.is_none() {
            self.delta = Some(delta_invariant(&self.complex)?);
        }
        Ok(self.delta.as_ref().unwrap().delta.clone())
    }

    /// `δ (n - 1)`.
    fn delta_slope(&mut self, n: u32) -> Result<Rational> {
        Ok(self.delta()? * int(n as i64 - 1))
    }

    fn b(&mut self) -> Result<BInvariant> {
        if self.b.is_none() {
            self.b = Some(b_invariant_with(&self.complex, &mut self.cache)?);
        }
        Ok(self.b.clone().unwrap())
    }

    fn matching(&mut self) -> MatchingNumbers {
        let g = self.instance.graph().expect("graph checks run on graphs");
        self.matching.get_or_insert_with(|| matching_numbers(g)).clone()
    }

    fn degrees(&mut self, n: u32) -> Result<&[(usize, DegreeVector)]> {
        if !self.degrees.contains_key(&n) {
            let d = nonvanishing_degrees_with(&self.complex, n, &mut self.cache)?;
            self.degrees.insert(n, d);
        }
        Ok(&self.degrees[&n])
    }

    fn profile(&mut self, n: u32) -> Result<AInvariantProfile> {
        if !self.profiles.contains_key(&n) {
            let p = if self.keep_degrees {
                let r = self.complex.r();
                AInvariantProfile::from_degrees(r, self.degrees(n)?)
            } else {
                a_invariants_with(&self.complex, n, &mut self.cache)?
            };
            self.profiles.insert(n, p);
        }
        Ok(self.profiles[&n].clone())
    }

    /// `reg(I^(n))` by the local cohomology search.
    fn reg(&mut self, n: u32) -> Result<i64> {
        (self.profile(n)?.quotient_regularity() + 1)
            .finite()
            .ok_or_else(|| Error::Invalid("nonzero ideal with no local cohomology".into()))
    }

    fn reg_betti(&mut self, n: u32) -> Result<i64> {
        if !self.betti_reg.contains_key(&n) {
            let ideal = symbolic_power(&self.complex, n)?;
            let reg = betti_table_with(&ideal, &mut self.cache)?.regularity();
            self.betti_reg.insert(n, reg);
        }
        Ok(self.betti_reg[&n])
    }

    fn d(&self) -> Result<i64> {
        Ok(self.ideal.max_gen_degree()? as i64)
    }

    /// `dim(R / I_Δ) = dim Δ + 1`.
    fn krull_dim(&self) -> i64 {
        self.complex.dim().expect("non-void") + 1
    }

    fn delta_detail(&mut self) -> Result<Value> {
        self.delta()?;
        Ok(serde_json::to_value(self.delta.as_ref().unwrap()).expect("serializable"))
    }
}

fn evaluate(ctx: &mut Context<'_>, check: CheckId, n: u32) -> Result<Outcome> {
    if check.is_graph_only() && ctx.instance.graph().is_none() {
        return Ok(Outcome::skip("graph instances only"));
    }
    if check.needs_hypergraph() && ctx.instance.hypergraph().is_none() {
        return Ok(Outcome::skip("graph or hypergraph instances only"));
    }
    let nn = n as i64;
    Ok(match check {
        CheckId::Thm2_2 => {
            let p = ctx.profile(n)?;
            let rhs = ctx.delta_slope(n)?;
            let top = p.values().iter().copied().max().unwrap_or(ExtInt::NegInfinity);
            let ok = p.values().iter().all(|&a| at_most(a, &rhs));
            Outcome::compare(ok, ext(top), q(&rhs)).with_detail(json!({
                "a": p.values(),
                "delta": ctx.delta_detail()?,
            }))
        }
        CheckId::Thm2_3 => {
            let reg = ctx.reg(n)?;
            let b = ctx.b()?;
            let rhs = ctx.delta_slope(n)? + int(b.value);
            Outcome::compare(int(reg) <= rhs, reg, q(&rhs)).with_detail(json!({
                "b": b.value,
                "b_witness": b.witness.iter().map(|&j| ctx.complex.facets()[j].to_vec()).collect::<Vec<_>>(),
                "delta": ctx.delta_detail()?,
            }))
        }
        CheckId::Cor2_4 => {
            let reg = ctx.reg(n)?;
            let rhs = ctx.delta_slope(n)? + int(ctx.krull_dim() + 1);
            Outcome::compare(int(reg) <= rhs, reg, q(&rhs)).with_detail(json!({
                "dim_quotient": ctx.krull_dim(),
                "delta": ctx.delta_detail()?,
            }))
        }
        CheckId::Thm2_6 => {
            let h = ctx.instance.hypergraph().expect("checked above");
            let dual = h.dual()?;
            let eps = epsilon(&dual)?;
            let reg = ctx.reg(n)?;
            let rhs = ctx.delta_slope(n)? + int(h.vertex_count() as i64 - eps.value as i64);
            Outcome::compare(int(reg) <= rhs, reg, q(&rhs)).with_detail(json!({
                "vertices": h.vertex_count(),
                "epsilon_dual": eps,
                "dual_edges": dual.edge_lists(),
                "delta": ctx.delta_detail()?,
            }))
        }
        CheckId::Ex2_7 => {
            if !ctx.complex.is_matroid() {
                return Ok(Outcome::skip("not a matroid complex"));
            }
            if ctx.complex.is_cone() {
                return Ok(Outcome::skip("cone"));
            }
            let reg = ctx.reg(n)?;
            let (d, s) = (ctx.d()?, ctx.krull_dim());
            let rhs = d * (nn - 1) + s + 1;
            Outcome::compare(reg == rhs, reg, rhs).with_detail(json!({ "d": d, "dim_quotient": s }))
        }
        CheckId::RemLowerDn => {
            let reg = ctx.reg(n)?;
            let rhs = ctx.d()? * nn;
            Outcome::compare(reg >= rhs, reg, rhs)
        }
        CheckId::Lem1_3Terai => {
            let lhs = ctx.reg_betti(1)?;
            let dual = ctx.complex.alexander_dual()?;
            let dual_ideal = stanley_reisner(&dual)?;
            let rhs = betti_table_with(&dual_ideal, &mut ctx.cache)?.pd_quotient() as i64;
            Outcome::compare(lhs == rhs, lhs, rhs).with_detail(json!({ "dual_facets": dual.facet_lists() }))
        }
        CheckId::Lem1_7Ds => {
            let h = ctx.instance.hypergraph().expect("checked above");
            let eps = epsilon(&h)?;
            let lhs = betti_table_with(&ctx.ideal, &mut ctx.cache)?.pd_quotient() as i64;
            let rhs = h.vertex_count() as i64 - eps.value as i64;
            Outcome::compare(lhs <= rhs, lhs, rhs).with_detail(json!({ "epsilon": eps }))
        }
        CheckId::Lem1_8Lower => {
            let m = ctx.matching();
            let reg = ctx.reg(n)?;
            let rhs = 2 * nn + m.induced as i64 - 1;
            Outcome::compare(reg >= rhs, reg, rhs).with_detail(json!({
                "induced": m.induced,
                "witness": m.induced_witness,
            }))
        }
        CheckId::Thm3_4Ordmatch => {
            let m = ctx.matching();
            let reg = ctx.reg(n)?;
            let rhs = 2 * nn + m.ordered as i64 - 1;
            Outcome::compare(reg <= rhs, reg, rhs).with_detail(json!({
                "ordmatch": m.ordered,
                "witness": m.ordered_witness,
            }))
        }
        CheckId::RemCwEquality => {
            let m = ctx.matching();
            if m.ordered != m.induced {
                return Ok(Outcome::skip("ordmatch differs from the induced matching number"));
            }
            let reg = ctx.reg(n)?;
            let rhs = 2 * nn + m.induced as i64 - 1;
            Outcome::compare(reg == rhs, reg, rhs)
        }
        CheckId::Lem2_1Restrict => {
            let reg = ctx.reg(n)?;
            let r = ctx.complex.r();
            let mut worst: Option<(i64, VertexSet)> = None;
            let mut unit = 0usize;
            let mut checked = 0usize;
            let mut sigmas: Vec<VertexSet> = VertexSet::full(r).subsets().filter(|s| s.len() < r).collect();
            sigmas.sort();
            for sigma in sigmas {
                let j = contraction(&ctx.ideal, sigma)?;
                if j.ideal.is_unit() {
                    unit += 1;
                    continue;
                }
                checked += 1;
                let reg_j = reg_symbolic_with(&j.ideal.complex_of(), n, &mut ctx.cache)?
                    .finite()
                    .ok_or_else(|| Error::Invalid("contraction produced the zero ideal".into()))?;
                if worst.map_or(true, |(w, _)| reg_j > w) {
                    worst = Some((reg_j, sigma));
                }
            }
            let (lhs, sigma) = worst.expect("σ = ∅ never gives the unit ideal");
            Outcome::compare(lhs <= reg, lhs, reg).with_detail(json!({
                "worst_sigma": sigma.to_vec(),
                "sigmas_checked": checked,
                "sigmas_unit": unit,
            }))
        }
        CheckId::Lem1_11Chamber => {
            let delta = ctx.delta()?;
            let degrees = ctx.degrees(n)?.to_vec();
            let mut seen: HashMap<(Vec<VertexSet>, usize, Vec<usize>), (bool, Option<Rational>)> = HashMap::new();
            let mut worst: Option<(Rational, DegreeVector)> = None;
            let mut unbounded: Vec<DegreeVector> = Vec::new();
            for (_, alpha) in &degrees {
                let w = witness_chamber(&ctx.complex, n, alpha)?;
                let key = (w.complex.facets().to_vec(), w.complex.r(), w.selected.clone());
                let (bounded, value) = match seen.get(&key) {
                    Some(v) => v.clone(),
                    None => {
                        let c1 = chamber_polytope(&w.complex, &w.selected, 1)?;
                        let v = (c1.is_bounded(), delta_of(&c1).map(|d| d.delta));
                        seen.insert(key, v.clone());
                        v
                    }
                };
                if !bounded {
                    unbounded.push(alpha.clone());
                }
                if let Some(v) = value {
                    if worst.as_ref().map_or(true, |(w, _)| v > *w) {
                        worst = Some((v, alpha.clone()));
                    }
                }
            }
            let Some((lhs, alpha)) = worst else {
                return Ok(Outcome::skip("no chamber has a vertex"));
            };
            let ok = unbounded.is_empty() && lhs <= delta;
            Outcome::compare(ok, q(&lhs), q(&delta)).with_detail(json!({
                "chambers": seen.len(),
                "witness_alpha": alpha,
                "unbounded_alphas": unbounded,
            }))
        }
        CheckId::OracleEq => {
            let lhs = ctx.reg(n)?;
            let rhs = ctx.reg_betti(n)?;
            let witness = ctx.profile(n)?.regularity_witness();
            Outcome::compare(lhs == rhs, lhs, rhs).with_detail(json!({ "takayama_witness": witness }))
        }
        CheckId::HochsterN1 => {
            let links = reg_links_with(&ctx.complex, &mut ctx.cache)? + 1;
            let tak = ctx.reg(1)?;
            let betti = ctx.reg_betti(1)?;
            Outcome::compare(links == tak && tak == betti, links, tak).with_detail(json!({ "betti": betti }))
        }
        CheckId::FakhariDiag => {
            let reg = ctx.reg(n)?;
            let rhs = 2 * nn + ctx.reg(1)? - 2;
            Outcome::compare(reg <= rhs, reg, rhs)
        }
    })
}

/// Evaluates the selected checks on one instance for `n = 1..=n_max`.
///
/// Checks that do not apply to the instance are recorded as skipped. A
/// computation error inside a check is recorded as a failure with its message.
pub fn run_checks(instance: &Instance, config: &CheckConfig) -> Result<Vec<CheckRecord>> {
    config.validate()?;
    let complex = instance.complex();
    let degenerate = complex.is_full_simplex();
    let mut ctx = Context {
        instance,
        ideal: if degenerate {
            MonomialIdeal::zero(complex.r())
        } else {
            instance.ideal()
        },
        complex,
        cache: HomologyCache::new(config.field),
        keep_degrees: config.checks.contains(&CheckId::Lem1_11Chamber),
        delta: None,
        b: None,
        matching: None,
        degrees: BTreeMap::new(),
        profiles: BTreeMap::new(),
        betti_reg: BTreeMap::new(),
    };
    let mut out = Vec::new();
    for &check in &config.checks {
        let ns: Vec<Option<u32>> = if check.is_per_n() {
            (1..=config.n_max).map(Some).collect()
        } else {
            vec![None]
        };
        for n in ns {
            let start = Instant::now();
            let outcome = if degenerate {
                Outcome::skip("zero ideal (full simplex)")
            } else {
                evaluate(&mut ctx, check, n.unwrap_or(1)).unwrap_or_else(|e| Outcome {
                    status: Status::Fail,
                    lhs: Value::Null,
                    rhs: Value::Null,
                    detail: None,
                    reason: Some(format!("error: {e}")),
                })
            };
            out.push(CheckRecord {
                check,
                n,
                status: outcome.status,
                lhs: outcome.lhs,
                rhs: outcome.rhs,
                detail: outcome.detail,
                reason: outcome.reason,
                report_only: check.is_report_only(),
                instance: instance.clone(),
                elapsed_us: start.elapsed().as_micros() as u64,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Graph;
    use crate::verify::instance::uniform_matroid;

    fn lhs_for(records: &[CheckRecord], check: CheckId) -> Vec<Value> {
        records.iter().filter(|r| r.check == check).map(|r| r.lhs.clone()).collect()
    }

    #[test]
    fn single_edge_passes_everything() {
        let rec = run_checks(&Instance::Graph(Graph::path(2)), &CheckConfig::new(3)).unwrap();
        assert!(rec.iter().all(|r| r.status != Status::Fail), "{rec:#?}");
        assert_eq!(lhs_for(&rec, CheckId::OracleEq), vec![json!(2), json!(4), json!(6)]);
    }

    #[test]
    fn uniform_matroid_equality() {
        let c = CheckConfig::new(3).with_checks([CheckId::Ex2_7]);
        let rec = run_checks(&Instance::Complex(uniform_matroid(2, 4)), &c).unwrap();
        assert!(rec.iter().all(|r| r.status == Status::Pass));
        assert_eq!(lhs_for(&rec, CheckId::Ex2_7), vec![json!(3), json!(6), json!(9)]);
    }

    #[test]
    fn path_squeeze() {
        let c = CheckConfig::new(2).with_checks([CheckId::Thm2_6, CheckId::Lem1_8Lower]);
        let rec = run_checks(&Instance::Graph(Graph::path(3)), &c).unwrap();
        assert!(rec.iter().all(|r| r.status == Status::Pass), "{rec:#?}");
        let upper: Vec<Value> = rec.iter().filter(|r| r.check == CheckId::Thm2_6).map(|r| r.rhs.clone()).collect();
        assert_eq!(upper, vec![json!("2"), json!("4")]);
        assert_eq!(lhs_for(&rec, CheckId::Lem1_8Lower), vec![json!(2), json!(4)]);
    }

    #[test]
    fn graph_checks_skip_on_complexes() {
        let c = CheckConfig::new(1).with_checks([CheckId::Thm3_4Ordmatch, CheckId::Lem1_7Ds]);
        let rec = run_checks(&Instance::Complex(uniform_matroid(1, 2)), &c).unwrap();
        assert!(rec.iter().all(|r| r.status == Status::Skip));
    }

    #[test]
    fn full_simplex_is_skipped() {
        let rec = run_checks(&Instance::Complex(SimplicialComplex::simplex(2)), &CheckConfig::new(1)).unwrap();
        assert!(rec.iter().all(|r| r.status == Status::Skip));
        assert_eq!(rec.len(), 16);
    }

    #[test]
    fn n_max_is_bounded() {
        assert!(run_checks(&Instance::Graph(Graph::path(2)), &CheckConfig::new(5)).is_err());
        assert!(run_checks(&Instance::Graph(Graph::path(2)), &CheckConfig::new(0)).is_err());
    }
}
