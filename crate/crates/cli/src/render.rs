//! JSON and text renderings of command results.

use comin::feasibility::{FeasibilityReport, Inequality, Mode};
use comin::horn::{HornComparison, LambdaSource, NaiveComparison};
use comin::notation::format_position;
use comin::oracles::OracleKind;
use comin::orbit::m_of_p;
use comin::space::{Position, Space};
use serde_json::{json, Value};
use std::fmt::Write;
use std::process::ExitCode;

/// A command result in both output formats, with its exit status.
pub struct Rendered {
    pub json: Value,
    pub text: String,
    pub code: ExitCode,
}

impl Rendered {
    fn ok(json: Value, text: String) -> Rendered {
        Rendered { json, text, code: ExitCode::SUCCESS }
    }

    fn status(json: Value, text: String, success: bool) -> Rendered {
        Rendered { json, text, code: if success { ExitCode::SUCCESS } else { ExitCode::from(1) } }
    }
}

pub struct FactorInfo {
    pub name: String,
    pub root_system: String,
    pub node: usize,
    pub dim: usize,
    pub positions: usize,
    pub max_orbit_rank: usize,
}

pub struct OrbitRow {
    pub factor: usize,
    pub r: usize,
    pub dim_z: usize,
    pub levi_quotient: String,
    pub omitted: Vec<usize>,
    pub lambdas: usize,
}

pub struct Mismatch {
    pub tuple: Vec<String>,
    pub recursion: bool,
    pub oracle: bool,
}

fn partition(p: &[usize]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn partitions(ps: &[Vec<usize>]) -> Vec<String> {
    ps.iter().map(|p| partition(p)).collect()
}

fn positions(space: &Space, ps: &[Position]) -> Vec<String> {
    ps.iter().map(|p| format_position(space, p)).collect()
}

pub fn space_info(space: &Space, factors: Vec<FactorInfo>) -> Rendered {
    let mut text = format!("{}: dim {}\n", space.name(), space.dim());
    let mut list = Vec::new();
    for f in &factors {
        writeln!(
            text,
            "  {}: {} node {}, dim {}, {} positions, max orbit rank {}",
            f.name, f.root_system, f.node, f.dim, f.positions, f.max_orbit_rank
        )
        .unwrap();
        list.push(json!({
            "name": f.name,
            "root_system": f.root_system,
            "node": f.node,
            "dim": f.dim,
            "positions": f.positions,
            "max_orbit_rank": f.max_orbit_rank,
        }));
    }
    Rendered::ok(json!({ "space": space.name(), "dim": space.dim(), "factors": list }), text)
}

pub fn orbits(space: &Space, rows: Vec<OrbitRow>) -> Rendered {
    let mut text = format!("{}\n  factor  r  dim z  L/Q  omitted  #λ\n", space.name());
    let mut list = Vec::new();
    for o in &rows {
        let omitted: Vec<String> = o.omitted.iter().map(|v| v.to_string()).collect();
        writeln!(
            text,
            "  {}  {}  {}  {}  {{{}}}  {}",
            o.factor,
            o.r,
            o.dim_z,
            o.levi_quotient,
            omitted.join(","),
            o.lambdas
        )
        .unwrap();
        list.push(json!({
            "factor": o.factor,
            "r": o.r,
            "dim_z": o.dim_z,
            "levi_quotient": o.levi_quotient,
            "omitted": o.omitted,
            "lambdas": o.lambdas,
        }));
    }
    Rendered::ok(json!({ "space": space.name(), "orbits": list }), text)
}

pub fn feasible(space: &Space, pos: &[Position], report: &FeasibilityReport, mode: Mode) -> comin::Result<Rendered> {
    let names = positions(space, pos);
    let mut text =
        format!("{} {}: {}\n", space.name(), names.join(" "), if report.feasible { "feasible" } else { "infeasible" });
    let witness = match &report.witness {
        None => Value::Null,
        Some(w) => {
            let lambdas = if w.r == 0 {
                Vec::new()
            } else {
                let datum = &m_of_p(&space.factors[w.factor])?[w.r - 1];
                positions(&datum.levi_quotient(), &w.lambdas)
            };
            if w.r == 0 {
                writeln!(text, "  codimension {} exceeds dimension {}", w.lhs, w.rhs).unwrap();
            } else {
                writeln!(
                    text,
                    "  violated inequality on factor {}, r = {}, λ = {}: {} > {}",
                    w.factor,
                    w.r,
                    lambdas.join(" "),
                    w.lhs,
                    w.rhs
                )
                .unwrap();
            }
            json!({ "factor": w.factor, "r": w.r, "lambdas": lambdas, "lhs": w.lhs, "rhs": w.rhs })
        }
    };
    let json = json!({
        "space": space.name(),
        "positions": names,
        "mode": mode.to_string(),
        "feasible": report.feasible,
        "witness": witness,
    });
    Ok(Rendered::status(json, text, report.feasible))
}

pub fn enumerate(space: &Space, s: usize, top_only: bool, tuples: &[Vec<Position>]) -> Rendered {
    let list: Vec<Vec<String>> = tuples.iter().map(|t| positions(space, t)).collect();
    let mut text = String::new();
    for t in &list {
        writeln!(text, "{}", t.join(" ")).unwrap();
    }
    writeln!(text, "{} feasible {s}-tuples on {}", list.len(), space.name()).unwrap();
    Rendered::ok(
        json!({ "space": space.name(), "s": s, "top_only": top_only, "count": list.len(), "tuples": list }),
        text,
    )
}

pub fn inequalities(space: &Space, s: usize, list: &[Inequality]) -> Rendered {
    let mut text = String::new();
    let mut out = Vec::new();
    for q in list {
        let slots: Vec<Vec<usize>> = q.slots.iter().map(|b| b.iter().collect()).collect();
        let terms: Vec<String> = slots
            .iter()
            .enumerate()
            .map(|(i, w)| {
                let w: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                format!("|π{}∩{{{}}}|", i + 1, w.join(","))
            })
            .collect();
        writeln!(text, "[factor {} r {}] {} ≤ {}", q.factor, q.r, terms.join(" + "), q.rhs).unwrap();
        out.push(json!({ "factor": q.factor, "r": q.r, "slots": slots, "rhs": q.rhs }));
    }
    writeln!(text, "{} inequalities for {s}-tuples on {}", list.len(), space.name()).unwrap();
    Rendered::ok(json!({ "space": space.name(), "s": s, "inequalities": out }), text)
}

pub fn verify(
    space: &Space,
    s: usize,
    oracle: OracleKind,
    checked: usize,
    feasible: usize,
    mismatches: Vec<Mismatch>,
) -> Rendered {
    let mut text = format!(
        "{}: {checked} top-degree {s}-tuples, {feasible} feasible, {} mismatches against {oracle}\n",
        space.name(),
        mismatches.len()
    );
    let list: Vec<Value> = mismatches
        .iter()
        .map(|m| {
            writeln!(text, "  {}: recursion {} oracle {}", m.tuple.join(" "), m.recursion, m.oracle).unwrap();
            json!({ "tuple": m.tuple, "recursion": m.recursion, "oracle": m.oracle })
        })
        .collect();
    let ok = list.is_empty();
    let json = json!({
        "space": space.name(),
        "s": s,
        "oracle": oracle.to_string(),
        "tuples": checked,
        "feasible": feasible,
        "mismatches": list,
    });
    Rendered::status(json, text, ok)
}

pub fn horn_compare(space: &Space, s: usize, c: &HornComparison) -> Rendered {
    let mut text = format!(
        "{}: {} top-degree {s}-tuples, {} feasible, {} disagreements\n",
        space.name(),
        c.tuples,
        c.feasible,
        c.mismatches.len()
    );
    let list: Vec<Value> = c
        .mismatches
        .iter()
        .map(|v| {
            let t = partitions(&v.tuple);
            writeln!(
                text,
                "  {}: classical {} one-factor {} recursion {} lr {}",
                t.join(" "),
                v.classical,
                v.one_factor,
                v.recursion,
                v.oracle
            )
            .unwrap();
            json!({
                "tuple": t,
                "classical": v.classical,
                "one_factor": v.one_factor,
                "recursion": v.recursion,
                "lr": v.oracle,
            })
        })
        .collect();
    let ok = list.is_empty();
    let json = json!({
        "space": space.name(),
        "s": s,
        "tuples": c.tuples,
        "feasible": c.feasible,
        "mismatches": list,
    });
    Rendered::status(json, text, ok)
}

pub fn naive_lg(n: usize, s: usize, source: LambdaSource, c: &NaiveComparison) -> Rendered {
    let mut text = format!(
        "LG({n}), {s}-tuples, λ from {source}: {} top-degree tuples, {} feasible, {} pass the naive inequalities\n",
        c.tuples, c.feasible, c.naive_feasible
    );
    writeln!(text, "  feasible but violating: {}", c.false_negatives.len()).unwrap();
    let negatives: Vec<Value> = c
        .false_negatives
        .iter()
        .map(|(t, w)| {
            let t = partitions(t);
            let l = partitions(&w.lambdas);
            writeln!(text, "    {}: r = {}, λ = {}: {} < {}", t.join(" "), w.r, l.join(" "), w.lhs, w.rhs).unwrap();
            json!({ "tuple": t, "r": w.r, "lambdas": l, "lhs": w.lhs, "rhs": w.rhs })
        })
        .collect();
    writeln!(text, "  infeasible but passing: {}", c.false_positives.len()).unwrap();
    let positives: Vec<Value> = c
        .false_positives
        .iter()
        .map(|t| {
            let t = partitions(t);
            writeln!(text, "    {}", t.join(" ")).unwrap();
            json!(t)
        })
        .collect();
    let ok = negatives.is_empty() && positives.is_empty();
    let json = json!({
        "n": n,
        "s": s,
        "lambda_source": source.to_string(),
        "tuples": c.tuples,
        "feasible": c.feasible,
        "naive_feasible": c.naive_feasible,
        "false_negatives": negatives,
        "false_positives": positives,
    });
    Rendered::status(json, text, ok)
}
