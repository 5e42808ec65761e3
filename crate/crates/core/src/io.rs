//! Wire formats: JSON parsing and serialization for lattices, vectors,
//! series, candidates and reports, plus the human-readable report renderer.
//!
//! Conventions, shared by every subcommand:
//! - rationals are JSON integers or strings `"p/q"` in lowest terms, never
//!   floats; output always uses strings;
//! - a lattice file is `{"rank": n, "gram": [[..integers..]]}`;
//! - a series file is a list of `{"lambda": [..rationals..], "c": rational}`;
//! - a candidate file is `{"K": <gram object or catalog name>, "weight": q,
//!   "principal_part": [{"coset": [..], "n": q, "c": int}], "c00": int?}`.

use serde_json::{json, Map, Value};

use crate::audit::{AuditReport, CandidateProduct, MkVerdict, WeightCrossCheck};
use crate::catalog;
use crate::error::{Error, Result};
use crate::lattice::{DiscriminantData, GramLattice, LatticeVector};
use crate::rational::{format_rat, parse_rat, Int, Rat};
use crate::series::FourierSeries;

/// Parse a rational from a JSON integer or `"p/q"` string.
pub fn rat_from_json(v: &Value) -> Result<Rat> {
    match v {
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| Error::input(format!("expected integer or \"p/q\", got {n}")))?;
            Ok(Rat::from_integer(Int::from(i)))
        }
        Value::String(s) => parse_rat(s),
        other => Err(Error::input(format!("expected rational, got {other}"))),
    }
}

/// Parse an integer from a JSON integer or string.
pub fn int_from_json(v: &Value) -> Result<Int> {
    let r = rat_from_json(v)?;
    if !r.is_integer() {
        return Err(Error::input(format!("expected integer, got {r}")));
    }
    Ok(r.to_integer())
}

/// Parse a vector: a JSON array of rationals.
pub fn vector_from_json(v: &Value) -> Result<LatticeVector> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::input(format!("expected vector (array), got {v}")))?;
    let coords = arr.iter().map(rat_from_json).collect::<Result<Vec<_>>>()?;
    Ok(LatticeVector::new(coords))
}

pub fn vector_to_json(v: &LatticeVector) -> Value {
    Value::Array(v.coords().iter().map(|c| Value::String(format_rat(c))).collect())
}

/// Parse `{"rank": n, "gram": [[..]]}` into a validated lattice.
pub fn lattice_from_json(v: &Value) -> Result<GramLattice> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::input("expected a lattice object {\"rank\", \"gram\"}"))?;
    let rank = obj
        .get("rank")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::input("lattice object needs a positive integer \"rank\""))?;
    let gram_val = obj
        .get("gram")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::input("lattice object needs a \"gram\" matrix"))?;
    if gram_val.len() != rank as usize {
        return Err(Error::input(format!(
            "rank {rank} does not match {} Gram rows",
            gram_val.len()
        )));
    }
    let mut gram = Vec::with_capacity(gram_val.len());
    for row in gram_val {
        let row = row
            .as_array()
            .ok_or_else(|| Error::input("Gram rows must be arrays of integers"))?;
        let mut out = Vec::with_capacity(row.len());
        for e in row {
            let x = e
                .as_i64()
                .ok_or_else(|| Error::input(format!("Gram entries must be integers, got {e}")))?;
            out.push(x);
        }
        gram.push(out);
    }
    GramLattice::new(gram)
}

pub fn lattice_to_json(l: &GramLattice) -> Value {
    json!({
        "rank": l.rank(),
        "gram": l.gram(),
    })
}

/// Resolve a lattice given on the command line: a catalog name or a path to
/// a lattice JSON file. Returns the lattice and a display label.
pub fn resolve_lattice(spec: &str) -> Result<(GramLattice, String)> {
    if std::path::Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec)?;
        let value: Value = serde_json::from_str(&text)?;
        return Ok((lattice_from_json(&value)?, spec.to_string()));
    }
    match catalog::get_lattice(spec) {
        Ok(named) => Ok((named.lattice.clone(), named.name.to_string())),
        Err(_) => Err(Error::input(format!(
            "`{spec}` is neither a readable file nor a catalog lattice (try `catalog list`)"
        ))),
    }
}

/// Parse a series file: a JSON list of `{"lambda": [..], "c": rational}`.
pub fn series_from_json(v: &Value) -> Result<FourierSeries> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::input("expected a series: a list of {\"lambda\", \"c\"}"))?;
    let mut terms = Vec::with_capacity(arr.len());
    for item in arr {
        let obj = item
            .as_object()
            .ok_or_else(|| Error::input("series terms must be objects"))?;
        let lambda = vector_from_json(
            obj.get("lambda")
                .ok_or_else(|| Error::input("series term needs \"lambda\""))?,
        )?;
        let c = rat_from_json(
            obj.get("c").ok_or_else(|| Error::input("series term needs \"c\""))?,
        )?;
        terms.push((lambda, c));
    }
    Ok(FourierSeries::from_terms(terms))
}

pub fn series_to_json(f: &FourierSeries) -> Value {
    Value::Array(
        f.terms()
            .map(|(lambda, c)| {
                json!({
                    "lambda": vector_to_json(lambda),
                    "c": format_rat(c),
                })
            })
            .collect(),
    )
}

/// A candidate loaded from disk, with a display label for its `K`.
pub struct LoadedCandidate {
    pub candidate: CandidateProduct,
    pub k_label: String,
}

/// Parse a candidate file. `K` may be a Gram object or a catalog name.
pub fn candidate_from_json(v: &Value) -> Result<LoadedCandidate> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::input("expected a candidate object"))?;
    let k_val = obj
        .get("K")
        .ok_or_else(|| Error::input("candidate needs \"K\" (gram object or catalog name)"))?;
    let (k, k_label) = match k_val {
        Value::String(name) => (catalog::get_lattice(name)?.lattice.clone(), name.clone()),
        other => (lattice_from_json(other)?, "custom".to_string()),
    };
    let weight = rat_from_json(
        obj.get("weight").ok_or_else(|| Error::input("candidate needs \"weight\""))?,
    )?;
    let pp = obj
        .get("principal_part")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::input("candidate needs a \"principal_part\" list"))?;
    let mut entries = Vec::with_capacity(pp.len());
    for item in pp {
        let e = item
            .as_object()
            .ok_or_else(|| Error::input("principal part entries must be objects"))?;
        let coset = vector_from_json(
            e.get("coset").ok_or_else(|| Error::input("entry needs \"coset\""))?,
        )?;
        let n = rat_from_json(e.get("n").ok_or_else(|| Error::input("entry needs \"n\""))?)?;
        let c = int_from_json(e.get("c").ok_or_else(|| Error::input("entry needs \"c\""))?)?;
        entries.push((coset, n, c));
    }
    let c00 = obj.get("c00").map(int_from_json).transpose()?;
    let candidate = CandidateProduct::new(k, weight, entries, c00)?;
    Ok(LoadedCandidate { candidate, k_label })
}

pub fn discriminant_to_json(d: &DiscriminantData) -> Value {
    json!({
        "invariant_factors": d.invariant_factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "order": d.order().to_string(),
        "generators": d.generators.iter().map(vector_to_json).collect::<Vec<_>>(),
    })
}

fn mk_to_json(mk: &MkVerdict) -> Value {
    json!({
        "m_K": mk.m_k.to_string(),
        "entries": mk.entries.iter().map(|e| json!({
            "coset": vector_to_json(&e.coset),
            "n": format_rat(&e.n),
            "c": e.c.to_string(),
            "m_K_over_n": format_rat(&e.quotient),
            "pass": e.pass,
        })).collect::<Vec<_>>(),
        "overall": mk.overall,
    })
}

/// Names and outcomes of the gates that decide `overall`.
fn required_checks(report: &AuditReport) -> Vec<(&'static str, bool, String)> {
    let mut checks = vec![(
        "holomorphic",
        report.holomorphic,
        "all divisor multiplicities are nonnegative".to_string(),
    )];
    if report.claims_singular_weight {
        checks.push((
            "simple-zeros",
            report.simple_zeros,
            "every divisor class has multiplicity exactly 1".to_string(),
        ));
        checks.push((
            "reflective",
            report.reflective,
            "the reflection in every divisor class is an integral isometry".to_string(),
        ));
        checks.push((
            "norm-ideal",
            report.mk.overall,
            format!("m_K = {} with m_K/n integral for every exponent n", report.mk.m_k),
        ));
        checks.push((
            "rank-bound",
            report.rank_verdict != crate::audit::RankVerdict::NoneExists,
            format!("existence verdict {} at l = {}", report.rank_verdict, report.l),
        ));
    }
    checks
}

/// Serialize an audit report with stable key order.
pub fn audit_report_to_json(report: &AuditReport, k_label: &str) -> Value {
    let mut root = Map::new();
    root.insert("k".into(), json!(k_label));
    root.insert("rank".into(), json!(report.rank));
    root.insert("signature".into(), json!([report.signature.0, report.signature.1]));
    root.insert("l".into(), json!(report.l));
    root.insert("weight".into(), json!(format_rat(&report.weight)));
    root.insert("singular_weight".into(), json!(format_rat(&report.singular_weight)));
    root.insert("claims_singular_weight".into(), json!(report.claims_singular_weight));
    let cross = match &report.weight_cross_check {
        WeightCrossCheck::Unchecked => json!({"status": "unchecked"}),
        WeightCrossCheck::Consistent => json!({"status": "consistent"}),
        WeightCrossCheck::Mismatch { implied } => {
            json!({"status": "mismatch", "implied_weight": format_rat(implied)})
        }
    };
    root.insert("weight_cross_check".into(), cross);
    let classes: Vec<Value> = report
        .divisor
        .iter()
        .zip(&report.class_reflective)
        .map(|(c, refl)| {
            json!({
                "coset": vector_to_json(&c.coset),
                "m": format_rat(&c.m),
                "representative": vector_to_json(&c.representative),
                "norm": format_rat(&(&c.m * &crate::rational::rat_int(2))),
                "multiplicity": c.multiplicity.to_string(),
                "reflective": refl,
            })
        })
        .collect();
    root.insert("divisor_classes".into(), Value::Array(classes));
    root.insert("holomorphic".into(), json!(report.holomorphic));
    root.insert("simple_zeros".into(), json!(report.simple_zeros));
    root.insert("reflective".into(), json!(report.reflective));
    root.insert("norm_ideal".into(), mk_to_json(&report.mk));
    root.insert("rank_verdict".into(), json!(report.rank_verdict.to_string()));
    let checks: Vec<Value> = required_checks(report)
        .into_iter()
        .map(|(name, pass, detail)| json!({"name": name, "pass": pass, "detail": detail}))
        .collect();
    root.insert("required_checks".into(), Value::Array(checks));
    root.insert("overall".into(), json!(if report.overall { "PASS" } else { "FAIL" }));
    Value::Object(root)
}

/// Render an audit report for terminal reading.
pub fn audit_report_to_text(report: &AuditReport, k_label: &str) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "candidate on K = {k_label}: M = U + K has signature ({}, {}), rank {}",
        report.signature.0, report.signature.1, report.rank
    );
    let _ = writeln!(
        out,
        "weight {} (singular weight at l = {} is {}) -> {}",
        report.weight,
        report.l,
        report.singular_weight,
        if report.claims_singular_weight {
            "claims singular weight"
        } else {
            "does not claim singular weight"
        }
    );
    match &report.weight_cross_check {
        WeightCrossCheck::Unchecked => {}
        WeightCrossCheck::Consistent => {
            let _ = writeln!(out, "constant term c(0,0) consistent with the weight");
        }
        WeightCrossCheck::Mismatch { implied } => {
            let _ = writeln!(
                out,
                "warning: constant term implies weight {implied}, claimed {}",
                report.weight
            );
        }
    }
    let _ = writeln!(out, "m_K = {}", report.mk.m_k);
    if report.divisor.is_empty() {
        let _ = writeln!(out, "divisor: empty");
    } else {
        let _ = writeln!(out, "divisor classes (coset | m | norm | multiplicity | reflective):");
        for (c, refl) in report.divisor.iter().zip(&report.class_reflective) {
            let coset: Vec<String> = c.coset.coords().iter().map(format_rat).collect();
            let _ = writeln!(
                out,
                "  [{}] | {} | {} | {} | {}",
                coset.join(", "),
                c.m,
                &c.m * &crate::rational::rat_int(2),
                c.multiplicity,
                if *refl { "yes" } else { "no" }
            );
        }
    }
    let _ = writeln!(out, "rank verdict at l = {}: {}", report.l, report.rank_verdict);
    let _ = writeln!(out, "checks:");
    for (name, pass, detail) in required_checks(report) {
        let _ = writeln!(out, "  [{}] {name}: {detail}", if pass { "pass" } else { "FAIL" });
    }
    let _ = write!(out, "overall: {}", if report.overall { "PASS" } else { "FAIL" });
    out
}
