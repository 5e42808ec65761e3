//! Command-line front end.
//!
//! Exit codes: `0` when info was produced or every check passed, `1` when a
//! mathematical check failed (audit FAIL, infeasible bookkeeping, failed
//! series predicate), `2` on malformed input, unknown names or bad flags.
//!
//! Every subcommand accepts `--json` for machine-readable reports with
//! stable key order; rationals are printed as `"p/q"` strings, never floats.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::audit::{bookkeeping_feasible, rank_verdict, singular_weight};
use crate::catalog;
use crate::error::{Error, Result};
use crate::io;
use crate::lattice::LatticeVector;
use crate::rational::{format_rat, parse_rat};
use crate::series::TubeDomain;

#[derive(Parser, Debug)]
#[command(
    name = "borcherds-audit",
    version,
    about = "Exact lattice algebra, formal Fourier series, and audits of candidate Borcherds products",
    arg_required_else_help = true
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Rank, signature, determinant and discriminant group of a lattice
    LatticeInfo(LatticeInfoArgs),
    /// Enumerate vectors of a given positive norm, up to sign
    Enumerate(EnumerateArgs),
    /// Operations on finitely supported Fourier series over a Lorentzian lattice
    Series(SeriesArgs),
    /// Audit a candidate product (JSON file or catalog form name)
    Audit(AuditArgs),
    /// Existence verdict for singular-weight special forms on O(l,2)
    RankVerdict(RankVerdictArgs),
    /// Decide s*a = w*d with mmax*d <= a over positive integers
    Bookkeep(BookkeepArgs),
    /// List or show built-in lattices and known forms
    Catalog(CatalogArgs),
}

#[derive(Args, Debug)]
struct LatticeInfoArgs {
    /// Catalog name or path to a lattice JSON file
    target: String,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    /// Catalog name or path to a lattice JSON file (positive definite)
    target: String,
    /// Target norm (positive integer)
    #[arg(long)]
    norm: i64,
    /// Print only the count, not the vectors
    #[arg(long)]
    count_only: bool,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum SeriesOp {
    /// Normalized Laplace image (lambda, lambda) c(lambda) q^lambda
    Laplace,
    /// Vanishing order along v^perp (needs --v)
    Order,
    /// Anti-invariance under the reflection in v (needs --v)
    Antiinv,
    /// Simple-zero witness report along v (needs --v)
    Witness,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    /// Operation to apply
    op: SeriesOp,
    /// Path to the series JSON file
    #[arg(long)]
    series: String,
    /// Lorentzian lattice: catalog name or lattice JSON file
    #[arg(long)]
    lattice: String,
    /// Vector, e.g. [1,0,"1/2"] or 1,0,1/2
    #[arg(long)]
    v: Option<String>,
}

#[derive(Args, Debug)]
struct AuditArgs {
    /// Path to a candidate JSON file, or a catalog form name (Phi12, Psi24)
    candidate: String,
}

#[derive(Args, Debug)]
struct RankVerdictArgs {
    /// l in the signature (l, 2); must be at least 3
    l: usize,
}

#[derive(Args, Debug)]
struct BookkeepArgs {
    /// Weight of the base form (positive rational)
    #[arg(long)]
    s: String,
    /// Weight of the comparison form (positive rational)
    #[arg(long)]
    w: String,
    /// Multiplicity bound (positive integer)
    #[arg(long)]
    mmax: u64,
}

#[derive(Args, Debug)]
struct CatalogArgs {
    #[command(subcommand)]
    what: Option<CatalogCmd>,
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    /// List every built-in lattice and known form
    List,
    /// Show one catalog entry in full
    Show { name: String },
}

/// Parse `argv` and run; returns the process exit code.
pub fn run() -> i32 {
    run_from(std::env::args())
}

/// Entry point taking explicit arguments (for tests).
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.cmd {
        Cmd::LatticeInfo(args) => lattice_info(args, cli.json),
        Cmd::Enumerate(args) => enumerate(args, cli.json),
        Cmd::Series(args) => series(args, cli.json),
        Cmd::Audit(args) => audit(args, cli.json),
        Cmd::RankVerdict(args) => rank_verdict_cmd(args, cli.json),
        Cmd::Bookkeep(args) => bookkeep(args, cli.json),
        Cmd::Catalog(args) => catalog_cmd(args, cli.json),
    }
}

fn emit(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable report"));
}

fn lattice_info(args: &LatticeInfoArgs, as_json: bool) -> Result<i32> {
    let (l, label) = io::resolve_lattice(&args.target)?;
    let (p, q) = l.signature();
    let disc = l.discriminant_group();
    let m_k = if l.is_even() { Some(l.norm_ideal_generator()?) } else { None };
    if as_json {
        let mut v = serde_json::Map::new();
        v.insert("name".into(), json!(label));
        v.insert("rank".into(), json!(l.rank()));
        v.insert("signature".into(), json!([p, q]));
        v.insert("det".into(), json!(l.det().to_string()));
        v.insert("even".into(), json!(l.is_even()));
        v.insert("discriminant_group".into(), io::discriminant_to_json(&disc));
        if let Some(m_k) = &m_k {
            v.insert("m_K".into(), json!(m_k.to_string()));
        }
        v.insert("gram".into(), json!(l.gram()));
        emit(&Value::Object(v));
    } else {
        println!("{label}: rank {}, signature ({p}, {q}), det {}", l.rank(), l.det());
        println!("even: {}", l.is_even());
        if disc.is_trivial() {
            println!("discriminant group: trivial");
        } else {
            let fs: Vec<String> =
                disc.invariant_factors.iter().map(|f| format!("Z/{f}")).collect();
            println!("discriminant group: {} (order {})", fs.join(" x "), disc.order());
        }
        if let Some(m_k) = &m_k {
            println!("m_K (norm ideal generator): {m_k}");
        }
    }
    Ok(0)
}

fn enumerate(args: &EnumerateArgs, as_json: bool) -> Result<i32> {
    let (l, label) = io::resolve_lattice(&args.target)?;
    let reps = l.short_vectors(args.norm)?;
    if as_json {
        let mut v = serde_json::Map::new();
        v.insert("name".into(), json!(label));
        v.insert("norm".into(), json!(args.norm));
        v.insert("count_pairs".into(), json!(reps.len()));
        v.insert("count_vectors".into(), json!(2 * reps.len()));
        if !args.count_only {
            v.insert(
                "vectors".into(),
                Value::Array(reps.iter().map(io::vector_to_json).collect()),
            );
        }
        emit(&Value::Object(v));
    } else {
        println!(
            "{label}: {} sign pairs of norm {} ({} vectors)",
            reps.len(),
            args.norm,
            2 * reps.len()
        );
        if !args.count_only {
            for r in &reps {
                let coords: Vec<String> = r.coords().iter().map(format_rat).collect();
                println!("  [{}]", coords.join(", "));
            }
        }
    }
    Ok(0)
}

fn parse_cli_vector(text: &str) -> Result<LatticeVector> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        let value: Value = serde_json::from_str(trimmed)?;
        io::vector_from_json(&value)
    } else {
        let coords = trimmed
            .split(',')
            .map(parse_rat)
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticeVector::new(coords))
    }
}

fn series(args: &SeriesArgs, as_json: bool) -> Result<i32> {
    let (l, _) = io::resolve_lattice(&args.lattice)?;
    let dom = TubeDomain::new(l)?;
    let text = std::fs::read_to_string(&args.series)?;
    let f = io::series_from_json(&serde_json::from_str(&text)?)?;
    let need_v = || -> Result<LatticeVector> {
        args.v
            .as_deref()
            .map(parse_cli_vector)
            .transpose()?
            .ok_or_else(|| Error::input("this series operation requires --v <vector>"))
    };
    match args.op {
        SeriesOp::Laplace => {
            let image = dom.laplace_normalized(&f)?;
            if as_json {
                emit(&json!({"op": "laplace", "result": io::series_to_json(&image)}));
            } else {
                println!("normalized Laplace image ({} terms):", image.support_size());
                for (lambda, c) in image.terms() {
                    let coords: Vec<String> = lambda.coords().iter().map(format_rat).collect();
                    println!("  {c} * q^[{}]", coords.join(", "));
                }
                if image.is_zero() {
                    println!("  0 (the series is annihilated: singular support)");
                }
            }
            Ok(0)
        }
        SeriesOp::Order => {
            let v = need_v()?;
            let order = dom.order_along(&f, &v)?;
            if as_json {
                emit(&json!({"op": "order", "order": order.to_string()}));
            } else {
                println!("vanishing order along v^perp: {order}");
            }
            Ok(0)
        }
        SeriesOp::Antiinv => {
            let v = need_v()?;
            let anti = dom.is_anti_invariant(&f, &v)?;
            if as_json {
                emit(&json!({"op": "antiinv", "anti_invariant": anti}));
            } else {
                println!("anti-invariant under the reflection in v: {anti}");
            }
            Ok(if anti { 0 } else { 1 })
        }
        SeriesOp::Witness => {
            let v = need_v()?;
            let w = dom.simple_zero_witness(&f, &v)?;
            if as_json {
                emit(&serde_json::to_value(&w)?);
            } else {
                println!(
                    "singular: {}, order along v^perp: {}, anti-invariant: {}",
                    w.singular, w.order, w.anti_invariant
                );
                println!("verdict: {}", if w.pass { "pass" } else { "FAIL" });
            }
            Ok(if w.pass { 0 } else { 1 })
        }
    }
}

fn audit(args: &AuditArgs, as_json: bool) -> Result<i32> {
    let loaded = if std::path::Path::new(&args.candidate).is_file() {
        let text = std::fs::read_to_string(&args.candidate)?;
        io::candidate_from_json(&serde_json::from_str(&text)?)?
    } else if let Ok(form) = catalog::get_form(&args.candidate) {
        io::LoadedCandidate {
            candidate: form.candidate.clone(),
            k_label: form.k_name.to_string(),
        }
    } else {
        return Err(Error::input(format!(
            "`{}` is neither a readable file nor a known form (try `catalog list`)",
            args.candidate
        )));
    };
    let report = loaded.candidate.audit()?;
    if as_json {
        emit(&io::audit_report_to_json(&report, &loaded.k_label));
    } else {
        println!("{}", io::audit_report_to_text(&report, &loaded.k_label));
    }
    Ok(if report.overall { 0 } else { 1 })
}

fn rank_verdict_cmd(args: &RankVerdictArgs, as_json: bool) -> Result<i32> {
    let verdict = rank_verdict(args.l)?;
    let weight = singular_weight(args.l)?;
    if as_json {
        emit(&json!({
            "l": args.l,
            "singular_weight": format_rat(&weight),
            "verdict": verdict.to_string(),
        }));
    } else {
        println!("{verdict}");
    }
    Ok(0)
}

fn bookkeep(args: &BookkeepArgs, as_json: bool) -> Result<i32> {
    let s = parse_rat(&args.s)?;
    let w = parse_rat(&args.w)?;
    let witness = bookkeeping_feasible(&s, &w, args.mmax)?;
    if as_json {
        let mut v = serde_json::Map::new();
        v.insert("s".into(), json!(format_rat(&s)));
        v.insert("w".into(), json!(format_rat(&w)));
        v.insert("mmax".into(), json!(args.mmax));
        v.insert("feasible".into(), json!(witness.is_some()));
        if let Some((a, d)) = &witness {
            v.insert("witness".into(), json!({"a": a.to_string(), "d": d.to_string()}));
        }
        emit(&Value::Object(v));
    } else {
        match &witness {
            Some((a, d)) => println!("feasible: minimal witness a = {a}, d = {d}"),
            None => println!(
                "infeasible: no positive integers a, d with {s} a = {w} d and {} d <= a",
                args.mmax
            ),
        }
    }
    Ok(if witness.is_some() { 0 } else { 1 })
}

fn catalog_cmd(args: &CatalogArgs, as_json: bool) -> Result<i32> {
    match &args.what {
        None | Some(CatalogCmd::List) => {
            if as_json {
                let lattices: Vec<Value> = catalog::lattice_names()
                    .iter()
                    .map(|n| {
                        let e = catalog::get_lattice(n).expect("registry");
                        json!({
                            "name": e.name,
                            "description": e.description,
                            "rank": e.lattice.rank(),
                            "signature": [e.expected.signature.0, e.expected.signature.1],
                        })
                    })
                    .collect();
                let forms: Vec<Value> = catalog::form_names()
                    .iter()
                    .map(|n| {
                        let f = catalog::get_form(n).expect("registry");
                        json!({
                            "name": f.name,
                            "home": f.home,
                            "weight": format_rat(&f.weight),
                        })
                    })
                    .collect();
                emit(&json!({"lattices": lattices, "forms": forms}));
            } else {
                println!("lattices:");
                for n in catalog::lattice_names() {
                    let e = catalog::get_lattice(n).expect("registry");
                    println!(
                        "  {:<10} rank {:>2}, signature ({}, {}): {}",
                        e.name,
                        e.lattice.rank(),
                        e.expected.signature.0,
                        e.expected.signature.1,
                        e.description
                    );
                }
                println!("forms:");
                for n in catalog::form_names() {
                    let f = catalog::get_form(n).expect("registry");
                    println!("  {:<10} weight {:>2} on {}", f.name, f.weight, f.home);
                }
            }
            Ok(0)
        }
        Some(CatalogCmd::Show { name }) => {
            if let Ok(e) = catalog::get_lattice(name) {
                if as_json {
                    let mut v = serde_json::Map::new();
                    v.insert("name".into(), json!(e.name));
                    v.insert("description".into(), json!(e.description));
                    v.insert("rank".into(), json!(e.lattice.rank()));
                    v.insert(
                        "signature".into(),
                        json!([e.expected.signature.0, e.expected.signature.1]),
                    );
                    v.insert("det".into(), json!(e.expected.det));
                    v.insert("even".into(), json!(e.expected.even));
                    if let Some(min) = e.expected.min_norm {
                        v.insert("min_norm".into(), json!(min));
                    }
                    v.insert("gram".into(), json!(e.lattice.gram()));
                    emit(&Value::Object(v));
                } else {
                    println!("{}: {}", e.name, e.description);
                    println!(
                        "rank {}, signature ({}, {}), det {}, even {}",
                        e.lattice.rank(),
                        e.expected.signature.0,
                        e.expected.signature.1,
                        e.expected.det,
                        e.expected.even
                    );
                    if let Some(min) = e.expected.min_norm {
                        println!("minimal norm: {min}");
                    }
                    for row in e.lattice.gram() {
                        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                        println!("  [{}]", cells.join(", "));
                    }
                }
                return Ok(0);
            }
            let f = catalog::get_form(name)?;
            let report = f.candidate.audit()?;
            if as_json {
                let mut v = serde_json::Map::new();
                v.insert("name".into(), json!(f.name));
                v.insert("home".into(), json!(f.home));
                v.insert("k".into(), json!(f.k_name));
                v.insert("weight".into(), json!(format_rat(&f.weight)));
                v.insert(
                    "divisor_summary".into(),
                    Value::Array(
                        f.divisor_summary
                            .iter()
                            .map(|(norm, dual, mult)| {
                                json!({
                                    "norm": format_rat(norm),
                                    "dual": dual,
                                    "multiplicity": mult.to_string(),
                                })
                            })
                            .collect(),
                    ),
                );
                v.insert("audit".into(), io::audit_report_to_json(&report, f.k_name));
                emit(&Value::Object(v));
            } else {
                println!("{}: weight {} on {} (K = {})", f.name, f.weight, f.home, f.k_name);
                for (norm, dual, mult) in &f.divisor_summary {
                    println!(
                        "  divisor: norm {} classes ({}), multiplicity {}",
                        norm,
                        if *dual { "dual vectors" } else { "lattice vectors" },
                        mult
                    );
                }
                println!("{}", io::audit_report_to_text(&report, f.k_name));
            }
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_parsing_accepts_json_and_csv() {
        let a = parse_cli_vector("[1, 0, \"1/2\"]").unwrap();
        let b = parse_cli_vector("1,0,1/2").unwrap();
        assert_eq!(a, b);
        assert!(parse_cli_vector("[1, 1.5]").is_err());
    }

    #[test]
    fn exit_codes_through_run_from() {
        // info produced
        assert_eq!(run_from(["borcherds-audit", "rank-verdict", "21"]), 0);
        // mathematical check failed
        assert_eq!(
            run_from(["borcherds-audit", "bookkeep", "--s", "10", "--w", "24", "--mmax", "8"]),
            1
        );
        // feasible case passes
        assert_eq!(
            run_from(["borcherds-audit", "bookkeep", "--s", "10", "--w", "24", "--mmax", "2"]),
            0
        );
        // input errors
        assert_eq!(run_from(["borcherds-audit", "rank-verdict", "2"]), 2);
        assert_eq!(run_from(["borcherds-audit", "lattice-info", "NoSuchLattice"]), 2);
        assert_eq!(run_from(["borcherds-audit", "--bogus-flag"]), 2);
        // catalog audits
        assert_eq!(run_from(["borcherds-audit", "audit", "Phi12"]), 0);
    }
}
