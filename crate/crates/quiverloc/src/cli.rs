//! Batch command line front end.
//!
//! Subcommands: `parse`, `build`, `gldim`, `verify`, `malcolmson eval`,
//! `malcolmson eq`, `tor`, `fixtures`. Every run prints a single JSON
//! report on standard output (`--pretty` switches to a plain table) and
//! exits 0 when every check passed, 1 when a check failed, 2 on usage or
//! input errors, 3 on an internal assertion.

use crate::exactlin::Field;
use crate::freealg::{parse_presentation, NcPoly, Presentation, Word};
use crate::localize::{
    build_construction, builtin_fixture, fixture_names, generation_check, image_algebra_dims,
    relation_kill_checks, sigma_invertibility_check, Construction, Fixture, MatrixModel,
};
use crate::malcolmson::{triple_from_json, TripleJson};
use crate::quiver::{
    global_dimension, simple_resolution, Arrow, PathPoly, QPath, Quiver,
};
use crate::report::{CheckResult, Report};
use crate::rewrite::Provenance;
use crate::torcalc::{
    algebra_from_json, check_algebra, matrix_tor_dims, resolution_check, sigma_maps_check,
    stable_flatness_verdict, tor_dims, AlgebraJson, FinDimAlgebra,
};
use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
}

fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

#[derive(Parser, Debug)]
#[command(
    name = "quiverloc",
    version,
    about = "Finitely presented algebras as corners of localized quiver path algebras"
)]
pub struct Cli {
    /// Coefficient field: rationals by default, or a prime p for F_p
    #[arg(long, global = true)]
    pub field: Option<u64>,
    /// Rewrite degree bound (defaults to twice the construction height)
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    /// Completion rule budget
    #[arg(long, global = true, default_value_t = 10_000)]
    pub rule_budget: usize,
    /// Also write the JSON report to this path
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Human-readable table instead of JSON
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a presentation file and echo its canonical form
    Parse { file: PathBuf },
    /// Build the quiver-with-relations construction for a presentation
    Build { file: PathBuf },
    /// Resolutions of the vertex simples and the global dimension
    Gldim { file: PathBuf },
    /// Run the verification suite on a builtin fixture name, a .fixture
    /// file, or a .alg presentation file
    Verify { input: String },
    /// Evaluate or compare Malcolmson triples from a JSON file
    Malcolmson {
        #[command(subcommand)]
        op: MalcolmsonOp,
    },
    /// Tor dimensions over the triangular ring and the flatness verdict
    Tor {
        /// Structure-constant algebra file (JSON)
        #[arg(long)]
        algebra: PathBuf,
        /// Size of the triangular ring
        #[arg(short)]
        n: usize,
    },
    /// List the bundled fixtures
    Fixtures,
}

#[derive(Subcommand, Debug)]
pub enum MalcolmsonOp {
    /// Evaluate one triple to its corner value
    Eval { file: PathBuf },
    /// Decide semantic equality of two triples
    Eq { file: PathBuf },
}

fn field_of(cli: &Cli) -> Result<Field, CliError> {
    match cli.field {
        None => Ok(Field::Q),
        Some(p) => Field::prime(p).map_err(|e| CliError::Usage(e.to_string())),
    }
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

// ---------------------------------------------------------------- JSON forms

/// One term of a path combination: a coefficient, arrow names, and for
/// length-0 paths the vertex.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PathTermJson {
    pub coeff: String,
    pub path: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
}

/// The quiver schema used for `build` output and `.fixture` files.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuiverJson {
    pub vertices: usize,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Vec<PathTermJson>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WordTermJson {
    pub coeff: String,
    pub word: Vec<String>,
}

/// A `.fixture` file: the quiver schema plus the arrows to invert, the
/// target presentation, and the matrix-model value of every arrow.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixtureJson {
    #[serde(flatten)]
    pub quiver: QuiverJson,
    pub sigma: Vec<String>,
    pub target: String,
    pub phi: BTreeMap<String, Vec<WordTermJson>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct MalcolmsonEvalJson {
    pub presentation: String,
    #[serde(default)]
    pub degree: Option<usize>,
    pub triple: TripleJson,
}

#[derive(Debug, Clone, Deserialize)]
pub struct MalcolmsonEqJson {
    pub presentation: String,
    #[serde(default)]
    pub degree: Option<usize>,
    pub t1: TripleJson,
    pub t2: TripleJson,
}

fn path_poly_to_terms(q: &Quiver, p: &PathPoly) -> Vec<PathTermJson> {
    p.terms()
        .map(|(path, coeff)| PathTermJson {
            coeff: coeff.to_string(),
            path: path
                .arrows
                .iter()
                .map(|&ai| q.arrows[ai].name.clone())
                .collect(),
            vertex: if path.is_empty() {
                Some(path.tail())
            } else {
                None
            },
        })
        .collect()
}

fn path_poly_from_terms(
    q: &Quiver,
    field: Field,
    terms: &[PathTermJson],
) -> Result<PathPoly, CliError> {
    let mut out = PathPoly::zero(field);
    for t in terms {
        let coeff = crate::exactlin::Scalar::parse(field, &t.coeff).map_err(input_err)?;
        let path = if t.path.is_empty() {
            let v = t
                .vertex
                .ok_or_else(|| CliError::Input("length-0 path needs a `vertex`".into()))?;
            QPath::lazy(v)
        } else {
            let arrows = t
                .path
                .iter()
                .map(|n| q.arrow_index(n))
                .collect::<Result<Vec<_>, _>>()
                .map_err(input_err)?;
            QPath::from_arrows(q, arrows).map_err(input_err)?
        };
        out.add_term(&coeff, &path);
    }
    Ok(out)
}

fn word_terms_to_poly(
    p: &Presentation,
    terms: &[WordTermJson],
) -> Result<NcPoly, CliError> {
    let mut out = NcPoly::zero(p.field);
    for t in terms {
        let coeff = crate::exactlin::Scalar::parse(p.field, &t.coeff).map_err(input_err)?;
        let letters = t
            .word
            .iter()
            .map(|name| {
                p.generators
                    .iter()
                    .position(|g| g == name)
                    .ok_or_else(|| CliError::Input(format!("unknown generator `{name}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.add_term(&coeff, &Word(letters));
    }
    Ok(out)
}

fn fixture_from_json(fj: &FixtureJson, field: Field) -> Result<Fixture, CliError> {
    let quiver = Quiver::new(fj.quiver.vertices, fj.quiver.arrows.clone()).map_err(input_err)?;
    let relations = fj
        .quiver
        .relations
        .iter()
        .enumerate()
        .map(|(i, terms)| {
            Ok((
                format!("r{}", i + 1),
                path_poly_from_terms(&quiver, field, terms)?,
            ))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let target = parse_presentation(&fj.target, field).map_err(input_err)?;
    let mut values = Vec::with_capacity(quiver.arrows.len());
    for a in &quiver.arrows {
        let terms = fj
            .phi
            .get(&a.name)
            .ok_or_else(|| CliError::Input(format!("phi value missing for arrow `{}`", a.name)))?;
        values.push(word_terms_to_poly(&target, terms)?);
    }
    let model = MatrixModel::new(quiver.clone(), field, values);
    Ok(Fixture {
        name: "file".into(),
        description: "fixture loaded from file".into(),
        quiver,
        relations,
        sigma: fj.sigma.clone(),
        target,
        model,
    })
}

pub fn fixture_to_json(f: &Fixture) -> FixtureJson {
    let phi = f
        .quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let val = f.model.arrow_value(ai);
            let terms = val
                .terms()
                .map(|(w, c)| WordTermJson {
                    coeff: c.to_string(),
                    word: w.0.iter().map(|&g| f.target.generators[g].clone()).collect(),
                })
                .collect();
            (a.name.clone(), terms)
        })
        .collect();
    FixtureJson {
        quiver: QuiverJson {
            vertices: f.quiver.vertex_count,
            arrows: f.quiver.arrows.clone(),
            relations: f
                .relations
                .iter()
                .map(|(_, r)| path_poly_to_terms(&f.quiver, r))
                .collect(),
        },
        sigma: f.sigma.clone(),
        target: f.target.to_string(),
        phi,
    }
}

fn poly_json(p: &Presentation, poly: &NcPoly) -> serde_json::Value {
    json!({
        "text": p.format_poly(poly),
        "terms": poly.terms().map(|(w, c)| json!({
            "coeff": c.to_string(),
            "word": w.0.iter().map(|&g| p.generators[g].clone()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

fn certified(p: Provenance) -> bool {
    p == Provenance::Certified
}

// ------------------------------------------------------------- subcommands

fn construction_payload(c: &Construction) -> serde_json::Value {
    let mut pair_dims = BTreeMap::new();
    for (v, w) in c.algebra.pair_keys() {
        pair_dims.insert(format!("{},{}", v, w), c.algebra.pair_dim(v, w));
    }
    let relations: Vec<Vec<PathTermJson>> = c
        .named_relations()
        .iter()
        .map(|(_, r)| path_poly_to_terms(&c.quiver, r))
        .collect();
    json!({
        "vertices": c.n,
        "arrows": c.quiver.arrows,
        "relations": relations,
        "relation_names": c.named_relations().iter().map(|(n, _)| n.clone()).collect::<Vec<_>>(),
        "sigma": c.sigma,
        "n": c.n,
        "t_count": c.relations_t.len(),
        "yprime_count": c.relations_yprime.len(),
        "algebra_dim": c.algebra.total_dim(),
        "pair_dims": pair_dims,
        "presentation": c.presentation.to_string(),
    })
}

fn cmd_parse(cli: &Cli, file: &Path) -> Result<Report, CliError> {
    let bytes = read(file)?;
    let field = field_of(cli)?;
    let text = String::from_utf8_lossy(&bytes);
    let p = parse_presentation(&text, field).map_err(input_err)?;
    let canonical = p.to_string();
    let reparsed = parse_presentation(&canonical, field).map_err(input_err)?;
    let mut report = Report::new("parse", &[&bytes]);
    report
        .checks
        .push(CheckResult::of("round_trip", reparsed == p, true));
    report.payload = json!({
        "generators": p.generators,
        "relations": p.relations.iter().map(|r| p.format_poly(r)).collect::<Vec<_>>(),
        "construction_size": crate::freealg::construction_size(&p),
        "canonical": canonical,
    });
    Ok(report)
}

fn build_from_file(cli: &Cli, file: &Path) -> Result<(Vec<u8>, Construction), CliError> {
    let bytes = read(file)?;
    let field = field_of(cli)?;
    let text = String::from_utf8_lossy(&bytes);
    let p = parse_presentation(&text, field).map_err(input_err)?;
    let c = build_construction(&p).map_err(input_err)?;
    Ok((bytes, c))
}

fn cmd_build(cli: &Cli, file: &Path) -> Result<Report, CliError> {
    let (bytes, c) = build_from_file(cli, file)?;
    let mut report = Report::new("build", &[&bytes]);
    report.checks.push(CheckResult::pass("construction", true));
    report.payload = construction_payload(&c);
    Ok(report)
}

fn cmd_gldim(cli: &Cli, file: &Path) -> Result<Report, CliError> {
    let (bytes, c) = build_from_file(cli, file)?;
    let mut report = Report::new("gldim", &[&bytes]);
    let mut pds = Vec::new();
    for m in 1..=c.n {
        let res = simple_resolution(&c.algebra, m);
        report.checks.push(CheckResult::of(
            format!("resolution_exact_simple_{m}"),
            res.verify_exact(&c.algebra),
            true,
        ));
        pds.push(res.pd());
    }
    let gd = global_dimension(&c.algebra);
    report.checks.push(CheckResult::of(
        "global_dimension_at_most_2",
        gd <= 2,
        true,
    ));
    report.payload = json!({
        "per_simple_pd": pds,
        "global_dimension": gd,
        "n": c.n,
    });
    Ok(report)
}

fn verify_construction(cli: &Cli, bytes: &[u8], c: &Construction) -> Result<Report, CliError> {
    let degree = cli.degree.unwrap_or_else(|| c.default_degree_bound());
    let rs = c.rewrite_system(degree, cli.rule_budget).map_err(input_err)?;
    let mut report = Report::new("verify", &[bytes]);
    for kill in relation_kill_checks(&c.model, &c.named_relations(), &rs).map_err(input_err)? {
        report.checks.push(
            CheckResult::of(
                format!("kill:{}", kill.name),
                kill.verdict.is_zero(),
                certified(kill.verdict.provenance()),
            )
            .with_payload(json!({
                "entry": [kill.entry.0, kill.entry.1],
                "raw": c.presentation.format_poly(&kill.raw),
            })),
        );
    }
    let sigma = sigma_invertibility_check(&c.model, &c.sigma, &rs).map_err(input_err)?;
    report.checks.push(
        CheckResult::of("sigma_invertibility", sigma.all_ok(), true).with_payload(json!({
            "arrows": sigma.checks.iter().map(|s| s.arrow.clone()).collect::<Vec<_>>(),
            "composite": sigma.composite_ok,
        })),
    );
    let gen = generation_check(c, &rs).map_err(input_err)?;
    report.checks.push(
        CheckResult::of("generation", gen.all_ok(), certified(gen.provenance)).with_payload(
            json!({
                "matrix_units": gen.matrix_units_ok,
                "copies_identified": gen.copies_identified_ok,
                "corner_relations": gen.corner_relations_ok,
                "span_slabs": gen.span_slabs_ok,
                "per_entry_span": gen.per_entry_span,
                "slab_size": gen.slab_size,
            }),
        ),
    );
    let dims = image_algebra_dims(c, &rs).map_err(input_err)?;
    report.checks.push(
        CheckResult::of("image_dims_agree", dims.agree(), certified(dims.provenance))
            .with_payload(json!({
                "formula_dim": dims.formula_dim,
                "rank_dim": dims.rank_dim,
                "filtration": dims.filtration,
                "per_diagonal": dims.per_diagonal,
                "algebra_dim": dims.algebra_dim,
                "kernel_dim": dims.kernel_dim,
                "kernel_spanned_by_vanishing_residues": dims.kernel_spanned_by_vanishing,
            })),
    );
    report.payload = construction_payload(c);
    Ok(report)
}

fn verify_fixture(cli: &Cli, bytes: &[u8], f: &Fixture) -> Result<Report, CliError> {
    let degree = cli.degree.unwrap_or(6);
    let fr = f.verify(degree, cli.rule_budget).map_err(input_err)?;
    let mut report = Report::new("verify", &[bytes]);
    for kill in &fr.kills {
        report.checks.push(
            CheckResult::of(
                format!("kill:{}", kill.name),
                kill.verdict.is_zero(),
                certified(kill.verdict.provenance()),
            )
            .with_payload(json!({
                "entry": [kill.entry.0, kill.entry.1],
                "raw": f.target.format_poly(&kill.raw),
            })),
        );
    }
    report.checks.push(
        CheckResult::of("sigma_invertibility", fr.sigma.all_ok(), true).with_payload(json!({
            "arrows": fr.sigma.checks.iter().map(|s| s.arrow.clone()).collect::<Vec<_>>(),
            "composite": fr.sigma.composite_ok,
        })),
    );
    report.payload = json!({
        "fixture": f.name,
        "target": f.target.to_string(),
        "sigma": f.sigma,
    });
    Ok(report)
}

fn tor_report(
    command: &str,
    bytes: &[u8],
    algebra: &FinDimAlgebra,
    n: usize,
) -> Result<Report, CliError> {
    let mut report = Report::new(command, &[bytes]);
    report.checks.push(CheckResult::of(
        "algebra_associative",
        check_algebra(algebra).is_ok(),
        true,
    ));
    let dims = tor_dims(algebra, n).map_err(input_err)?;
    let matrix_dims = matrix_tor_dims(algebra, n).map_err(input_err)?;
    report
        .checks
        .push(CheckResult::pass("tor_complex_squares_to_zero", true));
    let within_budget = algebra.dim() <= 4 && n <= 5;
    if within_budget {
        let res = resolution_check(algebra, n).map_err(input_err)?;
        report.checks.push(
            CheckResult::of("resolution_exact", res.all_ok(), true)
                .with_payload(json!({ "term_dims": res.term_dims })),
        );
    }
    let sm = sigma_maps_check(algebra, n).map_err(input_err)?;
    report
        .checks
        .push(CheckResult::of("sigma_maps_invertible", sm.all_ok(), true));
    let verdict = if n >= 3 {
        Some(stable_flatness_verdict(algebra, n).map_err(input_err)?)
    } else {
        None
    };
    report.payload = json!({
        "dim": algebra.dim(),
        "n": n,
        "tor_dims": dims,
        "matrix_tor_dims": matrix_dims,
        "verdict": verdict,
        "warning": sm.warning,
    });
    Ok(report)
}

fn cmd_verify(cli: &Cli, input: &str) -> Result<Report, CliError> {
    match input {
        "weyl4" | "subtree4" => {
            let f = builtin_fixture(input).map_err(input_err)?;
            verify_fixture(cli, input.as_bytes(), &f)
        }
        "dual_numbers" => {
            let algebra = FinDimAlgebra::truncated_polynomial(field_of(cli)?, 2);
            tor_report("verify", input.as_bytes(), &algebra, 3)
        }
        path if path.ends_with(".fixture") => {
            let bytes = read(Path::new(path))?;
            let fj: FixtureJson = serde_json::from_slice(&bytes).map_err(input_err)?;
            let f = fixture_from_json(&fj, field_of(cli)?)?;
            verify_fixture(cli, &bytes, &f)
        }
        path if path.ends_with(".alg") => {
            let (bytes, c) = build_from_file(cli, Path::new(path))?;
            verify_construction(cli, &bytes, &c)
        }
        other => Err(CliError::Usage(format!(
            "unknown fixture `{other}` (expected weyl4, subtree4, dual_numbers, or a .fixture/.alg file)"
        ))),
    }
}

fn cmd_malcolmson(cli: &Cli, op: &MalcolmsonOp) -> Result<Report, CliError> {
    let field = field_of(cli)?;
    match op {
        MalcolmsonOp::Eval { file } => {
            let bytes = read(file)?;
            let spec: MalcolmsonEvalJson = serde_json::from_slice(&bytes).map_err(input_err)?;
            let p = parse_presentation(&spec.presentation, field).map_err(input_err)?;
            let c = build_construction(&p).map_err(input_err)?;
            let degree = spec
                .degree
                .or(cli.degree)
                .unwrap_or_else(|| 2 * c.default_degree_bound());
            let rs = c.rewrite_system(degree, cli.rule_budget).map_err(input_err)?;
            let triple = triple_from_json(&c, &spec.triple).map_err(input_err)?;
            let value = triple.value(&c, &rs).map_err(input_err)?;
            let mut report = Report::new("malcolmson eval", &[&bytes]);
            report.checks.push(CheckResult::of(
                "triple_valid",
                true,
                certified(value.provenance),
            ));
            report.payload = json!({
                "presentation": p.to_string(),
                "value": poly_json(&p, &value.poly),
                "certified": certified(value.provenance),
            });
            Ok(report)
        }
        MalcolmsonOp::Eq { file } => {
            let bytes = read(file)?;
            let spec: MalcolmsonEqJson = serde_json::from_slice(&bytes).map_err(input_err)?;
            let p = parse_presentation(&spec.presentation, field).map_err(input_err)?;
            let c = build_construction(&p).map_err(input_err)?;
            let degree = spec
                .degree
                .or(cli.degree)
                .unwrap_or_else(|| 2 * c.default_degree_bound());
            let rs = c.rewrite_system(degree, cli.rule_budget).map_err(input_err)?;
            let t1 = triple_from_json(&c, &spec.t1).map_err(input_err)?;
            let t2 = triple_from_json(&c, &spec.t2).map_err(input_err)?;
            let verdict = t1.eq(&t2, &c, &rs).map_err(input_err)?;
            let mut report = Report::new("malcolmson eq", &[&bytes]);
            report.checks.push(CheckResult::of(
                "triples_valid",
                true,
                certified(verdict.provenance()),
            ));
            report.payload = json!({
                "presentation": p.to_string(),
                "verdict": if verdict.is_equal() { "Equal" } else { "NotEqual" },
                "certified": certified(verdict.provenance()),
            });
            Ok(report)
        }
    }
}

fn cmd_tor(cli: &Cli, algebra: &Path, n: usize) -> Result<Report, CliError> {
    let bytes = read(algebra)?;
    let aj: AlgebraJson = serde_json::from_slice(&bytes).map_err(input_err)?;
    let s = algebra_from_json(&aj, field_of(cli)?).map_err(input_err)?;
    tor_report("tor", &bytes, &s, n)
}

fn cmd_fixtures() -> Result<Report, CliError> {
    let mut report = Report::new("fixtures", &[b""]);
    report.payload = json!({
        "fixtures": fixture_names()
            .iter()
            .map(|(name, desc)| json!({ "name": name, "description": desc }))
            .collect::<Vec<_>>(),
    });
    Ok(report)
}

/// Runs one parsed command, producing the report.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Parse { file } => cmd_parse(cli, file)?,
        Command::Build { file } => cmd_build(cli, file)?,
        Command::Gldim { file } => cmd_gldim(cli, file)?,
        Command::Verify { input } => cmd_verify(cli, input)?,
        Command::Malcolmson { op } => cmd_malcolmson(cli, op)?,
        Command::Tor { algebra, n } => cmd_tor(cli, algebra, *n)?,
        Command::Fixtures => cmd_fixtures()?,
    };
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Full CLI entry point: parse, run, print, exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = std::panic::catch_unwind(|| execute(&cli));
    match outcome {
        Ok(Ok(report)) => {
            let rendered = if cli.pretty {
                report.render_pretty()
            } else {
                report.to_json()
            };
            println!("{rendered}");
            if let Some(out) = &cli.out {
                if let Err(e) = std::fs::write(out, report.to_json()) {
                    eprintln!("cannot write `{}`: {e}", out.display());
                    return 2;
                }
            }
            if report.passed() {
                0
            } else {
                1
            }
        }
        Ok(Err(e)) => {
            eprintln!("error: {e}");
            2
        }
        Err(_) => {
            eprintln!("internal assertion failure");
            3
        }
    }
}

pub fn main() -> i32 {
    run(std::env::args_os())
}
