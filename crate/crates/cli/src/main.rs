//! `helly`: command-line access to complexes, matroids, collapses, the
//! matroidal Helly statements, nerves and Tverberg partitions.
//!
//! Every command prints one JSON document carrying `"helly_schema": 1`.
//! Exit codes: 0 on success, 1 when a check or assertion fails, 2 on usage
//! or input errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use helly_core::collapse::{find_d_collapse, CollapseBudget, CollapseMode, CollapseOutcome};
use helly_core::generate::{
    collapsible_complex, random_boxes, random_colors, random_complex, random_hulls,
    random_intervals, random_matroid, random_partition_blocks, random_points, rng_from_seed,
    MatroidKindName,
};
use helly_core::geometry::{
    colorful_helly, nerve, ColoredFamily, FamilySpec, Point, DEFAULT_NERVE_BUDGET,
};
use helly_core::homology::{
    betti_vector, is_d_leray_induced, is_d_leray_links, reduced_betti, Field,
};
use helly_core::io::{read_complex, verify_certificate, with_schema, Certificate, ComplexSpec};
use helly_core::matroid::{check_matroid_axioms, Matroid, MatroidSpec};
use helly_core::rational::{from_wire, Q};
use helly_core::suite::{run_suite, SuiteConfig, SUITES};
use helly_core::theorems::{
    extract_witness_from_collapse, find_witness, hypothesis_collapsible, hypothesis_leray,
    Conclusion,
};
use helly_core::tverberg::{
    tolerant_tverberg, tverberg_with_center, verify_center, verify_tolerance, PointConfig,
    TverbergBudget,
};
use helly_core::{Error, Simplex, SimplicialComplex};

#[derive(Parser)]
#[command(
    name = "helly",
    version,
    about = "Colorful Helly and Tverberg-type computations with certificates"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Work cap: instances per suite check, collapse states, or Tverberg
    /// candidates, depending on the command.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Also write the JSON result to this file.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,
    /// Suppress output on stdout.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Betti numbers.
    Homology {
        #[arg(long)]
        complex: PathBuf,
        /// Report only this degree.
        #[arg(long, allow_negative_numbers = true)]
        betti: Option<isize>,
        #[arg(long, value_enum, default_value_t = FieldArg::Q)]
        field: FieldArg,
    },
    /// d-Leray test by induced subcomplexes, by links, or both.
    Leray {
        #[arg(long)]
        complex: PathBuf,
        #[arg(short)]
        d: usize,
        #[arg(long, value_enum, default_value_t = LerayMethod::Both)]
        method: LerayMethod,
        #[arg(long, value_enum, default_value_t = FieldArg::Q)]
        field: FieldArg,
    },
    /// Search for a d-collapse certificate.
    Collapse {
        #[arg(long)]
        complex: PathBuf,
        #[arg(short)]
        d: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Standard)]
        mode: ModeArg,
    },
    /// Ranks, tolerance matroids and axiom checks.
    Matroid {
        #[arg(long)]
        matroid: PathBuf,
        /// Replace the matroid by its tolerance matroid with this `t`.
        #[arg(long)]
        tolerance: Option<usize>,
        /// Subset to rank, as comma-separated elements; repeatable.
        #[arg(long, value_delimiter = ';')]
        rank: Vec<String>,
        /// Check the independence axioms on the explicit family.
        #[arg(long)]
        check_axioms: bool,
    },
    /// Evaluate a matroidal Helly statement on an instance.
    Theorem {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        matroid: PathBuf,
        #[arg(short)]
        d: usize,
        #[arg(short)]
        m: usize,
        #[arg(short)]
        k: usize,
        /// Also extract a witness from a collapse sequence.
        #[arg(long)]
        constructive: bool,
    },
    /// Nerve of a family of convex bodies.
    Nerve {
        #[arg(long)]
        family: PathBuf,
    },
    /// Color classes of a family whose union has a common point.
    ColorfulHelly {
        #[arg(long)]
        family: PathBuf,
        #[arg(short)]
        d: usize,
        #[arg(short)]
        m: usize,
        #[arg(short)]
        k: usize,
    },
    /// Tverberg partitions with centers and tolerant partitions.
    Tverberg {
        #[command(subcommand)]
        action: TverbergAction,
    },
    /// Seeded random instances.
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
    },
    /// Run a named check suite.
    RunSuite {
        /// One of lemmas, theorems, tverberg, all.
        name: String,
    },
    /// Re-verify a certificate, a generator output or a suite report.
    Verify {
        #[arg(long)]
        certificate: PathBuf,
    },
}

#[derive(Subcommand)]
enum TverbergAction {
    /// A partition into r parts with a center of size (r−1)(d+1).
    Center {
        #[arg(long)]
        points: PathBuf,
        #[arg(short)]
        r: usize,
    },
    /// A partition that survives the removal of any t points.
    Tolerant {
        #[arg(long)]
        points: PathBuf,
        #[arg(short)]
        r: usize,
        #[arg(short)]
        t: usize,
    },
    /// Re-verify a Tverberg certificate.
    Verify {
        #[arg(long)]
        certificate: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenerateKind {
    Points {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        count: usize,
    },
    Complex {
        #[arg(long)]
        vertices: usize,
        /// Build by reverse collapses and attach the certificate.
        #[arg(long)]
        collapsible: bool,
        #[arg(short, default_value_t = 1)]
        d: usize,
        #[arg(long, default_value_t = 8)]
        steps: usize,
        #[arg(long)]
        max_face: Option<usize>,
    },
    Matroid {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 6)]
        elements: usize,
        /// Number of blocks for partition matroids.
        #[arg(long)]
        blocks: Option<usize>,
    },
    Family {
        #[arg(long, value_enum)]
        kind: FamilyKind,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Number of color classes.
        #[arg(long, default_value_t = 1)]
        colors: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Q,
    F2,
}

impl From<FieldArg> for Field {
    fn from(f: FieldArg) -> Self {
        match f {
            FieldArg::Q => Field::Rationals,
            FieldArg::F2 => Field::Gf2,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LerayMethod {
    Induced,
    Links,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Standard,
    Exact,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(name = "collapsible", alias = "1.5")]
    Collapsible,
    #[value(name = "leray", alias = "1.6")]
    Leray,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Uniform,
    Partition,
    Linear,
    Explicit,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Intervals,
    Boxes,
    Hulls,
}

/// A command result: the JSON document and whether its checks passed.
struct Outcome {
    value: Value,
    passed: bool,
}

impl Outcome {
    fn pass(value: Value) -> Self {
        Self {
            value,
            passed: true,
        }
    }
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded(_)
            | Error::SearchBudgetExceeded(_)
            | Error::HypothesisFailed(_)
            | Error::HypothesisViolated(_)
            | Error::NotDLeray(_)
            | Error::NotFreeFace(_)
            | Error::NotAFace(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> CliResult<T> {
    serde_json::from_str(&read_text(path)?)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_complex(path: &Path) -> CliResult<SimplicialComplex> {
    Ok(read_complex(&read_text(path)?)?)
}

fn load_matroid(path: &Path) -> CliResult<Matroid> {
    Ok(read_json::<MatroidSpec>(path)?.build()?)
}

fn load_family(path: &Path) -> CliResult<ColoredFamily> {
    Ok(read_json::<FamilySpec>(path)?.build()?)
}

/// Accepts `{"dim": d, "points": [..]}` or a bare array of points.
fn load_points(path: &Path) -> CliResult<Vec<Point>> {
    let value: Value = read_json(path)?;
    let points = if value.is_array() {
        let raw: Vec<Vec<Q>> =
            serde_json::from_value(value).map_err(|e| Failure::Usage(e.to_string()))?;
        raw.into_iter().map(from_wire).collect()
    } else {
        let config: PointConfig =
            serde_json::from_value(value).map_err(|e| Failure::Usage(e.to_string()))?;
        config.validate()?;
        config.points
    };
    PointConfig::new(points.clone())?;
    Ok(points)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn parse_subset(text: &str) -> CliResult<Simplex> {
    let mut vs = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        vs.push(
            part.parse::<usize>()
                .map_err(|e| Failure::Usage(format!("subset {text:?}: {e}")))?,
        );
    }
    Ok(Simplex::new(vs)?)
}

fn tverberg_budget(global: &Global) -> TverbergBudget {
    let mut b = TverbergBudget::default();
    if let Some(cap) = global.budget {
        b.max_candidates = cap;
    }
    b
}

fn collapse_budget(global: &Global) -> CollapseBudget {
    let mut b = CollapseBudget::default();
    if let Some(cap) = global.budget {
        b.max_states = cap as usize;
    }
    b
}

fn homology(complex: &Path, betti: Option<isize>, field: Field) -> CliResult<Outcome> {
    let x = load_complex(complex)?;
    Ok(Outcome::pass(match betti {
        Some(k) => json!({ "k": k, "field": field, "rank": reduced_betti(&x, k, field)? }),
        None => {
            let b = betti_vector(&x, field)?;
            json!({ "betti": b, "vanishing_degree": b.vanishing_degree() })
        }
    }))
}

fn leray(complex: &Path, d: usize, method: LerayMethod, field: Field) -> CliResult<Outcome> {
    let x = load_complex(complex)?;
    let induced = match method {
        LerayMethod::Links => None,
        _ => Some(is_d_leray_induced(&x, d, field, 12)?),
    };
    let links = match method {
        LerayMethod::Induced => None,
        _ => Some(is_d_leray_links(&x, d, field, 12)?),
    };
    let holds = induced
        .as_ref()
        .or(links.as_ref())
        .map(|r| r.holds)
        .unwrap_or(true);
    let agree = match (&induced, &links) {
        (Some(a), Some(b)) => a.holds == b.holds,
        _ => true,
    };
    Ok(Outcome {
        value: json!({ "d": d, "leray": holds, "induced": induced, "links": links, "methods_agree": agree }),
        passed: agree,
    })
}

fn collapse(complex: &Path, d: usize, mode: ModeArg, global: &Global) -> CliResult<Outcome> {
    let x = load_complex(complex)?;
    let mode = match mode {
        ModeArg::Standard => CollapseMode::Standard,
        ModeArg::Exact => CollapseMode::ExactD,
    };
    Ok(Outcome::pass(
        match find_d_collapse(&x, d, mode, collapse_budget(global))? {
            CollapseOutcome::Collapsible(seq) => to_value(&seq),
            CollapseOutcome::NotCollapsible => json!({ "collapsible": false, "exhaustive": true }),
        },
    ))
}

fn matroid(
    path: &Path,
    tolerance: Option<usize>,
    ranks: &[String],
    check_axioms: bool,
) -> CliResult<Outcome> {
    let mut m = load_matroid(path)?;
    if let Some(t) = tolerance {
        m = m.tolerance(t)?;
    }
    let mut subset_ranks = Vec::new();
    for text in ranks {
        let a = parse_subset(text)?;
        subset_ranks.push(json!({ "subset": a, "rank": m.rank(a)? }));
    }
    let mut out = json!({
        "matroid": MatroidSpec::from(&m),
        "ground_size": m.ground_size(),
        "rank": m.full_rank(),
        "ranks": subset_ranks,
    });
    let mut passed = true;
    if check_axioms {
        let verdict = check_matroid_axioms(m.ground(), &m.independent_sets())?;
        passed = verdict.is_ok();
        out["axioms"] = match verdict {
            Ok(()) => json!("ok"),
            Err(v) => to_value(&v),
        };
    }
    Ok(Outcome { value: out, passed })
}

struct TheoremArgs<'a> {
    which: Which,
    complex: &'a Path,
    matroid: &'a Path,
    d: usize,
    m: usize,
    k: usize,
    constructive: bool,
}

fn theorem(a: TheoremArgs, global: &Global) -> CliResult<Outcome> {
    let x = load_complex(a.complex)?;
    let mat = load_matroid(a.matroid)?;
    let (d, m, k) = (a.d, a.m, a.k);
    let (report, conclusion) = match a.which {
        Which::Collapsible => (hypothesis_collapsible(&x, &mat, d, m, k)?, Conclusion::Full),
        Which::Leray => (
            hypothesis_leray(&x, &mat, d, m, k)?,
            Conclusion::ComplementOnly,
        ),
    };
    let witness = find_witness(&x, &mat, m, k, conclusion, 16)?;
    let mut out = json!({
        "hypothesis": report.holds,
        "witness": witness,
        "counterexample": report.counterexample,
        "conclusion": conclusion,
    });
    let mut passed = !report.holds || witness.is_some();
    if a.which == Which::Leray {
        let leray = is_d_leray_induced(&x, d, Field::Rationals, 12)?.holds;
        out["d_leray"] = json!(leray);
    }
    if let Some(w) = &witness {
        out["certificate"] = to_value(&Certificate::Witness {
            complex: ComplexSpec::from_complex(&x),
            matroid: MatroidSpec::from(&mat),
            m,
            k,
            conclusion,
            witness: w.clone(),
        });
    }
    if a.constructive {
        if a.which != Which::Collapsible {
            return Err(Failure::Usage(
                "--constructive applies to --which collapsible".into(),
            ));
        }
        let outcome = find_d_collapse(&x, d, CollapseMode::ExactD, collapse_budget(global))?;
        out["constructive"] = match outcome.sequence() {
            Some(seq) if report.holds => {
                let ex = extract_witness_from_collapse(&x, seq, &mat, d, m, k)?;
                json!({ "witness": ex.witness, "step": ex.step, "sigma": ex.sigma, "eta": ex.eta, "sequence": seq })
            }
            Some(_) => json!({ "skipped": "hypothesis does not hold" }),
            None => {
                passed = false;
                json!({ "error": format!("complex is not {d}-collapsible") })
            }
        };
    }
    Ok(Outcome { value: out, passed })
}

fn nerve_cmd(family: &Path) -> CliResult<Outcome> {
    let fam = load_family(family)?;
    let n = nerve(&fam, DEFAULT_NERVE_BUDGET.max(fam.len()).min(16))?;
    Ok(Outcome::pass(to_value(&ComplexSpec::from_nerve(&n))))
}

fn colorful_helly_cmd(family: &Path, d: usize, m: usize, k: usize) -> CliResult<Outcome> {
    let fam = load_family(family)?;
    let out = colorful_helly(&fam, d, m, k, DEFAULT_NERVE_BUDGET.max(fam.len()).min(16))?;
    Ok(Outcome::pass(to_value(&out)))
}

fn with_verified(cert: &Certificate, verified: Value) -> Value {
    let mut v = to_value(cert);
    v["verified"] = verified;
    v
}

fn tverberg(action: TverbergAction, global: &Global) -> CliResult<Outcome> {
    let budget = tverberg_budget(global);
    match action {
        TverbergAction::Center { points, r } => {
            let pts = load_points(&points)?;
            let cert = tverberg_with_center(&pts, r, budget)?;
            let check = verify_center(&pts, &cert.labels, r, cert.center)?;
            let size_ok = cert.center.len() == (r - 1) * (pts[0].len() + 1);
            let verified = json!({ "center": check.valid, "center_size": size_ok });
            let cert = Certificate::TverbergCenter {
                points: PointConfig::new(pts)?,
                certificate: cert,
            };
            Ok(Outcome {
                value: with_verified(&cert, verified),
                passed: check.valid && size_ok,
            })
        }
        TverbergAction::Tolerant { points, r, t } => {
            let pts = load_points(&points)?;
            let cert = tolerant_tverberg(&pts, r, t, budget)?;
            let check = verify_tolerance(&pts, &cert.labels, r, t, budget.max_removals)?;
            let verified =
                json!({ "tolerance": check.valid, "removals_checked": check.removals_checked });
            let cert = Certificate::Tolerance {
                points: PointConfig::new(pts)?,
                certificate: cert,
            };
            Ok(Outcome {
                value: with_verified(&cert, verified),
                passed: check.valid,
            })
        }
        TverbergAction::Verify { certificate } => {
            let cert: Certificate = read_json(&certificate)?;
            if !matches!(
                cert,
                Certificate::TverbergCenter { .. } | Certificate::Tolerance { .. }
            ) {
                return Err(Failure::Usage("not a Tverberg certificate".into()));
            }
            let valid = verify_certificate(&cert, budget)?;
            Ok(Outcome {
                value: json!({ "valid": valid }),
                passed: valid,
            })
        }
    }
}

fn generate(kind: GenerateKind, global: &Global) -> CliResult<Outcome> {
    let mut rng = rng_from_seed(global.seed);
    Ok(Outcome::pass(match kind {
        GenerateKind::Points { dim, count } => to_value(&PointConfig {
            dim,
            points: random_points(&mut rng, dim, count),
        }),
        GenerateKind::Complex {
            vertices,
            collapsible,
            d,
            steps,
            max_face,
        } => {
            if collapsible {
                let inst =
                    collapsible_complex(&mut rng, vertices, d, steps, max_face.unwrap_or(d + 2))?;
                let spec = ComplexSpec::from_complex(&inst.complex);
                json!({
                    "complex": spec,
                    "certificate": Certificate::Collapse { complex: spec.clone(), sequence: inst.certificate },
                })
            } else {
                if vertices == 0 || vertices > helly_core::complex::MAX_VERTICES {
                    return Err(Failure::Usage(format!(
                        "vertex count {vertices} out of range"
                    )));
                }
                let x = random_complex(&mut rng, vertices, steps, max_face.unwrap_or(d + 2));
                json!({ "complex": ComplexSpec::from_complex(&x) })
            }
        }
        GenerateKind::Matroid {
            kind,
            elements,
            blocks,
        } => {
            let m = match (kind, blocks) {
                (KindArg::Partition, Some(b)) => {
                    Matroid::partition(random_partition_blocks(&mut rng, elements, b))?
                }
                _ => {
                    let name = match kind {
                        KindArg::Uniform => MatroidKindName::Uniform,
                        KindArg::Partition => MatroidKindName::Partition,
                        KindArg::Linear => MatroidKindName::Linear,
                        KindArg::Explicit => MatroidKindName::Explicit,
                    };
                    random_matroid(&mut rng, elements, name)?
                }
            };
            to_value(&MatroidSpec::from(&m))
        }
        GenerateKind::Family {
            kind,
            count,
            dim,
            colors,
        } => {
            if colors == 0 || colors > count {
                return Err(Failure::Usage(format!(
                    "{colors} colors for {count} bodies"
                )));
            }
            let bodies = match kind {
                FamilyKind::Intervals => random_intervals(&mut rng, count, 10),
                FamilyKind::Boxes => random_boxes(&mut rng, count, dim, 10),
                FamilyKind::Hulls => random_hulls(&mut rng, count, dim, 3),
            };
            let dim = if matches!(kind, FamilyKind::Intervals) {
                1
            } else {
                dim
            };
            let cols = random_colors(&mut rng, count, colors);
            to_value(&FamilySpec::from(&ColoredFamily::new(dim, bodies, cols)?))
        }
    }))
}

fn suite(name: &str, global: &Global) -> CliResult<Outcome> {
    if !SUITES.contains(&name) {
        return Err(Failure::Usage(format!(
            "unknown suite {name:?}; expected one of {SUITES:?}"
        )));
    }
    let cfg = SuiteConfig {
        seed: global.seed,
        max_instances: global.budget.map(|b| b as usize),
    };
    let report = run_suite(name, cfg)?;
    if !global.quiet {
        for v in &report.verdicts {
            let status = if v.passed { "PASS" } else { "FAIL" };
            eprintln!(
                "{status} {} ({} cases, {} failures) {}",
                v.check, v.cases, v.failures, v.detail
            );
        }
    }
    Ok(Outcome {
        passed: report.passed(),
        value: to_value(&report),
    })
}

/// Finds certificates in a certificate file, a generator output or a suite
/// report.
fn collect_certificates(value: &Value) -> CliResult<Vec<Certificate>> {
    let parse = |v: &Value| {
        serde_json::from_value::<Certificate>(v.clone())
            .map_err(|e| Failure::Usage(format!("certificate: {e}")))
    };
    if value.get("kind").is_some() {
        return Ok(vec![parse(value)?]);
    }
    if let Some(list) = value.get("certificates").and_then(Value::as_array) {
        return list.iter().map(parse).collect();
    }
    if let Some(c) = value.get("certificate") {
        return Ok(vec![parse(c)?]);
    }
    Err(Failure::Usage("no certificate found".into()))
}

fn verify(path: &Path, global: &Global) -> CliResult<Outcome> {
    let value: Value = read_json(path)?;
    let certs = collect_certificates(&value)?;
    let mut results = Vec::new();
    for c in &certs {
        results.push(verify_certificate(c, tverberg_budget(global))?);
    }
    Ok(Outcome {
        passed: results.iter().all(|&b| b),
        value: json!({ "certificates": certs.len(), "valid": results }),
    })
}

fn run(cli: Cli) -> CliResult<Outcome> {
    let g = &cli.global;
    match cli.command {
        Command::Homology {
            complex,
            betti,
            field,
        } => homology(&complex, betti, field.into()),
        Command::Leray {
            complex,
            d,
            method,
            field,
        } => leray(&complex, d, method, field.into()),
        Command::Collapse { complex, d, mode } => collapse(&complex, d, mode, g),
        Command::Matroid {
            matroid: path,
            tolerance,
            rank,
            check_axioms,
        } => matroid(&path, tolerance, &rank, check_axioms),
        Command::Theorem {
            which,
            complex,
            matroid,
            d,
            m,
            k,
            constructive,
        } => theorem(
            TheoremArgs {
                which,
                complex: &complex,
                matroid: &matroid,
                d,
                m,
                k,
                constructive,
            },
            g,
        ),
        Command::Nerve { family } => nerve_cmd(&family),
        Command::ColorfulHelly { family, d, m, k } => colorful_helly_cmd(&family, d, m, k),
        Command::Tverberg { action } => tverberg(action, g),
        Command::Generate { kind } => generate(kind, g),
        Command::RunSuite { name } => suite(&name, g),
        Command::Verify { certificate } => verify(&certificate, g),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let global = cli.global.clone();
    match run(cli) {
        Ok(out) => {
            let text = serde_json::to_string_pretty(&with_schema(out.value)).expect("serializable");
            if let Some(path) = &global.json_out {
                if let Err(e) = fs::write(path, format!("{text}\n")) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if !global.quiet {
                let _ = writeln!(std::io::stdout().lock(), "{text}");
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("failed: {msg}");
            ExitCode::from(1)
        }
    }
}
