//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch or failed check, 2 usage or
//! input error, 3 subset limit exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::corpus::corpus;
use crate::error::Error;
use crate::expr::{parse_prefix, tokenize, Object};
use crate::graded::GradedGroups;
use crate::isotopy::{isotopy_check, IsotopyCheck};
use crate::moment_angle::{moment_angle_cohomology_with, MomentAngleOptions, DEFAULT_MAX_VERTICES};
use crate::surgery::{boundary_product_groups, verify_cut_theorem_with, TheoremReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// JSON output schema version.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "macut",
    version,
    about = "Moment-angle manifold cohomology and the vertex-cut formula"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for the subset enumeration.
    #[arg(long, global = true, env = "MACUT_WORKERS")]
    workers: Option<usize>,

    /// Largest vertex count m accepted (2^m subsets are enumerated).
    #[arg(long, global = true, value_name = "E", default_value_t = DEFAULT_MAX_VERTICES)]
    max_subsets: usize,

    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    /// Emit CSV.
    #[arg(long, global = true)]
    csv: bool,

    /// Write output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Seed for sampled checks.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a polytope or complex and print its canonical JSON.
    Build {
        #[arg(required = true, num_args = 1.., value_name = "EXPR")]
        spec: Vec<String>,
    },
    /// Cohomology of the moment-angle manifold.
    Betti {
        #[arg(required = true, num_args = 1.., value_name = "EXPR")]
        spec: Vec<String>,
    },
    /// Check the vertex-cut formula: `verify EXPR VERTEX` or `verify EXPR --all-vertices`.
    Verify {
        #[arg(long)]
        all_vertices: bool,
        #[arg(required = true, num_args = 1.., value_name = "EXPR")]
        spec: Vec<String>,
    },
    /// Endpoint identities and injectivity probes of the torus isotopy.
    IsotopyCheck {
        k: usize,
        #[arg(default_value_t = 10_000)]
        samples: usize,
        seed: Option<u64>,
    },
    /// Verify the formula over the built-in corpus and print a summary.
    VerifyCorpus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Table,
    Json,
    Csv,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SubsetLimit { .. } => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Runs the command line `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Table
    };
    let opts = MomentAngleOptions {
        workers: cli.workers,
        max_vertices: cli.max_subsets,
    };
    if cli.workers == Some(0) {
        let _ = writeln!(err, "error: --workers must be at least 1");
        return EXIT_USAGE;
    }

    let result = match &cli.command {
        Command::Build { spec } => cmd_build(spec, format),
        Command::Betti { spec } => cmd_betti(spec, format, &opts),
        Command::Verify { all_vertices, spec } => cmd_verify(spec, *all_vertices, format, &opts),
        Command::IsotopyCheck { k, samples, seed } => {
            cmd_isotopy_check(*k, *samples, seed.or(cli.seed).unwrap_or(0), format)
        }
        Command::VerifyCorpus => cmd_verify_corpus(format, &opts),
    };
    match result {
        Ok((text, code)) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &text),
                None => out.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

type Output = Result<(String, i32), Failure>;

fn parse_single(spec: &[String]) -> Result<(Object, String), Failure> {
    let tokens = tokenize(spec);
    let (obj, rest) = parse_prefix(&tokens)?;
    if !rest.is_empty() {
        return Err(usage(format!(
            "unexpected trailing input {:?}",
            rest.join(" ")
        )));
    }
    Ok((obj, tokens.join(" ").replace("( ", "(").replace(" )", ")")))
}

fn with_schema<T: Serialize>(command: &str, body: T) -> String {
    let mut v = serde_json::to_value(body).expect("output serializes");
    if let serde_json::Value::Object(map) = &mut v {
        let mut full = serde_json::Map::new();
        full.insert("schema".into(), json!(SCHEMA_VERSION));
        full.insert("command".into(), json!(command));
        full.extend(std::mem::take(map));
        v = serde_json::Value::Object(full);
    }
    let mut s = serde_json::to_string_pretty(&v).expect("output serializes");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for r in rows {
        w.write_record(&r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
}

fn torsion_text(t: &[u64]) -> String {
    t.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_build(spec: &[String], format: Format) -> Output {
    let (obj, _) = parse_single(spec)?;
    let text = match format {
        Format::Table | Format::Json => obj.to_json() + "\n",
        Format::Csv => {
            let rows = match &obj {
                Object::Polytope(p) => p.vertex_facets().to_vec(),
                Object::Complex(k) => k
                    .maximal_faces()
                    .iter()
                    .map(|f| f.vertices().to_vec())
                    .collect(),
            };
            let header = match obj {
                Object::Polytope(_) => ["vertex", "facets"],
                Object::Complex(_) => ["face", "vertices"],
            };
            csv_text(
                &header,
                rows.iter()
                    .enumerate()
                    .map(|(i, r)| {
                        vec![
                            i.to_string(),
                            r.iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
                        ]
                    })
                    .collect(),
            )
        }
    };
    Ok((text, EXIT_OK))
}

fn groups_table(g: &GradedGroups) -> String {
    let mut s = String::from("degree  rank  torsion\n");
    for (d, grp) in g.iter() {
        let t = if grp.torsion.is_empty() {
            "-".to_string()
        } else {
            torsion_text(&grp.torsion)
        };
        let _ = writeln!(s, "{d:>6}  {:>4}  {t}", grp.rank);
    }
    s
}

fn cmd_betti(spec: &[String], format: Format, opts: &MomentAngleOptions) -> Output {
    let (obj, name) = parse_single(spec)?;
    let k = obj.complex();
    let h = moment_angle_cohomology_with(&k, opts)?;
    let (m, n) = match &obj {
        Object::Polytope(p) => (p.facet_count(), Some(p.dim())),
        Object::Complex(k) => (k.vertex_count(), None),
    };
    let poincare = h.betti();
    let text = match format {
        Format::Json => with_schema(
            "betti",
            json!({
                "input": name,
                "m": m,
                "n": n,
                "dim": n.map(|n| m + n),
                "cohomology": h,
                "poincare": poincare.to_string(),
            }),
        ),
        Format::Csv => csv_text(
            &["degree", "rank", "torsion"],
            h.iter()
                .map(|(d, g)| vec![d.to_string(), g.rank.to_string(), torsion_text(&g.torsion)])
                .collect(),
        ),
        Format::Table => {
            let mut s = format!("input: {name}\n");
            match n {
                Some(n) => {
                    let _ = writeln!(s, "m = {m}, n = {n}, dim Z = {}", m + n);
                }
                None => {
                    let _ = writeln!(s, "m = {m}");
                }
            }
            s += &groups_table(&h);
            let _ = writeln!(s, "poincare: {poincare}");
            s
        }
    };
    Ok((text, EXIT_OK))
}

fn report_line(r: &TheoremReport) -> String {
    let mut s = format!(
        "{} vertex {}: {}  lhs {}  rhs {}\n",
        r.name.as_deref().unwrap_or("polytope"),
        r.vertex,
        if r.matches { "match" } else { "MISMATCH" },
        r.lhs.betti(),
        r.rhs.betti()
    );
    for (d, diff) in &r.diff {
        let _ = writeln!(s, "  degree {d}: lhs {}  rhs {}", diff.lhs, diff.rhs);
    }
    s
}

fn cmd_verify(spec: &[String], all: bool, format: Format, opts: &MomentAngleOptions) -> Output {
    let tokens = tokenize(spec);
    let (obj, rest) = parse_prefix(&tokens)?;
    let consumed = &tokens[..tokens.len() - rest.len()];
    let name = consumed.join(" ").replace("( ", "(").replace(" )", ")");
    let Object::Polytope(p) = obj else {
        return Err(usage("verify needs a polytope, not a complex"));
    };
    let vertices: Vec<usize> = match (all, rest) {
        (true, []) => (0..p.vertex_count()).collect(),
        (false, [v]) => vec![v
            .parse()
            .map_err(|_| usage(format!("expected a vertex index, got {v:?}")))?],
        (true, _) => return Err(usage("--all-vertices takes no vertex index")),
        (false, []) => return Err(usage("give a vertex index or --all-vertices")),
        (false, _) => {
            return Err(usage(format!(
                "unexpected trailing input {:?}",
                rest.join(" ")
            )))
        }
    };
    let reports = vertices
        .into_iter()
        .map(|v| verify_cut_theorem_with(&p, v, Some(name.clone()), opts))
        .collect::<Result<Vec<_>, _>>()?;
    let all_match = reports.iter().all(|r| r.matches);
    let text = match format {
        Format::Json => with_schema(
            "verify",
            json!({ "reports": reports, "all_match": all_match }),
        ),
        Format::Csv => csv_text(
            &["input", "vertex", "match", "lhs", "rhs"],
            reports
                .iter()
                .map(|r| {
                    vec![
                        name.clone(),
                        r.vertex.to_string(),
                        r.matches.to_string(),
                        r.lhs.betti().to_string(),
                        r.rhs.betti().to_string(),
                    ]
                })
                .collect(),
        ),
        Format::Table => reports.iter().map(report_line).collect(),
    };
    Ok((text, if all_match { EXIT_OK } else { EXIT_MISMATCH }))
}

fn isotopy_table(c: &IsotopyCheck) -> String {
    let e = &c.endpoints;
    let mut s = format!(
        "isotopy check k = {} ({} samples, seed {})\n",
        c.k, e.samples, e.seed
    );
    let _ = writeln!(s, "  t = 1 standard torus error   {:.3e}", e.t1_max_error);
    let _ = writeln!(
        s,
        "  t = 0 circle radius error    {:.3e}",
        e.t0_radius_error
    );
    let _ = writeln!(
        s,
        "  t = 0 independence error     {:.3e}",
        e.t0_independence_error
    );
    let _ = writeln!(s, "  Lipschitz constant in t      {:.6}", e.lipschitz);
    if let Some(f1) = c.f1_agreement {
        let _ = writeln!(s, "  F1 vs deformation error      {f1:.3e}");
    }
    for p in &c.probes {
        let _ = writeln!(
            s,
            "  probe {:<40} violations {}  min separation {:.3e}",
            serde_json::to_string(&p.map).expect("probe map serializes"),
            p.violations,
            p.min_separation
        );
    }
    let _ = writeln!(s, "{}", if c.passed { "pass" } else { "FAIL" });
    s
}

fn cmd_isotopy_check(k: usize, samples: usize, seed: u64, format: Format) -> Output {
    if k < 1 {
        return Err(usage("isotopy-check needs k >= 1"));
    }
    if samples < 2 {
        return Err(usage("isotopy-check needs at least 2 samples"));
    }
    let c = isotopy_check(k, samples, seed)?;
    let text = match format {
        Format::Json => with_schema("isotopy-check", &c),
        Format::Csv => csv_text(
            &["map", "samples", "seed", "violations", "min_separation"],
            c.probes
                .iter()
                .map(|p| {
                    vec![
                        serde_json::to_string(&p.map).expect("probe map serializes"),
                        p.samples.to_string(),
                        p.seed.to_string(),
                        p.violations.to_string(),
                        format!("{:e}", p.min_separation),
                    ]
                })
                .collect(),
        ),
        Format::Table => isotopy_table(&c),
    };
    Ok((text, if c.passed { EXIT_OK } else { EXIT_MISMATCH }))
}

#[derive(Serialize)]
struct CorpusRow {
    input: &'static str,
    m: usize,
    n: usize,
    vertices: usize,
    matched: usize,
    duality: bool,
    euler_zero: bool,
    boundary_product: bool,
    poincare: String,
}

fn cmd_verify_corpus(format: Format, opts: &MomentAngleOptions) -> Output {
    let mut rows = Vec::new();
    for entry in corpus() {
        let p = &entry.polytope;
        let (m, n) = (p.facet_count(), p.dim());
        let d = m + n;
        let hz = moment_angle_cohomology_with(&p.dual_complex(), opts)?;
        let bz = hz.betti();
        let w = boundary_product_groups(&hz, d as i32)?.betti();
        let mut expected_w = bz
            .multiply(&crate::graded::PoincarePolynomial::from_coefficients(&[
                1, 1,
            ]))
            .to_vec();
        expected_w[1] -= 1;
        expected_w[d] -= 1;
        let mut matched = 0;
        for v in 0..p.vertex_count() {
            if verify_cut_theorem_with(p, v, Some(entry.name.into()), opts)?.matches {
                matched += 1;
            }
        }
        rows.push(CorpusRow {
            input: entry.name,
            m,
            n,
            vertices: p.vertex_count(),
            matched,
            duality: bz.is_symmetric(d),
            euler_zero: bz.euler_characteristic() == 0,
            boundary_product: w.to_vec() == expected_w && w.is_symmetric(d + 1),
            poincare: bz.to_string(),
        });
    }
    let ok = rows
        .iter()
        .all(|r| r.matched == r.vertices && r.duality && r.euler_zero && r.boundary_product);
    let text = match format {
        Format::Json => with_schema("verify-corpus", json!({ "rows": rows, "all_pass": ok })),
        Format::Csv => csv_text(
            &[
                "input",
                "m",
                "n",
                "vertices",
                "matched",
                "duality",
                "euler_zero",
                "boundary_product",
                "poincare",
            ],
            rows.iter()
                .map(|r| {
                    vec![
                        r.input.to_string(),
                        r.m.to_string(),
                        r.n.to_string(),
                        r.vertices.to_string(),
                        r.matched.to_string(),
                        r.duality.to_string(),
                        r.euler_zero.to_string(),
                        r.boundary_product.to_string(),
                        r.poincare.clone(),
                    ]
                })
                .collect(),
        ),
        Format::Table => {
            let mut s = format!(
                "{:<34} {:>2} {:>2} {:>8}  {:<8} {:<5} {:<4} {:<4}  {}\n",
                "input", "m", "n", "vertices", "cut ok", "PD", "chi", "W", "P_Z(t)"
            );
            for r in &rows {
                let yn = |b: bool| if b { "yes" } else { "NO" };
                let _ = writeln!(
                    s,
                    "{:<34} {:>2} {:>2} {:>8}  {:<8} {:<5} {:<4} {:<4}  {}",
                    r.input,
                    r.m,
                    r.n,
                    r.vertices,
                    format!("{}/{}", r.matched, r.vertices),
                    yn(r.duality),
                    yn(r.euler_zero),
                    yn(r.boundary_product),
                    r.poincare
                );
            }
            let _ = writeln!(
                s,
                "{}",
                if ok {
                    "all checks pass"
                } else {
                    "SOME CHECKS FAILED"
                }
            );
            s
        }
    };
    Ok((text, if ok { EXIT_OK } else { EXIT_MISMATCH }))
}
