//! `theta-lab`: load complexes and triangulations, subdivide them, compute
//! their invariants and run the verification suites.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use theta_core::complex::io::parse_facet_file;
use theta_core::harness::checks::{check_conjecture_5_3, half_increasing, top_heavy};
use theta_core::harness::corpus::{bases, corpus_triangulations, fresh_label, Named};
use theta_core::harness::scans::{
    antiprism_theta, excedance_derangement_poly, interior_vertex_pair_reports, scan_theta_zero,
};
use theta_core::harness::{run_suite, InstanceClass, InstanceGenerator, Suite, SuiteConfig, Summary};
use theta_core::homology::{is_cohen_macaulay, is_cohen_macaulay_star, is_homology_ball, is_homology_sphere};
use theta_core::invariants::{gamma_poly, h_poly, h_vector, local_h, simplex_face, theta, theta_class};
use theta_core::par::Exec;
use theta_core::poly::{derangement_poly, is_real_rooted, pnk_row};
use theta_core::subdivision::io::{parse_triangulation_file, write_triangulation_file, SEPARATOR};
use theta_core::subdivision::{antiprism, barycentric, edgewise, stellar};
use theta_core::{Error, Face, FieldChoice, SimplicialComplex, Triangulation, VerifiedBall};

const TABLE_CAP: usize = 10;

#[derive(Parser)]
#[command(name = "theta-lab", version, about = "Exact h-, local h- and theta polynomials of simplicial complexes")]
struct Cli {
    /// Coefficient field for homology: `q` or a prime such as `2`.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    field: FieldChoice,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and classification of a facet or triangulation file.
    Compute { path: PathBuf },
    /// Apply a subdivision and write a triangulation file.
    Subdivide {
        path: PathBuf,
        /// `sd`, `antiprism`, `stellar:a,b,c` or `edgewise:r`.
        #[arg(long)]
        kind: String,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Homological classification only.
    Classify { path: PathBuf },
    /// Run a verification suite, one JSON report per line.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        /// Generated instances per class and dimension.
        #[arg(long, default_value_t = 8)]
        generated: u64,
        /// Evaluate on one thread.
        #[arg(long)]
        sequential: bool,
        /// Print only the summary.
        #[arg(long)]
        quiet: bool,
    },
    /// Exploratory scans.
    Scan {
        #[arg(value_enum)]
        which: ScanKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        #[arg(long, default_value_t = 8)]
        generated: u64,
    },
    /// Print p_{n,k} or the derangement polynomial.
    Tables {
        #[arg(long, conflicts_with = "derangement", required_unless_present = "derangement")]
        pnk: Option<usize>,
        #[arg(long)]
        derangement: Option<usize>,
        #[arg(long, default_value_t = TABLE_CAP)]
        cap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanKind {
    /// Balls in the corpus and generated families with θ = 0.
    ThetaZero,
    /// θ of antiprisms over simplices and whether it is real-rooted.
    AntiprismRoots,
    /// Nested balls with the interior vertex property but not the boundary hypothesis.
    InteriorVertexPairs,
    /// Real-rootedness of ℓ_V over barycentric and antiprism subdivisions.
    LocalHRoots,
    /// Derangement polynomials against the excedance count.
    Derangements,
}

fn parse_field(s: &str) -> Result<FieldChoice, String> {
    match s {
        "q" | "Q" | "rational" => Ok(FieldChoice::Rational),
        p => {
            let p: u64 = p.parse().map_err(|_| format!("expected `q` or a prime, got {p:?}"))?;
            FieldChoice::prime(p).map_err(|e| e.to_string())
        }
    }
}

/// A usage or input problem, reported with exit code 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

enum Input {
    Complex(SimplicialComplex),
    Triangulation(Triangulation),
}

impl Input {
    fn complex(&self) -> &SimplicialComplex {
        match self {
            Input::Complex(c) => c,
            Input::Triangulation(t) => t.total(),
        }
    }
}

fn read_input(path: &Path) -> Result<Input, Usage> {
    let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    if text.lines().any(|l| l.trim() == SEPARATOR) {
        Ok(Input::Triangulation(parse_triangulation_file(&text)?))
    } else {
        Ok(Input::Complex(parse_facet_file(&text)?))
    }
}

fn strings<T: ToString>(xs: &[T]) -> Value {
    Value::from(xs.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn classification(c: &SimplicialComplex, field: FieldChoice) -> Value {
    let cm = !c.is_void() && is_cohen_macaulay(c, field);
    json!({
        "pure": c.is_pure(),
        "flag": c.is_flag(),
        "cohen_macaulay": cm,
        "cohen_macaulay_star": cm && is_cohen_macaulay_star(c, field).unwrap_or(false),
        "homology_sphere": !c.is_void() && is_homology_sphere(c, field),
        "homology_ball": !c.is_void() && is_homology_ball(c, field).is_some(),
    })
}

fn ball_fields(c: &SimplicialComplex, field: FieldChoice) -> Value {
    let ball = match VerifiedBall::verify(c, field) {
        Ok(b) => b,
        Err(e) => return json!({ "theta": null, "theta_reason": e.to_string() }),
    };
    let th = match theta(&ball) {
        Ok(t) => t,
        Err(e) => return json!({ "theta": null, "theta_reason": e.to_string() }),
    };
    let n = ball.rank();
    let h = h_vector(c);
    let induced = ball.boundary().is_void() || ball.boundary().is_induced_subcomplex(c).unwrap_or(false);
    json!({
        "theta": th,
        "boundary_h": h_poly(ball.boundary()),
        "interior_vertices": ball.interior_vertices().len(),
        "interior_vertex_property": ball.has_interior_vertex_property(),
        "boundary_induced": induced,
        "theta_nonnegative": th.is_nonnegative(),
        "theta_unimodal": th.is_unimodal_within(n),
        "theta_gamma_positive": th.is_gamma_positive(n),
        "h_top_heavy": top_heavy(&h),
        "h_half_increasing": half_increasing(&h),
        "flag_conjecture": check_conjecture_5_3("input", &ball).ok().map(|r| r.outcome),
    })
}

fn compute(input: &Input, field: FieldChoice) -> Value {
    let c = input.complex();
    if c.is_void() {
        return json!({ "void": true, "f_vector": [], "h": [], "theta": null, "theta_reason": "void complex" });
    }
    let mut out = json!({
        "void": false,
        "dim": c.dim(),
        "vertices": c.num_vertices(),
        "facets": c.facets().len(),
        "f_vector": strings(&c.f_vector()),
        "h": h_poly(c),
        "classification": classification(c, field),
    });
    let obj = out.as_object_mut().expect("object");
    if let Value::Object(ball) = ball_fields(c, field) {
        obj.extend(ball);
    }
    obj.insert(
        "gamma".into(),
        match gamma_poly(c, field) {
            Ok(g) => strings(&g.gamma),
            Err(_) => Value::Null,
        },
    );
    if let Input::Triangulation(t) = input {
        obj.insert("base_h".into(), json!(h_poly(t.base())));
        obj.insert("theta_class".into(), json!(theta_class(t, field).ok()));
        if simplex_face(t.base()).is_ok() {
            obj.insert("local_h".into(), json!(local_h(t).ok()));
        }
    }
    out
}

fn subdivide(c: &SimplicialComplex, kind: &str) -> Result<Triangulation, Usage> {
    let (name, arg) = kind.split_once(':').unwrap_or((kind, ""));
    match (name, arg) {
        ("sd", "") => Ok(barycentric(c)),
        ("antiprism", "") => Ok(antiprism(c)),
        ("stellar", spec) if !spec.is_empty() => {
            let labels: Vec<&str> = spec.split(',').map(str::trim).collect();
            let face: Face = c.face_from_labels(&labels)?;
            Ok(stellar(c, &face, &fresh_label(c, "o"))?)
        }
        ("edgewise", r) => {
            let r: u32 = r.parse().map_err(|_| Usage(format!("bad edgewise parameter {r:?}")))?;
            Ok(edgewise(c, r)?)
        }
        _ => Err(Usage(format!("unknown subdivision kind {kind:?}"))),
    }
}

fn scan(which: ScanKind, config: SuiteConfig) -> Result<Vec<Value>, Usage> {
    let field = config.field;
    let mut out = Vec::new();
    match which {
        ScanKind::ThetaZero => {
            let mut cands: Vec<Named<SimplicialComplex>> = bases(config.max_dim);
            for t in corpus_triangulations(config.max_dim)?.into_iter().filter(|t| t.value.kind() != "id") {
                cands.push(Named::new(t.name, t.value.total().clone()));
            }
            let t = edgewise(&theta_core::complex::generators::simplex(4), 4)?;
            cands.push(Named::new("esd4(simplex(4))", t.total().clone()));
            for dim in 1..=config.max_dim.min(3) {
                let g = InstanceGenerator::new(config.seed, InstanceClass::Ball, dim, dim + 6)?;
                cands.extend(g.take(config.generated).into_iter().map(|i| Named::new(i.name, i.complex)));
            }
            for name in scan_theta_zero(&cands, field) {
                out.push(json!({ "scan": "theta-zero", "instance": name }));
            }
        }
        ScanKind::AntiprismRoots => {
            for m in 1..=5 {
                let (th, real) = antiprism_theta(m, field)?;
                out.push(json!({ "scan": "antiprism-roots", "m": m, "theta": th, "real_rooted": real }));
            }
        }
        ScanKind::InteriorVertexPairs => {
            for dim in 1..=config.max_dim.min(3) {
                let g = InstanceGenerator::new(config.seed, InstanceClass::Ball, dim, dim + 6)?;
                for inst in g.take(config.generated) {
                    for r in interior_vertex_pair_reports(&inst, field) {
                        out.push(serde_json::to_value(&r).expect("serializable"));
                    }
                }
            }
        }
        ScanKind::LocalHRoots => {
            let reports = run_suite(&SuiteConfig {
                suite: Suite::Monotone,
                ..config
            })?;
            for r in reports.iter().filter(|r| r.id.starts_with("local-h-roots")) {
                out.push(serde_json::to_value(r).expect("serializable"));
            }
        }
        ScanKind::Derangements => {
            for n in 0..=7 {
                let d = derangement_poly(n);
                out.push(json!({
                    "scan": "derangements",
                    "n": n,
                    "d": d,
                    "matches_excedances": d == excedance_derangement_poly(n),
                    "gamma_positive": d.is_gamma_positive(n),
                    "real_rooted": is_real_rooted(&d),
                }));
            }
        }
    }
    Ok(out)
}

fn tables(pnk: Option<usize>, derangement: Option<usize>, cap: usize) -> Result<String, Usage> {
    let n = pnk.or(derangement).expect("clap requires one");
    if n > cap {
        return Err(Usage(format!("{n} exceeds the table cap {cap}")));
    }
    if pnk.is_some() {
        Ok(pnk_row(n)
            .iter()
            .enumerate()
            .map(|(k, p)| format!("p_{{{n},{k}}} = {p}\n"))
            .collect())
    } else {
        Ok(format!("{}\n", derangement_poly(n)))
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("THETA_LAB_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        // a pool that is already built keeps its size
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn run(cli: Cli) -> Result<ExitCode, Usage> {
    let field = cli.field;
    match cli.command {
        Command::Compute { path } => {
            let input = read_input(&path)?;
            println!("{}", serde_json::to_string_pretty(&compute(&input, field)).expect("json"));
        }
        Command::Classify { path } => {
            let input = read_input(&path)?;
            println!("{}", classification(input.complex(), field));
        }
        Command::Subdivide { path, kind, out } => {
            let input = read_input(&path)?;
            let t = subdivide(input.complex(), &kind)?;
            let text = write_triangulation_file(&t);
            match out {
                Some(p) => fs::write(&p, text).map_err(|e| Usage(format!("{}: {e}", p.display())))?,
                None => print!("{text}"),
            }
        }
        Command::Verify {
            suite,
            seed,
            max_dim,
            generated,
            sequential,
            quiet,
        } => {
            let suite: Suite = suite.parse()?;
            let exec = if sequential { Exec::Sequential } else { Exec::Parallel };
            let config = SuiteConfig {
                suite,
                seed,
                max_dim,
                generated,
                field,
                exec,
            };
            let reports = run_suite(&config)?;
            if !quiet {
                for r in &reports {
                    println!("{}", r.to_json_line());
                }
            }
            let summary = Summary::from_reports(&reports);
            println!("{}", json!({ "summary": summary }));
            if !summary.is_clean() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Scan {
            which,
            seed,
            max_dim,
            generated,
        } => {
            let config = SuiteConfig {
                seed,
                max_dim,
                generated,
                field,
                ..SuiteConfig::default()
            };
            for line in scan(which, config)? {
                println!("{line}");
            }
        }
        Command::Tables { pnk, derangement, cap } => print!("{}", tables(pnk, derangement, cap)?),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("theta-lab: {msg}");
            ExitCode::from(2)
        }
    }
}
