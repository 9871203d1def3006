//! Command-line interface: exact determinants, adjugates and truncated
//! polynomial-matrix inverses from matrix files, plus the self-test and
//! benchmark harness.
//!
//! Exit codes: 0 success; 2 expected mathematical failure (degenerate or
//! singular input in a mode that cannot serve it); 3 input or
//! configuration error; 4 oracle disagreement, which is never expected.

mod io;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use detkit::adjoint::gradient_from_trace;
use detkit::counters;
use detkit::krylov::det_forward_randomized;
use detkit::linalg::{adjugate_oracle, det_cofactor, det_gauss};
use detkit::rings::{PrimeField, Ring, SeriesRing};
use detkit::{
    adjoint, adjoint_division_free_scheduled, det_division_free, determinant, invert_series_matrix,
    newton_inverse_oracle, EvalSchedule, Matrix,
};

/// All seeded randomness uses the ChaCha12 generator.
const RNG_NAME: &str = "chacha12";

#[derive(Parser)]
#[command(
    name = "detkit",
    version,
    about = "Exact determinants, adjugates and series inverses over prime fields, integers and truncated series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Determinant of a matrix file
    Det(RunArgs),
    /// Adjugate (classical adjoint) of a matrix file
    Adjoint(RunArgs),
    /// Truncated inverse of a polynomial matrix over GF(p)
    InverseSeries(SeriesArgs),
    /// Run the full property suites of every module
    Selftest {
        #[arg(long, default_value_t = 0xacce)]
        seed: u64,
    },
    /// Report wall time and per-stage multiplication counts
    Bench(BenchArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Coefficient domain: `gf:<p>` for an odd prime p, or int
    #[arg(long)]
    field: String,
    /// krylov | division-free | oracle (defaults: krylov for gf, division-free for int)
    #[arg(long)]
    mode: Option<String>,
    /// Seed for the randomized projections
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Recompute through the independent oracles and compare exactly
    #[arg(long)]
    check: bool,
    /// Apply the conservative partial-evaluation schedule (division-free adjoint only)
    #[arg(long)]
    partial_eval: bool,
    /// Emit one structured JSON object instead of text
    #[arg(long)]
    json: bool,
    /// Matrix file
    input: PathBuf,
}

#[derive(Args)]
struct SeriesArgs {
    /// Coefficient domain of the series: `gf:<p>`
    #[arg(long)]
    field: String,
    /// Truncation order N; arithmetic is modulo z^(N+1)
    #[arg(long)]
    trunc: usize,
    /// division-free (adjugate route, default) | oracle (Newton lifting)
    #[arg(long)]
    mode: Option<String>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Compare the adjugate route against the Newton oracle exactly
    #[arg(long)]
    check: bool,
    /// Emit one structured JSON object instead of text
    #[arg(long)]
    json: bool,
    /// Matrix file with polynomial entries c0:c1:...:cd
    input: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    /// Prime field for the benchmark matrices
    #[arg(long, default_value = "gf:10007")]
    field: String,
    /// Comma-separated matrix dimensions
    #[arg(long, default_value = "8,16,32,64")]
    sizes: String,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

enum Failure {
    Math(detkit::Error),
    Input(String),
    Mismatch(String),
}

type RunResult<T> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Det(args) => run_det(&args),
        Command::Adjoint(args) => run_adjoint(&args),
        Command::InverseSeries(args) => run_inverse_series(&args),
        Command::Selftest { seed } => return run_selftest(seed),
        Command::Bench(args) => run_bench(&args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Math(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("check mismatch (this is a bug): {msg}");
            ExitCode::from(4)
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum FieldSpec {
    Gf(u64),
    Int,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Krylov,
    DivisionFree,
    Oracle,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Krylov => "krylov",
            Mode::DivisionFree => "division-free",
            Mode::Oracle => "oracle",
        }
    }
}

fn parse_field(spec: &str) -> RunResult<FieldSpec> {
    if spec == "int" {
        return Ok(FieldSpec::Int);
    }
    if let Some(p) = spec.strip_prefix("gf:") {
        let p: u64 = p
            .parse()
            .map_err(|_| Failure::Input(format!("invalid modulus in field spec {spec:?}")))?;
        if p < 3 || p.is_multiple_of(2) || p >= 1 << 62 {
            return Err(Failure::Input(format!(
                "modulus {p} must be an odd prime below 2^62"
            )));
        }
        return Ok(FieldSpec::Gf(p));
    }
    Err(Failure::Input(format!(
        "unknown field {spec:?}; expected gf:<p> or int"
    )))
}

fn resolve_mode(field: FieldSpec, requested: &Option<String>) -> RunResult<Mode> {
    let mode = match requested.as_deref() {
        None => match field {
            FieldSpec::Gf(_) => Mode::Krylov,
            FieldSpec::Int => Mode::DivisionFree,
        },
        Some("krylov") => Mode::Krylov,
        Some("division-free") => Mode::DivisionFree,
        Some("oracle") => Mode::Oracle,
        Some(other) => {
            return Err(Failure::Input(format!(
                "unknown mode {other:?}; expected krylov, division-free or oracle"
            )))
        }
    };
    if mode == Mode::Krylov && field == FieldSpec::Int {
        return Err(Failure::Input(
            "krylov mode requires a prime field; use --field gf:<p> or --mode division-free"
                .to_string(),
        ));
    }
    Ok(mode)
}

fn load(path: &PathBuf) -> RunResult<io::ParsedMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    io::parse_matrix_text(&text).map_err(Failure::Input)
}

#[derive(Serialize)]
struct ScalarReport {
    n: usize,
    mode: &'static str,
    det: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    adjoint: Option<Vec<Vec<String>>>,
    division_violations: u64,
    seed: u64,
    checked: bool,
}

fn emit_scalar(report: &ScalarReport, json: bool) {
    if json {
        println!("{}", serde_json::to_string(report).expect("serializable"));
        return;
    }
    println!("n = {}", report.n);
    println!("mode = {}", report.mode);
    println!("det = {}", report.det);
    if let Some(adj) = &report.adjoint {
        println!("adjoint:");
        for row in adj {
            println!("{}", row.join(" "));
        }
    }
    println!("division_violations = {}", report.division_violations);
    println!("seed = {} (rng {RNG_NAME})", report.seed);
    println!("checked = {}", report.checked);
}

fn run_det(args: &RunArgs) -> RunResult<()> {
    let field = parse_field(&args.field)?;
    let mode = resolve_mode(field, &args.mode)?;
    if args.partial_eval {
        return Err(Failure::Input(
            "--partial-eval applies to the division-free adjoint".to_string(),
        ));
    }
    if args.check && mode == Mode::Oracle {
        return Err(Failure::Input(
            "--check compares against the oracle; oracle mode already is the oracle".to_string(),
        ));
    }
    let parsed = load(&args.input)?;
    let before = counters::snapshot();
    let det: String = match field {
        FieldSpec::Gf(p) => {
            let f = PrimeField::new(p);
            let a = io::to_gf_matrix(&parsed, &f).map_err(Failure::Input)?;
            let det = match mode {
                Mode::Krylov => determinant(&a, args.seed).map_err(Failure::Math)?,
                Mode::DivisionFree => det_division_free(&a),
                Mode::Oracle => det_gauss(&a).expect("fields always eliminate"),
            };
            if args.check {
                let expected = det_gauss(&a).expect("fields always eliminate");
                if det != expected {
                    return Err(Failure::Mismatch(format!(
                        "determinant {det} but elimination oracle found {expected}"
                    )));
                }
            }
            det.to_string()
        }
        FieldSpec::Int => {
            let a = io::to_int_matrix(&parsed).map_err(Failure::Input)?;
            let needs_oracle = args.check || mode == Mode::Oracle;
            if needs_oracle && parsed.n > 16 {
                return Err(Failure::Input(
                    "the integer cofactor oracle is limited to n <= 16".to_string(),
                ));
            }
            let det = match mode {
                Mode::DivisionFree => det_division_free(&a),
                Mode::Oracle => det_cofactor(&a),
                Mode::Krylov => unreachable!("rejected by mode resolution"),
            };
            if args.check {
                let expected = det_cofactor(&a);
                if det != expected {
                    return Err(Failure::Mismatch(format!(
                        "determinant {det} but cofactor oracle found {expected}"
                    )));
                }
            }
            det.to_string()
        }
    };
    emit_scalar(
        &ScalarReport {
            n: parsed.n,
            mode: mode.name(),
            det,
            adjoint: None,
            division_violations: before.delta().division_violations,
            seed: args.seed,
            checked: args.check,
        },
        args.json,
    );
    Ok(())
}

fn run_adjoint(args: &RunArgs) -> RunResult<()> {
    let field = parse_field(&args.field)?;
    let mode = resolve_mode(field, &args.mode)?;
    if args.partial_eval && mode != Mode::DivisionFree {
        return Err(Failure::Input(
            "--partial-eval applies to the division-free adjoint".to_string(),
        ));
    }
    if args.check && mode == Mode::Oracle {
        return Err(Failure::Input(
            "--check compares against the oracle; oracle mode already is the oracle".to_string(),
        ));
    }
    let parsed = load(&args.input)?;
    let n = parsed.n;
    let schedule = if args.partial_eval {
        EvalSchedule::conservative(n)
    } else {
        EvalSchedule::none()
    };
    let before = counters::snapshot();
    let (det, adjoint_rows) = match field {
        FieldSpec::Gf(p) => {
            let f = PrimeField::new(p);
            let a = io::to_gf_matrix(&parsed, &f).map_err(Failure::Input)?;
            let (adjugate, det) = match mode {
                Mode::Krylov => {
                    let r = adjoint(&a, args.seed).map_err(Failure::Math)?;
                    (r.adjugate, r.det)
                }
                Mode::DivisionFree => {
                    let r = adjoint_division_free_scheduled(&a, &schedule)
                        .map_err(|e| Failure::Mismatch(e.to_string()))?;
                    (r.adjugate, r.det)
                }
                Mode::Oracle => {
                    let adj = adjugate_oracle(&a);
                    (adj, det_gauss(&a).expect("fields always eliminate"))
                }
            };
            if args.check {
                verify_adjugate(&a, &adjugate, &det)?;
            }
            (det.to_string(), io::format_gf_matrix(&adjugate))
        }
        FieldSpec::Int => {
            let a = io::to_int_matrix(&parsed).map_err(Failure::Input)?;
            let needs_oracle = args.check || mode == Mode::Oracle;
            if needs_oracle && n > 12 {
                return Err(Failure::Input(
                    "the integer adjugate oracle is limited to n <= 12".to_string(),
                ));
            }
            let (adjugate, det) = match mode {
                Mode::DivisionFree => {
                    let r = adjoint_division_free_scheduled(&a, &schedule)
                        .map_err(|e| Failure::Mismatch(e.to_string()))?;
                    (r.adjugate, r.det)
                }
                Mode::Oracle => (adjugate_oracle(&a), det_cofactor(&a)),
                Mode::Krylov => unreachable!("rejected by mode resolution"),
            };
            if args.check {
                verify_adjugate(&a, &adjugate, &det)?;
            }
            (det.to_string(), io::format_int_matrix(&adjugate))
        }
    };
    emit_scalar(
        &ScalarReport {
            n,
            mode: mode.name(),
            det,
            adjoint: Some(adjoint_rows),
            division_violations: before.delta().division_violations,
            seed: args.seed,
            checked: args.check,
        },
        args.json,
    );
    Ok(())
}

fn verify_adjugate<R>(a: &Matrix<R>, adjugate: &Matrix<R>, det: &R::Elem) -> RunResult<()>
where
    R: Ring,
{
    let oracle = adjugate_oracle(a);
    if *adjugate != oracle {
        return Err(Failure::Mismatch(
            "adjugate differs from the signed-minor oracle".to_string(),
        ));
    }
    let det_i = Matrix::identity(a.ring().clone(), a.rows()).scale(det);
    if a.mul(adjugate) != det_i || adjugate.mul(a) != det_i {
        return Err(Failure::Mismatch(
            "adjugate identity a*adj = det*I does not hold".to_string(),
        ));
    }
    Ok(())
}

#[derive(Serialize)]
struct SeriesReport {
    n: usize,
    mode: &'static str,
    trunc: usize,
    inverse: Vec<Vec<String>>,
    division_violations: u64,
    seed: u64,
    checked: bool,
}

fn run_inverse_series(args: &SeriesArgs) -> RunResult<()> {
    let field = parse_field(&args.field)?;
    let FieldSpec::Gf(p) = field else {
        return Err(Failure::Input(
            "inverse-series requires a prime field (--field gf:<p>)".to_string(),
        ));
    };
    let mode = match args.mode.as_deref() {
        None | Some("division-free") => Mode::DivisionFree,
        Some("oracle") => Mode::Oracle,
        Some(other) => {
            return Err(Failure::Input(format!(
                "unknown mode {other:?} for inverse-series; expected division-free or oracle"
            )))
        }
    };
    if args.check && mode == Mode::Oracle {
        return Err(Failure::Input(
            "--check compares against the oracle; oracle mode already is the oracle".to_string(),
        ));
    }
    let parsed = load(&args.input)?;
    let ring = SeriesRing::new(PrimeField::new(p), args.trunc);
    let a = io::to_series_matrix(&parsed, &ring).map_err(Failure::Input)?;
    let before = counters::snapshot();
    let stats_before = counters::series_mul_stats();
    let inverse = match mode {
        Mode::DivisionFree => invert_series_matrix(&a).map_err(Failure::Math)?,
        Mode::Oracle => newton_inverse_oracle(&a).map_err(Failure::Math)?,
        Mode::Krylov => unreachable!(),
    };
    // diagnostics on stderr; stdout stays byte-deterministic
    let stats = stats_before.delta();
    if stats.products > 0 {
        eprintln!(
            "series products: {} (mean operand degrees {:.2} x {:.2}, max {} x {})",
            stats.products,
            stats.sum_small_degree as f64 / stats.products as f64,
            stats.sum_large_degree as f64 / stats.products as f64,
            stats.max_small_degree,
            stats.max_large_degree,
        );
    }
    if args.check {
        let oracle = newton_inverse_oracle(&a).map_err(Failure::Math)?;
        if inverse != oracle {
            return Err(Failure::Mismatch(
                "series inverse differs from the Newton oracle".to_string(),
            ));
        }
        if a.mul(&inverse) != Matrix::identity(ring.clone(), parsed.n) {
            return Err(Failure::Mismatch(
                "series inverse does not multiply back to the identity".to_string(),
            ));
        }
    }
    let report = SeriesReport {
        n: parsed.n,
        mode: mode.name(),
        trunc: args.trunc,
        inverse: io::format_series_matrix(&inverse),
        division_violations: before.delta().division_violations,
        seed: args.seed,
        checked: args.check,
    };
    if args.json {
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        println!("n = {}", report.n);
        println!("mode = {}", report.mode);
        println!("trunc = {}", report.trunc);
        println!("inverse:");
        for row in &report.inverse {
            println!("{}", row.join(" "));
        }
        println!("division_violations = {}", report.division_violations);
        println!("seed = {} (rng {RNG_NAME})", report.seed);
        println!("checked = {}", report.checked);
    }
    Ok(())
}

fn run_selftest(seed: u64) -> ExitCode {
    println!("selftest seed = {seed} (rng {RNG_NAME})");
    let outcomes = detkit::selftest::run_all(seed);
    let mut failed = 0;
    for outcome in &outcomes {
        let tag = if outcome.passed { "ok  " } else { "FAIL" };
        println!("{tag} {} - {}", outcome.name, outcome.detail);
        if !outcome.passed {
            failed += 1;
        }
    }
    if failed == 0 {
        println!("all {} checks passed", outcomes.len());
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} checks failed", outcomes.len());
        ExitCode::from(4)
    }
}

fn run_bench(args: &BenchArgs) -> RunResult<()> {
    let FieldSpec::Gf(p) = parse_field(&args.field)? else {
        return Err(Failure::Input(
            "bench runs over a prime field (--field gf:<p>)".to_string(),
        ));
    };
    let field = PrimeField::new(p);
    let sizes: Vec<usize> = args
        .sizes
        .split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Failure::Input(format!("invalid size {s:?}")))
        })
        .collect::<RunResult<_>>()?;
    let mut rng = detkit::sample::seeded_rng(args.seed);
    println!("bench field = gf:{p}, seed = {}, rng {RNG_NAME}", args.seed);
    for n in sizes {
        let a = detkit::sample::gf_matrix(&field, n, &mut rng);
        let forward_start = Instant::now();
        let trace = det_forward_randomized(&a, args.seed).map_err(Failure::Math)?;
        let forward_time = forward_start.elapsed();
        let reverse_start = Instant::now();
        let (_, reverse_muls) = gradient_from_trace(&trace).map_err(Failure::Math)?;
        let reverse_time = reverse_start.elapsed();
        let fm = trace.stage_muls;
        let tape = trace.tape.len() as u64;
        println!(
            "n={n} r={} s={} tape={tape}",
            trace.params.baby_steps, trace.params.giant_steps
        );
        println!(
            "  forward muls: step1={} step2={} step3={} step4={} step5={} total={}",
            fm[0],
            fm[1],
            fm[2],
            fm[3],
            fm[4],
            fm.iter().sum::<u64>()
        );
        println!(
            "  reverse muls: step5={} step4={} step3={} step2={} step1={} total={}",
            reverse_muls[0],
            reverse_muls[1],
            reverse_muls[2],
            reverse_muls[3],
            reverse_muls[4],
            reverse_muls.iter().sum::<u64>()
        );
        println!(
            "  step-2 reversal: {} muls = {:.2} x n^3 x tape",
            reverse_muls[3],
            reverse_muls[3] as f64 / ((n as f64).powi(3) * tape as f64)
        );
        // timings go to stderr so stdout stays byte-deterministic
        eprintln!(
            "n={n}: forward {:.3} ms, reverse {:.3} ms",
            forward_time.as_secs_f64() * 1e3,
            reverse_time.as_secs_f64() * 1e3
        );
    }
    Ok(())
}
