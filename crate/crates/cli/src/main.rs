use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use syncstr::codes::{greedy_code, GreedyParams};
use syncstr::format::{encode_codebook, parse_codebook};
use syncstr::lll::SamplerConfig;
use syncstr::verifier::{verify_sync_circle_with, verify_sync_string_with};
use syncstr::{
    audit_code, construct_deterministic_with, construct_lll, construct_two_level_with, Artifact,
    DeterministicOptions, Epsilon, Error, Kind, Rational, SyncString, TwoLevelOptions,
    VerificationReport, VerifyOptions,
};

const EXIT_VIOLATION: u8 = 1;
const EXIT_PARAMS: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "syncstr", version, about = "Build and verify synchronization strings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a string and write it as an artifact.
    Gen(GenArgs),
    /// Check an artifact against the synchronization property.
    Verify(VerifyArgs),
    /// Write a greedy codebook.
    Code(CodeArgs),
    /// Measure distances of a codebook.
    Audit(AuditArgs),
    /// Time constructions over several lengths.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Lll,
    Det,
    TwoLevel,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    String,
    Circle,
}

#[derive(clap::Args)]
struct SamplerArgs {
    /// Sampler seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Alphabet constant (integer, a/b or decimal).
    #[arg(long, default_value = "24", value_parser = parse_constant)]
    c1: Rational,
    /// Window constant.
    #[arg(long, default_value = "4", value_parser = parse_constant)]
    c2: Rational,
    /// Resample cap; defaults to 10 n.
    #[arg(long)]
    max_resamples: Option<usize>,
    /// Block circle by exhaustive search (block length at most 6).
    #[arg(long)]
    exhaustive_circle: bool,
    /// Fixed block length for the deterministic method.
    #[arg(long)]
    block_length: Option<usize>,
}

#[derive(clap::Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    method: Method,
    #[arg(long)]
    n: usize,
    /// Rational `num/den` in (0, 1).
    #[arg(long, value_parser = parse_epsilon)]
    epsilon: Epsilon,
    #[command(flatten)]
    sampler: SamplerArgs,
    /// Artifact path; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Where to write the plan of a deterministic construction.
    #[arg(long)]
    plan_out: Option<PathBuf>,
    /// Verify the result before writing it.
    #[arg(long)]
    certify: bool,
}

#[derive(clap::Args)]
struct VerifyArgs {
    input: PathBuf,
    /// Defaults to the artifact's own epsilon.
    #[arg(long, value_parser = parse_epsilon)]
    epsilon: Option<Epsilon>,
    /// Defaults to the artifact's kind.
    #[arg(long, value_enum)]
    mode: Option<Mode>,
    /// Lift the length guard on the quartic check.
    #[arg(long)]
    no_size_limit: bool,
}

#[derive(clap::Args)]
struct CodeArgs {
    #[arg(long)]
    block_length: usize,
    /// Relative parameter `num/den`; sets alphabet, distance and count.
    #[arg(long, value_parser = parse_epsilon, conflicts_with_all = ["distance", "alphabet", "count"])]
    relative: Option<Epsilon>,
    #[arg(long, required_unless_present = "relative")]
    distance: Option<usize>,
    #[arg(long, required_unless_present = "relative")]
    alphabet: Option<u64>,
    #[arg(long, required_unless_present = "relative")]
    count: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct AuditArgs {
    input: PathBuf,
    /// Also check every codeword as a circle at this epsilon.
    #[arg(long, value_parser = parse_epsilon)]
    circle_epsilon: Option<Epsilon>,
}

#[derive(clap::Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    method: Method,
    #[arg(long, value_parser = parse_epsilon)]
    epsilon: Epsilon,
    /// Comma-separated lengths.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    n: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    reps: usize,
    #[command(flatten)]
    sampler: SamplerArgs,
}

fn parse_epsilon(s: &str) -> Result<Epsilon, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_constant(s: &str) -> Result<Rational, String> {
    SamplerConfig::parse_constant(s).map_err(|e| e.to_string())
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) | Error::Format { .. } => EXIT_IO,
            Error::NotSynchronizing { .. } => EXIT_VIOLATION,
            _ => EXIT_PARAMS,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_IO,
        message: format!("{}: {e}", path.display()),
    }
}

fn params(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_PARAMS,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(f) = configure_threads() {
        eprintln!("error: {}", f.message);
        return ExitCode::from(f.code);
    }
    let result = match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Code(args) => cmd_code(args),
        Command::Audit(args) => cmd_audit(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("SYNCSTR_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| params(format!("SYNCSTR_THREADS must be a number, got {raw:?}")))?;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| params(e.to_string()))?;
    }
    Ok(())
}

struct Built {
    string: SyncString,
    kind: Kind,
    summary: String,
    plan: Option<String>,
}

fn build(method: Method, n: usize, epsilon: Epsilon, s: &SamplerArgs) -> Result<Built, Failure> {
    match method {
        Method::Lll => {
            let cfg = SamplerConfig {
                c1: s.c1,
                c2: s.c2,
                seed: s.seed,
                max_resamples: s.max_resamples.unwrap_or(10 * n),
                ..SamplerConfig::new(n, epsilon)
            };
            let out = construct_lll(&cfg)?;
            let summary = format!(
                "method=lll n={n} epsilon={epsilon} seed={} alphabet={} window={} resamples={}",
                s.seed,
                out.string.alphabet_size(),
                cfg.window(),
                out.resamples
            );
            Ok(Built {
                string: out.string,
                kind: Kind::String,
                summary,
                plan: None,
            })
        }
        Method::Det => {
            let opts = DeterministicOptions {
                exhaustive_circle: s.exhaustive_circle,
                block_length: s.block_length,
            };
            let out = construct_deterministic_with(n, epsilon, &opts)?;
            Ok(synthesized(out))
        }
        Method::TwoLevel => {
            let out = construct_two_level_with(n, epsilon, &TwoLevelOptions::default())?;
            Ok(synthesized(out))
        }
    }
}

fn synthesized(out: syncstr::Synthesis) -> Built {
    let plan = out.plan.to_kv();
    let summary = format!(
        "{plan}circle_alphabet={}\nalphabet={}",
        out.circle.alphabet_size(),
        out.string.alphabet_size()
    );
    Built {
        string: out.string,
        kind: Kind::Circle,
        summary,
        plan: Some(plan),
    }
}

fn check(string: &SyncString, epsilon: Epsilon, mode: Mode, opts: &VerifyOptions) -> Result<VerificationReport, Failure> {
    let s = SyncString::new(string.seq().clone(), epsilon)?;
    Ok(match mode {
        Mode::String => verify_sync_string_with(&s, opts)?,
        Mode::Circle => verify_sync_circle_with(&s, opts)?,
    })
}

fn print_report(report: &VerificationReport) {
    match report.witness() {
        None => println!("ok"),
        Some(w) => {
            println!("violation");
            println!("witness {} {} {}", w.i, w.j, w.k);
            if let Some(r) = w.rotation {
                println!("rotation {r}");
            }
            println!("edit_distance {}", w.edit_distance);
            println!("threshold {}", w.threshold);
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| io_failure(path, e))
}

fn cmd_gen(args: GenArgs) -> Result<u8, Failure> {
    let built = build(args.method, args.n, args.epsilon, &args.sampler)?;
    if args.certify {
        let mode = match built.kind {
            Kind::String => Mode::String,
            Kind::Circle => Mode::Circle,
        };
        let report = check(&built.string, args.epsilon, mode, &VerifyOptions::default())?;
        if !report.ok() {
            print_report(&report);
            return Ok(EXIT_VIOLATION);
        }
    }
    let artifact = Artifact::new(built.string, built.kind).encode();
    match &args.output {
        Some(path) => {
            write_file(path, &artifact)?;
            eprintln!("{}", built.summary);
        }
        None => {
            print!("{artifact}");
            eprintln!("{}", built.summary);
        }
    }
    if let Some(path) = &args.plan_out {
        let plan = built
            .plan
            .ok_or_else(|| params("--plan-out applies to det and two-level only"))?;
        write_file(path, &plan)?;
    }
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Failure> {
    let text = fs::read_to_string(&args.input).map_err(|e| io_failure(&args.input, e))?;
    let artifact = Artifact::parse(&text)?;
    let epsilon = args.epsilon.unwrap_or(artifact.string.epsilon());
    let mode = args.mode.unwrap_or(match artifact.kind {
        Kind::String => Mode::String,
        Kind::Circle => Mode::Circle,
    });
    let opts = if args.no_size_limit {
        VerifyOptions::unlimited()
    } else {
        VerifyOptions::default()
    };
    let report = check(&artifact.string, epsilon, mode, &opts)?;
    print_report(&report);
    Ok(if report.ok() { 0 } else { EXIT_VIOLATION })
}

fn cmd_code(args: CodeArgs) -> Result<u8, Failure> {
    let code = match args.relative {
        Some(eps) => GreedyParams::from_relative(eps.ratio(), args.block_length)?.build()?,
        None => greedy_code(
            args.block_length,
            args.distance.expect("required by clap"),
            args.alphabet.expect("required by clap"),
            args.count.expect("required by clap"),
        )?,
    };
    let text = encode_codebook(&code);
    match &args.output {
        Some(path) => write_file(path, &text)?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn cmd_audit(args: AuditArgs) -> Result<u8, Failure> {
    let text = fs::read_to_string(&args.input).map_err(|e| io_failure(&args.input, e))?;
    let code = parse_codebook(&text)?;
    let audit = audit_code(&code, args.circle_epsilon);
    let show = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
    println!("codewords {}", audit.codewords);
    println!("block_length {}", audit.block_length);
    println!("design_distance {}", code.design_distance());
    println!("min_hamming_distance {}", show(audit.min_hamming_distance));
    println!("max_pairwise_lcs {}", show(audit.max_pairwise_lcs));
    if let Some(all) = audit.all_circles {
        println!("all_circles {all}");
    }
    let distance_ok = audit
        .min_hamming_distance
        .map_or(true, |d| d >= code.design_distance());
    let circles_ok = audit.all_circles.unwrap_or(true);
    Ok(if distance_ok && circles_ok { 0 } else { EXIT_VIOLATION })
}

fn cmd_bench(args: BenchArgs) -> Result<u8, Failure> {
    if args.n.is_empty() {
        return Err(params("at least one length is required"));
    }
    if args.reps == 0 {
        return Err(params("reps must be positive"));
    }
    println!("n\treps\tmedian_seconds");
    for &n in &args.n {
        let mut samples: Vec<Duration> = Vec::with_capacity(args.reps);
        for _ in 0..args.reps {
            let start = Instant::now();
            match args.method {
                Method::TwoLevel => {
                    let opts = TwoLevelOptions {
                        certify_level_zero: false,
                    };
                    construct_two_level_with(n, args.epsilon, &opts)?;
                }
                method => {
                    build(method, n, args.epsilon, &args.sampler)?;
                }
            }
            samples.push(start.elapsed());
        }
        samples.sort_unstable();
        let median = samples[samples.len() / 2];
        println!("{n}\t{}\t{:.6}", args.reps, median.as_secs_f64());
    }
    Ok(0)
}
