//! `matkernel`: generate instances, compute kernels, verify and solve them, and
//! benchmark the kernel algorithms.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use matkernel::generate::{generate, GenParams, InstanceKind};
use matkernel::io::{instance_digest, instance_to_bytes, parse_instance, KernelFile};
use matkernel::verify::{estimate_success_rate, opt_value, Budget, Verifier};
use matkernel::{kernelize_with, Algorithm, DispatchOptions, Error, Instance, KernelConfig};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(
    name = "matkernel",
    version,
    about = "Reachable kernels for matroid intersection and matroid-constrained matching"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a random instance.
    Gen(GenArgs),
    /// Compute a kernel and write it as a kernel file.
    Kernelize(KernelizeArgs),
    /// Check a kernel file exhaustively against its instance.
    Verify(VerifyArgs),
    /// Print the optimum value and one optimal set.
    Solve(SolveArgs),
    /// Time and verify algorithms on instances, one CSV row per pair.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Largest ground set the exhaustive checks accept.
    #[arg(long, default_value_t = Budget::default().max_elements)]
    max_elements: usize,
    /// Largest k the exhaustive checks accept.
    #[arg(long, default_value_t = Budget::default().max_k)]
    max_k: usize,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            max_elements: self.max_elements,
            max_k: self.max_k,
        }
    }
}

#[derive(Args, Debug)]
struct GenArgs {
    /// partition, coverable-graphic, coverable-cographic, transversal, laminar, matching or rainbow.
    #[arg(long)]
    kind: InstanceKind,
    #[arg(long, default_value_t = GenParams::default().n)]
    n: usize,
    #[arg(long, default_value_t = GenParams::default().d)]
    d: usize,
    #[arg(long, default_value_t = GenParams::default().k)]
    k: usize,
    #[arg(long, default_value_t = GenParams::default().max_weight)]
    max_weight: u64,
    #[arg(long, env = "MATKERNEL_SEED", default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct KernelizeArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(long)]
    alg: Algorithm,
    /// Overrides the instance's k.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, env = "MATKERNEL_SEED", default_value_t = 0)]
    seed: u64,
    /// Rounds per repetition instead of the default T.
    #[arg(long)]
    rounds: Option<usize>,
    /// Independent repetitions whose kernels are merged.
    #[arg(long, default_value_t = 1)]
    repeat: usize,
    /// Coverability bound used instead of the class default.
    #[arg(long)]
    g: Option<usize>,
    /// Output file; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(short, long)]
    input: PathBuf,
    /// Kernel file produced by `kernelize`.
    #[arg(long)]
    kernel: PathBuf,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(short, long)]
    input: PathBuf,
    /// Restrict the search to the elements of this kernel file.
    #[arg(long)]
    kernel: Option<PathBuf>,
    #[arg(long)]
    k: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Instance files.
    #[arg(short, long = "input", required = true, num_args = 1..)]
    inputs: Vec<PathBuf>,
    /// Comma-separated algorithms.
    #[arg(long, value_delimiter = ',', required = true)]
    alg: Vec<Algorithm>,
    /// Seeded runs per row used for the success fraction.
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, env = "MATKERNEL_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    rounds: Option<usize>,
    #[arg(long, default_value_t = 1)]
    repeat: usize,
    #[command(flatten)]
    budget: BudgetArgs,
    /// Output file; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn emit(bytes: &[u8], output: Option<&Path>) -> anyhow::Result<()> {
    match output {
        Some(path) => std::fs::write(path, bytes).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()?;
            Ok(())
        }
    }
}

fn pretty(value: &impl serde::Serialize) -> anyhow::Result<Vec<u8>> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    Ok(bytes)
}

/// Parses an instance and warns about elements that normalization will drop.
fn load(path: &Path) -> anyhow::Result<Instance> {
    let instance = parse_instance(path)?;
    let (_, report) = instance.normalize()?;
    if !report.is_identity() {
        eprintln!(
            "warning: {}: loops removed from consideration: {:?}",
            path.display(),
            report.dropped
        );
    }
    Ok(instance)
}

fn with_k(mut instance: Instance, k: Option<usize>) -> anyhow::Result<Instance> {
    if let Some(k) = k {
        if k == 0 {
            bail!(Error::InvalidParameter("k must be at least 1".into()));
        }
        instance.k = k;
    }
    Ok(instance)
}

fn cmd_gen(args: &GenArgs) -> anyhow::Result<()> {
    let params = GenParams {
        n: args.n,
        d: args.d,
        k: args.k,
        max_weight: args.max_weight,
    };
    let instance = generate(args.kind, &params, args.seed)?;
    emit(&instance_to_bytes(&instance), args.output.as_deref())
}

fn cmd_kernelize(args: &KernelizeArgs) -> anyhow::Result<()> {
    let instance = load(&args.input)?;
    let digest = instance_digest(&instance);
    let k = args.k.unwrap_or(instance.k);
    let mut config = KernelConfig::new(k, args.seed).with_repeat(args.repeat);
    config.rounds = args.rounds;
    let options = DispatchOptions {
        g_override: args.g,
        ..Default::default()
    };
    let kernel = kernelize_with(&instance, args.alg, &config, &options)?;
    emit(&KernelFile::new(&kernel, digest).to_bytes(), args.output.as_deref())
}

fn cmd_verify(args: &VerifyArgs) -> anyhow::Result<()> {
    let instance = load(&args.input)?;
    let file = KernelFile::read(&args.kernel)?;
    file.check_against(&instance)?;
    let instance = with_k(instance, Some(file.k))?;
    let report = Verifier::new(&instance, &args.budget.budget())?.report(&file.elements);
    emit(&pretty(&report)?, None)
}

fn cmd_solve(args: &SolveArgs) -> anyhow::Result<()> {
    let instance = load(&args.input)?;
    let domain = match &args.kernel {
        Some(path) => {
            let file = KernelFile::read(path)?;
            file.check_against(&instance)?;
            file.elements
        }
        None => (0..instance.universe()).collect(),
    };
    let instance = with_k(instance, args.k)?;
    let (opt, set) = opt_value(&instance, &domain, instance.k, &args.budget.budget())?;
    emit(&pretty(&json!({ "opt": opt, "set": set }))?, None)
}

/// One CSV row. Combinations the algorithm cannot run on keep the instance,
/// algorithm and k and leave the measured columns empty; the success fraction
/// is empty when the instance exceeds the verification budget.
fn bench_row(args: &BenchArgs, name: &str, instance: &Instance, alg: Algorithm) -> anyhow::Result<Vec<String>> {
    let mut config = KernelConfig::new(instance.k, args.seed).with_repeat(args.repeat);
    config.rounds = args.rounds;
    let options = DispatchOptions::default();
    let mut row = vec![name.to_string(), alg.to_string(), instance.k.to_string()];
    let start = Instant::now();
    let kernel = match kernelize_with(instance, alg, &config, &options) {
        Ok(kernel) => kernel,
        Err(Error::ClassMismatch(_)) => {
            row.extend([String::new(), String::new(), String::new(), String::new()]);
            return Ok(row);
        }
        Err(e) => return Err(e).with_context(|| format!("{name}: {alg}")),
    };
    let wall = start.elapsed();
    row.extend([
        kernel.rounds.to_string(),
        kernel.len().to_string(),
        format!("{:.3}", wall.as_secs_f64() * 1e3),
    ]);
    let run = |seed: u64| {
        let mut config = config.clone();
        config.seed = seed;
        kernelize_with(instance, alg, &config, &options).map(|k| k.elements)
    };
    match estimate_success_rate(instance, args.trials, args.seed, &args.budget.budget(), run) {
        Ok(estimate) => row.push(format!("{:.4}", estimate.fraction())),
        Err(e) if e.is_budget() => row.push(String::new()),
        Err(e) => return Err(e).with_context(|| format!("{name}: {alg}")),
    }
    Ok(row)
}

fn cmd_bench(args: &BenchArgs) -> anyhow::Result<()> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record([
        "instance",
        "algorithm",
        "k",
        "rounds",
        "kernel_size",
        "wall_ms",
        "success_fraction",
    ])?;
    for path in &args.inputs {
        let instance = load(path)?;
        let name = path
            .file_name()
            .map_or_else(|| path.display().to_string(), |f| f.to_string_lossy().into_owned());
        for &alg in &args.alg {
            writer.write_record(bench_row(args, &name, &instance, alg)?)?;
        }
    }
    emit(&writer.into_inner()?, args.output.as_deref())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match &cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Kernelize(args) => cmd_kernelize(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Bench(args) => cmd_bench(args),
    }
}

fn one_line(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            eprintln!("{}", one_line(text.lines().next().unwrap_or("invalid arguments")));
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", one_line(&format!("{e:#}")));
            let budget = e
                .chain()
                .any(|c| c.downcast_ref::<Error>().is_some_and(Error::is_budget));
            ExitCode::from(if budget { 2 } else { 1 })
        }
    }
}
