//! Command-line front end for the `pwt-core` solvers: solve single instances,
//! run benchmark manifests into CSV tables, generate instances and build
//! subset-sum reductions.

pub mod error;
pub mod manifest;
pub mod record;

use std::ffi::OsString;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use pwt_core::hardness::{
    reduce_capacitated, reduce_unconstrained, reduce_unconstrained_literal, BenefitCurve,
    SspInstance,
};
use pwt_core::io::{
    generate, parse_instance_with, parse_route, write_instance, Assignment, Family, GeneratorSpec,
    TtpOptions, ValueRange,
};
use pwt_core::{FptasError, Instance};

pub use error::CliError;
use manifest::{parse_range, Manifest};
use record::{run_algorithm, write_csv, Algo, RunRecord};

#[derive(Debug, Parser)]
#[command(
    name = "pwt",
    version,
    about = "Packing-while-traveling solvers and benchmark harness"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve one instance and print the selection.
    Solve(SolveArgs),
    /// Run every algorithm of a manifest on every instance and emit CSV.
    Bench(BenchArgs),
    /// Write generated instances in the native format.
    Generate(GenerateArgs),
    /// Build the instance reduced from a subset-sum instance.
    ReduceSsp(ReduceArgs),
    /// Print the benefit-by-weight curve `w,f(w)` of a reduced instance.
    Fcurve(CurveArgs),
}

#[derive(Debug, Args)]
struct SolveArgs {
    /// Instance file, TTP or native format.
    #[arg(long)]
    instance: PathBuf,
    /// dp, fptas or brute.
    #[arg(long, default_value = "dp")]
    algo: String,
    /// Accuracy for fptas, in (0, 1].
    #[arg(long)]
    eps: Option<f64>,
    /// TTP route: a permutation of the node numbers starting with 1.
    #[arg(long)]
    route: Option<PathBuf>,
    /// Read TTP files as an open path ending at the last route node.
    #[arg(long)]
    open_tour: bool,
    /// Append a CSV row to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// TOML manifest listing instances and algorithms.
    #[arg(long)]
    manifest: PathBuf,
    /// CSV output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    /// Write the 27-instance small-range grid (3 families x m in
    /// {100, 500, 1000} x capacity classes {1, 6, 10}) into the `--out` directory.
    #[arg(long)]
    grid: bool,
    #[arg(long, required_unless_present = "grid")]
    family: Option<Family>,
    #[arg(long, required_unless_present = "grid")]
    m: Option<usize>,
    /// Capacity class, 1..=10.
    #[arg(long = "class", required_unless_present = "grid")]
    capacity_class: Option<u32>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// small ([1, 1000]) or large ([1, 10^7]).
    #[arg(long, default_value = "small", value_parser = parse_range)]
    range: ValueRange,
    /// round-robin or sorted:<k>.
    #[arg(long, default_value = "round-robin")]
    assignment: Assignment,
    /// Number of nodes, depot included.
    #[arg(long, default_value_t = 101)]
    nodes: usize,
    #[arg(long)]
    rent: Option<f64>,
    /// Output file, or directory with `--grid`.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Variant {
    Capacitated,
    Unconstrained,
    /// The construction with v_min = sqrt(Q / (2W - Q)), which is unsound.
    UnconstrainedLiteral,
}

#[derive(Debug, Args)]
struct SspArgs {
    /// Comma-separated positive integers.
    #[arg(long, value_delimiter = ',', required = true)]
    values: Vec<u64>,
    #[arg(long)]
    target: u64,
    #[arg(long, value_enum, default_value = "capacitated")]
    variant: Variant,
}

#[derive(Debug, Args)]
struct ReduceArgs {
    #[command(flatten)]
    ssp: SspArgs,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CurveArgs {
    #[command(flatten)]
    ssp: SspArgs,
    /// Weight increment between rows.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    step: u64,
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Solve(args) => solve(args, out),
        Command::Bench(args) => bench(args, out),
        Command::Generate(args) => generate_cmd(args, out),
        Command::ReduceSsp(args) => reduce(args, out),
        Command::Fcurve(args) => fcurve(args, out),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn stdout_err(err: std::io::Error) -> CliError {
    CliError::Input(format!("stdout: {err}"))
}

fn check_epsilon(algo: Algo) -> Result<(), CliError> {
    match algo {
        Algo::Fptas(eps) if !(eps > 0.0 && eps <= 1.0) => Err(FptasError::Epsilon(eps).into()),
        _ => Ok(()),
    }
}

fn load_instance(args: &SolveArgs) -> Result<Instance, CliError> {
    let route = match &args.route {
        Some(path) => Some(parse_route(&read(path)?)?),
        None => None,
    };
    let options = TtpOptions {
        route,
        closed_tour: !args.open_tour,
    };
    parse_instance_with(&read(&args.instance)?, &options)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.instance.display())))
}

fn solve(args: SolveArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let algo = Algo::from_parts(&args.algo, args.eps)?;
    check_epsilon(algo)?;
    let instance = load_instance(&args)?;
    let run = run_algorithm(&instance, algo)?;
    let eval = run.solution.evaluation;
    let ids: Vec<String> = run
        .solution
        .selection
        .item_ids(&instance)
        .iter()
        .map(|id| (id + 1).to_string())
        .collect();
    writeln!(
        out,
        "instance: {}\nalgorithm: {algo}\nB: {:.10}\nB': {:.10}\nitems: {}\nseconds: {:.6}",
        instance.name(),
        eval.benefit,
        eval.gain,
        ids.join(" "),
        run.seconds
    )
    .map_err(stdout_err)?;

    if let Some(path) = &args.out {
        let record = RunRecord::new(&instance, algo, &run, None);
        let fresh = fs::metadata(path).map(|m| m.len() == 0).unwrap_or(true);
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(|e| CliError::io(path, e))?;
        write_csv(file, fresh, &[record])?;
    }
    Ok(())
}

/// One row per (instance, algorithm), instances outer. The dp run of each
/// instance is the reference for both approximation rates.
pub fn bench_records(instances: &[Instance], algos: &[Algo]) -> Result<Vec<RunRecord>, CliError> {
    let mut records = Vec::with_capacity(instances.len() * algos.len());
    for instance in instances {
        let reference = run_algorithm(instance, Algo::Dp)?;
        let eval = reference.solution.evaluation;
        let opt = Some((eval.benefit, eval.gain));
        for &algo in algos {
            let record = if algo == Algo::Dp {
                RunRecord::new(instance, algo, &reference, opt)
            } else {
                RunRecord::new(instance, algo, &run_algorithm(instance, algo)?, opt)
            };
            records.push(record);
        }
    }
    Ok(records)
}

fn bench(args: BenchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (manifest, base) = Manifest::load(&args.manifest)?;
    let algos = manifest.algorithms()?;
    for &algo in &algos {
        check_epsilon(algo).map_err(|e| CliError::Input(format!("manifest: {e}")))?;
    }
    let instances = manifest.instances(&base)?;
    let records = bench_records(&instances, &algos)?;
    match &args.out {
        Some(path) => {
            let file = fs::File::create(path).map_err(|e| CliError::io(path, e))?;
            write_csv(file, true, &records)
        }
        None => write_csv(out, true, &records),
    }
}

/// The family x m x capacity-class grid of the small-range benchmark set.
pub fn small_grid(seed: u64) -> Vec<GeneratorSpec> {
    let families = [
        Family::Uncorrelated,
        Family::UncorrelatedSimilarWeights,
        Family::BoundedStronglyCorrelated,
    ];
    let mut specs = Vec::with_capacity(27);
    for family in families {
        for m in [100, 500, 1000] {
            for class in [1, 6, 10] {
                specs.push(GeneratorSpec::new(family, m, class, seed));
            }
        }
    }
    specs
}

fn generate_cmd(args: GenerateArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.grid {
        fs::create_dir_all(&args.out).map_err(|e| CliError::io(&args.out, e))?;
        for spec in small_grid(args.seed) {
            let path = args.out.join(format!("{}.pwt", spec.name()));
            write_file(&path, &write_instance(&generate(&spec)?))?;
            writeln!(out, "{}", path.display()).map_err(stdout_err)?;
        }
        return Ok(());
    }
    let (Some(family), Some(m), Some(capacity_class)) = (args.family, args.m, args.capacity_class)
    else {
        return Err(CliError::Usage(
            "--family, --m and --class are required".into(),
        ));
    };
    let spec = GeneratorSpec {
        range: args.range,
        assignment: args.assignment,
        nodes: args.nodes,
        rent: args.rent,
        ..GeneratorSpec::new(family, m, capacity_class, args.seed)
    };
    write_file(&args.out, &write_instance(&generate(&spec)?))?;
    writeln!(out, "{}", args.out.display()).map_err(stdout_err)
}

/// The reduced instance and, when known, the weight where its curve peaks at 0.
fn reduced(args: &SspArgs) -> Result<(Instance, Option<u64>), CliError> {
    let ssp = SspInstance::new(args.values.clone(), args.target)?;
    Ok(match args.variant {
        Variant::Capacitated => {
            let r = reduce_capacitated(&ssp)?;
            (r.instance, Some(r.peak))
        }
        Variant::Unconstrained => {
            let r = reduce_unconstrained(&ssp)?;
            (r.instance, Some(r.peak))
        }
        Variant::UnconstrainedLiteral => (reduce_unconstrained_literal(&ssp)?, None),
    })
}

fn reduce(args: ReduceArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (instance, peak) = reduced(&args.ssp)?;
    let text = write_instance(&instance);
    match &args.out {
        Some(path) => {
            write_file(path, &text)?;
            let peak = peak.map_or_else(|| "unknown".to_string(), |p| p.to_string());
            writeln!(out, "{} (peak weight {peak})", path.display()).map_err(stdout_err)
        }
        None => out.write_all(text.as_bytes()).map_err(stdout_err),
    }
}

fn fcurve(args: CurveArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (instance, _) = reduced(&args.ssp)?;
    let curve = BenefitCurve::of(&instance);
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(["w", "f(w)"])?;
    let mut w = 0;
    while w <= curve.capacity {
        let f = curve.value(w as f64)?;
        writer.write_record([w.to_string(), format!("{f:.10}")])?;
        w += args.step;
    }
    writer.flush().map_err(stdout_err)
}
