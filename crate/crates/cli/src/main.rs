use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use scrambling::channels::{haar_scrambled_baseline, PartitionSpec};
use scrambling::models::{HamiltonianKind, HamiltonianSpec};
use scrambling::sdp::SolverOptions;
use scrambling_cli::output::{
    clifford_plot, fmt_sig, scan_csv_string, scan_plot, write_clifford_csv, write_file,
};
use scrambling_cli::{
    backflow_integral, run_clifford_scan, run_scan, size_sweep, verify, CliError, ExperimentConfig, ModelFamily,
    ModelSpec, Quantity, Result, SweepOptions, TimeGrid, VerifyOptions, DEFAULT_SIZES,
};

#[derive(Parser)]
#[command(name = "scrambling", version, about = "Tripartite mutual information and temporal-steering scrambling witnesses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Time scan of both witnesses; one CSV row per grid point.
    Scan(ScanArgs),
    /// Angle scan of the three-qubit Clifford circuit.
    Clifford(CliffordArgs),
    /// Information backflow of a scan up to `--tmax`.
    Backflow(BackflowArgs),
    /// Backflow table over system sizes.
    Sweep(SweepArgs),
    /// Run the invariant suite; nonzero exit on any failure.
    Verify(VerifyArgs),
    /// Monte-Carlo average of -I3 over Haar-random unitaries.
    HaarBaseline(BaselineArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Ising,
    Syk,
    Clifford,
    CustomUnitaryFile,
}

#[derive(Args, Clone)]
struct ScanArgs {
    /// JSON experiment file; flags given on the command line override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, value_enum)]
    model: Option<ModelArg>,
    /// Matrix file for `--model custom-unitary-file`.
    #[arg(long)]
    unitary: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    g: Option<f64>,
    #[arg(long)]
    h: Option<f64>,
    #[arg(long = "J")]
    j: Option<f64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Size of region C; C = {q1..q_nc}.
    #[arg(long)]
    nc: Option<usize>,
    #[arg(long)]
    tmax: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
    /// Pauli axes measured on q1.
    #[arg(long)]
    axes: Option<String>,
    #[arg(long)]
    sdp_tol: Option<f64>,
    /// Only the Choi-state columns.
    #[arg(long)]
    no_steering: bool,
    /// CSV destination; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write an SVG plot next to the CSV.
    #[arg(long)]
    svg: bool,
}

impl ScanArgs {
    fn config(&self) -> Result<ExperimentConfig> {
        let mut cfg = match &self.config {
            Some(path) => ExperimentConfig::load(path)?,
            None => {
                let n = self.n.unwrap_or(7);
                let model = ModelSpec::Hamiltonian(HamiltonianSpec::ising(n, 1.0, 0.5));
                ExperimentConfig::new(model, PartitionSpec::contiguous(n, (n / 2).max(1))?)
            }
        };
        let mut n = self.n.unwrap_or_else(|| cfg.partition.n_qubits());
        let mut base = match &cfg.model {
            ModelSpec::Hamiltonian(h) => h.clone(),
            _ => HamiltonianSpec::ising(n, 1.0, 0.5),
        };
        if let Some(m) = self.model {
            cfg.model = match m {
                ModelArg::Ising => {
                    base.kind = HamiltonianKind::IsingChain;
                    ModelSpec::Hamiltonian(base.clone())
                }
                ModelArg::Syk => {
                    base.kind = HamiltonianKind::Syk;
                    ModelSpec::Hamiltonian(base.clone())
                }
                ModelArg::Clifford => ModelSpec::Clifford,
                ModelArg::CustomUnitaryFile => ModelSpec::CustomUnitary {
                    path: self
                        .unitary
                        .clone()
                        .ok_or_else(|| CliError::Config("--model custom-unitary-file needs --unitary <path>".into()))?,
                },
            };
        }
        if matches!(cfg.model, ModelSpec::Clifford) {
            n = 3;
        }
        if let ModelSpec::Hamiltonian(h) = &mut cfg.model {
            h.n_qubits = n;
            h.g = self.g.unwrap_or(h.g);
            h.h = self.h.unwrap_or(h.h);
            h.j = self.j.unwrap_or(h.j);
            h.seed = self.seed.unwrap_or(h.seed);
        }
        cfg.seed = self.seed.unwrap_or(cfg.seed);
        if self.nc.is_some() || n != cfg.partition.n_qubits() {
            let nc = self.nc.unwrap_or_else(|| cfg.partition.n_c().min(n - 1));
            cfg.partition = PartitionSpec::contiguous(n, nc)?;
        }
        let model_flags = self.model.is_some() || self.g.is_some() || self.j.is_some();
        if self.config.is_none() || model_flags {
            cfg.time_grid = TimeGrid::default_for(&cfg.model);
        }
        if self.tmax.is_some() || self.points.is_some() {
            cfg.time_grid = TimeGrid::new(
                cfg.time_grid.t_start,
                self.tmax.unwrap_or(cfg.time_grid.t_end),
                self.points.unwrap_or(cfg.time_grid.n_points),
            )?;
        }
        if let Some(a) = &self.axes {
            cfg.measurements = a.clone();
        }
        cfg.sdp_tol = self.sdp_tol.unwrap_or(cfg.sdp_tol);
        cfg.steering &= !self.no_steering;
        if let Some(out) = &self.out {
            cfg.outputs.csv = Some(out.clone());
        }
        if self.svg {
            let base = cfg.outputs.csv.clone().unwrap_or_else(|| PathBuf::from("scan.csv"));
            cfg.outputs.svg = Some(base.with_extension("svg"));
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Args)]
struct CliffordArgs {
    #[arg(long, default_value_t = 25)]
    points: usize,
    #[arg(long)]
    sdp_tol: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    svg: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuantityArg {
    I3,
    T3,
    Both,
}

#[derive(Args)]
struct BackflowArgs {
    #[command(flatten)]
    scan: ScanArgs,
    #[arg(long, value_enum, default_value = "both")]
    quantity: QuantityArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Integrable,
    Chaotic,
    Syk,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum, default_value = "integrable")]
    family: FamilyArg,
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_SIZES)]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 1.0)]
    g: f64,
    #[arg(long, default_value_t = 0.5)]
    h: f64,
    #[arg(long = "J", default_value_t = 1.0)]
    j: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    points: usize,
    #[arg(long)]
    sdp_tol: Option<f64>,
    #[arg(long)]
    no_steering: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    sdp_tol: Option<f64>,
    #[arg(long, default_value_t = VerifyOptions::default().seed)]
    seed: u64,
    #[arg(long, default_value_t = VerifyOptions::default().samples)]
    samples: usize,
}

#[derive(Args)]
struct BaselineArgs {
    #[arg(long, default_value_t = 7)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    nc: usize,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => write_file(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Scan(args) => {
            let cfg = args.config()?;
            let report = run_scan(&cfg)?;
            emit(cfg.outputs.csv.as_deref(), &scan_csv_string(&report)?)?;
            if let Some(svg) = &cfg.outputs.svg {
                write_file(svg, &scan_plot(&report, "scrambling witnesses"))?;
            }
            let failed = report.failed_rows();
            if failed > 0 {
                eprintln!("{failed} rows recorded solver failures");
            }
            Ok(true)
        }
        Command::Clifford(args) => {
            if args.points == 0 {
                return Err(CliError::Config("--points must be positive".into()));
            }
            let thetas: Vec<f64> = (0..args.points)
                .map(|k| std::f64::consts::PI * k as f64 / (args.points.max(2) - 1) as f64)
                .collect();
            let solver = SolverOptions::default().with_gap_tol(args.sdp_tol.unwrap_or(SolverOptions::default().gap_tol));
            let points = run_clifford_scan(&thetas, &solver)?;
            let mut buf = Vec::new();
            write_clifford_csv(&points, &mut buf)?;
            emit(args.out.as_deref(), &String::from_utf8_lossy(&buf))?;
            if args.svg {
                let base = args.out.clone().unwrap_or_else(|| PathBuf::from("clifford.csv"));
                write_file(&base.with_extension("svg"), &clifford_plot(&points))?;
            }
            Ok(true)
        }
        Command::Backflow(args) => {
            let mut cfg = args.scan.config()?;
            if matches!(args.quantity, QuantityArg::I3) {
                cfg.steering = false;
            }
            let report = run_scan(&cfg)?;
            let quantities: &[Quantity] = match args.quantity {
                QuantityArg::I3 => &[Quantity::I3],
                QuantityArg::T3 => &[Quantity::T3],
                QuantityArg::Both => &[Quantity::I3, Quantity::T3],
            };
            println!("quantity,T,value,spacing");
            for &q in quantities {
                let b = backflow_integral(&report, q, cfg.time_grid.t_end)?;
                println!("{},{},{},{}", q, fmt_sig(b.t_end), fmt_sig(b.value), fmt_sig(b.spacing));
            }
            Ok(true)
        }
        Command::Sweep(args) => {
            let family = match args.family {
                FamilyArg::Integrable => ModelFamily::IntegrableChain { g: args.g },
                FamilyArg::Chaotic => ModelFamily::ChaoticChain { g: args.g, h: args.h },
                FamilyArg::Syk => ModelFamily::Syk { j: args.j, seed: args.seed },
            };
            let opts = SweepOptions {
                n_points: args.points,
                sdp_tol: args.sdp_tol.unwrap_or(SolverOptions::default().gap_tol),
                steering: !args.no_steering,
            };
            let rows = size_sweep(family, &args.sizes, &opts)?;
            let mut text = String::from("n,nc,T,backflowI3,backflowT3\n");
            for r in &rows {
                let t3 = r.backflow_t3.map_or_else(|| "NaN".to_string(), fmt_sig);
                text += &format!("{},{},{},{},{}\n", r.n_qubits, r.n_c, fmt_sig(r.t_end), fmt_sig(r.backflow_i3), t3);
            }
            emit(args.out.as_deref(), &text)?;
            Ok(true)
        }
        Command::Verify(args) => {
            let opts = VerifyOptions {
                sdp_tol: args.sdp_tol.unwrap_or(SolverOptions::default().gap_tol),
                seed: args.seed,
                samples: args.samples,
            };
            let report = verify(&opts);
            print!("{}", report.table());
            Ok(report.all_passed())
        }
        Command::HaarBaseline(args) => {
            let part = PartitionSpec::contiguous(args.n, args.nc)?;
            let b = haar_scrambled_baseline(args.n, &part, args.samples, args.seed)?;
            println!("mean,std_err,samples");
            println!("{},{},{}", fmt_sig(b.mean), fmt_sig(b.std_err), b.n_samples);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
