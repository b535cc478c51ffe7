//! `beamsplit` — measures, filtering, sweeps, bound curves, and filter
//! optimization for two-qubit polarization states, from the command line.
//!
//! This file only parses flags, routes to library calls, and prints; every
//! numerical result comes from the `beamsplit` crate or the sibling library
//! modules. Exit codes: 0 success, 1 I/O failure, 2 invalid input,
//! 3 vanishing post-selected ensemble, 4 no feasible constrained point,
//! 5 eigensolver convergence failure.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use beamsplit::filter::{apply_filter, oracle_filter, solve_constraints, FilterSettings};
use beamsplit::measures::{self, MeasureReport};
use beamsplit::optimize::{optimize_eof, optimize_eof_traced, Evaluation, OptimizeConfig, OptimizeMode};
use beamsplit::qlinalg::DensityMatrix4;
use beamsplit::states::{self, Family, FamilyParams, Sign};
use beamsplit_cli::format::fmt12;
use beamsplit_cli::sweep::{run_sweep, SweepAxis, SweepSpec};
use beamsplit_cli::{bounds, matrixfile, sweep};

#[derive(Parser)]
#[command(
    name = "beamsplit",
    version,
    about = "Local-filtering toolkit for two-qubit polarization states"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print entanglement and entropy measures of a state.
    Measures(MeasuresArgs),
    /// Apply per-arm polarization filters and print the post-selected report.
    Filter(FilterArgs),
    /// Sweep one parameter axis and emit CSV.
    Sweep(SweepArgs),
    /// Emit a reference bound curve in the entanglement-mixedness plane.
    Bounds(BoundsArgs),
    /// Search for the transmissions maximizing entanglement of formation.
    Optimize(OptimizeArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    BellPhi,
    BellPsi,
    TwoBell,
    Werner,
    EntSep,
    Mems,
}

impl FamilyArg {
    fn family(self) -> Family {
        match self {
            FamilyArg::BellPhi => Family::BellPhi,
            FamilyArg::BellPsi => Family::BellPsi,
            FamilyArg::TwoBell => Family::TwoBellMixture,
            FamilyArg::Werner => Family::Werner,
            FamilyArg::EntSep => Family::EntangledSeparable,
            FamilyArg::Mems => Family::MemsBound,
        }
    }
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "+" => Ok(Sign::Plus),
        "-" => Ok(Sign::Minus),
        _ => Err(format!("sign '{s}' must be + or -")),
    }
}

/// Flags selecting the input state. Exactly one source must be given:
/// `--matrix-file`, `--seed`, or `--family` (with that family's parameters).
#[derive(Args)]
struct StateArgs {
    /// State family to construct.
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    /// Mixing weight in [0, 1].
    #[arg(long)]
    gamma: Option<f64>,
    /// Angle in radians; shorthand setting both --theta1 and --theta2.
    #[arg(long, conflicts_with = "theta_deg")]
    theta: Option<f64>,
    /// Angle in degrees; shorthand setting both --theta1 and --theta2.
    #[arg(long)]
    theta_deg: Option<f64>,
    /// First component angle in radians, [0, pi/2].
    #[arg(long)]
    theta1: Option<f64>,
    /// Second component angle in radians, [0, pi/2].
    #[arg(long)]
    theta2: Option<f64>,
    /// Relative sign of the superposition.
    #[arg(long, default_value = "+", value_parser = parse_sign, allow_hyphen_values = true)]
    sign: Sign,
    /// Density-matrix file: 4 lines of 4 whitespace-separated re+imj entries.
    #[arg(long, value_name = "PATH")]
    matrix_file: Option<PathBuf>,
    /// Seed for a reproducible random density matrix.
    #[arg(long)]
    seed: Option<u64>,
    /// Rank of the seeded random state, 1-4 (default 4).
    #[arg(long)]
    rank: Option<usize>,
}

impl StateArgs {
    fn check_single_source(&self) -> Result<(), AppError> {
        let picked = [
            self.matrix_file.is_some(),
            self.seed.is_some(),
            self.family.is_some(),
        ]
        .iter()
        .filter(|b| **b)
        .count();
        if picked != 1 {
            return Err(usage(
                "exactly one state source is required: --matrix-file, --seed, or --family",
            ));
        }
        if self.rank.is_some() && self.seed.is_none() {
            return Err(usage("--rank only applies to --seed states"));
        }
        Ok(())
    }

    /// The density matrix named by the flags, whatever the source.
    fn density(&self) -> Result<DensityMatrix4, AppError> {
        self.check_single_source()?;
        if let Some(path) = &self.matrix_file {
            let text = fs::read_to_string(path)?;
            return Ok(matrixfile::parse_matrix(&text)?);
        }
        if let Some(seed) = self.seed {
            return Ok(states::random_density(seed, self.rank.unwrap_or(4))?);
        }
        Ok(self.family_params(None)?.state()?)
    }

    /// Family parameters, for commands that need the family itself
    /// (constraint solving, parameter sweeps). `exempt` marks the swept
    /// axis, whose flag may be omitted because every grid node overwrites
    /// it; the placeholder written there is never observable.
    fn family_params(&self, exempt: Option<SweepAxis>) -> Result<FamilyParams, AppError> {
        self.check_single_source()?;
        let Some(arg) = self.family else {
            return Err(usage("this operation needs a --family state"));
        };
        let family = arg.family();
        let shorthand = match self.theta_deg {
            Some(deg) => Some(deg.to_radians()),
            None => self.theta,
        };
        let theta1 = self.theta1.or(shorthand);
        let theta2 = self.theta2.or(shorthand);

        let need = |value: Option<f64>,
                    flag: &str,
                    skip: Option<SweepAxis>,
                    placeholder: f64|
         -> Result<f64, AppError> {
            if skip.is_some() && skip == exempt {
                Ok(value.unwrap_or(placeholder))
            } else {
                value.ok_or_else(|| usage(format!("--family {} needs {flag}", arg.name())))
            }
        };
        use std::f64::consts::FRAC_PI_4;
        use SweepAxis::{Gamma, Theta1, Theta2};
        // Fields a family ignores stay at an in-domain placeholder.
        let mut gamma = 0.5;
        let mut t1 = FRAC_PI_4;
        let mut t2 = FRAC_PI_4;
        match family {
            Family::BellPhi => t1 = need(theta1, "--theta or --theta1", Some(Theta1), t1)?,
            Family::BellPsi => t2 = need(theta2, "--theta or --theta2", Some(Theta2), t2)?,
            Family::TwoBellMixture => {
                gamma = need(self.gamma, "--gamma", Some(Gamma), gamma)?;
                t1 = need(theta1, "--theta or --theta1", Some(Theta1), t1)?;
                t2 = need(theta2, "--theta or --theta2", Some(Theta2), t2)?;
            }
            Family::Werner | Family::EntangledSeparable => {
                gamma = need(self.gamma, "--gamma", Some(Gamma), gamma)?;
                t1 = need(theta1, "--theta or --theta1", Some(Theta1), t1)?;
            }
            Family::MemsBound => gamma = need(self.gamma, "--gamma", Some(Gamma), gamma)?,
        }
        Ok(FamilyParams { family, gamma, theta1: t1, theta2: t2, sign: self.sign })
    }
}

impl FamilyArg {
    fn name(self) -> &'static str {
        match self {
            FamilyArg::BellPhi => "bell-phi",
            FamilyArg::BellPsi => "bell-psi",
            FamilyArg::TwoBell => "two-bell",
            FamilyArg::Werner => "werner",
            FamilyArg::EntSep => "ent-sep",
            FamilyArg::Mems => "mems",
        }
    }
}

#[derive(Args)]
struct MeasuresArgs {
    #[command(flatten)]
    state: StateArgs,
}

#[derive(Args)]
struct FilterArgs {
    #[command(flatten)]
    state: StateArgs,
    /// Transmission of the V channel on arm A, [0, 1] (default 1).
    #[arg(long)]
    eta_va: Option<f64>,
    /// Transmission of the H channel on arm A, [0, 1] (default 1).
    #[arg(long)]
    eta_ha: Option<f64>,
    /// Transmission of the V channel on arm B, [0, 1] (default 1).
    #[arg(long)]
    eta_vb: Option<f64>,
    /// Transmission of the H channel on arm B, [0, 1] (default 1).
    #[arg(long)]
    eta_hb: Option<f64>,
    /// Use the family's solved constraint-balancing transmissions.
    #[arg(long)]
    solve: bool,
    /// Path parameter for families whose solution set is one-dimensional;
    /// implies --solve.
    #[arg(long)]
    eps: Option<f64>,
    /// Also run the photonic-mode model and print the trace distance
    /// between the two post-selected states.
    #[arg(long)]
    oracle: bool,
}

impl FilterArgs {
    fn settings(&self) -> Result<FilterSettings, AppError> {
        let explicit =
            [self.eta_va, self.eta_ha, self.eta_vb, self.eta_hb].iter().any(Option::is_some);
        if self.solve || self.eps.is_some() {
            if explicit {
                return Err(usage("--solve/--eps and explicit --eta-* flags are exclusive"));
            }
            let params = self.state.family_params(None)?;
            return Ok(solve_constraints(&params, self.eps)?);
        }
        Ok(FilterSettings::new(
            self.eta_va.unwrap_or(1.0),
            self.eta_ha.unwrap_or(1.0),
            self.eta_vb.unwrap_or(1.0),
            self.eta_hb.unwrap_or(1.0),
        )?)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AxisArg {
    Gamma,
    Theta1,
    Theta2,
    EtaPath,
}

impl AxisArg {
    fn axis(self) -> SweepAxis {
        match self {
            AxisArg::Gamma => SweepAxis::Gamma,
            AxisArg::Theta1 => SweepAxis::Theta1,
            AxisArg::Theta2 => SweepAxis::Theta2,
            AxisArg::EtaPath => SweepAxis::EtaPath,
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    state: StateArgs,
    /// Which parameter the grid walks.
    #[arg(long, value_enum)]
    axis: AxisArg,
    /// Lower end of the axis range.
    #[arg(long, allow_hyphen_values = true)]
    from: f64,
    /// Upper end of the axis range.
    #[arg(long, allow_hyphen_values = true)]
    to: f64,
    /// Grid points, endpoints included.
    #[arg(long, default_value_t = 101)]
    points: usize,
    /// Output file (stdout when omitted).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CurveArg {
    Werner,
    Mems,
}

#[derive(Args)]
struct BoundsArgs {
    /// Which bound curve to tabulate.
    #[arg(long, value_enum)]
    curve: CurveArg,
    /// Grid points, endpoints included.
    #[arg(long, default_value_t = 101)]
    points: usize,
    /// Output file (stdout when omitted).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Unconstrained,
    Constrained,
}

#[derive(Args)]
struct OptimizeArgs {
    #[command(flatten)]
    state: StateArgs,
    /// Plain EOF maximization, or EOF maximization over settings driving
    /// both subsystems to maximal entropy.
    #[arg(long, value_enum, default_value = "unconstrained")]
    mode: ModeArg,
    /// Seed-grid points per axis (default 15 unconstrained, 21 constrained).
    #[arg(long)]
    grid: Option<usize>,
    /// Golden-section refinement rounds.
    #[arg(long)]
    refine_rounds: Option<usize>,
    /// Allowed |S - 1| slack per subsystem in constrained mode.
    #[arg(long)]
    entropy_tol: Option<f64>,
    /// EOF window within which candidates compete on probability.
    #[arg(long)]
    tie_tol: Option<f64>,
    /// Reject candidates whose success probability falls below this.
    #[arg(long)]
    min_prob: Option<f64>,
    /// Write every evaluated candidate to this CSV file.
    #[arg(long, value_name = "PATH")]
    trace_out: Option<PathBuf>,
}

impl OptimizeArgs {
    fn config(&self) -> OptimizeConfig {
        let mut cfg = match self.mode {
            ModeArg::Unconstrained => OptimizeConfig::unconstrained(),
            ModeArg::Constrained => OptimizeConfig::constrained(),
        };
        if let Some(g) = self.grid {
            cfg.grid_resolution = g;
        }
        if let Some(r) = self.refine_rounds {
            cfg.refine_rounds = r;
        }
        if let Some(t) = self.entropy_tol {
            cfg.entropy_tolerance = t;
        }
        if let Some(t) = self.tie_tol {
            cfg.eof_tie_tolerance = t;
        }
        if let Some(p) = self.min_prob {
            cfg.min_probability = p;
        }
        cfg
    }
}

#[derive(Debug)]
enum AppError {
    Lib(beamsplit::Error),
    Io(std::io::Error),
    Usage(String),
}

fn usage(msg: impl Into<String>) -> AppError {
    AppError::Usage(msg.into())
}

impl AppError {
    fn code(&self) -> u8 {
        match self {
            AppError::Io(_) => 1,
            AppError::Usage(_) => 2,
            AppError::Lib(beamsplit::Error::VanishingEnsemble { .. }) => 3,
            AppError::Lib(beamsplit::Error::NoFeasiblePoint) => 4,
            AppError::Lib(beamsplit::Error::ConvergenceFailure(_)) => 5,
            AppError::Lib(_) => 2,
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Lib(e) => e.fmt(f),
            AppError::Io(e) => write!(f, "i/o failure: {e}"),
            AppError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<beamsplit::Error> for AppError {
    fn from(e: beamsplit::Error) -> Self {
        AppError::Lib(e)
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn run(cmd: Cmd) -> Result<(), AppError> {
    match cmd {
        Cmd::Measures(a) => cmd_measures(&a),
        Cmd::Filter(a) => cmd_filter(&a),
        Cmd::Sweep(a) => cmd_sweep(&a),
        Cmd::Bounds(a) => cmd_bounds(&a),
        Cmd::Optimize(a) => cmd_optimize(&a),
    }
}

/// A closed pipe (e.g. `beamsplit sweep ... | head`) is normal downstream
/// termination, not a failure, so it ends the process with status 0 instead
/// of the panic `println!` would raise.
fn write_stdout(text: &str) -> Result<(), AppError> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(e.into()),
    }
}

fn report_block(r: &MeasureReport) -> String {
    let mut s = String::new();
    for (key, value) in [
        ("concurrence", r.concurrence),
        ("eof", r.eof),
        ("entropy_joint", r.entropy_joint),
        ("entropy_a", r.entropy_a),
        ("entropy_b", r.entropy_b),
        ("linear_entropy", r.linear_entropy),
        ("purity", r.purity),
    ] {
        s.push_str(&format!("{key} = {}\n", fmt12(value)));
    }
    s
}

fn settings_block(settings: &FilterSettings) -> String {
    let mut s = String::new();
    for (key, value) in [
        ("eta_va", settings.eta_va),
        ("eta_ha", settings.eta_ha),
        ("eta_vb", settings.eta_vb),
        ("eta_hb", settings.eta_hb),
    ] {
        s.push_str(&format!("{key} = {}\n", fmt12(value)));
    }
    s
}

fn cmd_measures(args: &MeasuresArgs) -> Result<(), AppError> {
    let rho = args.state.density()?;
    write_stdout(&report_block(&measures::report(&rho)?))
}

fn cmd_filter(args: &FilterArgs) -> Result<(), AppError> {
    let rho = args.state.density()?;
    let settings = args.settings()?;
    let outcome = apply_filter(&rho, &settings)?;
    let mut out = settings_block(&settings);
    out.push_str(&format!("probability = {}\n", fmt12(outcome.probability)));
    out.push_str(&report_block(&measures::report(&outcome.state)?));
    if args.oracle {
        let check = oracle_filter(&rho, &settings)?;
        let dist = measures::trace_distance(&outcome.state, &check.state);
        out.push_str(&format!("oracle_trace_distance = {}\n", fmt12(dist)));
    }
    write_stdout(&out)
}

fn emit(path: Option<&Path>, csv: &str) -> Result<(), AppError> {
    match path {
        Some(p) => fs::write(p, csv)?,
        None => write_stdout(csv)?,
    }
    Ok(())
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), AppError> {
    let axis = args.axis.axis();
    let spec = SweepSpec {
        params: args.state.family_params(Some(axis))?,
        axis,
        lo: args.from,
        hi: args.to,
        points: args.points,
    };
    let rows = run_sweep(&spec)?;
    emit(args.out.as_deref(), &sweep::to_csv(&rows))
}

fn cmd_bounds(args: &BoundsArgs) -> Result<(), AppError> {
    let curve = match args.curve {
        CurveArg::Werner => bounds::BoundCurve::Werner,
        CurveArg::Mems => bounds::BoundCurve::Mems,
    };
    let rows = bounds::run_bounds(curve, args.points)?;
    emit(args.out.as_deref(), &bounds::to_csv(&rows))
}

fn trace_csv(trace: &[Evaluation]) -> String {
    let mut out = String::from("eta_va,eta_ha,eta_vb,eta_hb,probability,eof,feasible\n");
    for e in trace {
        let [va, ha, vb, hb] = e.settings.as_array();
        for (k, v) in [va, ha, vb, hb, e.probability].iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&fmt12(*v));
        }
        out.push(',');
        if let Some(eof) = e.eof {
            out.push_str(&fmt12(eof));
        }
        out.push_str(if e.feasible { ",1\n" } else { ",0\n" });
    }
    out
}

fn cmd_optimize(args: &OptimizeArgs) -> Result<(), AppError> {
    let rho = args.state.density()?;
    let cfg = args.config();
    let result = if let Some(path) = &args.trace_out {
        let (result, trace) = optimize_eof_traced(&rho, &cfg)?;
        fs::write(path, trace_csv(&trace))?;
        result
    } else {
        optimize_eof(&rho, &cfg)?
    };
    let mode = match cfg.mode {
        OptimizeMode::UnconstrainedEof => "unconstrained",
        OptimizeMode::SubsystemConstrained => "constrained",
    };
    let mut out = format!("mode = {mode}\n");
    out.push_str(&settings_block(&result.settings));
    out.push_str(&format!("probability = {}\n", fmt12(result.outcome.probability)));
    out.push_str(&format!("eof = {}\n", fmt12(result.report.eof)));
    out.push_str(&format!("residual_a = {}\n", fmt12(result.constraint_residuals.0)));
    out.push_str(&format!("residual_b = {}\n", fmt12(result.constraint_residuals.1)));
    write_stdout(&out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_3;

    fn parse(line: &str) -> Cli {
        Cli::try_parse_from(line.split_whitespace()).expect("line parses")
    }

    fn state_of(cli: Cli) -> StateArgs {
        match cli.cmd {
            Cmd::Measures(a) => a.state,
            Cmd::Filter(a) => a.state,
            _ => panic!("not a state-bearing command"),
        }
    }

    #[test]
    fn exactly_one_state_source_is_enforced() {
        let none = state_of(parse("beamsplit measures"));
        assert!(none.density().is_err());
        let two = state_of(parse("beamsplit measures --seed 1 --family werner --gamma 0.5 --theta 0.7"));
        assert!(two.density().is_err());
        let rank_alone = state_of(parse("beamsplit measures --family mems --gamma 0.5 --rank 2"));
        assert!(rank_alone.density().is_err());
    }

    #[test]
    fn theta_shorthand_fans_out_and_degrees_convert() {
        let a = state_of(parse(
            "beamsplit measures --family two-bell --gamma 0.3 --theta 0.5 --theta2 0.25",
        ));
        let p = a.family_params(None).unwrap();
        assert_eq!((p.theta1, p.theta2), (0.5, 0.25));
        let d = state_of(parse("beamsplit measures --family bell-phi --theta-deg 60"));
        let p = d.family_params(None).unwrap();
        assert!((p.theta1 - FRAC_PI_3).abs() < 1e-12);
    }

    #[test]
    fn missing_family_parameters_name_the_flag() {
        let a = state_of(parse("beamsplit measures --family werner --theta 0.7"));
        let msg = match a.family_params(None) {
            Err(AppError::Usage(m)) => m,
            other => panic!("expected usage error, got {other:?}"),
        };
        assert!(msg.contains("--gamma"), "message was: {msg}");
    }

    #[test]
    fn swept_axis_is_exempt_from_the_required_check() {
        let a = state_of(parse("beamsplit measures --family werner --theta 0.7"));
        assert!(a.family_params(Some(SweepAxis::Gamma)).is_ok());
        assert!(a.family_params(Some(SweepAxis::Theta1)).is_err());
    }

    #[test]
    fn filter_settings_resolution() {
        let cli = parse("beamsplit filter --seed 3 --eta-va 0.5");
        let Cmd::Filter(f) = cli.cmd else { panic!() };
        assert_eq!(f.settings().unwrap().as_array(), [0.5, 1.0, 1.0, 1.0]);

        let cli = parse("beamsplit filter --seed 3");
        let Cmd::Filter(f) = cli.cmd else { panic!() };
        assert_eq!(f.settings().unwrap().as_array(), [1.0; 4]);

        let cli = parse("beamsplit filter --family bell-psi --theta 0.5 --solve --eta-va 0.2");
        let Cmd::Filter(f) = cli.cmd else { panic!() };
        assert!(f.settings().is_err());

        let cli = parse("beamsplit filter --seed 3 --solve");
        let Cmd::Filter(f) = cli.cmd else { panic!() };
        assert!(f.settings().is_err(), "--solve needs a family source");
    }

    #[test]
    fn sign_parsing_accepts_both_symbols() {
        let plus = state_of(parse("beamsplit measures --family bell-phi --theta 0.4"));
        assert_eq!(plus.sign, Sign::Plus);
        let minus =
            state_of(parse("beamsplit measures --family bell-phi --theta 0.4 --sign -"));
        assert_eq!(minus.sign, Sign::Minus);
        assert!(Cli::try_parse_from("beamsplit measures --sign x".split_whitespace()).is_err());
    }

    #[test]
    fn optimizer_flag_overlay() {
        let cli = parse("beamsplit optimize --seed 1 --mode constrained --grid 9 --min-prob 0.25");
        let Cmd::Optimize(o) = cli.cmd else { panic!() };
        let cfg = o.config();
        assert!(matches!(cfg.mode, OptimizeMode::SubsystemConstrained));
        assert_eq!(cfg.grid_resolution, 9);
        assert_eq!(cfg.min_probability, 0.25);
        assert_eq!(cfg.refine_rounds, OptimizeConfig::constrained().refine_rounds);
    }

    #[test]
    fn trace_csv_shapes_rejected_rows() {
        let trace = [
            Evaluation {
                settings: FilterSettings::new(0.5, 1.0, 0.5, 1.0).unwrap(),
                probability: 0.25,
                eof: Some(0.75),
                feasible: true,
            },
            Evaluation {
                settings: FilterSettings::new(0.0, 0.0, 0.0, 0.0).unwrap(),
                probability: 0.0,
                eof: None,
                feasible: false,
            },
        ];
        let csv = trace_csv(&trace);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "eta_va,eta_ha,eta_vb,eta_hb,probability,eof,feasible");
        assert_eq!(lines[1], "0.5,1,0.5,1,0.25,0.75,1");
        assert_eq!(lines[2], "0,0,0,0,0,,0");
    }
}
