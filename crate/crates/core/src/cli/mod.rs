//! The `fair-transit` command line.
//!
//! Exit codes: 0 success or property holds, 1 witness found, 2 usage
//! error, 3 enumeration guard exceeded.

mod experiment;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algorithms::{eca, gc_trsp, hybrid, HybridParams};
use crate::error::Error;
use crate::fairness::{
    core_ratio_with, core_violation_with, jr_ratio, jr_violation, pf_ratio, pf_violation, Alpha, CoreBackend,
    CoreOptions, FairnessReport, Witness,
};
use crate::instances::{generate, line_to_json, read_instance, write_instance, Family, FamilySpec, Generated};
use crate::model::{Instance, Solution};
use crate::reduction::induce_clustering;
use crate::trace::{fmt_real, RunTrace};

pub use experiment::{
    hybrid_core_bound, hybrid_jr_bound, parse_transit, run_experiment, theorem_bounds, to_csv, AlgorithmSpec, Bounds,
    CheckSpec, ExperimentConfig, InstanceSource, Row, COLUMNS, SCHEMA_LINE,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_WITNESS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

/// Environment variable that overrides the candidate limit of core
/// searches.
pub const MAX_CORE_M_VAR: &str = "FAIR_TRANSIT_MAX_CORE_M";

#[derive(Parser, Debug)]
#[command(name = "fair-transit", about = "Fair transit stop placement: generate, run, verify, experiment")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a family instance as JSON.
    Gen(GenArgs),
    /// Run a placement algorithm on an instance file.
    Run(RunArgs),
    /// Check a solution for JR, core or PF.
    Verify(VerifyArgs),
    /// Batch runs over random or generated instances, written as CSV.
    Experiment(experiment::ExperimentArgs),
    /// Print the version.
    Version,
}

#[derive(Args, Debug, Clone, Default)]
pub struct FamilyParams {
    #[arg(long)]
    pub eps: Option<f64>,
    #[arg(long)]
    pub delta: Option<f64>,
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long)]
    pub h: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long)]
    pub case: Option<f64>,
    #[arg(long)]
    pub ell: Option<f64>,
    /// 1 or 0: restrict free rides to stop groups (kz, hybrid-core-tight).
    #[arg(long)]
    pub grouped: Option<f64>,
}

impl FamilyParams {
    pub fn spec(&self, family: Family) -> FamilySpec {
        let mut spec = FamilySpec::new(family);
        let all = [
            ("eps", self.eps),
            ("delta", self.delta),
            ("lambda", self.lambda),
            ("h", self.h),
            ("gamma", self.gamma),
            ("r", self.r),
            ("case", self.case),
            ("ell", self.ell),
            ("grouped", self.grouped),
        ];
        for (name, value) in all {
            if let Some(v) = value {
                spec = spec.with(name, v);
            }
        }
        spec
    }
}

#[derive(Args, Debug)]
pub struct GenArgs {
    /// Family name, e.g. table3, gc-jr-tight, kz.
    #[arg(long)]
    pub family: String,
    #[command(flatten)]
    pub params: FamilyParams,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Algorithm {
    Gc,
    Eca,
    Hybrid,
}

#[derive(Args, Debug)]
pub struct RunArgs {
    #[arg(long)]
    pub instance: PathBuf,
    #[arg(long, value_enum)]
    pub alg: Algorithm,
    /// Ball growth rate for the hybrid algorithm, in [0, 1].
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Write the event trace as CSV to this file.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Prop {
    Jr,
    Core,
    Pf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Backend {
    Enum,
    Bb,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub instance: PathBuf,
    /// Comma-separated candidate indices or labels; empty for no stops.
    #[arg(long, allow_hyphen_values = true)]
    pub solution: String,
    #[arg(long, value_enum)]
    pub prop: Prop,
    /// Coalition size relaxation for core, e.g. 2 or 59/30.
    #[arg(long)]
    pub alpha: Option<String>,
    /// Test for a violation at this factor instead of only reporting the
    /// tight factor.
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long, value_enum, default_value = "enum")]
    pub backend: Backend,
}

/// Parses and runs a command line, returning the process exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::GuardExceeded { .. } => {
                    let _ = writeln!(
                        err,
                        "hint: the core search enumerates stop subsets; use a smaller instance or raise the limit with {MAX_CORE_M_VAR}"
                    );
                    EXIT_GUARD
                }
                _ => EXIT_USAGE,
            }
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    match cmd {
        Command::Gen(a) => cmd_gen(&a, out, err),
        Command::Run(a) => cmd_run(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Experiment(a) => experiment::cmd_experiment(&a, out),
        Command::Version => {
            writeln!(out, "fair-transit {}", env!("CARGO_PKG_VERSION"))?;
            Ok(EXIT_OK)
        }
    }
}

pub fn parse_family(name: &str) -> Result<Family, Error> {
    Family::from_name(name).ok_or_else(|| {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        Error::InvalidParameter(format!("unknown family {name:?}; expected one of {}", names.join(", ")))
    })
}

fn legend(inst: &Instance) -> String {
    let mut s = String::from("stop legend:");
    for c in 0..inst.m() {
        s.push_str(&format!(" {}={}", inst.label(c), c));
    }
    s.push('\n');
    s
}

fn cmd_gen(a: &GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Error> {
    let family = parse_family(&a.family)?;
    let generated = generate(&a.params.spec(family))?;
    match (&generated, &a.out) {
        (Generated::Trsp(inst), Some(path)) => {
            write_instance(inst, path)?;
            writeln!(out, "wrote {} (n = {}, m = {}, k = {})", path.display(), inst.n(), inst.m(), inst.k())?;
            write!(out, "{}", legend(inst))?;
        }
        (Generated::Trsp(inst), None) => {
            write!(out, "{}", crate::instances::instance_to_json(inst)?)?;
            write!(err, "{}", legend(inst))?;
        }
        (Generated::Line(line), Some(path)) => {
            fs::write(path, line_to_json(line))?;
            writeln!(out, "wrote {}", path.display())?;
        }
        (Generated::Line(line), None) => write!(out, "{}", line_to_json(line))?,
    }
    Ok(EXIT_OK)
}

fn run_algorithm(inst: &Instance, alg: Algorithm, lambda: Option<f64>) -> Result<(Solution, RunTrace), Error> {
    match alg {
        Algorithm::Gc => gc_trsp(inst),
        Algorithm::Eca => eca(inst),
        Algorithm::Hybrid => {
            let lambda = lambda.ok_or_else(|| Error::InvalidParameter("--alg hybrid requires --lambda".into()))?;
            hybrid(inst, HybridParams::new(lambda)?)
        }
    }
}

fn names(inst: &Instance, stops: &[usize]) -> String {
    stops.iter().map(|&c| inst.label(c)).collect::<Vec<_>>().join(" ")
}

fn indices(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn cmd_run(a: &RunArgs, out: &mut dyn Write) -> Result<i32, Error> {
    if let (Some(l), Algorithm::Gc | Algorithm::Eca) = (a.lambda, a.alg) {
        return Err(Error::InvalidParameter(format!("--lambda {l} only applies to --alg hybrid")));
    }
    let inst = read_instance(&a.instance)?;
    let (sol, trace) = run_algorithm(&inst, a.alg, a.lambda)?;
    writeln!(out, "stops: {}", names(&inst, sol.stops()))?;
    writeln!(out, "indices: {}", indices(sol.stops()))?;
    let costs = inst.costs(&sol)?;
    writeln!(out, "agent costs:")?;
    for (i, c) in costs.iter().enumerate() {
        writeln!(out, "  {i}: {}", fmt_real(*c))?;
    }
    writeln!(out, "total cost: {}", fmt_real(costs.iter().sum()))?;
    if let Some(path) = &a.trace {
        fs::write(path, trace.to_csv(|c| inst.label(c)))?;
        writeln!(out, "trace: {} events written to {}", trace.events.len(), path.display())?;
    }
    Ok(EXIT_OK)
}

/// Candidate indices or labels separated by commas or spaces.
pub fn parse_solution(inst: &Instance, text: &str) -> Result<Solution, Error> {
    let mut stops = Vec::new();
    for tok in text.split([',', ' ']).map(str::trim).filter(|t| !t.is_empty()) {
        let c = match inst.candidate_by_label(tok) {
            Some(c) => c,
            None => tok
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("unknown stop {tok:?} in --solution")))?,
        };
        stops.push(c);
    }
    let sol = Solution::new(stops);
    inst.check_solution(&sol)?;
    Ok(sol)
}

pub fn core_options(backend: CoreBackend) -> Result<CoreOptions, Error> {
    let mut opts = CoreOptions { backend, ..CoreOptions::default() };
    if let Ok(v) = std::env::var(MAX_CORE_M_VAR) {
        opts.max_candidates = v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("{MAX_CORE_M_VAR} must be an integer, got {v:?}")))?;
    }
    Ok(opts)
}

fn print_witness(out: &mut dyn Write, inst: Option<&Instance>, w: &Witness, what: &str) -> std::io::Result<()> {
    writeln!(out, "{what} coalition: {}", indices(&w.coalition))?;
    match inst {
        Some(inst) => writeln!(out, "{what} deviation: {} ({})", indices(&w.deviation), names(inst, &w.deviation))?,
        None => writeln!(out, "{what} deviation: {}", indices(&w.deviation))?,
    }
    writeln!(out, "{what} factor: {}", fmt_real(w.factor))
}

fn print_report(out: &mut dyn Write, inst: Option<&Instance>, r: &FairnessReport) -> std::io::Result<()> {
    writeln!(out, "property: {}", r.property)?;
    if let Some(a) = r.alpha {
        writeln!(out, "alpha: {a}")?;
    }
    writeln!(out, "factor: {}", fmt_real(r.factor))?;
    if let Some(w) = &r.witness {
        print_witness(out, inst, w, "tight")?;
    }
    Ok(())
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Error> {
    let inst = read_instance(&a.instance)?;
    let sol = parse_solution(&inst, &a.solution)?;
    if let Some(b) = a.beta {
        if !(b >= 1.0) {
            return Err(Error::InvalidParameter(format!("--beta must be >= 1, got {b}")));
        }
    }
    let alpha: Alpha = match (&a.alpha, a.prop) {
        (Some(s), Prop::Core) => s.parse()?,
        (None, Prop::Core) => Alpha::ONE,
        (Some(_), _) => return Err(Error::InvalidParameter("--alpha only applies to --prop core".into())),
        (None, _) => Alpha::ONE,
    };
    let backend = match a.backend {
        Backend::Enum => CoreBackend::Enumeration,
        Backend::Bb => CoreBackend::BranchAndBound,
    };
    let show = Some(&inst);
    let (report, violation) = match a.prop {
        Prop::Jr => (jr_ratio(&inst, &sol), a.beta.map(|b| jr_violation(&inst, &sol, b))),
        Prop::Core => {
            let opts = core_options(backend)?;
            let report = core_ratio_with(&inst, &sol, alpha, &opts)?;
            let v = match a.beta {
                Some(b) => Some(core_violation_with(&inst, &sol, alpha, b, &opts)?),
                None => None,
            };
            (report, v)
        }
        Prop::Pf => {
            let cl = induce_clustering(&inst);
            (pf_ratio(&cl, sol.stops()), a.beta.map(|b| pf_violation(&cl, sol.stops(), b)))
        }
    };
    writeln!(out, "solution: {} ({})", indices(sol.stops()), names(&inst, sol.stops()))?;
    print_report(out, if matches!(a.prop, Prop::Pf) { None } else { show }, &report)?;
    let code = match (a.beta, violation) {
        (Some(b), Some(Some(w))) => {
            writeln!(out, "violation at beta {b}: yes")?;
            print_witness(out, if matches!(a.prop, Prop::Pf) { None } else { show }, &w, "witness")?;
            EXIT_WITNESS
        }
        (Some(b), _) => {
            writeln!(out, "violation at beta {b}: no")?;
            EXIT_OK
        }
        (None, _) => {
            if report.holds_at(1.0) {
                EXIT_OK
            } else {
                EXIT_WITNESS
            }
        }
    };
    Ok(code)
}
