//! Batch front end: argument parsing, config files and the five commands.
//!
//! Exit codes: 0 when every check passes, 1 when an identity check fails,
//! 2 for invalid input (the message names the offending field).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::{self, File};
use std::io::BufWriter;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::absorber::{emitted_spectrum, project_light_tight, CurrentDistribution};
use crate::dirac::{plane_wave_solution, rest_frame_solutions, DiracSpinorSolution};
use crate::error::{Error, Result};
use crate::fock::{time_ordered_vev, ModeSpec};
use crate::lattice::{Lattice, LatticeSpec};
use crate::propagators::{eval_kernel, KernelKind, SpacetimePoint};
use crate::report::{
    read_current_csv, write_kernel_csv, write_kernel_json, write_spectrum_csv, CheckRecord, DiracRecord,
    KernelSample, SpectrumSummary, VerifyReport, VevComparison,
};
use crate::sampling;
use crate::suite::{self, SuiteConfig};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

/// Tolerance key for the absorber light-tight summary.
pub const LIGHT_TIGHT_KEY: &str = "absorber_light_tight_projection";

#[derive(Debug, Parser)]
#[command(name = "dalab", version, about = "Direct-action field theory lab")]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    #[arg(long, global = true)]
    pub n_space: Option<usize>,
    #[arg(long, global = true)]
    pub box_length: Option<f64>,
    #[arg(long, global = true)]
    pub mass: Option<f64>,
    #[arg(long, global = true)]
    pub dt: Option<f64>,
    #[arg(long, global = true)]
    pub n_time: Option<usize>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Per-check tolerance override, `<check>=<value>`; repeatable.
    #[arg(long = "tolerance", value_name = "CHECK=VALUE", global = true)]
    pub tolerances: Vec<String>,
    /// Output directory for reports and dumps.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Plain `key=value` config file; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every identity check and write verify.json.
    Verify,
    /// Sample one kernel along a time range at fixed x.
    Kernel {
        #[arg(long, default_value = "feynman")]
        kind: String,
        /// `start:end:count`, inclusive of both ends.
        #[arg(long, default_value = "0.1:2.0:20", allow_hyphen_values = true)]
        t_range: String,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        x: f64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Compare the time-ordered Fock-space VEV with i D_F at seeded point pairs.
    FockVev {
        #[arg(long, default_value_t = 10)]
        pairs: usize,
    },
    /// Dump the four Dirac solutions at a momentum label.
    Dirac {
        /// `px,py,pz`; the rest frame when omitted.
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
    },
    /// Emission spectrum of seeded random currents or currents read from CSV.
    Absorber {
        /// Number of seeded random currents when no file is given.
        #[arg(long, default_value_t = 3)]
        currents: usize,
        /// Current file with rows `t_index,x_index,value`; repeatable.
        #[arg(long = "current")]
        files: Vec<PathBuf>,
        /// Project the total current onto the light-tight subspace first.
        #[arg(long)]
        light_tight: bool,
    },
}

/// Fully resolved configuration of one run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub lattice: LatticeSpec,
    pub seed: u64,
    pub tolerances: BTreeMap<String, f64>,
    pub out: PathBuf,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            lattice: LatticeSpec::default(),
            seed: 42,
            tolerances: BTreeMap::new(),
            out: PathBuf::from("dalab-out"),
        }
    }
}

fn invalid(field: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        field,
        reason: reason.into(),
    }
}

fn parse_number<T: std::str::FromStr>(field: &'static str, raw: &str) -> Result<T> {
    raw.trim()
        .parse()
        .map_err(|_| invalid(field, format!("cannot parse `{}`", raw.trim())))
}

fn parse_tolerance(raw: &str) -> Result<(String, f64)> {
    let (name, value) = raw
        .split_once('=')
        .ok_or_else(|| invalid("tolerance", format!("expected <check>=<value>, got `{raw}`")))?;
    Ok((name.trim().to_string(), parse_number("tolerance", value)?))
}

impl RunConfig {
    /// Applies one `key=value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "n_space" => self.lattice.n_space = parse_number("n_space", value)?,
            "box_length" => self.lattice.box_length = parse_number("box_length", value)?,
            "mass" => self.lattice.mass = parse_number("mass", value)?,
            "dt" => self.lattice.dt = parse_number("dt", value)?,
            "n_time" => self.lattice.n_time = parse_number("n_time", value)?,
            "seed" => self.seed = parse_number("seed", value)?,
            "out" => self.out = PathBuf::from(value.trim()),
            "tolerance" => {
                let (name, v) = parse_tolerance(value)?;
                self.tolerances.insert(name, v);
            }
            other => match other.strip_prefix("tolerance.") {
                Some(name) => {
                    self.tolerances.insert(name.to_string(), parse_number("tolerance", value)?);
                }
                None => return Err(invalid("config", format!("unknown key `{other}`"))),
            },
        }
        Ok(())
    }

    /// Reads `key=value` lines; blank lines and `#` comments are skipped.
    pub fn apply_file(&mut self, path: &Path) -> Result<()> {
        let text = fs::read_to_string(path).map_err(|e| invalid("config", format!("{}: {e}", path.display())))?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| invalid("config", format!("line {}: expected key=value", lineno + 1)))?;
            self.set(key.trim(), value)?;
        }
        Ok(())
    }

    /// Defaults, then the config file, then explicit flags.
    pub fn resolve(args: &CommonArgs) -> Result<RunConfig> {
        let mut c = RunConfig::default();
        if let Some(path) = &args.config {
            c.apply_file(path)?;
        }
        if let Some(v) = args.n_space {
            c.lattice.n_space = v;
        }
        if let Some(v) = args.box_length {
            c.lattice.box_length = v;
        }
        if let Some(v) = args.mass {
            c.lattice.mass = v;
        }
        if let Some(v) = args.dt {
            c.lattice.dt = v;
        }
        if let Some(v) = args.n_time {
            c.lattice.n_time = v;
        }
        if let Some(v) = args.seed {
            c.seed = v;
        }
        if let Some(v) = &args.out {
            c.out = v.clone();
        }
        for raw in &args.tolerances {
            let (name, v) = parse_tolerance(raw)?;
            c.tolerances.insert(name, v);
        }
        c.suite().validate()?;
        Ok(c)
    }

    pub fn suite(&self) -> SuiteConfig {
        SuiteConfig {
            lattice: self.lattice,
            seed: self.seed,
            tolerances: self.tolerances.clone(),
        }
    }

    fn output(&self, name: &str) -> Result<BufWriter<File>> {
        fs::create_dir_all(&self.out).map_err(|e| invalid("out", format!("{}: {e}", self.out.display())))?;
        let path = self.out.join(name);
        let file = File::create(&path).map_err(|e| invalid("out", format!("{}: {e}", path.display())))?;
        Ok(BufWriter::new(file))
    }
}

/// Parses arguments and runs; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_PASS };
            let _ = e.print();
            return code;
        }
    };
    let config = match RunConfig::resolve(&cli.common) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INVALID;
        }
    };
    match run(&cli.command, &config) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidParameter { .. }
                | Error::EqualTime { .. }
                | Error::EqualTimeOrdering(_)
                | Error::NotNegationClosed(_)
                | Error::UnknownMode(_)
                | Error::LatticeMismatch
                | Error::ComplexCurrent { .. }
                | Error::SpaceTooLarge(_)
                | Error::Io(_) => EXIT_INVALID,
                _ => EXIT_FAIL,
            }
        }
    }
}

/// Executes one command against a resolved configuration.
pub fn run(command: &Command, config: &RunConfig) -> Result<i32> {
    match command {
        Command::Verify => verify(config),
        Command::Kernel {
            kind,
            t_range,
            x,
            format,
        } => kernel(config, kind, t_range, *x, *format),
        Command::FockVev { pairs } => fock_vev(config, *pairs),
        Command::Dirac { p } => dirac(config, p.as_deref()),
        Command::Absorber {
            currents,
            files,
            light_tight,
        } => absorber(config, *currents, files, *light_tight),
    }
}

fn print_checks(checks: &[CheckRecord]) {
    for c in checks {
        println!("{}", c.console_line());
    }
}

fn verify(config: &RunConfig) -> Result<i32> {
    let checks = suite::run_all(&config.suite())?;
    print_checks(&checks);
    let report = VerifyReport::new(config, checks);
    serde_json::to_writer_pretty(config.output("verify.json")?, &report)?;
    let failed = report.checks.iter().filter(|c| !c.pass).count();
    println!("{} checks, {} failed", report.checks.len(), failed);
    Ok(if report.all_pass() { EXIT_PASS } else { EXIT_FAIL })
}

/// Parses `start:end:count` into `count` evenly spaced values.
pub fn parse_range(raw: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = raw.split(':').collect();
    if parts.len() != 3 {
        return Err(invalid("t_range", format!("expected start:end:count, got `{raw}`")));
    }
    let start: f64 = parse_number("t_range", parts[0])?;
    let end: f64 = parse_number("t_range", parts[1])?;
    let count: usize = parse_number("t_range", parts[2])?;
    if !start.is_finite() || !end.is_finite() || count == 0 {
        return Err(invalid("t_range", "needs finite ends and at least one sample"));
    }
    if count == 1 {
        return Ok(vec![start]);
    }
    let step = (end - start) / (count - 1) as f64;
    Ok((0..count).map(|i| if i + 1 == count { end } else { start + step * i as f64 }).collect())
}

fn kernel(config: &RunConfig, kind: &str, t_range: &str, x: f64, format: Format) -> Result<i32> {
    let kind: KernelKind = kind.parse()?;
    let lattice = Lattice::new(config.lattice)?;
    if !x.is_finite() {
        return Err(invalid("x", "must be finite"));
    }
    let samples = parse_range(t_range)?
        .into_iter()
        .map(|t| {
            let p = SpacetimePoint::on(&lattice, t, x);
            eval_kernel(&lattice, kind, p).map(|v| KernelSample::new(kind, p, v))
        })
        .collect::<Result<Vec<_>>>()?;
    let name = format!("kernel_{}", kind.name());
    match format {
        Format::Csv => write_kernel_csv(config.output(&format!("{name}.csv"))?, &samples)?,
        Format::Json => write_kernel_json(config.output(&format!("{name}.json"))?, &samples)?,
    }
    println!("wrote {} {} samples to {}", samples.len(), kind.name(), config.out.display());
    Ok(EXIT_PASS)
}

fn fock_vev(config: &RunConfig, n_pairs: usize) -> Result<i32> {
    let lattice = Lattice::new(config.lattice)?;
    let spec = ModeSpec::full(&lattice, 1)?;
    let pairs = sampling::pairs(&mut sampling::rng(config.seed), &lattice, n_pairs, 3.0, 1e-3);
    let tolerance = config.suite().tolerance("feynman_vev_oracle");
    let mut records = Vec::with_capacity(pairs.len());
    let mut truncations = 0;
    for (x, y) in pairs {
        let vev = time_ordered_vev(&spec, x, y)?;
        truncations += vev.truncations;
        let df = eval_kernel(&lattice, KernelKind::Feynman, x.minus(&y, &lattice))?;
        records.push(VevComparison::new(x, y, vev.value, num_complex::Complex64::i() * df));
    }
    serde_json::to_writer_pretty(config.output("fock_vev.json")?, &records)?;
    let worst = records.iter().map(|r| r.abs_diff).fold(0.0, f64::max);
    let pass = worst <= tolerance && truncations == 0;
    println!(
        "{}  fock_vev  pairs={}  max_abs_diff={worst:.3e}  tolerance={tolerance:.1e}  truncations={truncations}",
        if pass { "PASS" } else { "FAIL" },
        records.len()
    );
    Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
}

fn parse_momentum(raw: &str) -> Result<[f64; 3]> {
    let parts: Vec<f64> = raw
        .split(',')
        .map(|s| parse_number("p", s))
        .collect::<Result<_>>()?;
    match parts.as_slice() {
        [a, b, c] if parts.iter().all(|v| v.is_finite()) => Ok([*a, *b, *c]),
        _ => Err(invalid("p", format!("expected px,py,pz, got `{raw}`"))),
    }
}

fn dirac(config: &RunConfig, p: Option<&str>) -> Result<i32> {
    let m = config.lattice.mass;
    let solutions: Vec<DiracSpinorSolution> = match p {
        None => rest_frame_solutions(m)?.to_vec(),
        Some(raw) => {
            let p = parse_momentum(raw)?;
            let mut v = Vec::with_capacity(4);
            for sign in [1, -1] {
                for spin in [1, 2] {
                    v.push(plane_wave_solution(p, m, sign, spin)?);
                }
            }
            v
        }
    };
    let records: Vec<DiracRecord> = solutions.iter().map(DiracRecord::from).collect();
    for r in &records {
        println!(
            "solution {}  E={:+.6}  j=[{:.6}, {:.6}, {:.6}, {:.6}]",
            r.index, r.energy, r.current[0], r.current[1], r.current[2], r.current[3]
        );
    }
    serde_json::to_writer_pretty(config.output("dirac.json")?, &records)?;
    Ok(EXIT_PASS)
}

fn absorber(config: &RunConfig, n_random: usize, files: &[PathBuf], light_tight: bool) -> Result<i32> {
    let lattice = Lattice::new(config.lattice)?;
    let mut currents: Vec<CurrentDistribution> = if files.is_empty() {
        sampling::currents(&mut sampling::rng(config.seed), &lattice, n_random)
    } else {
        files
            .iter()
            .map(|f| {
                let file = File::open(f).map_err(|e| invalid("current", format!("{}: {e}", f.display())))?;
                read_current_csv(file, &lattice)
            })
            .collect::<Result<_>>()?
    };
    if light_tight {
        let total = crate::absorber::total_current(&lattice, &currents)?;
        currents = vec![project_light_tight(&lattice, &total)?];
    }
    let spectrum = emitted_spectrum(&currents, &lattice)?;
    let tolerance = config.suite().tolerance(LIGHT_TIGHT_KEY);
    let summary = SpectrumSummary::new(&spectrum, tolerance);
    write_spectrum_csv(config.output("spectrum.csv")?, &spectrum)?;
    serde_json::to_writer_pretty(config.output("spectrum_summary.json")?, &summary)?;
    println!(
        "emission total={:.6e}  modes={}  light_tight={}",
        summary.total, summary.n_modes, summary.light_tight
    );
    Ok(EXIT_PASS)
}
