//! Flags, the optional `key=value` file, and their merge into a [`RunConfig`].

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use spiked::matelem::{DimensionSpec, PotentialParams};

use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "spiked", version, about = "Weak-coupling energies of the generalized spiked harmonic oscillator")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// E0, c1, c2 and E(lambda) = E0 + c1 lambda + c2 lambda²
    Energy,
    /// c2 by every applicable method, with convergence data
    Coeffs,
    /// Matrix elements <m|x^-alpha|n> and the truncated Hamiltonian
    Matrix,
    /// Eigenvalues of the truncated Hamiltonian
    Spectrum,
    /// Series identities and the variational cross-check
    Validate,
    /// One row per (alpha, lambda) grid point
    Sweep,
}

impl Command {
    pub fn as_str(&self) -> &'static str {
        match self {
            Command::Energy => "energy",
            Command::Coeffs => "coeffs",
            Command::Matrix => "matrix",
            Command::Spectrum => "spectrum",
            Command::Validate => "validate",
            Command::Sweep => "sweep",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

impl Format {
    fn as_str(&self) -> &'static str {
        match self {
            Format::Table => "table",
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Default, Args)]
pub struct Flags {
    /// Coefficient of A/x²
    #[arg(long = "A", global = true, allow_hyphen_values = true)]
    pub a: Option<f64>,
    /// Coefficient of B x²
    #[arg(long = "B", global = true, allow_hyphen_values = true)]
    pub b: Option<f64>,
    /// Spike exponent
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Spike strength
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
    /// Angular momentum (with --N, replaces A by its effective value)
    #[arg(long, global = true)]
    pub l: Option<u32>,
    /// Spatial dimension
    #[arg(long = "N", global = true)]
    pub n: Option<u32>,
    #[arg(long = "basis-size", global = true)]
    pub basis_size: Option<usize>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub tolerance: Option<f64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for sweeps
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Add the variational energy to sweep rows
    #[arg(long = "with-oracle", global = true)]
    pub with_oracle: bool,
    /// Comma-separated gamma values for validate
    #[arg(long = "gamma-grid", global = true, allow_hyphen_values = true)]
    pub gamma_grid: Option<String>,
    /// Comma-separated lambda values for sweep
    #[arg(long = "lambda-grid", global = true, allow_hyphen_values = true)]
    pub lambda_grid: Option<String>,
    /// Comma-separated alpha values for sweep
    #[arg(long = "alpha-grid", global = true, allow_hyphen_values = true)]
    pub alpha_grid: Option<String>,
    /// key=value file with the same names as the flags; flags win
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

pub const DEFAULT_BASIS_SIZE: usize = 30;
pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const DEFAULT_VALIDATE_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_GAMMA_GRID: [f64; 5] = [1.5, 2.0, 2.5, 3.0, 3.5];

/// Everything a command needs, after merging flags over the config file.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub a: f64,
    pub b: f64,
    pub alpha: f64,
    pub lambda: f64,
    pub dim: Option<DimensionSpec>,
    pub gamma_grid: Vec<f64>,
    pub lambda_grid: Option<Vec<f64>>,
    pub alpha_grid: Option<Vec<f64>>,
    pub basis_size: usize,
    pub tolerance: f64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub with_oracle: bool,
}

fn parse_grid(key: &str, text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().map_err(|_| CliError::Usage(format!("{key}: cannot parse {s:?} as a number"))))
        .collect()
}

fn parse_value<T: std::str::FromStr>(key: &str, text: &str) -> Result<T, CliError> {
    text.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{key}: cannot parse {text:?}")))
}

const KEYS: [&str; 15] = [
    "A", "B", "alpha", "lambda", "l", "N", "basis-size", "tolerance", "format", "out", "jobs",
    "with-oracle", "gamma-grid", "lambda-grid", "alpha-grid",
];

/// Reads `key = value` lines; `#` starts a comment.
pub fn read_config_file(path: &Path) -> Result<BTreeMap<String, String>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read config {}: {e}", path.display())))?;
    let mut map = BTreeMap::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("{}:{}: expected key=value", path.display(), no + 1)))?;
        let key = key.trim();
        if !KEYS.contains(&key) {
            return Err(CliError::Usage(format!("{}:{}: unknown key {key:?}", path.display(), no + 1)));
        }
        map.insert(key.to_string(), value.trim().to_string());
    }
    Ok(map)
}

impl RunConfig {
    pub fn resolve(cli: Cli) -> Result<Self, CliError> {
        let file = match &cli.flags.config {
            Some(p) => read_config_file(p)?,
            None => BTreeMap::new(),
        };
        let f = cli.flags;
        let num = |flag: Option<f64>, key: &str, default: f64| -> Result<f64, CliError> {
            match (flag, file.get(key)) {
                (Some(v), _) => Ok(v),
                (None, Some(t)) => parse_value(key, t),
                (None, None) => Ok(default),
            }
        };
        let opt = |flag: Option<u32>, key: &str| -> Result<Option<u32>, CliError> {
            match (flag, file.get(key)) {
                (Some(v), _) => Ok(Some(v)),
                (None, Some(t)) => parse_value(key, t).map(Some),
                (None, None) => Ok(None),
            }
        };
        let grid = |flag: &Option<String>, key: &str| -> Result<Option<Vec<f64>>, CliError> {
            match flag.as_deref().or(file.get(key).map(String::as_str)) {
                Some(t) => parse_grid(key, t).map(Some),
                None => Ok(None),
            }
        };

        let command = cli.command;
        let l = opt(f.l, "l")?;
        let n = opt(f.n, "N")?;
        let dim = match (l, n) {
            (None, None) => None,
            (l, n) => Some(DimensionSpec::new(l.unwrap_or(0), n.unwrap_or(1))?),
        };
        let basis_size = match (f.basis_size, file.get("basis-size")) {
            (Some(v), _) => v,
            (None, Some(t)) => parse_value("basis-size", t)?,
            (None, None) => DEFAULT_BASIS_SIZE,
        };
        if !(1..=spiked::varoracle::MAX_BASIS_SIZE).contains(&basis_size) {
            return Err(CliError::Usage(format!(
                "basis-size must be in 1..={}, got {basis_size}",
                spiked::varoracle::MAX_BASIS_SIZE
            )));
        }
        let default_tol = if command == Command::Validate { DEFAULT_VALIDATE_TOLERANCE } else { DEFAULT_TOLERANCE };
        let tolerance = num(f.tolerance, "tolerance", default_tol)?;
        if !(tolerance > 0.0 && tolerance <= 1e-2) {
            return Err(CliError::Usage(format!("tolerance must be in (0, 1e-2], got {tolerance}")));
        }
        let format = match (f.format, file.get("format")) {
            (Some(v), _) => v,
            (None, Some(t)) => Format::from_str(t, false).map_err(|_| CliError::Usage(format!("format: unknown {t:?}")))?,
            (None, None) => Format::Table,
        };
        let jobs = match (f.jobs, file.get("jobs")) {
            (Some(v), _) => Some(v),
            (None, Some(t)) => Some(parse_value("jobs", t)?),
            (None, None) => None,
        };
        if jobs == Some(0) {
            return Err(CliError::Usage("jobs must be at least 1".into()));
        }
        let with_oracle = f.with_oracle
            || match file.get("with-oracle") {
                Some(t) => parse_value::<bool>("with-oracle", t)?,
                None => false,
            };
        Ok(RunConfig {
            command,
            a: num(f.a, "A", 0.0)?,
            b: num(f.b, "B", 1.0)?,
            alpha: num(f.alpha, "alpha", 1.0)?,
            lambda: num(f.lambda, "lambda", 0.0)?,
            dim,
            gamma_grid: grid(&f.gamma_grid, "gamma-grid")?.unwrap_or_else(|| DEFAULT_GAMMA_GRID.to_vec()),
            lambda_grid: grid(&f.lambda_grid, "lambda-grid")?,
            alpha_grid: grid(&f.alpha_grid, "alpha-grid")?,
            basis_size,
            tolerance,
            format,
            out: f.out.or_else(|| file.get("out").map(PathBuf::from)),
            jobs,
            with_oracle,
        })
    }

    /// Parameters at the configured `alpha` and `lambda`, before any dimensional substitution.
    pub fn params(&self) -> spiked::Result<PotentialParams> {
        PotentialParams::new(self.a, self.b, self.lambda, self.alpha)
    }

    /// Parameters the commands act on: the effective ones when a dimension is set.
    pub fn effective_params(&self, alpha: f64, lambda: f64) -> spiked::Result<PotentialParams> {
        let p = PotentialParams::new(self.a, self.b, lambda, alpha)?;
        match &self.dim {
            Some(d) => spiked::matelem::effective_params(&p, d),
            None => Ok(p),
        }
    }

    /// Echo of the configuration for the JSON `meta` block.
    pub fn echo(&self) -> Vec<(&'static str, crate::output::Value)> {
        use crate::output::Value;
        let grid = |g: &Option<Vec<f64>>| match g {
            Some(v) => Value::List(v.clone()),
            None => Value::Null,
        };
        vec![
            ("A", Value::Num(self.a)),
            ("B", Value::Num(self.b)),
            ("alpha", Value::Num(self.alpha)),
            ("lambda", Value::Num(self.lambda)),
            ("l", self.dim.map_or(Value::Null, |d| Value::Int(d.l as i64))),
            ("N", self.dim.map_or(Value::Null, |d| Value::Int(d.n as i64))),
            ("basis_size", Value::Int(self.basis_size as i64)),
            ("tolerance", Value::Num(self.tolerance)),
            ("format", Value::Text(self.format.as_str().into())),
            ("with_oracle", Value::Bool(self.with_oracle)),
            ("gamma_grid", Value::List(self.gamma_grid.clone())),
            ("lambda_grid", grid(&self.lambda_grid)),
            ("alpha_grid", grid(&self.alpha_grid)),
        ]
    }
}
