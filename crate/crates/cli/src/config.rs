//! Flags, `key = value` config files and their merge into a validated run
//! configuration. Flags win over the file.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use qsearch_core::hamiltonian::{validate_params, RawParams};
use qsearch_core::{Complex64, HamiltonianParams, Overlap};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Tsv,
}

impl Format {
    pub fn delimiter(self) -> u8 {
        match self {
            Format::Csv => b',',
            Format::Tsv => b'\t',
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "qsearch",
    version,
    about = "Analog quantum search: success probabilities, search times, tables"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// P(t) at --t.
    Eval,
    /// Highest success probability over all times.
    Pmax,
    /// First time the highest success probability is reached.
    Tstar,
    /// First time P(t) reaches --p; exit 3 if it never does.
    Threshold,
    /// Which special case the parameters fall into.
    Classify,
    /// P(t) sampled at --n points on [0, --t-end].
    Curve,
    /// Peak probability and time for a representative of every case.
    Table1,
    /// Search times of the unit-probability cases at --alpha, --beta-re, --x.
    Table2,
    /// Probability of a large overlap under uniform and non-uniform priors.
    Table3,
    /// Peak probability in the small-overlap limit against asymmetry and |β|.
    Fig4,
    /// Search time against overlap, and P(t) curves, for the optimal cases.
    Fig5,
    /// Optimal versus nearly-optimal P(t) with a 0.95 threshold line.
    Fig6,
    /// Grover success probability after --k iterations on --n items.
    Grover,
    /// Farhi-Gutmann success probability at --t.
    Fg,
    /// Prob(x ≥ --xbar) for --n dimensions; non-uniform when --sigma-sq is set.
    Prior,
}

impl Command {
    pub const ARTIFACTS: [Command; 7] = [
        Command::Curve,
        Command::Table1,
        Command::Table2,
        Command::Table3,
        Command::Fig4,
        Command::Fig5,
        Command::Fig6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Eval => "eval",
            Command::Pmax => "pmax",
            Command::Tstar => "tstar",
            Command::Threshold => "threshold",
            Command::Classify => "classify",
            Command::Curve => "curve",
            Command::Table1 => "table1",
            Command::Table2 => "table2",
            Command::Table3 => "table3",
            Command::Fig4 => "fig4",
            Command::Fig5 => "fig5",
            Command::Fig6 => "fig6",
            Command::Grover => "grover",
            Command::Fg => "fg",
            Command::Prior => "prior",
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Args)]
pub struct Options {
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub delta: Option<f64>,
    #[arg(long = "beta-re", global = true, allow_negative_numbers = true)]
    pub beta_re: Option<f64>,
    #[arg(long = "beta-im", global = true, allow_negative_numbers = true)]
    pub beta_im: Option<f64>,
    /// Only checked against conj(β).
    #[arg(long = "gamma-re", global = true, allow_negative_numbers = true)]
    pub gamma_re: Option<f64>,
    #[arg(long = "gamma-im", global = true, allow_negative_numbers = true)]
    pub gamma_im: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub energy: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub planck: Option<f64>,
    /// Overlap between source and target, in (0, 1).
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub x: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub t: Option<f64>,
    /// Threshold probability.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub p: Option<f64>,
    #[arg(long = "t-end", global = true, allow_negative_numbers = true)]
    pub t_end: Option<f64>,
    /// Sample count (curve), list size (grover) or dimension (prior).
    #[arg(long, global = true)]
    pub n: Option<u64>,
    #[arg(long, global = true)]
    pub k: Option<u64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub xbar: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub mu: Option<f64>,
    #[arg(long = "sigma-sq", global = true, allow_negative_numbers = true)]
    pub sigma_sq: Option<f64>,
    /// `key = value` file with the same keys as the flags.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

fn parse_value<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value
        .parse()
        .map_err(|_| CliError::Validation(format!("config key `{key}`: cannot parse `{value}`")))
}

impl Options {
    /// Parses `key = value` lines; blank lines and `#` comments are skipped.
    pub fn from_config_str(text: &str) -> Result<Options, CliError> {
        let mut map = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Validation(format!("config line {}: expected `key = value`", i + 1)))?;
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
        let mut o = Options::default();
        for (k, v) in &map {
            match k.as_str() {
                "alpha" => o.alpha = Some(parse_value(k, v)?),
                "delta" => o.delta = Some(parse_value(k, v)?),
                "beta-re" => o.beta_re = Some(parse_value(k, v)?),
                "beta-im" => o.beta_im = Some(parse_value(k, v)?),
                "gamma-re" => o.gamma_re = Some(parse_value(k, v)?),
                "gamma-im" => o.gamma_im = Some(parse_value(k, v)?),
                "energy" => o.energy = Some(parse_value(k, v)?),
                "planck" => o.planck = Some(parse_value(k, v)?),
                "x" => o.x = Some(parse_value(k, v)?),
                "t" => o.t = Some(parse_value(k, v)?),
                "p" => o.p = Some(parse_value(k, v)?),
                "t-end" => o.t_end = Some(parse_value(k, v)?),
                "n" => o.n = Some(parse_value(k, v)?),
                "k" => o.k = Some(parse_value(k, v)?),
                "xbar" => o.xbar = Some(parse_value(k, v)?),
                "mu" => o.mu = Some(parse_value(k, v)?),
                "sigma-sq" => o.sigma_sq = Some(parse_value(k, v)?),
                "out" => o.out = Some(PathBuf::from(v)),
                "format" => {
                    o.format = Some(
                        Format::from_str(v, true)
                            .map_err(|_| CliError::Validation(format!("config key `format`: unknown `{v}`")))?,
                    )
                }
                _ => return Err(CliError::Validation(format!("config: unknown key `{k}`"))),
            }
        }
        Ok(o)
    }

    pub fn from_config_file(path: &Path) -> Result<Options, CliError> {
        Options::from_config_str(&std::fs::read_to_string(path)?)
    }

    /// Fields set here win; the rest come from `file`.
    pub fn overriding(&self, file: &Options) -> Options {
        macro_rules! pick {
            ($($f:ident),*) => { Options { $($f: self.$f.clone().or_else(|| file.$f.clone()),)* } };
        }
        pick!(
            alpha, delta, beta_re, beta_im, gamma_re, gamma_im, energy, planck, x, t, p, t_end, n, k, xbar, mu,
            sigma_sq, config, out, format
        )
    }

    /// Merges the config file named by `--config`, if any.
    pub fn resolve(&self) -> Result<Options, CliError> {
        match &self.config {
            Some(path) => Ok(self.overriding(&Options::from_config_file(path)?)),
            None => Ok(self.clone()),
        }
    }

    pub fn raw_params(&self) -> RawParams {
        let gamma = match (self.gamma_re, self.gamma_im) {
            (None, None) => None,
            (re, im) => Some(Complex64::new(re.unwrap_or(0.0), im.unwrap_or(0.0))),
        };
        RawParams {
            alpha: self.alpha.unwrap_or(0.0),
            delta: self.delta.unwrap_or(0.0),
            beta: Complex64::new(self.beta_re.unwrap_or(0.0), self.beta_im.unwrap_or(0.0)),
            gamma,
            energy: self.energy.unwrap_or(1.0),
            planck: self.planck.unwrap_or(1.0),
        }
    }

    pub fn params(&self) -> Result<HamiltonianParams, CliError> {
        Ok(validate_params(&self.raw_params())?)
    }

    pub fn overlap(&self) -> Result<Overlap, CliError> {
        let x = self.x.ok_or_else(|| CliError::Validation("missing --x".into()))?;
        Ok(Overlap::new(x)?)
    }

    pub fn require<T: Copy>(value: Option<T>, flag: &str) -> Result<T, CliError> {
        value.ok_or_else(|| CliError::Validation(format!("missing --{flag}")))
    }
}

/// Everything a single-Hamiltonian query needs, validated.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub params: HamiltonianParams,
    pub x: Overlap,
    pub threshold: Option<f64>,
    pub output_path: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn from_options(o: &Options) -> Result<RunConfig, CliError> {
        Ok(RunConfig {
            params: o.params()?,
            x: o.overlap()?,
            threshold: o.p,
            output_path: o.out.clone(),
            format: o.format.unwrap_or_default(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_text_parses_known_keys() {
        let o =
            Options::from_config_str("# demo\nalpha = 0.5\nbeta-re=1 # trailing\n\nformat = tsv\nn = 12\n").unwrap();
        assert_eq!(o.alpha, Some(0.5));
        assert_eq!(o.beta_re, Some(1.0));
        assert_eq!(o.format, Some(Format::Tsv));
        assert_eq!(o.n, Some(12));
    }

    #[test]
    fn config_rejects_unknown_keys_and_garbage() {
        assert!(matches!(
            Options::from_config_str("alpah = 1"),
            Err(CliError::Validation(_))
        ));
        assert!(matches!(
            Options::from_config_str("alpha 1"),
            Err(CliError::Validation(_))
        ));
        assert!(matches!(
            Options::from_config_str("alpha = one"),
            Err(CliError::Validation(_))
        ));
    }

    #[test]
    fn flags_override_file() {
        let file = Options::from_config_str("alpha = 1\ndelta = 2").unwrap();
        let flags = Options {
            alpha: Some(3.0),
            ..Options::default()
        };
        let merged = flags.overriding(&file);
        assert_eq!(merged.alpha, Some(3.0));
        assert_eq!(merged.delta, Some(2.0));
    }

    #[test]
    fn gamma_must_be_conjugate_of_beta() {
        let o = Options {
            beta_re: Some(1.0),
            beta_im: Some(1.0),
            gamma_re: Some(1.0),
            gamma_im: Some(1.0),
            ..Options::default()
        };
        assert!(matches!(o.params(), Err(CliError::Validation(_))));
        let o = Options {
            gamma_im: Some(-1.0),
            ..o
        };
        assert!(o.params().is_ok());
    }

    #[test]
    fn run_config_validates_overlap() {
        let o = Options {
            x: Some(1.5),
            ..Options::default()
        };
        assert!(matches!(RunConfig::from_options(&o), Err(CliError::Validation(_))));
        let o = Options {
            x: Some(0.5),
            ..Options::default()
        };
        let rc = RunConfig::from_options(&o).unwrap();
        assert_eq!(rc.format, Format::Csv);
        assert_eq!(rc.x.get(), 0.5);
    }
}
