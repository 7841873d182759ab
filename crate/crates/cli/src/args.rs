use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex;

#[derive(Debug, Parser)]
#[command(name = "hetsteer", version, about = "Qubit steering sets under heterodyne detection")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Steer the qubit with a single coherent-state projection.
    Steer(SteerArgs),
    /// Sweep the β plane and export the steered point cloud.
    Sweep(SweepArgs),
    /// Propagate |1,n⟩ under the Jaynes–Cummings interaction and sweep each instant.
    Evolve(EvolveArgs),
    /// Sample the two-qubit steering ellipsoid.
    Twoqubit(TwoQubitArgs),
    /// Run the analytic-vs-numeric validation suite.
    Validate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StateKind {
    Bell,
    Product,
    Mixed,
    #[value(alias = "coherent_pair")]
    CoherentPair,
    Jc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Ply,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Radial {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// r_max = 30 with logarithmic radii, 400 × 64 points.
    Fig1,
}

#[derive(Debug, Clone, Args)]
pub struct StateArgs {
    #[arg(long, value_enum)]
    pub state: StateKind,
    /// Mixing weight of the mixed state.
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub gamma: Option<Complex<f64>>,
    #[arg(long = "gamma-prime", value_parser = parse_complex, allow_hyphen_values = true)]
    pub gamma_prime: Option<Complex<f64>>,
    /// Photon number (product and jc states).
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long = "lambda-t")]
    pub lambda_t: Option<f64>,
    /// Fock cutoff; defaults to the truncation rule for the state.
    #[arg(long = "n-cut")]
    pub n_cut: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long = "r-max")]
    pub r_max: Option<f64>,
    #[arg(long = "n-r")]
    pub n_r: Option<usize>,
    #[arg(long = "n-phi")]
    pub n_phi: Option<usize>,
    #[arg(long, value_enum)]
    pub radial: Option<Radial>,
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SteerArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub beta: Complex<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub state: StateArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct EvolveArgs {
    /// Initial photon number of |1,n⟩.
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    #[arg(long, default_value_t = 1.0)]
    pub coupling: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub detuning: f64,
    /// Comma-separated times; overrides --t-max/--n-t.
    #[arg(long, value_delimiter = ',')]
    pub times: Option<Vec<f64>>,
    /// Evenly spaced times on [0, t_max] (default: λt from 0 to π).
    #[arg(long = "t-max")]
    pub t_max: Option<f64>,
    #[arg(long = "n-t", default_value_t = 9)]
    pub n_t: usize,
    #[arg(long = "n-cut")]
    pub n_cut: Option<usize>,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct TwoQubitArgs {
    /// Bloch vector of the steered qubit, `x,y,z`.
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true, default_value = "0,0,0")]
    pub a: [f64; 3],
    #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true, default_value = "0,0,0")]
    pub b: [f64; 3],
    /// Correlation matrix, nine comma-separated entries in row-major order.
    #[arg(long, value_parser = parse_mat3, allow_hyphen_values = true)]
    pub t: [[f64; 3]; 3],
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn parse_real(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("`{s}` is not a decimal number"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

/// Parses `a+bi`, `a-bi`, a bare real `a` or a bare imaginary `bi`.
pub fn parse_complex(s: &str) -> Result<Complex<f64>, String> {
    let t = s.trim();
    let Some(body) = t.strip_suffix('i') else {
        return parse_real(t).map(|re| Complex::new(re, 0.0));
    };
    // the real/imaginary split is the last sign that does not belong to an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (parse_real(&body[..k])?, &body[k..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => parse_real(x).map_err(|_| format!("`{s}` is not a complex literal of the form a+bi"))?,
    };
    Ok(Complex::new(re, im))
}

fn parse_list<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let v: Vec<f64> = s.split(',').map(parse_real).collect::<Result<_, _>>()?;
    v.try_into().map_err(|v: Vec<f64>| format!("expected {N} comma-separated numbers, got {}", v.len()))
}

pub fn parse_vec3(s: &str) -> Result<[f64; 3], String> {
    parse_list::<3>(s)
}

pub fn parse_mat3(s: &str) -> Result<[[f64; 3]; 3], String> {
    let v = parse_list::<9>(s)?;
    Ok([[v[0], v[1], v[2]], [v[3], v[4], v[5]], [v[6], v[7], v[8]]])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("0+0i").unwrap(), Complex::new(0.0, 0.0));
        assert_eq!(parse_complex("-1+0i").unwrap(), Complex::new(-1.0, 0.0));
        assert_eq!(parse_complex("1.5-2.25i").unwrap(), Complex::new(1.5, -2.25));
        assert_eq!(parse_complex("2i").unwrap(), Complex::new(0.0, 2.0));
        assert_eq!(parse_complex("-i").unwrap(), Complex::new(0.0, -1.0));
        assert_eq!(parse_complex("0.7").unwrap(), Complex::new(0.7, 0.0));
        assert_eq!(parse_complex("1e-3-2E+1i").unwrap(), Complex::new(1e-3, -20.0));
        assert!(parse_complex("1+xi").is_err());
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("nan+0i").is_err());
    }

    #[test]
    fn vector_literals() {
        assert_eq!(parse_vec3("1,-2,0.5").unwrap(), [1.0, -2.0, 0.5]);
        assert!(parse_vec3("1,2").is_err());
        assert_eq!(parse_mat3("1,0,0,0,-1,0,0,0,1").unwrap()[1][1], -1.0);
    }
}
