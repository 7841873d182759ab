//! Command implementations behind the `hetsteer` binary.

pub mod args;
pub mod output;

use std::f64::consts::PI;
use std::io::Write;

use anyhow::{anyhow, bail, Context, Result};
use hetsteer_core::validation::run_validation;
use hetsteer_core::{
    conditioned_operators, heterodyne_steer, steering_trajectory, sweep, two_qubit_ellipsoid,
    BlochVector, CoherentPairParam, Error, ExampleState, JCModel, JCParam, MixedStateParam,
    SteeringSample, SweepGrid, TwoQubitTheta,
};
use serde::Serialize;

use args::{Cli, Command, EvolveArgs, Format, GridArgs, OutputArgs, Preset, Radial, StateArgs, StateKind};
use output::SweepRecord;

/// Concurrence below which an instant of a trajectory counts as a product state.
pub use hetsteer_core::dynamics::PRODUCT_CONCURRENCE;

pub fn example_state(a: &StateArgs) -> Result<ExampleState<f64>> {
    let need = |name: &str| anyhow!("--state {} requires --{name}", kind_name(a.state));
    Ok(match a.state {
        StateKind::Bell => ExampleState::Bell,
        StateKind::Product => ExampleState::Product { n: a.n.unwrap_or(0) },
        StateKind::Mixed => ExampleState::Mixed(MixedStateParam::new(a.p.ok_or_else(|| need("p"))?)?),
        StateKind::CoherentPair => ExampleState::CoherentPair(CoherentPairParam::new(
            a.gamma.ok_or_else(|| need("gamma"))?,
            a.gamma_prime.ok_or_else(|| need("gamma-prime"))?,
        )?),
        StateKind::Jc => ExampleState::JaynesCummings(JCParam::new(
            a.n.unwrap_or(1),
            a.lambda_t.ok_or_else(|| need("lambda-t"))?,
        )?),
    })
}

fn kind_name(k: StateKind) -> &'static str {
    match k {
        StateKind::Bell => "bell",
        StateKind::Product => "product",
        StateKind::Mixed => "mixed",
        StateKind::CoherentPair => "coherent-pair",
        StateKind::Jc => "jc",
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub r_max: f64,
    pub n_r: usize,
    pub n_phi: usize,
    pub log_radial: bool,
}

impl GridSpec {
    pub fn resolve(g: &GridArgs) -> Self {
        let base = match g.preset {
            Some(Preset::Fig1) => GridSpec {
                r_max: 30.0,
                n_r: 400,
                n_phi: 64,
                log_radial: true,
            },
            None => GridSpec {
                r_max: 5.0,
                n_r: 200,
                n_phi: 64,
                log_radial: false,
            },
        };
        GridSpec {
            r_max: g.r_max.unwrap_or(base.r_max),
            n_r: g.n_r.unwrap_or(base.n_r),
            n_phi: g.n_phi.unwrap_or(base.n_phi),
            log_radial: g.radial.map_or(base.log_radial, |r| r == Radial::Log),
        }
    }

    pub fn build(&self) -> Result<SweepGrid<f64>> {
        let grid = if self.log_radial {
            SweepGrid::log_radial(self.r_max, self.n_r, self.n_phi)
        } else {
            SweepGrid::uniform(self.r_max, self.n_r, self.n_phi)
        };
        grid.context("invalid grid")
    }
}

#[derive(Debug, Serialize)]
struct StateConfig {
    state: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_prime: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda_t: Option<f64>,
    n_cut: usize,
}

impl StateConfig {
    fn new(case: &ExampleState<f64>, n_cut: usize) -> Self {
        let mut c = StateConfig {
            state: "",
            p: None,
            gamma: None,
            gamma_prime: None,
            n: None,
            lambda_t: None,
            n_cut,
        };
        match case {
            ExampleState::Bell => c.state = "bell",
            ExampleState::Product { n } => {
                c.state = "product";
                c.n = Some(*n);
            }
            ExampleState::Mixed(m) => {
                c.state = "mixed";
                c.p = Some(m.p());
            }
            ExampleState::CoherentPair(g) => {
                c.state = "coherent_pair";
                c.gamma = Some([g.gamma.re, g.gamma.im]);
                c.gamma_prime = Some([g.gamma_prime.re, g.gamma_prime.im]);
            }
            ExampleState::JaynesCummings(j) => {
                c.state = "jc";
                c.n = Some(j.n());
                c.lambda_t = Some(j.lambda_t());
            }
        }
        c
    }
}

#[derive(Debug, Serialize)]
struct SweepConfig {
    #[serde(flatten)]
    state: StateConfig,
    grid: GridSpec,
}

fn emit(out: &OutputArgs, stdout: &mut dyn Write, body: &str) -> Result<()> {
    match &out.out {
        Some(path) => std::fs::write(path, body).with_context(|| format!("cannot write {}", path.display())),
        None => stdout.write_all(body.as_bytes()).context("cannot write to standard output"),
    }
}

fn render_records(format: Format, command: &str, config: &impl Serialize, records: &[SweepRecord]) -> Result<String> {
    Ok(match format {
        Format::Csv => output::csv(records),
        Format::Json => output::json(command, config, records)?,
        Format::Ply => output::ply_from_records(records, &format!("hetsteer {command}")),
    })
}

fn record_of(s: &SteeringSample<f64>) -> SweepRecord {
    SweepRecord::new(s.beta.norm(), s.beta.im.atan2(s.beta.re), s)
}

fn steer(a: &args::SteerArgs, stdout: &mut dyn Write) -> Result<()> {
    let case = example_state(&a.state)?;
    let n_cut = a.state.n_cut.unwrap_or_else(|| case.default_n_cut());
    let f = conditioned_operators(&case.joint_state(n_cut)?);
    let s = heterodyne_steer(&f, a.beta)?;
    let config = StateConfig::new(&case, n_cut);
    let body = render_records(a.output.format, "steer", &config, &[record_of(&s)])?;
    emit(&a.output, stdout, &body)
}

/// Sweep records for `case` on the grid, in grid order.
pub fn sweep_records(case: &ExampleState<f64>, n_cut: usize, grid: &SweepGrid<f64>) -> Result<Vec<SweepRecord>> {
    let f = conditioned_operators(&case.joint_state(n_cut)?);
    Ok(sweep(&f, grid)
        .iter()
        .zip(grid.points())
        .map(|(s, (r, phi))| SweepRecord::new(r, phi, s))
        .collect())
}

fn run_sweep(a: &args::SweepArgs, stdout: &mut dyn Write) -> Result<()> {
    let case = example_state(&a.state)?;
    let n_cut = a.state.n_cut.unwrap_or_else(|| case.default_n_cut());
    let spec = GridSpec::resolve(&a.grid);
    let records = sweep_records(&case, n_cut, &spec.build()?)?;
    let config = SweepConfig {
        state: StateConfig::new(&case, n_cut),
        grid: spec,
    };
    let body = render_records(a.output.format, "sweep", &config, &records)?;
    emit(&a.output, stdout, &body)
}

#[derive(Debug, Serialize)]
struct EvolveConfig {
    n: usize,
    coupling: f64,
    detuning: f64,
    n_cut: usize,
    times: Vec<f64>,
    grid: GridSpec,
}

#[derive(Debug, Serialize)]
struct InstantRecord {
    t: f64,
    lambda_t: f64,
    concurrence: f64,
    single_point: bool,
    truncation_leak: Option<f64>,
    samples: Vec<SweepRecord>,
}

pub fn evolve_times(a: &EvolveArgs) -> Result<Vec<f64>> {
    let times = match &a.times {
        Some(t) => t.clone(),
        None => {
            let t_max = a.t_max.unwrap_or(PI / a.coupling);
            if a.n_t < 1 {
                bail!("--n-t must be at least 1");
            }
            let step = if a.n_t > 1 { t_max / (a.n_t - 1) as f64 } else { 0.0 };
            (0..a.n_t).map(|k| k as f64 * step).collect()
        }
    };
    if let Some(bad) = times.iter().find(|t| !(t.is_finite() && **t >= 0.0)) {
        bail!("times must be finite and non-negative, got {bad}");
    }
    Ok(times)
}

fn evolve(a: &EvolveArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    if a.output.format == Format::Ply {
        bail!("evolve exports csv or json; ply holds a single point cloud");
    }
    let n_cut = a.n_cut.unwrap_or_else(|| 24.max(a.n + 2));
    let model = JCModel::new(a.coupling, a.detuning, n_cut)?;
    let spec = GridSpec::resolve(&a.grid);
    let grid = spec.build()?;
    let times = evolve_times(a)?;
    let trajectory = steering_trajectory(&model, a.n, &times, &grid)?;
    let points = grid.points();
    let instants: Vec<InstantRecord> = trajectory
        .iter()
        .map(|tp| InstantRecord {
            t: tp.t,
            lambda_t: tp.t * a.coupling,
            concurrence: tp.concurrence,
            single_point: tp.single_point,
            truncation_leak: tp.truncation_leak,
            samples: tp
                .samples
                .iter()
                .zip(&points)
                .map(|(s, &(r, phi))| SweepRecord::new(r, phi, s))
                .collect(),
        })
        .collect();
    for i in &instants {
        if let Some(leak) = i.truncation_leak {
            writeln!(stderr, "warning: t = {}: population {leak:e} on the Fock cutoff edge", i.t)?;
        }
    }
    let body = match a.output.format {
        Format::Json => {
            let config = EvolveConfig {
                n: a.n,
                coupling: a.coupling,
                detuning: a.detuning,
                n_cut,
                times,
                grid: spec,
            };
            output::json("evolve", &config, &instants)?
        }
        _ => {
            let rows: Vec<(Vec<String>, SweepRecord)> = instants
                .iter()
                .flat_map(|i| {
                    let prefix = vec![
                        output::real(i.t),
                        output::real(i.lambda_t),
                        output::real(i.concurrence),
                        i.single_point.to_string(),
                    ];
                    i.samples.iter().map(move |s| (prefix.clone(), s.clone()))
                })
                .collect();
            output::csv_with_prefix(&["t", "lambda_t", "concurrence", "single_point"], &rows)
        }
    };
    emit(&a.output, stdout, &body)
}

#[derive(Debug, Serialize)]
struct TwoQubitRecord {
    m: [f64; 3],
    x: [f64; 3],
}

#[derive(Debug, Serialize)]
struct TwoQubitConfig {
    a: [f64; 3],
    b: [f64; 3],
    t: [[f64; 3]; 3],
    samples: usize,
}

fn twoqubit(a: &args::TwoQubitArgs, stdout: &mut dyn Write) -> Result<()> {
    let theta = TwoQubitTheta::new(a.a, a.b, a.t)?;
    let xs = two_qubit_ellipsoid(&theta, a.samples)?;
    let ms = hetsteer_core::steering::fibonacci_sphere::<f64>(a.samples);
    let body = match a.output.format {
        Format::Csv => {
            let mut s = String::from("m1,m2,m3,x1,x2,x3\n");
            for (m, x) in ms.iter().zip(&xs) {
                let row: Vec<String> = m.iter().chain(&x.to_array()).map(|v| output::real(*v)).collect();
                s.push_str(&row.join(","));
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let records: Vec<_> = ms
                .iter()
                .zip(&xs)
                .map(|(m, x)| TwoQubitRecord { m: *m, x: x.to_array() })
                .collect();
            let config = TwoQubitConfig {
                a: a.a,
                b: a.b,
                t: a.t,
                samples: a.samples,
            };
            output::json("twoqubit", &config, &records)?
        }
        Format::Ply => {
            let w = 1.0 / a.samples as f64;
            let pts: Vec<(BlochVector<f64>, f64, bool)> = xs.iter().map(|x| (*x, w, true)).collect();
            output::ply(&pts, "hetsteer twoqubit")
        }
    };
    emit(&a.output, stdout, &body)
}

/// Runs a parsed command line and returns the process exit status.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Steer(a) => steer(a, stdout),
        Command::Sweep(a) => run_sweep(a, stdout),
        Command::Evolve(a) => evolve(a, stdout, stderr),
        Command::Twoqubit(a) => twoqubit(a, stdout),
        Command::Validate => {
            let report = run_validation();
            let _ = writeln!(stdout, "{report}");
            return if report.all_passed() { 0 } else { 1 };
        }
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::ZeroProbabilityOutcome(_)) => 3,
                _ => 1,
            }
        }
    }
}
