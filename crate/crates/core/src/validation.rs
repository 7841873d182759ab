//! Cross-checks of the trace-based numeric engine against the closed forms,
//! packaged as a self-contained report.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_8, PI};
use std::time::{Duration, Instant};

use num_complex::Complex;

use crate::analytic::{
    bell_bloch, bell_raw_overlap, coherent_pair_bloch, example_bloch, jc_bloch, jc_concurrence,
    mixed_bloch, product_bloch, theta_overlap_integrals,
};
use crate::dynamics::{jc_closed_form_state, jc_propagate, JCModel};
use crate::error::Result;
use crate::hilbert::{coherent_state, pure_state_concurrence, BlochVector};
use crate::states::{CoherentPairParam, ExampleState, JCParam, MixedStateParam};
use crate::steering::{
    conditioned_operators, heterodyne_steer, no_signalling_residual, sweep, two_qubit_ellipsoid,
    SteeringSample, SweepGrid, TwoQubitTheta,
};

/// Closed-form map used by [`check_mixed_closed_form`]; swappable so a
/// corrupted implementation can be shown to fail.
pub type MixedClosedForm = fn(MixedStateParam<f64>, f64, f64) -> Result<BlochVector<f64>>;

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    /// Measured quantity (an error, or a distance for threshold checks).
    pub value: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub checks: Vec<CheckOutcome>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "[{}] {:<34} value = {:<12.3e} tol = {:<9.1e} ({:.2?}) {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.value,
                c.tolerance,
                c.elapsed,
                c.detail
            )?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// Radii `0..=3` in steps of 0.1 times 16 angles.
pub fn standard_grid() -> SweepGrid<f64> {
    SweepGrid::uniform(3.0, 31, 16).expect("valid grid")
}

/// Wide logarithmic grid used for the mixed-state set shape checks.
pub fn wide_grid(n_r: usize, n_phi: usize) -> SweepGrid<f64> {
    SweepGrid::log_radial(30.0, n_r, n_phi).expect("valid grid")
}

fn below(name: &'static str, value: f64, tolerance: f64, detail: String, start: Instant) -> CheckOutcome {
    CheckOutcome {
        name,
        value,
        tolerance,
        passed: value.is_finite() && value < tolerance,
        detail,
        elapsed: start.elapsed(),
    }
}

fn above(name: &'static str, value: f64, threshold: f64, detail: String, start: Instant) -> CheckOutcome {
    CheckOutcome {
        name,
        value,
        tolerance: threshold,
        passed: value.is_finite() && value > threshold,
        detail,
        elapsed: start.elapsed(),
    }
}

fn failed(name: &'static str, tolerance: f64, err: impl std::fmt::Display, start: Instant) -> CheckOutcome {
    CheckOutcome {
        name,
        value: f64::NAN,
        tolerance,
        passed: false,
        detail: format!("error: {err}"),
        elapsed: start.elapsed(),
    }
}

/// Max deviation between the numeric steered points of `case` and `closed`
/// over `grid`, skipping points where the closed form is degenerate.
fn closed_form_error(
    case: &ExampleState<f64>,
    n_cut: usize,
    grid: &SweepGrid<f64>,
    closed: impl Fn(Complex<f64>) -> Result<BlochVector<f64>>,
) -> Result<(f64, usize)> {
    let f = conditioned_operators(&case.joint_state(n_cut)?);
    let mut worst = 0.0f64;
    let mut compared = 0;
    for s in sweep(&f, grid) {
        if let (true, Ok(x)) = (s.is_ok(), closed(s.beta)) {
            worst = worst.max(s.bloch.max_abs_diff(x));
            compared += 1;
        }
    }
    Ok((worst, compared))
}

pub fn check_coherent_overlap() -> CheckOutcome {
    let start = Instant::now();
    let name = "coherent_overlap_law";
    let moduli = [0.0, 0.75, 1.5, 2.25, 3.0];
    let mut amps = Vec::new();
    for (k, &m) in moduli.iter().enumerate() {
        amps.push(Complex::from_polar(m, 0.9 * k as f64));
    }
    let mut worst = 0.0f64;
    for &a in &amps {
        for &b in &amps {
            let (va, vb) = match (coherent_state(a, 60), coherent_state(b, 60)) {
                (Ok(x), Ok(y)) => (x, y),
                (Err(e), _) | (_, Err(e)) => return failed(name, 1e-10, e, start),
            };
            let ov = va.inner(&vb).map(|z| z.norm_sqr()).unwrap_or(f64::NAN);
            worst = worst.max((ov - (-(a - b).norm_sqr()).exp()).abs());
        }
    }
    below(name, worst, 1e-10, "5x5 amplitude grid, n_cut = 60".into(), start)
}

pub fn check_bell_surface() -> CheckOutcome {
    let start = Instant::now();
    let name = "bell_surface_law";
    let rho = match ExampleState::Bell.joint_state(60) {
        Ok(r) => r,
        Err(e) => return failed(name, 1e-9, e, start),
    };
    let f = conditioned_operators(&rho);
    let grid = SweepGrid::uniform(3.0, 200, 64).expect("valid grid");
    let samples = sweep(&f, &grid);
    let flagged = samples.iter().filter(|s| !s.is_ok()).count();
    let worst = samples
        .iter()
        .filter(|s| s.is_ok())
        .map(|s| (s.bloch.norm_sqr() - 1.0f64).abs())
        .fold(0.0, f64::max);
    let value = if flagged > 0 { f64::INFINITY } else { worst };
    below(name, value, 1e-9, format!("200x64 grid, r <= 3, {flagged} flagged"), start)
}

pub fn check_bell_raw_overlap() -> CheckOutcome {
    let start = Instant::now();
    let name = "bell_projection_probability";
    let f = match ExampleState::Bell.joint_state(60) {
        Ok(r) => conditioned_operators(&r),
        Err(e) => return failed(name, 1e-10, e, start),
    };
    let mut worst = 0.0f64;
    for r in [0.0f64, 0.5, 1.0, 2.0, 3.0] {
        match heterodyne_steer(&f, Complex::new(r, 0.0)) {
            Ok(s) => worst = worst.max((s.raw_overlap - bell_raw_overlap(r)).abs()),
            Err(e) => return failed(name, 1e-10, e, start),
        }
    }
    below(name, worst, 1e-10, "r in {0, 0.5, 1, 2, 3}".into(), start)
}

pub fn check_bell_closed_form() -> CheckOutcome {
    let start = Instant::now();
    let name = "bell_closed_form";
    match closed_form_error(&ExampleState::Bell, 60, &standard_grid(), |b| {
        Ok(bell_bloch(b.norm(), b.im.atan2(b.re)))
    }) {
        Ok((e, n)) => below(name, e, 1e-8, format!("{n} points"), start),
        Err(e) => failed(name, 1e-8, e, start),
    }
}

pub fn check_product_constant() -> CheckOutcome {
    let start = Instant::now();
    let name = "product_constant_point";
    let mut worst = 0.0f64;
    for n in 0..3 {
        match closed_form_error(&ExampleState::Product { n }, 24, &standard_grid(), |_| Ok(product_bloch())) {
            Ok((e, _)) => worst = worst.max(e),
            Err(e) => return failed(name, 1e-8, e, start),
        }
    }
    below(name, worst, 1e-8, "n = 0, 1, 2".into(), start)
}

/// Numeric mixed-state steering against `closed` for p in {0.1, 0.3, 0.5, 0.9},
/// including the `r = 0` point `(0, 0, -1)`.
pub fn check_mixed_closed_form(closed: MixedClosedForm) -> CheckOutcome {
    let start = Instant::now();
    let name = "mixed_closed_form";
    let mut worst = 0.0f64;
    for p in [0.1, 0.3, 0.5, 0.9] {
        let param = match MixedStateParam::new(p) {
            Ok(v) => v,
            Err(e) => return failed(name, 1e-9, e, start),
        };
        let case = ExampleState::Mixed(param);
        match closed_form_error(&case, 24, &standard_grid(), |b| closed(param, b.norm(), b.im.atan2(b.re))) {
            Ok((e, _)) => worst = worst.max(e),
            Err(e) => return failed(name, 1e-9, e, start),
        }
        let origin = case
            .joint_state(24)
            .map(|r| conditioned_operators(&r))
            .and_then(|f| heterodyne_steer(&f, Complex::new(0.0, 0.0)));
        match origin {
            Ok(s) => worst = worst.max(s.bloch.max_abs_diff(BlochVector::new(0.0, 0.0, -1.0))),
            Err(e) => return failed(name, 1e-9, e, start),
        }
    }
    below(name, worst, 1e-9, "p in {0.1, 0.3, 0.5, 0.9}".into(), start)
}

fn mixed_cloud(p: f64, grid: &SweepGrid<f64>) -> Result<Vec<BlochVector<f64>>> {
    let case = ExampleState::Mixed(MixedStateParam::new(p)?);
    let f = conditioned_operators(&case.joint_state(24)?);
    Ok(sweep(&f, grid)
        .into_iter()
        .filter(SteeringSample::is_ok)
        .map(|s| s.bloch)
        .collect())
}

/// Smallest distance from `p` to any point of `cloud`.
pub fn distance_to_cloud(p: BlochVector<f64>, cloud: &[BlochVector<f64>]) -> f64 {
    cloud.iter().map(|q| p.distance(*q)).fold(f64::INFINITY, f64::min)
}

/// Symmetric Hausdorff distance between two point clouds.
pub fn hausdorff(a: &[BlochVector<f64>], b: &[BlochVector<f64>]) -> f64 {
    let directed = |x: &[BlochVector<f64>], y: &[BlochVector<f64>]| {
        x.iter().map(|p| distance_to_cloud(*p, y)).fold(0.0, f64::max)
    };
    directed(a, b).max(directed(b, a))
}

/// Best midpoint witness among pairs of an evenly spaced subset of `cloud`:
/// the largest distance from a pair midpoint to the cloud.
pub fn nonconvexity_witness(cloud: &[BlochVector<f64>], candidates: usize) -> (f64, BlochVector<f64>, BlochVector<f64>) {
    let stride = (cloud.len() / candidates.max(1)).max(1);
    let picks: Vec<BlochVector<f64>> = cloud.iter().step_by(stride).copied().collect();
    let mut best = (0.0, BlochVector::default(), BlochVector::default());
    for (i, a) in picks.iter().enumerate() {
        for b in &picks[i + 1..] {
            let d = distance_to_cloud(a.midpoint(*b), cloud);
            if d > best.0 {
                best = (d, *a, *b);
            }
        }
    }
    best
}

pub fn check_mixed_far_point() -> CheckOutcome {
    let start = Instant::now();
    let name = "mixed_reaches_plus_x";
    match mixed_cloud(0.3, &wide_grid(400, 64)) {
        Ok(cloud) => {
            let d = distance_to_cloud(product_bloch(), &cloud);
            below(name, d, 0.02, "p = 0.3, r <= 30".into(), start)
        }
        Err(e) => failed(name, 0.02, e, start),
    }
}

pub fn check_mixed_nonconvex() -> CheckOutcome {
    let start = Instant::now();
    let name = "mixed_nonconvexity_witness";
    match mixed_cloud(0.3, &wide_grid(400, 64)) {
        Ok(cloud) => {
            let (d, a, b) = nonconvexity_witness(&cloud, 40);
            above(
                name,
                d,
                0.05,
                format!(
                    "midpoint of ({:.3},{:.3},{:.3}) and ({:.3},{:.3},{:.3})",
                    a.x1, a.x2, a.x3, b.x1, b.x2, b.x3
                ),
                start,
            )
        }
        Err(e) => failed(name, 0.05, e, start),
    }
}

pub fn check_mixed_shape_difference() -> CheckOutcome {
    let start = Instant::now();
    let name = "mixed_shape_depends_on_p";
    let grid = wide_grid(100, 32);
    match (mixed_cloud(0.3, &grid), mixed_cloud(0.9, &grid)) {
        (Ok(a), Ok(b)) => above(name, hausdorff(&a, &b), 0.1, "Hausdorff(p=0.3, p=0.9)".into(), start),
        (Err(e), _) | (_, Err(e)) => failed(name, 0.1, e, start),
    }
}

pub fn coherent_pair_cases() -> Vec<CoherentPairParam<f64>> {
    [
        (Complex::new(1.0, 0.0), Complex::new(-1.0, 0.0)),
        (Complex::new(0.0, 2.0), Complex::new(1.0, 0.0)),
        (Complex::new(0.5, 0.0), Complex::new(0.5, 0.0)),
    ]
    .into_iter()
    .map(|(g, gp)| CoherentPairParam::new(g, gp).expect("finite"))
    .collect()
}

pub fn check_coherent_pair() -> CheckOutcome {
    let start = Instant::now();
    let name = "coherent_pair_closed_form";
    let mut worst = 0.0f64;
    let mut norm_dev = 0.0f64;
    for param in coherent_pair_cases() {
        let case = ExampleState::CoherentPair(param);
        let f = match case.joint_state(60) {
            Ok(r) => conditioned_operators(&r),
            Err(e) => return failed(name, 1e-8, e, start),
        };
        for s in sweep(&f, &standard_grid()) {
            match coherent_pair_bloch(param, s.beta) {
                Ok(x) if s.is_ok() => {
                    worst = worst.max(s.bloch.max_abs_diff(x));
                    norm_dev = norm_dev.max((s.bloch.norm_sqr() - 1.0f64).abs());
                }
                Ok(_) => return failed(name, 1e-8, "unexpected zero-probability outcome", start),
                Err(e) => return failed(name, 1e-8, e, start),
            }
        }
    }
    // unit-norm law has its own tolerance; fold it in as a scaled error
    let value = worst.max(norm_dev * 10.0);
    below(
        name,
        value,
        1e-8,
        format!("max diff {worst:.2e}, max |X|^2-1 {norm_dev:.2e}"),
        start,
    )
}

/// 16 values of λt avoiding the degenerate instants `k π / (2√n)`.
pub fn jc_lambda_t_values(n: usize) -> Vec<f64> {
    let period = FRAC_PI_2 / (n as f64).sqrt();
    (0..16).map(|k| period * (0.07 + 0.25 * k as f64)).collect()
}

pub fn check_jc_propagator() -> CheckOutcome {
    let start = Instant::now();
    let name = "jc_propagator_vs_closed_form";
    let n_cut = 24;
    let mut worst = 0.0f64;
    let lambda = 1.0;
    let model = match JCModel::resonant(lambda, n_cut) {
        Ok(m) => m,
        Err(e) => return failed(name, 1e-12, e, start),
    };
    for n in 1..4 {
        let init = match jc_closed_form_state(n, 0.0, n_cut) {
            Ok(s) => s,
            Err(e) => return failed(name, 1e-12, e, start),
        };
        for lt in jc_lambda_t_values(n) {
            let pair = jc_propagate(&model, &init, lt / lambda)
                .and_then(|p| Ok((p, jc_closed_form_state(n, lt, n_cut)?)));
            match pair {
                Ok((p, exact)) => {
                    let d = (p.state.matrix() - exact.matrix())
                        .iter()
                        .map(|z| z.norm())
                        .fold(0.0, f64::max);
                    worst = worst.max(d);
                }
                Err(e) => return failed(name, 1e-12, e, start),
            }
        }
    }
    below(name, worst, 1e-12, "n = 1, 2, 3; 16 values of lambda*t".into(), start)
}

pub fn check_jc_steering() -> CheckOutcome {
    let start = Instant::now();
    let name = "jc_closed_form_steering";
    let n_cut = 24;
    let model = match JCModel::resonant(1.0, n_cut) {
        Ok(m) => m,
        Err(e) => return failed(name, 1e-8, e, start),
    };
    let grid = standard_grid();
    let mut worst = 0.0f64;
    for n in 1..4 {
        let init = match jc_closed_form_state(n, 0.0, n_cut) {
            Ok(s) => s,
            Err(e) => return failed(name, 1e-8, e, start),
        };
        for lt in jc_lambda_t_values(n) {
            let param = JCParam::new(n, lt).expect("valid");
            let f = match jc_propagate(&model, &init, lt) {
                Ok(p) => conditioned_operators(&p.state),
                Err(e) => return failed(name, 1e-8, e, start),
            };
            for s in sweep(&f, &grid).into_iter().filter(|s| s.is_ok()) {
                if let Ok(x) = jc_bloch(param, s.beta.norm(), s.beta.im.atan2(s.beta.re)) {
                    worst = worst.max(s.bloch.max_abs_diff(x));
                }
            }
        }
    }
    below(name, worst, 1e-8, "propagated states, n = 1, 2, 3".into(), start)
}

pub fn check_jc_concurrence() -> CheckOutcome {
    let start = Instant::now();
    let name = "jc_concurrence";
    let n_cut = 24;
    let model = match JCModel::resonant(1.0, n_cut) {
        Ok(m) => m,
        Err(e) => return failed(name, 1e-10, e, start),
    };
    let mut worst = 0.0f64;
    for n in 1..4 {
        let init = jc_closed_form_state(n, 0.0, n_cut).expect("n < n_cut");
        let mut lts = jc_lambda_t_values(n);
        lts.extend((0..=8).map(|k| k as f64 * PI / 8.0));
        for lt in lts {
            match jc_propagate(&model, &init, lt) {
                Ok(p) => {
                    let c = pure_state_concurrence(&p.state);
                    let exact = jc_concurrence(JCParam::new(n, lt).expect("valid"));
                    worst = worst.max((c - exact).abs());
                }
                Err(e) => return failed(name, 1e-10, e, start),
            }
        }
    }
    below(name, worst, 1e-10, "|sin(2 sqrt(n) lambda t)|".into(), start)
}

/// The shipped example states with their cutoffs.
pub fn example_cases() -> Vec<(ExampleState<f64>, usize)> {
    let mut v = vec![
        (ExampleState::Bell, 60),
        (ExampleState::Product { n: 1 }, 24),
        (ExampleState::Mixed(MixedStateParam::new(0.5).expect("valid")), 24),
        (ExampleState::JaynesCummings(JCParam::new(1, FRAC_PI_8).expect("valid")), 24),
        (ExampleState::JaynesCummings(JCParam::new(3, 0.4).expect("valid")), 24),
    ];
    v.extend(
        coherent_pair_cases()
            .into_iter()
            .map(|c| (ExampleState::CoherentPair(c), 60)),
    );
    v
}

pub fn check_overlap_integrals() -> CheckOutcome {
    let start = Instant::now();
    let name = "overlap_integral_identity";
    let grid = SweepGrid::uniform(3.0, 31, 16).expect("valid grid");
    let mut worst = 0.0f64;
    for (case, n_cut) in example_cases() {
        let f = match case.joint_state(n_cut) {
            Ok(r) => conditioned_operators(&r),
            Err(e) => return failed(name, 1e-9, e, start),
        };
        for (r, phi) in grid.points() {
            let beta = Complex::from_polar(r, phi);
            let numeric = f.expectations(beta);
            let closed = theta_overlap_integrals(&case, beta);
            for nu in 0..4 {
                worst = worst.max((0.5 * numeric[nu] - closed[nu]).abs());
            }
        }
    }
    below(name, worst, 1e-9, "all example states, r <= 3".into(), start)
}

pub fn check_analytic_equivalence() -> CheckOutcome {
    let start = Instant::now();
    let name = "analytic_numeric_equivalence";
    let mut worst = 0.0f64;
    for (case, n_cut) in example_cases() {
        match closed_form_error(&case, n_cut, &standard_grid(), |b| example_bloch(&case, b)) {
            Ok((e, _)) => worst = worst.max(e),
            Err(e) => return failed(name, 1e-8, e, start),
        }
    }
    below(name, worst, 1e-8, "all example states".into(), start)
}

pub fn check_no_signalling() -> CheckOutcome {
    let start = Instant::now();
    let name = "no_signalling_quadrature";
    let grid = SweepGrid::uniform(6.0, 200, 64).expect("valid grid");
    let fine = SweepGrid::uniform(6.0, 399, 128).expect("valid grid");
    let mut worst = 0.0f64;
    let mut refined_ok = true;
    for (case, n_cut) in example_cases() {
        let f = match case.joint_state(n_cut) {
            Ok(r) => conditioned_operators(&r),
            Err(e) => return failed(name, 1e-3, e, start),
        };
        let coarse = no_signalling_residual(&f, &grid).max_error();
        let refined = no_signalling_residual(&f, &fine).max_error();
        worst = worst.max(coarse);
        refined_ok &= refined <= coarse;
    }
    let value = if refined_ok { worst } else { f64::INFINITY };
    below(
        name,
        value,
        1e-3,
        format!("r_max = 6, 200x64; refinement reduces error: {refined_ok}"),
        start,
    )
}

pub fn check_analytic_surface() -> CheckOutcome {
    let start = Instant::now();
    let name = "analytic_surface_law";
    // Weyl sequences give a reproducible spread of parameters.
    let frac = |k: usize, a: f64| (k as f64 * a).fract();
    let mut worst = 0.0f64;
    for k in 1..=1000 {
        let r = 4.0 * frac(k, 0.618_033_988_749_895);
        let phi = 2.0 * PI * frac(k, 0.414_213_562_373_095);
        worst = worst.max((bell_bloch(r, phi).norm() - 1.0).abs());
        let g = Complex::from_polar(3.0 * frac(k, 0.732_050_807_568_877), 7.0 * frac(k, 0.236_067_977_499_79));
        let gp = Complex::from_polar(3.0 * frac(k, 0.302_775_637_731_995), 7.0 * frac(k, 0.645_751_311_064_591));
        let beta = Complex::from_polar(r, phi);
        if let Ok(x) = coherent_pair_bloch(CoherentPairParam::new(g, gp).expect("finite"), beta) {
            worst = worst.max((x.norm() - 1.0).abs());
        }
        let n = 1 + k % 4;
        let lt = 5.0 * frac(k, 0.162_277_660_168_379);
        if let Ok(x) = jc_bloch(JCParam::new(n, lt).expect("valid"), r, phi) {
            worst = worst.max((x.norm() - 1.0).abs());
        }
    }
    below(name, worst, 1e-12, "1000 parameter draws".into(), start)
}

pub fn check_two_qubit() -> CheckOutcome {
    let start = Instant::now();
    let name = "two_qubit_ellipsoid";
    let entangled = TwoQubitTheta::new(
        [0.0; 3],
        [0.0; 3],
        [[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 1.0]],
    );
    let a = [0.1, -0.2, 0.3];
    let uncorrelated = TwoQubitTheta::new(a, [0.0; 3], [[0.0; 3]; 3]);
    let (ent, unc) = match (entangled, uncorrelated) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => return failed(name, 1e-9, e, start),
    };
    let (pe, pu) = match (two_qubit_ellipsoid(&ent, 500), two_qubit_ellipsoid(&unc, 500)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => return failed(name, 1e-9, e, start),
    };
    let norm_err = pe.iter().map(|x| (x.norm() - 1.0f64).abs()).fold(0.0, f64::max);
    let const_err = pu
        .iter()
        .map(|x| x.max_abs_diff(BlochVector::from_array(a)))
        .fold(0.0, f64::max);
    below(name, norm_err.max(const_err), 1e-9, "500 Fibonacci samples".into(), start)
}

/// Runs every check.
pub fn run_validation() -> ValidationReport {
    let checks = vec![
        check_coherent_overlap(),
        check_bell_surface(),
        check_bell_raw_overlap(),
        check_bell_closed_form(),
        check_product_constant(),
        check_mixed_closed_form(mixed_bloch),
        check_mixed_far_point(),
        check_mixed_nonconvex(),
        check_mixed_shape_difference(),
        check_coherent_pair(),
        check_jc_propagator(),
        check_jc_steering(),
        check_jc_concurrence(),
        check_overlap_integrals(),
        check_analytic_equivalence(),
        check_analytic_surface(),
        check_no_signalling(),
        check_two_qubit(),
    ];
    ValidationReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flipped(p: MixedStateParam<f64>, r: f64, phi: f64) -> Result<BlochVector<f64>> {
        let x = mixed_bloch(p, r, phi)?;
        Ok(BlochVector::new(x.x1, -x.x2, x.x3))
    }

    #[test]
    fn sign_flip_is_caught() {
        let out = check_mixed_closed_form(flipped);
        assert_eq!(out.name, "mixed_closed_form");
        assert!(!out.passed, "{out:?}");
        assert!(check_mixed_closed_form(mixed_bloch).passed);
    }

    #[test]
    fn hausdorff_basics() {
        let a = [BlochVector::new(0.0, 0.0, 0.0)];
        let b = [BlochVector::new(0.0, 0.0, 0.0), BlochVector::new(0.0, 0.3, 0.4)];
        assert_eq!(hausdorff(&a, &b), 0.5);
        assert_eq!(hausdorff(&b, &b), 0.0);
    }
}
