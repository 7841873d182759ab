//! Jaynes–Cummings evolution in the interaction picture.
//!
//! The coupling `λ(σ₊a + σ₋a†)` plus a detuning term `(Δ/2)σ_z` only mixes
//! `|0, n-1⟩` with `|1, n⟩`, so the propagator is a direct sum of 2×2 Rabi
//! rotations. `|1, 0⟩` is uncoupled. `|0, n_cut-1⟩` would couple to the
//! truncated `|1, n_cut⟩`; it is kept frozen and any population there is
//! reported as a truncation leak.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::hilbert::{hermitize, pure_state_concurrence, CMatrix, JointState};
use crate::scalar::{c, Real};
use crate::steering::{conditioned_operators, sweep, SteeringSample, SweepGrid};

/// Population on the frozen edge level above which a leak is reported.
pub const LEAK_THRESHOLD: f64 = 1e-10;

/// Concurrence below which a trajectory instant counts as a product state.
pub const PRODUCT_CONCURRENCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JCModel<T> {
    coupling_lambda: T,
    detuning: T,
    n_cut: usize,
}

impl<T: Real> JCModel<T> {
    /// `detuning = ω₀ - ω`; zero is the resonant case.
    pub fn new(coupling_lambda: T, detuning: T, n_cut: usize) -> Result<Self> {
        if !(coupling_lambda > T::zero()) || !coupling_lambda.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "coupling must be > 0, got {coupling_lambda}"
            )));
        }
        if !detuning.is_finite() {
            return Err(Error::InvalidParameter("detuning must be finite".into()));
        }
        if n_cut < 2 {
            return Err(Error::InvalidCutoff { got: n_cut, min: 2 });
        }
        Ok(Self {
            coupling_lambda,
            detuning,
            n_cut,
        })
    }

    pub fn resonant(coupling_lambda: T, n_cut: usize) -> Result<Self> {
        Self::new(coupling_lambda, T::zero(), n_cut)
    }

    pub fn coupling_lambda(&self) -> T {
        self.coupling_lambda
    }

    pub fn detuning(&self) -> T {
        self.detuning
    }

    pub fn n_cut(&self) -> usize {
        self.n_cut
    }
}

/// `cos(√n λt)|1,n⟩ - i sin(√n λt)|0,n-1⟩` as a density matrix.
pub fn jc_closed_form_state<T: Real>(n: usize, lambda_t: T, n_cut: usize) -> Result<JointState<T>> {
    if n < 1 {
        return Err(Error::InvalidParameter("photon number must be >= 1".into()));
    }
    if n >= n_cut {
        return Err(Error::IndexOutOfRange { index: n, n_cut });
    }
    let (s, co) = (T::lit(n as f64).sqrt() * lambda_t).sin_cos();
    let mut psi = vec![Complex::zero(); 2 * n_cut];
    psi[n_cut + n] = c(co, T::zero());
    psi[n - 1] = c(T::zero(), -s);
    JointState::from_pure_vector(&psi, n_cut)
}

/// Result of [`jc_propagate`].
#[derive(Debug, Clone)]
pub struct Propagation<T: Real> {
    pub state: JointState<T>,
    /// Population on `|0, n_cut-1⟩` when it exceeds [`LEAK_THRESHOLD`].
    pub truncation_leak: Option<T>,
}

enum Step<T> {
    Rabi {
        lo: usize,
        hi: usize,
        u: [[Complex<T>; 2]; 2],
    },
    Phase {
        idx: usize,
        phase: Complex<T>,
    },
}

fn propagator<T: Real>(model: &JCModel<T>, t: T) -> Vec<Step<T>> {
    let n_cut = model.n_cut;
    let half_delta = model.detuning * T::lit(0.5);
    let mut steps = Vec::with_capacity(n_cut + 1);
    for n in 1..n_cut {
        let g = model.coupling_lambda * T::lit(n as f64).sqrt();
        let omega = (half_delta * half_delta + g * g).sqrt();
        let (sn, cs) = (omega * t).sin_cos();
        let k = sn / omega;
        // exp(-iHt) = cos(Ωt) - i sin(Ωt)/Ω H, H = [[Δ/2, g], [g, -Δ/2]]
        let u = [
            [c(cs, -k * half_delta), c(T::zero(), -k * g)],
            [c(T::zero(), -k * g), c(cs, k * half_delta)],
        ];
        steps.push(Step::Rabi {
            lo: n - 1,
            hi: n_cut + n,
            u,
        });
    }
    let (s, co) = (half_delta * t).sin_cos();
    steps.push(Step::Phase {
        idx: n_cut,
        phase: c(co, s),
    });
    steps.push(Step::Phase {
        idx: n_cut - 1,
        phase: c(co, -s),
    });
    steps
}

/// Evolves `initial` for time `t` under the (possibly detuned) interaction.
pub fn jc_propagate<T: Real>(
    model: &JCModel<T>,
    initial: &JointState<T>,
    t: T,
) -> Result<Propagation<T>> {
    if initial.n_cut() != model.n_cut {
        return Err(Error::DimensionMismatch {
            expected: model.n_cut,
            got: initial.n_cut(),
        });
    }
    if !t.is_finite() || t < T::zero() {
        return Err(Error::InvalidParameter(format!("time must be finite and >= 0, got {t}")));
    }
    let steps = propagator(model, t);
    let mut m: CMatrix<T> = initial.matrix().clone();
    let dim = m.nrows();
    // rows: U ρ
    for step in &steps {
        match *step {
            Step::Rabi { lo, hi, u } => {
                for col in 0..dim {
                    let a = m[(lo, col)];
                    let b = m[(hi, col)];
                    m[(lo, col)] = u[0][0] * a + u[0][1] * b;
                    m[(hi, col)] = u[1][0] * a + u[1][1] * b;
                }
            }
            Step::Phase { idx, phase } => {
                for col in 0..dim {
                    m[(idx, col)] *= phase;
                }
            }
        }
    }
    // columns: (U ρ) U†
    for step in &steps {
        match *step {
            Step::Rabi { lo, hi, u } => {
                for row in 0..dim {
                    let a = m[(row, lo)];
                    let b = m[(row, hi)];
                    m[(row, lo)] = a * u[0][0].conj() + b * u[0][1].conj();
                    m[(row, hi)] = a * u[1][0].conj() + b * u[1][1].conj();
                }
            }
            Step::Phase { idx, phase } => {
                let pc = phase.conj();
                for row in 0..dim {
                    m[(row, idx)] *= pc;
                }
            }
        }
    }
    hermitize(&mut m);
    let edge = model.n_cut - 1;
    let leak = m[(edge, edge)].re;
    let purity = initial.purity_flag();
    Ok(Propagation {
        state: JointState::from_matrix(m, model.n_cut, purity)?,
        truncation_leak: (leak > T::lit(LEAK_THRESHOLD)).then_some(leak),
    })
}

/// One instant of a steering trajectory.
#[derive(Debug, Clone)]
pub struct TrajectoryPoint<T: Real> {
    pub t: T,
    pub samples: Vec<SteeringSample<T>>,
    pub concurrence: T,
    /// The joint state is a product here, so the steering set is one point.
    pub single_point: bool,
    pub truncation_leak: Option<T>,
}

/// Propagates `|1, n⟩` to each time and sweeps the resulting steering map.
pub fn steering_trajectory<T: Real>(
    model: &JCModel<T>,
    n: usize,
    times: &[T],
    grid: &SweepGrid<T>,
) -> Result<Vec<TrajectoryPoint<T>>> {
    let initial = jc_closed_form_state(n, T::zero(), model.n_cut)?;
    times
        .iter()
        .map(|&t| {
            let prop = jc_propagate(model, &initial, t)?;
            let f = conditioned_operators(&prop.state);
            let concurrence = pure_state_concurrence(&prop.state);
            Ok(TrajectoryPoint {
                t,
                samples: sweep(&f, grid),
                concurrence,
                single_point: concurrence < T::lit(PRODUCT_CONCURRENCE),
                truncation_leak: prop.truncation_leak,
            })
        })
        .collect()
}
