//! Steering maps: conditioned field operators, heterodyne-steered Bloch
//! vectors, coherent-projection mixtures, β-plane sweeps, the no-signalling
//! quadrature and the two-qubit reference ellipsoid.
//!
//! A heterodyne outcome `β` steers the qubit to the Bloch vector
//! `X_j = ⟨β|F_j|β⟩ / ⟨β|F_0|β⟩` with `F_ν = Tr_S(ρ (σ_ν ⊗ 1))`.
//!
//! Coherent amplitudes are evaluated in log-scaled form: `⟨n|β⟩` is written as
//! `exp(s - |β|²/2) z_n` with `max |z_n| = 1` over the rows the operators
//! touch, so the Bloch ratio stays exact far out in the β plane where the
//! unscaled overlaps underflow.

use num_complex::Complex;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hilbert::{
    hermitize, min_eigenvalue, trace, BlochVector, CMatrix, JointState,
};
use crate::scalar::{c, is_finite, Amplitude, Real};

/// Below this (scale-normalized) value of `⟨β|F_0|β⟩` the steered state is undefined.
pub const ZERO_PROBABILITY_THRESHOLD: f64 = 1e-14;

/// The four field operators `F_ν = Tr_S(ρ (σ_ν ⊗ 1))`, ν = 0..3.
#[derive(Debug, Clone)]
pub struct ConditionedOperators<T: Real> {
    ops: [CMatrix<T>; 4],
    // diagonal and strictly-upper nonzeros of each operator
    entries: [Vec<(usize, usize, Complex<T>)>; 4],
    support: usize,
}

/// Quadratic forms `⟨β|F_ν|β⟩ = exp(log_scale) * scaled[ν]`.
#[derive(Debug, Clone, Copy)]
struct ScaledForms<T> {
    scaled: [T; 4],
    log_scale: T,
}

impl<T: Real> ConditionedOperators<T> {
    pub fn n_cut(&self) -> usize {
        self.ops[0].nrows()
    }

    /// `F_ν` for ν in 0..4.
    pub fn get(&self, nu: usize) -> &CMatrix<T> {
        &self.ops[nu]
    }

    /// `Tr F_ν`; for ν = 1..3 this is the reduced qubit Bloch component.
    pub fn trace(&self, nu: usize) -> T {
        trace(&self.ops[nu]).re
    }

    /// One past the highest Fock index any `F_ν` touches.
    pub fn support(&self) -> usize {
        self.support
    }

    /// Unscaled `⟨β|F_ν|β⟩`.
    pub fn expectations(&self, beta: Amplitude<T>) -> [T; 4] {
        let f = self.scaled_forms(beta);
        let k = f.log_scale.exp();
        f.scaled.map(|q| q * k)
    }

    fn scaled_forms(&self, beta: Amplitude<T>) -> ScaledForms<T> {
        let (z, s) = scaled_coherent(beta, self.support);
        let mut out = [T::zero(); 4];
        for (nu, entries) in self.entries.iter().enumerate() {
            let mut diag = T::zero();
            let mut off = Complex::<T>::zero();
            for &(i, j, v) in entries {
                if i == j {
                    diag += v.re * z[i].norm_sqr();
                } else {
                    off += z[i].conj() * v * z[j];
                }
            }
            out[nu] = diag + T::lit(2.0) * off.re;
        }
        ScaledForms {
            scaled: out,
            log_scale: T::lit(2.0) * s - beta.norm_sqr(),
        }
    }
}

/// Scaled coherent components `z_n` (n < len) and the log scale `s`, with
/// `⟨n|β⟩ = exp(s - |β|²/2) z_n`.
fn scaled_coherent<T: Real>(beta: Amplitude<T>, len: usize) -> (Vec<Complex<T>>, T) {
    let r = beta.norm();
    let mut z = vec![Complex::zero(); len];
    if len == 0 {
        return (z, T::zero());
    }
    if r == T::zero() {
        z[0] = c(T::one(), T::zero());
        return (z, T::zero());
    }
    let ln_r = r.ln();
    let phi = beta.im.atan2(beta.re);
    let mut ln_fact = T::zero();
    let logs: Vec<T> = (0..len)
        .map(|n| {
            if n > 1 {
                ln_fact += T::lit(n as f64).ln();
            }
            T::lit(n as f64) * ln_r - T::lit(0.5) * ln_fact
        })
        .collect();
    let s = logs.iter().copied().fold(T::neg_infinity(), T::max);
    for (n, (zn, &l)) in z.iter_mut().zip(&logs).enumerate() {
        *zn = Complex::from_polar((l - s).exp(), T::lit(n as f64) * phi);
    }
    (z, s)
}

/// Builds `F_ν = Tr_S(ρ (σ_ν ⊗ 1))`, Hermitized.
pub fn conditioned_operators<T: Real>(rho: &JointState<T>) -> ConditionedOperators<T> {
    let r00 = rho.block(0, 0);
    let r01 = rho.block(0, 1);
    let r10 = rho.block(1, 0);
    let r11 = rho.block(1, 1);
    let i = c(T::zero(), T::one());
    let mut ops = [
        &r00 + &r11,
        &r01 + &r10,
        (&r01 - &r10) * i,
        &r00 - &r11,
    ];
    for f in ops.iter_mut() {
        hermitize(f);
    }
    let n = rho.n_cut();
    let mut support = 0;
    let entries = ops.clone().map(|f| {
        let mut e = Vec::new();
        for a in 0..n {
            for b in a..n {
                let v = f[(a, b)];
                if !v.is_zero() {
                    e.push((a, b, v));
                    support = support.max(b + 1);
                }
            }
        }
        e
    });
    ConditionedOperators {
        ops,
        entries,
        support,
    }
}

/// Outcome status of one heterodyne sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleFlag {
    Ok,
    ZeroProbability,
}

impl SampleFlag {
    pub fn as_str(self) -> &'static str {
        match self {
            SampleFlag::Ok => "ok",
            SampleFlag::ZeroProbability => "zero_probability",
        }
    }
}

/// One heterodyne outcome and the qubit state it heralds.
///
/// For `ZeroProbability` samples the Bloch vector is the zero sentinel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteeringSample<T> {
    pub beta: Amplitude<T>,
    pub bloch: BlochVector<T>,
    /// Heterodyne outcome density `q(β) = ⟨β|F_0|β⟩ / π`.
    pub density: T,
    /// Unnormalized projection probability `⟨β|F_0|β⟩`.
    pub raw_overlap: T,
    pub flag: SampleFlag,
}

impl<T: Real> SteeringSample<T> {
    pub fn is_ok(&self) -> bool {
        self.flag == SampleFlag::Ok
    }
}

fn ratio_bloch<T: Real>(num: [T; 4], den: T) -> BlochVector<T> {
    BlochVector::new(num[1] / den, num[2] / den, num[3] / den)
}

/// Steers the qubit by projecting the field on the coherent state `|β⟩`.
pub fn heterodyne_steer<T: Real>(
    f: &ConditionedOperators<T>,
    beta: Amplitude<T>,
) -> Result<SteeringSample<T>> {
    if !is_finite(beta) {
        return Err(Error::InvalidParameter("non-finite beta".into()));
    }
    let forms = f.scaled_forms(beta);
    let q0 = forms.scaled[0];
    if !(q0 >= T::lit(ZERO_PROBABILITY_THRESHOLD)) {
        return Err(Error::ZeroProbabilityOutcome(format!(
            "<beta|F0|beta> vanishes at beta = {}{:+}i",
            beta.re, beta.im
        )));
    }
    let raw = q0 * forms.log_scale.exp();
    Ok(SteeringSample {
        beta,
        bloch: ratio_bloch(forms.scaled, q0),
        density: raw / T::PI(),
        raw_overlap: raw,
        flag: SampleFlag::Ok,
    })
}

/// Steers with the POVM element `Σ q_i |β_i⟩⟨β_i|`.
///
/// The result is the convex combination of the branch steered points
/// weighted by `q_i ⟨β_i|F_0|β_i⟩`.
pub fn mixed_projection_steer<T: Real>(
    f: &ConditionedOperators<T>,
    branches: &[(T, Amplitude<T>)],
) -> Result<BlochVector<T>> {
    if branches.is_empty() {
        return Err(Error::InvalidWeights("no branches".into()));
    }
    let mut total = T::zero();
    for &(q, beta) in branches {
        if !q.is_finite() || q < T::zero() {
            return Err(Error::InvalidWeights(format!("branch weight {q} is negative")));
        }
        if !is_finite(beta) {
            return Err(Error::InvalidParameter("non-finite beta".into()));
        }
        total += q;
    }
    if (total - T::one()).abs() > T::tol(1e-12) {
        return Err(Error::InvalidWeights(format!("weights sum to {total}, not 1")));
    }
    let forms: Vec<(T, ScaledForms<T>)> = branches
        .iter()
        .filter(|(q, _)| *q > T::zero())
        .map(|&(q, beta)| (q, f.scaled_forms(beta)))
        .collect();
    let top = forms
        .iter()
        .map(|(_, fm)| fm.log_scale)
        .fold(T::neg_infinity(), T::max);
    let mut acc = [T::zero(); 4];
    for (q, fm) in &forms {
        let w = *q * (fm.log_scale - top).exp();
        for (a, s) in acc.iter_mut().zip(fm.scaled) {
            *a += w * s;
        }
    }
    if !(acc[0] >= T::lit(ZERO_PROBABILITY_THRESHOLD)) {
        return Err(Error::ZeroProbabilityOutcome(
            "every branch has vanishing probability".into(),
        ));
    }
    Ok(ratio_bloch(acc, acc[0]))
}

/// Polar grid over the β plane, `β = r e^{iφ}`, with quadrature weights
/// for the measure `r dr dφ` (trapezoidal in r, periodic trapezoidal in φ).
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid<T> {
    r_values: Vec<T>,
    phi_values: Vec<T>,
    radial_weights: Vec<T>,
    angular_weights: Vec<T>,
}

impl<T: Real> SweepGrid<T> {
    /// Arbitrary radii (strictly increasing, ≥ 0) and angles in `[0, 2π)`
    /// (strictly increasing).
    pub fn new(r_values: Vec<T>, phi_values: Vec<T>) -> Result<Self> {
        if r_values.is_empty() || phi_values.is_empty() {
            return Err(Error::InvalidParameter("empty grid axis".into()));
        }
        if r_values.iter().any(|r| !r.is_finite() || *r < T::zero())
            || r_values.windows(2).any(|w| w[1] <= w[0])
        {
            return Err(Error::InvalidParameter(
                "radii must be finite, non-negative and strictly increasing".into(),
            ));
        }
        let two_pi = T::TAU();
        if phi_values
            .iter()
            .any(|p| !p.is_finite() || *p < T::zero() || *p >= two_pi)
            || phi_values.windows(2).any(|w| w[1] <= w[0])
        {
            return Err(Error::InvalidParameter(
                "angles must be strictly increasing in [0, 2pi)".into(),
            ));
        }
        let half = T::lit(0.5);
        let nr = r_values.len();
        let radial_weights = if nr == 1 {
            vec![half * r_values[0] * r_values[0]]
        } else {
            (0..nr)
                .map(|i| {
                    let lo = if i == 0 { r_values[0] } else { r_values[i - 1] };
                    let hi = if i + 1 == nr { r_values[nr - 1] } else { r_values[i + 1] };
                    r_values[i] * half * (hi - lo)
                })
                .collect()
        };
        let np = phi_values.len();
        let angular_weights = (0..np)
            .map(|k| {
                let prev = if k == 0 {
                    phi_values[np - 1] - two_pi
                } else {
                    phi_values[k - 1]
                };
                let next = if k + 1 == np {
                    phi_values[0] + two_pi
                } else {
                    phi_values[k + 1]
                };
                if np == 1 {
                    two_pi
                } else {
                    half * (next - prev)
                }
            })
            .collect();
        Ok(Self {
            r_values,
            phi_values,
            radial_weights,
            angular_weights,
        })
    }

    /// `n_r` evenly spaced radii on `[0, r_max]` (just `r_max` when `n_r = 1`)
    /// and `n_phi` evenly spaced angles.
    pub fn uniform(r_max: T, n_r: usize, n_phi: usize) -> Result<Self> {
        check_axes(r_max, n_r, n_phi)?;
        let r = if n_r == 1 {
            vec![r_max]
        } else {
            let h = r_max / T::lit((n_r - 1) as f64);
            (0..n_r).map(|i| h * T::lit(i as f64)).collect()
        };
        Self::new(r, uniform_angles(n_phi))
    }

    /// `r = 0` followed by `n_r - 1` geometrically spaced radii on
    /// `[r_max / 1000, r_max]`.
    pub fn log_radial(r_max: T, n_r: usize, n_phi: usize) -> Result<Self> {
        check_axes(r_max, n_r, n_phi)?;
        if n_r < 3 {
            return Err(Error::InvalidParameter(
                "logarithmic radial spacing needs n_r >= 3".into(),
            ));
        }
        let r_min = r_max / T::lit(1000.0);
        let m = n_r - 1;
        let ratio = (r_max / r_min).ln() / T::lit((m - 1) as f64);
        let mut r = vec![T::zero()];
        r.extend((0..m).map(|i| r_min * (ratio * T::lit(i as f64)).exp()));
        r[m] = r_max;
        Self::new(r, uniform_angles(n_phi))
    }

    pub fn r_values(&self) -> &[T] {
        &self.r_values
    }

    pub fn phi_values(&self) -> &[T] {
        &self.phi_values
    }

    pub fn len(&self) -> usize {
        self.r_values.len() * self.phi_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn r_max(&self) -> T {
        *self.r_values.last().expect("non-empty grid")
    }

    /// Quadrature weight of grid point `(i_r, i_phi)`.
    pub fn weight(&self, i_r: usize, i_phi: usize) -> T {
        self.radial_weights[i_r] * self.angular_weights[i_phi]
    }

    /// Row-major (r outer, φ inner) list of `(r, φ)` points.
    pub fn points(&self) -> Vec<(T, T)> {
        self.r_values
            .iter()
            .flat_map(|&r| self.phi_values.iter().map(move |&p| (r, p)))
            .collect()
    }
}

fn check_axes<T: Real>(r_max: T, n_r: usize, n_phi: usize) -> Result<()> {
    if !(r_max > T::zero()) || !r_max.is_finite() {
        return Err(Error::InvalidParameter(format!("r_max must be > 0, got {r_max}")));
    }
    if n_r == 0 || n_phi == 0 {
        return Err(Error::InvalidParameter("n_r and n_phi must be >= 1".into()));
    }
    Ok(())
}

fn uniform_angles<T: Real>(n_phi: usize) -> Vec<T> {
    let h = T::TAU() / T::lit(n_phi as f64);
    (0..n_phi).map(|k| h * T::lit(k as f64)).collect()
}

/// Steers at every grid point. Output is row-major (r outer, φ inner);
/// zero-probability points are kept and flagged.
pub fn sweep<T: Real>(f: &ConditionedOperators<T>, grid: &SweepGrid<T>) -> Vec<SteeringSample<T>> {
    grid.points()
        .into_par_iter()
        .map(|(r, phi)| {
            let beta = Complex::from_polar(r, phi);
            match heterodyne_steer(f, beta) {
                Ok(s) => s,
                Err(_) => {
                    let raw = f.expectations(beta)[0].max(T::zero());
                    SteeringSample {
                        beta,
                        bloch: BlochVector::default(),
                        density: raw / T::PI(),
                        raw_overlap: raw,
                        flag: SampleFlag::ZeroProbability,
                    }
                }
            }
        })
        .collect()
}

/// Quadrature check of `∫ (1/π)⟨β|F_j|β⟩ d²β = Tr F_j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoSignalling<T> {
    /// `|∫ q(β) X_j(β) d²β - Tr F_j|` for j = 1, 2, 3.
    pub residual: [T; 3],
    /// `|∫ q(β) d²β - 1|`.
    pub mass_defect: T,
}

impl<T: Real> NoSignalling<T> {
    pub fn max_error(&self) -> T {
        self.residual
            .iter()
            .copied()
            .fold(self.mass_defect, T::max)
    }
}

pub fn no_signalling_residual<T: Real>(
    f: &ConditionedOperators<T>,
    grid: &SweepGrid<T>,
) -> NoSignalling<T> {
    let n_phi = grid.phi_values().len();
    let integrals = grid
        .points()
        .into_par_iter()
        .enumerate()
        .map(|(k, (r, phi))| {
            let w = grid.weight(k / n_phi, k % n_phi) / T::PI();
            f.expectations(Complex::from_polar(r, phi)).map(|e| w * e)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold([T::zero(); 4], |mut acc, v| {
            for (a, x) in acc.iter_mut().zip(v) {
                *a += x;
            }
            acc
        });
    NoSignalling {
        residual: [1, 2, 3].map(|j| (integrals[j] - f.trace(j)).abs()),
        mass_defect: (integrals[0] - T::one()).abs(),
    }
}

/// Two-qubit correlation matrix `Θ = [[1, bᵀ], [a, T]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoQubitTheta<T> {
    theta: [[T; 4]; 4],
}

impl<T: Real> TwoQubitTheta<T> {
    /// Validated: `|a|, |b| ≤ 1` and the reconstructed two-qubit state is
    /// positive semidefinite to `-1e-10`.
    pub fn new(a: [T; 3], b: [T; 3], t: [[T; 3]; 3]) -> Result<Self> {
        let th = Self::unchecked(a, b, t);
        let norm = |v: [T; 3]| v.iter().map(|x| *x * *x).sum::<T>().sqrt();
        if !th.theta.iter().flatten().all(|x| x.is_finite()) {
            return Err(Error::InvalidParameter("non-finite theta entry".into()));
        }
        if norm(a) > T::one() + T::tol(1e-12) || norm(b) > T::one() + T::tol(1e-12) {
            return Err(Error::InvalidParameter("|a| and |b| must not exceed 1".into()));
        }
        let min = min_eigenvalue(&th.density_matrix());
        if !(min >= -T::tol(1e-10)) {
            return Err(Error::InvalidState(format!(
                "two-qubit state not positive semidefinite (min eigenvalue {min:e})"
            )));
        }
        Ok(th)
    }

    /// No physicality check; the steered-point map is still well defined
    /// wherever `1 + b·x ≠ 0`.
    pub fn unchecked(a: [T; 3], b: [T; 3], t: [[T; 3]; 3]) -> Self {
        let mut theta = [[T::zero(); 4]; 4];
        theta[0][0] = T::one();
        for i in 0..3 {
            theta[0][i + 1] = b[i];
            theta[i + 1][0] = a[i];
            for j in 0..3 {
                theta[i + 1][j + 1] = t[i][j];
            }
        }
        Self { theta }
    }

    pub fn theta(&self) -> &[[T; 4]; 4] {
        &self.theta
    }

    pub fn a(&self) -> [T; 3] {
        [self.theta[1][0], self.theta[2][0], self.theta[3][0]]
    }

    pub fn b(&self) -> [T; 3] {
        [self.theta[0][1], self.theta[0][2], self.theta[0][3]]
    }

    /// `ρ_AB = ¼ Σ Θ_μν σ_μ ⊗ σ_ν`.
    pub fn density_matrix(&self) -> CMatrix<T> {
        let paulis = pauli_matrices::<T>();
        let quarter = T::lit(0.25);
        let mut rho = CMatrix::<T>::zeros(4, 4);
        for (mu, sm) in paulis.iter().enumerate() {
            for (nu, sn) in paulis.iter().enumerate() {
                let w = self.theta[mu][nu] * quarter;
                if w == T::zero() {
                    continue;
                }
                for i in 0..4 {
                    for j in 0..4 {
                        rho[(i, j)] += sm[i / 2][j / 2] * sn[i % 2][j % 2] * w;
                    }
                }
            }
        }
        rho
    }
}

/// `σ_0..σ_3` as 2×2 arrays.
pub fn pauli_matrices<T: Real>() -> [[[Complex<T>; 2]; 2]; 4] {
    let z = Complex::zero();
    let o = c(T::one(), T::zero());
    let i = c(T::zero(), T::one());
    [
        [[o, z], [z, o]],
        [[z, o], [o, z]],
        [[z, -i], [i, z]],
        [[o, z], [z, -o]],
    ]
}

/// Point the first qubit is steered to when the second is measured along
/// `x`: `(a + T x) / (1 + b·x)`.
pub fn two_qubit_steered_point<T: Real>(
    theta: &TwoQubitTheta<T>,
    x: [T; 3],
) -> Result<BlochVector<T>> {
    let nx = x.iter().map(|v| *v * *v).sum::<T>();
    if !(nx <= T::one() + T::tol(1e-12)) {
        return Err(Error::InvalidParameter("measurement vector must satisfy |x| <= 1".into()));
    }
    let th = &theta.theta;
    let den = T::one() + (0..3).map(|j| th[0][j + 1] * x[j]).sum::<T>();
    if den < T::lit(ZERO_PROBABILITY_THRESHOLD) {
        return Err(Error::ZeroProbabilityOutcome(
            "1 + b.x vanishes for this measurement".into(),
        ));
    }
    let comp = |i: usize| (th[i + 1][0] + (0..3).map(|j| th[i + 1][j + 1] * x[j]).sum::<T>()) / den;
    Ok(BlochVector::new(comp(0), comp(1), comp(2)))
}

/// Deterministic Fibonacci-sphere sample of unit measurement vectors mapped
/// through [`two_qubit_steered_point`].
pub fn two_qubit_ellipsoid<T: Real>(
    theta: &TwoQubitTheta<T>,
    samples: usize,
) -> Result<Vec<BlochVector<T>>> {
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be >= 1".into()));
    }
    fibonacci_sphere::<T>(samples)
        .into_iter()
        .map(|x| two_qubit_steered_point(theta, x))
        .collect()
}

pub fn fibonacci_sphere<T: Real>(samples: usize) -> Vec<[T; 3]> {
    let golden = T::PI() * (T::lit(3.0) - T::lit(5.0).sqrt());
    let n = T::lit(samples as f64);
    (0..samples)
        .map(|i| {
            let fi = T::lit(i as f64);
            let z = T::one() - T::lit(2.0) * (fi + T::lit(0.5)) / n;
            let rho = (T::one() - z * z).max(T::zero()).sqrt();
            let a = golden * fi;
            let v = [rho * a.cos(), rho * a.sin(), z];
            // project back onto the sphere to absorb rounding
            let len = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            v.map(|x| x / len)
        })
        .collect()
}

#[cfg(test)]
fn hermitian_within<T: Real>(m: &CMatrix<T>) -> bool {
    let n = m.nrows();
    (0..n).all(|i| (i..n).all(|j| (m[(i, j)] - m[(j, i)].conj()).norm() <= T::tol(crate::hilbert::HERMITIAN_TOL)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{fock_state, mix_states, pure_joint, reduced_qubit_bloch};
    use approx::assert_abs_diff_eq;

    fn cz(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn bell(n_cut: usize) -> JointState<f64> {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        pure_joint(
            &fock_state(0, n_cut).unwrap(),
            &fock_state(1, n_cut).unwrap(),
            cz(s, 0.0),
            cz(s, 0.0),
        )
        .unwrap()
    }

    #[test]
    fn bell_operator_table() {
        let f = conditioned_operators(&bell(4));
        let h = 0.5;
        let want = |nu: usize, a: usize, b: usize| -> Complex<f64> {
            match (nu, a, b) {
                (0, 0, 0) | (0, 1, 1) => cz(h, 0.0),
                (1, 0, 1) | (1, 1, 0) => cz(h, 0.0),
                (2, 0, 1) => cz(0.0, h),
                (2, 1, 0) => cz(0.0, -h),
                (3, 0, 0) => cz(h, 0.0),
                (3, 1, 1) => cz(-h, 0.0),
                _ => cz(0.0, 0.0),
            }
        };
        for nu in 0..4 {
            assert!(hermitian_within(f.get(nu)));
            for a in 0..4 {
                for b in 0..4 {
                    assert_abs_diff_eq!((f.get(nu)[(a, b)] - want(nu, a, b)).norm(), 0.0, epsilon = 1e-15);
                }
            }
        }
        assert_eq!(f.support(), 2);
    }

    #[test]
    fn bell_steering_points() {
        let f = conditioned_operators(&bell(60));
        let s = heterodyne_steer(&f, cz(0.0, 0.0)).unwrap();
        assert_abs_diff_eq!(s.raw_overlap, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(s.density, 0.5 / std::f64::consts::PI, epsilon = 1e-15);
        assert_eq!(s.bloch.to_array(), [0.0, 0.0, 1.0]);
        // qubit conditional state ∝ |0⟩ + β*|1⟩
        let s = heterodyne_steer(&f, cz(1.0, 0.0)).unwrap();
        assert_abs_diff_eq!(s.bloch.x1, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.bloch.x2, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s.bloch.x3, 0.0, epsilon = 1e-15);
        let s = heterodyne_steer(&f, cz(-1.0, 0.0)).unwrap();
        assert_abs_diff_eq!(s.bloch.x1, -1.0, epsilon = 1e-15);
    }

    #[test]
    fn orthogonal_outcome_is_rejected() {
        let n = 4;
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let two = fock_state(2, n).unwrap();
        let plus2 = pure_joint(&two, &two, cz(s, 0.0), cz(s, 0.0)).unwrap();
        let f = conditioned_operators(&plus2);
        assert!(matches!(
            heterodyne_steer(&f, cz(0.0, 0.0)),
            Err(Error::ZeroProbabilityOutcome(_))
        ));
        // away from the origin it steers to |+⟩
        let x = heterodyne_steer(&f, cz(0.7, 0.2)).unwrap().bloch;
        assert_abs_diff_eq!(x.x1, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn product_operators_factorize() {
        let n = 8;
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let g = crate::hilbert::coherent_state(cz(0.4, 0.1), n).unwrap();
        let g = normalized(&g);
        let rho = pure_joint(&g, &g, cz(s, 0.0), cz(0.0, s)).unwrap();
        let a = reduced_qubit_bloch(&rho);
        let f = conditioned_operators(&rho);
        let comps = [a.x1, a.x2, a.x3];
        for j in 1..4 {
            let diff = f.get(j) - f.get(0) * Complex::new(comps[j - 1], 0.0);
            assert!(diff.iter().all(|z| z.norm() < 1e-15));
        }
        let grid = SweepGrid::uniform(2.0, 5, 8).unwrap();
        for smp in sweep(&f, &grid) {
            assert!(smp.bloch.max_abs_diff(a) < 1e-12);
        }
    }

    fn normalized(v: &crate::hilbert::FockVector<f64>) -> crate::hilbert::FockVector<f64> {
        let n = v.norm_sqr().sqrt();
        crate::hilbert::FockVector::from_amplitudes(v.amplitudes().iter().map(|z| z / n).collect(), 0.0).unwrap()
    }

    #[test]
    fn single_branch_projection_is_bitwise_heterodyne() {
        let f = conditioned_operators(&bell(8));
        for beta in [cz(0.0, 0.0), cz(0.3, -1.2), cz(2.5, 0.7)] {
            let a = heterodyne_steer(&f, beta).unwrap().bloch;
            let b = mixed_projection_steer(&f, &[(1.0, beta)]).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn two_branch_projection_weights_by_overlap() {
        let f = conditioned_operators(&bell(8));
        let far = cz(6.0, 0.0);
        let p0 = heterodyne_steer(&f, cz(0.0, 0.0)).unwrap();
        let p1 = heterodyne_steer(&f, far).unwrap();
        let w0 = 0.5 * p0.raw_overlap;
        let w1 = 0.5 * p1.raw_overlap;
        let x = mixed_projection_steer(&f, &[(0.5, cz(0.0, 0.0)), (0.5, far)]).unwrap();
        let expect = |a: f64, b: f64| (w0 * a + w1 * b) / (w0 + w1);
        assert_abs_diff_eq!(x.x1, expect(p0.bloch.x1, p1.bloch.x1), epsilon = 1e-15);
        assert_abs_diff_eq!(x.x3, expect(p0.bloch.x3, p1.bloch.x3), epsilon = 1e-15);
        assert!(x.norm() < 1.0);

        let mid = mixed_projection_steer(&f, &[(0.5, cz(1.0, 0.0)), (0.5, cz(-1.0, 0.0))]).unwrap();
        assert_abs_diff_eq!(mid.x1, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(mid.norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn projection_weight_errors() {
        let f = conditioned_operators(&bell(4));
        assert!(matches!(
            mixed_projection_steer(&f, &[(0.6, cz(0.0, 0.0)), (0.6, cz(1.0, 0.0))]),
            Err(Error::InvalidWeights(_))
        ));
        assert!(matches!(
            mixed_projection_steer(&f, &[(-0.5, cz(0.0, 0.0)), (1.5, cz(1.0, 0.0))]),
            Err(Error::InvalidWeights(_))
        ));
        assert!(mixed_projection_steer::<f64>(&f, &[]).is_err());
    }

    #[test]
    fn far_outcomes_keep_their_direction() {
        // overlaps underflow long before the Bloch ratio loses meaning
        let f = conditioned_operators(&bell(4));
        let s = heterodyne_steer(&f, cz(40.0, 0.0)).unwrap();
        assert_eq!(s.raw_overlap, 0.0);
        let r2: f64 = 1600.0;
        assert_abs_diff_eq!(s.bloch.x3, (1.0 - r2) / (1.0 + r2), epsilon = 1e-15);
    }

    #[test]
    fn sweep_order_and_flags() {
        let n = 4;
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let two = fock_state(2, n).unwrap();
        let plus2 = pure_joint(&two, &two, cz(s, 0.0), cz(s, 0.0)).unwrap();
        let f = conditioned_operators(&plus2);
        let grid = SweepGrid::uniform(1.0, 3, 4).unwrap();
        let out = sweep(&f, &grid);
        assert_eq!(out.len(), 12);
        for (k, smp) in out.iter().enumerate() {
            let (r, phi) = grid.points()[k];
            assert_abs_diff_eq!((smp.beta - Complex::from_polar(r, phi)).norm(), 0.0);
        }
        assert!(out[..4].iter().all(|s| s.flag == SampleFlag::ZeroProbability));
        assert!(out[4..].iter().all(|s| s.is_ok()));
        assert_eq!(out, sweep(&f, &grid));
    }

    #[test]
    fn grid_construction() {
        let g = SweepGrid::<f64>::uniform(2.0, 3, 4).unwrap();
        assert_eq!(g.r_values(), &[0.0, 1.0, 2.0]);
        // trapezoid in r: ∫0^2 r dr = 2, times 2π
        let total: f64 = (0..3)
            .flat_map(|i| (0..4).map(move |k| (i, k)))
            .map(|(i, k)| g.weight(i, k))
            .sum();
        assert_abs_diff_eq!(total, 2.0 * std::f64::consts::TAU, epsilon = 1e-12);
        assert!(SweepGrid::<f64>::uniform(0.0, 3, 4).is_err());
        assert!(SweepGrid::<f64>::uniform(1.0, 0, 4).is_err());
        assert!(SweepGrid::new(vec![1.0, 0.5], vec![0.0]).is_err());
        assert!(SweepGrid::new(vec![0.5], vec![7.0]).is_err());
        let lg = SweepGrid::<f64>::log_radial(30.0, 50, 8).unwrap();
        assert_eq!(lg.r_values()[0], 0.0);
        assert_eq!(lg.r_max(), 30.0);
        assert!(lg.r_values().windows(2).all(|w| w[1] > w[0]));
    }

    #[test]
    fn no_signalling_for_bell() {
        let f = conditioned_operators(&bell(10));
        let grid = SweepGrid::uniform(6.0, 200, 64).unwrap();
        let ns = no_signalling_residual(&f, &grid);
        assert!(ns.max_error() < 1e-3, "{ns:?}");
    }

    #[test]
    fn two_qubit_points() {
        let id = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
        let th = TwoQubitTheta::unchecked([0.0; 3], [0.0; 3], id);
        assert_eq!(two_qubit_steered_point(&th, [0.0, 0.0, 1.0]).unwrap().to_array(), [0.0, 0.0, 1.0]);
        // unit correlations for all three axes are not a state
        assert!(TwoQubitTheta::new([0.0; 3], [0.0; 3], id).is_err());

        let neg = [[-1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, -1.0]];
        let singlet = TwoQubitTheta::new([0.0; 3], [0.0; 3], neg).unwrap();
        for x in fibonacci_sphere::<f64>(20) {
            let y = two_qubit_steered_point(&singlet, x).unwrap();
            assert!(y.max_abs_diff(BlochVector::new(-x[0], -x[1], -x[2])) < 1e-15);
        }

        let uncorrelated = TwoQubitTheta::new([0.0, 0.0, 0.5], [0.0; 3], [[0.0; 3]; 3]).unwrap();
        for y in two_qubit_ellipsoid(&uncorrelated, 17).unwrap() {
            assert_eq!(y.to_array(), [0.0, 0.0, 0.5]);
        }
        assert!(two_qubit_ellipsoid(&uncorrelated, 0).is_err());
        assert!(two_qubit_steered_point(&singlet, [1.0, 1.0, 0.0]).is_err());

        let polarized = TwoQubitTheta::new([0.0, 0.0, 1.0], [0.0, 0.0, 1.0], [[0.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 1.0]]).unwrap();
        assert!(matches!(
            two_qubit_steered_point(&polarized, [0.0, 0.0, -1.0]),
            Err(Error::ZeroProbabilityOutcome(_))
        ));
    }

    #[test]
    fn mixed_state_reduced_traces() {
        let n = 4;
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let two = fock_state(2, n).unwrap();
        let plus2 = pure_joint(&two, &two, cz(s, 0.0), cz(s, 0.0)).unwrap();
        let phi = pure_joint(&fock_state(1, n).unwrap(), &fock_state(0, n).unwrap(), cz(s, 0.0), cz(s, 0.0)).unwrap();
        let rho = mix_states(&[(0.3, &plus2), (0.7, &phi)]).unwrap();
        let f = conditioned_operators(&rho);
        let x = reduced_qubit_bloch(&rho);
        assert_abs_diff_eq!(f.trace(1), x.x1, epsilon = 1e-15);
        assert_abs_diff_eq!(f.trace(3), x.x3, epsilon = 1e-15);
        assert_abs_diff_eq!(f.trace(0), 1.0, epsilon = 1e-15);
    }
}
