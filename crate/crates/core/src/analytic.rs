//! Closed-form steering sets for the worked-example states.
//!
//! Orientation: a heterodyne outcome `β` heralds the qubit state obtained
//! by contracting the joint vector with `⟨β|`, so for the Bell state the
//! conditional qubit is `∝ |0⟩ + β*|1⟩` and `X1 + i X2 = 2β*/(1 + |β|²)`.
//! Every formula here follows from `½⟨β|F_ν|β⟩` with
//! `⟨β|n⟩ = e^{-|β|²/2} β*^n / √n!`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::hilbert::BlochVector;
use crate::scalar::{ln_factorial, Amplitude, Real};
pub use crate::states::{CoherentPairParam, ExampleState, JCParam, MixedStateParam};
use crate::steering::ZERO_PROBABILITY_THRESHOLD;

/// Bell-state steered point at `β = r e^{iφ}`.
pub fn bell_bloch<T: Real>(r: T, phi: T) -> BlochVector<T> {
    let two = T::lit(2.0);
    let d = T::one() + r * r;
    BlochVector::new(
        two * r * phi.cos() / d,
        -two * r * phi.sin() / d,
        (T::one() - r * r) / d,
    )
}

/// `Tr[(1 ⊗ |β⟩⟨β|) ρ_Bell] = ½ e^{-r²}(1 + r²)`.
pub fn bell_raw_overlap<T: Real>(r: T) -> T {
    T::lit(0.5) * (-r * r).exp() * (T::one() + r * r)
}

/// Polar angle `θ = 2 arctan r` and azimuth of the sphere point the Bell
/// state steers to.
pub fn stereographic_forward<T: Real>(r: T, phi: T) -> (T, T) {
    (T::lit(2.0) * r.atan(), phi)
}

/// Bloch vector at polar angle `theta` and azimuth `azimuth` in the
/// orientation of [`bell_bloch`]: `(sinθ cos a, -sinθ sin a, cosθ)`.
pub fn stereographic_point<T: Real>(theta: T, azimuth: T) -> BlochVector<T> {
    BlochVector::new(
        theta.sin() * azimuth.cos(),
        -theta.sin() * azimuth.sin(),
        theta.cos(),
    )
}

/// Constant steered point of `(|0,n⟩ + |1,n⟩)/√2`.
pub fn product_bloch<T: Real>() -> BlochVector<T> {
    BlochVector::new(T::one(), T::zero(), T::zero())
}

/// Steered point of `p|+,2⟩⟨+,2| + (1-p)|Φ⟩⟨Φ|`, `|Φ⟩ = (|1,0⟩ + |0,1⟩)/√2`.
pub fn mixed_bloch<T: Real>(param: MixedStateParam<T>, r: T, phi: T) -> Result<BlochVector<T>> {
    let p = param.p();
    let q = T::one() - p;
    let two = T::lit(2.0);
    let r2 = r * r;
    let r4 = r2 * r2;
    let d = p * r4 + q * (T::one() + r2);
    if !(d >= T::lit(ZERO_PROBABILITY_THRESHOLD)) {
        return Err(Error::ZeroProbabilityOutcome(format!(
            "mixed state with p = {p} has no weight at r = {r}"
        )));
    }
    Ok(BlochVector::new(
        (p * r4 + two * q * r * phi.cos()) / d,
        two * q * r * phi.sin() / d,
        q * (r2 - T::one()) / d,
    ))
}

struct PairExponents<T> {
    /// `-|γ-β|²` and `-|γ'-β|²`
    g: T,
    gp: T,
    /// `-½|γ|² - ½|γ'|² - |β|² + γβ* + βγ'*` and its partner with γ ↔ γ'
    cross: Complex<T>,
    cross_swapped: Complex<T>,
}

fn pair_exponents<T: Real>(param: &CoherentPairParam<T>, beta: Amplitude<T>) -> PairExponents<T> {
    let (g, gp) = (param.gamma, param.gamma_prime);
    let half = T::lit(0.5);
    let base = -half * g.norm_sqr() - half * gp.norm_sqr() - beta.norm_sqr();
    PairExponents {
        g: -(g - beta).norm_sqr(),
        gp: -(gp - beta).norm_sqr(),
        cross: Complex::new(base, T::zero()) + g * beta.conj() + beta * gp.conj(),
        cross_swapped: Complex::new(base, T::zero()) + gp * beta.conj() + beta * g.conj(),
    }
}

/// Steered point of `(|0,γ⟩ + |1,γ'⟩)/√2`, evaluated in log space.
pub fn coherent_pair_bloch<T: Real>(
    param: CoherentPairParam<T>,
    beta: Amplitude<T>,
) -> Result<BlochVector<T>> {
    let e = pair_exponents(&param, beta);
    let hi = e.g.max(e.gp);
    let lo = e.g.min(e.gp);
    let log_norm = hi + (lo - hi).exp().ln_1p();
    let shift = Complex::new(log_norm, T::zero());
    let a = (e.cross - shift).exp();
    let b = (e.cross_swapped - shift).exp();
    let i = Complex::new(T::zero(), T::one());
    let x1 = a + b;
    let x2 = i * (a - b);
    let x3 = (e.g - log_norm).exp() - (e.gp - log_norm).exp();
    let residue = x1.im.abs().max(x2.im.abs());
    if residue > T::tol(1e-10) {
        return Err(Error::InvalidParameter(format!(
            "closed form left imaginary residue {residue:e}"
        )));
    }
    Ok(BlochVector::new(x1.re, x2.re, x3))
}

/// Steered point of the resonant Jaynes–Cummings state grown from `|1, n⟩`.
pub fn jc_bloch<T: Real>(param: JCParam<T>, r: T, phi: T) -> Result<BlochVector<T>> {
    let n = T::lit(param.n() as f64);
    let a = param.angle();
    let (s, c) = a.sin_cos();
    let s2 = (T::lit(2.0) * a).sin();
    let d = n * s * s + r * r * c * c;
    if !(d >= T::lit(ZERO_PROBABILITY_THRESHOLD)) {
        return Err(Error::ZeroProbabilityOutcome(format!(
            "Jaynes-Cummings outcome at r = {r} has no weight at lambda_t = {}",
            param.lambda_t()
        )));
    }
    let k = r * n.sqrt() * s2 / d;
    Ok(BlochVector::new(
        k * phi.sin(),
        k * phi.cos(),
        (n * s * s - r * r * c * c) / d,
    ))
}

/// Qubit–field concurrence along the trajectory, `|sin(2√n λt)|`.
pub fn jc_concurrence<T: Real>(param: JCParam<T>) -> T {
    (T::lit(2.0) * param.angle()).sin().abs()
}

/// Closed forms of `½⟨β|F_ν|β⟩`, ν = 0..3, for each example state.
pub fn theta_overlap_integrals<T: Real>(case: &ExampleState<T>, beta: Amplitude<T>) -> [T; 4] {
    let r = beta.norm();
    let (sin_phi, cos_phi) = if r > T::zero() {
        (beta.im / r, beta.re / r)
    } else {
        (T::zero(), T::one())
    };
    let r2 = r * r;
    let gauss = (-r2).exp();
    let quarter = T::lit(0.25) * gauss;
    let half = T::lit(0.5) * gauss;
    let two = T::lit(2.0);
    match case {
        ExampleState::Bell => [
            quarter * (T::one() + r2),
            quarter * two * r * cos_phi,
            -quarter * two * r * sin_phi,
            quarter * (T::one() - r2),
        ],
        ExampleState::Product { n } => {
            let v = half * (T::lit(*n as f64) * r2.ln() - ln_factorial::<T>(*n)).exp();
            let v = if *n == 0 { half } else if r == T::zero() { T::zero() } else { v };
            [v, v, T::zero(), T::zero()]
        }
        ExampleState::Mixed(param) => {
            let p = param.p();
            let q = T::one() - p;
            let r4 = r2 * r2;
            [
                quarter * (p * r4 + q * (T::one() + r2)),
                quarter * (p * r4 + two * q * r * cos_phi),
                quarter * two * q * r * sin_phi,
                quarter * q * (r2 - T::one()),
            ]
        }
        ExampleState::CoherentPair(param) => {
            let e = pair_exponents(param, beta);
            let q = T::lit(0.25);
            let cross = e.cross.exp();
            [
                q * (e.g.exp() + e.gp.exp()),
                q * two * cross.re,
                -q * two * cross.im,
                q * (e.g.exp() - e.gp.exp()),
            ]
        }
        ExampleState::JaynesCummings(param) => {
            let n = param.n();
            let a = param.angle();
            let (s, c) = a.sin_cos();
            let s2 = (two * a).sin();
            let lf_nm1 = ln_factorial::<T>(n - 1);
            let lf_n = ln_factorial::<T>(n);
            let low = r.powi(2 * n as i32 - 2) / lf_nm1.exp();
            let high = r.powi(2 * n as i32) / lf_n.exp();
            let cross = r.powi(2 * n as i32 - 1) / (T::lit(0.5) * (lf_nm1 + lf_n)).exp();
            [
                half * (s * s * low + c * c * high),
                half * s2 * cross * sin_phi,
                half * s2 * cross * cos_phi,
                half * (s * s * low - c * c * high),
            ]
        }
    }
}

/// Steered point of any example state from its closed form.
pub fn example_bloch<T: Real>(case: &ExampleState<T>, beta: Amplitude<T>) -> Result<BlochVector<T>> {
    let r = beta.norm();
    let phi = beta.im.atan2(beta.re);
    match case {
        ExampleState::Bell => Ok(bell_bloch(r, phi)),
        ExampleState::Product { .. } => Ok(product_bloch()),
        ExampleState::Mixed(p) => mixed_bloch(*p, r, phi),
        ExampleState::CoherentPair(c) => coherent_pair_bloch(*c, beta),
        ExampleState::JaynesCummings(j) => jc_bloch(*j, r, phi),
    }
}
