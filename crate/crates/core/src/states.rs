//! Named joint states used throughout the worked examples.

use num_complex::Complex;

use crate::dynamics::jc_closed_form_state;
use crate::error::{Error, Result};
use crate::hilbert::{coherent_state, default_n_cut, fock_state, mix_states, pure_joint, JointState};
use crate::scalar::{Amplitude, Real};

/// Mixing weight `p ∈ [0, 1]` of `p|+,2⟩⟨+,2| + (1-p)|Φ⟩⟨Φ|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixedStateParam<T> {
    p: T,
}

impl<T: Real> MixedStateParam<T> {
    pub fn new(p: T) -> Result<Self> {
        if !(p >= T::zero() && p <= T::one()) {
            return Err(Error::InvalidParameter(format!("p must lie in [0, 1], got {p}")));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> T {
        self.p
    }
}

/// Field amplitudes of `(|0,γ⟩ + |1,γ'⟩)/√2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentPairParam<T> {
    pub gamma: Amplitude<T>,
    pub gamma_prime: Amplitude<T>,
}

impl<T: Real> CoherentPairParam<T> {
    pub fn new(gamma: Amplitude<T>, gamma_prime: Amplitude<T>) -> Result<Self> {
        let finite = |z: Amplitude<T>| z.re.is_finite() && z.im.is_finite();
        if !finite(gamma) || !finite(gamma_prime) {
            return Err(Error::InvalidParameter("coherent amplitudes must be finite".into()));
        }
        Ok(Self { gamma, gamma_prime })
    }
}

/// Photon number `n ≥ 1` of the initial `|1, n⟩` and the dimensionless time `λt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JCParam<T> {
    n: usize,
    lambda_t: T,
}

impl<T: Real> JCParam<T> {
    pub fn new(n: usize, lambda_t: T) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameter("photon number must be >= 1".into()));
        }
        if !lambda_t.is_finite() || lambda_t < T::zero() {
            return Err(Error::InvalidParameter(format!(
                "lambda_t must be finite and >= 0, got {lambda_t}"
            )));
        }
        Ok(Self { n, lambda_t })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda_t(&self) -> T {
        self.lambda_t
    }

    /// `√n λt`.
    pub fn angle(&self) -> T {
        T::lit(self.n as f64).sqrt() * self.lambda_t
    }
}

/// The worked-example joint states with closed-form steering sets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExampleState<T> {
    /// `(|0,0⟩ + |1,1⟩)/√2`.
    Bell,
    /// `(|0,n⟩ + |1,n⟩)/√2`.
    Product { n: usize },
    Mixed(MixedStateParam<T>),
    CoherentPair(CoherentPairParam<T>),
    JaynesCummings(JCParam<T>),
}

impl<T: Real> ExampleState<T> {
    /// Smallest sensible Fock cutoff: the default truncation rule applied to
    /// the amplitudes that enter the state itself.
    pub fn default_n_cut(&self) -> usize {
        match self {
            ExampleState::Bell | ExampleState::Mixed(_) => default_n_cut(0.0),
            ExampleState::Product { n } => default_n_cut(0.0).max(n + 1),
            ExampleState::CoherentPair(c) => {
                default_n_cut(c.gamma.norm().max(c.gamma_prime.norm()).as_f64())
            }
            ExampleState::JaynesCummings(j) => default_n_cut(0.0).max(j.n() + 1),
        }
    }

    pub fn joint_state(&self, n_cut: usize) -> Result<JointState<T>> {
        let h = Complex::new(T::FRAC_1_SQRT_2(), T::zero());
        match self {
            ExampleState::Bell => pure_joint(&fock_state(0, n_cut)?, &fock_state(1, n_cut)?, h, h),
            ExampleState::Product { n } => {
                let f = fock_state(*n, n_cut)?;
                pure_joint(&f, &f, h, h)
            }
            ExampleState::Mixed(param) => {
                let two = fock_state(2, n_cut)?;
                let plus2 = pure_joint(&two, &two, h, h)?;
                // |Φ⟩ = (|1,0⟩ + |0,1⟩)/√2
                let phi = pure_joint(&fock_state(1, n_cut)?, &fock_state(0, n_cut)?, h, h)?;
                let p = param.p();
                mix_states(&[(p, &plus2), (T::one() - p, &phi)])
            }
            ExampleState::CoherentPair(c) => pure_joint(
                &coherent_state(c.gamma, n_cut)?,
                &coherent_state(c.gamma_prime, n_cut)?,
                h,
                h,
            ),
            ExampleState::JaynesCummings(j) => jc_closed_form_state(j.n(), j.lambda_t(), n_cut),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::{reduced_field, reduced_qubit_bloch, Purity};
    use approx::assert_abs_diff_eq;

    #[test]
    fn param_validation() {
        assert!(MixedStateParam::new(1.2).is_err());
        assert!(MixedStateParam::new(f64::NAN).is_err());
        assert!(JCParam::new(0, 0.1).is_err());
        assert!(JCParam::new(1, -0.1).is_err());
        assert!(CoherentPairParam::new(Complex::new(f64::INFINITY, 0.0), Complex::new(0.0, 0.0)).is_err());
    }

    #[test]
    fn mixed_state_field_marginal() {
        let p = 0.3;
        let rho = ExampleState::Mixed(MixedStateParam::new(p).unwrap())
            .joint_state(5)
            .unwrap();
        assert_eq!(rho.purity_flag(), Purity::Mixed);
        let f = reduced_field(&rho);
        let want = [(1.0 - p) / 2.0, (1.0 - p) / 2.0, p, 0.0, 0.0];
        for i in 0..5 {
            for j in 0..5 {
                let w = if i == j { want[i] } else { 0.0 };
                assert_abs_diff_eq!(f[(i, j)].re, w, epsilon = 1e-15);
                assert_abs_diff_eq!(f[(i, j)].im, 0.0, epsilon = 1e-15);
            }
        }
        // ρ_S: p|+⟩⟨+| + (1-p) I/2
        let x = reduced_qubit_bloch(&rho);
        assert_abs_diff_eq!(x.x1, p, epsilon = 1e-15);
        assert_abs_diff_eq!(x.x3, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn default_cutoffs() {
        let cp = ExampleState::CoherentPair(
            CoherentPairParam::new(Complex::new(0.0, 5.0), Complex::new(1.0, 0.0)).unwrap(),
        );
        assert_eq!(cp.default_n_cut(), 65);
        assert_eq!(ExampleState::<f64>::Product { n: 40 }.default_n_cut(), 41);
    }
}
