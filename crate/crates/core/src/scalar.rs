//! Scalar abstraction shared by every numeric kernel in the crate.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real field the engine is generic over (`f32` and `f64`).
///
/// Tolerances throughout the crate are calibrated for `f64`; [`Real::tol`]
/// stretches them by the ratio of machine epsilons so single precision gets
/// a proportionally wider acceptance band.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + Sum
    + Default
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal into `Self`.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal representable in target float")
    }

    /// Scales an `f64`-calibrated tolerance to this precision.
    #[inline]
    fn tol(x: f64) -> Self {
        let ratio = (Self::epsilon().to_f64().unwrap_or(f64::EPSILON) / f64::EPSILON).max(1.0);
        Self::lit(x * ratio)
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex amplitude (`α`, `β`, `γ`, ...).
pub type Amplitude<T> = Complex<T>;

#[inline]
pub(crate) fn c<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

#[inline]
pub(crate) fn is_finite<T: Real>(z: Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// `ln(n!)` by direct accumulation; exact enough for the Fock ranges used here.
pub(crate) fn ln_factorial<T: Real>(n: usize) -> T {
    (2..=n).map(|k| T::lit(k as f64).ln()).sum()
}
