//! Qubit ⊗ truncated-Fock-space linear algebra.
//!
//! Joint operators live on `C^2 ⊗ C^{n_cut}` with qubit-major ordering: the
//! basis ket `|q, n⟩` sits at index `q * n_cut + n`. Qubit `|0⟩` is the
//! `σ_z = +1` eigenstate.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{c, is_finite, Amplitude, Real};

/// Dense complex matrix used for both joint and field-space operators.
pub type CMatrix<T> = DMatrix<Complex<T>>;

/// Largest discarded coherent-state mass accepted by [`coherent_state`].
pub const DEFAULT_MAX_TAIL: f64 = 1e-6;

pub(crate) const HERMITIAN_TOL: f64 = 1e-12;
pub(crate) const TRACE_TOL: f64 = 1e-10;
pub(crate) const EIGEN_FLOOR: f64 = -1e-10;

/// Fock cutoff large enough to hold coherent amplitudes up to `beta_max`.
///
/// `max(24, ceil(|β|² + 6|β| + 10))`: the Poisson tail past mean + 6·sqrt(mean)
/// is below 1e-9.
pub fn default_n_cut(beta_max: f64) -> usize {
    let b = beta_max.abs();
    let needed = (b * b + 6.0 * b + 10.0).ceil() as usize;
    needed.max(24)
}

/// Amplitudes over number states `|0⟩..|n_cut-1⟩` plus the mass that was cut off.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector<T> {
    amplitudes: Vec<Complex<T>>,
    tail_bound: T,
}

impl<T: Real> FockVector<T> {
    pub fn from_amplitudes(amplitudes: Vec<Complex<T>>, tail_bound: T) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::InvalidCutoff { got: 0, min: 1 });
        }
        if !amplitudes.iter().all(|&z| is_finite(z)) || !tail_bound.is_finite() {
            return Err(Error::InvalidParameter("non-finite Fock amplitude".into()));
        }
        if tail_bound < T::zero() {
            return Err(Error::InvalidParameter("negative tail bound".into()));
        }
        Ok(Self { amplitudes, tail_bound })
    }

    pub fn n_cut(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amplitudes
    }

    pub fn tail_bound(&self) -> T {
        self.tail_bound
    }

    pub fn norm_sqr(&self) -> T {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Result<Complex<T>> {
        if self.n_cut() != other.n_cut() {
            return Err(Error::DimensionMismatch {
                expected: self.n_cut(),
                got: other.n_cut(),
            });
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .fold(Complex::zero(), |acc, (a, b)| acc + a.conj() * b))
    }
}

/// Truncated coherent state `|β⟩`, not renormalized.
///
/// Fails with [`Error::TruncationUnsafe`] when the discarded mass exceeds
/// [`DEFAULT_MAX_TAIL`].
pub fn coherent_state<T: Real>(beta: Amplitude<T>, n_cut: usize) -> Result<FockVector<T>> {
    coherent_state_with_tail(beta, n_cut, T::lit(DEFAULT_MAX_TAIL))
}

/// As [`coherent_state`] with an explicit tail-mass ceiling.
pub fn coherent_state_with_tail<T: Real>(
    beta: Amplitude<T>,
    n_cut: usize,
    max_tail: T,
) -> Result<FockVector<T>> {
    if n_cut < 1 {
        return Err(Error::InvalidCutoff { got: n_cut, min: 1 });
    }
    if !is_finite(beta) {
        return Err(Error::InvalidParameter("non-finite coherent amplitude".into()));
    }
    let mean = beta.norm_sqr();
    let mut amps = Vec::with_capacity(n_cut);
    let mut cur = c((-mean / T::lit(2.0)).exp(), T::zero());
    amps.push(cur);
    for n in 1..n_cut {
        cur = cur * beta / T::lit(n as f64).sqrt();
        amps.push(cur);
    }
    let kept: T = amps.iter().map(|z| z.norm_sqr()).sum();
    let tail = (T::one() - kept).max(T::zero());
    if tail > max_tail {
        return Err(Error::TruncationUnsafe {
            mean_photons: mean.as_f64(),
            n_cut,
            tail_bound: tail.as_f64(),
        });
    }
    Ok(FockVector {
        amplitudes: amps,
        tail_bound: tail,
    })
}

/// Number state `|n⟩`.
pub fn fock_state<T: Real>(n: usize, n_cut: usize) -> Result<FockVector<T>> {
    if n_cut < 1 {
        return Err(Error::InvalidCutoff { got: n_cut, min: 1 });
    }
    if n >= n_cut {
        return Err(Error::IndexOutOfRange { index: n, n_cut });
    }
    let mut amps = vec![Complex::zero(); n_cut];
    amps[n] = Complex::new(T::one(), T::zero());
    Ok(FockVector {
        amplitudes: amps,
        tail_bound: T::zero(),
    })
}

/// What is known about the rank of a [`JointState`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Purity {
    Pure,
    Mixed,
    Unknown,
}

/// Qubit Bloch vector `(X1, X2, X3)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BlochVector<T> {
    pub x1: T,
    pub x2: T,
    pub x3: T,
}

impl<T: Real> BlochVector<T> {
    pub fn new(x1: T, x2: T, x3: T) -> Self {
        Self { x1, x2, x3 }
    }

    pub fn from_array(v: [T; 3]) -> Self {
        Self::new(v[0], v[1], v[2])
    }

    pub fn to_array(self) -> [T; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn norm_sqr(self) -> T {
        self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3
    }

    pub fn norm(self) -> T {
        self.norm_sqr().sqrt()
    }

    pub fn distance(self, other: Self) -> T {
        let d1 = self.x1 - other.x1;
        let d2 = self.x2 - other.x2;
        let d3 = self.x3 - other.x3;
        (d1 * d1 + d2 * d2 + d3 * d3).sqrt()
    }

    /// Largest componentwise absolute difference.
    pub fn max_abs_diff(self, other: Self) -> T {
        (self.x1 - other.x1)
            .abs()
            .max((self.x2 - other.x2).abs())
            .max((self.x3 - other.x3).abs())
    }

    pub fn midpoint(self, other: Self) -> Self {
        let h = T::lit(0.5);
        Self::new(
            h * (self.x1 + other.x1),
            h * (self.x2 + other.x2),
            h * (self.x3 + other.x3),
        )
    }

    /// Inside the Bloch ball up to `1 + 1e-9`.
    pub fn is_physical(self) -> bool {
        self.norm_sqr() <= T::one() + T::tol(1e-9)
    }
}

/// Density matrix of the qubit ⊗ field system.
///
/// Every value of this type is Hermitian, has unit trace and no eigenvalue
/// below `-1e-10`.
#[derive(Debug, Clone, PartialEq)]
pub struct JointState<T: Real> {
    matrix: CMatrix<T>,
    n_cut: usize,
    purity: Purity,
}

impl<T: Real> JointState<T> {
    /// Validates and wraps a `2 n_cut × 2 n_cut` density matrix.
    pub fn from_matrix(matrix: CMatrix<T>, n_cut: usize, purity: Purity) -> Result<Self> {
        if n_cut < 1 {
            return Err(Error::InvalidCutoff { got: n_cut, min: 1 });
        }
        let dim = 2 * n_cut;
        if matrix.nrows() != dim || matrix.ncols() != dim {
            return Err(Error::DimensionMismatch {
                expected: n_cut,
                got: matrix.nrows() / 2,
            });
        }
        if !matrix.iter().all(|&z| is_finite(z)) {
            return Err(Error::InvalidState("non-finite entry".into()));
        }
        let htol = T::tol(HERMITIAN_TOL);
        let mut worst = T::zero();
        for i in 0..dim {
            for j in i..dim {
                worst = worst.max((matrix[(i, j)] - matrix[(j, i)].conj()).norm());
            }
        }
        if worst > htol {
            return Err(Error::InvalidState(format!(
                "not Hermitian (max deviation {worst:e})"
            )));
        }
        let mut matrix = matrix;
        hermitize(&mut matrix);
        let tr = trace(&matrix).re;
        if (tr - T::one()).abs() > T::tol(TRACE_TOL) {
            return Err(Error::InvalidState(format!("trace {tr} differs from 1")));
        }
        let min_eig = min_eigenvalue(&matrix);
        if !(min_eig >= -T::tol(-EIGEN_FLOOR)) {
            return Err(Error::InvalidState(format!(
                "not positive semidefinite (min eigenvalue {min_eig:e})"
            )));
        }
        Ok(Self {
            matrix,
            n_cut,
            purity,
        })
    }

    /// `|ψ⟩⟨ψ|` for a joint vector in qubit-major order, normalized first.
    pub fn from_pure_vector(psi: &[Complex<T>], n_cut: usize) -> Result<Self> {
        if psi.len() != 2 * n_cut {
            return Err(Error::DimensionMismatch {
                expected: n_cut,
                got: psi.len() / 2,
            });
        }
        let norm_sqr: T = psi.iter().map(|z| z.norm_sqr()).sum();
        if !(norm_sqr > T::zero()) || !norm_sqr.is_finite() {
            return Err(Error::ZeroNorm);
        }
        let scale = T::one() / norm_sqr;
        let dim = psi.len();
        let m = CMatrix::from_fn(dim, dim, |i, j| psi[i] * psi[j].conj() * scale);
        Self::from_matrix(m, n_cut, Purity::Pure)
    }

    /// `ρ_S ⊗ ρ_F` from a 2×2 qubit matrix and an `n_cut × n_cut` field matrix.
    pub fn product(qubit: &CMatrix<T>, field: &CMatrix<T>) -> Result<Self> {
        if qubit.nrows() != 2 || qubit.ncols() != 2 {
            return Err(Error::InvalidState("qubit factor must be 2x2".into()));
        }
        let n = field.nrows();
        if field.ncols() != n {
            return Err(Error::InvalidState("field factor must be square".into()));
        }
        let m = CMatrix::from_fn(2 * n, 2 * n, |i, j| {
            qubit[(i / n, j / n)] * field[(i % n, j % n)]
        });
        Self::from_matrix(m, n, Purity::Unknown)
    }

    pub fn matrix(&self) -> &CMatrix<T> {
        &self.matrix
    }

    pub fn n_cut(&self) -> usize {
        self.n_cut
    }

    pub fn dim(&self) -> usize {
        2 * self.n_cut
    }

    pub fn purity_flag(&self) -> Purity {
        self.purity
    }

    /// Field-space block `⟨q|ρ|q'⟩`.
    pub fn block(&self, q: usize, qp: usize) -> CMatrix<T> {
        let n = self.n_cut;
        self.matrix.view((q * n, qp * n), (n, n)).into_owned()
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> T {
        // Tr(ρ²) = Σ |ρ_ij|² for Hermitian ρ
        self.matrix.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Reduced qubit density matrix `Tr_F ρ`.
    pub fn reduced_qubit(&self) -> CMatrix<T> {
        let n = self.n_cut;
        CMatrix::from_fn(2, 2, |q, qp| {
            (0..n).fold(Complex::zero(), |acc, k| acc + self.matrix[(q * n + k, qp * n + k)])
        })
    }

    /// Eigenvalues, ascending.
    pub fn eigenvalues(&self) -> Vec<T> {
        let mut ev = hermitian_eigenvalues(&self.matrix);
        ev.sort_by(|a, b| a.total_cmp(b));
        ev.into_iter().map(T::lit).collect()
    }
}

/// Density matrix of the normalized vector `w0|0⟩⊗c0 + w1|1⟩⊗c1`.
pub fn pure_joint<T: Real>(
    c0: &FockVector<T>,
    c1: &FockVector<T>,
    w0: Amplitude<T>,
    w1: Amplitude<T>,
) -> Result<JointState<T>> {
    let n = c0.n_cut();
    if c1.n_cut() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: c1.n_cut(),
        });
    }
    if !is_finite(w0) || !is_finite(w1) {
        return Err(Error::InvalidParameter("non-finite weight".into()));
    }
    let psi: Vec<Complex<T>> = c0
        .amplitudes()
        .iter()
        .map(|&a| w0 * a)
        .chain(c1.amplitudes().iter().map(|&a| w1 * a))
        .collect();
    JointState::from_pure_vector(&psi, n)
}

/// Convex combination `Σ w_i ρ_i`.
pub fn mix_states<T: Real>(components: &[(T, &JointState<T>)]) -> Result<JointState<T>> {
    let first = components
        .first()
        .ok_or_else(|| Error::InvalidWeights("no components".into()))?;
    let n = first.1.n_cut();
    let mut total = T::zero();
    for (w, s) in components {
        if !w.is_finite() || *w < T::zero() {
            return Err(Error::InvalidWeights(format!("weight {w} is negative")));
        }
        if s.n_cut() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: s.n_cut(),
            });
        }
        total += *w;
    }
    if (total - T::one()).abs() > T::tol(1e-12) {
        return Err(Error::InvalidWeights(format!("weights sum to {total}, not 1")));
    }
    if components.len() == 1 {
        return Ok(first.1.clone());
    }
    let dim = 2 * n;
    let mut m = CMatrix::<T>::zeros(dim, dim);
    for (w, s) in components {
        m.zip_apply(s.matrix(), |acc, x| *acc += x * *w);
    }
    JointState::from_matrix(m, n, Purity::Mixed)
}

/// `Tr_S ρ` as an `n_cut × n_cut` field matrix.
pub fn reduced_field<T: Real>(rho: &JointState<T>) -> CMatrix<T> {
    let mut f = rho.block(0, 0) + rho.block(1, 1);
    hermitize(&mut f);
    f
}

/// `X_j = Tr(ρ (σ_j ⊗ 1))`.
pub fn reduced_qubit_bloch<T: Real>(rho: &JointState<T>) -> BlochVector<T> {
    qubit_bloch(&rho.reduced_qubit())
}

/// Bloch vector of a 2×2 qubit operator (not renormalized by its trace).
pub fn qubit_bloch<T: Real>(q: &CMatrix<T>) -> BlochVector<T> {
    let two = T::lit(2.0);
    BlochVector::new(
        two * q[(0, 1)].re,
        two * q[(1, 0)].im,
        q[(0, 0)].re - q[(1, 1)].re,
    )
}

/// Concurrence of a pure joint state, `sqrt(2(1 - Tr ρ_S²))`.
///
/// Evaluated as `2 sqrt(det ρ_S)` (equal for unit trace) to avoid the
/// cancellation in `1 - Tr ρ_S²` near product states.
pub fn pure_state_concurrence<T: Real>(rho: &JointState<T>) -> T {
    let q = rho.reduced_qubit();
    let det = q[(0, 0)].re * q[(1, 1)].re - q[(0, 1)].norm_sqr();
    T::lit(2.0) * det.max(T::zero()).sqrt()
}

pub(crate) fn hermitize<T: Real>(m: &mut CMatrix<T>) {
    let n = m.nrows();
    let half = T::lit(0.5);
    for i in 0..n {
        m[(i, i)].im = T::zero();
        for j in (i + 1)..n {
            let avg = (m[(i, j)] + m[(j, i)].conj()) * half;
            m[(i, j)] = avg;
            m[(j, i)] = avg.conj();
        }
    }
}

pub(crate) fn trace<T: Real>(m: &CMatrix<T>) -> Complex<T> {
    (0..m.nrows().min(m.ncols())).fold(Complex::zero(), |acc, i| acc + m[(i, i)])
}

pub(crate) fn to_f64_matrix<T: Real>(m: &CMatrix<T>) -> DMatrix<Complex<f64>> {
    DMatrix::from_fn(m.nrows(), m.ncols(), |i, j| {
        Complex::new(m[(i, j)].re.as_f64(), m[(i, j)].im.as_f64())
    })
}

/// Smallest eigenvalue of a Hermitian matrix (computed in double precision).
pub(crate) fn min_eigenvalue<T: Real>(m: &CMatrix<T>) -> T {
    T::lit(hermitian_eigenvalues(m).into_iter().fold(f64::INFINITY, f64::min))
}

/// Eigenvalues of a Hermitian matrix in double precision.
///
/// nalgebra's QR iteration can return NaN on some rank-deficient inputs when
/// the convergence threshold is exactly machine epsilon, so the threshold is
/// loosened step by step until every eigenvalue comes back finite.
fn hermitian_eigenvalues<T: Real>(m: &CMatrix<T>) -> Vec<f64> {
    let m = to_f64_matrix(m);
    for eps in [1e-15, 1e-14, 1e-13] {
        if let Some(e) = SymmetricEigen::try_new(m.clone(), eps, 0) {
            if e.eigenvalues.iter().all(|x| x.is_finite()) {
                return e.eigenvalues.iter().copied().collect();
            }
        }
    }
    vec![f64::NAN; m.nrows()]
}

/// `|u⟩⟨v|` on the field space.
pub fn outer<T: Real>(u: &FockVector<T>, v: &FockVector<T>) -> CMatrix<T> {
    let n = u.n_cut();
    CMatrix::from_fn(n, n, |i, j| u.amplitudes()[i] * v.amplitudes()[j].conj())
}

#[cfg(test)]
mod tests {
    use super::*;
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
    fn vacuum_is_exact() {
        let v = coherent_state(cz(0.0, 0.0), 4).unwrap();
        assert_eq!(v.amplitudes(), &[cz(1.0, 0.0), cz(0.0, 0.0), cz(0.0, 0.0), cz(0.0, 0.0)]);
        assert_eq!(v.tail_bound(), 0.0);
    }

    #[test]
    fn coherent_tail_matches_poisson_remainder() {
        // Σ_{n≥30} e^{-1}/n! is far below 1e-12
        let oracle: f64 = (30..60)
            .map(|n| (-1.0 - crate::scalar::ln_factorial::<f64>(n)).exp())
            .sum();
        assert!(oracle < 1e-30);
        let v = coherent_state(cz(1.0, 0.0), 30).unwrap();
        assert!(v.norm_sqr() >= 1.0 - 1e-12);
    }

    #[test]
    fn coherent_truncation_is_flagged() {
        let err = coherent_state(cz(5.0, 0.0), 20).unwrap_err();
        assert!(matches!(err, Error::TruncationUnsafe { n_cut: 20, .. }));
        assert!(coherent_state::<f64>(cz(0.5, 0.5), 0).is_err());
    }

    #[test]
    fn fock_state_bounds() {
        let v = fock_state::<f64>(2, 4).unwrap();
        assert_eq!(v.amplitudes()[2], cz(1.0, 0.0));
        assert_eq!(v.norm_sqr(), 1.0);
        assert_eq!(
            fock_state::<f64>(4, 4).unwrap_err(),
            Error::IndexOutOfRange { index: 4, n_cut: 4 }
        );
    }

    #[test]
    fn bell_reductions() {
        let rho = bell(6);
        let f = reduced_field(&rho);
        for i in 0..6 {
            for j in 0..6 {
                let want = if i == j && i < 2 { 0.5 } else { 0.0 };
                assert_abs_diff_eq!(f[(i, j)].re, want, epsilon = 1e-15);
                assert_abs_diff_eq!(f[(i, j)].im, 0.0, epsilon = 1e-15);
            }
        }
        let x = reduced_qubit_bloch(&rho);
        assert_abs_diff_eq!(x.norm(), 0.0, epsilon = 1e-15);
        assert_eq!(rho.purity_flag(), Purity::Pure);
        assert_abs_diff_eq!(rho.purity(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn product_reductions() {
        let n = 5;
        let field = outer(
            &coherent_state(cz(0.3, -0.2), n).unwrap(),
            &coherent_state(cz(0.3, -0.2), n).unwrap(),
        );
        let tr = trace(&field).re;
        let field = field.map(|z| z / tr);
        let mut up = CMatrix::zeros(2, 2);
        up[(0, 0)] = cz(1.0, 0.0);
        let rho = JointState::product(&up, &field).unwrap();
        let f = reduced_field(&rho);
        assert!((f - &field).iter().all(|z| z.norm() < 1e-15));
        let x = reduced_qubit_bloch(&rho);
        assert!(x.max_abs_diff(BlochVector::new(0.0, 0.0, 1.0)) < 1e-15);
    }

    #[test]
    fn equal_field_branches_reduce_to_plus_x() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        for n in 0..3 {
            let f = fock_state(n, 4).unwrap();
            let rho = pure_joint(&f, &f, cz(s, 0.0), cz(s, 0.0)).unwrap();
            let x = reduced_qubit_bloch(&rho);
            assert_abs_diff_eq!(x.x1, 1.0, epsilon = 1e-15);
            assert_abs_diff_eq!(x.x2, 0.0, epsilon = 1e-15);
            assert_abs_diff_eq!(x.x3, 0.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn pure_joint_rejects_zero_vector() {
        let f = fock_state::<f64>(0, 3).unwrap();
        assert_eq!(
            pure_joint(&f, &f, cz(0.0, 0.0), cz(0.0, 0.0)).unwrap_err(),
            Error::ZeroNorm
        );
        let g = fock_state::<f64>(0, 4).unwrap();
        assert!(matches!(
            pure_joint(&f, &g, cz(1.0, 0.0), cz(0.0, 0.0)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn mix_validation() {
        let a = bell(3);
        let single = mix_states(&[(1.0, &a)]).unwrap();
        assert_eq!(single, a);
        assert!(matches!(
            mix_states(&[(-0.1, &a), (1.1, &a)]),
            Err(Error::InvalidWeights(_))
        ));
        assert!(matches!(
            mix_states(&[(0.5, &a), (0.4, &a)]),
            Err(Error::InvalidWeights(_))
        ));
        let b = bell(4);
        assert!(matches!(
            mix_states(&[(0.5, &a), (0.5, &b)]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(mix_states::<f64>(&[]).is_err());
    }

    #[test]
    fn from_matrix_rejects_non_states() {
        let n = 2;
        let mut m = CMatrix::<f64>::zeros(4, 4);
        m[(0, 0)] = cz(1.5, 0.0);
        m[(1, 1)] = cz(-0.5, 0.0);
        let err = JointState::from_matrix(m, n, Purity::Unknown).unwrap_err();
        assert!(matches!(err, Error::InvalidState(ref s) if s.contains("semidefinite")));

        let mut m = CMatrix::<f64>::zeros(4, 4);
        m[(0, 0)] = cz(0.5, 0.0);
        assert!(JointState::from_matrix(m, n, Purity::Unknown).is_err());

        let mut m = CMatrix::<f64>::zeros(4, 4);
        m[(0, 0)] = cz(1.0, 0.0);
        m[(0, 1)] = cz(0.1, 0.0);
        assert!(JointState::from_matrix(m, n, Purity::Unknown).is_err());

        let mut m = CMatrix::<f64>::zeros(4, 4);
        m[(0, 0)] = cz(f64::NAN, 0.0);
        assert!(JointState::from_matrix(m, n, Purity::Unknown).is_err());
    }

    #[test]
    fn n_cut_rule() {
        assert_eq!(default_n_cut(0.0), 24);
        assert_eq!(default_n_cut(1.0), 24);
        assert_eq!(default_n_cut(3.0), 37);
        assert_eq!(default_n_cut(5.0), 65);
        assert_eq!(default_n_cut(30.0), 1090);
    }

    #[test]
    fn single_precision_instantiates() {
        let v = coherent_state(Complex::<f32>::new(1.0, 0.5), 20).unwrap();
        assert!((v.norm_sqr() + v.tail_bound() - 1.0).abs() < 1e-5);
        let s = std::f32::consts::FRAC_1_SQRT_2;
        let rho = pure_joint(
            &fock_state::<f32>(0, 3).unwrap(),
            &fock_state::<f32>(1, 3).unwrap(),
            Complex::new(s, 0.0),
            Complex::new(s, 0.0),
        )
        .unwrap();
        assert!(reduced_qubit_bloch(&rho).norm() < 1e-6);
    }
}
