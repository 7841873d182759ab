//! Heterodyne steering of a qubit entangled with a bosonic mode.
//!
//! A joint qubit–field state is reduced to four conditioned field operators
//! `F_ν = Tr_S(ρ σ_ν ⊗ 1)`. Projecting the field on a coherent state `|β⟩`
//! leaves the qubit at Bloch vector `X_j = ⟨β|F_j|β⟩ / ⟨β|F_0|β⟩`, and
//! sweeping `β` over the plane traces the steered set.
//!
//! Everything is generic over the real scalar (`f32` or `f64`); the `*F64`
//! aliases below fix the usual choice.

// Negated comparisons are deliberate: they reject NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod dynamics;
pub mod error;
pub mod hilbert;
pub mod scalar;
pub mod states;
pub mod steering;
pub mod validation;

pub use dynamics::{jc_closed_form_state, jc_propagate, steering_trajectory, JCModel, Propagation, TrajectoryPoint};
pub use error::{Error, Result};
pub use hilbert::{
    coherent_state, default_n_cut, fock_state, mix_states, pure_joint, pure_state_concurrence, reduced_field,
    reduced_qubit_bloch, BlochVector, CMatrix, FockVector, JointState, Purity,
};
pub use scalar::{Amplitude, Real};
pub use states::{CoherentPairParam, ExampleState, JCParam, MixedStateParam};
pub use steering::{
    conditioned_operators, heterodyne_steer, mixed_projection_steer, no_signalling_residual, sweep,
    two_qubit_ellipsoid, two_qubit_steered_point, ConditionedOperators, NoSignalling, SampleFlag,
    SteeringSample, SweepGrid, TwoQubitTheta,
};

pub type AmplitudeF64 = Amplitude<f64>;
pub type BlochVectorF64 = BlochVector<f64>;
pub type FockVectorF64 = FockVector<f64>;
pub type JointStateF64 = JointState<f64>;
pub type ConditionedOperatorsF64 = ConditionedOperators<f64>;
pub type SteeringSampleF64 = SteeringSample<f64>;
pub type SweepGridF64 = SweepGrid<f64>;
pub type JCModelF64 = JCModel<f64>;
pub type TwoQubitThetaF64 = TwoQubitTheta<f64>;
pub type ExampleStateF64 = ExampleState<f64>;
