//! Simulation core for a measurement-fueled two-qubit quantum heat engine.
//!
//! Two coupled qubits with isotropic exchange coupling serve as the working
//! medium. A non-selective generalized spin measurement injects energy like a
//! hot reservoir; an optional ergotropy stroke extracts the work stored in
//! the resulting population inversion; a single cold reservoir closes the
//! cycle. The crate drives the five-, four-, and three-stroke variants of
//! this cycle and cross-checks every closed-form expression for their
//! energetics against a brute-force density-matrix channel.
//!
//! Modules:
//!
//! - [`matrix`], [`spectrum`], [`state`], [`channel`]: dense complex linear
//!   algebra, Hermitian diagonalization, thermal states, Kraus channels —
//!   the brute-force route everything else is checked against.
//! - [`model`]: the coupled-qubit Hamiltonian and its closed-form spectrum.
//! - [`measurement`]: generalized measurement operators for arbitrary qubit
//!   directions plus closed-form post-measurement distributions.
//! - [`ergotropy`]: passive states, extractable work, ordering classes.
//! - [`cycle`]: stroke drivers and per-cycle ledgers.
//! - [`analytics`]: closed-form energetics used to validate the drivers.
//!
//! All numerics are generic over the scalar type through [`Real`]; the
//! `*F64`/`*F32` aliases at the crate root pick concrete precisions.

pub mod analytics;
pub mod channel;
pub mod cycle;
pub mod ergotropy;
pub mod error;
pub mod matrix;
pub mod measurement;
pub mod model;
pub mod scalar;
pub mod spectrum;
pub mod state;
pub mod tolerance;

pub use error::{Error, Result};
pub use num_complex::Complex;
pub use scalar::{real, Real};
pub use tolerance::Tolerances;

pub use channel::{apply_channel, validate_kraus};
pub use cycle::{
    run_five_stroke, run_four_stroke, run_three_stroke, verify_work_identity, CycleKind,
    StrokeLedger, WorkIdentity,
};
pub use ergotropy::{
    classify_zz, ergotropy_extract, is_active, r1_c0_interval, ErgotropyExtraction, OrderingClass,
    OrderingTag,
};
pub use matrix::ComplexMatrix;
pub use measurement::{
    build_kraus, post_measurement, Direction, KrausSet, MeasurementRoute, MeasurementSpec,
    PostMeasurement,
};
pub use model::{analytic_spectrum, hamiltonian, level_energies, EngineParams};
pub use spectrum::{eig_hermitian, Spectrum};
pub use state::{gibbs_state, mean_energy, occupations, DensityMatrix, OccupationDist};

pub type ComplexMatrixF64 = ComplexMatrix<f64>;
pub type DensityMatrixF64 = DensityMatrix<f64>;
pub type OccupationDistF64 = OccupationDist<f64>;
pub type SpectrumF64 = Spectrum<f64>;
pub type EngineParamsF64 = EngineParams<f64>;
pub type MeasurementSpecF64 = MeasurementSpec<f64>;
pub type KrausSetF64 = KrausSet<f64>;
pub type StrokeLedgerF64 = StrokeLedger<f64>;

pub type ComplexMatrixF32 = ComplexMatrix<f32>;
pub type DensityMatrixF32 = DensityMatrix<f32>;
pub type OccupationDistF32 = OccupationDist<f32>;
pub type SpectrumF32 = Spectrum<f32>;
pub type EngineParamsF32 = EngineParams<f32>;
pub type MeasurementSpecF32 = MeasurementSpec<f32>;
pub type KrausSetF32 = KrausSet<f32>;
pub type StrokeLedgerF32 = StrokeLedger<f32>;
