//! Stochastic vortex-blob method for the forced 3d Navier-Stokes equations.
//!
//! The crate simulates an interacting system of random vortex particles with
//! space-time births: each particle is created at a random instant and
//! position, carries a rotation vector that is deformed by a stretching
//! matrix, and interacts with the others through a mollified Biot-Savart
//! kernel.  Macroscopic vorticity and velocity fields are reconstructed from
//! weighted empirical measures of the ensemble.  An independent deterministic
//! solver for the mild vortex equation on a large periodic box (Picard
//! fixed-point and pseudo-spectral time stepping) serves as the reference the
//! particle method is validated against.
//!
//! Module map:
//! - [`cutoff`]: mollifier profiles (selected by name from a registry).
//! - [`kernels`]: exact and mollified Biot-Savart kernels and their bounds.
//! - [`forcing`]: problem data (initial vorticity, curl of the force).
//! - [`birth`]: the normalized space-time birth law and its samplers.
//! - [`particles`]: the interacting n-particle system and its integrator.
//! - [`fields`]: empirical vorticity/velocity reconstruction on grids.
//! - [`oracle`]: the spectral reference solvers on a periodic box.
//! - [`harness`]: experiment orchestration, reports and the CLI backend.

pub mod birth;
pub mod cutoff;
pub mod fields;
pub mod forcing;
pub mod harness;
pub mod kernels;
pub mod oracle;
pub mod particles;
pub mod quadrature;
pub mod rngstream;

pub use cutoff::CutoffProfile;
pub use kernels::MollifiedKernel;
