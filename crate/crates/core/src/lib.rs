//! Numerical laboratory for direct-action scalar field theory on a periodic 1+1D box.
//!
//! * [`lattice`]: box discretization, momentum grid and dispersion.
//! * [`propagators`]: the eight propagator kernels as exact mode sums, the
//!   decomposition and antisymmetry checks, and the `iε` frequency integral.
//! * [`fock`]: truncated Fock space with particle and antiparticle ladders; an
//!   independent oracle for the time-ordered two-point function.
//! * [`dirac`]: gamma matrices, rest-frame and plane-wave spinors, probability currents.
//! * [`absorber`]: double sums of currents against kernels, emission spectra and
//!   light-tight configurations.
//! * [`suite`] and [`cli`]: the verification suite and the batch front end.

pub mod absorber;
pub mod cli;
pub mod dirac;
pub mod error;
pub mod fock;
pub mod lattice;
pub mod propagators;
pub mod quadrature;
pub mod report;
pub mod sampling;
pub mod suite;
pub mod sum;

pub use error::{Error, Result};
pub use lattice::{omega, Lattice, LatticeSpec};
pub use propagators::{eval_kernel, KernelKind, SpacetimePoint};
