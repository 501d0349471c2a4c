//! Solver and analysis library for a two-particle system: one electron and
//! one positively charged particle (PCP) bound by Coulomb attraction inside
//! concentric harmonic traps of shared frequency.
//!
//! The coupled problem separates exactly into a center-of-mass oscillator
//! ([`model::ComGaussian`]) and a radial relative-motion equation solved by
//! finite differences ([`radial`]). A two-component mean-field reference is
//! built from s-type Gaussian bases ([`mchf`]), and [`correlation`] derives
//! every electron-PCP correlation diagnostic from the two: one-particle
//! densities, intracule distributions, correlation hills and radii, and both
//! correlation-energy definitions. [`adiabatic`] covers the clamped-particle
//! approximation and its non-adiabatic residual.
//!
//! All quantities are in Hartree atomic units.

pub mod adiabatic;
pub mod correlation;
pub mod mchf;
pub mod model;
pub mod numerics;
pub mod radial;
pub mod reference;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Scalar type used by the physics layers.
///
/// The kernels in [`numerics`] are generic over `num_traits::Float`; the
/// physics modules pin this alias because the tabulated tolerances they
/// target (1e-8 refinement, 1e-10 SCF) require double precision.
pub type Real = f64;
