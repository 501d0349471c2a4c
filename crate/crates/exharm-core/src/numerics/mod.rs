//! Scalar-generic numerical kernels: symmetric-tridiagonal lowest eigenpair,
//! quadrature rules, a bracketing root finder, and a derivative-free simplex
//! minimizer. Everything here is a pure function of its inputs.

mod interp;
mod quad;
mod roots;
mod simplex;
mod tridiag;

pub use interp::interp_cubic_uniform;
pub use quad::{simpson_uniform, trapezoid_uniform, QuadratureRule};
pub use roots::find_root;
pub use simplex::{minimize, SimplexOptions, SimplexResult};
pub use tridiag::SymTridiagonal;
