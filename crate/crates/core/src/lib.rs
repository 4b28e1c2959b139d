//! Clifford algebras `Cl(p, q)` over real signatures and the spinor
//! machinery built on them.
//!
//! * [`multivector`] and [`algebra`]: exact or floating-point multivector
//!   arithmetic, involutions, norm, Coxeter element and center.
//! * [`classify`]: the mod-8 table, even subalgebras, periodicity.
//! * [`lipschitz`]: reflections, the twisted adjoint, Pin/Spin membership,
//!   rotors and Lie-algebra spans.
//! * [`matrep`]: gamma matrices from Pauli tensor products, charge
//!   conjugation and KO-dimension signs.
//! * [`dirac`]: the 4D Minkowski spinor toolkit.
//! * [`majorana`]: Majorana mass-term and current audits, seesaw block.

pub mod algebra;
pub mod blade;
pub mod classify;
pub mod dirac;
pub mod error;
pub mod linalg;
pub mod lipschitz;
pub mod majorana;
pub mod matrep;
pub mod multivector;
pub mod scalar;
pub mod signature;
pub mod text;

pub use blade::Blade;
pub use error::{CliffError, Result};
pub use multivector::{Multivector, Parity};
pub use scalar::{GaussianRational, Rational, Scalar};
pub use signature::Signature;
