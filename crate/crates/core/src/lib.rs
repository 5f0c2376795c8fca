//! Exact verification of the non-rationality argument for the
//! S6-invariant quartic threefolds `X_t : t * sum x_i^4 - (sum x_i^2)^2 = 0`
//! in the hyperplane `sum x_i = 0` of projective 5-space.
//!
//! Layers, bottom-up: exact fields ([`exactfield`]), sparse polynomials
//! ([`multipoly`]), dense linear algebra ([`exactlinalg`]), Groebner bases
//! ([`groebner`]), the symmetric group ([`symmetric`]), the geometry of the
//! pencil ([`pencil`]) and the per-parameter certificate ([`certificate`]).

pub mod certificate;
pub mod error;
pub mod exactfield;
pub mod exactlinalg;
pub mod groebner;
pub mod multipoly;
pub mod pencil;
pub mod symmetric;

pub use certificate::{run_certificate, Certificate, Check, Status, Verdict};
pub use error::{Error, Result};
pub use exactfield::{CycNum, Field, Rat};
pub use exactlinalg::Mat;
pub use groebner::GroebnerBasis;
pub use multipoly::{MPoly, Mono, MonomialOrder};
pub use symmetric::{Perm, ProjPoint};
