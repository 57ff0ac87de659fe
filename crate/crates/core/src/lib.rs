//! Exact symbolic computation for the restricted Jordan plane in
//! characteristic 2: the bosonization H, the Drinfeld double D(H), the
//! restricted enveloping algebra u(m), its module zoo, and the
//! infinite-dimensional cover of the double, with machine checks for the
//! presentations, exact sequences and module-theoretic structure.

pub mod algebra;
pub mod error;
pub mod field;
pub mod hopf;
pub mod identities;
pub mod lie;
pub mod matrix;
pub mod monomial;
pub mod pairing;
pub mod presentation;
pub mod quiver;
pub mod rep;
pub mod rewrite;
pub mod suites;
pub mod zoo;

pub use error::{Error, Result};
pub use field::{Field, Fq};
pub use matrix::{Matrix, Subspace};
pub use monomial::{Cap, Element, GenId, GeneratorSpec, Monomial};
