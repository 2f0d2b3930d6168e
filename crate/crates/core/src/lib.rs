//! Exact computations in the rook monoid algebra `FR_n` over the rationals.
//!
//! The crate covers rook diagrams and their factorization, elements of
//! `FR_n` together with the symmetrizers and quasi-idempotents built from
//! them, Specht modules spanned by polytabloids, the action of `FR_n` on the
//! tensor space `U^{⊗n}` with `U = F ⊕ V`, and the two-sided ideal machinery
//! used to check the structure of its annihilator.

pub mod algebra;
pub mod diagram;
pub mod error;
pub mod ideals;
pub mod linalg;
pub mod report;
pub mod specht;
pub mod tensor;
pub mod verify;

pub use diagram::{Generator, Permutation, Quadruple, RookDiagram};
pub use error::{Error, Result};
pub use linalg::{Rational, SpanBasis, SparseRationalMatrix, SparseVector};
pub use report::{Report, Sampling};
pub use tensor::SizeCaps;
