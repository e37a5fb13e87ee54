//! Clifford algebras with non-symmetric forms, the Hecke algebras embedded in
//! them, q-Young operators, Garnir elements, intertwiners and the left
//! regular representation of H(3, q).

pub mod appendix;
pub mod clifford;
pub mod error;
pub mod formula;
pub mod garnir;
pub mod hecke;
pub mod linalg;
pub mod repmat;
pub mod young;

pub use error::{CoreError, Result};
