//! Finite quandles, their inner automorphism groups, and the decomposition of
//! the quandle ring `C[X]` as a permutation representation of `Inn(X)`.
//!
//! ```
//! use quandlekit::{affine, gelfand::is_multiplicity_free, inner::inner_group};
//!
//! let q = affine(13, 8).unwrap();
//! assert_eq!(inner_group(&q).unwrap().order(), 52);
//! assert!(is_multiplicity_free(&q).unwrap().multiplicity_free);
//! ```

pub mod arith;
pub mod error;
pub mod gelfand;
pub mod inner;
pub mod io;
pub mod perm;
pub mod quandle;
pub mod report;
pub mod repr;
pub mod tensor;

pub use error::{Axiom, AxiomViolation, GelfandError, InnerError, ParseError, PermError, QuandleError, ReprError, TableError};
pub use perm::{Permutation, PermutationGroup};
pub use quandle::{affine, affine_quandle, validate_quandle, AbelianGroup, AffineSpec, CayleyQuandle};
