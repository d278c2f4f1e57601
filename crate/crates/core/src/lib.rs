//! Exact annihilator ideals of inverse forms.
//!
//! The crate computes, over GF(2), GF(p) and the rationals, the module of
//! bivariate annihilators of a nonzero inverse form: a pair of forms that
//! generates the annihilator ideal, the minimal graded lexicographic
//! Groebner basis it induces, and the reduced basis. Specialising the
//! inverse form of a finite sequence yields an LFSR synthesis algorithm
//! and linear complexity profiles; syzygy computations intersect the
//! annihilator ideals of two sequences.

pub mod annihilator;
pub mod bipoly;
pub mod cli;
pub mod field;
pub mod groebner;
pub mod invform;
pub mod oracle;
pub mod sequence;

pub use annihilator::{AnnihilatorResult, TraceRow, ViablePair};
pub use bipoly::{Form, Monomial, ParseError, UniPoly};
pub use field::{Field, FieldElement, FieldError};
pub use groebner::{ModuleTerm, Poly, PolyVector};
pub use invform::InverseForm;
pub use oracle::{LaurentPoly, RefusalError};
pub use sequence::{BmPair, SequenceRecord, UsageError};
