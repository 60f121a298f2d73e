//! Gröbner basis computation over ℚ and prime fields.
//!
//! The crate provides three engines for the same problem, computing a
//! Gröbner basis of the ideal spanned by a list of input polynomials:
//!
//! * [`f5b`] — a signature-based engine in the style of Buchberger's loop.
//!   Every basis element carries a signature (a module monomial) and a
//!   creation ordinal; critical pairs are discarded by the syzygy and
//!   rewritten criteria before any polynomial arithmetic happens, and
//!   reduction is restricted so signatures never change.
//! * [`buchberger`] — the classic algorithm, kept deliberately simple
//!   (coprime-leading-term skip is its only shortcut) so it can serve as an
//!   independent correctness oracle for the other engines.
//! * [`matrix_f5`] — a degree-by-degree variant for homogeneous inputs over
//!   prime fields that assembles Macaulay-style matrices, filters rows with
//!   the same two criteria, and row-reduces them one way (rows may only be
//!   reduced by rows with smaller signatures).
//!
//! Polynomials are dense-ordered term lists over either ℚ (arbitrary
//! precision, always in lowest terms) or GF(p) for a prime modulus
//! (canonical residues). Lex, graded lex and graded reverse lex term orders
//! are supported; grevlex is the conventional default.

pub mod buchberger;
pub mod f5;
pub mod field;
pub mod matrix;
pub mod monomial;
pub mod pair;
pub mod poly;
pub mod signature;
pub mod stats;
pub mod text;
pub mod trace;

pub use buchberger::{buchberger, is_groebner, reduce_basis};
pub use f5::{f5b, F5Config, F5Output, Strategy};
pub use field::{CoefficientField, FieldElement, FieldError};
pub use matrix::{matrix_f5, MacaulayMatrix, MatrixConfig, MatrixOutput};
pub use monomial::{Monomial, MonomialError, MonomialOrder, OrderKind};
pub use pair::{make_pair, spoly_labeled, CriticalPair};
pub use poly::{normal_form, spoly_plain, Polynomial, PolynomialError};
pub use signature::{is_divisible, is_rewritable, LabeledPoly, Signature};
pub use stats::RunStats;
pub use text::{parse_polynomial, parse_system, render_polynomial, ParseError, Ring};
pub use trace::{RejectReason, TraceEvent};

/// Errors shared by the engine entry points.
#[derive(Debug, thiserror::Error)]
pub enum EngineError {
    /// The input list is unusable as an ideal basis.
    #[error("invalid input: {0}")]
    Input(String),
    /// A selected critical pair exceeded the configured lcm-degree cap.
    #[error("degree cap {cap} exceeded by a pair of lcm degree {degree}")]
    DegreeCapExceeded { cap: u32, degree: u32 },
    /// Both sides of a critical pair carry the same signature, so its
    /// S-polynomial has no well-defined signature.
    #[error("critical pair sides have equal signatures")]
    SignatureTie,
    /// A pair was requested from an empty pair set.
    #[error("no critical pairs left to select")]
    EmptyPairSet,
    /// The matrix engine requires homogeneous inputs.
    #[error("input polynomial {0} is not homogeneous")]
    NotHomogeneous(usize),
    /// The matrix engine only supports prime fields.
    #[error("unsupported coefficient field for this engine")]
    UnsupportedField,
}
