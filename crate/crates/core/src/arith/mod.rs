//! Exact coefficient arithmetic and integer-lattice linear algebra.
//!
//! Every coefficient ring used downstream is a concrete type here: big
//! integers, residues modulo `n`, sparse (Laurent) polynomials, the
//! localized Eisenstein ring `Z[t, 1/3]/(t^2 - t + 1)`, the three-dimensional
//! base ring spanned by `{1, s, z}`, and finite-rank rings given by structure
//! constants over `Z/n1 + ... + Z^k`.

mod eisenstein;
mod finite_ring;
mod lattice;
mod modint;
mod poly;
mod sz;

pub use eisenstein::EisensteinLoc;
pub use finite_ring::FiniteRing;
pub use lattice::{
    echelon, integer_kernel, module_quotient, solve_integer, Echelon, Endo, MixedLattice, Quotient,
};
pub use modint::ModularInt;
pub use poly::{Monomial, MultiPoly, Var};
pub use sz::SZBase;

use thiserror::Error;

/// Arbitrary-precision signed integer used for every exact coefficient.
pub type Integer = num_bigint::BigInt;

/// A coordinate vector over `Z` (torsion coordinates are reduced by the owner).
pub type Vector = Vec<Integer>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("variable `{0}` is used both as a Laurent and as a polynomial variable")]
    IncompatibleVariables(String),
    #[error("negative exponent {exp} for non-Laurent variable `{var}`")]
    NegativeExponent { var: String, exp: i32 },
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("modulus must be positive, got {0}")]
    BadModulus(i64),
    #[error("denominator {0} is not a power of 3")]
    NotThreeLocal(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("sub-lattice does not contain the ambient relations")]
    NotContained,
    #[error("linear system has no integer solution")]
    NoSolution,
    #[error("ill-defined quotient: {0}")]
    IllDefinedQuotient(String),
    #[error("structure constants are not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
}

pub(crate) fn zero_vec(n: usize) -> Vector {
    vec![Integer::from(0); n]
}

pub(crate) fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Integer::from(1);
    v
}

/// Convenience constructor: integer vector from `i64` entries.
pub fn ivec(v: &[i64]) -> Vector {
    v.iter().map(|&x| Integer::from(x)).collect()
}
