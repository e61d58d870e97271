//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors surfaced by ring construction, enumeration guards, weight and
/// partition compatibility checks, and the exact LP solver.
///
/// Exactness violations (`NotRational`, `NonIntegerResult`) always signal
/// an upstream bug rather than bad user input: the theorems guarantee
/// rational/integer values, so these are never rounded away.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// `p` is not prime.
    NotPrime(u64),
    /// The modulus polynomial is missing for an extension of degree > 1
    /// with no built-in default.
    MissingModulus { p: u64, r: usize },
    /// The modulus polynomial is not monic of the expected degree, or its
    /// reduction mod p is reducible.
    BadModulus(String),
    /// Element coefficients out of range or of the wrong length.
    BadElement(String),
    /// Weight kind incompatible with the ring (Lee needs r = 1, subfield
    /// needs s = 1, subfield scale must be ≥ 1).
    IncompatibleWeight(String),
    /// Partition kind incompatible with the ring (Z/U/S/R needs s ≥ 2,
    /// base-field orbits need s = 1, Lee blocks need r = 1).
    IncompatiblePartition(String),
    /// Mixed-order cyclotomic operands.
    MixedCyclotomicOrder { left: u64, right: u64 },
    /// The cyclotomic integer is not rational.
    NotRational,
    /// An identity right-hand side failed the integrality check.
    NonIntegerResult(String),
    /// An exhaustive enumeration would exceed the guard.
    GuardExceeded { size: u128, guard: u64 },
    /// Tuple lengths disagree.
    LengthMismatch { left: usize, right: usize },
    /// A weight kind is not constant on some block of a partition.
    WeightNotConstantOnBlock { block: usize },
    /// The expected counterexample pair was not found by the search.
    NotFound(String),
    /// The LP has no feasible point (signals a construction bug).
    Infeasible,
    /// The LP is unbounded (signals a construction bug).
    Unbounded,
    /// The requested operation needs a capability the inputs lack.
    Unsupported(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::MissingModulus { p, r } => write!(
                f,
                "no modulus polynomial given for GR({p}^s, {r}) and no built-in default"
            ),
            Error::BadModulus(msg) => write!(f, "bad modulus polynomial: {msg}"),
            Error::BadElement(msg) => write!(f, "bad ring element: {msg}"),
            Error::IncompatibleWeight(msg) => write!(f, "incompatible weight: {msg}"),
            Error::IncompatiblePartition(msg) => write!(f, "incompatible partition: {msg}"),
            Error::MixedCyclotomicOrder { left, right } => {
                write!(f, "mixed cyclotomic orders {left} and {right}")
            }
            Error::NotRational => write!(f, "cyclotomic integer is not rational"),
            Error::NonIntegerResult(msg) => {
                write!(f, "identity right-hand side is not an integer: {msg}")
            }
            Error::GuardExceeded { size, guard } => {
                write!(f, "enumeration of {size} elements exceeds guard {guard}")
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "tuple length mismatch: {left} vs {right}")
            }
            Error::WeightNotConstantOnBlock { block } => {
                write!(f, "weight is not constant on partition block {block}")
            }
            Error::NotFound(msg) => write!(f, "not found: {msg}"),
            Error::Infeasible => write!(f, "linear program is infeasible"),
            Error::Unbounded => write!(f, "linear program is unbounded"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
