use thiserror::Error;

use crate::shifted::EligibilityCheck;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive integers")]
    ZeroGenerator,
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("{0} is not an element of the monoid")]
    NotAnElement(u64),
    #[error("base element must be positive")]
    ZeroBase,
    #[error("a single-generator monoid has no shift decomposition")]
    NoShiftDecomposition,
    #[error("shift n = {n} is not eligible for the fast path: {check}")]
    Ineligible { n: u64, check: EligibilityCheck },
    #[error(
        "Ap(S; dn) closed form needs dn in S and dn > F(S) (n = {n}); use the classic algorithm"
    )]
    LargeAperyPrecondition { n: u64 },
    #[error("monoid is not primitive (gcd {0})")]
    NotPrimitive(u64),
    #[error("computation exceeded its deadline")]
    DeadlineExceeded,
    #[error("cannot allocate a table of {0} residue classes")]
    TooLarge(u64),
    #[error(transparent)]
    Fit(#[from] FitError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FitError {
    #[error("period must be positive")]
    ZeroPeriod,
    #[error("no samples supplied")]
    NoSamples,
    #[error("sample at n = {n} lies below the validity threshold {valid_from}")]
    SampleBelowThreshold { n: u64, valid_from: u64 },
    #[error("residue class {residue}: need {needed} samples, have {have}")]
    InsufficientSamples {
        residue: u64,
        needed: usize,
        have: usize,
    },
    #[error("residue class {residue}: samples are not spaced by the period")]
    IrregularSpacing { residue: u64 },
    #[error("residue class {residue}: samples are not a polynomial of degree {degree}")]
    Inconsistent { residue: u64, degree: usize },
    #[error("leading coefficient is zero on every residue class")]
    ZeroLeading,
    #[error("n = {n} lies below the validity threshold {valid_from}")]
    BelowThreshold { n: u64, valid_from: u64 },
    #[error("residue class {residue} has no fitted polynomial")]
    AbsentClass { residue: u64 },
}

impl Error {
    pub fn is_overflow(&self) -> bool {
        matches!(self, Error::Overflow(_))
    }

    /// Deadline and budget failures, as opposed to bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::DeadlineExceeded | Error::TooLarge(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn add(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

pub(crate) fn mul(a: u64, b: u64, what: &'static str) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

pub(crate) fn to_signed(a: u64, what: &'static str) -> Result<i64> {
    i64::try_from(a).map_err(|_| Error::Overflow(what))
}
