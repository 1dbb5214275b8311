//! Apéry sets and invariants of numerical monoids.
//!
//! Every numerical monoid `M = <n_1, ..., n_k>` is the member `M_{n_1}` of
//! the shifted family over `S = <n_2 - n_1, ..., n_k - n_1>`. When
//! `n_1 > (n_k - n_1)^2` its Apéry set follows from the gaps and minimum
//! factorization lengths of `S` in time linear in `n_1`; otherwise
//! [`apery_classic`] runs a shortest-path computation over residue classes.
//! [`apery_auto`] picks between the two.
//!
//! ```
//! use apery_core::{apery_auto, AperyPath, InvariantReport, NumericalMonoid};
//!
//! let m = NumericalMonoid::new(&[10, 12, 13]).unwrap();
//! let out = apery_auto(&m).unwrap();
//! assert_eq!(out.path, AperyPath::Fast);
//! assert_eq!(out.apery.sorted(), vec![0, 12, 13, 24, 25, 26, 37, 38, 39, 51]);
//!
//! let report = InvariantReport::from_apery(&out.apery).unwrap();
//! assert_eq!((report.frobenius, report.genus), (41, 22));
//! ```

pub mod apery;
pub mod error;
pub mod invariants;
pub mod minlen;
pub mod monoid;
pub mod quasipoly;
pub mod shifted;
pub mod sweep;

pub use apery::{apery_classic, apery_classic_with_deadline, apery_multiplicity, AperySet};
pub use error::{Error, FitError, Result};
pub use invariants::InvariantReport;
pub use minlen::MinLengthTable;
pub use monoid::{parse_generators, GeneratorTuple, NumericalMonoid};
pub use quasipoly::{fit, QuasiPolynomial, VerifyReport};
pub use shifted::{
    apery_auto, apery_auto_with_deadline, decompose_as_shift, family_member, large_apery_of_base,
    shifted_apery, AperyOutcome, AperyPath, EligibilityCheck, FamilyMember, ShiftEligibility,
    ShiftedFamily,
};
pub use sweep::{Invariant, ScanRow};
