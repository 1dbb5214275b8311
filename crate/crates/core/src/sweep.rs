//! Invariants of family members as functions of the shift.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::apery::apery_classic;
use crate::error::{add, mul, Result};
use crate::invariants::{self, InvariantReport};
use crate::quasipoly::{fit, QuasiPolynomial, VerifyReport};
use crate::shifted::{AperyPath, ShiftedFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Frobenius,
    Genus,
    Wilf,
    Type,
}

impl Invariant {
    /// Degree of the eventual quasipolynomial in the shift.
    pub fn natural_degree(self) -> usize {
        match self {
            Invariant::Type => 0,
            _ => 2,
        }
    }
}

impl FromStr for Invariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "frobenius" | "F" => Ok(Invariant::Frobenius),
            "genus" | "g" => Ok(Invariant::Genus),
            "wilf" | "W" => Ok(Invariant::Wilf),
            "type" | "t" => Ok(Invariant::Type),
            other => Err(format!(
                "unknown invariant {other:?} (frobenius, genus, wilf, type)"
            )),
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Invariant::Frobenius => "frobenius",
            Invariant::Genus => "genus",
            Invariant::Wilf => "wilf",
            Invariant::Type => "type",
        })
    }
}

/// One row of a family scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub n: u64,
    pub path: AperyPath,
    pub frobenius: i64,
    pub genus: u64,
    pub type_: Option<usize>,
    pub wilf: Option<i64>,
    pub symmetric: Option<bool>,
    pub pseudosymmetric: Option<bool>,
}

/// Full invariant report for `M_n`, through the fast path when eligible.
pub fn member_report(family: &ShiftedFamily, n: u64) -> Result<(AperyPath, InvariantReport)> {
    let (path, ap) = if family.eligibility(n).passes() {
        (AperyPath::Fast, family.shifted_apery(n)?)
    } else {
        let member = family.member(n)?.monoid;
        (AperyPath::Classic, apery_classic(&member, n)?)
    };
    Ok((path, InvariantReport::from_apery(&ap)?))
}

pub fn scan_row(family: &ShiftedFamily, n: u64) -> Result<ScanRow> {
    let (path, report) = member_report(family, n)?;
    Ok(ScanRow {
        n,
        path,
        frobenius: report.frobenius,
        genus: report.genus,
        type_: report.type_,
        wilf: report.wilf,
        symmetric: report.symmetric,
        pseudosymmetric: report.pseudosymmetric,
    })
}

/// One invariant of `M_n`. Frobenius number and genus on eligible shifts use
/// the direct formulas and skip building `Ap(M_n)`.
pub fn family_value(family: &ShiftedFamily, invariant: Invariant, n: u64) -> Result<i64> {
    let eligible = family.eligibility(n).passes();
    match invariant {
        Invariant::Frobenius if eligible => family.frobenius_fast(n),
        Invariant::Genus if eligible => Ok(family.genus_fast(n)? as i64),
        Invariant::Frobenius => Ok(member_report(family, n)?.1.frobenius),
        Invariant::Genus => Ok(member_report(family, n)?.1.genus as i64),
        Invariant::Wilf => {
            let (_, report) = member_report(family, n)?;
            match report.wilf {
                Some(w) => Ok(w),
                None => invariants::wilf_number(
                    report.frobenius,
                    report.genus,
                    report.embedding_dimension,
                ),
            }
        }
        Invariant::Type => Ok(member_report(family, n)?.1.type_.unwrap_or(0) as i64),
    }
}

/// The first `count` shifts `n >= from` with `gcd(n, d) = 1`.
pub fn admissible_shifts(family: &ShiftedFamily, from: u64, count: usize) -> Vec<u64> {
    (from.max(1)..)
        .filter(|&n| family.member_coprime(n))
        .take(count)
        .collect()
}

/// A fitted quasipolynomial together with its held-out check.
#[derive(Debug, Clone)]
pub struct FamilyFit {
    pub invariant: Invariant,
    pub quasi: QuasiPolynomial,
    pub fit_samples: BTreeMap<u64, i64>,
    pub holdout: BTreeMap<u64, i64>,
    pub verification: VerifyReport,
}

/// Fits `n -> invariant(M_n)` with period `r_k` on the first `degree + 1`
/// periods above `r_k^2`, then checks the next `holdout` admissible shifts.
pub fn fit_family(
    family: &ShiftedFamily,
    invariant: Invariant,
    degree: usize,
    holdout: usize,
) -> Result<FamilyFit> {
    let from = family.r_k() * family.r_k() + 1;
    fit_family_from(family, invariant, degree, from, holdout)
}

/// As [`fit_family`] with the sampling window starting at `from`, which
/// must exceed `r_k^2`.
pub fn fit_family_from(
    family: &ShiftedFamily,
    invariant: Invariant,
    degree: usize,
    from: u64,
    holdout: usize,
) -> Result<FamilyFit> {
    let r_k = family.r_k();
    let valid_from = r_k * r_k + 1;
    let window_end = add(
        from,
        mul(degree as u64 + 1, r_k, "fit window")?,
        "fit window",
    )?;
    let sample = |ns: &[u64]| -> Result<BTreeMap<u64, i64>> {
        ns.iter()
            .map(|&n| Ok((n, family_value(family, invariant, n)?)))
            .collect()
    };
    let fit_ns: Vec<u64> = (from..window_end)
        .filter(|&n| family.member_coprime(n))
        .collect();
    let fit_samples = sample(&fit_ns)?;
    let quasi = fit(&fit_samples, r_k, degree, valid_from)?;
    let holdout = sample(&admissible_shifts(family, window_end, holdout))?;
    let verification = quasi.verify(&holdout);
    Ok(FamilyFit {
        invariant,
        quasi,
        fit_samples,
        holdout,
        verification,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn ratio(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn genus_leading_coefficient_for_3_5() {
        let family = ShiftedFamily::from_generators(&[3, 5]).unwrap();
        let fitted = fit_family(&family, Invariant::Genus, 2, 10).unwrap();
        assert!(fitted.verification.is_exact());
        for lead in fitted.quasi.leading_coefficients() {
            assert_eq!(lead, Some(ratio(1, 10)));
        }
        let held = family.genus_fast(46).unwrap() as i64;
        assert_eq!(fitted.quasi.eval(46).unwrap(), ratio(held, 1));
    }

    #[test]
    fn frobenius_class_two_leading_coefficient() {
        let family = ShiftedFamily::from_generators(&[3, 5]).unwrap();
        let fitted = fit_family(&family, Invariant::Frobenius, 2, 10).unwrap();
        assert_eq!(fitted.quasi.leading_coefficients()[2], Some(ratio(1, 5)));
        let f101 = family.frobenius_fast(101).unwrap();
        assert_eq!(fitted.quasi.eval(101).unwrap(), ratio(f101, 1));
    }

    #[test]
    fn type_is_periodic() {
        let family = ShiftedFamily::from_generators(&[3, 5]).unwrap();
        let fitted = fit_family(&family, Invariant::Type, 0, 15).unwrap();
        assert!(fitted.verification.is_exact(), "{}", fitted.verification);
    }

    #[test]
    fn non_primitive_base_skips_even_shifts() {
        let family = ShiftedFamily::from_generators(&[4, 6]).unwrap();
        let fitted = fit_family(&family, Invariant::Genus, 2, 10).unwrap();
        let present: Vec<u64> = fitted.quasi.present_classes().collect();
        assert_eq!(present, vec![1, 3, 5]);
        assert!(fitted.holdout.keys().all(|n| n % 2 == 1));
    }

    #[test]
    fn scan_rows_agree_with_report() {
        let family = ShiftedFamily::from_generators(&[2, 3]).unwrap();
        let row = scan_row(&family, 10).unwrap();
        assert_eq!(row.path, AperyPath::Fast);
        assert_eq!(
            (row.frobenius, row.genus, row.type_, row.wilf),
            (41, 22, Some(2), Some(15))
        );
        let row = scan_row(&family, 9).unwrap();
        assert_eq!(row.path, AperyPath::Classic);
    }

    #[test]
    fn parses_invariant_names() {
        assert_eq!("genus".parse::<Invariant>().unwrap(), Invariant::Genus);
        assert!("delta".parse::<Invariant>().is_err());
    }
}
