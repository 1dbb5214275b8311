//! Invariants read off an Apéry set.

use serde::Serialize;

use crate::apery::AperySet;
use crate::error::{to_signed, Error, Result};

/// `max(Ap) - x` for primitive monoids, `d * F(M / d)` otherwise. The monoid
/// of all non-negative integers has Frobenius number `-1`.
pub fn frobenius(ap: &AperySet) -> Result<i64> {
    let d = ap.monoid().gcd();
    let top = to_signed(ap.max() / d, "Frobenius number")?;
    let base = to_signed(ap.base() / d, "Frobenius number")?;
    (top - base)
        .checked_mul(d as i64)
        .ok_or(Error::Overflow("Frobenius number"))
}

/// `sum floor(a / x)` over the Apéry set, scaled by `d` for non-primitive
/// monoids.
pub fn genus(ap: &AperySet) -> Result<u64> {
    let d = ap.monoid().gcd();
    let x = ap.base();
    let per_quotient: u64 = ap.elements().iter().map(|&a| a / x).sum();
    per_quotient.checked_mul(d).ok_or(Error::Overflow("genus"))
}

fn require_primitive(ap: &AperySet) -> Result<()> {
    let d = ap.monoid().gcd();
    if d == 1 {
        Ok(())
    } else {
        Err(Error::NotPrimitive(d))
    }
}

/// Every positive integer below its class minimum, sorted.
pub fn gaps(ap: &AperySet) -> Result<Vec<u64>> {
    require_primitive(ap)?;
    let x = ap.base();
    let mut out: Vec<u64> = ap
        .elements()
        .iter()
        .flat_map(|&a| (1..=a / x).map(move |t| a - t * x))
        .filter(|&g| g > 0)
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// `{ w - x : w maximal in Ap(M; x) }` where `w <= v` iff `v - w` is in `M`.
///
/// `w` is maximal iff `w + g` leaves the Apéry set for every generator `g`:
/// if `v - w` is a nonzero element, it is `g + s` for some generator `g`,
/// and `w + g` sits below `v` inside the Apéry set.
pub fn pseudo_frobenius(ap: &AperySet) -> Result<Vec<u64>> {
    require_primitive(ap)?;
    let x = ap.base();
    let gens = ap.monoid().generators();
    let mut pf: Vec<u64> = ap
        .elements()
        .iter()
        .copied()
        .filter(|&w| w > x)
        .filter(|&w| {
            gens.iter()
                .all(|&g| g == x || (w + g >= x && ap.contains(w + g - x)))
        })
        .map(|w| w - x)
        .collect();
    pf.sort_unstable();
    Ok(pf)
}

/// `k (F - g) - (F + 1)`.
pub fn wilf_number(frobenius: i64, genus: u64, embedding_dimension: usize) -> Result<i64> {
    let k = embedding_dimension as i128;
    let f = frobenius as i128;
    let g = genus as i128;
    i64::try_from(k * (f - g) - (f + 1)).map_err(|_| Error::Overflow("Wilf number"))
}

/// `(symmetric, pseudosymmetric)`: `PF = {F}` and `PF = {F/2, F}`.
pub fn symmetry_flags(pf: &[u64], frobenius: i64) -> (bool, bool) {
    let symmetric = frobenius >= 0 && pf == [frobenius as u64];
    let pseudosymmetric =
        frobenius > 0 && frobenius % 2 == 0 && pf == [frobenius as u64 / 2, frobenius as u64];
    (symmetric, pseudosymmetric)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub generators: Vec<u64>,
    pub gcd: u64,
    pub primitive: bool,
    /// The monoid is all of the non-negative integers.
    pub trivial: bool,
    pub embedding_dimension: usize,
    pub frobenius: i64,
    pub genus: u64,
    /// Primitive monoids only.
    pub pseudo_frobenius: Option<Vec<u64>>,
    /// Primitive, non-trivial monoids only.
    #[serde(rename = "type")]
    pub type_: Option<usize>,
    pub wilf: Option<i64>,
    pub symmetric: Option<bool>,
    pub pseudosymmetric: Option<bool>,
}

impl InvariantReport {
    pub fn from_apery(ap: &AperySet) -> Result<Self> {
        let monoid = ap.monoid();
        let frobenius = frobenius(ap)?;
        let genus = genus(ap)?;
        let primitive = monoid.is_primitive();
        let trivial = monoid.is_trivial();
        let k = monoid.embedding_dimension();
        let mut report = InvariantReport {
            generators: monoid.generators().to_vec(),
            gcd: monoid.gcd(),
            primitive,
            trivial,
            embedding_dimension: k,
            frobenius,
            genus,
            pseudo_frobenius: None,
            type_: None,
            wilf: None,
            symmetric: None,
            pseudosymmetric: None,
        };
        if primitive {
            let pf = pseudo_frobenius(ap)?;
            report.wilf = Some(wilf_number(frobenius, genus, k)?);
            if !trivial {
                let (sym, pseudo) = symmetry_flags(&pf, frobenius);
                report.type_ = Some(pf.len());
                report.symmetric = Some(sym);
                report.pseudosymmetric = Some(pseudo);
            }
            report.pseudo_frobenius = Some(pf);
        }
        Ok(report)
    }
}
