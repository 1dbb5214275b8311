//! Apéry sets of shifted monoids `M_n = <n, n + r_1, ..., n + r_k>`.
//!
//! With `S = <r_1, ..., r_k>`, `d = gcd(S)`, `n > r_k^2`, `gcd(n, d) = 1` and
//! `dn` in `S`:
//!
//! * `Ap(S; dn) = { a_i : 0 <= i < n }` with `a_i = di` if `di` is in `S` and
//!   `a_i = di + dn` otherwise;
//! * `Ap(M_n; n) = { i + m_S(i) n : i in Ap(S; dn) }`, and each of these
//!   elements has the single factorization length `m_S(i)`.
//!
//! Both steps are linear in `n` once the gaps of `S / d` and a
//! [`MinLengthTable`] for `S` are known, and neither depends on the Frobenius
//! number of `M_n`.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::apery::{apery_classic_with_deadline, apery_multiplicity, AperySet};
use crate::error::{add, mul, to_signed, Error, Result};
use crate::invariants;
use crate::minlen::MinLengthTable;
use crate::monoid::{gcd, NumericalMonoid};

/// Which eligibility condition failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EligibilityCheck {
    ShiftAboveSquare,
    Coprime,
    MultipleInBase,
}

impl fmt::Display for EligibilityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EligibilityCheck::ShiftAboveSquare => "n must exceed r_k^2",
            EligibilityCheck::Coprime => "gcd(n, d) must be 1",
            EligibilityCheck::MultipleInBase => "dn must lie in S",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ShiftEligibility {
    pub n: u64,
    pub r_k: u64,
    pub d: u64,
    pub shift_above_square: bool,
    pub coprime: bool,
    pub multiple_in_base: bool,
}

impl ShiftEligibility {
    pub fn passes(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<EligibilityCheck> {
        if !self.shift_above_square {
            Some(EligibilityCheck::ShiftAboveSquare)
        } else if !self.coprime {
            Some(EligibilityCheck::Coprime)
        } else if !self.multiple_in_base {
            Some(EligibilityCheck::MultipleInBase)
        } else {
            None
        }
    }

    fn require(&self) -> Result<()> {
        match self.first_failure() {
            None => Ok(()),
            Some(check) => Err(Error::Ineligible { n: self.n, check }),
        }
    }
}

/// A member `M_n` of a shifted family along with the standing hypotheses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyMember {
    pub monoid: NumericalMonoid,
    pub n: u64,
    /// `n > r_k`
    pub above_base: bool,
    /// `gcd(n, d) = 1`
    pub coprime: bool,
}

/// The family `{ M_n }` over a base monoid `S`, with the per-family data the
/// fast path needs computed once up front.
#[derive(Debug, Clone)]
pub struct ShiftedFamily {
    base: NumericalMonoid,
    /// Membership in `S / d` for `0..=F(S / d)`; everything above is in.
    quotient_members: Vec<bool>,
    quotient_frobenius: i64,
    minlen: MinLengthTable,
}

impl ShiftedFamily {
    pub fn new(base: NumericalMonoid) -> Result<Self> {
        let quotient = base.primitive_quotient();
        let quotient_apery = apery_multiplicity(&quotient)?;
        let quotient_frobenius = invariants::frobenius(&quotient_apery)?;
        let quotient_members = (0..(quotient_frobenius + 1) as u64)
            .map(|x| quotient_apery.contains(x))
            .collect();
        let minlen = MinLengthTable::new(&base)?;
        Ok(Self {
            base,
            quotient_members,
            quotient_frobenius,
            minlen,
        })
    }

    pub fn from_generators(base: &[u64]) -> Result<Self> {
        Self::new(NumericalMonoid::new(base)?)
    }

    pub fn base(&self) -> &NumericalMonoid {
        &self.base
    }

    pub fn min_lengths(&self) -> &MinLengthTable {
        &self.minlen
    }

    pub fn d(&self) -> u64 {
        self.base.gcd()
    }

    pub fn r_k(&self) -> u64 {
        self.base.tuple().largest()
    }

    /// Gaps of `S / d`.
    pub fn quotient_gaps(&self) -> impl Iterator<Item = u64> + '_ {
        self.quotient_members
            .iter()
            .enumerate()
            .filter(|(_, &member)| !member)
            .map(|(i, _)| i as u64)
    }

    /// Genus of `S / d`.
    pub fn quotient_genus(&self) -> u64 {
        self.quotient_gaps().count() as u64
    }

    /// Whether `d * i` lies in `S`.
    pub fn base_contains_multiple(&self, i: u64) -> bool {
        self.quotient_members
            .get(i as usize)
            .copied()
            .unwrap_or(true)
    }

    /// `M_n = <n, n + r_1, ..., n + r_k>`.
    pub fn member(&self, n: u64) -> Result<FamilyMember> {
        if n == 0 {
            return Err(Error::ZeroGenerator);
        }
        let mut gens = Vec::with_capacity(self.base.generators().len() + 1);
        gens.push(n);
        for &r in self.base.generators() {
            gens.push(add(n, r, "shifted generator")?);
        }
        let above_base = n > self.r_k();
        let monoid = if above_base {
            NumericalMonoid::new_known_minimal(&gens)?
        } else {
            NumericalMonoid::new(&gens)?
        };
        Ok(FamilyMember {
            monoid,
            n,
            above_base,
            coprime: gcd(n, self.d()) == 1,
        })
    }

    /// `gcd(n, d) = 1`, so `M_n` is primitive.
    pub fn member_coprime(&self, n: u64) -> bool {
        gcd(n, self.d()) == 1
    }

    pub fn eligibility(&self, n: u64) -> ShiftEligibility {
        let r_k = self.r_k();
        let d = self.d();
        ShiftEligibility {
            n,
            r_k,
            d,
            shift_above_square: r_k.checked_mul(r_k).is_some_and(|sq| n > sq),
            coprime: gcd(n, d) == 1,
            multiple_in_base: n > 0 && self.base_contains_multiple(n),
        }
    }

    /// `Ap(S; dn)` by the gap-based closed form, listed as `a_0, ..., a_{n-1}`.
    pub fn large_apery_of_base(&self, n: u64) -> Result<AperySet> {
        let d = self.d();
        let dn = mul(d, n, "dn")?;
        let elements = self.base_apery_elements(n)?;
        Ok(AperySet::from_parts(self.base.clone(), dn, elements))
    }

    fn base_apery_elements(&self, n: u64) -> Result<Vec<u64>> {
        if n == 0 || (n as i128) <= self.quotient_frobenius as i128 {
            return Err(Error::LargeAperyPrecondition { n });
        }
        let d = self.d();
        let dn = mul(d, n, "dn")?;
        add(dn, dn, "Apéry element")?;
        let mut elements: Vec<u64> = (0..n).map(|i| d * i).collect();
        for gap in self.quotient_gaps() {
            elements[gap as usize] += dn;
        }
        Ok(elements)
    }

    /// Pairs `(i, m_S(i))` for `i` in `Ap(S; dn)`, in the order `a_0..a_{n-1}`.
    pub fn base_apery_with_lengths(&self, n: u64) -> Result<Vec<(u64, u64)>> {
        self.eligibility(n).require()?;
        self.base_apery_elements(n)?
            .into_iter()
            .map(|i| Ok((i, self.minlen.min_length(i)?)))
            .collect()
    }

    /// `Ap(M_n; n) = { i + m_S(i) n : i in Ap(S; dn) }`.
    pub fn shifted_apery(&self, n: u64) -> Result<AperySet> {
        self.eligibility(n).require()?;
        let member = self.member(n)?;
        let d = self.d();
        let r_k = self.r_k();
        let dn = mul(d, n, "dn")?;
        let n_us = usize::try_from(n).map_err(|_| Error::TooLarge(n))?;
        let element = |i: u64| -> Result<u64> {
            // below F(S/d) + 1 some i are gaps of S/d and get lifted by dn
            let lifted = self.quotient_members.get(i as usize) == Some(&false);
            let a = if lifted { d * i + dn } else { d * i };
            let m = self.minlen.min_length(a)?;
            m.checked_mul(n)
                .and_then(|v| v.checked_add(a))
                .ok_or(Error::Overflow("shifted Apéry element"))
        };

        // from `start` on, a_i = a_(i-q) + r_k + n because i - q is not
        // lifted and d(i - q) is past the min-length threshold
        let q = (r_k / d) as usize;
        let head = self.quotient_members.len();
        let past_threshold = (self.minlen.threshold() / d + 1) as usize;
        let start = (head.max(past_threshold) + q).min(n_us);
        // each chain i, i + q, ... increases, so checking its last entry
        // rules out overflow in the recurrence
        for i in n_us.saturating_sub(q).max(start)..n_us {
            element(i as u64)?;
        }
        let mut by_index = Vec::new();
        by_index
            .try_reserve_exact(n_us)
            .map_err(|_| Error::TooLarge(n))?;
        for i in 0..start {
            by_index.push(element(i as u64)?);
        }
        let seed = by_index[start - q..].to_vec();
        let lift = r_k + n;
        let mut offset = 0;
        while by_index.len() < n_us {
            offset += lift;
            let take = q.min(n_us - by_index.len());
            by_index.extend(seed[..take].iter().map(|v| v + offset));
        }

        // a_i lies in class d*i mod n
        let elements = if d == 1 {
            by_index
        } else {
            let mut elements = vec![0u64; n_us];
            let mut class = 0usize;
            for value in by_index {
                elements[class] = value;
                class += d as usize;
                if class >= n_us {
                    class -= n_us;
                }
            }
            elements
        };
        Ok(AperySet::from_parts(member.monoid, n, elements))
    }

    /// `F(M_n) = a - n + m_S(a) n` for the `a` in `Ap(S; dn)` with the largest
    /// `m_S(a)`, taking the largest such `a` on ties.
    pub fn frobenius_fast(&self, n: u64) -> Result<i64> {
        let pairs = self.base_apery_with_lengths(n)?;
        let (a, m) = pairs
            .into_iter()
            .max_by_key(|&(a, m)| (m, a))
            .expect("Apéry set is nonempty");
        let top = add(a, mul(m, n, "Frobenius number")?, "Frobenius number")?;
        Ok(to_signed(top, "Frobenius number")? - to_signed(n, "Frobenius number")?)
    }

    /// `g(M_n) = sum floor(i / n) + sum m_S(i)` over `i` in `Ap(S; dn)`.
    pub fn genus_fast(&self, n: u64) -> Result<u64> {
        let pairs = self.base_apery_with_lengths(n)?;
        pairs.into_iter().try_fold(0u64, |acc, (i, m)| {
            add(acc, add(i / n, m, "genus")?, "genus")
        })
    }

    /// Compares the two-sum genus formula with its four-term expansion.
    pub fn genus_diagnostic(&self, n: u64) -> Result<GenusDiagnostic> {
        let two_sum = self.genus_fast(n)?;
        let d = self.d();
        let floor_term: u64 = (0..n).map(|i| d * i / n).sum();
        let quotient_genus = self.quotient_genus();
        let mut member_term = 0u64;
        for i in 0..n {
            if self.base_contains_multiple(i) {
                member_term += self.minlen.min_length(d * i)?;
            }
        }
        let mut gap_term = 0u64;
        for gap in self.quotient_gaps() {
            gap_term += self.minlen.min_length(d * gap + d * n)?;
        }
        let rest = floor_term + member_term + gap_term;
        Ok(GenusDiagnostic {
            n,
            two_sum,
            // g(S) read as d * g(S / d), the scaling convention for non-primitive monoids
            four_term_as_written: rest + d * (d * quotient_genus),
            four_term_quotient_genus: rest + d * quotient_genus,
        })
    }

    /// The residues `P_n` of `PF(M_n)` in `Ap(S; dn)`, pushed to `P_{n + r_k}`
    /// by `i -> i` (`i <= dn`) or `i -> i + r_k` (`i > dn`), and compared with
    /// `P_{n + r_k}` computed from scratch.
    ///
    /// That map is not always onto `P_{n + r_k}` (for `S = <3,5>`, `n = 27`
    /// it sends 22 to itself while `P_32 = {27, 39}`), so the result also
    /// carries a matching that sends each `i` to `i` or `i + d r_k` in
    /// `P_{n + r_k}`.
    pub fn pf_transport(&self, n: u64) -> Result<PfTransport> {
        let next = add(n, self.r_k(), "shift")?;
        self.eligibility(next).require()?;
        let source = self.pf_residues(n)?;
        let target = self.pf_residues(next)?;
        let dn = self.d() * n;
        let r_k = self.r_k();
        let pairs: Vec<(u64, u64)> = source
            .iter()
            .map(|&i| (i, if i <= dn { i } else { i + r_k }))
            .collect();
        let bijective = is_bijection_onto(&pairs, &target);

        let lift = self.d() * r_k;
        // ascending greedy: each i takes the smaller free partner among i, i + d r_k
        let mut used = vec![false; target.len()];
        let mut claim = |j: u64| match target.binary_search(&j) {
            Ok(pos) if !used[pos] => {
                used[pos] = true;
                true
            }
            _ => false,
        };
        let observed: Option<Vec<(u64, u64)>> = source
            .iter()
            .map(|&i| {
                if claim(i) {
                    Some((i, i))
                } else if claim(i + lift) {
                    Some((i, i + lift))
                } else {
                    None
                }
            })
            .collect();
        let observed_bijective = observed
            .as_ref()
            .is_some_and(|pairs| is_bijection_onto(pairs, &target));
        Ok(PfTransport {
            n,
            pairs,
            source,
            target,
            bijective,
            observed,
            observed_bijective,
        })
    }

    /// `P_n`, sorted.
    pub fn pf_residues(&self, n: u64) -> Result<Vec<u64>> {
        let ap = self.shifted_apery(n)?;
        let pf = invariants::pseudo_frobenius(&ap)?;
        let pairs = self.base_apery_with_lengths(n)?;
        // a in PF(M_n) is w - n for a maximal w = i + m_S(i) n, so a = i mod n
        let mut by_class = vec![u64::MAX; n as usize];
        for &(i, _) in &pairs {
            by_class[(i % n) as usize] = i;
        }
        let mut residues: Vec<u64> = pf.iter().map(|&a| by_class[(a % n) as usize]).collect();
        residues.sort_unstable();
        Ok(residues)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusDiagnostic {
    pub n: u64,
    pub two_sum: u64,
    /// With the constant term taken as `d * g(S)`.
    pub four_term_as_written: u64,
    /// With the constant term taken as `d * g(S / d)`.
    pub four_term_quotient_genus: u64,
}

impl GenusDiagnostic {
    pub fn as_written_agrees(&self) -> bool {
        self.two_sum == self.four_term_as_written
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PfTransport {
    pub n: u64,
    /// `(i, image of i)` for each `i` in `P_n`.
    pub pairs: Vec<(u64, u64)>,
    pub source: Vec<u64>,
    /// `P_{n + r_k}` computed directly.
    pub target: Vec<u64>,
    /// Whether `pairs` is a bijection onto `target`.
    pub bijective: bool,
    /// Matching of each `i` to `i` or `i + d r_k` in `target`; `None` when
    /// some `i` is left without a partner.
    pub observed: Option<Vec<(u64, u64)>>,
    pub observed_bijective: bool,
}

fn is_bijection_onto(pairs: &[(u64, u64)], target: &[u64]) -> bool {
    let mut image: Vec<u64> = pairs.iter().map(|&(_, j)| j).collect();
    image.sort_unstable();
    image == target
}

/// Splits `M = <n_1, ..., n_k>` into `n = n_1` and `S = <n_i - n_1 : i >= 2>`.
pub fn decompose_as_shift(monoid: &NumericalMonoid) -> Result<(u64, ShiftedFamily)> {
    let gens = monoid.generators();
    if gens.len() < 2 {
        return Err(Error::NoShiftDecomposition);
    }
    let n = gens[0];
    let base: Vec<u64> = gens[1..].iter().map(|g| g - n).collect();
    Ok((n, ShiftedFamily::from_generators(&base)?))
}

pub fn family_member(family: &ShiftedFamily, n: u64) -> Result<NumericalMonoid> {
    Ok(family.member(n)?.monoid)
}

pub fn large_apery_of_base(base: &NumericalMonoid, n: u64) -> Result<AperySet> {
    ShiftedFamily::new(base.clone())?.large_apery_of_base(n)
}

pub fn shifted_apery(base: &NumericalMonoid, n: u64) -> Result<AperySet> {
    ShiftedFamily::new(base.clone())?.shifted_apery(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AperyPath {
    Fast,
    Classic,
}

impl fmt::Display for AperyPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AperyPath::Fast => "fast",
            AperyPath::Classic => "classic",
        })
    }
}

#[derive(Debug, Clone)]
pub struct AperyOutcome {
    pub apery: AperySet,
    pub path: AperyPath,
    /// `None` for single-generator monoids.
    pub eligibility: Option<ShiftEligibility>,
}

/// `Ap(M; n_1)`, through the shifted closed form when `M` is sufficiently
/// shifted and the shortest-path algorithm otherwise.
pub fn apery_auto(monoid: &NumericalMonoid) -> Result<AperyOutcome> {
    apery_auto_with_deadline(monoid, None)
}

/// As [`apery_auto`]; the classic path gives up once `deadline` passes.
pub fn apery_auto_with_deadline(
    monoid: &NumericalMonoid,
    deadline: Option<Instant>,
) -> Result<AperyOutcome> {
    if monoid.generators().len() >= 2 {
        let (n, family) = decompose_as_shift(monoid)?;
        let eligibility = family.eligibility(n);
        if eligibility.passes() {
            // same generators, but keep the caller's minimality bookkeeping
            let apery = family.shifted_apery(n)?.with_monoid(monoid.clone());
            return Ok(AperyOutcome {
                apery,
                path: AperyPath::Fast,
                eligibility: Some(eligibility),
            });
        }
        return Ok(AperyOutcome {
            apery: apery_classic_with_deadline(monoid, n, deadline)?,
            path: AperyPath::Classic,
            eligibility: Some(eligibility),
        });
    }
    Ok(AperyOutcome {
        apery: apery_classic_with_deadline(monoid, monoid.multiplicity(), deadline)?,
        path: AperyPath::Classic,
        eligibility: None,
    })
}
