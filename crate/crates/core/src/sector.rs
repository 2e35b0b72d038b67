//! Zero-free sector certificates.
//!
//! A certificate asserts that a real polynomial with positive leading
//! coefficient has no zeros in the sector `|arg z| < pi/M` (and, for the
//! strict-exterior methods, none on its boundary either). Five exact methods
//! are available, each with its own hypothesis and its own claim strength:
//!
//! * **ALL_H_POSITIVE** — every leading coefficient `h_0..h_n` of the step-M
//!   Euclid run is positive; certifies the strict exterior `|arg z| > pi/M`.
//! * **TN_SPECIAL_MINORS** — the n special minors of the step-M matrix are
//!   positive, so the matrix is totally nonnegative; certifies the open
//!   sector only (a zero at the origin or on the boundary rays is allowed).
//! * **PAIRWISE_HURWITZ** — for every residue pair `i < j` the leading
//!   principal minors of the interleaved pair submatrix are positive
//!   (requires `2 <= M <= floor(n/2)+1`); certifies the strict exterior.
//! * **ROUTH_HURWITZ** — the classical step-2 endpoint: positive Hurwitz
//!   minors put every root in the open left half-plane.
//! * **COWLING_THRON** — `M = n` and all n+1 coefficients positive;
//!   certifies the strict exterior of `|arg z| < pi/n`.
//!
//! `certify` runs one method or the cheapest-first AUTO chain and returns
//! the evidence exactly (rational numbers, no rounding). `cross_validate`
//! confronts a certificate with the floating-point root oracle and demotes
//! it to `REFUTED_BY_ORACLE` if a computed root lands inside the claimed
//! sector by more than the oracle's own slack — an outcome the test suite
//! treats as a hard bug.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::euclid::run_generalized_euclid;
use crate::hurwitz::{
    pair_leading_minors, special_minors, tn_verdict, SpecialMinor, TNStatus,
    DEFAULT_MINOR_SEARCH_CAP,
};
use crate::oracle::{find_roots, sector_clearance, ClearanceReport, RootReport};
use crate::poly::RationalPolynomial;

/// Certification method identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    AllHPositive,
    TnSpecialMinors,
    PairwiseHurwitz,
    RouthHurwitz,
    CowlingThron,
}

impl Method {
    /// Stable uppercase tag used in text and JSON output.
    pub fn tag(self) -> &'static str {
        match self {
            Method::AllHPositive => "ALL_H_POSITIVE",
            Method::TnSpecialMinors => "TN_SPECIAL_MINORS",
            Method::PairwiseHurwitz => "PAIRWISE_HURWITZ",
            Method::RouthHurwitz => "ROUTH_HURWITZ",
            Method::CowlingThron => "COWLING_THRON",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Certificate status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Some method's hypothesis holds exactly; the sector claim is proven.
    Certified,
    /// No exact method exists for this step (M = 1).
    NotApplicable,
    /// Every attempted method failed; nothing is claimed either way.
    Unknown,
    /// The oracle found a root inside a sector a method claimed zero-free.
    /// Never expected; it means an implementation bug, not a math fact.
    RefutedByOracle,
}

impl Status {
    pub fn tag(self) -> &'static str {
        match self {
            Status::Certified => "CERTIFIED",
            Status::NotApplicable => "NOT_APPLICABLE",
            Status::Unknown => "UNKNOWN",
            Status::RefutedByOracle => "REFUTED_BY_ORACLE",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Exactly which set the certificate declares zero-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SectorClaim {
    /// Every root satisfies `|arg z| > pi/M`: the closed sector, boundary
    /// rays and origin included, is clear.
    StrictExterior,
    /// No root lies in the open sector `|arg z| < pi/M`; roots on the
    /// boundary rays or at the origin are not excluded.
    OpenSectorClear,
}

impl SectorClaim {
    pub fn tag(self) -> &'static str {
        match self {
            SectorClaim::StrictExterior => "STRICT_EXTERIOR",
            SectorClaim::OpenSectorClear => "OPEN_SECTOR_CLEAR",
        }
    }
}

impl fmt::Display for SectorClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Pairwise evidence for one residue pair: the leading principal minors of
/// the interleaved submatrix, orders 1 through its lift degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairMinorEvidence {
    pub i: usize,
    pub j: usize,
    pub minors: Vec<BigRational>,
}

/// The exact witness data backing a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// The Euclid leading coefficients `h_0..h_n`, all positive.
    LeadingCoefficientChain { hs: Vec<BigRational> },
    /// The n special minors, all positive.
    SpecialMinors { minors: Vec<SpecialMinor> },
    /// Per-pair leading principal minor lists, all positive.
    PairMinors { pairs: Vec<PairMinorEvidence> },
    /// The coefficient list `a_0..a_n`, all positive (M = n route).
    PositiveCoefficients { coefficients: Vec<BigRational> },
}

impl Evidence {
    pub fn to_json(&self) -> Value {
        match self {
            Evidence::LeadingCoefficientChain { hs } => json!({
                "kind": "leading_coefficient_chain",
                "h": hs.iter().map(BigRational::to_string).collect::<Vec<_>>(),
            }),
            Evidence::SpecialMinors { minors } => json!({
                "kind": "special_minors",
                "minors": minors
                    .iter()
                    .map(|sm| {
                        json!({
                            "p": sm.p,
                            "k": sm.k,
                            "r": sm.r,
                            "rows": sm.rows(),
                            "cols": sm.cols(),
                            "value": sm.value.to_string(),
                        })
                    })
                    .collect::<Vec<_>>(),
            }),
            Evidence::PairMinors { pairs } => json!({
                "kind": "pair_minors",
                "pairs": pairs
                    .iter()
                    .map(|pe| {
                        json!({
                            "i": pe.i,
                            "j": pe.j,
                            "minors": pe
                                .minors
                                .iter()
                                .map(BigRational::to_string)
                                .collect::<Vec<_>>(),
                        })
                    })
                    .collect::<Vec<_>>(),
            }),
            Evidence::PositiveCoefficients { coefficients } => json!({
                "kind": "positive_coefficients",
                "coefficients": coefficients
                    .iter()
                    .map(BigRational::to_string)
                    .collect::<Vec<_>>(),
            }),
        }
    }
}

/// Why one attempted method did not certify.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodFailure {
    pub method: Method,
    pub reason: String,
}

/// The outcome of `certify`: status, the successful method and claim with
/// its exact evidence, and the failure reason of every method tried before.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorCertificate {
    pub m: usize,
    pub degree: usize,
    pub status: Status,
    pub method: Option<Method>,
    pub claim: Option<SectorClaim>,
    pub evidence: Option<Evidence>,
    pub failures: Vec<MethodFailure>,
    pub note: Option<String>,
}

impl SectorCertificate {
    /// JSON form with every rational rendered as an exact `p/q` string.
    /// The oracle cross-check, which is floating-point, is *not* part of
    /// this object; callers merge it under a separate `oracle` key.
    pub fn to_json(&self) -> Value {
        json!({
            "degree": self.degree,
            "m": self.m,
            "sector_degrees": sector_half_angle_degrees(self.m).to_string(),
            "status": self.status.tag(),
            "method": self.method.map(Method::tag),
            "claim": self.claim.map(SectorClaim::tag),
            "evidence": self.evidence.as_ref().map(Evidence::to_json),
            "failures": self
                .failures
                .iter()
                .map(|fl| json!({ "method": fl.method.tag(), "reason": fl.reason }))
                .collect::<Vec<_>>(),
            "note": self.note,
        })
    }
}

/// The sector half-angle `pi/M` expressed exactly in degrees (`180/M`,
/// reduced: "90" for M=2, "60" for M=3, "180/7" for M=7).
pub fn sector_half_angle_degrees(m: usize) -> BigRational {
    BigRational::new(180.into(), (m as i64).into())
}

type RouteResult = std::result::Result<(SectorClaim, Evidence), String>;

fn route_all_h(f: &RationalPolynomial, m: usize) -> RouteResult {
    let table = run_generalized_euclid(f, m).map_err(|e| e.to_string())?;
    let hs = table.leading_coefficients();
    for (idx, h) in hs.iter().enumerate() {
        if h.is_zero() {
            return Err(format!("h_{idx} = 0: the step-{m} Euclid run degenerates"));
        }
        if h.is_negative() {
            return Err(format!("h_{idx} = {h} is negative"));
        }
    }
    Ok((
        SectorClaim::StrictExterior,
        Evidence::LeadingCoefficientChain { hs },
    ))
}

fn route_tn(f: &RationalPolynomial, m: usize) -> RouteResult {
    let verdict = tn_verdict(f, m, DEFAULT_MINOR_SEARCH_CAP).map_err(|e| e.to_string())?;
    match verdict.status {
        TNStatus::TnCertified => {
            let set = special_minors(f, m).map_err(|e| e.to_string())?;
            Ok((
                SectorClaim::OpenSectorClear,
                Evidence::SpecialMinors { minors: set.minors },
            ))
        }
        TNStatus::NotTn => {
            let w = verdict
                .witness
                .expect("a NOT_TN verdict carries its witness");
            Err(format!(
                "negative minor at rows {:?} x cols {:?} (value {})",
                w.rows, w.cols, w.value
            ))
        }
        TNStatus::Inconclusive => Err(format!(
            "no total-nonnegativity certificate: a special minor vanishes and \
             the order-{} window search found no negative witness",
            verdict.cap
        )),
    }
}

fn route_pairwise(f: &RationalPolynomial, m: usize, n: usize) -> RouteResult {
    let max_m = n / 2 + 1;
    if m > max_m {
        return Err(format!(
            "the pairwise route needs 2 <= M <= floor(n/2)+1 = {max_m}; M is {m}"
        ));
    }
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let minors =
                pair_leading_minors(f, m, i, j).map_err(|e| format!("pair ({i}, {j}): {e}"))?;
            if let Some(pos) = minors.iter().position(|v| !v.is_positive()) {
                return Err(format!(
                    "pair ({i}, {j}): leading principal minor of order {} is {} (needs > 0)",
                    pos + 1,
                    minors[pos]
                ));
            }
            pairs.push(PairMinorEvidence { i, j, minors });
        }
    }
    Ok((SectorClaim::StrictExterior, Evidence::PairMinors { pairs }))
}

fn route_routh(f: &RationalPolynomial) -> RouteResult {
    let set = special_minors(f, 2).map_err(|e| e.to_string())?;
    if let Some(bad) = set.first_nonpositive() {
        return Err(format!(
            "Hurwitz minor of order {} is {} (needs > 0)",
            bad.r, bad.value
        ));
    }
    Ok((
        SectorClaim::StrictExterior,
        Evidence::SpecialMinors { minors: set.minors },
    ))
}

fn route_ct(f: &RationalPolynomial, m: usize, n: usize) -> RouteResult {
    if m != n {
        return Err(format!(
            "the coefficient-positivity route needs M = n = {n}; M is {m}"
        ));
    }
    let mut coefficients = Vec::with_capacity(n + 1);
    for l in 0..=n {
        let c = f.coeff(l);
        if !c.is_positive() {
            return Err(format!("coefficient of x^{} is {} (needs > 0)", n - l, c));
        }
        coefficients.push(c);
    }
    Ok((
        SectorClaim::StrictExterior,
        Evidence::PositiveCoefficients { coefficients },
    ))
}

fn run_route(f: &RationalPolynomial, m: usize, n: usize, method: Method) -> RouteResult {
    match method {
        Method::AllHPositive => route_all_h(f, m),
        Method::TnSpecialMinors => route_tn(f, m),
        Method::PairwiseHurwitz => route_pairwise(f, m, n),
        Method::RouthHurwitz => {
            if m != 2 {
                return Err(format!(
                    "classical Routh-Hurwitz is the step-2 endpoint; M is {m}"
                ));
            }
            route_routh(f)
        }
        Method::CowlingThron => route_ct(f, m, n),
    }
}

/// For n = 5, M = 3 only: the exact ratio chain `a_3/a_0 > a_4/a_1 > a_5/a_2`
/// together with positive `a_0, a_1, a_2, a_5` strengthens the certified
/// claim to the closed sector `|arg z| <= pi/3`.
fn quintic_ratio_chain_holds(f: &RationalPolynomial) -> bool {
    let a = |l: usize| f.coeff(l);
    if !(a(0).is_positive() && a(1).is_positive() && a(2).is_positive() && a(5).is_positive()) {
        return false;
    }
    let r01 = a(3) / a(0);
    let r14 = a(4) / a(1);
    let r25 = a(5) / a(2);
    r01 > r14 && r14 > r25
}

/// Certifies that `f` has no zeros in the sector `|arg z| < pi/M`.
///
/// Preconditions: `f` nonzero with positive leading coefficient, and
/// `1 <= M <= n`. Step 1 returns `NOT_APPLICABLE` (no finite exact
/// criterion exists at that step; the oracle's real-negative-roots check
/// is the only information available).
///
/// With `method = None` the AUTO chain runs cheapest-first. At M = 2 that
/// is the classical Routh-Hurwitz minor test alone (every other method
/// reduces to the same minors there). For M >= 3 the chain is: Euclid
/// h-positivity, then special-minor total nonnegativity, then the pairwise
/// route (when `M <= floor(n/2)+1`), then coefficient positivity (when
/// `M = n`). The first success wins; its evidence and every earlier
/// failure reason are kept on the certificate.
///
/// With an explicit method only that route runs; a structurally
/// inapplicable choice (e.g. the step-2 route at M = 3) yields `UNKNOWN`
/// with the reason recorded, not an error.
pub fn certify(
    f: &RationalPolynomial,
    m: usize,
    method: Option<Method>,
) -> Result<SectorCertificate> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let lead = f
        .leading_coefficient()
        .expect("nonzero polynomial has a leading coefficient");
    if !lead.is_positive() {
        return Err(Error::NonPositiveLeadingCoefficient);
    }
    if m < 1 || m > n {
        return Err(Error::StepOutOfRange { m, min: 1, max: n });
    }
    if m == 1 {
        return Ok(SectorCertificate {
            m,
            degree: n,
            status: Status::NotApplicable,
            method: None,
            claim: None,
            evidence: None,
            failures: Vec::new(),
            note: Some(
                "step 1 has no finite matrix certificate; the root oracle's \
                 real-negative-roots check is informational only"
                    .to_string(),
            ),
        });
    }

    let plan: Vec<Method> = match method {
        Some(mth) => vec![mth],
        None if m == 2 => vec![Method::RouthHurwitz],
        None => vec![
            Method::AllHPositive,
            Method::TnSpecialMinors,
            Method::PairwiseHurwitz,
            Method::CowlingThron,
        ],
    };

    let mut failures = Vec::new();
    let mut outcome = None;
    for mth in plan {
        match run_route(f, m, n, mth) {
            Ok((claim, evidence)) => {
                outcome = Some((mth, claim, evidence));
                break;
            }
            Err(reason) => failures.push(MethodFailure {
                method: mth,
                reason,
            }),
        }
    }

    let mut cert = match outcome {
        Some((mth, claim, evidence)) => SectorCertificate {
            m,
            degree: n,
            status: Status::Certified,
            method: Some(mth),
            claim: Some(claim),
            evidence: Some(evidence),
            failures,
            note: None,
        },
        None => SectorCertificate {
            m,
            degree: n,
            status: Status::Unknown,
            method: None,
            claim: None,
            evidence: None,
            failures,
            note: None,
        },
    };

    if cert.status == Status::Certified
        && cert.method == Some(Method::AllHPositive)
        && n == 5
        && m == 3
        && quintic_ratio_chain_holds(f)
    {
        cert.note = Some(
            "quintic step-3 strengthening: a_3/a_0 > a_4/a_1 > a_5/a_2 with \
             a_0, a_1, a_2, a_5 > 0, so the closed sector |arg z| <= pi/3 \
             contains no zero"
                .to_string(),
        );
    }
    Ok(cert)
}

/// The oracle's side of a cross-check.
#[derive(Debug, Clone)]
pub struct CrossValidation {
    pub roots: RootReport,
    pub clearance: ClearanceReport,
    /// False exactly when a certified claim was contradicted numerically.
    pub agreed: bool,
}

/// Confronts a certificate with the root oracle. A `CERTIFIED` status is
/// demoted to `REFUTED_BY_ORACLE` when some computed root lies inside the
/// claimed sector by more than the oracle's slack (wider when the roots
/// cluster, since clustered roots carry less accuracy). Origin roots never
/// refute: no method claims anything about them being absent stronger than
/// the strict-exterior ones, and those are exact.
pub fn cross_validate(
    cert: SectorCertificate,
    f: &RationalPolynomial,
    tol: f64,
    seed: u64,
) -> Result<(SectorCertificate, CrossValidation)> {
    let roots = find_roots(f, tol, seed)?;
    let clearance = sector_clearance(&roots, cert.m);
    let mut cert = cert;
    let mut agreed = true;
    if cert.status == Status::Certified && clearance.clearance < -clearance.slack {
        agreed = false;
        cert.status = Status::RefutedByOracle;
        cert.note = Some(format!(
            "numeric contradiction: a computed root lies {:.6} radians inside \
             the sector boundary (slack {:.0e})",
            -clearance.clearance, clearance.slack
        ));
    }
    Ok((
        cert,
        CrossValidation {
            roots,
            clearance,
            agreed,
        },
    ))
}

/// Tolerance added to the argument-sum bound to absorb f64 rounding.
pub const ARG_SUM_TOLERANCE: f64 = 1e-9;

/// Denominator-magnitude guard for the ratio evaluations.
const DENOM_GUARD: f64 = 1e-14;

/// Numeric check of the argument-sum bound behind the h-positivity method.
#[derive(Debug, Clone)]
pub struct ArgumentSumReport {
    pub m: usize,
    pub z: Complex64,
    /// `arg(f_t(z) / f_{t+1}(z))` for t = 0..M-2, each in (-pi, pi].
    pub ratio_args: Vec<f64>,
    /// Sum of the positive arguments.
    pub positive_sum: f64,
    /// Absolute value of the sum of the negative arguments.
    pub negative_sum: f64,
    /// `max(positive_sum, negative_sum)`.
    pub max_abs_sum: f64,
    /// `pi (M-1) / M`.
    pub bound: f64,
    pub within_bound: bool,
}

/// Evaluates the first M-1 consecutive Euclid-sequence ratios at `z` and
/// checks that the sign-partitioned argument sums stay within
/// `pi (M-1) / M` (plus [`ARG_SUM_TOLERANCE`]).
///
/// Hypotheses, enforced: every `h_i > 0`; `z` nonzero with
/// `0 <= arg z <= pi/M`; no denominator `f_1(z)..f_{M-1}(z)` numerically
/// zero. The polynomials `f_0..f_{M-1}` here are the first members of the
/// step-M Euclid sequence, which coincide with the M arithmetic parts of f.
pub fn argument_sum_bound_check(
    f: &RationalPolynomial,
    m: usize,
    z: Complex64,
) -> Result<ArgumentSumReport> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if m < 2 || m > n {
        return Err(Error::StepOutOfRange { m, min: 2, max: n });
    }
    let table = run_generalized_euclid(f, m)?;
    let hs = table.leading_coefficients();
    if let Some(index) = hs.iter().position(|h| !h.is_positive()) {
        return Err(Error::LeadingChainNotPositive { index });
    }
    if z.norm() == 0.0 {
        return Err(Error::InvalidEvaluationPoint {
            reason: "z must be nonzero".to_string(),
        });
    }
    let arg = z.arg();
    let upper = PI / m as f64;
    if !(-1e-12..=upper + 1e-12).contains(&arg) {
        return Err(Error::InvalidEvaluationPoint {
            reason: format!("need 0 <= arg z <= pi/{m} = {upper:.6}; arg z = {arg:.6}"),
        });
    }
    let values: Vec<Complex64> = table.polys()[..m]
        .iter()
        .map(|p| p.evaluate_complex(z))
        .collect();
    for v in values.iter().skip(1) {
        if v.norm() < DENOM_GUARD {
            return Err(Error::NearZeroDivision {
                magnitude: v.norm(),
            });
        }
    }
    let ratio_args: Vec<f64> = (0..m - 1)
        .map(|t| (values[t] / values[t + 1]).arg())
        .collect();
    let positive_sum: f64 = ratio_args.iter().filter(|a| **a > 0.0).sum();
    let negative_sum: f64 = -ratio_args.iter().filter(|a| **a < 0.0).sum::<f64>();
    let max_abs_sum = positive_sum.max(negative_sum);
    let bound = PI * (m as f64 - 1.0) / m as f64;
    Ok(ArgumentSumReport {
        m,
        z,
        ratio_args,
        positive_sum,
        negative_sum,
        max_abs_sum,
        bound,
        within_bound: max_abs_sum <= bound + ARG_SUM_TOLERANCE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, parse_rational};

    fn poly(s: &str) -> RationalPolynomial {
        parse_polynomial(s).unwrap()
    }

    fn rats(strs: &[&str]) -> Vec<BigRational> {
        strs.iter().map(|s| parse_rational(s).unwrap()).collect()
    }

    #[test]
    fn quintic_with_ratio_chain_certifies_by_h_positivity() {
        let f = poly("1, 1, 1, 1001/1000, 1, 999/1000");
        let cert = certify(&f, 3, None).unwrap();
        assert_eq!(cert.status, Status::Certified);
        assert_eq!(cert.method, Some(Method::AllHPositive));
        assert_eq!(cert.claim, Some(SectorClaim::StrictExterior));
        assert!(cert.failures.is_empty());
        match cert.evidence.as_ref().unwrap() {
            Evidence::LeadingCoefficientChain { hs } => {
                assert_eq!(hs, &rats(&["1", "1", "1", "1/1000", "1/1000", "999/1000"]));
            }
            other => panic!("expected the h-chain, got {other:?}"),
        }
        assert!(cert.note.as_ref().unwrap().contains("closed sector"));
    }

    #[test]
    fn stable_quintic_certified_at_step_2_unknown_at_step_3() {
        let f = poly("1, 1, 5, 2, 4, 1/2");
        let c2 = certify(&f, 2, None).unwrap();
        assert_eq!(c2.status, Status::Certified);
        assert_eq!(c2.method, Some(Method::RouthHurwitz));
        assert_eq!(c2.claim, Some(SectorClaim::StrictExterior));
        match c2.evidence.as_ref().unwrap() {
            Evidence::SpecialMinors { minors } => {
                let values: Vec<BigRational> = minors.iter().map(|sm| sm.value.clone()).collect();
                assert_eq!(values, rats(&["1", "3", "5/2", "17/4", "17/8"]));
            }
            other => panic!("expected special minors, got {other:?}"),
        }

        let c3 = certify(&f, 3, None).unwrap();
        assert_eq!(c3.status, Status::Unknown);
        assert!(c3.method.is_none() && c3.evidence.is_none());
        // All four routes were tried and each recorded its reason.
        assert_eq!(c3.failures.len(), 4);
        assert!(c3
            .failures
            .iter()
            .any(|fl| fl.method == Method::AllHPositive && fl.reason.contains("h_3 = -2")));
        assert!(c3
            .failures
            .iter()
            .any(|fl| fl.method == Method::TnSpecialMinors && fl.reason.contains("-2")));
        assert!(c3
            .failures
            .iter()
            .any(|fl| fl.method == Method::PairwiseHurwitz && fl.reason.contains("pair (0, 1)")));
        assert!(c3
            .failures
            .iter()
            .any(|fl| fl.method == Method::CowlingThron && fl.reason.contains("M = n = 5")));
    }

    #[test]
    fn sextic_with_negative_h_certifies_pairwise() {
        let f = poly("1, 3, 9, 3/2, 2, 1, 1/9");
        let cert = certify(&f, 3, None).unwrap();
        assert_eq!(cert.status, Status::Certified);
        assert_eq!(cert.method, Some(Method::PairwiseHurwitz));
        assert_eq!(cert.claim, Some(SectorClaim::StrictExterior));
        assert_eq!(cert.failures.len(), 2);
        match cert.evidence.as_ref().unwrap() {
            Evidence::PairMinors { pairs } => {
                assert_eq!(pairs.len(), 3);
                assert_eq!((pairs[0].i, pairs[0].j), (0, 1));
                assert_eq!(pairs[0].minors, rats(&["3", "5/2", "4", "4/9"]));
                assert_eq!((pairs[1].i, pairs[1].j), (0, 2));
                assert_eq!(pairs[1].minors, rats(&["9", "25/2", "7/2", "7/18"]));
                assert_eq!((pairs[2].i, pairs[2].j), (1, 2));
                assert_eq!(pairs[2].minors, rats(&["9", "15", "15"]));
            }
            other => panic!("expected pair minors, got {other:?}"),
        }
    }

    #[test]
    fn step_1_is_informational_only() {
        let f = poly("1, 2, 3");
        let cert = certify(&f, 1, None).unwrap();
        assert_eq!(cert.status, Status::NotApplicable);
        assert!(cert.method.is_none());
        assert!(cert.note.is_some());
    }

    #[test]
    fn preconditions_are_hard_errors() {
        let f = poly("1, 2, 3");
        assert!(matches!(
            certify(&f, 3, None),
            Err(Error::StepOutOfRange { m: 3, .. })
        ));
        assert!(matches!(
            certify(&f, 0, None),
            Err(Error::StepOutOfRange { m: 0, .. })
        ));
        let neg = poly("-1, -2, -3");
        assert!(matches!(
            certify(&neg, 2, None),
            Err(Error::NonPositiveLeadingCoefficient)
        ));
    }

    #[test]
    fn coefficient_positivity_route_at_step_n() {
        let f = poly("1, 2, 3, 4");
        let ct = certify(&f, 3, Some(Method::CowlingThron)).unwrap();
        assert_eq!(ct.status, Status::Certified);
        assert_eq!(ct.method, Some(Method::CowlingThron));
        assert_eq!(ct.claim, Some(SectorClaim::StrictExterior));
        match ct.evidence.as_ref().unwrap() {
            Evidence::PositiveCoefficients { coefficients } => {
                assert_eq!(coefficients, &rats(&["1", "2", "3", "4"]));
            }
            other => panic!("expected coefficients, got {other:?}"),
        }
        // AUTO reaches the h-chain first: at M = n the h-list equals the
        // coefficient list, so positivity is caught one step earlier.
        let auto = certify(&f, 3, None).unwrap();
        assert_eq!(auto.method, Some(Method::AllHPositive));
        // Explicitly requesting the route at the wrong step soft-fails.
        let wrong = certify(&f, 2, Some(Method::CowlingThron)).unwrap();
        assert_eq!(wrong.status, Status::Unknown);
        assert_eq!(wrong.failures.len(), 1);
        assert!(wrong.failures[0].reason.contains("M = n = 3"));
    }

    #[test]
    fn classical_route_requires_step_2() {
        let f = poly("1, 2, 3, 4");
        let cert = certify(&f, 3, Some(Method::RouthHurwitz)).unwrap();
        assert_eq!(cert.status, Status::Unknown);
        assert!(cert.failures[0].reason.contains("step-2"));
    }

    #[test]
    fn oracle_agrees_with_honest_certificate() {
        let f = poly("1, 1, 1, 1001/1000, 1, 999/1000");
        let cert = certify(&f, 3, None).unwrap();
        let (cert, cv) = cross_validate(cert, &f, 1e-13, 0x5eed).unwrap();
        assert_eq!(cert.status, Status::Certified);
        assert!(cv.agreed);
        // The closest root hugs the boundary from outside (slope 1.73321
        // against 1.73205) but stays outside.
        assert!(cv.clearance.clearance > 0.0);
        assert!(cv.clearance.clearance < 0.01);
    }

    #[test]
    fn oracle_refutes_fabricated_certificate() {
        // (x - 1)(x + 2): a root at +1 sits at the sector's center line.
        let f = poly("1, 1, -2");
        let fake = SectorCertificate {
            m: 2,
            degree: 2,
            status: Status::Certified,
            method: Some(Method::RouthHurwitz),
            claim: Some(SectorClaim::StrictExterior),
            evidence: None,
            failures: Vec::new(),
            note: None,
        };
        let (flipped, cv) = cross_validate(fake, &f, 1e-13, 7).unwrap();
        assert_eq!(flipped.status, Status::RefutedByOracle);
        assert!(!cv.agreed);
        assert!(flipped.note.unwrap().contains("numeric contradiction"));
    }

    #[test]
    fn argument_sums_stay_within_bound_on_the_cone() {
        let f = poly("1, 1, 1, 1001/1000, 1, 999/1000");
        let z = Complex64::from_polar(1.0, PI / 6.0);
        let rep = argument_sum_bound_check(&f, 3, z).unwrap();
        assert_eq!(rep.ratio_args.len(), 2);
        assert!(rep.within_bound);
        assert!(rep.max_abs_sum <= rep.bound + ARG_SUM_TOLERANCE);
        assert!((rep.bound - 2.0 * PI / 3.0).abs() < 1e-15);

        // On the positive real axis every ratio is a positive real.
        let rep2 = argument_sum_bound_check(&f, 3, Complex64::new(1.7, 0.0)).unwrap();
        assert!(rep2.positive_sum.abs() < 1e-12);
        assert!(rep2.negative_sum.abs() < 1e-12);
    }

    #[test]
    fn argument_sum_check_enforces_its_hypotheses() {
        let bad_h = poly("1, 1, 5, 2, 4, 1/2");
        assert!(matches!(
            argument_sum_bound_check(&bad_h, 3, Complex64::new(1.0, 0.0)),
            Err(Error::LeadingChainNotPositive { index: 3 })
        ));
        let f = poly("1, 1, 1, 1001/1000, 1, 999/1000");
        assert!(matches!(
            argument_sum_bound_check(&f, 3, Complex64::from_polar(1.0, 2.0)),
            Err(Error::InvalidEvaluationPoint { .. })
        ));
        assert!(matches!(
            argument_sum_bound_check(&f, 3, Complex64::new(0.0, 0.0)),
            Err(Error::InvalidEvaluationPoint { .. })
        ));
    }

    #[test]
    fn half_angle_renders_as_reduced_fraction_of_degrees() {
        assert_eq!(sector_half_angle_degrees(2).to_string(), "90");
        assert_eq!(sector_half_angle_degrees(3).to_string(), "60");
        assert_eq!(sector_half_angle_degrees(7).to_string(), "180/7");
    }

    #[test]
    fn certificate_json_uses_exact_strings() {
        let f = poly("1, 1, 5, 2, 4, 1/2");
        let cert = certify(&f, 2, None).unwrap();
        let v = cert.to_json();
        assert_eq!(v["status"], "CERTIFIED");
        assert_eq!(v["method"], "ROUTH_HURWITZ");
        assert_eq!(v["sector_degrees"], "90");
        assert_eq!(v["claim"], "STRICT_EXTERIOR");
        let minors = v["evidence"]["minors"].as_array().unwrap();
        assert_eq!(minors.len(), 5);
        assert_eq!(minors[4]["value"], "17/8");
        assert!(v["note"].is_null());
    }
}
