//! Exact zero-free sector certificates for real polynomials.
//!
//! Given a real polynomial `f` with positive leading coefficient and a step
//! `M`, this crate decides — in exact rational arithmetic — whether `f` can
//! be certified to have no zeros in the sector `|arg z| < pi/M`. The
//! machinery is built from four interlocking pieces:
//!
//! * a **generalized Euclidean algorithm** with step `M` ([`euclid`]),
//!   whose leading coefficients `h_0..h_n` drive the strongest certificate
//!   and an exact factorization of the shifted coefficient matrix into
//!   elementary bidiagonal factors ([`factor`]);
//! * the **generalized Hurwitz matrix** `H_M(f)` ([`hurwitz`]): its special
//!   minors, total-nonnegativity verdicts with explicit negative-minor
//!   witnesses, and the interleaved pair submatrices that reduce step-M
//!   questions to classical step-2 ones;
//! * **branched continued fractions** for ratios of residue parts
//!   ([`contfrac`]), with exact reconstruction as a rational-function pair;
//! * a **floating-point root oracle** ([`oracle`]) — a seeded, deterministic
//!   Aberth iteration — that cross-checks every certificate from the
//!   outside and an independent cofactor determinant that cross-checks the
//!   exact Bareiss kernel.
//!
//! The [`sector`] module combines these into [`sector::certify`], which
//! returns a [`sector::SectorCertificate`] carrying the chosen method, the
//! precise claim (strict exterior of the closed sector vs. clearance of the
//! open one), and the full exact evidence.
//!
//! Everything user-facing accepts and produces exact rationals ("p/q"
//! strings in JSON); floating-point values appear only in oracle reports.

pub mod contfrac;
pub mod error;
pub mod euclid;
pub mod factor;
pub mod hurwitz;
pub mod oracle;
pub mod poly;
pub mod sector;

pub use contfrac::{cfrac_evaluate, expand_pair_cfrac, ContinuedFraction};
pub use error::{Error, Result};
pub use euclid::{
    check_nondegenerate, leading_coefficients, run_generalized_euclid, EuclidTable,
    NondegeneracyReport,
};
pub use factor::{factor_hm, verify_factorization, FactorizationResult};
pub use hurwitz::{
    det_bareiss, h2_minor_index_positive, map_special_minor_to_h2, minor_exact,
    pair_leading_minors, pair_lift, special_minor_index, special_minors, tn_verdict,
    GeneralizedHurwitzMatrix, HurwitzVariant, PairLift, SpecialMinor, SpecialMinorSet, TNMethod,
    TNStatus, TNVerdict, TNWitness, DEFAULT_MINOR_SEARCH_CAP,
};
pub use oracle::{
    all_roots_real_negative, det_cofactor, find_roots, minor_bruteforce, sector_clearance,
    ClearanceReport, RootReport, DEFAULT_ROOT_TOL, DEFAULT_SEED,
};
pub use poly::{parse_polynomial, parse_rational, ArithmeticPart, RationalPolynomial};
pub use sector::{
    argument_sum_bound_check, certify, cross_validate, sector_half_angle_degrees,
    ArgumentSumReport, CrossValidation, Evidence, Method, MethodFailure, SectorCertificate,
    SectorClaim, Status,
};
