//! Floating-point root oracle and naive-minor oracle.
//!
//! Everything here is deliberately independent of the exact certification
//! path: the root finder works in f64 with the Aberth–Ehrlich simultaneous
//! iteration, and the minor oracle recomputes determinants by cofactor
//! expansion with no code shared with the Bareiss kernel. The library's
//! certificates are cross-validated against these oracles in the test suite
//! and in the CLI output, never the other way around.
//!
//! Roots at the origin are removed exactly (trailing zero coefficients)
//! before iterating, and re-attached to the report afterwards; the sector
//! clearance ignores them, matching the open-sector reading where the origin
//! is permitted.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{rational_to_f64, RationalPolynomial};

/// Default stop tolerance for the maximum per-sweep root update.
pub const DEFAULT_ROOT_TOL: f64 = 1e-13;
/// Default seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed;
/// Iteration cap; exceeding it reports `converged = false`.
pub const MAX_ITERATIONS: usize = 400;
/// Residuals are accepted when `max |f(z_i)| / (1+|z_i|)^n` is below this.
pub const RESIDUAL_ACCEPT: f64 = 1e-8;
/// Roots closer than this (relative to 1 + magnitude) mark the report as
/// clustered. A root of multiplicity k is only locatable to roughly
/// eps^(1/k) in f64 — about 7e-3 for k = 7 — so the threshold must sit
/// above that to catch high-multiplicity clusters.
pub const CLUSTER_DISTANCE: f64 = 2e-2;
/// Clearance slack for well-separated roots.
pub const CLEARANCE_SLACK: f64 = 1e-6;
/// Widened clearance slack when the root set is clustered (multiple-root
/// accuracy in f64 is limited to ~eps^(1/multiplicity)).
pub const CLEARANCE_SLACK_CLUSTERED: f64 = 1e-2;
/// Order cap for the brute-force minor oracle.
pub const BRUTEFORCE_ORDER_CAP: usize = 6;

/// The oracle's view of a polynomial's roots.
#[derive(Debug, Clone)]
pub struct RootReport {
    /// Degree of the polynomial (= number of roots reported).
    pub degree: usize,
    /// All roots, origin roots included.
    pub roots: Vec<Complex64>,
    /// `max_i |f(z_i)| / (1+|z_i|)^n`.
    pub residual: f64,
    /// `min |arg z|` over nonzero roots; `f64::INFINITY` when all roots sit
    /// at the origin.
    pub min_arg: f64,
    /// Whether the iteration met the update tolerance (or the residual hit
    /// the f64 floor) before the cap.
    pub converged: bool,
    /// Sweeps actually performed.
    pub iterations: usize,
    /// True when two roots are within [`CLUSTER_DISTANCE`] — accuracy is
    /// then limited and callers should widen tolerances.
    pub clustered: bool,
}

/// Finds all complex roots of `f` (degree >= 1) with the Aberth–Ehrlich
/// iteration from perturbed-circle initial guesses. Deterministic for a
/// fixed `seed`: the same inputs yield bit-identical roots.
pub fn find_roots(f: &RationalPolynomial, tol: f64, seed: u64) -> Result<RootReport> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 1 {
        return Err(Error::RootsOfConstant);
    }
    let all: Vec<f64> = f.coeffs().iter().map(rational_to_f64).collect();
    // Strip exact origin roots: trailing zero rational coefficients.
    let trailing = f.coeffs().iter().rev().take_while(|c| c.is_zero()).count();
    let reduced: Vec<f64> = all[..all.len() - trailing].to_vec();
    let m = reduced.len() - 1; // degree after removing origin roots
    let mut roots: Vec<Complex64> = Vec::with_capacity(n);
    let mut iterations = 0usize;
    let mut converged = true;
    if m > 0 {
        let monic: Vec<f64> = reduced.iter().map(|c| c / reduced[0]).collect();
        let radius = 1.0 + monic[1..].iter().fold(0.0f64, |acc, c| acc.max(c.abs()));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut zs: Vec<Complex64> = (0..m)
            .map(|k| {
                let angle = 2.0 * std::f64::consts::PI * (k as f64) / (m as f64)
                    + 0.3941
                    + rng.gen_range(-0.05..0.05);
                let r = radius * rng.gen_range(0.9..1.1);
                Complex64::from_polar(r, angle)
            })
            .collect();
        let deriv: Vec<f64> = monic[..m]
            .iter()
            .enumerate()
            .map(|(k, c)| c * (m - k) as f64)
            .collect();
        converged = false;
        for sweep in 1..=MAX_ITERATIONS {
            iterations = sweep;
            let mut max_update = 0.0f64;
            for k in 0..m {
                let z = zs[k];
                let fz = horner(&monic, z);
                let dz = horner(&deriv, z);
                let newton = if dz.norm() < EVAL_TINY {
                    // Derivative collapsed: nudge off the stationary point.
                    Complex64::new(tol, tol)
                } else {
                    fz / dz
                };
                let repulsion: Complex64 = (0..m)
                    .filter(|&l| l != k)
                    .map(|l| inv_or_zero(z - zs[l]))
                    .sum();
                let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
                let w = if denom.norm() < EVAL_TINY {
                    newton
                } else {
                    newton / denom
                };
                zs[k] = z - w;
                max_update = max_update.max(w.norm() / (1.0 + zs[k].norm()));
            }
            let worst_residual = zs
                .iter()
                .map(|&z| horner(&monic, z).norm() / (1.0 + z.norm()).powi(m as i32))
                .fold(0.0f64, f64::max);
            if max_update < tol || worst_residual < 1e-14 {
                converged = true;
                break;
            }
        }
        roots.extend(zs);
    }
    roots.extend(std::iter::repeat_n(Complex64::new(0.0, 0.0), trailing));
    let residual = roots
        .iter()
        .map(|&z| horner(&all, z).norm() / (1.0 + z.norm()).powi(n as i32))
        .fold(0.0f64, f64::max);
    let min_arg = roots
        .iter()
        .filter(|z| z.norm() > 0.0)
        .map(|z| z.arg().abs())
        .fold(f64::INFINITY, f64::min);
    let clustered = {
        let mut flag = false;
        for a in 0..roots.len() {
            for b in a + 1..roots.len() {
                if roots[a].norm() == 0.0 && roots[b].norm() == 0.0 {
                    // Origin roots are stripped algebraically, not located
                    // numerically; they are exact and never a cluster.
                    continue;
                }
                let scale = 1.0 + roots[a].norm().max(roots[b].norm());
                if (roots[a] - roots[b]).norm() < CLUSTER_DISTANCE * scale {
                    flag = true;
                }
            }
        }
        flag
    };
    Ok(RootReport {
        degree: n,
        roots,
        residual,
        min_arg,
        converged,
        iterations,
        clustered,
    })
}

const EVAL_TINY: f64 = 1e-290;

/// Inverse, with coincident-point guards mapped to zero contribution.
fn inv_or_zero(w: Complex64) -> Complex64 {
    if w.norm() < EVAL_TINY {
        Complex64::new(0.0, 0.0)
    } else {
        w.inv()
    }
}

fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// How far the computed roots clear the sector boundary `pi/M`.
#[derive(Debug, Clone)]
pub struct ClearanceReport {
    pub m: usize,
    /// `min |arg z| - pi/M` over nonzero roots (positive = outside).
    pub clearance: f64,
    /// The root attaining the minimum, if any nonzero root exists.
    pub closest_root: Option<Complex64>,
    /// `tan(min |arg z|)` when the closest root lies in the open right
    /// half-plane (the slope of its ray), else `None`.
    pub root_slope: Option<f64>,
    /// `tan(pi/M)` for M >= 3; `None` at M <= 2 where the boundary ray is
    /// not a graph over the real axis.
    pub boundary_slope: Option<f64>,
    /// The slack the caller should use when comparing against zero.
    pub slack: f64,
}

/// Measures the angular clearance of a root report against the sector
/// `|arg z| < pi/M`. Origin roots are ignored.
pub fn sector_clearance(report: &RootReport, m: usize) -> ClearanceReport {
    let boundary = std::f64::consts::PI / m as f64;
    let closest = report
        .roots
        .iter()
        .filter(|z| z.norm() > 0.0)
        .min_by(|a, b| {
            a.arg()
                .abs()
                .partial_cmp(&b.arg().abs())
                .expect("arguments are finite")
        })
        .copied();
    let clearance = match closest {
        Some(z) => z.arg().abs() - boundary,
        None => f64::INFINITY,
    };
    let root_slope = closest.and_then(|z| {
        if z.re > 0.0 {
            Some((z.im / z.re).abs())
        } else {
            None
        }
    });
    ClearanceReport {
        m,
        clearance,
        closest_root: closest,
        root_slope,
        boundary_slope: if m >= 3 { Some(boundary.tan()) } else { None },
        slack: if report.clustered {
            CLEARANCE_SLACK_CLUSTERED
        } else {
            CLEARANCE_SLACK
        },
    }
}

/// True when every computed root is numerically real (|Im z| within
/// `tol * (1 + |z|)`) and has strictly negative real part. This is the
/// informational step-1 check: the sector |arg z| < pi is zero-free exactly
/// when no root leaves the negative real axis.
pub fn all_roots_real_negative(report: &RootReport, tol: f64) -> bool {
    report
        .roots
        .iter()
        .all(|z| z.im.abs() <= tol * (1.0 + z.norm()) && z.re < 0.0)
}

/// Determinant of a rational grid by naive cofactor expansion along the
/// first row. Independent of the Bareiss kernel by construction; capped at
/// order [`BRUTEFORCE_ORDER_CAP`] because the cost is factorial.
pub fn det_cofactor(grid: &[Vec<BigRational>]) -> Result<BigRational> {
    let n = grid.len();
    if grid.iter().any(|r| r.len() != n) {
        let cols = grid.first().map(|r| r.len()).unwrap_or(0);
        return Err(Error::NonSquareGrid { rows: n, cols });
    }
    if n > BRUTEFORCE_ORDER_CAP {
        return Err(Error::MinorOrderTooLarge {
            order: n,
            max: BRUTEFORCE_ORDER_CAP,
        });
    }
    Ok(det_cofactor_inner(grid))
}

fn det_cofactor_inner(grid: &[Vec<BigRational>]) -> BigRational {
    let n = grid.len();
    if n == 0 {
        return BigRational::from_integer(1.into());
    }
    if n == 1 {
        return grid[0][0].clone();
    }
    let mut acc = BigRational::zero();
    for (j, pivot) in grid[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let sub: Vec<Vec<BigRational>> = grid[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = pivot * det_cofactor_inner(&sub);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Recomputes a minor of a generalized Hurwitz matrix by cofactor expansion
/// — the independent check against [`crate::hurwitz::minor_exact`].
pub fn minor_bruteforce(
    matrix: &crate::hurwitz::GeneralizedHurwitzMatrix,
    rows: &[usize],
    cols: &[usize],
) -> Result<BigRational> {
    if rows.is_empty() || rows.len() != cols.len() {
        return Err(Error::InvalidIndexSet {
            reason: "index sets must be nonempty and of equal length".to_string(),
        });
    }
    det_cofactor(&matrix.window(rows, cols))
}
