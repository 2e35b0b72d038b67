//! Bidiagonal-style factorization of the shifted generalized Hurwitz matrix.
//!
//! When every Euclid leading coefficient `h_0..h_n` of `(f, M)` is nonzero,
//! the shifted matrix factors exactly as
//!
//! ```text
//! H~_M(f) = J(c_1) J(c_2) ... J(c_n) H~_M(a_n),      c_i = h_{i-1} / h_i,
//! ```
//!
//! where each `J(c)` is the infinite upper-bidiagonal matrix with parameter
//! `c` at the diagonal positions `i ≡ 1 (mod M)`, ones on the whole first
//! superdiagonal, and zeros elsewhere, and `H~_M(a_n)` is the shifted matrix
//! of the constant polynomial `a_n`. All n+1 parameters `(c_1..c_n, a_n)`
//! are exact rationals; when f is a sector-certified polynomial they are all
//! positive, which exhibits the matrix as a product of totally nonnegative
//! factors.
//!
//! [`verify_factorization`] checks the identity entrywise on a finite
//! leading window. The product of the window truncations is computed with
//! extended interior rows: each `J` factor couples row u only to rows u and
//! u+1, so an N x N leading block of the full product is reproduced exactly
//! from an (N+n) row window of the right factor — no truncation error enters
//! the comparison.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::euclid::euclid_sequence;
use crate::hurwitz::{GeneralizedHurwitzMatrix, HurwitzVariant};
use crate::poly::RationalPolynomial;

/// The factorization parameters for one `(f, M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationResult {
    pub m: usize,
    pub degree: usize,
    /// `c_1..c_n` with `c_i = h_{i-1}/h_i`.
    pub cs: Vec<BigRational>,
    /// The terminal constant `a_n` carried by the rightmost factor.
    pub terminal: BigRational,
}

/// Computes the factorization parameters. Requires `deg f >= 1`, `M >= 2`,
/// and every `h_0..h_n` nonzero; the first vanishing index is reported
/// otherwise. Degrees below M are accepted: there the h-list is simply the
/// list of leading coefficients of the (possibly truncated) split parts.
pub fn factor_hm(f: &RationalPolynomial, m: usize) -> Result<FactorizationResult> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 1 {
        return Err(Error::DegreeTooSmall { degree: n, min: 1 });
    }
    if m < 2 {
        return Err(Error::StepOutOfRange {
            m,
            min: 2,
            max: usize::MAX,
        });
    }
    let (polys, _) = euclid_sequence(f, m)?;
    let h: Vec<BigRational> = polys
        .iter()
        .map(|p| {
            p.leading_coefficient()
                .cloned()
                .unwrap_or_else(BigRational::zero)
        })
        .collect();
    if let Some(index) = h.iter().position(|v| v.is_zero()) {
        return Err(Error::ZeroLeadingCoefficient { index });
    }
    let cs = (1..=n).map(|i| &h[i - 1] / &h[i]).collect();
    Ok(FactorizationResult {
        m,
        degree: n,
        cs,
        terminal: h[n].clone(),
    })
}

/// Entry of the bidiagonal factor `J(c)` at 1-based `(i, j)`.
fn j_entry(c: &BigRational, m: usize, i: usize, j: usize) -> BigRational {
    if i == j && (i - 1).is_multiple_of(m) {
        c.clone()
    } else if j == i + 1 {
        BigRational::from_integer(1.into())
    } else {
        BigRational::zero()
    }
}

/// Checks `H~_M(f) = J(c_1)...J(c_n) H~_M(a_n)` entrywise on the leading
/// `window x window` block. Requires `window >= n + M` so the block sees
/// every coefficient. Truncation is exact: the product is accumulated on a
/// row window extended by one row per factor, so every compared entry equals
/// the corresponding entry of the infinite product.
pub fn verify_factorization(
    f: &RationalPolynomial,
    m: usize,
    result: &FactorizationResult,
    window: usize,
) -> Result<bool> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if window < n + m {
        return Err(Error::InvalidIndexSet {
            reason: format!(
                "window {window} too small (need at least n + M = {})",
                n + m
            ),
        });
    }
    // Rightmost factor: H~_M(a_n) on rows 1..window+n, columns 1..window.
    let rows_ext = window + n;
    let mut acc: Vec<Vec<BigRational>> = (1..=rows_ext)
        .map(|i| {
            (1..=window)
                .map(|j| {
                    if m * (j - 1) == i - 1 {
                        result.terminal.clone()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    // Multiply J(c_n), ..., J(c_1) on the left; each pass shortens the row
    // window by one since row u of J*A reads rows u and u+1 of A.
    for t in (1..=n).rev() {
        let c = &result.cs[t - 1];
        let rows_out = acc.len() - 1;
        let mut next: Vec<Vec<BigRational>> = Vec::with_capacity(rows_out);
        for u in 1..=rows_out {
            let diag = j_entry(c, m, u, u);
            let row: Vec<BigRational> = (0..window)
                .map(|v| {
                    let mut s = acc[u][v].clone();
                    if !diag.is_zero() {
                        s += &diag * &acc[u - 1][v];
                    }
                    s
                })
                .collect();
            next.push(row);
        }
        acc = next;
    }
    let target = GeneralizedHurwitzMatrix::new(f, m, HurwitzVariant::Shifted)?;
    for i in 1..=window {
        for j in 1..=window {
            if acc[i - 1][j - 1] != target.entry(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
