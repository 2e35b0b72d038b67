//! The generalized Euclidean scheme with step M.
//!
//! Starting from the M arithmetic parts `f_0, ..., f_{M-1}` of a degree-n
//! polynomial (see [`crate::poly::split_arithmetic`]), the scheme extends the
//! sequence one polynomial at a time: for `i = 0, 1, ..., n-M`,
//!
//! * if `deg f_i >= deg f_{i+1}` and `f_{i+1}` is nonzero, divide:
//!   `f_i = d_i * f_{i+1} + f_{i+M}` with `deg f_{i+M} < deg f_{i+1}`;
//! * if `deg f_i < deg f_{i+1}`, pass through: `d_i = 0`, `f_{i+M} = f_i`;
//! * if `f_{i+1} = 0`, pass through likewise: `d_i = 0`, `f_{i+M} = f_i`.
//!
//! The run stops once `f_n` exists, so the table holds exactly n+1
//! polynomials and n-M+1 quotients. Because consecutive parts live in
//! adjacent exponent classes mod M, each division step needs only one
//! quotient term in the non-degenerate case, which makes every `d_i` a
//! linear monomial `c_i x` and gives `deg f_k = n - k` — the regularity the
//! positivity criteria in [`crate::sector`] build on.
//!
//! The sequence of leading coefficients `h_0, ..., h_n` (zero where `f_i` is
//! the zero polynomial) is the run's summary: positivity of all `h_i` is one
//! of the certificates, and the ratios `h_{i-1}/h_i` drive both the
//! continued fractions and the matrix factorization.

use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{split_arithmetic, RationalPolynomial};

/// The full record of a generalized Euclid run: the polynomials
/// `f_0, ..., f_n` and the quotients `d_0, ..., d_{n-M}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidTable {
    m: usize,
    degree: usize,
    polys: Vec<RationalPolynomial>,
    quotients: Vec<RationalPolynomial>,
}

impl EuclidTable {
    /// The step M.
    pub fn m(&self) -> usize {
        self.m
    }

    /// The degree n of the input polynomial.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// All polynomials `f_0..f_n` in index order (n+1 entries).
    pub fn polys(&self) -> &[RationalPolynomial] {
        &self.polys
    }

    /// The quotients `d_0..d_{n-M}` in step order.
    pub fn quotients(&self) -> &[RationalPolynomial] {
        &self.quotients
    }

    /// The leading coefficients `h_0..h_n`, with `h_i = 0` exactly when
    /// `f_i` is the zero polynomial.
    pub fn leading_coefficients(&self) -> Vec<BigRational> {
        self.polys
            .iter()
            .map(|p| {
                p.leading_coefficient()
                    .cloned()
                    .unwrap_or_else(BigRational::zero)
            })
            .collect()
    }

    /// True when no `f_i` (i = 0..n) is the zero polynomial.
    pub fn is_nondegenerate(&self) -> bool {
        self.polys.iter().all(|p| !p.is_zero())
    }

    /// Renders the run as the residue-row table: row j lists
    /// `f_j, f_{j+M}, f_{j+2M}, ...` while the index stays within 0..n,
    /// followed by the quotients and the leading-coefficient list.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "generalized Euclid table (M = {}, n = {})\n",
            self.m, self.degree
        ));
        for j in 0..self.m {
            let cells: Vec<String> = (j..=self.degree)
                .step_by(self.m)
                .map(|k| format!("f_{k} = {}", self.polys[k]))
                .collect();
            out.push_str(&format!("  row {j}: {}\n", cells.join("  |  ")));
        }
        let quots: Vec<String> = self
            .quotients
            .iter()
            .enumerate()
            .map(|(i, d)| format!("d_{i} = {d}"))
            .collect();
        if !quots.is_empty() {
            out.push_str(&format!("  quotients: {}\n", quots.join("  |  ")));
        }
        let hs: Vec<String> = self
            .leading_coefficients()
            .iter()
            .map(|h| h.to_string())
            .collect();
        out.push_str(&format!("  h: {}\n", hs.join(", ")));
        out.push_str(&format!("  nondegenerate: {}\n", self.is_nondegenerate()));
        out
    }

    /// JSON rendering. Rows are padded to a common width with the explicit
    /// marker string `"absent"`; present cells are exact coefficient-string
    /// arrays (the zero polynomial is the empty array).
    pub fn to_json(&self) -> Value {
        let width = self.degree / self.m + 1;
        let rows: Vec<Value> = (0..self.m)
            .map(|j| {
                let mut cells: Vec<Value> = (j..=self.degree)
                    .step_by(self.m)
                    .map(|k| poly_coeff_json(&self.polys[k]))
                    .collect();
                while cells.len() < width {
                    cells.push(Value::String("absent".to_string()));
                }
                json!({ "residue": j, "cells": cells })
            })
            .collect();
        json!({
            "m": self.m,
            "degree": self.degree,
            "rows": rows,
            "quotients": self.quotients.iter().map(poly_coeff_json).collect::<Vec<_>>(),
            "leading": self
                .leading_coefficients()
                .iter()
                .map(|h| Value::String(h.to_string()))
                .collect::<Vec<_>>(),
            "nondegenerate": self.is_nondegenerate(),
        })
    }
}

/// Exact coefficient-string array for a polynomial (descending powers; empty
/// for the zero polynomial).
pub(crate) fn poly_coeff_json(p: &RationalPolynomial) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

/// Computes the sequence `f_0..f_n` and the quotients for any `M >= 2`,
/// allowing `M > n` (then the sequence is just the first n+1 split parts and
/// no division step runs). The public entry point [`run_generalized_euclid`]
/// enforces the usual `2 <= M <= n`; the factorization module needs the
/// relaxed variant for its low-degree base cases.
pub(crate) fn euclid_sequence(
    f: &RationalPolynomial,
    m: usize,
) -> Result<(Vec<RationalPolynomial>, Vec<RationalPolynomial>)> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if m > n {
        // Every exponent residue class mod M holds exactly one term, so the
        // sequence is f_j = a_j x^{n-j} for j = 0..n and no division runs.
        let polys = (0..=n)
            .map(|j| {
                let mut coeffs = vec![BigRational::zero(); n - j + 1];
                coeffs[0] = f.coeff(j);
                RationalPolynomial::from_coeffs(coeffs)
            })
            .collect();
        return Ok((polys, Vec::new()));
    }
    let mut polys: Vec<RationalPolynomial> = split_arithmetic(f, m)?
        .into_iter()
        .map(|part| part.poly)
        .collect();
    let steps = n - m + 1;
    let mut quotients = Vec::with_capacity(steps);
    for i in 0..steps {
        let fi = &polys[i];
        let fi1 = &polys[i + 1];
        let (d, r) = if fi1.is_zero() || fi.degree() < fi1.degree() {
            (RationalPolynomial::zero(), fi.clone())
        } else {
            fi.div_rem(fi1)?
        };
        quotients.push(d);
        polys.push(r);
    }
    Ok((polys, quotients))
}

/// Runs the generalized Euclidean scheme with step M on `f`.
///
/// Requires `deg f >= 2` and `2 <= M <= deg f`. The returned table holds
/// `f_0..f_n` (n+1 polynomials) and `d_0..d_{n-M}` (n-M+1 quotients), where
/// each step applied the division rule or one of the two pass-through rules.
pub fn run_generalized_euclid(f: &RationalPolynomial, m: usize) -> Result<EuclidTable> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::DegreeTooSmall { degree: n, min: 2 });
    }
    if m < 2 || m > n {
        return Err(Error::StepOutOfRange { m, min: 2, max: n });
    }
    let (polys, quotients) = euclid_sequence(f, m)?;
    debug_assert_eq!(polys.len(), n + 1);
    debug_assert_eq!(quotients.len(), n - m + 1);
    Ok(EuclidTable {
        m,
        degree: n,
        polys,
        quotients,
    })
}

/// Convenience: the `h_0..h_n` list for `(f, M)` without keeping the table.
pub fn leading_coefficients(f: &RationalPolynomial, m: usize) -> Result<Vec<BigRational>> {
    Ok(run_generalized_euclid(f, m)?.leading_coefficients())
}

/// Diagnostics attached to the non-degeneracy check. In a non-degenerate run
/// the degrees must satisfy `deg f_k = n - k` and every quotient must be a
/// linear monomial `c_i x`; the two flags confirm those consequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NondegeneracyReport {
    /// True when every `f_0..f_n` is nonzero.
    pub nondegenerate: bool,
    /// The smallest index with `f_i = 0`, if any.
    pub first_zero_index: Option<usize>,
    /// `deg f_k = n - k` for all k (meaningful when `nondegenerate`).
    pub degrees_expected: bool,
    /// Every `d_i` is a linear monomial (meaningful when `nondegenerate`).
    pub quotients_linear_monomials: bool,
}

/// Checks whether a run is non-degenerate (no `f_i` vanishes) and reports
/// the structural consequences that must accompany that case.
pub fn check_nondegenerate(table: &EuclidTable) -> NondegeneracyReport {
    let first_zero_index = table.polys().iter().position(|p| p.is_zero());
    let nondegenerate = first_zero_index.is_none();
    let n = table.degree();
    let degrees_expected = table
        .polys()
        .iter()
        .enumerate()
        .all(|(k, p)| p.degree() == Some(n - k));
    let quotients_linear_monomials = table.quotients().iter().all(|d| d.is_linear_monomial());
    NondegeneracyReport {
        nondegenerate,
        first_zero_index,
        degrees_expected,
        quotients_linear_monomials,
    }
}
