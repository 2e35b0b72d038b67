//! Continued-fraction expansions of part ratios `f_i / f_j`.
//!
//! For residues `0 <= i < j <= M-1` with both parts nonzero, ordinary
//! Euclidean division on the pair — extracting only the leading term of each
//! quotient — produces a finite continued fraction
//!
//! ```text
//! f_i/f_j = c_1 z^{e_1} + 1/(c_2 z^{e_2} + 1/( ... + 1/(c_k z^{e_k})))
//! ```
//!
//! whose exponents alternate between `m = j - i` (odd steps) and `M - m`
//! (even steps) and whose coefficients are the ratios of consecutive leading
//! coefficients in the remainder sequence. In the generic case each
//! remainder drops in degree by exactly the expected exponent; when
//! cancellation skips past that degree the alternation breaks, and the
//! expansion reports the failing step together with everything extracted so
//! far instead of guessing a continuation
//! ([`crate::error::Error::DegeneratePairExpansion`]).
//!
//! When all coefficients are positive these fractions are the cone-mapping
//! workhorse behind the sector theorems: evaluated on rays inside the cone
//! `0 <= arg z <= α <= π/M`, the value's argument stays inside
//! `[-(M-m)α, mα]`. The property tests sample exactly that containment.

use num_complex::Complex64;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::{rational_to_f64, split_arithmetic, RationalPolynomial};

/// Magnitudes below this are refused as divisors during f64 evaluation.
pub const EVAL_MIN_MAGNITUDE: f64 = 1e-300;

/// A finite continued fraction attached to a residue pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    /// Lower residue i.
    pub i: usize,
    /// Upper residue j.
    pub j: usize,
    /// The step M of the originating split.
    pub step: usize,
    /// Exponent of the odd-position terms: `m = j - i`. Even positions use
    /// `M - m`.
    pub m: usize,
    /// The coefficients `c_1..c_k`, all exact.
    pub coefficients: Vec<BigRational>,
}

impl ContinuedFraction {
    /// Number of levels k.
    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// The exponent at 1-based level l: `m` when l is odd, `M - m` when even.
    pub fn exponent(&self, l: usize) -> usize {
        if l % 2 == 1 {
            self.m
        } else {
            self.step - self.m
        }
    }

    /// All exponents `e_1..e_k` in order.
    pub fn exponents(&self) -> Vec<usize> {
        (1..=self.len()).map(|l| self.exponent(l)).collect()
    }

    /// Symbolic reconstruction as a rational function `(num, den)` with
    /// `num/den = c_1 z^{e_1} + 1/( ... )`, built bottom-up. Exact; used to
    /// check `f_i * den = f_j * num`.
    pub fn reconstruct(&self) -> (RationalPolynomial, RationalPolynomial) {
        let k = self.len();
        let constant_one =
            RationalPolynomial::from_coeffs(vec![BigRational::from_integer(1.into())]);
        let mut num = RationalPolynomial::zero();
        let mut den = constant_one.clone();
        for l in (1..=k).rev() {
            let term = constant_one.mul_monomial(&self.coefficients[l - 1], self.exponent(l));
            // new = term + 1/(num/den) with the convention that the empty
            // tail contributes nothing at the innermost level.
            let (new_num, new_den) = if num.is_zero() {
                (term, constant_one.clone())
            } else {
                (term.mul(&num).add(&den), num)
            };
            num = new_num;
            den = new_den;
        }
        (num, den)
    }
}

/// Expands `f_i / f_j` (arithmetic parts of `f` at step M) into its
/// continued fraction. Requires `0 <= i < j <= M-1` and both parts nonzero.
/// A degenerate pair — a remainder skipping past the expected degree —
/// yields [`Error::DegeneratePairExpansion`] carrying the failing step and
/// the coefficients already extracted.
pub fn expand_pair_cfrac(
    f: &RationalPolynomial,
    m: usize,
    i: usize,
    j: usize,
) -> Result<ContinuedFraction> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if m < 2 || m > n {
        return Err(Error::StepOutOfRange { m, min: 2, max: n });
    }
    if !(i < j && j < m) {
        return Err(Error::InvalidPair {
            i,
            j,
            reason: format!("need 0 <= i < j <= {}", m - 1),
        });
    }
    let parts = split_arithmetic(f, m)?;
    let mut g0 = parts[i].poly.clone();
    let mut g1 = parts[j].poly.clone();
    if g0.is_zero() || g1.is_zero() {
        return Err(Error::InvalidPair {
            i,
            j,
            reason: "both parts must be nonzero".to_string(),
        });
    }
    let pair_gap = j - i;
    let mut coefficients = Vec::new();
    let mut level = 1usize;
    loop {
        let expected = if level % 2 == 1 {
            pair_gap
        } else {
            m - pair_gap
        };
        let d0 = g0.degree().expect("loop keeps g0 nonzero");
        let d1 = g1.degree().expect("loop keeps g1 nonzero");
        if d0 < d1 + expected || d0 - d1 != expected {
            return Err(Error::DegeneratePairExpansion {
                step: level,
                partial: coefficients,
            });
        }
        let c = g0.leading_coefficient().unwrap() / g1.leading_coefficient().unwrap();
        coefficients.push(c.clone());
        let next = g0.sub(&g1.mul_monomial(&c, expected));
        if next.is_zero() {
            return Ok(ContinuedFraction {
                i,
                j,
                step: m,
                m: pair_gap,
                coefficients,
            });
        }
        g0 = g1;
        g1 = next;
        level += 1;
    }
}

/// Evaluates the continued fraction at a nonzero complex point, bottom-up.
/// Division by a magnitude below [`EVAL_MIN_MAGNITUDE`] is refused.
pub fn cfrac_evaluate(cf: &ContinuedFraction, z: Complex64) -> Result<Complex64> {
    if z.norm() == 0.0 {
        return Err(Error::InvalidEvaluationPoint {
            reason: "continued fractions are evaluated away from z = 0".to_string(),
        });
    }
    if cf.is_empty() {
        return Err(Error::InvalidEvaluationPoint {
            reason: "empty continued fraction".to_string(),
        });
    }
    let k = cf.len();
    let mut acc = Complex64::new(0.0, 0.0);
    for l in (1..=k).rev() {
        let c = rational_to_f64(&cf.coefficients[l - 1]);
        let term = Complex64::new(c, 0.0) * z.powu(cf.exponent(l) as u32);
        if l == k {
            acc = term;
        } else {
            if acc.norm() < EVAL_MIN_MAGNITUDE {
                return Err(Error::NearZeroDivision {
                    magnitude: acc.norm(),
                });
            }
            acc = term + acc.inv();
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn rat(s: &str) -> BigRational {
        s.parse().unwrap()
    }

    fn quintic() -> RationalPolynomial {
        parse_polynomial("1,1,1,1001/1000,1,999/1000").unwrap()
    }

    #[test]
    fn quintic_pair_01_has_known_expansion() {
        let cf = expand_pair_cfrac(&quintic(), 3, 0, 1).unwrap();
        assert_eq!(cf.coefficients, ["1", "1000", "1/1000"].map(rat).to_vec());
        assert_eq!(cf.exponents(), vec![1, 2, 1]);
        assert_eq!(cf.len(), 3);
    }

    #[test]
    fn reconstruction_recovers_part_ratio_exactly() {
        let f = quintic();
        for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
            let cf = expand_pair_cfrac(&f, 3, i, j).unwrap();
            let (num, den) = cf.reconstruct();
            let parts = split_arithmetic(&f, 3).unwrap();
            let lhs = parts[i].poly.mul(&den);
            let rhs = parts[j].poly.mul(&num);
            assert_eq!(lhs, rhs, "pair ({i},{j})");
        }
    }

    #[test]
    fn evaluation_matches_part_ratio() {
        let f = quintic();
        let cf = expand_pair_cfrac(&f, 3, 0, 1).unwrap();
        let parts = split_arithmetic(&f, 3).unwrap();
        for &(re, im) in &[(0.7, 0.3), (1.5, -0.2), (0.1, 0.9), (2.0, 2.0)] {
            let z = Complex64::new(re, im);
            let lhs = cfrac_evaluate(&cf, z).unwrap();
            let num = parts[0].poly.evaluate_complex(z);
            let den = parts[1].poly.evaluate_complex(z);
            let rhs = num / den;
            assert!(
                (lhs - rhs).norm() <= 1e-9 * rhs.norm().max(1.0),
                "mismatch at z = {z}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn degenerate_pair_reports_step_and_partial() {
        // f = x^4 + x^3 + x^2 + x + 1 at M = 2: f_0 = x^4 + x^2 + 1,
        // f_1 = x^3 + x. Step 1 divides cleanly with gap 1, but the next
        // remainder skips a degree, breaking the alternation at step 2.
        let f = parse_polynomial("1,1,1,1,1").unwrap();
        match expand_pair_cfrac(&f, 2, 0, 1) {
            Err(Error::DegeneratePairExpansion { step, partial }) => {
                assert_eq!(step, 2);
                assert_eq!(partial, vec![rat("1")]);
            }
            other => panic!("expected degenerate expansion, got {other:?}"),
        }
    }

    #[test]
    fn zero_part_is_rejected() {
        // x^7 + x^6 + x^5: parts 0,1,2 are x^7, x^6, x^5 — all nonzero at
        // M = 3; at M = 4 part 3 is zero.
        let f = parse_polynomial("1,1,1,0,0,0,0,0").unwrap();
        assert!(matches!(
            expand_pair_cfrac(&f, 4, 0, 3),
            Err(Error::InvalidPair { .. })
        ));
    }

    #[test]
    fn evaluation_guards() {
        let cf = expand_pair_cfrac(&quintic(), 3, 0, 1).unwrap();
        assert!(matches!(
            cfrac_evaluate(&cf, Complex64::new(0.0, 0.0)),
            Err(Error::InvalidEvaluationPoint { .. })
        ));
    }
}
