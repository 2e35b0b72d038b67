//! Exact polynomials over the rationals and their arithmetic split.
//!
//! A [`RationalPolynomial`] stores its coefficients in descending order of
//! powers (`a_0` first, so `f(x) = a_0 x^n + a_1 x^{n-1} + ... + a_n`), all
//! exact [`BigRational`] values. The zero polynomial is the empty coefficient
//! list and has no degree ([`RationalPolynomial::degree`] returns `None`,
//! which orders below every `Some(k)` — exactly the "degree minus infinity"
//! convention the division rules rely on).
//!
//! [`split_arithmetic`] decomposes a polynomial into the M parts whose
//! exponents form arithmetic progressions with common difference M: part j
//! collects the terms `a_l x^{n-l}` with `l ≡ j (mod M)`. These parts are the
//! operands of the generalized Euclidean scheme in [`crate::euclid`].

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A univariate polynomial with exact rational coefficients, descending
/// powers. Invariant: the first coefficient is nonzero unless the list is
/// empty (the zero polynomial).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    /// Builds a polynomial from coefficients taken at face value. A leading
    /// zero is an error (the caller's degree claim would be wrong), as is an
    /// empty list; use [`RationalPolynomial::zero`] for the zero polynomial.
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCoefficients);
        }
        if coeffs[0].is_zero() {
            return Err(Error::LeadingZero);
        }
        Ok(Self { coeffs })
    }

    /// Builds a polynomial from a raw coefficient list, trimming leading
    /// zeros. Internal constructor for arithmetic results, where cancellation
    /// legitimately produces leading zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(k) => {
                coeffs.drain(..k);
                Self { coeffs }
            }
            None => Self::zero(),
        }
    }

    /// The zero polynomial (empty coefficient list, degree `None`).
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// Convenience constructor from integer coefficients (tests, examples).
    pub fn from_ints(ints: &[i64]) -> Result<Self> {
        Self::new(
            ints.iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect(),
        )
    }

    /// Degree, or `None` for the zero polynomial. `Option<usize>` orders
    /// `None < Some(k)`, matching the convention deg 0 = -inf used by the
    /// division case analysis.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficients in descending order; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The coefficient `a_l` (l positions from the leading one), zero when
    /// out of range. For `f` of degree n this is the coefficient of
    /// `x^{n-l}`.
    pub fn coeff(&self, l: usize) -> BigRational {
        self.coeffs
            .get(l)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coeffs.first()
    }

    /// Exact sum.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[n - self.coeffs.len() + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[n - other.coeffs.len() + i] += c;
        }
        Self::from_coeffs(out)
    }

    /// Exact difference `self - other`.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    /// Exact product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplication by the monomial `c * x^k`.
    pub fn mul_monomial(&self, c: &BigRational, k: usize) -> Self {
        if self.is_zero() || c.is_zero() {
            return Self::zero();
        }
        let mut coeffs: Vec<BigRational> = self.coeffs.iter().map(|a| a * c).collect();
        coeffs.extend(std::iter::repeat_with(BigRational::zero).take(k));
        Self { coeffs }
    }

    /// Exact long division: returns `(quotient, remainder)` with
    /// `self = quotient * divisor + remainder` and
    /// `deg remainder < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        let dd = divisor.degree().expect("nonzero divisor has a degree");
        let mut rem = self.clone();
        let mut quo_coeffs: Vec<BigRational> = Vec::new();
        let mut quo_deg: Option<usize> = None;
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            let c = rem.leading_coefficient().unwrap() / divisor.leading_coefficient().unwrap();
            if quo_deg.is_none() {
                quo_deg = Some(shift);
                quo_coeffs = vec![BigRational::zero(); shift + 1];
            }
            let qd = quo_deg.unwrap();
            quo_coeffs[qd - shift] = c.clone();
            rem = rem.sub(&divisor.mul_monomial(&c, shift));
        }
        let quo = match quo_deg {
            Some(_) => Self::from_coeffs(quo_coeffs),
            None => Self::zero(),
        };
        Ok((quo, rem))
    }

    /// True when the polynomial is `c * x` for some nonzero `c` (the shape
    /// every quotient takes in the non-degenerate Euclid run).
    pub fn is_linear_monomial(&self) -> bool {
        self.degree() == Some(1) && self.coeffs[1].is_zero()
    }

    /// Evaluates at a complex point in f64 precision (Horner). Exact
    /// coefficients are rounded to the nearest double on the way in; this is
    /// the numeric companion of the exact machinery, not part of it.
    pub fn evaluate_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in &self.coeffs {
            acc = acc * z + Complex64::new(rational_to_f64(c), 0.0);
        }
        acc
    }
}

impl fmt::Display for RationalPolynomial {
    /// Human-readable form: `x^6 + 3x^5 + (3/2)x^3 - 2x^2`, `0` for the zero
    /// polynomial. Fractional coefficients are parenthesized so `1/9x` can
    /// never be misread as `1/(9x)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.coeffs.len() - 1;
        let mut first = true;
        for (l, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = n - l;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_txt = if mag.is_one() && e > 0 {
                String::new()
            } else if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match e {
                0 => write!(
                    f,
                    "{}",
                    if coeff_txt.is_empty() {
                        mag.to_string()
                    } else {
                        coeff_txt
                    }
                )?,
                1 => write!(f, "{coeff_txt}x")?,
                _ => write!(f, "{coeff_txt}x^{e}")?,
            }
        }
        Ok(())
    }
}

/// Rounds an exact rational to the nearest f64. Falls back to a quotient of
/// the integer parts' approximations, which is adequate for the magnitudes
/// this crate produces.
pub fn rational_to_f64(c: &BigRational) -> f64 {
    c.to_f64().unwrap_or_else(|| {
        let n = c.numer().to_f64().unwrap_or(f64::NAN);
        let d = c.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Parses a single coefficient token: an integer (`-3`), an exact fraction
/// (`81/5`), or a finite decimal (`1.001`, converted exactly to 1001/1000).
/// Repeating decimals marked `...` are rejected with a pointer to the
/// fraction syntax.
pub fn parse_rational(token: &str) -> Result<BigRational> {
    let t = token.trim();
    let malformed = |reason: &str| Error::MalformedCoefficient {
        token: t.to_string(),
        reason: reason.to_string(),
    };
    if t.is_empty() {
        return Err(malformed("empty token"));
    }
    if t.ends_with("...") {
        return Err(Error::RepeatingDecimal {
            token: t.to_string(),
        });
    }
    if let Some((ns, ds)) = t.split_once('/') {
        let n: BigInt = ns
            .trim()
            .parse()
            .map_err(|_| malformed("numerator is not an integer"))?;
        let d: BigInt = ds
            .trim()
            .parse()
            .map_err(|_| malformed("denominator is not an integer"))?;
        if d.is_zero() {
            return Err(Error::ZeroDenominator {
                token: t.to_string(),
            });
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        let (sign, int_digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        if !int_digits.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(malformed("decimal contains non-digit characters"));
        }
        if int_digits.is_empty() && frac_part.is_empty() {
            return Err(malformed("decimal has no digits"));
        }
        let digits = format!("{int_digits}{frac_part}");
        let numer: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| malformed("decimal overflow"))?
        };
        let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
        return Ok(BigRational::new(BigInt::from(sign) * numer, denom));
    }
    let n: BigInt = t.parse().map_err(|_| malformed("not an integer"))?;
    Ok(BigRational::from_integer(n))
}

/// Parses a polynomial from text: either a comma-separated coefficient list
/// in descending order (`"1, 0, -2, 1/3, 0.5"`) or a JSON array of
/// coefficient strings (`["1", "1/2"]`). Leading zeros are rejected, not
/// stripped — the token count is the caller's degree claim.
pub fn parse_polynomial(text: &str) -> Result<RationalPolynomial> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::EmptyCoefficients);
    }
    let tokens: Vec<String> = if t.starts_with('[') {
        let arr: Vec<serde_json::Value> =
            serde_json::from_str(t).map_err(|e| Error::MalformedCoefficient {
                token: t.to_string(),
                reason: format!("invalid JSON array: {e}"),
            })?;
        arr.iter()
            .map(|v| match v {
                serde_json::Value::String(s) => Ok(s.clone()),
                serde_json::Value::Number(n) => Ok(n.to_string()),
                other => Err(Error::MalformedCoefficient {
                    token: other.to_string(),
                    reason: "JSON coefficients must be strings".to_string(),
                }),
            })
            .collect::<Result<_>>()?
    } else {
        t.split(',').map(|s| s.to_string()).collect()
    };
    let coeffs: Vec<BigRational> = tokens
        .iter()
        .map(|tok| parse_rational(tok))
        .collect::<Result<_>>()?;
    RationalPolynomial::new(coeffs)
}

/// One part of the arithmetic split: the terms of `f` whose coefficient
/// indices are congruent to `residue` modulo `difference`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArithmeticPart {
    /// The residue class j (0-based).
    pub residue: usize,
    /// The common difference M of the exponent progression.
    pub difference: usize,
    /// The part polynomial; zero when every selected coefficient vanishes.
    pub poly: RationalPolynomial,
}

/// Splits `f` (nonzero, degree n) into M parts, part j carrying exactly the
/// terms `a_l x^{n-l}` with `l ≡ j (mod M)`. Requires `1 <= M <= n`. The
/// parts sum back to `f` and select pairwise disjoint terms.
pub fn split_arithmetic(f: &RationalPolynomial, m: usize) -> Result<Vec<ArithmeticPart>> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if m < 1 || m > n {
        return Err(Error::StepOutOfRange {
            m,
            min: 1,
            max: n.max(1),
        });
    }
    let mut parts = Vec::with_capacity(m);
    for j in 0..m {
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for l in (j..=n).step_by(m) {
            coeffs[l] = f.coeff(l);
        }
        parts.push(ArithmeticPart {
            residue: j,
            difference: m,
            poly: RationalPolynomial::from_coeffs(coeffs),
        });
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parse_integers_fractions_decimals() {
        assert_eq!(parse_rational("21").unwrap(), rat(21, 1));
        assert_eq!(parse_rational("-3").unwrap(), rat(-3, 1));
        assert_eq!(parse_rational("81/5").unwrap(), rat(81, 5));
        assert_eq!(parse_rational("-81/-5").unwrap(), rat(81, 5));
        assert_eq!(parse_rational("1.001").unwrap(), rat(1001, 1000));
        assert_eq!(parse_rational("-0.25").unwrap(), rat(-1, 4));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("2.").unwrap(), rat(2, 1));
    }

    #[test]
    fn parse_rejects_bad_tokens() {
        assert!(matches!(
            parse_rational("0.111..."),
            Err(Error::RepeatingDecimal { .. })
        ));
        assert!(matches!(
            parse_rational("1/0"),
            Err(Error::ZeroDenominator { .. })
        ));
        assert!(matches!(
            parse_rational("abc"),
            Err(Error::MalformedCoefficient { .. })
        ));
        assert!(matches!(
            parse_rational("1.2.3"),
            Err(Error::MalformedCoefficient { .. })
        ));
        assert!(matches!(
            parse_rational(""),
            Err(Error::MalformedCoefficient { .. })
        ));
    }

    #[test]
    fn parse_polynomial_accepts_lists_and_json() {
        let p = parse_polynomial("1, 0, -2, 1/3").unwrap();
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.coeff(2), rat(-2, 1));
        let q = parse_polynomial(r#"["1", "0", "-2", "1/3"]"#).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn parse_polynomial_rejects_leading_zero_and_empty() {
        assert!(matches!(
            parse_polynomial("0, 1, 2"),
            Err(Error::LeadingZero)
        ));
        assert!(matches!(parse_polynomial("0"), Err(Error::LeadingZero)));
        assert!(matches!(
            parse_polynomial("  "),
            Err(Error::EmptyCoefficients)
        ));
    }

    #[test]
    fn zero_polynomial_degree_orders_below_everything() {
        let z = RationalPolynomial::zero();
        assert_eq!(z.degree(), None);
        assert!(z.degree() < Some(0));
        assert!(z.is_zero());
    }

    #[test]
    fn division_identity_and_remainder_degree() {
        let f = RationalPolynomial::from_ints(&[1, 3, 9, 2, 1]).unwrap();
        let g = RationalPolynomial::from_ints(&[2, 0, 1]).unwrap();
        let (q, r) = f.div_rem(&g).unwrap();
        assert_eq!(q.mul(&g).add(&r), f);
        assert!(r.degree() < g.degree());
    }

    #[test]
    fn division_by_zero_polynomial_errors() {
        let f = RationalPolynomial::from_ints(&[1, 1]).unwrap();
        assert!(matches!(
            f.div_rem(&RationalPolynomial::zero()),
            Err(Error::DivisionByZeroPolynomial)
        ));
    }

    #[test]
    fn split_reassembles_and_is_disjoint() {
        let f = parse_polynomial("1, 1, 1, 1001/1000, 1, 999/1000").unwrap();
        let parts = split_arithmetic(&f, 3).unwrap();
        assert_eq!(parts.len(), 3);
        let sum = parts
            .iter()
            .fold(RationalPolynomial::zero(), |acc, p| acc.add(&p.poly));
        assert_eq!(sum, f);
        // Disjoint support: every exponent appears in exactly one part.
        let n = 5usize;
        for part in &parts {
            let pn = part.poly.degree();
            if let Some(pd) = pn {
                for (l, c) in part.poly.coeffs().iter().enumerate() {
                    if !c.is_zero() {
                        let exponent = pd - l;
                        // n - exponent must be ≡ residue (mod 3)
                        assert_eq!((n - exponent) % 3, part.residue);
                    }
                }
            }
        }
    }

    #[test]
    fn split_rejects_bad_m() {
        let f = RationalPolynomial::from_ints(&[1, 2, 3]).unwrap();
        assert!(matches!(
            split_arithmetic(&f, 0),
            Err(Error::StepOutOfRange { .. })
        ));
        assert!(matches!(
            split_arithmetic(&f, 3),
            Err(Error::StepOutOfRange { .. })
        ));
        assert!(split_arithmetic(&f, 2).is_ok());
    }

    #[test]
    fn display_renders_fractions_parenthesized() {
        let f = parse_polynomial("30, 0, 0, 48/7, 0").unwrap();
        assert_eq!(f.to_string(), "30x^4 + (48/7)x");
        let g = parse_polynomial("1, -2, 0, -1/5").unwrap();
        assert_eq!(g.to_string(), "x^3 - 2x^2 - (1/5)");
        assert_eq!(RationalPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn evaluate_complex_matches_horner_by_hand() {
        let f = RationalPolynomial::from_ints(&[1, 0, -1]).unwrap(); // x^2 - 1
        let z = Complex64::new(0.0, 1.0);
        let v = f.evaluate_complex(z);
        assert!((v - Complex64::new(-2.0, 0.0)).norm() < 1e-15);
    }
}
