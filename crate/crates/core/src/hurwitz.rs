//! Generalized Hurwitz matrices, their minors, and the structured index
//! sets that decide total nonnegativity.
//!
//! For `f(x) = a_0 x^n + ... + a_n` and a step M, the matrix comes in two
//! indexings of the same band structure (rows and columns start at 1,
//! `a_k = 0` outside `0..=n`):
//!
//! * [`HurwitzVariant::Standard`]: entry `(i, j) = a_{Mj - i}`;
//! * [`HurwitzVariant::Shifted`]: entry `(i, j) = a_{M(j-1) - (i-1)}`, the
//!   form the factorization in [`crate::factor`] works with.
//!
//! Both are infinite; every operation here works on finite index sets or
//! finite truncation windows. Minor notation is rows-on-top: a minor is
//! selected by a strictly increasing row set and column set of equal size.
//!
//! The n *special minors* `Δ_1..Δ_n` use consecutive rows `k..k+r-1` against
//! leading columns `1..r`, with `p = (M-1)(r-1) + (M-k)` running over `1..n`
//! exactly once. Their positivity decides total nonnegativity of the whole
//! matrix, and in the non-degenerate case each `Δ_p` factors exactly as a
//! product of the Euclid leading coefficients — crosschecks the tests lean
//! on heavily.
//!
//! For a pair of residues `0 <= i < j <= M-1`, the two-row interleaving
//! submatrix is again an ordinary (step-2) Hurwitz matrix of a lifted
//! polynomial; [`pair_lift`] builds that polynomial and [`pair_leading_minors`]
//! computes the finitely many leading principal minors that decide the
//! pairwise certificate. For even M, [`map_special_minor_to_h2`] sends each
//! special-minor index to the step-2 index set with the same value.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::RationalPolynomial;

/// Which of the two standard indexings of the matrix to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HurwitzVariant {
    /// Entry `(i, j) = a_{Mj-i}`.
    Standard,
    /// Entry `(i, j) = a_{M(j-1)-(i-1)}` (one diagonal shift; used by the
    /// factorization).
    Shifted,
}

/// An infinite generalized Hurwitz matrix, realized as an entry accessor
/// over the coefficient list of a polynomial.
#[derive(Debug, Clone)]
pub struct GeneralizedHurwitzMatrix {
    coeffs: Vec<BigRational>,
    n: usize,
    m: usize,
    variant: HurwitzVariant,
}

impl GeneralizedHurwitzMatrix {
    /// Wraps `f` (nonzero) with step `m >= 1`.
    pub fn new(f: &RationalPolynomial, m: usize, variant: HurwitzVariant) -> Result<Self> {
        let n = f.degree().ok_or(Error::ZeroPolynomial)?;
        if m < 1 {
            return Err(Error::StepOutOfRange { m, min: 1, max: n });
        }
        Ok(Self {
            coeffs: f.coeffs().to_vec(),
            n,
            m,
            variant,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Degree of the underlying polynomial.
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> HurwitzVariant {
        self.variant
    }

    /// The coefficient `a_k`, zero outside `0..=n`.
    fn a(&self, k: isize) -> BigRational {
        if k < 0 || k as usize > self.n {
            BigRational::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Exact entry at 1-based position `(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> BigRational {
        assert!(i >= 1 && j >= 1, "matrix indices are 1-based");
        let (i, j, m) = (i as isize, j as isize, self.m as isize);
        match self.variant {
            HurwitzVariant::Standard => self.a(m * j - i),
            HurwitzVariant::Shifted => self.a(m * (j - 1) - (i - 1)),
        }
    }

    /// The finite window `rows x cols` as a dense grid.
    pub fn window(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|&i| cols.iter().map(|&j| self.entry(i, j)).collect())
            .collect()
    }
}

fn validate_index_sets(rows: &[usize], cols: &[usize]) -> Result<()> {
    if rows.is_empty() || cols.is_empty() {
        return Err(Error::InvalidIndexSet {
            reason: "index sets must be nonempty".to_string(),
        });
    }
    if rows.len() != cols.len() {
        return Err(Error::InvalidIndexSet {
            reason: format!("{} rows vs {} columns", rows.len(), cols.len()),
        });
    }
    for set in [rows, cols] {
        if set[0] < 1 {
            return Err(Error::InvalidIndexSet {
                reason: "indices are 1-based".to_string(),
            });
        }
        if set.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndexSet {
                reason: "index sets must be strictly increasing".to_string(),
            });
        }
    }
    Ok(())
}

/// Exact minor of the matrix over strictly increasing index sets, computed by
/// fraction-free (Bareiss) elimination after clearing denominators.
pub fn minor_exact(
    matrix: &GeneralizedHurwitzMatrix,
    rows: &[usize],
    cols: &[usize],
) -> Result<BigRational> {
    validate_index_sets(rows, cols)?;
    det_bareiss(&matrix.window(rows, cols))
}

/// Exact determinant of a square rational grid via Bareiss elimination.
///
/// Each row is scaled by the LCM of its denominators so the elimination runs
/// over integers; the one-step fraction-free recurrence keeps every
/// intermediate value an exact integer (each division is exact), and the
/// accumulated row scalings are divided back out at the end.
pub fn det_bareiss(grid: &[Vec<BigRational>]) -> Result<BigRational> {
    let n = grid.len();
    if grid.iter().any(|r| r.len() != n) {
        let cols = grid.first().map(|r| r.len()).unwrap_or(0);
        return Err(Error::NonSquareGrid { rows: n, cols });
    }
    if n == 0 {
        return Ok(BigRational::one());
    }
    // Clear denominators row by row, tracking the total scaling factor.
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in grid {
        let lcm = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        scale *= &lcm;
        a.push(row.iter().map(|c| c.numer() * (&lcm / c.denom())).collect());
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(BigRational::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det_int = if sign < 0 {
        -a[n - 1][n - 1].clone()
    } else {
        a[n - 1][n - 1].clone()
    };
    Ok(BigRational::new(det_int, scale))
}

/// One special minor: value plus all three coordinates of its index
/// (`p = (M-1)(r-1) + (M-k)`, rows `k..k+r-1`, columns `1..r`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialMinor {
    pub p: usize,
    pub k: usize,
    pub r: usize,
    pub value: BigRational,
}

impl SpecialMinor {
    pub fn rows(&self) -> Vec<usize> {
        (self.k..self.k + self.r).collect()
    }

    pub fn cols(&self) -> Vec<usize> {
        (1..=self.r).collect()
    }
}

/// The complete list `Δ_1..Δ_n` for one `(f, M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialMinorSet {
    pub m: usize,
    pub degree: usize,
    pub minors: Vec<SpecialMinor>,
}

impl SpecialMinorSet {
    pub fn all_positive(&self) -> bool {
        self.minors.iter().all(|sm| sm.value.is_positive())
    }

    /// First index p with `Δ_p <= 0`, if any.
    pub fn first_nonpositive(&self) -> Option<&SpecialMinor> {
        self.minors.iter().find(|sm| !sm.value.is_positive())
    }
}

/// Inverts `p = (M-1)(r-1) + (M-k)` into `(k, r)` with `1 <= k <= M-1`.
pub fn special_minor_index(m: usize, p: usize) -> (usize, usize) {
    assert!(m >= 2 && p >= 1);
    let r = (p - 1) / (m - 1) + 1;
    let q = p - (m - 1) * (r - 1);
    (m - q, r)
}

/// Computes the n special minors of the standard-variant matrix for
/// `(f, M)`, `2 <= M <= n`. `Δ_p` spans rows `k..k+r-1` and columns `1..r`
/// under the unique decomposition `p = (M-1)(r-1) + (M-k)`.
pub fn special_minors(f: &RationalPolynomial, m: usize) -> Result<SpecialMinorSet> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if m < 2 || m > n {
        return Err(Error::StepOutOfRange { m, min: 2, max: n });
    }
    let matrix = GeneralizedHurwitzMatrix::new(f, m, HurwitzVariant::Standard)?;
    let minors = (1..=n)
        .map(|p| {
            let (k, r) = special_minor_index(m, p);
            let rows: Vec<usize> = (k..k + r).collect();
            let cols: Vec<usize> = (1..=r).collect();
            let value = minor_exact(&matrix, &rows, &cols)?;
            Ok(SpecialMinor { p, k, r, value })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpecialMinorSet {
        m,
        degree: n,
        minors,
    })
}

/// Outcome of the total-nonnegativity decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TNStatus {
    /// All special minors are strictly positive, which certifies total
    /// nonnegativity of the whole infinite matrix.
    TnCertified,
    /// An explicitly negative minor was found.
    NotTn,
    /// Neither: some special minor vanishes (or M = 1, where no finite
    /// certificate exists) and the capped search found no negative minor.
    Inconclusive,
}

/// How the verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TNMethod {
    /// Positivity of the n special minors.
    SpecialMinorsPositive,
    /// Exhaustive window search exhausted the order cap without a witness.
    ExhaustiveCap,
    /// The window search produced a negative witness minor.
    WitnessFound,
}

/// A concrete negative minor disproving total nonnegativity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TNWitness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: BigRational,
}

/// Verdict of [`tn_verdict`]: status, method, and the witness when negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TNVerdict {
    pub status: TNStatus,
    pub method: TNMethod,
    pub witness: Option<TNWitness>,
    /// The order cap the window search ran with.
    pub cap: usize,
}

/// Default order cap for the witness search window.
pub const DEFAULT_MINOR_SEARCH_CAP: usize = 4;

/// Decides total nonnegativity for `(f, M)` with `1 <= M <= n`.
///
/// Negative coefficients are themselves negative 1x1 minors, so they refute
/// immediately. For `M >= 2`, strict positivity of the n special minors
/// certifies. Otherwise a deterministic search scans the truncation window
/// rows `1..n+M`, columns `1..ceil(n/M)+2` by ascending minor order (then
/// lexicographic row set, then lexicographic column set) up to order `cap`;
/// the first negative minor found is returned as the witness. If nothing is
/// found the verdict is inconclusive — vanishing special minors leave both
/// outcomes possible at finite order.
pub fn tn_verdict(f: &RationalPolynomial, m: usize, cap: usize) -> Result<TNVerdict> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if m < 1 || m > n {
        return Err(Error::StepOutOfRange { m, min: 1, max: n });
    }
    let matrix = GeneralizedHurwitzMatrix::new(f, m, HurwitzVariant::Standard)?;
    if m >= 2 {
        let set = special_minors(f, m)?;
        if set.all_positive() {
            return Ok(TNVerdict {
                status: TNStatus::TnCertified,
                method: TNMethod::SpecialMinorsPositive,
                witness: None,
                cap,
            });
        }
    }
    let row_limit = n + m;
    let col_limit = n.div_ceil(m) + 2;
    if let Some(witness) = find_negative_minor(&matrix, row_limit, col_limit, cap)? {
        return Ok(TNVerdict {
            status: TNStatus::NotTn,
            method: TNMethod::WitnessFound,
            witness: Some(witness),
            cap,
        });
    }
    Ok(TNVerdict {
        status: TNStatus::Inconclusive,
        method: TNMethod::ExhaustiveCap,
        witness: None,
        cap,
    })
}

/// Scans the window for the deterministic first negative minor: order
/// ascending, then row set, then column set, both in lexicographic order.
fn find_negative_minor(
    matrix: &GeneralizedHurwitzMatrix,
    row_limit: usize,
    col_limit: usize,
    cap: usize,
) -> Result<Option<TNWitness>> {
    for order in 1..=cap.min(row_limit).min(col_limit) {
        let mut rows = first_combination(order);
        loop {
            if rows.last().copied().unwrap_or(0) > row_limit {
                break;
            }
            let mut cols = first_combination(order);
            loop {
                if cols.last().copied().unwrap_or(0) > col_limit {
                    break;
                }
                let value = det_bareiss(&matrix.window(&rows, &cols))?;
                if value.is_negative() {
                    return Ok(Some(TNWitness { rows, cols, value }));
                }
                if !next_combination(&mut cols, col_limit) {
                    break;
                }
            }
            if !next_combination(&mut rows, row_limit) {
                break;
            }
        }
    }
    Ok(None)
}

fn first_combination(order: usize) -> Vec<usize> {
    (1..=order).collect()
}

/// Advances a strictly increasing combination within `1..=limit` to its
/// lexicographic successor; false when exhausted.
fn next_combination(set: &mut [usize], limit: usize) -> bool {
    let k = set.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if set[i] < limit - (k - 1 - i) {
            set[i] += 1;
            for t in i + 1..k {
                set[t] = set[t - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The step-2 lift of a residue pair `(i, j)`: the polynomial whose ordinary
/// Hurwitz matrix equals the interleaved two-row submatrix of the step-M
/// matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairLift {
    pub i: usize,
    pub j: usize,
    /// Count of in-range interleaved coefficient indices minus one: the
    /// degree the lift has when its leading coefficient does not vanish.
    pub m_pair: usize,
    /// The lifted polynomial `sum_k a_{kM+i} x^{m-2k} + a_{kM+j} x^{m-2k-1}`
    /// (leading zeros trimmed if the interleaving starts with zeros).
    pub poly: RationalPolynomial,
    /// Fractional part of `(n-i)/M`.
    pub alpha: BigRational,
    /// Fractional part of `(n-j)/M`.
    pub beta: BigRational,
    /// Parity indicator of the lift size: `(1-(-1)^m)/2`.
    pub epsilon: usize,
}

/// Entry view of the interleaved pair submatrix (1-based): odd rows carry
/// the j-residue coefficients, even rows the i-residue ones, each row pair
/// shifted one column right.
pub fn pair_submatrix_entry(
    f: &RationalPolynomial,
    m: usize,
    i: usize,
    j: usize,
    row: usize,
    col: usize,
) -> BigRational {
    assert!(row >= 1 && col >= 1);
    let n = f.degree().expect("nonzero polynomial");
    let t = (row - 1) / 2;
    if col <= t {
        return BigRational::zero();
    }
    let base = (col - 1 - t) * m;
    let idx = base + if row % 2 == 1 { j } else { i };
    if idx <= n {
        f.coeff(idx)
    } else {
        BigRational::zero()
    }
}

/// Number of interleaved indices `j, M+i, M+j, 2M+i, ...` that stay within
/// `0..=n` — the size parameter of the pair lift.
fn pair_size(n: usize, m: usize, i: usize, j: usize) -> usize {
    let mut count = 0usize;
    let mut t = 1usize;
    loop {
        let val = if t % 2 == 1 {
            ((t - 1) / 2) * m + j
        } else {
            (t / 2) * m + i
        };
        if val > n {
            break;
        }
        count = t;
        t += 1;
    }
    count
}

/// Builds the pair lift for `0 <= i < j <= M-1`. Requires that not both
/// residue parts vanish.
pub fn pair_lift(f: &RationalPolynomial, m: usize, i: usize, j: usize) -> Result<PairLift> {
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
    let m_pair = pair_size(n, m, i, j);
    let mut coeffs = Vec::with_capacity(m_pair + 1);
    for l in 0..=m_pair {
        let idx = (l / 2) * m + if l % 2 == 0 { i } else { j };
        coeffs.push(if idx <= n {
            f.coeff(idx)
        } else {
            BigRational::zero()
        });
    }
    let poly = RationalPolynomial::from_coeffs(coeffs);
    if poly.is_zero() {
        return Err(Error::InvalidPair {
            i,
            j,
            reason: "both residue parts vanish".to_string(),
        });
    }
    let frac = |num: usize| {
        let q = BigRational::new(BigInt::from(num), BigInt::from(m));
        &q - q.floor()
    };
    Ok(PairLift {
        i,
        j,
        m_pair,
        poly,
        alpha: frac(n - i),
        beta: frac(n - j),
        epsilon: m_pair % 2,
    })
}

/// Leading principal minors of the pair submatrix, orders `1..=m_pair`,
/// computed directly from the interleaved entry view (robust even when the
/// lift polynomial has leading zeros).
pub fn pair_leading_minors(
    f: &RationalPolynomial,
    m: usize,
    i: usize,
    j: usize,
) -> Result<Vec<BigRational>> {
    let lift = pair_lift(f, m, i, j)?;
    (1..=lift.m_pair)
        .map(|r| {
            let grid: Vec<Vec<BigRational>> = (1..=r)
                .map(|u| {
                    (1..=r)
                        .map(|v| pair_submatrix_entry(f, m, i, j, u, v))
                        .collect()
                })
                .collect();
            det_bareiss(&grid)
        })
        .collect()
}

/// For even M = 2k, maps a special-minor index `(j, r)` of the step-M matrix
/// to the (rows, cols) index pair of the step-2 matrix with the same minor
/// value: odd j uses rows `1..r` against columns `l*k - (j-1)/2`, even j
/// rows `2..r+1` against columns `l*k - (j-2)/2` (l = 1..r).
pub fn map_special_minor_to_h2(m: usize, j: usize, r: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    if m < 2 || !m.is_multiple_of(2) {
        return Err(Error::StepOutOfRange {
            m,
            min: 2,
            max: usize::MAX,
        });
    }
    if j < 1 || j > m - 1 || r < 1 {
        return Err(Error::InvalidIndexSet {
            reason: format!("special-minor index (j={j}, r={r}) out of range for M={m}"),
        });
    }
    let k = m / 2;
    let (rows, offset): (Vec<usize>, usize) = if j % 2 == 1 {
        ((1..=r).collect(), (j - 1) / 2)
    } else {
        ((2..=r + 1).collect(), (j - 2) / 2)
    };
    let cols: Vec<usize> = (1..=r).map(|l| l * k - offset).collect();
    Ok((rows, cols))
}

/// Index-positivity test for minors of a step-2 matrix of a stable
/// polynomial: the minor over `(rows, cols)` is positive exactly when
/// `0 <= 2*cols[l] - rows[l] <= n` for every l.
pub fn h2_minor_index_positive(n: usize, rows: &[usize], cols: &[usize]) -> bool {
    rows.len() == cols.len()
        && rows.iter().zip(cols).all(|(&i, &j)| {
            let d = 2 * j as isize - i as isize;
            0 <= d && d <= n as isize
        })
}
