//! The reflection representation of the rank-3 group on the span of the
//! simple roots: exact matrices over integer polynomials in the variable
//! `x`, the Chebyshev-like ladder `f_n`, `g_n` controlling products of the
//! bonded reflections, and numeric root vectors at `x = 2 cos(pi/m)`.
//!
//! Two arithmetic layers coexist deliberately. Polynomial identities are
//! established exactly over arbitrary-precision integers, so they never
//! depend on an epsilon. Inequalities that involve the irrational `x` are
//! evaluated in floating point with a documented relative tolerance of
//! `1e-9`; values of the ladder polynomials near their largest roots are
//! obtained through the half-angle sine form, which is numerically stable
//! where the raw coefficient form cancels.

use crate::error::{Error, Result};
use crate::roots::{enumerate_reduced, Root};
use crate::words::{s_of_root, Word};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Relative tolerance for every floating-point comparison in this module.
pub const TOLERANCE: f64 = 1e-9;

/// A polynomial in one variable `x` with arbitrary-precision integer
/// coefficients, stored in ascending degree with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    /// The constant polynomial `c`.
    pub fn constant(c: i64) -> Self {
        Self::from_big_coeffs(vec![BigInt::from(c)])
    }

    /// Builds a polynomial from machine-sized coefficients in ascending
    /// degree; trailing zeros are trimmed.
    ///
    /// ```
    /// use rigidroots::reflect::IntPolynomial;
    ///
    /// let p = IntPolynomial::from_coeffs(&[-1, 0, 1]);
    /// assert_eq!(p.to_string(), "x^2 - 1");
    /// assert_eq!(p.degree(), Some(2));
    /// ```
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_big_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn from_big_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// The coefficients in ascending degree, without trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The coefficient of `x^k`, zero beyond the stored degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The product with a scalar.
    pub fn scaled(&self, c: i64) -> Self {
        let factor = BigInt::from(c);
        Self::from_big_coeffs(self.coeffs.iter().map(|a| a * &factor).collect())
    }

    /// Exact evaluation at a rational point, by Horner's scheme.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Floating-point evaluation at `x`, by Horner's scheme.
    ///
    /// Subject to the usual cancellation when the coefficients alternate in
    /// sign and the value is near a root; callers needing certified signs
    /// use [`eval_rational`](Self::eval_rational) instead.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().expect("coefficient fits f64");
        }
        acc
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        IntPolynomial::from_big_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        IntPolynomial::from_big_coeffs(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_big_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::from_big_coeffs(self.coeffs.iter().map(Neg::neg).collect())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                first = false;
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let unit = magnitude.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{magnitude}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{magnitude}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// A 3 x 3 matrix of [`IntPolynomial`] entries, acting on column coordinate
/// vectors in the basis of the three simple roots.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    entries: [[IntPolynomial; 3]; 3],
}

impl PolyMatrix {
    /// The identity matrix.
    pub fn identity() -> Self {
        let mut entries: [[IntPolynomial; 3]; 3] = Default::default();
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = IntPolynomial::one();
        }
        PolyMatrix { entries }
    }

    /// Builds a matrix from rows of machine-sized coefficient lists is not
    /// needed; matrices arise from the three generators and products.
    fn from_entries(entries: [[IntPolynomial; 3]; 3]) -> Self {
        PolyMatrix { entries }
    }

    /// The matrix of the reflection in simple root `letter` (1, 2, or 3),
    /// with `x` standing for twice the cosine of the bond angle.
    ///
    /// # Panics
    ///
    /// Panics when `letter` is outside `1..=3`.
    pub fn generator(letter: u8) -> Self {
        let p = IntPolynomial::from_coeffs;
        let rows = match letter {
            1 => [
                [p(&[-1]), IntPolynomial::x(), p(&[2])],
                [p(&[0]), p(&[1]), p(&[0])],
                [p(&[0]), p(&[0]), p(&[1])],
            ],
            2 => [
                [p(&[1]), p(&[0]), p(&[0])],
                [IntPolynomial::x(), p(&[-1]), IntPolynomial::x()],
                [p(&[0]), p(&[0]), p(&[1])],
            ],
            3 => [
                [p(&[1]), p(&[0]), p(&[0])],
                [p(&[0]), p(&[1]), p(&[0])],
                [p(&[2]), IntPolynomial::x(), p(&[-1])],
            ],
            other => panic!("generator letter must be 1, 2, or 3, got {other}"),
        };
        Self::from_entries(rows)
    }

    /// The entry in row `i`, column `j`, both zero-indexed.
    pub fn entry(&self, i: usize, j: usize) -> &IntPolynomial {
        &self.entries[i][j]
    }

    /// Floating-point evaluation of every entry at `x`.
    pub fn eval_f64(&self, x: f64) -> [[f64; 3]; 3] {
        let mut out = [[0.0; 3]; 3];
        for (i, row) in self.entries.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                out[i][j] = entry.eval_f64(x);
            }
        }
        out
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;

    fn mul(self, other: &PolyMatrix) -> PolyMatrix {
        let mut entries: [[IntPolynomial; 3]; 3] = Default::default();
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let mut acc = IntPolynomial::zero();
                for (k, factor) in other.entries.iter().enumerate() {
                    acc = &acc + &(&self.entries[i][k] * &factor[j]);
                }
                *slot = acc;
            }
        }
        PolyMatrix::from_entries(entries)
    }
}

/// The shared ladder underneath [`cheb_f`] and [`cheb_g`]: `u_0 = 1`,
/// `u_1 = x`, `u_{k+1} = x u_k - u_{k-1}`, extended by `u_{-1} = 0`.
fn ladder(index: i64) -> IntPolynomial {
    if index < 0 {
        return IntPolynomial::zero();
    }
    let x = IntPolynomial::x();
    let mut prev = IntPolynomial::zero();
    let mut cur = IntPolynomial::one();
    for _ in 0..index {
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The alternating binomial closed form of the even ladder entries.
fn f_closed(n: u32) -> IntPolynomial {
    let n = n as usize;
    let mut coeffs = vec![BigInt::zero(); 2 * n + 1];
    for k in 0..=n {
        let c = num_integer::binomial(BigInt::from(n + k), BigInt::from(n - k));
        coeffs[2 * k] = if (n - k).is_multiple_of(2) { c } else { -c };
    }
    IntPolynomial::from_big_coeffs(coeffs)
}

/// The odd ladder entries as `x` times a Chebyshev polynomial of the second
/// kind evaluated at `x^2/2 - 1`, computed with integer coefficients via
/// the doubled-argument recurrence.
fn g_closed(n: u32) -> IntPolynomial {
    if n == 0 {
        return IntPolynomial::zero();
    }
    let shift = IntPolynomial::from_coeffs(&[-2, 0, 1]);
    let mut prev = IntPolynomial::one();
    let mut cur = shift.clone();
    for _ in 1..n - 1 {
        let next = &(&shift * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    let v = if n == 1 { prev } else { cur };
    &IntPolynomial::x() * &v
}

/// The even-index ladder polynomial `f_n`: `f_0 = 1`, `f_1 = x^2 - 1`, and
/// `f_n = x g_n - f_{n-1}`.
///
/// The three-term ladder and the alternating binomial closed form are both
/// computed and compared when debug assertions are on.
///
/// ```
/// use rigidroots::reflect::cheb_f;
///
/// assert_eq!(cheb_f(0).to_string(), "1");
/// assert_eq!(cheb_f(1).to_string(), "x^2 - 1");
/// assert_eq!(cheb_f(2).to_string(), "x^4 - 3x^2 + 1");
/// ```
pub fn cheb_f(n: u32) -> IntPolynomial {
    let out = ladder(2 * i64::from(n));
    debug_assert_eq!(out, f_closed(n), "ladder and closed form agree for f_{n}");
    out
}

/// The odd-index ladder polynomial `g_n`: `g_0 = 0`, `g_1 = x`, and
/// `g_{n+1} = x f_n - g_n`.
///
/// The three-term ladder and the Chebyshev closed form are both computed
/// and compared when debug assertions are on.
///
/// ```
/// use rigidroots::reflect::cheb_g;
///
/// assert_eq!(cheb_g(0).to_string(), "0");
/// assert_eq!(cheb_g(1).to_string(), "x");
/// assert_eq!(cheb_g(2).to_string(), "x^3 - 2x");
/// ```
pub fn cheb_g(n: u32) -> IntPolynomial {
    let out = ladder(2 * i64::from(n) - 1);
    debug_assert_eq!(out, g_closed(n), "ladder and closed form agree for g_{n}");
    out
}

/// The symbolic product of `n` copies of the bonded double reflection
/// followed by the mixed pair: `(s2 s3)^n s2 s1`. Row 1 is `(-1, x, 2)` for
/// every `n`.
///
/// ```
/// use rigidroots::reflect::{tau_matrix, IntPolynomial};
///
/// let tau = tau_matrix(0);
/// assert_eq!(tau.entry(0, 0), &IntPolynomial::constant(-1));
/// assert_eq!(tau.entry(1, 2).to_string(), "3x");
/// ```
pub fn tau_matrix(n: u32) -> PolyMatrix {
    let s1 = PolyMatrix::generator(1);
    let s2 = PolyMatrix::generator(2);
    let s3 = PolyMatrix::generator(3);
    let pair = &s2 * &s3;
    let mut acc = PolyMatrix::identity();
    for _ in 0..n {
        acc = &acc * &pair;
    }
    &(&acc * &s2) * &s1
}

/// The coordinates of a root of the rank-3 group in the basis of the three
/// simple roots, evaluated at `x = 2 cos(pi/m)` and normalized to the
/// positive member of its opposite pair.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct RootVector {
    /// Coefficient of the first simple root.
    pub p: f64,
    /// Coefficient of the second simple root.
    pub q: f64,
    /// Coefficient of the third simple root.
    pub r: f64,
}

impl RootVector {
    /// The relative comparison scale: `1` or the largest coordinate
    /// magnitude, whichever is bigger.
    fn scale(&self) -> f64 {
        1.0_f64.max(self.p.abs()).max(self.q.abs()).max(self.r.abs())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.p, self.q, self.r)
    }
}

fn numeric_generators(m: i64) -> Result<[[[f64; 3]; 3]; 3]> {
    if m < 2 {
        return Err(Error::UnsupportedM { m, min: 2 });
    }
    let x = 2.0 * (std::f64::consts::PI / m as f64).cos();
    Ok([
        PolyMatrix::generator(1).eval_f64(x),
        PolyMatrix::generator(2).eval_f64(x),
        PolyMatrix::generator(3).eval_f64(x),
    ])
}

fn apply(matrix: &[[f64; 3]; 3], v: [f64; 3]) -> [f64; 3] {
    let mut out = [0.0; 3];
    for (i, row) in matrix.iter().enumerate() {
        out[i] = row[0] * v[0] + row[1] * v[1] + row[2] * v[2];
    }
    out
}

/// The root attached to a reflection word: an odd-length palindrome
/// `u c u-reversed` names the reflection carrying the basis vector of its
/// middle letter `c` through the matrices of `u`.
///
/// The first half of the word is applied numerically at `x = 2 cos(pi/m)`,
/// rightmost letter innermost, and the result is negated when its largest
/// coordinate is negative, so the returned vector is the positive root of
/// the pair.
///
/// # Errors
///
/// Rejects `m < 2` and words that are not palindromes of odd length.
///
/// ```
/// use rigidroots::reflect::root_vector;
///
/// let alpha2 = root_vector(5, &"2".parse().unwrap()).unwrap();
/// assert_eq!((alpha2.p, alpha2.q, alpha2.r), (0.0, 1.0, 0.0));
/// ```
pub fn root_vector(m: i64, w: &Word) -> Result<RootVector> {
    let generators = numeric_generators(m)?;
    if w.len().is_multiple_of(2) || !w.is_palindrome() {
        return Err(Error::NotPalindrome { word: w.clone() });
    }
    let letters = w.letters();
    let half = letters.len() / 2;
    let mut v = [0.0; 3];
    v[(letters[half] - 1) as usize] = 1.0;
    for &letter in letters[..half].iter().rev() {
        v = apply(&generators[(letter - 1) as usize], v);
    }
    let largest = v
        .iter()
        .copied()
        .max_by(|a, b| a.abs().total_cmp(&b.abs()))
        .expect("three coordinates");
    if largest < 0.0 {
        for coord in &mut v {
            *coord = -*coord;
        }
    }
    Ok(RootVector {
        p: v[0],
        q: v[1],
        r: v[2],
    })
}

/// One failed comparison in [`check_dichotomy`]: the pair, its reflection
/// word's root vector, and which side of the split it was tested on.
#[derive(Clone, Debug)]
pub struct DichotomyViolation {
    /// The lattice pair whose reflection word was tested.
    pub root: Root,
    /// The computed root vector.
    pub vector: RootVector,
}

/// Outcome of a dichotomy scan over all reduced positive pairs up to an
/// entry-sum bound.
#[derive(Clone, Debug)]
pub struct DichotomyOutcome {
    /// The bond order scanned.
    pub m: i64,
    /// The inclusive bound on `a + b`.
    pub bound: u64,
    /// How many root vectors were compared.
    pub checked: u64,
    /// Every comparison that failed; empty on a clean scan.
    pub violations: Vec<DichotomyViolation>,
}

impl DichotomyOutcome {
    /// True when no comparison failed.
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Scans all reduced positive pairs `[a, b]` with `a + b <= bound` in both
/// orientations and checks the coordinate split of their reflection words:
/// for `a > b` the first coordinate satisfies `0 <= p < r`, for `a < b` it
/// satisfies `p > r`, and the single `a = b` pair `[1, 1]` names the second
/// simple root exactly.
///
/// Comparisons use the relative tolerance [`TOLERANCE`]; a reported
/// violation is a numeric near-tie to re-examine, not a certified
/// counterexample.
///
/// # Errors
///
/// Rejects `m < 2` and `bound < 2`.
pub fn check_dichotomy(m: i64, bound: u64) -> Result<DichotomyOutcome> {
    numeric_generators(m)?;
    if bound < 2 {
        return Err(Error::IndexTooSmall {
            what: "dichotomy bound",
            min: 2,
            got: bound,
        });
    }
    let mut checked = 0;
    let mut violations = Vec::new();
    for root in enumerate_reduced(m, bound) {
        let vector = root_vector(m, &s_of_root(&root)?)?;
        checked += 1;
        let tol = TOLERANCE * vector.scale();
        if root.a() == root.b() {
            if vector.p.abs() > tol || (vector.q - 1.0).abs() > tol || vector.r.abs() > tol {
                violations.push(DichotomyViolation { root, vector });
            }
            continue;
        }
        if vector.p < -tol || vector.p >= vector.r - tol {
            violations.push(DichotomyViolation {
                root: root.clone(),
                vector,
            });
        }
        let mirrored = root.swapped();
        let vector = root_vector(m, &s_of_root(&mirrored)?)?;
        checked += 1;
        let tol = TOLERANCE * vector.scale();
        if vector.r < -tol || vector.p <= vector.r + tol {
            violations.push(DichotomyViolation {
                root: mirrored,
                vector,
            });
        }
    }
    Ok(DichotomyOutcome {
        m,
        bound,
        checked,
        violations,
    })
}
