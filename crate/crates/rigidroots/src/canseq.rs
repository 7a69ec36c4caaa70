//! Canonical sequences attached to a reduced pair `[a, b]` with `a >= b`.
//!
//! The first sequence lists the ceiling differences of the slope `a/b`; each
//! later sequence is the run-length encoding of a distinguished letter of its
//! predecessor. Alongside the sequences runs an exact rational recursion on
//! pairs `(N_k, rho_k)` whose fractional parts drive the sequence types, and
//! a ladder of rational thresholds `gamma_k` that assigns each imaginary
//! reduced root a positive integer level.

use crate::error::{Error, Result};
use crate::roots::{classify, is_reduced, Root, RootClass};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;

/// Type of a sequence over the two letters `{N, N+1}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum SeqType {
    /// Length > 1 and no two adjacent low letters `(N, N)`.
    Plus,
    /// Length > 1 and no two adjacent high letters `(N+1, N+1)`.
    Minus,
    /// Length > 1 and strictly alternating.
    Equal,
    /// Length exactly 1.
    Zero,
}

impl SeqType {
    /// True for the two types that admit a successor sequence.
    pub fn continues(self) -> bool {
        matches!(self, SeqType::Plus | SeqType::Minus)
    }
}

impl fmt::Display for SeqType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbol = match self {
            SeqType::Plus => "+",
            SeqType::Minus => "-",
            SeqType::Equal => "=",
            SeqType::Zero => "0",
        };
        f.write_str(symbol)
    }
}

/// One step of the sequence recursion: the sequence `c_k`, its base letter
/// `N_k`, the exact fractional part `rho_k`, and the type.
///
/// Invariants for records produced by [`all_canonical_data`]: every entry of
/// `seq` is `n` or `n + 1`; `ty` matches `rho` (`rho > 1/2` for `+`,
/// `0 < rho < 1/2` for `-`, `rho = 1/2` for `=`, `rho = 0` for `0`); and
/// `seq.len()` equals the denominator of `rho` from the second step on.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalData {
    /// The sequence `c_k`.
    pub seq: Vec<u64>,
    /// The base letter `N_k`; entries of `seq` are `n` or `n + 1`.
    pub n: u64,
    /// The fractional part `rho_k`, with `0 <= rho < 1`.
    pub rho: BigRational,
    /// The sequence type.
    pub ty: SeqType,
}

/// Level data for an imaginary reduced root: the level `L` and the rational
/// thresholds `gamma_0, ..., gamma_L` that bracket the slope `a/b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LevelInfo {
    /// The unique `L >= 1` with `gamma_{L-1} < a/b <= gamma_L`.
    pub level: u32,
    /// `gamma_0 = 0`, `gamma_1 = m - 1/2`, `gamma_k = m - 1/gamma_{k-1}`.
    pub gammas: Vec<BigRational>,
}

/// Which letter a rebuilt sequence begins with; the high letter is `N + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Boundary {
    /// The sequence begins with `N + 1` (and ends with `N`).
    StartsHigh,
    /// The sequence begins with `N` (and ends with `N + 1`).
    StartsLow,
}

fn big_rational(n: &BigInt, d: &BigInt) -> BigRational {
    BigRational::new(n.clone(), d.clone())
}

/// The ceiling differences `ceil(x*i) - ceil(x*(i-1))` for `i = 1..=count`.
pub fn slope_ceil_diffs(x: &BigRational, count: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(count as usize);
    let mut prev = BigInt::zero();
    for i in 1..=count {
        let cur = (x * BigRational::from(BigInt::from(i))).ceil().to_integer();
        out.push(
            (&cur - &prev)
                .to_u64()
                .expect("ceiling difference fits u64"),
        );
        prev = cur;
    }
    out
}

/// The floor differences `floor(x*i) - floor(x*(i-1))` for `i = 1..=count`.
pub fn slope_floor_diffs(x: &BigRational, count: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(count as usize);
    let mut prev = BigInt::zero();
    for i in 1..=count {
        let cur = (x * BigRational::from(BigInt::from(i))).floor().to_integer();
        out.push((&cur - &prev).to_u64().expect("floor difference fits u64"));
        prev = cur;
    }
    out
}

/// The first sequence of `[a, b]`: the `b` ceiling differences of the slope
/// `a/b`. Entries sum to `a`.
///
/// # Errors
///
/// Rejects pairs with `gcd(a, b) != 1`, entries below 1, or `a < b`.
///
/// ```
/// use rigidroots::canseq::first_sequence;
/// use rigidroots::roots::Root;
///
/// assert_eq!(first_sequence(&Root::new(5, 3)).unwrap(), vec![2, 2, 1]);
/// assert_eq!(first_sequence(&Root::new(8, 5)).unwrap(), vec![2, 2, 1, 2, 1]);
/// ```
pub fn first_sequence(r: &Root) -> Result<Vec<u64>> {
    if !r.is_positive_pair() {
        return Err(Error::NotPositive { root: r.clone() });
    }
    if r.a() < r.b() {
        return Err(Error::NotOrdered { root: r.clone() });
    }
    if !r.a().gcd(r.b()).is_one() {
        return Err(Error::NotCoprime {
            a: r.a().clone(),
            b: r.b().clone(),
        });
    }
    let count = r.b().to_u64().ok_or(Error::TooLarge {
        what: "sequence length b",
    })?;
    Ok(slope_ceil_diffs(&big_rational(r.a(), r.b()), count))
}

/// Classifies a sequence over `{n, n+1}`.
///
/// Single-entry sequences are [`SeqType::Zero`]; strictly alternating ones
/// are [`SeqType::Equal`]; otherwise the absence of a doubled low letter
/// gives [`SeqType::Plus`] and the absence of a doubled high letter gives
/// [`SeqType::Minus`].
///
/// # Errors
///
/// Rejects entries outside `{n, n+1}`, the empty sequence, and sequences
/// containing both doubled letters.
pub fn classify_type(seq: &[u64], n: u64) -> Result<SeqType> {
    for &entry in seq {
        if entry != n && entry != n + 1 {
            return Err(Error::BadSequenceEntry { entry, n });
        }
    }
    if seq.is_empty() {
        return Err(Error::Untyped { seq: Vec::new() });
    }
    if seq.len() == 1 {
        return Ok(SeqType::Zero);
    }
    let alternating = seq.windows(2).all(|w| w[0] != w[1]);
    if alternating {
        return Ok(SeqType::Equal);
    }
    let low_pair = seq.windows(2).any(|w| w[0] == n && w[1] == n);
    let high_pair = seq.windows(2).any(|w| w[0] == n + 1 && w[1] == n + 1);
    match (low_pair, high_pair) {
        (false, _) => Ok(SeqType::Plus),
        (_, false) => Ok(SeqType::Minus),
        (true, true) => Err(Error::Untyped { seq: seq.to_vec() }),
    }
}

/// Maximal run lengths of `letter` within `seq`.
fn run_lengths(seq: &[u64], letter: u64) -> Vec<u64> {
    let mut runs = Vec::new();
    let mut current = 0u64;
    for &entry in seq {
        if entry == letter {
            current += 1;
        } else if current > 0 {
            runs.push(current);
            current = 0;
        }
    }
    if current > 0 {
        runs.push(current);
    }
    runs
}

/// The successor sequence: run lengths of the high letter `N + 1` after a
/// type `+`, of the low letter `N` after a type `-`.
///
/// Runs are listed in the order they occur. The successor of a high-leading
/// sequence is the ceiling-difference (after `+`) or floor-difference
/// (after `-`) sequence of the successor slope; for a low-leading sequence
/// the two roles swap. Reading runs in place therefore flips the boundary
/// orientation exactly after a type `-` step.
///
/// # Errors
///
/// Types `=` and `0` terminate the recursion; entries outside `{N, N+1}`
/// are rejected.
pub fn next_sequence(prev: &CanonicalData) -> Result<Vec<u64>> {
    classify_type(&prev.seq, prev.n)?;
    let letter = match prev.ty {
        SeqType::Plus => prev.n + 1,
        SeqType::Minus => prev.n,
        ty @ (SeqType::Equal | SeqType::Zero) => return Err(Error::ChainTerminated { ty }),
    };
    Ok(run_lengths(&prev.seq, letter))
}

/// The next `(N, rho)` pair of the recursion.
///
/// With `x = rho/(1-rho)` when `rho >= 1/2` and `x = (1-rho)/rho` when
/// `rho < 1/2`, returns `(floor(x), x - floor(x))`. The previous base letter
/// does not enter the arithmetic; it is accepted so call sites can pass the
/// whole previous pair.
///
/// # Errors
///
/// Rejects `rho` outside the open interval `(0, 1)`.
pub fn next_n_rho(_n_prev: u64, rho_prev: &BigRational) -> Result<(u64, BigRational)> {
    let zero = BigRational::zero();
    let one = BigRational::one();
    if *rho_prev <= zero || *rho_prev >= one {
        return Err(Error::RhoOutOfRange {
            rho: rho_prev.clone(),
        });
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let x = if *rho_prev >= half {
        rho_prev / (&one - rho_prev)
    } else {
        (&one - rho_prev) / rho_prev
    };
    let n_big = x.floor().to_integer();
    let n = n_big.to_u64().ok_or(Error::TooLarge {
        what: "base letter N",
    })?;
    let rho = &x - BigRational::from(n_big);
    Ok((n, rho))
}

/// The full chain of canonical data for `[a, b]`, stopping at the first
/// sequence of type `=` or `0`.
///
/// The pair must be reduced with `a >= b >= 1`; the single pair `[m, 1]`
/// (slope exactly `m`) is excluded and follows the real-root code path.
/// Root membership is not required: the chain depends only on the slope.
///
/// # Errors
///
/// Rejects non-reduced or unordered pairs and the excluded slope `a/b = m`.
pub fn all_canonical_data(m: i64, r: &Root) -> Result<Vec<CanonicalData>> {
    if !r.is_positive_pair() {
        return Err(Error::NotPositive { root: r.clone() });
    }
    if !is_reduced(r) {
        return Err(Error::NotReduced { root: r.clone() });
    }
    if r.a() < r.b() {
        return Err(Error::NotOrdered { root: r.clone() });
    }
    if r.a() == &(BigInt::from(m) * r.b()) {
        return Err(Error::RatioEqualsM { m });
    }
    let seq = first_sequence(r)?;
    let (n_big, rem) = r.a().div_mod_floor(r.b());
    let n = n_big.to_u64().ok_or(Error::TooLarge {
        what: "base letter N",
    })?;
    let rho = big_rational(&rem, r.b());
    let ty = classify_type(&seq, n)?;
    let mut chain = vec![CanonicalData { seq, n, rho, ty }];
    while chain.last().expect("nonempty").ty.continues() {
        let prev = chain.last().expect("nonempty");
        let seq = next_sequence(prev)?;
        let (n, rho) = next_n_rho(prev.n, &prev.rho)?;
        let ty = classify_type(&seq, n)?;
        debug_assert_eq!(
            BigInt::from(seq.len()),
            rho.denom().clone(),
            "sequence length must match the denominator of rho"
        );
        debug_assert_eq!(ty, type_from_rho(&rho), "type must match rho");
        chain.push(CanonicalData { seq, n, rho, ty });
    }
    Ok(chain)
}

/// The type dictated by a fractional part: `+` above `1/2`, `-` below,
/// `=` at exactly `1/2`, `0` at zero.
pub fn type_from_rho(rho: &BigRational) -> SeqType {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    if rho.is_zero() {
        SeqType::Zero
    } else if *rho == half {
        SeqType::Equal
    } else if *rho > half {
        SeqType::Plus
    } else {
        SeqType::Minus
    }
}

/// The level of an imaginary reduced root `[a, b]` with `a >= b`: the unique
/// `L >= 1` with `gamma_{L-1} < a/b <= gamma_L`, together with the
/// thresholds `gamma_0..=gamma_L`.
///
/// # Errors
///
/// Rejects pairs that are not imaginary reduced positive roots, and pairs
/// with `a < b`.
///
/// ```
/// use rigidroots::canseq::level;
/// use rigidroots::roots::Root;
///
/// assert_eq!(level(3, &Root::new(339, 130)).unwrap().level, 3);
/// assert_eq!(level(6, &Root::new(73, 13)).unwrap().level, 2);
/// ```
pub fn level(m: i64, r: &Root) -> Result<LevelInfo> {
    let class = classify(m, r);
    if class != RootClass::ImaginaryPositive {
        return Err(Error::NotImaginary {
            root: r.clone(),
            class,
        });
    }
    if r.a() < r.b() {
        return Err(Error::NotOrdered { root: r.clone() });
    }
    let ratio = big_rational(r.a(), r.b());
    let m_rat = BigRational::from(BigInt::from(m));
    let mut gammas = vec![BigRational::zero()];
    let mut gamma = BigRational::new(BigInt::from(2 * m - 1), BigInt::from(2));
    gammas.push(gamma.clone());
    while ratio > gamma {
        gamma = &m_rat - gamma.recip();
        gammas.push(gamma.clone());
    }
    Ok(LevelInfo {
        level: (gammas.len() - 1) as u32,
        gammas,
    })
}

/// Rebuilds a sequence from its base letter, its type, and its successor,
/// beginning with the high letter `N + 1`.
///
/// Equivalent to [`expand_oriented`] with [`Boundary::StartsHigh`], which is
/// the orientation of every first sequence.
///
/// # Errors
///
/// Rejects types other than `+` and `-` and empty or zero run lengths.
///
/// ```
/// use rigidroots::canseq::{expand, SeqType};
///
/// assert_eq!(
///     expand(1, SeqType::Plus, &[2, 1]).unwrap(),
///     vec![2, 2, 1, 2, 1],
/// );
/// assert_eq!(
///     expand(1, SeqType::Minus, &[2, 2, 3]).unwrap(),
///     vec![2, 1, 1, 2, 1, 1, 2, 1, 1, 1],
/// );
/// ```
pub fn expand(n: u64, ty: SeqType, next: &[u64]) -> Result<Vec<u64>> {
    expand_oriented(n, ty, next, Boundary::StartsHigh)
}

/// Rebuilds a sequence from its base letter, its type, its successor, and
/// its boundary orientation.
///
/// A type `+` sequence is blocks of the high letter separated by single low
/// letters; a type `-` sequence is blocks of the low letter separated by
/// single high letters. The successor lists the block lengths in reading
/// order, as produced by [`next_sequence`]. The boundary orientation says
/// which letter the rebuilt sequence begins with, which fixes whether the
/// separators precede or follow their blocks: a high-leading type `+`
/// sequence and a low-leading type `-` sequence open with a block, the
/// other two combinations open with a separator.
///
/// # Errors
///
/// Rejects types other than `+` and `-` and empty or zero run lengths.
pub fn expand_oriented(n: u64, ty: SeqType, next: &[u64], boundary: Boundary) -> Result<Vec<u64>> {
    if !ty.continues() {
        return Err(Error::ExpandType { ty });
    }
    if next.is_empty() {
        return Err(Error::Untyped { seq: Vec::new() });
    }
    let (block_letter, separator) = match ty {
        SeqType::Plus => (n + 1, n),
        SeqType::Minus => (n, n + 1),
        _ => unreachable!("terminal types rejected above"),
    };
    let block_first = (boundary == Boundary::StartsHigh) == (ty == SeqType::Plus);
    let mut out = Vec::new();
    for &run in next {
        if run == 0 {
            return Err(Error::IndexTooSmall {
                what: "run length",
                min: 1,
                got: 0,
            });
        }
        if !block_first {
            out.push(separator);
        }
        out.extend(std::iter::repeat_n(block_letter, run as usize));
        if block_first {
            out.push(separator);
        }
    }
    Ok(out)
}

/// The pair `[a, b]` whose first sequence is `c1`: `a` is the entry sum and
/// `b` the length.
///
/// # Panics
///
/// Panics on an empty sequence.
///
/// ```
/// use rigidroots::canseq::reconstruct_root;
/// use rigidroots::roots::Root;
///
/// assert_eq!(reconstruct_root(&[2, 2, 1]), Root::new(5, 3));
/// assert_eq!(reconstruct_root(&[7]), Root::new(7, 1));
/// ```
pub fn reconstruct_root(c1: &[u64]) -> Root {
    assert!(!c1.is_empty(), "a first sequence has at least one entry");
    let a = c1.iter().map(|&e| BigInt::from(e)).sum::<BigInt>();
    Root::new(a, c1.len() as u64)
}

/// Folds a chain of canonical data back into its first sequence by repeated
/// oriented expansion; inverse to the recursion that produced the chain.
///
/// # Errors
///
/// Propagates expansion errors on malformed chains.
pub fn chain_to_first_sequence(chain: &[CanonicalData]) -> Result<Vec<u64>> {
    let last = chain.last().ok_or(Error::Untyped { seq: Vec::new() })?;
    let mut seq = last.seq.clone();
    for i in (0..chain.len() - 1).rev() {
        let boundary = if chain[i].seq.first() == Some(&(chain[i].n + 1)) {
            Boundary::StartsHigh
        } else {
            Boundary::StartsLow
        };
        seq = expand_oriented(chain[i].n, chain[i].ty, &seq, boundary)?;
    }
    Ok(seq)
}

/// Signed distance data for the threshold ladder: true when `g(m - g) > 1`,
/// the rational form of `g < gamma` for `g` in `(1, m)` where `gamma` is the
/// larger root of `t^2 - m*t + 1`.
pub fn below_limit(m: i64, g: &BigRational) -> bool {
    let m_rat = BigRational::from(BigInt::from(m));
    g * (&m_rat - g) > BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(a: i64, b: i64) -> Root {
        Root::new(a, b)
    }

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn chain_summary(chain: &[CanonicalData]) -> Vec<(Vec<u64>, u64, BigRational, SeqType)> {
        chain
            .iter()
            .map(|c| (c.seq.clone(), c.n, c.rho.clone(), c.ty))
            .collect()
    }

    #[test]
    fn first_sequence_examples() {
        assert_eq!(first_sequence(&root(5, 3)).unwrap(), vec![2, 2, 1]);
        assert_eq!(first_sequence(&root(8, 5)).unwrap(), vec![2, 2, 1, 2, 1]);
        assert_eq!(
            first_sequence(&root(59, 23)).unwrap(),
            vec![3, 3, 2, 3, 2, 3, 2, 3, 3, 2, 3, 2, 3, 2, 3, 3, 2, 3, 2, 3, 2, 3, 2]
        );
        assert_eq!(first_sequence(&root(7, 1)).unwrap(), vec![7]);
        assert!(matches!(
            first_sequence(&root(6, 4)),
            Err(Error::NotCoprime { .. })
        ));
        assert!(matches!(
            first_sequence(&root(3, 5)),
            Err(Error::NotOrdered { .. })
        ));
    }

    #[test]
    fn first_sequence_sums_and_lengths() {
        for a in 1..=60i64 {
            for b in 1..=a {
                let r = root(a, b);
                if !is_reduced(&r) {
                    continue;
                }
                let seq = first_sequence(&r).unwrap();
                assert_eq!(seq.len() as i64, b);
                assert_eq!(seq.iter().sum::<u64>() as i64, a);
                assert_eq!(reconstruct_root(&seq), r);
            }
        }
    }

    #[test]
    fn classify_type_examples() {
        assert_eq!(classify_type(&[2, 2, 1], 1).unwrap(), SeqType::Plus);
        assert_eq!(classify_type(&[2, 1], 1).unwrap(), SeqType::Equal);
        assert_eq!(classify_type(&[2], 2).unwrap(), SeqType::Zero);
        assert_eq!(classify_type(&[1, 1, 2], 1).unwrap(), SeqType::Minus);
        assert_eq!(classify_type(&[1, 1, 1], 1).unwrap(), SeqType::Minus);
        assert_eq!(classify_type(&[2, 2, 2], 1).unwrap(), SeqType::Plus);
        assert!(matches!(
            classify_type(&[3, 1], 1),
            Err(Error::BadSequenceEntry { entry: 3, n: 1 })
        ));
        assert!(matches!(
            classify_type(&[1, 1, 2, 2], 1),
            Err(Error::Untyped { .. })
        ));
        assert!(matches!(classify_type(&[], 1), Err(Error::Untyped { .. })));
    }

    #[test]
    fn next_n_rho_examples() {
        let (n, rho) = next_n_rho(1, &ratio(2, 3)).unwrap();
        assert_eq!((n, rho), (2, BigRational::zero()));
        let (n, rho) = next_n_rho(1, &ratio(3, 5)).unwrap();
        assert_eq!((n, rho), (1, ratio(1, 2)));
        let (n, rho) = next_n_rho(2, &ratio(3, 10)).unwrap();
        assert_eq!((n, rho), (2, ratio(1, 3)));
        assert!(matches!(
            next_n_rho(1, &BigRational::zero()),
            Err(Error::RhoOutOfRange { .. })
        ));
    }

    #[test]
    fn chain_for_59_23() {
        let chain = all_canonical_data(3, &root(59, 23)).unwrap();
        let summary = chain_summary(&chain);
        assert_eq!(summary.len(), 4);
        assert_eq!(summary[0].1, 2);
        assert_eq!(summary[0].2, ratio(13, 23));
        assert_eq!(summary[0].3, SeqType::Plus);
        assert_eq!(summary[1].0, vec![2, 1, 1, 2, 1, 1, 2, 1, 1, 1]);
        assert_eq!(summary[1].1, 1);
        assert_eq!(summary[1].2, ratio(3, 10));
        assert_eq!(summary[1].3, SeqType::Minus);
        assert_eq!(summary[2].0, vec![2, 2, 3]);
        assert_eq!(summary[2].1, 2);
        assert_eq!(summary[2].2, ratio(1, 3));
        assert_eq!(summary[2].3, SeqType::Minus);
        assert_eq!(summary[3].0, vec![2]);
        assert_eq!(summary[3].1, 2);
        assert_eq!(summary[3].2, BigRational::zero());
        assert_eq!(summary[3].3, SeqType::Zero);
    }

    #[test]
    fn chain_for_62_13() {
        let chain = all_canonical_data(5, &root(62, 13)).unwrap();
        assert_eq!(chain.len(), 3);
        assert_eq!(
            chain[0].seq,
            vec![5, 5, 5, 5, 4, 5, 5, 5, 4, 5, 5, 5, 4]
        );
        assert_eq!(chain[0].ty, SeqType::Plus);
        assert_eq!(chain[0].rho, ratio(10, 13));
        assert_eq!(chain[1].seq, vec![4, 3, 3]);
        assert_eq!(chain[1].n, 3);
        assert_eq!(chain[1].rho, ratio(1, 3));
        assert_eq!(chain[1].ty, SeqType::Minus);
        assert_eq!(chain[2].seq, vec![2]);
        assert_eq!(chain[2].ty, SeqType::Zero);
    }

    #[test]
    fn chain_for_8_5() {
        let chain = all_canonical_data(3, &root(8, 5)).unwrap();
        assert_eq!(chain.len(), 2);
        assert_eq!(chain[0].ty, SeqType::Plus);
        assert_eq!(chain[1].seq, vec![2, 1]);
        assert_eq!(chain[1].n, 1);
        assert_eq!(chain[1].rho, ratio(1, 2));
        assert_eq!(chain[1].ty, SeqType::Equal);
    }

    #[test]
    fn chain_for_73_13() {
        let chain = all_canonical_data(6, &root(73, 13)).unwrap();
        assert_eq!(chain.len(), 3);
        assert_eq!(chain[0].n, 5);
        assert_eq!(chain[0].rho, ratio(8, 13));
        assert_eq!(chain[0].ty, SeqType::Plus);
        assert_eq!(chain[1].seq, vec![2, 2, 1, 2, 1]);
        assert_eq!(chain[1].n, 1);
        assert_eq!(chain[1].rho, ratio(3, 5));
        assert_eq!(chain[1].ty, SeqType::Plus);
        assert_eq!(chain[2].seq, vec![2, 1]);
        assert_eq!(chain[2].ty, SeqType::Equal);
    }

    #[test]
    fn chain_rejects_excluded_slope() {
        assert_eq!(
            all_canonical_data(3, &root(3, 1)),
            Err(Error::RatioEqualsM { m: 3 })
        );
        assert!(all_canonical_data(3, &root(8, 3)).is_ok());
    }

    #[test]
    fn level_examples() {
        let info = level(3, &root(339, 130)).unwrap();
        assert_eq!(info.level, 3);
        assert_eq!(
            info.gammas,
            vec![ratio(0, 1), ratio(5, 2), ratio(13, 5), ratio(34, 13)]
        );
        assert_eq!(level(6, &root(73, 13)).unwrap().level, 2);
        assert_eq!(level(5, &root(62, 13)).unwrap().level, 2);
        assert_eq!(level(3, &root(59, 23)).unwrap().level, 2);
        assert_eq!(level(3, &root(13, 5)).unwrap().level, 2);
        assert_eq!(level(4, &root(85, 23)).unwrap().level, 2);
        assert_eq!(level(3, &root(17, 7)).unwrap().level, 1);
        assert_eq!(level(3, &root(5, 2)).unwrap().level, 1);
        assert!(matches!(
            level(3, &root(8, 3)),
            Err(Error::NotImaginary { .. })
        ));
    }

    #[test]
    fn gammas_increase_and_stay_below_limit() {
        for m in 3..=8 {
            let r = match m {
                3 => root(339, 130),
                _ => root(2 * m, 3),
            };
            if classify(m, &r) != RootClass::ImaginaryPositive {
                continue;
            }
            let info = level(m, &r).unwrap();
            for pair in info.gammas[1..].windows(2) {
                assert!(pair[0] < pair[1]);
            }
            for g in &info.gammas[1..] {
                assert!(below_limit(m, g), "m={m} gamma={g}");
            }
        }
    }

    #[test]
    fn expand_round_trips_on_chains() {
        for m in [3i64, 4, 5, 6] {
            for r in crate::roots::enumerate_reduced(m, 80) {
                if r.a() == &(BigInt::from(m) * r.b()) {
                    continue;
                }
                let chain = all_canonical_data(m, &r).unwrap();
                assert_eq!(
                    chain_to_first_sequence(&chain).unwrap(),
                    chain[0].seq,
                    "m={m} r={r}"
                );
                for i in 0..chain.len() - 1 {
                    assert_eq!(next_sequence(&chain[i]).unwrap(), chain[i + 1].seq);
                }
            }
        }
    }

    #[test]
    fn expand_requires_continuing_type() {
        assert!(matches!(
            expand(1, SeqType::Equal, &[2]),
            Err(Error::ExpandType { ty: SeqType::Equal })
        ));
    }

    #[test]
    fn oriented_expansion_matches_boundaries() {
        assert_eq!(
            expand_oriented(1, SeqType::Plus, &[2, 1], Boundary::StartsLow).unwrap(),
            vec![1, 2, 2, 1, 2],
        );
        assert_eq!(
            expand_oriented(2, SeqType::Minus, &[2, 2, 3], Boundary::StartsLow).unwrap(),
            vec![2, 2, 3, 2, 2, 3, 2, 2, 2, 3],
        );
        let high = expand_oriented(1, SeqType::Minus, &[1, 1, 2], Boundary::StartsHigh).unwrap();
        assert_eq!(high, vec![2, 1, 2, 1, 2, 1, 1]);
        let low = expand_oriented(1, SeqType::Minus, &[1, 1, 2], Boundary::StartsLow).unwrap();
        assert_eq!(low, vec![1, 2, 1, 2, 1, 1, 2]);
    }

    #[test]
    fn derived_sequences_keep_run_reading_order() {
        let chain = all_canonical_data(3, &Root::new(24, 17)).unwrap();
        let seqs: Vec<&[u64]> = chain.iter().map(|d| d.seq.as_slice()).collect();
        assert_eq!(
            seqs,
            vec![
                &[2, 1, 2, 1, 2, 1, 1, 2, 1, 2, 1, 1, 2, 1, 2, 1, 1][..],
                &[1, 1, 2, 1, 2, 1, 2],
                &[2, 1, 1],
                &[2],
            ],
        );
        assert_eq!(chain_to_first_sequence(&chain).unwrap(), chain[0].seq);

        let chain = all_canonical_data(3, &Root::new(29, 12)).unwrap();
        let seqs: Vec<&[u64]> = chain.iter().map(|d| d.seq.as_slice()).collect();
        assert_eq!(
            seqs,
            vec![
                &[3, 2, 3, 2, 3, 2, 2, 3, 2, 3, 2, 2][..],
                &[1, 1, 2, 1, 2],
                &[2, 1],
            ],
        );
        assert_eq!(chain.last().unwrap().ty, SeqType::Equal);
        assert_eq!(chain_to_first_sequence(&chain).unwrap(), chain[0].seq);
    }
}
