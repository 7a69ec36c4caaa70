//! Error type shared by every module of the crate.

use crate::canseq::SeqType;
use crate::roots::{Root, RootClass};
use crate::words::Word;
use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Errors produced by the library.
///
/// Every fallible operation returns this type; variants carry enough data to
/// reconstruct what was rejected and why.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The group parameter `m` is below the smallest supported value for the
    /// requested operation.
    #[error("parameter m = {m} is not supported here; need m >= {min}")]
    UnsupportedM {
        /// The rejected value.
        m: i64,
        /// The smallest accepted value.
        min: i64,
    },

    /// The operation requires `gcd(a, b) = 1`.
    #[error("entries {a} and {b} are not coprime")]
    NotCoprime {
        /// First entry.
        a: BigInt,
        /// Second entry.
        b: BigInt,
    },

    /// The operation requires both entries to be at least 1.
    #[error("root {root} must have both entries >= 1")]
    NotPositive {
        /// The rejected pair.
        root: Root,
    },

    /// The operation requires `a >= b`.
    #[error("root {root} must satisfy a >= b")]
    NotOrdered {
        /// The rejected pair.
        root: Root,
    },

    /// The operation requires a reduced root (coprime entries, both nonzero).
    #[error("root {root} is not reduced (need gcd(a, b) = 1 and ab != 0)")]
    NotReduced {
        /// The rejected pair.
        root: Root,
    },

    /// The operation is defined only for imaginary reduced positive roots.
    #[error("root {root} is not an imaginary reduced positive root (classified as {class})")]
    NotImaginary {
        /// The rejected pair.
        root: Root,
        /// How the pair was classified instead.
        class: RootClass,
    },

    /// The pair `[m, 1]` (ratio a/b = m) is excluded from the
    /// canonical-sequence recursion; it follows the real-root code path.
    #[error("the pair [{m},1] has ratio a/b = m and is excluded from the sequence recursion")]
    RatioEqualsM {
        /// The group parameter.
        m: i64,
    },

    /// A sequence entry lies outside the two admissible letters `{N, N+1}`.
    #[error("sequence entry {entry} is outside {{{n}, {m}}}", m = n + 1)]
    BadSequenceEntry {
        /// The offending entry.
        entry: u64,
        /// The admissible base letter.
        n: u64,
    },

    /// A sequence over `{N, N+1}` that fits none of the four type classes
    /// (it contains both a double low letter and a double high letter).
    #[error("sequence {seq:?} has no type: it contains both doubled letters")]
    Untyped {
        /// The offending sequence.
        seq: Vec<u64>,
    },

    /// The sequence recursion has already terminated; types `=` and `0` have
    /// no successor sequence.
    #[error("a sequence of type {ty} has no successor")]
    ChainTerminated {
        /// The terminal type.
        ty: SeqType,
    },

    /// The fractional part passed to the recursion step must satisfy
    /// `0 < rho < 1`.
    #[error("fractional part {rho} is outside the open interval (0, 1)")]
    RhoOutOfRange {
        /// The rejected value.
        rho: BigRational,
    },

    /// Expansion is defined only for sequences of type `+` or `-`.
    #[error("cannot expand a sequence of type {ty}; only + and - have successors")]
    ExpandType {
        /// The rejected type.
        ty: SeqType,
    },

    /// An index parameter is below its smallest admissible value.
    #[error("{what} must be at least {min}, got {got}")]
    IndexTooSmall {
        /// Which parameter was rejected.
        what: &'static str,
        /// Smallest admissible value.
        min: u64,
        /// The rejected value.
        got: u64,
    },

    /// An index parameter is above its largest admissible value.
    #[error("{what} must be at most {max}, got {got}")]
    IndexTooLarge {
        /// Which parameter was rejected.
        what: &'static str,
        /// Largest admissible value.
        max: u64,
        /// The rejected value.
        got: u64,
    },

    /// A requested sequence index lies outside `1..=L` for a root of level L.
    #[error("index k = {k} is outside 1..={level} for this root")]
    LevelOutOfRange {
        /// The rejected index.
        k: u64,
        /// The root's level.
        level: u32,
    },

    /// An exact integer no longer fits the machine-sized field that holds it.
    #[error("{what} exceeds the supported machine range")]
    TooLarge {
        /// What overflowed.
        what: &'static str,
    },

    /// Two distinct rules share a left-hand side.
    #[error("duplicate rule left-hand side {lhs}")]
    DuplicateLhs {
        /// The duplicated left-hand side.
        lhs: Word,
    },

    /// A rewrite rule must have a nonempty left-hand side that properly
    /// dominates its right-hand side in the deg-lex order.
    #[error("invalid rule {lhs} -> {rhs}: need nonempty lhs with rhs strictly smaller")]
    BadRule {
        /// Proposed left-hand side.
        lhs: Word,
        /// Proposed right-hand side.
        rhs: Word,
    },

    /// Completion did not reach a closed system within the round cap.
    #[error("completion did not close within {rounds} rounds ({rules} rules so far)")]
    CompletionCap {
        /// The round cap that was hit.
        rounds: u32,
        /// Number of rules when the cap was hit.
        rules: usize,
    },

    /// A reflection word must be a palindrome of odd length.
    #[error("word {word} is not an odd-length palindrome")]
    NotPalindrome {
        /// The rejected word.
        word: Word,
    },

    /// A string could not be parsed as the requested object.
    #[error("cannot parse {input:?} as {what}")]
    Parse {
        /// What was being parsed.
        what: &'static str,
        /// The offending input.
        input: String,
    },

    /// A case combination that the structural constraints rule out was
    /// reached. This signals an internal classification bug, not bad input.
    #[error("impossible case for root {root}: {what}")]
    ImpossibleCase {
        /// The root being processed when the contradiction surfaced.
        root: Root,
        /// Which ruled-out combination was hit.
        what: &'static str,
    },
}

/// Shorthand for results produced by this crate.
pub type Result<T> = std::result::Result<T, Error>;
