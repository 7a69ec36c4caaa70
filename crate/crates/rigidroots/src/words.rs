//! Words over the three-letter alphabet `{1, 2, 3}` and the path words
//! attached to lattice pairs.
//!
//! Letter `i` stands for the generator `s_i` of the rank-3 group. A pair
//! `[a, b]` with `a >= b >= 1` and coprime entries yields a staircase word
//! over `{h, v}` read off the lattice path under the segment from `(0, 0)`
//! to `(a, b)`; substituting `23` for each horizontal step and `21` for each
//! vertical step gives the word `s^{a x b}`. Conjugating by `32 ... 1` and
//! cancelling doubled letters gives the reflection word `s([a, b])`, an
//! odd-length palindrome that can be checked independently by listing the
//! grid lines the segment crosses.

use crate::canseq::{all_canonical_data, first_sequence, level};
use crate::error::{Error, Result};
use crate::roots::{classify, is_reduced, Root, RootClass};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// A word over the alphabet `{1, 2, 3}`; the empty word is the identity.
///
/// Comparison is deg-lex with `1 > 2 > 3` on letters: shorter words come
/// first, and at equal length the word whose first differing letter has the
/// larger numeral is the smaller word.
///
/// ```
/// use rigidroots::words::Word;
///
/// let u: Word = "21".parse().unwrap();
/// let v: Word = "12".parse().unwrap();
/// assert!(u < v);
/// assert_eq!(u.to_string(), "21");
/// assert_eq!(Word::empty().to_string(), "e");
/// ```
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    /// The empty word.
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word from letters, each of which must be 1, 2, or 3.
    ///
    /// # Errors
    ///
    /// Rejects letters outside the alphabet.
    pub fn new(letters: &[u8]) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| !(1..=3).contains(&l)) {
            return Err(Error::Parse {
                what: "word letter",
                input: bad.to_string(),
            });
        }
        Ok(Word(letters.to_vec()))
    }

    /// Builds a word from letters already known to lie in `{1, 2, 3}`.
    pub(crate) fn from_raw(letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|&l| (1..=3).contains(&l)));
        Word(letters)
    }

    /// The letters of the word.
    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty word.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation `self . other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The `n`-fold concatenation of the word with itself.
    pub fn repeated(&self, n: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&self.0);
        }
        Word(letters)
    }

    /// The reversed word.
    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// The word with letters 1 and 3 interchanged.
    pub fn swapped13(&self) -> Word {
        Word(
            self.0
                .iter()
                .map(|&l| match l {
                    1 => 3,
                    3 => 1,
                    other => other,
                })
                .collect(),
        )
    }

    /// True when the word reads the same in both directions.
    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Count of a given letter.
    pub fn count(&self, letter: u8) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }
}

/// Deg-lex order: by length, then at the first difference the larger numeral
/// is the smaller word (letter 1 is the greatest).
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0) {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for &l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses a digit string such as `"2321"`; `"e"` and `""` give the
    /// empty word.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "e" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::with_capacity(trimmed.len());
        for c in trimmed.chars() {
            match c {
                '1' => letters.push(1),
                '2' => letters.push(2),
                '3' => letters.push(3),
                _ => {
                    return Err(Error::Parse {
                        what: "word",
                        input: s.to_owned(),
                    })
                }
            }
        }
        Ok(Word(letters))
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a compact word expression for tests and internal tables: digits
/// with parenthesized repetitions, e.g. `"(23)^2 21"`. Exponents apply to
/// the preceding group.
pub(crate) fn wexpr(expr: &str) -> Word {
    let mut out: Vec<u8> = Vec::new();
    let mut chars = expr.chars().peekable();
    let mut group_start = 0usize;
    let mut in_group = false;
    while let Some(c) = chars.next() {
        match c {
            '1' | '2' | '3' => {
                out.push(c as u8 - b'0');
                if !in_group {
                    group_start = out.len() - 1;
                }
            }
            '(' => {
                group_start = out.len();
                in_group = true;
            }
            ')' => {
                in_group = false;
            }
            '^' => {
                let mut digits = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    digits.push(*d);
                    chars.next();
                }
                let exp: usize = digits.parse().expect("exponent");
                let group = out[group_start..].to_vec();
                for _ in 1..exp {
                    out.extend_from_slice(&group);
                }
            }
            ' ' => {}
            _ => panic!("unexpected character {c:?} in word expression"),
        }
    }
    Word::from_raw(out)
}

/// Free cancellation of doubled letters: repeatedly deletes factors `xx`.
/// This uses only that each letter is an involution, so the result does not
/// depend on the group parameter.
pub fn free_cancel(w: &Word) -> Word {
    let mut stack: Vec<u8> = Vec::with_capacity(w.len());
    for &letter in w.letters() {
        if stack.last() == Some(&letter) {
            stack.pop();
        } else {
            stack.push(letter);
        }
    }
    Word(stack)
}

fn require_coprime_positive(r: &Root) -> Result<()> {
    if !r.is_positive_pair() {
        return Err(Error::NotPositive { root: r.clone() });
    }
    if !is_reduced(r) {
        return Err(Error::NotCoprime {
            a: r.a().clone(),
            b: r.b().clone(),
        });
    }
    Ok(())
}

/// The staircase word `s^{a x b}` of a coprime pair with `a >= b >= 1`:
/// for each entry `c` of the first sequence, `(23)^c (21)`. Its length is
/// `2(a + b)`.
///
/// # Errors
///
/// Rejects pairs that are not coprime or not ordered `a >= b >= 1`.
///
/// ```
/// use rigidroots::words::dyck_word;
/// use rigidroots::roots::Root;
///
/// assert_eq!(dyck_word(&Root::new(5, 3)).unwrap().to_string(), "2323212323212321");
/// assert_eq!(dyck_word(&Root::new(1, 1)).unwrap().to_string(), "2321");
/// ```
pub fn dyck_word(r: &Root) -> Result<Word> {
    let seq = first_sequence(r)?;
    let mut letters = Vec::new();
    for entry in seq {
        for _ in 0..entry {
            letters.extend_from_slice(&[2, 3]);
        }
        letters.extend_from_slice(&[2, 1]);
    }
    Ok(Word(letters))
}

/// The reflection word `s([a, b])` of a reduced positive pair.
///
/// For `a >= b` this is `32 . s^{a x b} . 1` with doubled letters freely
/// cancelled, an odd-length palindrome; for `a < b` it is the `1 <-> 3`
/// letter swap of `s([b, a])`. The word does not depend on the group
/// parameter.
///
/// # Errors
///
/// Rejects pairs that are not reduced.
///
/// ```
/// use rigidroots::words::s_of_root;
/// use rigidroots::roots::Root;
///
/// assert_eq!(s_of_root(&Root::new(5, 3)).unwrap().to_string(), "2321232321232");
/// assert_eq!(s_of_root(&Root::new(1, 1)).unwrap().to_string(), "2");
/// assert_eq!(s_of_root(&Root::new(3, 5)).unwrap().to_string(), "2123212123212");
/// ```
pub fn s_of_root(r: &Root) -> Result<Word> {
    require_coprime_positive(r)?;
    if r.a() < r.b() {
        return Ok(s_of_root(&r.swapped())?.swapped13());
    }
    let mut letters = vec![3u8, 2];
    letters.extend_from_slice(dyck_word(r)?.letters());
    letters.push(1);
    Ok(free_cancel(&Word(letters)))
}

/// The crossing word of the open segment from `(0, 0)` to `(a, b)`:
/// crossings with the vertical lines `x = k` are labeled 3, with the
/// horizontal lines `y = k` labeled 1, and with the diagonals `x + y = k`
/// labeled 2, sorted by the exact rational segment parameter. Endpoints are
/// excluded. This is a geometric oracle for [`s_of_root`] and works for any
/// coprime pair with both entries at least 1.
///
/// # Errors
///
/// Rejects pairs that are not coprime or have an entry below 1.
///
/// # Panics
///
/// Panics if two crossing parameters coincide, which coprimality rules out:
/// `k/a = j/b` would force `a | k` with `0 < k < a`, and likewise for the
/// diagonal family against either axis family.
pub fn crossing_word(r: &Root) -> Result<Word> {
    require_coprime_positive(r)?;
    let a = r.a().to_u64().ok_or(Error::TooLarge { what: "entry a" })?;
    let b = r.b().to_u64().ok_or(Error::TooLarge { what: "entry b" })?;
    let rational = |num: u64, den: u64| {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    };
    let mut crossings: Vec<(BigRational, u8)> = Vec::new();
    for k in 1..a {
        crossings.push((rational(k, a), 3));
    }
    for k in 1..b {
        crossings.push((rational(k, b), 1));
    }
    for k in 1..(a + b) {
        crossings.push((rational(k, a + b), 2));
    }
    crossings.sort_by(|(s, _), (t, _)| s.cmp(t));
    for pair in crossings.windows(2) {
        assert!(
            pair[0].0 != pair[1].0,
            "distinct grid lines share a crossing parameter"
        );
    }
    Ok(Word(crossings.into_iter().map(|(_, l)| l).collect()))
}

/// The closed-form word for the staircase word of the real pair
/// `[F_n, F_{n-1}]`, `n >= 2`. The word does not depend on the group
/// parameter beyond the validity requirement `m >= 2`.
///
/// # Errors
///
/// Rejects `n < 2` and `m < 2`.
///
/// ```
/// use rigidroots::words::real_root_word;
///
/// assert_eq!(real_root_word(3, 2).unwrap().to_string(), "21");
/// assert_eq!(real_root_word(3, 3).unwrap().to_string(), "1231");
/// assert_eq!(real_root_word(3, 4).unwrap().to_string(), "131231");
/// ```
pub fn real_root_word(m: i64, n: u32) -> Result<Word> {
    if m < 2 {
        return Err(Error::UnsupportedM { m, min: 2 });
    }
    if n < 2 {
        return Err(Error::IndexTooSmall {
            what: "real root index n",
            min: 2,
            got: n as u64,
        });
    }
    if n == 2 {
        return Ok(Word(vec![2, 1]));
    }
    let one = Word(vec![1]);
    let l321 = Word(vec![3, 2, 1]);
    let l123 = Word(vec![1, 2, 3]);
    let (core, reps) = if n % 2 == 1 {
        (Word(vec![2, 3]), ((n - 3) / 2) as usize)
    } else {
        (Word(vec![3, 1, 2, 3]), ((n - 4) / 2) as usize)
    };
    Ok(one
        .concat(&l321.repeated(reps))
        .concat(&core)
        .concat(&l123.repeated(reps))
        .concat(&one))
}

/// The pair of words `(H_k, V_k)` substituted for horizontal and vertical
/// steps at depth `k` of the staircase recursion. Both words are independent
/// of the group parameter.
///
/// # Panics
///
/// Panics when `k < 1`.
pub fn hk_vk(_m: i64, k: u32) -> (Word, Word) {
    assert!(k >= 1, "depth k starts at 1");
    match k {
        1 => (Word(vec![2, 3]), Word(vec![2, 1])),
        2 => (Word(vec![2, 1]), Word(vec![3, 1])),
        _ => {
            let one = Word(vec![1]);
            let l321 = Word(vec![3, 2, 1]);
            let l123 = Word(vec![1, 2, 3]);
            if k % 2 == 1 {
                let l = ((k - 1) / 2) as usize;
                let h = one
                    .concat(&l321.repeated(l - 1))
                    .concat(&Word(vec![2, 3]))
                    .concat(&l123.repeated(l - 1))
                    .concat(&one);
                let v = one
                    .concat(&l321.repeated(l - 1))
                    .concat(&Word(vec![2, 1, 2, 3]))
                    .concat(&l123.repeated(l - 1))
                    .concat(&one);
                (h, v)
            } else {
                let l = ((k - 2) / 2) as usize;
                let pre = Word(vec![1, 3]);
                let l213 = Word(vec![2, 1, 3]);
                let l312 = Word(vec![3, 1, 2]);
                let post = Word(vec![3, 1]);
                let h = pre
                    .concat(&l213.repeated(l - 1))
                    .concat(&Word(vec![1, 2]))
                    .concat(&l312.repeated(l - 1))
                    .concat(&post);
                let v = pre
                    .concat(&l213.repeated(l - 1))
                    .concat(&Word(vec![2, 3, 1, 2]))
                    .concat(&l312.repeated(l - 1))
                    .concat(&post);
                (h, v)
            }
        }
    }
}

/// The depth-`k` form of the staircase word: `H_k^{a_{k,1}} V_k ...
/// H_k^{a_{k,d}} V_k` over the `k`-th canonical sequence. Valid for
/// imaginary reduced `[a, b]` with `a >= b` and `1 <= k <= level`. Depth 1
/// reproduces [`dyck_word`]; every depth is equal to it in the group.
///
/// # Errors
///
/// Rejects non-imaginary pairs and out-of-range depths.
pub fn word_via_level(m: i64, r: &Root, k: u32) -> Result<Word> {
    let class = classify(m, r);
    if class != RootClass::ImaginaryPositive {
        return Err(Error::NotImaginary {
            root: r.clone(),
            class,
        });
    }
    let info = level(m, r)?;
    if k < 1 || k > info.level {
        return Err(Error::LevelOutOfRange {
            k: k as u64,
            level: info.level,
        });
    }
    let chain = all_canonical_data(m, r)?;
    let seq = &chain[(k - 1) as usize].seq;
    let (h, v) = hk_vk(m, k);
    let mut out = Word::empty();
    for &entry in seq {
        out = out.concat(&h.repeated(entry as usize)).concat(&v);
    }
    Ok(out)
}

/// The conjugated depth-`k` form, `2 <= k <= level`: for even `k = 2l + 2`,
/// `(132)^l (21)^{a_{k,1}} 31 ... (21)^{a_{k,d}} 31 (231)^l`; for odd
/// `k = 2l + 1`, `(132)^l (23)^{a_{k,1}+1} 21 ... (23)^{a_{k,d}+1} 21
/// (231)^l`. Equal in the group to [`dyck_word`].
///
/// # Errors
///
/// Rejects non-imaginary pairs and out-of-range depths.
pub fn word_corollary415(m: i64, r: &Root, k: u32) -> Result<Word> {
    let class = classify(m, r);
    if class != RootClass::ImaginaryPositive {
        return Err(Error::NotImaginary {
            root: r.clone(),
            class,
        });
    }
    let info = level(m, r)?;
    if k < 2 || k > info.level {
        return Err(Error::LevelOutOfRange {
            k: k as u64,
            level: info.level,
        });
    }
    let chain = all_canonical_data(m, r)?;
    let seq = &chain[(k - 1) as usize].seq;
    let l132 = Word(vec![1, 3, 2]);
    let l231 = Word(vec![2, 3, 1]);
    let mut out;
    if k.is_multiple_of(2) {
        let l = ((k - 2) / 2) as usize;
        out = l132.repeated(l);
        for &entry in seq {
            out = out
                .concat(&Word(vec![2, 1]).repeated(entry as usize))
                .concat(&Word(vec![3, 1]));
        }
        out = out.concat(&l231.repeated(l));
    } else {
        let l = ((k - 1) / 2) as usize;
        out = l132.repeated(l);
        for &entry in seq {
            out = out
                .concat(&Word(vec![2, 3]).repeated(entry as usize + 1))
                .concat(&Word(vec![2, 1]));
        }
        out = out.concat(&l231.repeated(l));
    }
    Ok(out)
}
