//! Closed-form normal forms for staircase words, read directly off the
//! canonical-sequence chain.
//!
//! [`standard_word`] returns, without running the rewrite engine, the unique
//! normal form of the staircase word `s^{a x b}` with respect to the closed
//! rule system of the group. The construction dispatches on the level of the
//! pair, the level's parity, the type and base letter of the level sequence,
//! and a handful of exceptional small-parameter combinations; real pairs use
//! the fixed family of [`real_root_word`] forms. The rewrite engine remains
//! the oracle: tests check `standard_word` against
//! [`normal_form`](crate::rewrite::normal_form) letter for letter.

use crate::canseq::{all_canonical_data, level, CanonicalData, SeqType};
use crate::error::{Error, Result};
use crate::roots::{classify, fib, Root, RootClass};
use crate::words::{real_root_word, wexpr, Word};

/// Parity of a level.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    /// An odd level.
    Odd,
    /// An even level.
    Even,
}

impl Parity {
    fn of(level: u32) -> Parity {
        if level.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// The dispatch key naming which closed form applies to a pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum StdCaseKey {
    /// A real pair `[F_n, F_{n-1}]`, handled by the fixed real-pair forms.
    Real {
        /// Index of the pair in the `F` sequence; `n >= 2`.
        n: u32,
    },
    /// An imaginary pair, handled by the level-driven forms.
    Leveled {
        /// The group parameter.
        m: i64,
        /// The level `L` of the pair.
        level: u32,
        /// Parity of the level.
        parity: Parity,
        /// Type of the level sequence `c_L`.
        ty: SeqType,
        /// Base letter `N_L` of the level sequence.
        n_l: u64,
        /// Whether one of the small-parameter exceptional constructions
        /// replaces the generic one. True exactly when `m = 3`, `L = 1`,
        /// `N_1 = 2` and `c_1` has type `-`; or `m = 3`, `L` odd `>= 3`,
        /// `N_L = 1` and `c_L` has type `-`; or `m <= 5`, `L` even and
        /// `N_L = m - 2`.
        exceptional: bool,
    },
}

/// The word pair `(w_1, w_2)` used by the odd-level forms, selected by the
/// shifted base letter `N` (`N = N_1 - 1` at level 1, `N = N_L` at odd
/// levels `>= 3`). Writing `l = floor(m/2)`:
///
/// | row              | `w_1`             | `w_2`             |
/// |------------------|-------------------|-------------------|
/// | `N <= l - 3`     | `(23)^{N+2} 21`   | `(23)^{N+1} 21`   |
/// | `N = l - 2`      | `(32)^{m-l-1} 31` | `(23)^{l-1} 21`   |
/// | `l-1 <= N <= m-3`| `(32)^{m-N-3} 31` | `(32)^{m-N-2} 31` |
/// | `N = m - 2`      | `21`              | `31`              |
///
/// Both entries are the normal forms of `(23)^{N+2}(21)` and
/// `(23)^{N+1}(21)` respectively; the rows only spell out where the
/// exponent-overflow rewrite `(23)^s 21 -> (32)^{m-s-1} 31` (for
/// `s >= floor(m/2)`) has fired.
///
/// # Errors
///
/// Rejects `m < 3` and `N > m - 2`.
///
/// ```
/// use rigidroots::stdwords::w_table;
///
/// let (w1, w2) = w_table(3, 0).unwrap();
/// assert_eq!((w1.to_string(), w2.to_string()), ("31".into(), "3231".into()));
/// let (w1, w2) = w_table(3, 1).unwrap();
/// assert_eq!((w1.to_string(), w2.to_string()), ("21".into(), "31".into()));
/// ```
pub fn w_table(m: i64, n: u64) -> Result<(Word, Word)> {
    if m < 3 {
        return Err(Error::UnsupportedM { m, min: 3 });
    }
    let m_u = m as u64;
    if n > m_u - 2 {
        return Err(Error::IndexTooLarge {
            what: "table index N",
            max: m_u - 2,
            got: n,
        });
    }
    let ell = m_u / 2;
    let w23 = wexpr("23");
    let w32 = wexpr("32");
    let w21 = wexpr("21");
    let w31 = wexpr("31");
    let pair = if n + 3 <= ell {
        (
            rep(&w23, n + 2).concat(&w21),
            rep(&w23, n + 1).concat(&w21),
        )
    } else if n + 2 == ell {
        (
            rep(&w32, m_u - ell - 1).concat(&w31),
            rep(&w23, ell - 1).concat(&w21),
        )
    } else if n <= m_u - 3 {
        (
            rep(&w32, m_u - n - 3).concat(&w31),
            rep(&w32, m_u - n - 2).concat(&w31),
        )
    } else {
        (w21, w31)
    };
    Ok(pair)
}

/// The word pair `(v_1, v_2)` used by the even-level forms, selected by the
/// base letter `N_L`. Writing `l = floor(m/2)`:
///
/// | row                | `v_1`               | `v_2`               |
/// |--------------------|---------------------|---------------------|
/// | `N_L <= l - 2`     | `(12)^{N_L+1} 13`   | `(12)^{N_L} 13`     |
/// | `N_L = l - 1`      | `(21)^{m-l-1} 23`   | `(12)^{l-1} 13`     |
/// | `l <= N_L <= m-2`  | `(21)^{m-N_L-2} 23` | `(21)^{m-N_L-1} 23` |
///
/// These are the normal forms of `(12)^{N_L+1}(13)` and `(12)^{N_L}(13)`,
/// with the overflow rewrite `(12)^s 13 -> (21)^{m-s-1} 23` applied where
/// `s >= floor(m/2)`.
///
/// # Errors
///
/// Rejects `m < 3` and `N_L` outside `1..=m-2`.
///
/// ```
/// use rigidroots::stdwords::v_table;
///
/// let (v1, v2) = v_table(6, 1).unwrap();
/// assert_eq!(v1.to_string(), "121213");
/// assert_eq!(v2.to_string(), "1213");
/// ```
pub fn v_table(m: i64, n_l: u64) -> Result<(Word, Word)> {
    if m < 3 {
        return Err(Error::UnsupportedM { m, min: 3 });
    }
    let m_u = m as u64;
    if n_l < 1 {
        return Err(Error::IndexTooSmall {
            what: "table index N_L",
            min: 1,
            got: n_l,
        });
    }
    if n_l > m_u - 2 {
        return Err(Error::IndexTooLarge {
            what: "table index N_L",
            max: m_u - 2,
            got: n_l,
        });
    }
    let ell = m_u / 2;
    let w12 = wexpr("12");
    let w21 = wexpr("21");
    let w13 = wexpr("13");
    let w23 = wexpr("23");
    let pair = if n_l + 2 <= ell {
        (
            rep(&w12, n_l + 1).concat(&w13),
            rep(&w12, n_l).concat(&w13),
        )
    } else if n_l + 1 == ell {
        (
            rep(&w21, m_u - ell - 1).concat(&w23),
            rep(&w12, ell - 1).concat(&w13),
        )
    } else {
        (
            rep(&w21, m_u - n_l - 2).concat(&w23),
            rep(&w21, m_u - n_l - 1).concat(&w23),
        )
    };
    Ok(pair)
}

/// The left prefix of the even-level forms. At levels `>= 4` it is a plain
/// word; at level 2 it degenerates to a single letter `2` that merges with a
/// following `2` instead of doubling it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum YPrefix {
    /// The merging single letter used at level 2: written as `2` unless the
    /// next letter is `2`, in which case both letters disappear.
    MergingTwo,
    /// A plain word prefix, used at even levels `>= 4`.
    Plain(Word),
}

impl YPrefix {
    /// Prepends the prefix to `rest`, applying the merge rule: the merging
    /// letter cancels against a leading `2` of `rest` (`2 . 213 = 213` but
    /// `2 . 23 = 3`); a plain prefix concatenates.
    pub fn join(&self, rest: &Word) -> Word {
        match self {
            YPrefix::MergingTwo => {
                let letters = rest.letters();
                if letters.first() == Some(&2) {
                    Word::from_raw(letters[1..].to_vec())
                } else {
                    let mut out = Vec::with_capacity(letters.len() + 1);
                    out.push(2);
                    out.extend_from_slice(letters);
                    Word::from_raw(out)
                }
            }
            YPrefix::Plain(word) => word.concat(rest),
        }
    }
}

/// The conjugation prefixes shared by all forms of level `>= 2`:
/// `x = (132)^g 1` and its inverse `1 (231)^g` with `g = floor((L-2)/2)`,
/// plus the even-level left prefix `y` ( `(132)^{(L-4)/2} 13` for even
/// `L >= 4`, the merging `2` at `L = 2`, absent at odd levels).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PrefixWords {
    x: Word,
    x_inv: Word,
    y: Option<YPrefix>,
}

impl PrefixWords {
    /// Builds the prefixes for a level `>= 2`.
    ///
    /// # Errors
    ///
    /// Rejects levels below 2.
    ///
    /// ```
    /// use rigidroots::stdwords::PrefixWords;
    /// use rigidroots::words::free_cancel;
    ///
    /// let p = PrefixWords::for_level(4).unwrap();
    /// assert_eq!(p.x().to_string(), "1321");
    /// assert_eq!(p.x_inv().to_string(), "1231");
    /// assert!(free_cancel(&p.x().concat(p.x_inv())).is_empty());
    /// ```
    pub fn for_level(level: u32) -> Result<PrefixWords> {
        if level < 2 {
            return Err(Error::IndexTooSmall {
                what: "prefix level",
                min: 2,
                got: u64::from(level),
            });
        }
        let g = ((level - 2) / 2) as usize;
        let x = wexpr("132").repeated(g).concat(&wexpr("1"));
        let x_inv = wexpr("1").concat(&wexpr("231").repeated(g));
        let y = match (level % 2, level) {
            (1, _) => None,
            (_, 2) => Some(YPrefix::MergingTwo),
            _ => Some(YPrefix::Plain(
                wexpr("132")
                    .repeated(((level - 4) / 2) as usize)
                    .concat(&wexpr("13")),
            )),
        };
        Ok(PrefixWords { x, x_inv, y })
    }

    /// The prefix `x`.
    pub fn x(&self) -> &Word {
        &self.x
    }

    /// The suffix `x^{-1}` (the letterwise reverse of `x`; each letter is an
    /// involution).
    pub fn x_inv(&self) -> &Word {
        &self.x_inv
    }

    /// The even-level left prefix, if this level has one.
    pub fn y(&self) -> Option<&YPrefix> {
        self.y.as_ref()
    }

    /// `y . rest` via the merge rule.
    ///
    /// # Panics
    ///
    /// Panics when the level has no `y` prefix (odd levels).
    fn y_join(&self, rest: &Word) -> Word {
        self.y
            .as_ref()
            .expect("y prefix exists only at even levels")
            .join(rest)
    }

    /// `x . middle . x^{-1}`.
    fn conjugate(&self, middle: &Word) -> Word {
        self.x.concat(middle).concat(&self.x_inv)
    }
}

fn rep(block: &Word, times: u64) -> Word {
    block.repeated(times as usize)
}

fn cat<'a>(parts: impl IntoIterator<Item = &'a Word>) -> Word {
    let mut letters = Vec::new();
    for part in parts {
        letters.extend_from_slice(part.letters());
    }
    Word::from_raw(letters)
}

/// Finds `n >= 2` with `[a, b] = [F_n, F_{n-1}]` for a real positive pair
/// with `a >= b`.
fn real_index(m: i64, r: &Root) -> Option<u32> {
    let mut n = 2u32;
    loop {
        let hi = fib(m, n);
        if &hi > r.a() {
            return None;
        }
        if &hi == r.a() && &fib(m, n - 1) == r.b() {
            return Some(n);
        }
        n += 1;
    }
}

/// Checks the two structurally excluded combinations for the level sequence:
/// a maximal base letter (`N_L = m - 2 + [L=1]`) never carries type `+`, and
/// above level 1 the base letter 1 never carries type `0`. Hitting either
/// means the caller misclassified the pair.
fn check_excluded_combinations(
    m: i64,
    lvl: u32,
    n_l: u64,
    ty: SeqType,
    r: &Root,
) -> Result<()> {
    let max_letter = (m as u64) - 2 + u64::from(lvl == 1);
    if n_l == max_letter && ty == SeqType::Plus {
        return Err(Error::ImpossibleCase {
            root: r.clone(),
            what: "maximal base letter with a type + level sequence",
        });
    }
    if lvl >= 2 && n_l == 1 && ty == SeqType::Zero {
        return Err(Error::ImpossibleCase {
            root: r.clone(),
            what: "base letter 1 with a type 0 level sequence above level 1",
        });
    }
    Ok(())
}

/// Names the closed form that applies to a reduced positive pair with
/// `a >= b`: the real-pair family for real pairs, otherwise the level-keyed
/// case of [`standard_word`].
///
/// # Errors
///
/// Rejects `m < 3`, pairs with `a < b`, and pairs that are not reduced
/// positive roots.
///
/// ```
/// use rigidroots::canseq::SeqType;
/// use rigidroots::roots::Root;
/// use rigidroots::stdwords::{dispatch_case, Parity, StdCaseKey};
///
/// assert_eq!(
///     dispatch_case(3, &Root::new(8, 3)).unwrap(),
///     StdCaseKey::Real { n: 3 },
/// );
/// assert_eq!(
///     dispatch_case(3, &Root::new(17, 7)).unwrap(),
///     StdCaseKey::Leveled {
///         m: 3,
///         level: 1,
///         parity: Parity::Odd,
///         ty: SeqType::Minus,
///         n_l: 2,
///         exceptional: true,
///     },
/// );
/// ```
pub fn dispatch_case(m: i64, r: &Root) -> Result<StdCaseKey> {
    if m < 3 {
        return Err(Error::UnsupportedM { m, min: 3 });
    }
    match classify(m, r) {
        RootClass::RealPositive => {
            if r.a() < r.b() {
                return Err(Error::NotOrdered { root: r.clone() });
            }
            let n = real_index(m, r).ok_or_else(|| Error::ImpossibleCase {
                root: r.clone(),
                what: "real positive pair with a >= b missing from the F sequence",
            })?;
            Ok(StdCaseKey::Real { n })
        }
        RootClass::ImaginaryPositive => {
            let info = level(m, r)?;
            let chain = all_canonical_data(m, r)?;
            leveled_key(m, info.level, &chain, r)
        }
        class => Err(Error::NotImaginary {
            root: r.clone(),
            class,
        }),
    }
}

fn leveled_key(m: i64, lvl: u32, chain: &[CanonicalData], r: &Root) -> Result<StdCaseKey> {
    let at_level = &chain[(lvl - 1) as usize];
    let (n_l, ty) = (at_level.n, at_level.ty);
    check_excluded_combinations(m, lvl, n_l, ty, r)?;
    let exceptional = match Parity::of(lvl) {
        Parity::Odd if lvl == 1 => m == 3 && n_l == 2 && ty == SeqType::Minus,
        Parity::Odd => m == 3 && n_l == 1 && ty == SeqType::Minus,
        Parity::Even => (3..=5).contains(&m) && n_l == (m as u64) - 2,
    };
    Ok(StdCaseKey::Leveled {
        m,
        level: lvl,
        parity: Parity::of(lvl),
        ty,
        n_l,
        exceptional,
    })
}

/// The normal form of the staircase word `s^{a x b}` of a reduced positive
/// pair with `a >= b`, built in closed form from the canonical-sequence
/// chain.
///
/// # Errors
///
/// Rejects `m < 3`, pairs with `a < b`, and pairs that are not reduced
/// positive roots. An [`Error::ImpossibleCase`] signals an internal bug.
///
/// ```
/// use rigidroots::roots::Root;
/// use rigidroots::stdwords::standard_word;
///
/// assert_eq!(
///     standard_word(3, &Root::new(5, 3)).unwrap().to_string(),
///     "31313231",
/// );
/// assert_eq!(
///     standard_word(3, &Root::new(13, 5)).unwrap().to_string(),
///     "13231231",
/// );
/// ```
pub fn standard_word(m: i64, r: &Root) -> Result<Word> {
    match dispatch_case(m, r)? {
        StdCaseKey::Real { n } => real_root_word(m, n),
        StdCaseKey::Leveled {
            level: lvl,
            parity,
            ty,
            n_l,
            exceptional,
            ..
        } => {
            let chain = all_canonical_data(m, r)?;
            match (parity, exceptional) {
                (Parity::Odd, false) if lvl == 1 => level_one_generic(m, ty, n_l, &chain),
                (Parity::Odd, true) if lvl == 1 => level_one_special(ty, &chain, r),
                (Parity::Even, false) => even_level_generic(m, lvl, ty, n_l, &chain),
                (Parity::Even, true) => even_level_special(m, lvl, ty, &chain, r),
                (Parity::Odd, false) => odd_level_generic(m, lvl, ty, n_l, &chain),
                (Parity::Odd, true) => odd_level_special(lvl, &chain, r),
            }
        }
    }
}

/// Level 1, all `m` except the `m = 3`, `N_1 = 2`, type `-` combination:
/// the staircase word regrouped over `(w_1, w_2)` blocks.
fn level_one_generic(m: i64, ty: SeqType, n_1: u64, chain: &[CanonicalData]) -> Result<Word> {
    let (w1, w2) = w_table(m, n_1 - 1)?;
    Ok(match ty {
        SeqType::Plus => {
            let mut parts = Vec::new();
            for &entry in &chain[1].seq {
                parts.push(rep(&w1, entry));
                parts.push(w2.clone());
            }
            cat(&parts)
        }
        SeqType::Minus => {
            let mut parts = Vec::new();
            for &entry in &chain[1].seq {
                parts.push(w1.clone());
                parts.push(rep(&w2, entry));
            }
            cat(&parts)
        }
        SeqType::Equal => w1.concat(&w2),
        SeqType::Zero => w2,
    })
}

/// Level 1 with `m = 3`, `N_1 = 2` and `c_1` of type `-`: the regrouped word
/// contains `121` factors and collapses further. Fixed blocks
/// `w_1 = 21, w_2 = 31, w_3 = 3212, w_4 = 3231, w_5 = 231321,
/// w_6 = 3132132312` cover the three surviving shapes.
fn level_one_special(ty_first: SeqType, chain: &[CanonicalData], r: &Root) -> Result<Word> {
    debug_assert_eq!(ty_first, SeqType::Minus);
    let w1 = wexpr("21");
    let w2 = wexpr("31");
    let w3 = wexpr("3212");
    let c2 = &chain[1];
    if c2.n > 1 {
        let d = c2.seq.len();
        let mut parts = vec![w1];
        for &entry in &c2.seq[..d - 1] {
            parts.push(rep(&w2, entry - 1));
            parts.push(w3.clone());
        }
        parts.push(rep(&w2, c2.seq[d - 1]));
        return Ok(cat(&parts));
    }
    match c2.ty {
        SeqType::Plus => {
            let c3 = &chain[2];
            let w2w3 = w2.concat(&w3);
            let w6 = wexpr("3132132312");
            let mut parts = vec![w1, w3.clone(), rep(&w2w3, c3.seq[0] - 1)];
            for &entry in &c3.seq[1..] {
                parts.push(w6.clone());
                parts.push(rep(&w2w3, entry - 1));
            }
            parts.push(rep(&w2, 2));
            Ok(cat(&parts))
        }
        SeqType::Minus => {
            let c3 = &chain[2];
            let w4 = wexpr("3231");
            let w5 = wexpr("231321");
            let mut parts = vec![wexpr("21321"), rep(&w4, c3.seq[0] - 1)];
            for &entry in &c3.seq[1..] {
                parts.push(w5.clone());
                parts.push(rep(&w4, entry));
            }
            parts.push(wexpr("23131"));
            Ok(cat(&parts))
        }
        SeqType::Equal => Ok(cat([&w1, &w3, &rep(&w2, 2)])),
        SeqType::Zero => Err(Error::ImpossibleCase {
            root: r.clone(),
            what: "type 0 successor with base letter 1 after a type - level sequence",
        }),
    }
}

/// Even level, all `m` except `m <= 5` with `N_L = m - 2`: the conjugated
/// word regrouped over `(v_1, v_2)` blocks between the `y`/`x` prefixes.
fn even_level_generic(
    m: i64,
    lvl: u32,
    ty: SeqType,
    n_l: u64,
    chain: &[CanonicalData],
) -> Result<Word> {
    let prefixes = PrefixWords::for_level(lvl)?;
    if ty == SeqType::Zero {
        let ell = (m as u64) / 2;
        return Ok(if n_l <= ell {
            let middle = rep(&wexpr("12"), n_l - 1)
                .concat(&wexpr("13"))
                .concat(prefixes.x_inv());
            prefixes.y_join(&middle)
        } else {
            let (_, v2) = v_table(m, n_l)?;
            prefixes.conjugate(&v2)
        });
    }
    let (v1, v2) = v_table(m, n_l)?;
    let middle = match ty {
        SeqType::Plus => {
            let seq = &chain[lvl as usize].seq;
            let mut parts = vec![v2.clone(), rep(&v1, seq[0] - 1), v2.clone()];
            for &entry in &seq[1..] {
                parts.push(rep(&v1, entry));
                parts.push(v2.clone());
            }
            cat(&parts)
        }
        SeqType::Minus => {
            let seq = &chain[lvl as usize].seq;
            let mut parts = vec![rep(&v2, seq[0] + 1)];
            for &entry in &seq[1..] {
                parts.push(v1.clone());
                parts.push(rep(&v2, entry));
            }
            cat(&parts)
        }
        SeqType::Equal => rep(&v2, 2),
        SeqType::Zero => unreachable!("handled above"),
    };
    Ok(prefixes.y_join(&middle.concat(prefixes.x_inv())))
}

/// Even level with `m = 3, 4, 5` and `N_L = m - 2`: the generic regrouping
/// leaves `23232` factors, so fixed blocks `v_3 = 31, v_4 = 3231,
/// v_5 = 2321, v_6 = 323231` take over.
fn even_level_special(
    m: i64,
    lvl: u32,
    ty: SeqType,
    chain: &[CanonicalData],
    r: &Root,
) -> Result<Word> {
    let prefixes = PrefixWords::for_level(lvl)?;
    let w23 = wexpr("23");
    let v4 = wexpr("3231");
    let v5 = wexpr("2321");
    let impossible = |what| {
        Err(Error::ImpossibleCase {
            root: r.clone(),
            what,
        })
    };
    let minus_form = |head: &Word, separator: &Word| {
        let seq = &chain[lvl as usize].seq;
        let mut parts = vec![rep(head, seq[0])];
        for &entry in &seq[1..] {
            parts.push(separator.clone());
            parts.push(rep(head, entry - 1));
        }
        parts.push(w23.clone());
        prefixes.conjugate(&cat(&parts))
    };
    match (m, ty) {
        (3, SeqType::Minus) => Ok(minus_form(&v4, &wexpr("31"))),
        (3, SeqType::Equal) => Ok(prefixes.conjugate(&v4.concat(&w23))),
        (4, SeqType::Minus) => Ok(minus_form(&v5, &v4)),
        (4, SeqType::Equal) => Ok(prefixes.conjugate(&v5.concat(&w23))),
        (4, SeqType::Zero) => Ok(prefixes.y_join(&wexpr("1213").concat(prefixes.x_inv()))),
        (5, SeqType::Minus) => Ok(minus_form(&v5, &wexpr("323231"))),
        (5, SeqType::Equal) => Ok(prefixes.conjugate(&v5.concat(&w23))),
        (5, SeqType::Zero) => Ok(prefixes.conjugate(&wexpr("2123"))),
        (3, SeqType::Zero) => impossible("base letter 1 with a type 0 sequence at an even level"),
        (_, SeqType::Plus) => impossible("maximal base letter with a type + level sequence"),
        _ => impossible("even-level special case outside m = 3, 4, 5"),
    }
}

/// Odd level `>= 3`, all `m` except the `m = 3` type `-` combination: the
/// conjugated word regrouped over `(w_1, w_2)` blocks, closed by `23` before
/// the suffix.
fn odd_level_generic(
    m: i64,
    lvl: u32,
    ty: SeqType,
    n_l: u64,
    chain: &[CanonicalData],
) -> Result<Word> {
    let prefixes = PrefixWords::for_level(lvl)?;
    let w23 = wexpr("23");
    if ty == SeqType::Zero {
        let ell = (m as u64) / 2;
        let middle = if n_l < ell {
            rep(&w23, n_l).concat(&wexpr("2123"))
        } else {
            let (_, w2) = w_table(m, n_l)?;
            wexpr("32").concat(&w2).concat(&w23)
        };
        return Ok(prefixes.conjugate(&middle));
    }
    let (w1, w2) = w_table(m, n_l)?;
    let middle = match ty {
        SeqType::Plus => {
            let seq = &chain[lvl as usize].seq;
            let mut parts = vec![w2.clone(), rep(&w1, seq[0] - 1), w2.clone()];
            for &entry in &seq[1..] {
                parts.push(rep(&w1, entry));
                parts.push(w2.clone());
            }
            cat(&parts)
        }
        SeqType::Minus => {
            let seq = &chain[lvl as usize].seq;
            let mut parts = vec![rep(&w2, seq[0] + 1)];
            for &entry in &seq[1..] {
                parts.push(w1.clone());
                parts.push(rep(&w2, entry));
            }
            cat(&parts)
        }
        SeqType::Equal => rep(&w2, 2),
        SeqType::Zero => unreachable!("handled above"),
    };
    Ok(prefixes.conjugate(&middle.concat(&w23)))
}

/// Odd level `>= 3` with `m = 3` and `c_L` of type `-` (the base letter is
/// then forced to 1): fixed blocks `u_3 = 31, u_4 = 3212, u_5 = 1323,
/// u_6 = 123132, u_7 = 123131` cover the shapes that survive the extra
/// collapses.
fn odd_level_special(lvl: u32, chain: &[CanonicalData], r: &Root) -> Result<Word> {
    let prefixes = PrefixWords::for_level(lvl)?;
    let w23 = wexpr("23");
    let after = &chain[lvl as usize];
    if after.n != 1 {
        let u3 = wexpr("31");
        let u4 = wexpr("3212");
        let d = after.seq.len();
        let mut parts = vec![wexpr("31")];
        for &entry in &after.seq[..d - 1] {
            parts.push(rep(&u3, entry - 1));
            parts.push(u4.clone());
        }
        parts.push(rep(&u3, after.seq[d - 1]));
        parts.push(w23);
        return Ok(prefixes.conjugate(&cat(&parts)));
    }
    let u7 = wexpr("123131");
    let head = wexpr("3132");
    match after.ty {
        SeqType::Minus => {
            let next = &chain[(lvl + 1) as usize];
            let u5 = wexpr("1323");
            let u6 = wexpr("123132");
            let mut parts = vec![head, rep(&u5, next.seq[0] - 1)];
            for &entry in &next.seq[1..] {
                parts.push(u6.clone());
                parts.push(rep(&u5, entry));
            }
            parts.push(u7);
            parts.push(w23);
            Ok(prefixes.conjugate(&cat(&parts)))
        }
        SeqType::Plus => {
            let next = &chain[(lvl + 1) as usize];
            let u5 = wexpr("1323");
            let u6 = wexpr("123132");
            let d = next.seq.len();
            let mut parts = vec![head];
            for &entry in &next.seq[..d - 1] {
                parts.push(rep(&u6, entry));
                parts.push(u5.clone());
            }
            parts.push(rep(&u6, next.seq[d - 1] - 1));
            parts.push(u7);
            parts.push(w23);
            Ok(prefixes.conjugate(&cat(&parts)))
        }
        SeqType::Equal => Ok(prefixes.conjugate(&cat([&head, &u7, &w23]))),
        SeqType::Zero => Err(Error::ImpossibleCase {
            root: r.clone(),
            what: "type 0 successor with base letter 1 after a type - level sequence",
        }),
    }
}
