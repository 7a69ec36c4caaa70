//! Deg-lex string rewriting over the alphabet `{1, 2, 3}`: normal forms,
//! critical pairs, completion, and the closed rule systems of the groups
//! `W(m)`.
//!
//! A rule `lhs -> rhs` requires `rhs` strictly smaller than `lhs` in the
//! deg-lex order of [`Word`], so every rewrite strictly decreases a word and
//! reduction terminates unconditionally. When a system is closed under
//! composition (every critical pair resolves), the normal form is unique
//! and two words are equal in the group exactly when their normal forms
//! coincide.

use crate::error::{Error, Result};
use crate::words::Word;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A rewriting rule `lhs -> rhs` with `rhs` strictly deg-lex smaller.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rule {
    lhs: Word,
    rhs: Word,
}

impl Rule {
    /// Builds a rule, checking that `lhs` is nonempty and `rhs < lhs`.
    ///
    /// # Errors
    ///
    /// Rejects an empty left side and non-decreasing orientations.
    pub fn new(lhs: Word, rhs: Word) -> Result<Self> {
        if lhs.is_empty() || rhs >= lhs {
            return Err(Error::BadRule { lhs, rhs });
        }
        Ok(Rule { lhs, rhs })
    }

    /// Builds a rule from the deg-lex larger and smaller of two distinct
    /// words.
    ///
    /// # Errors
    ///
    /// Rejects equal words (no orientation).
    pub fn oriented(u: Word, v: Word) -> Result<Self> {
        match u.cmp(&v) {
            std::cmp::Ordering::Greater => Rule::new(u, v),
            std::cmp::Ordering::Less => Rule::new(v, u),
            std::cmp::Ordering::Equal => Err(Error::BadRule { lhs: u, rhs: v }),
        }
    }

    /// The left side.
    pub fn lhs(&self) -> &Word {
        &self.lhs
    }

    /// The right side.
    pub fn rhs(&self) -> &Word {
        &self.rhs
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lhs, self.rhs)
    }
}

impl FromStr for Rule {
    type Err = Error;

    /// Parses `lhs -> rhs` with words as digit strings and `e` for the
    /// empty word.
    fn from_str(s: &str) -> Result<Self> {
        let (lhs, rhs) = s.split_once("->").ok_or(Error::Parse {
            what: "rule",
            input: s.to_owned(),
        })?;
        Rule::new(lhs.trim().parse()?, rhs.trim().parse()?)
    }
}

impl serde::Serialize for Rule {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Rule {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `u < v` in the deg-lex order: shorter first; at equal length, the word
/// whose first differing letter has the larger numeral is the smaller word
/// (letter 1 is the greatest).
///
/// ```
/// use rigidroots::rewrite::deg_lex_less;
///
/// let w = |s: &str| s.parse::<rigidroots::Word>().unwrap();
/// assert!(deg_lex_less(&w("2"), &w("1")));
/// assert!(!deg_lex_less(&w("121"), &w("212")));
/// assert!(deg_lex_less(&w("e"), &w("3")));
/// ```
pub fn deg_lex_less(u: &Word, v: &Word) -> bool {
    u < v
}

/// An immutable set of rules with unique left sides, indexed for matching.
#[derive(Clone, Debug)]
pub struct RewriteSystem {
    rules: Vec<Rule>,
    /// Rule indices grouped by the first letter of the left side, longest
    /// left side first, so a position scan finds the longest match.
    by_first: [Vec<usize>; 3],
    max_lhs: usize,
}

impl RewriteSystem {
    /// Builds a system from rules, rejecting duplicate left sides.
    ///
    /// # Errors
    ///
    /// Fails when two rules share a left side.
    pub fn new(rules: Vec<Rule>) -> Result<Self> {
        let mut by_first: [Vec<usize>; 3] = Default::default();
        let mut seen: BTreeMap<&Word, ()> = BTreeMap::new();
        for (idx, rule) in rules.iter().enumerate() {
            if seen.insert(rule.lhs(), ()).is_some() {
                return Err(Error::DuplicateLhs {
                    lhs: rule.lhs().clone(),
                });
            }
            let first = rule.lhs().letters()[0] as usize - 1;
            by_first[first].push(idx);
        }
        for bucket in &mut by_first {
            bucket.sort_by_key(|&idx| std::cmp::Reverse(rules[idx].lhs().len()));
        }
        let max_lhs = rules.iter().map(|r| r.lhs().len()).max().unwrap_or(0);
        Ok(RewriteSystem {
            rules,
            by_first,
            max_lhs,
        })
    }

    /// The rules in construction order.
    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Number of rules.
    pub fn len(&self) -> usize {
        self.rules.len()
    }

    /// True when the system has no rules.
    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Length of the longest left side.
    pub fn max_lhs_len(&self) -> usize {
        self.max_lhs
    }

    /// The longest rule whose left side starts at position `i` of `letters`.
    fn match_at(&self, letters: &[u8], i: usize) -> Option<&Rule> {
        let first = letters[i] as usize - 1;
        self.by_first[first]
            .iter()
            .map(|&idx| &self.rules[idx])
            .find(|rule| letters[i..].starts_with(rule.lhs().letters()))
    }
}

/// Rule-set equality regardless of order.
impl PartialEq for RewriteSystem {
    fn eq(&self, other: &Self) -> bool {
        let mut left = self.rules.clone();
        let mut right = other.rules.clone();
        left.sort();
        right.sort();
        left == right
    }
}

impl Eq for RewriteSystem {}

impl fmt::Display for RewriteSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rule in &self.rules {
            writeln!(f, "{rule}")?;
        }
        Ok(())
    }
}

impl FromStr for RewriteSystem {
    type Err = Error;

    /// Parses one rule per line, blank lines ignored.
    fn from_str(s: &str) -> Result<Self> {
        let rules = s
            .lines()
            .map(str::trim)
            .filter(|line| !line.is_empty())
            .map(Rule::from_str)
            .collect::<Result<Vec<_>>>()?;
        RewriteSystem::new(rules)
    }
}

impl serde::Serialize for RewriteSystem {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serde::Serialize::serialize(&self.rules, serializer)
    }
}

impl<'de> serde::Deserialize<'de> for RewriteSystem {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rules = Vec::<Rule>::deserialize(deserializer)?;
        RewriteSystem::new(rules).map_err(serde::de::Error::custom)
    }
}

/// Reduces `w` to its normal form: repeatedly replaces the leftmost
/// occurrence of any left side (longest wins at equal position) until none
/// occurs. Terminates because every step strictly decreases the deg-lex
/// rank; on a closed system the result is strategy-independent.
///
/// ```
/// use rigidroots::rewrite::{gs_basis, normal_form};
///
/// let s3 = gs_basis(3).unwrap();
/// let w = |t: &str| t.parse::<rigidroots::Word>().unwrap();
/// assert_eq!(normal_form(&w("11"), &s3), w("e"));
/// assert_eq!(normal_form(&w("2323212323212321"), &s3), w("31313231"));
/// ```
pub fn normal_form(w: &Word, system: &RewriteSystem) -> Word {
    let mut letters = w.letters().to_vec();
    let back = system.max_lhs_len().saturating_sub(1);
    let mut i = 0;
    while i < letters.len() {
        match system.match_at(&letters, i) {
            Some(rule) => {
                let end = i + rule.lhs().len();
                letters.splice(i..end, rule.rhs().letters().iter().copied());
                i = i.saturating_sub(back);
            }
            None => i += 1,
        }
    }
    Word::from_raw(letters)
}

/// Reduces `w` by always rewriting at the rightmost reducible position.
/// Used to confirm strategy independence of [`normal_form`] on closed
/// systems.
pub fn normal_form_rightmost(w: &Word, system: &RewriteSystem) -> Word {
    let mut letters = w.letters().to_vec();
    'outer: loop {
        for i in (0..letters.len()).rev() {
            if let Some(rule) = system.match_at(&letters, i) {
                let end = i + rule.lhs().len();
                letters.splice(i..end, rule.rhs().letters().iter().copied());
                continue 'outer;
            }
        }
        return Word::from_raw(letters);
    }
}

/// How two left sides meet in a critical pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub enum CompositionKind {
    /// A proper suffix of the first left side equals a proper prefix of the
    /// second.
    Intersection,
    /// The second left side occurs strictly inside the first.
    Inclusion,
}

/// One critical pair: the overlap word and the normal forms of its two
/// one-step reductions.
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize)]
pub struct CompositionReport {
    /// How the left sides meet.
    pub kind: CompositionKind,
    /// The overlap word both rules rewrite.
    pub overlap: Word,
    /// Normal form of the reduction using the first rule.
    pub left: Word,
    /// Normal form of the reduction using the second rule.
    pub right: Word,
}

impl CompositionReport {
    /// True when both reductions meet, so the pair resolves.
    pub fn is_trivial(&self) -> bool {
        self.left == self.right
    }
}

/// All critical pairs of the ordered rule pair `(p, q)`, with both sides
/// reduced to normal form with respect to `ambient`.
///
/// Intersections take every overlap length `t` with a length-`t` suffix of
/// `p`'s left side equal to a length-`t` prefix of `q`'s; `t` runs up to the
/// shorter left side, so one left side being a prefix or suffix of the other
/// is an intersection. Inclusions cover `q`'s left side occurring strictly
/// inside `p`'s. Over all ordered pairs this meets every way two rules can
/// rewrite one word exactly once.
pub fn compositions(p: &Rule, q: &Rule, ambient: &RewriteSystem) -> Vec<CompositionReport> {
    let pl = p.lhs().letters();
    let ql = q.lhs().letters();
    let mut reports = Vec::new();
    let mut t_max = pl.len().min(ql.len());
    if p.lhs() == q.lhs() {
        // The full self-overlap rewrites identically on both sides; only
        // shorter overlaps are informative.
        t_max -= 1;
    }
    for t in 1..=t_max {
        if pl[pl.len() - t..] != ql[..t] {
            continue;
        }
        let mut overlap = pl.to_vec();
        overlap.extend_from_slice(&ql[t..]);
        let mut left = p.rhs().letters().to_vec();
        left.extend_from_slice(&ql[t..]);
        let mut right = pl[..pl.len() - t].to_vec();
        right.extend_from_slice(q.rhs().letters());
        reports.push(CompositionReport {
            kind: CompositionKind::Intersection,
            overlap: Word::from_raw(overlap),
            left: normal_form(&Word::from_raw(left), ambient),
            right: normal_form(&Word::from_raw(right), ambient),
        });
    }
    if ql.len() < pl.len() {
        for i in 1..pl.len() - ql.len() {
            if &pl[i..i + ql.len()] != ql {
                continue;
            }
            let mut right = pl[..i].to_vec();
            right.extend_from_slice(q.rhs().letters());
            right.extend_from_slice(&pl[i + ql.len()..]);
            reports.push(CompositionReport {
                kind: CompositionKind::Inclusion,
                overlap: p.lhs().clone(),
                left: normal_form(p.rhs(), ambient),
                right: normal_form(&Word::from_raw(right), ambient),
            });
        }
    }
    reports
}

/// True when every critical pair of every ordered rule pair resolves, so
/// normal forms are unique.
pub fn is_closed(system: &RewriteSystem) -> bool {
    system.rules().iter().all(|p| {
        system
            .rules()
            .iter()
            .all(|q| compositions(p, q, system).iter().all(CompositionReport::is_trivial))
    })
}

/// Simplifies a rule set until no rule's sides can be reduced by the
/// others: reducible left sides are replaced (or the rule dropped when both
/// sides meet), right sides are fully reduced, and duplicate left sides
/// keep the smaller right side.
fn interreduce(mut rules: Vec<Rule>) -> Result<Vec<Rule>> {
    loop {
        let mut changed = false;
        let mut next: Vec<Rule> = Vec::with_capacity(rules.len());
        for idx in 0..rules.len() {
            let rest: Vec<Rule> = rules
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != idx)
                .map(|(_, r)| r.clone())
                .collect();
            let rest = RewriteSystem::new(rest)?;
            let lhs = normal_form(rules[idx].lhs(), &rest);
            let rhs = normal_form(rules[idx].rhs(), &rest);
            if lhs != *rules[idx].lhs() || rhs != *rules[idx].rhs() {
                changed = true;
                if lhs != rhs {
                    next.push(Rule::oriented(lhs, rhs)?);
                }
            } else {
                next.push(rules[idx].clone());
            }
        }
        next.sort();
        next.dedup_by(|a, b| a.lhs() == b.lhs());
        rules = next;
        if !changed {
            return Ok(rules);
        }
    }
}

/// Knuth-Bendix style completion: repeatedly adds every unresolved critical
/// pair as a new oriented rule, interreducing between rounds, until the
/// system is closed.
///
/// # Errors
///
/// Reports the round and rule count when `max_rounds` passes do not reach a
/// closed system, rather than returning a partial result.
pub fn complete(system: &RewriteSystem, max_rounds: u32) -> Result<RewriteSystem> {
    if max_rounds < 1 {
        return Err(Error::IndexTooSmall {
            what: "completion round cap",
            min: 1,
            got: max_rounds as u64,
        });
    }
    let mut current = RewriteSystem::new(interreduce(system.rules().to_vec())?)?;
    for _ in 0..max_rounds {
        let mut additions: Vec<Rule> = Vec::new();
        for p in current.rules() {
            for q in current.rules() {
                for report in compositions(p, q, &current) {
                    if !report.is_trivial() {
                        additions.push(Rule::oriented(report.left, report.right)?);
                    }
                }
            }
        }
        if additions.is_empty() {
            return Ok(current);
        }
        let mut rules = current.rules().to_vec();
        rules.append(&mut additions);
        rules.sort();
        rules.dedup_by(|a, b| a.lhs() == b.lhs());
        current = RewriteSystem::new(interreduce(rules)?)?;
    }
    Err(Error::CompletionCap {
        rounds: max_rounds,
        rules: current.len(),
    })
}

fn alternating(first: u8, second: u8, letters: usize) -> Word {
    let mut out = Vec::with_capacity(letters);
    for i in 0..letters {
        out.push(if i % 2 == 0 { first } else { second });
    }
    Word::from_raw(out)
}

/// The defining rules of `W(m)`: the three involutions and the two braid
/// rules for the bonded pairs `(1, 2)` and `(2, 3)`; the pair `(1, 3)` is
/// unbonded. For even `m` the braid rule is `(12)^{m/2} -> (21)^{m/2}`; for
/// odd `m` it is `(12)^{(m-1)/2} 1 -> (21)^{(m-1)/2} 2`, and likewise for
/// `(2, 3)`.
///
/// # Errors
///
/// Rejects `m < 2`.
pub fn defining_rules(m: i64) -> Result<RewriteSystem> {
    if m < 2 {
        return Err(Error::UnsupportedM { m, min: 2 });
    }
    let letters = m as usize;
    let mut rules = vec![
        Rule::new(alternating(1, 1, 2), Word::empty())?,
        Rule::new(alternating(2, 2, 2), Word::empty())?,
        Rule::new(alternating(3, 3, 2), Word::empty())?,
        Rule::new(alternating(1, 2, letters), alternating(2, 1, letters))?,
        Rule::new(alternating(2, 3, letters), alternating(3, 2, letters))?,
    ];
    rules.sort();
    RewriteSystem::new(rules)
}

/// The closed rule system for `W(m)`: the defining rules, plus for even `m`
/// the one extra rule `(12)^{m/2 - 1} 1 (32)^{m/2} -> (21)^{m/2} 3
/// (23)^{m/2 - 1}` that completion adds. Closure is checked in debug
/// builds.
///
/// # Errors
///
/// Rejects `m < 3`.
///
/// ```
/// use rigidroots::rewrite::gs_basis;
///
/// let s3 = gs_basis(3).unwrap();
/// assert_eq!(
///     s3.to_string(),
///     "33 -> e\n22 -> e\n11 -> e\n232 -> 323\n121 -> 212\n",
/// );
/// ```
pub fn gs_basis(m: i64) -> Result<RewriteSystem> {
    if m < 3 {
        return Err(Error::UnsupportedM { m, min: 3 });
    }
    let mut rules = defining_rules(m)?.rules().to_vec();
    if m % 2 == 0 {
        let half = (m / 2) as usize;
        let mut lhs = alternating(1, 2, 2 * half - 1).letters().to_vec();
        lhs.extend_from_slice(alternating(3, 2, 2 * half).letters());
        let mut rhs = alternating(2, 1, 2 * half).letters().to_vec();
        rhs.push(3);
        rhs.extend_from_slice(alternating(2, 3, 2 * half - 2).letters());
        rules.push(Rule::new(Word::from_raw(lhs), Word::from_raw(rhs))?);
    }
    rules.sort();
    let system = RewriteSystem::new(rules)?;
    debug_assert!(is_closed(&system), "rule system for m={m} must be closed");
    Ok(system)
}
