//! Verification campaigns tying the modules together: distinctness of the
//! normal forms attached to reduced roots, the cross-module word
//! identities, and the closed-form standard words, each scanned over every
//! reduced root up to a configurable entry-sum bound.
//!
//! Campaigns are deterministic: roots are visited in the enumeration order
//! and reports are merged by that order, regardless of how many worker
//! threads run. Set `RIGIDROOTS_THREADS` to cap the parallelism.

use crate::canseq::{all_canonical_data, level, reconstruct_root};
use crate::error::{Error, Result};
use crate::reflect::check_dichotomy;
use crate::rewrite::{gs_basis, normal_form, RewriteSystem};
use crate::roots::{classify, enumerate_reduced, fib, weyl_sigma1, weyl_sigma2, Root, RootClass};
use crate::stdwords::standard_word;
use crate::words::{dyck_word, real_root_word, s_of_root, word_corollary415, word_via_level, Word};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt;

/// Root vectors overflow `f64` well before the word machinery slows down,
/// so the orientation-split confirmation is capped at this entry sum.
const ORIENTATION_CAP: u64 = 100;

/// One failed check, with enough data to reproduce it by hand.
#[derive(Clone, Debug, serde::Serialize)]
pub struct Failure {
    /// Name of the check that failed.
    pub check: String,
    /// The root (or root pair) the check ran on, in `[a,b]` form.
    pub root: String,
    /// The words and normal forms involved.
    pub detail: String,
}

/// Outcome of one verification campaign.
#[derive(Clone, Debug, serde::Serialize)]
pub struct CampaignReport {
    /// Which campaign ran.
    pub campaign: String,
    /// The group parameter.
    pub m: i64,
    /// The inclusive bound on `a + b`.
    pub bound: u64,
    /// How many roots and identities were checked, by kind.
    pub counts: BTreeMap<String, u64>,
    /// Every failed check; empty on a correct build.
    pub failures: Vec<Failure>,
}

impl CampaignReport {
    /// True when every check passed.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CampaignReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "campaign {} (m = {}, bound = {})",
            self.campaign, self.m, self.bound
        )?;
        for (what, n) in &self.counts {
            writeln!(f, "  {what}: {n}")?;
        }
        if self.passed() {
            write!(f, "  all checks passed")
        } else {
            for failure in &self.failures {
                writeln!(
                    f,
                    "  FAIL {} at {}: {}",
                    failure.check, failure.root, failure.detail
                )?;
            }
            write!(f, "  failures: {}", self.failures.len())
        }
    }
}

/// Runs `f` under a thread pool capped by `RIGIDROOTS_THREADS` when that
/// variable holds a positive integer, and on the default pool otherwise.
fn with_thread_cap<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let cap = std::env::var("RIGIDROOTS_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1);
    match cap {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("verification thread pool")
            .install(f),
        None => f(),
    }
}

fn campaign_inputs(m: i64, bound: u64) -> Result<RewriteSystem> {
    if m < 3 {
        return Err(Error::UnsupportedM { m, min: 3 });
    }
    if bound < 2 {
        return Err(Error::IndexTooSmall {
            what: "campaign bound",
            min: 2,
            got: bound,
        });
    }
    gs_basis(m)
}

/// Records a failure for every normal form seen more than once.
fn collision_scan(pairs: &[(Root, Word)], check: &str, failures: &mut Vec<Failure>) -> u64 {
    let mut seen: BTreeMap<&Word, &Root> = BTreeMap::new();
    for (root, nf) in pairs {
        match seen.get(nf) {
            Some(first) => failures.push(Failure {
                check: check.to_string(),
                root: root.to_string(),
                detail: format!("normal form {nf} already names {first}"),
            }),
            None => {
                seen.insert(nf, root);
            }
        }
    }
    pairs.len() as u64
}

/// Checks that distinct reduced roots keep distinct normal forms, two ways:
/// the staircase words of the `a >= b` roots, and the reflection words of
/// every root in both orientations. The split between the `a > b` and
/// `a < b` families is confirmed independently through the coordinate
/// dichotomy of [`check_dichotomy`], capped at an entry sum of 100 to stay
/// inside `f64` range.
///
/// # Errors
///
/// Rejects `m < 3` and `bound < 2`.
pub fn verify_injectivity(m: i64, bound: u64) -> Result<CampaignReport> {
    let basis = campaign_inputs(m, bound)?;
    let roots = enumerate_reduced(m, bound);
    let staircase: Vec<(Root, Word)> = with_thread_cap(|| {
        roots
            .par_iter()
            .map(|r| Ok((r.clone(), normal_form(&dyck_word(r)?, &basis))))
            .collect::<Result<_>>()
    })?;
    let reflections: Vec<(Root, Word)> = with_thread_cap(|| {
        roots
            .par_iter()
            .map(|r| {
                let mut both = vec![(r.clone(), normal_form(&s_of_root(r)?, &basis))];
                if r.a() != r.b() {
                    let mirrored = r.swapped();
                    let nf = normal_form(&s_of_root(&mirrored)?, &basis);
                    both.push((mirrored, nf));
                }
                Ok(both)
            })
            .collect::<Result<Vec<Vec<_>>>>()
    })?
    .into_iter()
    .flatten()
    .collect();

    let mut failures = Vec::new();
    let staircase_checked = collision_scan(&staircase, "staircase-injectivity", &mut failures);
    let reflection_checked = collision_scan(&reflections, "reflection-injectivity", &mut failures);
    let dichotomy = check_dichotomy(m, bound.min(ORIENTATION_CAP))?;
    for violation in &dichotomy.violations {
        failures.push(Failure {
            check: "orientation-split".to_string(),
            root: violation.root.to_string(),
            detail: format!("coordinates {}", violation.vector),
        });
    }

    let mut counts = BTreeMap::new();
    counts.insert("roots".to_string(), roots.len() as u64);
    counts.insert("staircase words".to_string(), staircase_checked);
    counts.insert("reflection words".to_string(), reflection_checked);
    counts.insert("orientation comparisons".to_string(), dichotomy.checked);
    Ok(CampaignReport {
        campaign: "injectivity".to_string(),
        m,
        bound,
        counts,
        failures,
    })
}

#[derive(Default)]
struct IdentityTally {
    level_forms: u64,
    conjugated_forms: u64,
    shifts: u64,
    reflections: u64,
    failures: Vec<Failure>,
}

fn identity_checks(m: i64, r: &Root, basis: &RewriteSystem) -> Result<IdentityTally> {
    let mut tally = IdentityTally::default();
    let name = r.to_string();
    let fail = |tally: &mut IdentityTally, check: &str, detail: String| {
        tally.failures.push(Failure {
            check: check.to_string(),
            root: name.clone(),
            detail,
        });
    };

    let base_nf = normal_form(&dyck_word(r)?, basis);
    let info = level(m, r)?;
    let chain = all_canonical_data(m, r)?;

    for k in 1..=info.level {
        let w = word_via_level(m, r, k)?;
        let nf = normal_form(&w, basis);
        if nf != base_nf {
            fail(
                &mut tally,
                "level-form",
                format!("depth {k} word {w} reduces to {nf}, expected {base_nf}"),
            );
        }
        tally.level_forms += 1;
    }

    for k in 2..=info.level {
        let w = word_corollary415(m, r, k)?;
        let nf = normal_form(&w, basis);
        if nf != base_nf {
            fail(
                &mut tally,
                "conjugated-form",
                format!("depth {k} conjugate {w} reduces to {nf}, expected {base_nf}"),
            );
        }
        tally.conjugated_forms += 1;

        if k % 2 == 1 {
            let bumped: Vec<u64> = chain[(k - 1) as usize].seq.iter().map(|e| e + 1).collect();
            let shifted = reconstruct_root(&bumped);
            let reps = ((k - 1) / 2) as usize;
            let left = Word::new(&[2, 3, 1])?.repeated(reps);
            let right = Word::new(&[1, 3, 2])?.repeated(reps);
            let conjugated = normal_form(&left.concat(&dyck_word(r)?).concat(&right), basis);
            let shifted_nf = normal_form(&dyck_word(&shifted)?, basis);
            if conjugated != shifted_nf {
                fail(
                    &mut tally,
                    "conjugate-shift",
                    format!("conjugate reduces to {conjugated}, shifted root {shifted} gives {shifted_nf}"),
                );
            }
            let shifted_level = level(m, &shifted)?.level;
            if shifted_level != info.level - k + 1 {
                fail(
                    &mut tally,
                    "conjugate-shift-level",
                    format!(
                        "shifted root {shifted} has level {shifted_level}, expected {}",
                        info.level - k + 1
                    ),
                );
            }
            tally.shifts += 2;
        }
    }

    let reflection = s_of_root(r)?;
    let image = weyl_sigma1(m, &weyl_sigma2(m, r));
    let wrapped = Word::new(&[3, 2, 1])?
        .concat(&reflection)
        .concat(&Word::new(&[1, 2, 3])?);
    let lhs = normal_form(&wrapped, basis);
    let rhs = normal_form(&s_of_root(&image)?, basis);
    if lhs != rhs {
        fail(
            &mut tally,
            "reflection-conjugation",
            format!("wrapped word reduces to {lhs}, image root {image} gives {rhs}"),
        );
    }
    tally.reflections += 1;

    Ok(tally)
}

/// Checks the word identities on every imaginary reduced root with
/// `a >= b` and `a + b <= bound`: all staircase depths share one normal
/// form, the conjugated depth forms agree with it, the odd-depth conjugate
/// names the bumped-sequence root whose level drops by `k - 1`, and
/// wrapping a reflection word in `321 ... 123` lands on the reflection word
/// of the Weyl image. Real closed-form words are confirmed to be fixed
/// points of [`normal_form`].
///
/// # Errors
///
/// Rejects `m < 3` and `bound < 2`.
pub fn verify_identities(m: i64, bound: u64) -> Result<CampaignReport> {
    let basis = campaign_inputs(m, bound)?;
    let imaginary: Vec<Root> = enumerate_reduced(m, bound)
        .into_iter()
        .filter(|r| classify(m, r) == RootClass::ImaginaryPositive)
        .collect();
    let tallies: Vec<IdentityTally> = with_thread_cap(|| {
        imaginary
            .par_iter()
            .map(|r| identity_checks(m, r, &basis))
            .collect::<Result<_>>()
    })?;

    let mut counts = BTreeMap::new();
    let mut failures = Vec::new();
    let add = |counts: &mut BTreeMap<String, u64>, what: &str, n: u64| {
        *counts.entry(what.to_string()).or_insert(0) += n;
    };
    add(&mut counts, "imaginary roots", imaginary.len() as u64);
    for mut tally in tallies {
        add(&mut counts, "staircase depth forms", tally.level_forms);
        add(&mut counts, "conjugated depth forms", tally.conjugated_forms);
        add(&mut counts, "odd-depth shifts", tally.shifts);
        add(&mut counts, "reflection conjugations", tally.reflections);
        failures.append(&mut tally.failures);
    }

    let mut real_fixed = 0;
    for n in 2.. {
        let root = Root::new(fib(m, n), fib(m, n - 1));
        if root.sum() > bound.into() {
            break;
        }
        let w = real_root_word(m, n)?;
        let nf = normal_form(&w, &basis);
        if nf != w {
            failures.push(Failure {
                check: "real-word-fixed".to_string(),
                root: root.to_string(),
                detail: format!("closed form {w} reduces to {nf}"),
            });
        }
        real_fixed += 1;
    }
    add(&mut counts, "real closed forms", real_fixed);

    Ok(CampaignReport {
        campaign: "identities".to_string(),
        m,
        bound,
        counts,
        failures,
    })
}

/// The words a standard word of the given level may start with.
fn starting_words(level: u32) -> Vec<Word> {
    let parse = |texts: &[&str]| -> Vec<Word> {
        texts.iter().map(|t| t.parse().expect("literal")).collect()
    };
    let l132: Word = "132".parse().expect("literal");
    match level {
        1 => parse(&["2131", "2132", "2321", "2323", "31", "3231", "3232"]),
        2 => parse(&["12121", "12123", "12321", "13231", "21212", "21213"]),
        odd if odd % 2 == 1 => {
            let x = l132
                .repeated(((odd - 2) / 2) as usize)
                .concat(&"1".parse().expect("literal"));
            parse(&["2323", "31", "3231", "3232"])
                .into_iter()
                .map(|tail| x.concat(&tail))
                .collect()
        }
        even => {
            let x = l132
                .repeated(((even - 2) / 2) as usize)
                .concat(&"1".parse().expect("literal"));
            let y = l132
                .repeated(((even - 4) / 2) as usize)
                .concat(&"13".parse().expect("literal"));
            parse(&["1212", "1213", "13", "2121", "2123"])
                .into_iter()
                .map(|tail| y.concat(&tail))
                .chain(
                    parse(&["2121", "2123", "2321", "3231"])
                        .into_iter()
                        .map(|tail| x.concat(&tail)),
                )
                .collect()
        }
    }
}

/// Checks the closed-form standard words on every reduced root with
/// `a >= b` and `a + b <= bound`: each equals the rewrite normal form of
/// the staircase word, and each imaginary root's word begins with one of
/// the starting words allowed at its level.
///
/// # Errors
///
/// Rejects `m < 3` and `bound < 2`.
pub fn verify_stdwords(m: i64, bound: u64) -> Result<CampaignReport> {
    let basis = campaign_inputs(m, bound)?;
    let roots = enumerate_reduced(m, bound);
    let outcomes: Vec<(u64, Vec<Failure>)> = with_thread_cap(|| {
        roots
            .par_iter()
            .map(|r| {
                let mut failures = Vec::new();
                let word = standard_word(m, r)?;
                let nf = normal_form(&dyck_word(r)?, &basis);
                if word != nf {
                    failures.push(Failure {
                        check: "standard-vs-rewrite".to_string(),
                        root: r.to_string(),
                        detail: format!("closed form {word}, rewrite gives {nf}"),
                    });
                }
                let mut taxonomy = 0;
                if classify(m, r) == RootClass::ImaginaryPositive {
                    let info = level(m, r)?;
                    let allowed = starting_words(info.level);
                    if !allowed
                        .iter()
                        .any(|prefix| word.letters().starts_with(prefix.letters()))
                    {
                        failures.push(Failure {
                            check: "starting-word".to_string(),
                            root: r.to_string(),
                            detail: format!(
                                "word {word} at level {} starts with none of the allowed words",
                                info.level
                            ),
                        });
                    }
                    taxonomy = 1;
                }
                Ok((taxonomy, failures))
            })
            .collect::<Result<_>>()
    })?;

    let mut counts = BTreeMap::new();
    counts.insert("roots".to_string(), roots.len() as u64);
    let mut failures = Vec::new();
    let mut taxonomy_checks = 0;
    for (taxonomy, mut fails) in outcomes {
        taxonomy_checks += taxonomy;
        failures.append(&mut fails);
    }
    counts.insert("starting-word checks".to_string(), taxonomy_checks);
    Ok(CampaignReport {
        campaign: "standard-words".to_string(),
        m,
        bound,
        counts,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn injectivity_campaign_is_clean_at_small_scale() {
        for m in [3i64, 4] {
            let report = verify_injectivity(m, 60).unwrap();
            assert!(report.passed(), "m={m}: {report}");
            assert!(report.counts["roots"] > 0);
            assert_eq!(
                report.counts["reflection words"],
                2 * report.counts["roots"] - 1,
                "every root except [1,1] is checked in both orientations"
            );
        }
    }

    #[test]
    fn identities_campaign_is_clean_at_small_scale() {
        for m in [3i64, 5] {
            let report = verify_identities(m, 60).unwrap();
            assert!(report.passed(), "m={m}: {report}");
            assert!(report.counts["imaginary roots"] > 0);
            assert!(report.counts["reflection conjugations"] > 0);
            assert!(report.counts["real closed forms"] > 0);
        }
    }

    #[test]
    fn stdwords_campaign_is_clean_at_small_scale() {
        for m in [3i64, 6] {
            let report = verify_stdwords(m, 60).unwrap();
            assert!(report.passed(), "m={m}: {report}");
            assert_eq!(report.counts["roots"], {
                enumerate_reduced(m, 60).len() as u64
            });
        }
    }

    #[test]
    fn identities_cover_deep_chains() {
        // [34,13] has level 3 at m = 3, so the odd-depth shift at k = 3
        // runs within this bound, including the level drop of the bumped
        // root.
        let report = verify_identities(3, 60).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.counts["odd-depth shifts"] >= 2, "{report}");
    }

    #[test]
    fn collision_scan_reports_duplicates() {
        let word: Word = "121".parse().unwrap();
        let pairs = vec![
            (Root::new(5, 3), word.clone()),
            (Root::new(7, 2), word.clone()),
        ];
        let mut failures = Vec::new();
        let checked = collision_scan(&pairs, "self-test", &mut failures);
        assert_eq!(checked, 2);
        assert_eq!(failures.len(), 1);
        assert_eq!(failures[0].check, "self-test");
        assert!(failures[0].detail.contains("[5,3]"));
    }

    #[test]
    fn reports_serialize_and_render() {
        let report = verify_stdwords(3, 30).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"campaign\":\"standard-words\""));
        assert!(json.contains("\"failures\":[]"));
        let text = report.to_string();
        assert!(text.contains("all checks passed"), "{text}");
    }

    #[test]
    fn campaigns_reject_bad_parameters() {
        assert!(matches!(
            verify_injectivity(2, 50),
            Err(Error::UnsupportedM { .. })
        ));
        assert!(matches!(
            verify_identities(3, 1),
            Err(Error::IndexTooSmall { .. })
        ));
    }

    #[test]
    fn starting_words_cover_the_worked_examples() {
        let sw = |m: i64, a: i64, b: i64| standard_word(m, &Root::new(a, b)).unwrap();
        let starts = |w: &Word, level: u32| {
            starting_words(level)
                .iter()
                .any(|p| w.letters().starts_with(p.letters()))
        };
        assert!(starts(&sw(3, 5, 3), 1));
        assert!(starts(&sw(3, 17, 7), 1));
        assert!(starts(&sw(5, 62, 13), 2));
        assert!(starts(&sw(3, 339, 130), 3));
        assert!(starts(&sw(3, 577, 221), 4));
    }
}
