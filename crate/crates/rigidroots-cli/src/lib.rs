//! Command-line front end for the root-word toolkit: root enumeration,
//! canonical sequence chains, levels, staircase and standard words,
//! rewriting, verification campaigns, and SVG figures.
//!
//! The entry point is [`run`], which parses an argument list, writes its
//! output to the supplied streams, and returns the process exit code:
//! `0` on success, `1` when a verification campaign reports failures, and
//! `2` on usage errors (bad flags, malformed roots, unsupported
//! parameters).

use clap::error::ErrorKind;
use clap::Parser;
use rigidroots::canseq::{all_canonical_data, level};
use rigidroots::rewrite::{complete, defining_rules, gs_basis, normal_form, RewriteSystem};
use rigidroots::roots::{classify, enumerate_reduced};
use rigidroots::stdwords::standard_word;
use rigidroots::verify::{
    verify_identities, verify_injectivity, verify_stdwords, CampaignReport,
};
use rigidroots::words::word_via_level;
use rigidroots::{Root, RootClass, Word};
use serde::Serialize;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

mod svg;

pub use svg::{emit_svg, render_svg};

#[derive(Parser)]
#[command(
    name = "rigidroots",
    version,
    about = "Exact root-word toolkit: reduced roots, canonical sequences, staircase words, normal forms, and verification campaigns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Subcommand)]
enum Command {
    /// Enumerate the reduced positive roots with a >= b up to an entry-sum
    /// bound.
    Roots {
        /// Group parameter m >= 2.
        #[arg(long)]
        m: i64,
        /// Inclusive bound on a + b.
        #[arg(long)]
        bound: u64,
        /// Structured output instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Print the canonical sequence chain of a reduced root with a >= b.
    Canseq {
        #[arg(long)]
        m: i64,
        /// The root as `a,b`, brackets optional.
        #[arg(long)]
        root: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the level of an imaginary reduced root and its thresholds.
    Level {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        root: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the depth-k staircase word of an imaginary reduced root.
    Word {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        root: String,
        /// Staircase depth, between 1 and the root's level.
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long)]
        json: bool,
    },
    /// Print the closed-form standard word of a reduced root with a >= b.
    Standard {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        root: String,
        #[arg(long)]
        json: bool,
    },
    /// Reduce a word to its normal form.
    Reduce {
        #[arg(long)]
        m: i64,
        /// The word as a digit string over {1,2,3}, or `e` for the empty
        /// word.
        #[arg(long)]
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the closed rewriting system for the group.
    GsBasis {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        json: bool,
    },
    /// Complete the defining rules and print the resulting closed system.
    Complete {
        #[arg(long)]
        m: i64,
        /// Cap on completion rounds.
        #[arg(long, default_value_t = 40)]
        rounds: u32,
        #[arg(long)]
        json: bool,
    },
    /// Run verification campaigns; exits 1 when any check fails.
    Verify {
        #[arg(long)]
        m: i64,
        /// Which campaign to run.
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Inclusive bound on a + b.
        #[arg(long, default_value_t = 100)]
        bound: u64,
        #[arg(long)]
        json: bool,
    },
    /// Write an SVG figure of the grid, segment, and labeled crossings.
    Svg {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        root: String,
        /// Output path for the SVG file.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Suite {
    /// Distinct roots keep distinct normal forms.
    Injectivity,
    /// Cross-module word identities.
    Identities,
    /// Closed-form standard words against the rewrite oracle.
    Stdwords,
    /// All campaigns in order.
    All,
}

#[derive(Serialize)]
struct RootEntry {
    root: String,
    class: RootClass,
}

#[derive(Serialize)]
struct RootsOut {
    m: i64,
    bound: u64,
    roots: Vec<RootEntry>,
}

#[derive(Serialize)]
struct ChainRow {
    k: u32,
    seq: Vec<u64>,
    n: u64,
    rho: String,
    #[serde(rename = "type")]
    ty: String,
}

#[derive(Serialize)]
struct ChainOut {
    m: i64,
    root: String,
    rows: Vec<ChainRow>,
}

#[derive(Serialize)]
struct LevelOut {
    m: i64,
    root: String,
    level: u32,
    gammas: Vec<String>,
}

#[derive(Serialize)]
struct WordOut {
    m: i64,
    root: String,
    k: u32,
    word: String,
}

#[derive(Serialize)]
struct StandardOut {
    m: i64,
    root: String,
    word: String,
}

#[derive(Serialize)]
struct ReduceOut {
    m: i64,
    word: String,
    normal_form: String,
}

#[derive(Serialize)]
struct SystemOut {
    m: i64,
    rules: RewriteSystem,
    count: usize,
}

fn parse_root(text: &str) -> anyhow::Result<Root> {
    text.parse()
        .map_err(|e| anyhow::anyhow!("invalid root {text:?}: {e}"))
}

fn parse_word(text: &str) -> anyhow::Result<Word> {
    text.parse()
        .map_err(|e| anyhow::anyhow!("invalid word {text:?}: {e}"))
}

fn seq_text(seq: &[u64]) -> String {
    let entries: Vec<String> = seq.iter().map(u64::to_string).collect();
    format!("({})", entries.join(", "))
}

fn print_json(out: &mut dyn Write, value: &impl Serialize) -> anyhow::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn print_system(
    out: &mut dyn Write,
    m: i64,
    system: RewriteSystem,
    json: bool,
) -> anyhow::Result<()> {
    if json {
        let count = system.len();
        print_json(out, &SystemOut { m, rules: system, count })
    } else {
        write!(out, "{system}")?;
        Ok(())
    }
}

fn run_suite(m: i64, suite: Suite, bound: u64) -> anyhow::Result<Vec<CampaignReport>> {
    let mut reports = Vec::new();
    if matches!(suite, Suite::Injectivity | Suite::All) {
        reports.push(verify_injectivity(m, bound)?);
    }
    if matches!(suite, Suite::Identities | Suite::All) {
        reports.push(verify_identities(m, bound)?);
    }
    if matches!(suite, Suite::Stdwords | Suite::All) {
        reports.push(verify_stdwords(m, bound)?);
    }
    Ok(reports)
}

fn execute(cli: Cli, out: &mut dyn Write) -> anyhow::Result<i32> {
    match cli.command {
        Command::Roots { m, bound, json } => {
            let roots = enumerate_reduced(m, bound);
            if json {
                let entries = roots
                    .iter()
                    .map(|r| RootEntry {
                        root: r.to_string(),
                        class: classify(m, r),
                    })
                    .collect();
                print_json(out, &RootsOut { m, bound, roots: entries })?;
            } else {
                for r in &roots {
                    writeln!(out, "{r} {}", classify(m, r))?;
                }
            }
            Ok(0)
        }
        Command::Canseq { m, root, json } => {
            let r = parse_root(&root)?;
            let chain = all_canonical_data(m, &r)?;
            if json {
                let rows = chain
                    .iter()
                    .enumerate()
                    .map(|(i, data)| ChainRow {
                        k: i as u32 + 1,
                        seq: data.seq.clone(),
                        n: data.n,
                        rho: data.rho.to_string(),
                        ty: data.ty.to_string(),
                    })
                    .collect();
                print_json(out, &ChainOut { m, root: r.to_string(), rows })?;
            } else {
                for (i, data) in chain.iter().enumerate() {
                    let k = i + 1;
                    writeln!(
                        out,
                        "c_{k} = {}, N_{k} = {}, rho_{k} = {}, type {}",
                        seq_text(&data.seq),
                        data.n,
                        data.rho,
                        data.ty
                    )?;
                }
            }
            Ok(0)
        }
        Command::Level { m, root, json } => {
            let r = parse_root(&root)?;
            let info = level(m, &r)?;
            if json {
                let gammas = info.gammas.iter().map(|g| g.to_string()).collect();
                print_json(
                    out,
                    &LevelOut { m, root: r.to_string(), level: info.level, gammas },
                )?;
            } else {
                writeln!(out, "level = {}", info.level)?;
                let gammas: Vec<String> =
                    info.gammas.iter().map(|g| g.to_string()).collect();
                writeln!(out, "gammas: {}", gammas.join(", "))?;
            }
            Ok(0)
        }
        Command::Word { m, root, k, json } => {
            let r = parse_root(&root)?;
            let word = word_via_level(m, &r, k)?;
            if json {
                print_json(
                    out,
                    &WordOut { m, root: r.to_string(), k, word: word.to_string() },
                )?;
            } else {
                writeln!(out, "{word}")?;
            }
            Ok(0)
        }
        Command::Standard { m, root, json } => {
            let r = parse_root(&root)?;
            let word = standard_word(m, &r)?;
            if json {
                print_json(
                    out,
                    &StandardOut { m, root: r.to_string(), word: word.to_string() },
                )?;
            } else {
                writeln!(out, "{word}")?;
            }
            Ok(0)
        }
        Command::Reduce { m, word, json } => {
            let w = parse_word(&word)?;
            let nf = normal_form(&w, &gs_basis(m)?);
            if json {
                print_json(
                    out,
                    &ReduceOut { m, word: w.to_string(), normal_form: nf.to_string() },
                )?;
            } else {
                writeln!(out, "{nf}")?;
            }
            Ok(0)
        }
        Command::GsBasis { m, json } => {
            print_system(out, m, gs_basis(m)?, json)?;
            Ok(0)
        }
        Command::Complete { m, rounds, json } => {
            let closed = complete(&defining_rules(m)?, rounds)?;
            print_system(out, m, closed, json)?;
            Ok(0)
        }
        Command::Verify { m, suite, bound, json } => {
            let reports = run_suite(m, suite, bound)?;
            if json {
                print_json(out, &reports)?;
            } else {
                for report in &reports {
                    writeln!(out, "{report}")?;
                }
            }
            Ok(if reports.iter().all(CampaignReport::passed) {
                0
            } else {
                1
            })
        }
        Command::Svg { m, root, out: path } => {
            let r = parse_root(&root)?;
            emit_svg(m, &r, &path)?;
            writeln!(out, "wrote {}", path.display())?;
            Ok(0)
        }
    }
}

/// Parses `args` (the zeroth entry is the program name), executes the
/// selected subcommand, and returns the process exit code. Normal output
/// goes to `out`, errors to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("rigidroots").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn reduce_applies_one_rule() {
        let (code, out, _) = capture(&["reduce", "--m", "3", "--word", "121"]);
        assert_eq!(code, 0);
        assert_eq!(out, "212\n");
    }

    #[test]
    fn canseq_prints_the_chain_rows() {
        let (code, out, _) = capture(&["canseq", "--m", "3", "--root", "59,23"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with("c_1 = (3, 3, 2, 3, 2, 3, 2, 3, 3,"));
        assert!(lines[0].ends_with("N_1 = 2, rho_1 = 13/23, type +"));
        assert_eq!(lines[3], "c_4 = (2), N_4 = 2, rho_4 = 0, type 0");
    }

    #[test]
    fn standard_accepts_bracketed_roots() {
        let (code, out, _) = capture(&["standard", "--m", "3", "--root", "[5,3]"]);
        assert_eq!(code, 0);
        assert_eq!(out, "31313231\n");
    }

    #[test]
    fn verify_failure_free_run_exits_zero() {
        let (code, out, _) = capture(&[
            "verify",
            "--m",
            "3",
            "--suite",
            "stdwords",
            "--bound",
            "40",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("all checks passed"));
    }

    #[test]
    fn usage_errors_exit_two() {
        let (code, _, err) = capture(&["reduce", "--m", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("--word"));
        let (code, _, err) = capture(&["level", "--m", "3", "--root", "5;3"]);
        assert_eq!(code, 2);
        assert!(err.contains("invalid root"));
        let (code, _, _) = capture(&["level", "--m", "1", "--root", "5,3"]);
        assert_eq!(code, 2);
        let (code, _, _) = capture(&["unknown-subcommand"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = capture(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("rigidroots"));
        assert!(out.contains("verify"));
    }

    #[test]
    fn json_outputs_parse() {
        let (code, out, _) = capture(&["standard", "--m", "3", "--root", "5,3", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["word"], "31313231");
        let (code, out, _) = capture(&["gs-basis", "--m", "4", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["rules"].as_array().unwrap().len() as u64, v["count"].as_u64().unwrap());
    }
}
