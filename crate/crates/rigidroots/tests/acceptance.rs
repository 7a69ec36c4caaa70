//! Acceptance gate: seven tests, one per acceptance item, each printing one
//! PASS or FAIL line per checked sub-item (run with `--nocapture` to see the
//! lines on success). A test panics at its end when any sub-item failed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rigidroots::canseq::{
    all_canonical_data, chain_to_first_sequence, first_sequence, level, reconstruct_root, SeqType,
};
use rigidroots::reflect::{check_dichotomy, cheb_f, cheb_g, tau_matrix, IntPolynomial};
use rigidroots::rewrite::{complete, defining_rules, gs_basis, is_closed, normal_form, RewriteSystem};
use rigidroots::roots::{classify, enumerate_reduced};
use rigidroots::stdwords::standard_word;
use rigidroots::verify::{verify_identities, verify_injectivity, verify_stdwords};
use rigidroots::words::{crossing_word, s_of_root, word_via_level};
use rigidroots::{Root, RootClass, Word};
use std::collections::BTreeSet;

/// Scale at which the normal-form and enumeration items run: inclusive
/// entry-sum bound per group parameter.
const SCALE: [(i64, u64); 6] = [(3, 300), (4, 200), (5, 200), (6, 200), (7, 120), (8, 120)];

struct Gate {
    item: &'static str,
    failures: usize,
}

impl Gate {
    fn new(item: &'static str) -> Self {
        Gate { item, failures: 0 }
    }

    fn check(&mut self, label: &str, ok: bool) {
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("{verdict} - item {}: {label}", self.item);
        if !ok {
            self.failures += 1;
        }
    }

    fn finish(self) {
        assert_eq!(
            self.failures, 0,
            "item {}: {} checks failed",
            self.item, self.failures
        );
    }
}

/// One expected chain row: sequence, base letter, fraction, and type symbol.
type ChainRow = (&'static [u64], u64, &'static str, &'static str);

fn chain_matches(m: i64, r: &Root, expected: &[ChainRow]) -> bool {
    let chain = match all_canonical_data(m, r) {
        Ok(chain) => chain,
        Err(_) => return false,
    };
    chain.len() == expected.len()
        && chain.iter().zip(expected).all(|(row, (seq, n, rho, ty))| {
            row.seq == *seq
                && row.n == *n
                && row.rho.to_string() == *rho
                && row.ty.to_string() == *ty
        })
}

#[test]
fn a1_worked_example_goldens() {
    let mut gate = Gate::new("1");

    let r = Root::new(5, 3);
    let s = s_of_root(&r).unwrap();
    gate.check(
        "reflection word of [5,3] is 2321232321232",
        s.to_string() == "2321232321232",
    );
    gate.check(
        "crossing word of [5,3] equals its reflection word",
        crossing_word(&r).unwrap() == s,
    );

    let chains: [(i64, Root, &[ChainRow]); 4] = [
        (
            3,
            Root::new(5, 3),
            &[(&[2, 2, 1], 1, "2/3", "+"), (&[2], 2, "0", "0")],
        ),
        (
            3,
            Root::new(8, 5),
            &[(&[2, 2, 1, 2, 1], 1, "3/5", "+"), (&[2, 1], 1, "1/2", "=")],
        ),
        (
            3,
            Root::new(59, 23),
            &[
                (
                    &[3, 3, 2, 3, 2, 3, 2, 3, 3, 2, 3, 2, 3, 2, 3, 3, 2, 3, 2, 3, 2, 3, 2],
                    2,
                    "13/23",
                    "+",
                ),
                (&[2, 1, 1, 2, 1, 1, 2, 1, 1, 1], 1, "3/10", "-"),
                (&[2, 2, 3], 2, "1/3", "-"),
                (&[2], 2, "0", "0"),
            ],
        ),
        (
            5,
            Root::new(62, 13),
            &[
                (&[5, 5, 5, 5, 4, 5, 5, 5, 4, 5, 5, 5, 4], 4, "10/13", "+"),
                (&[4, 3, 3], 3, "1/3", "-"),
                (&[2], 2, "0", "0"),
            ],
        ),
    ];
    for (m, root, expected) in &chains {
        gate.check(
            &format!("canonical chain of {root} at m = {m} matches verbatim"),
            chain_matches(*m, root, expected),
        );
    }

    let levels = [(3i64, Root::new(339, 130), 3u32), (6, Root::new(73, 13), 2), (5, Root::new(62, 13), 2)];
    for (m, root, want) in &levels {
        gate.check(
            &format!("level of {root} at m = {m} is {want}"),
            level(*m, root).map(|info| info.level) == Ok(*want),
        );
    }

    let words = [
        (3i64, Root::new(5, 3), "31313231".to_string()),
        (3, Root::new(17, 7), "21321323123131".to_string()),
        (3, Root::new(13, 5), "13231231".to_string()),
        (
            4,
            Root::new(85, 23),
            format!("1{}3231{}231", "2321".repeat(2), "2321".repeat(2)),
        ),
        (
            6,
            Root::new(73, 13),
            format!("2{v2}{v1}{v2}{v1}{v2}1", v1 = "121213", v2 = "1213"),
        ),
    ];
    for (m, root, want) in &words {
        gate.check(
            &format!("standard word of {root} at m = {m}"),
            standard_word(*m, root).map(|w| w.to_string()) == Ok(want.clone()),
        );
    }

    let depth_two = format!("{}31{}31{}31", "21".repeat(4), "21".repeat(3), "21".repeat(3));
    gate.check(
        "depth-2 staircase word of [62,13] at m = 5",
        word_via_level(5, &Root::new(62, 13), 2).map(|w| w.to_string()) == Ok(depth_two),
    );

    gate.finish();
}

fn rule_set(system: &RewriteSystem) -> BTreeSet<(String, String)> {
    system
        .rules()
        .iter()
        .map(|rule| (rule.lhs().to_string(), rule.rhs().to_string()))
        .collect()
}

#[test]
fn a2_closed_rewriting_systems() {
    let mut gate = Gate::new("2");
    for m in 3..=10 {
        let closed = complete(&defining_rules(m).unwrap(), 40).unwrap();
        let basis = gs_basis(m).unwrap();
        gate.check(
            &format!("completion of the defining rules equals the closed basis, m = {m}"),
            rule_set(&closed) == rule_set(&basis),
        );
        let defining = rule_set(&defining_rules(m).unwrap());
        let extra = rule_set(&basis)
            .into_iter()
            .filter(|rule| !defining.contains(rule))
            .count();
        let want = usize::from(m % 2 == 0);
        gate.check(
            &format!("non-defining rule count is {want}, m = {m}"),
            extra == want,
        );
    }
    for m in 3..=12 {
        gate.check(
            &format!("the closed basis has only trivial compositions, m = {m}"),
            is_closed(&gs_basis(m).unwrap()),
        );
    }
    gate.finish();
}

#[test]
fn a3_distinct_normal_forms_at_scale() {
    let mut gate = Gate::new("3");
    for (m, bound) in SCALE {
        let report = verify_injectivity(m, bound).unwrap();
        let roots = report.counts.get("roots").copied().unwrap_or(0);
        gate.check(
            &format!("zero normal-form collisions, m = {m}, a+b <= {bound} ({roots} roots)"),
            report.passed(),
        );
    }
    gate.finish();
}

#[test]
fn a4_oracle_equivalences() {
    let mut gate = Gate::new("4");
    for (m, bound) in SCALE {
        let report = verify_stdwords(m, bound).unwrap();
        gate.check(
            &format!("closed-form standard words equal rewrite normal forms, m = {m}, a+b <= {bound}"),
            report.passed(),
        );
    }

    let mut crossings_ok = true;
    let mut pairs = 0u64;
    for a in 1u64..200 {
        for b in 1..=(200 - a) {
            if a.gcd(&b) != 1 {
                continue;
            }
            pairs += 1;
            let r = Root::new(a, b);
            if crossing_word(&r).unwrap() != s_of_root(&r).unwrap() {
                crossings_ok = false;
            }
        }
    }
    gate.check(
        &format!("crossing words equal reflection words, a+b <= 200 ({pairs} pairs)"),
        crossings_ok,
    );

    for m in 3..=6 {
        let basis = gs_basis(m).unwrap();
        let mut ok = true;
        let mut roots = 0u64;
        for r in enumerate_reduced(m, 100) {
            if classify(m, &r) != RootClass::ImaginaryPositive {
                continue;
            }
            roots += 1;
            let l = level(m, &r).unwrap().level;
            let base = normal_form(&word_via_level(m, &r, 1).unwrap(), &basis);
            for k in 2..=l {
                if normal_form(&word_via_level(m, &r, k).unwrap(), &basis) != base {
                    ok = false;
                }
            }
        }
        gate.check(
            &format!("staircase words of every depth share one normal form, m = {m} ({roots} roots)"),
            ok,
        );
    }
    gate.finish();
}

#[test]
fn a5_conjugation_identities() {
    let mut gate = Gate::new("5");
    for m in 3..=6 {
        let report = verify_identities(m, 150).unwrap();
        let roots = report.counts.get("imaginary roots").copied().unwrap_or(0);
        gate.check(
            &format!("conjugation identities hold by normal-form equality, m = {m}, a+b <= 150 ({roots} roots)"),
            report.passed(),
        );
    }
    gate.finish();
}

fn certified_largest_root(poly: &IntPolynomial, point: f64) -> bool {
    let center = BigRational::from_float(point).expect("finite point");
    let eps = BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000i64));
    let lo = poly.eval_rational(&(&center - &eps));
    let hi = poly.eval_rational(&(&center + &eps));
    if lo.is_zero() || hi.is_zero() || lo.is_positive() == hi.is_positive() {
        return false;
    }
    let step = BigRational::new(BigInt::from(1), BigInt::from(100));
    let two = BigRational::from_integer(BigInt::from(2));
    let mut q = &(&center + &step) + &step;
    while q <= two {
        if !poly.eval_rational(&q).is_positive() {
            return false;
        }
        q = &q + &step;
    }
    true
}

#[test]
fn a6_matrix_ladders_and_orientation_split() {
    let mut gate = Gate::new("6");
    let x = IntPolynomial::x();
    let p = IntPolynomial::from_coeffs;
    let f = |k: i64| {
        if k == -1 {
            IntPolynomial::constant(-3)
        } else {
            cheb_f(u32::try_from(k).expect("index"))
        }
    };
    let h = |k: u32| &f(i64::from(k)).scaled(3) + &f(i64::from(k) - 1);
    let h_sum = |hi: i64| {
        let mut acc = IntPolynomial::zero();
        for k in 1..=hi.max(0) {
            acc = &acc + &h(k as u32);
        }
        acc
    };

    let mut bottom_ok = true;
    for n in 2..=12u32 {
        let tau = tau_matrix(n);
        let n_i = i64::from(n);
        bottom_ok &= *tau.entry(0, 0) == p(&[-1]) && *tau.entry(0, 1) == x && *tau.entry(0, 2) == p(&[2]);

        let first = &(&(-&f(n_i - 1)) * &p(&[2, 0, 1]))
            - &(&IntPolynomial::constant(2) + &h_sum(n_i - 2));
        bottom_ok &= *tau.entry(2, 0) == first;
        let second = -&(&(&(&x * &cheb_g(n)) + &IntPolynomial::constant(2)) + &h_sum(n_i - 1));
        bottom_ok &= *tau.entry(2, 0) == second;

        let scaled_first = &(&(&p(&[1, 0, 1, 0, 1]) * &f(n_i - 1)) + &f(n_i - 2))
            + &(&p(&[0, 0, 2]) + &(&p(&[0, 0, 1]) * &h_sum(n_i - 2)));
        bottom_ok &= &x * tau.entry(2, 1) == scaled_first;
        let second = &(&(&p(&[-1, 0, 1]) * &cheb_g(n)) + &p(&[0, 2])) + &(&x * &h_sum(n_i - 1));
        bottom_ok &= *tau.entry(2, 1) == second;

        let first = &(&(&(&p(&[2, 0, 3]) * &f(n_i - 1)) + &f(n_i - 2).scaled(5))
            + &(&f(n_i - 3).scaled(2) + &IntPolynomial::constant(4)))
            + &h_sum(n_i - 3).scaled(2);
        bottom_ok &= *tau.entry(2, 2) == first;
        let scaled_second = &(&(&(&p(&[0, 0, 3]) * &cheb_g(n))
            + &(&cheb_g(n).scaled(5) + &cheb_g(n - 1).scaled(7)))
            + &(&cheb_g(n - 2).scaled(2) + &p(&[0, 4])))
            + (&(&x * &h_sum(n_i - 2)).scaled(2));
        bottom_ok &= &x * tau.entry(2, 2) == scaled_second;
    }
    gate.check(
        "product-matrix rows match the ladder closed forms, n = 2..12",
        bottom_ok,
    );

    let mut rec_ok = true;
    for n in 0..=20u32 {
        rec_ok &= cheb_g(n + 1) == &(&x * &cheb_f(n)) - &cheb_g(n);
    }
    for n in 1..=20u32 {
        rec_ok &= cheb_f(n) == &(&x * &cheb_g(n)) - &cheb_f(n - 1);
        rec_ok &= cheb_g(n + 1) == &(&p(&[-1, 0, 1]) * &cheb_g(n)) - &(&x * &cheb_f(n - 1));
        rec_ok &= &x * &cheb_g(n + 1) == &(&p(&[-1, 0, 1]) * &cheb_f(n)) - &cheb_f(n - 1);
    }
    gate.check("ladder recurrences hold exactly, n <= 20", rec_ok);

    let mut roots_ok = true;
    for n in 1..=12u32 {
        let g_point = 2.0 * (std::f64::consts::PI / (2.0 * f64::from(n))).cos();
        let f_point = 2.0 * (std::f64::consts::PI / (2.0 * f64::from(n) + 1.0)).cos();
        roots_ok &= certified_largest_root(&cheb_g(n), g_point);
        roots_ok &= certified_largest_root(&cheb_f(n), f_point);
    }
    gate.check(
        "largest ladder roots sit at the half-angle points within 1e-9, n <= 12",
        roots_ok,
    );

    for m in 3..=8 {
        let outcome = check_dichotomy(m, 100).unwrap();
        gate.check(
            &format!(
                "orientation split of root vectors is clean, m = {m}, a+b <= 100 ({} comparisons)",
                outcome.checked
            ),
            outcome.passed(),
        );
    }
    gate.finish();
}

fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<u8> = (0..len).map(|_| rng.gen_range(1..=3u8)).collect();
    Word::new(&letters).expect("letters are in range")
}

#[test]
fn a7_property_suites() {
    let mut gate = Gate::new("7");

    for m in 3..=8i64 {
        let basis = gs_basis(m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0xACCE97 + m as u64);
        let mut ok = true;
        for _ in 0..10_000 {
            let u = random_word(&mut rng, 30);
            let v = random_word(&mut rng, 30);
            let nf_u = normal_form(&u, &basis);
            ok &= normal_form(&nf_u, &basis) == nf_u;
            let nf_v = normal_form(&v, &basis);
            ok &= normal_form(&u.concat(&v), &basis) == normal_form(&nf_u.concat(&nf_v), &basis);
        }
        gate.check(
            &format!("normal form is idempotent and a congruence on 10^4 random words, m = {m}"),
            ok,
        );
    }

    let mut palindrome_ok = true;
    let mut pairs = 0u64;
    for a in 1u64..150 {
        for b in 1..=(150 - a) {
            if a.gcd(&b) != 1 {
                continue;
            }
            pairs += 1;
            let w = s_of_root(&Root::new(a, b)).unwrap();
            palindrome_ok &= w.is_palindrome() && w.len() as u64 == 2 * (a + b) - 3;
        }
    }
    gate.check(
        &format!("reflection words are odd-length palindromes, a+b <= 150 ({pairs} pairs)"),
        palindrome_ok,
    );

    for (m, bound) in SCALE {
        let mut rebuild_ok = true;
        let mut invariants_ok = true;
        let mut roots = 0u64;
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        for r in enumerate_reduced(m, bound) {
            if classify(m, &r) != RootClass::ImaginaryPositive {
                continue;
            }
            roots += 1;
            let c1 = first_sequence(&r).unwrap();
            let chain = all_canonical_data(m, &r).unwrap();
            rebuild_ok &= reconstruct_root(&c1) == r;
            rebuild_ok &= chain_to_first_sequence(&chain).unwrap() == c1;

            let l = level(m, &r).unwrap().level as usize;
            if chain.len() < l {
                invariants_ok = false;
                continue;
            }
            if l >= 2 && chain[0].n != (m - 1) as u64 {
                invariants_ok = false;
            }
            for k in 2..l {
                if chain[k - 1].n != (m - 2) as u64 {
                    invariants_ok = false;
                }
            }
            for k in 1..l {
                if chain[k - 1].ty != SeqType::Plus {
                    invariants_ok = false;
                }
            }
            let last = &chain[l - 1];
            let delta = i64::from(l == 1);
            let cap = (m - 2 + delta) as u64;
            let sum = BigRational::from_integer(BigInt::from(last.n)) + last.rho.clone();
            if sum > BigRational::from_integer(BigInt::from(cap)) + half.clone() {
                invariants_ok = false;
            }
            if last.n == cap && last.ty == SeqType::Plus {
                invariants_ok = false;
            }
            if l >= 2 && last.n == 1 && last.ty == SeqType::Zero {
                invariants_ok = false;
            }
        }
        gate.check(
            &format!("chains rebuild their roots and first sequences, m = {m}, a+b <= {bound} ({roots} roots)"),
            rebuild_ok,
        );
        gate.check(
            &format!("chain letter, type, and tail constraints hold, m = {m}, a+b <= {bound}"),
            invariants_ok,
        );
    }
    gate.finish();
}
