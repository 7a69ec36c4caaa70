//! Exact arithmetic on the rank-2 root lattice: membership, classification,
//! the two simple-reflection actions, orbit minimization, and enumeration.
//!
//! A lattice point is written `[a, b]`. For a group parameter `m >= 2` the
//! point is a root exactly when the quadratic form `a^2 + b^2 - m*a*b` is at
//! most 1; it is real when the form equals 1 and imaginary when the form is
//! nonpositive. Real positive roots are precisely the consecutive pairs
//! `[F_{n+1}, F_n]` and `[F_n, F_{n+1}]` of the sequence `F_0 = 0, F_1 = 1,
//! F_n = m*F_{n-1} - F_{n-2}`.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// A point `[a, b]` of the rank-2 root lattice.
///
/// Entries are arbitrary-precision integers; predicates such as
/// [`is_root`] and [`classify`] give them meaning for a particular `m`.
///
/// ```
/// use rigidroots::roots::Root;
///
/// let r = Root::new(5, 3);
/// assert_eq!(r.to_string(), "[5,3]");
/// assert_eq!("[5,3]".parse::<Root>().unwrap(), r);
/// assert_eq!("5,3".parse::<Root>().unwrap(), r);
/// ```
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    a: BigInt,
    b: BigInt,
}

impl Root {
    /// Builds the lattice point `[a, b]`.
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Root {
            a: a.into(),
            b: b.into(),
        }
    }

    /// First entry.
    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// Second entry.
    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// The mirrored point `[b, a]`.
    pub fn swapped(&self) -> Root {
        Root {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// Entry sum `a + b`.
    pub fn sum(&self) -> BigInt {
        &self.a + &self.b
    }

    /// True when both entries are at least 1.
    pub fn is_positive_pair(&self) -> bool {
        self.a.is_positive() && self.b.is_positive()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Root({self})")
    }
}

impl FromStr for Root {
    type Err = Error;

    /// Parses `"a,b"` or `"[a,b]"`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(trimmed);
        let err = || Error::Parse {
            what: "root",
            input: s.to_owned(),
        };
        let (a, b) = inner.split_once(',').ok_or_else(err)?;
        let a = BigInt::from_str(a.trim()).map_err(|_| err())?;
        let b = BigInt::from_str(b.trim()).map_err(|_| err())?;
        Ok(Root { a, b })
    }
}

impl serde::Serialize for Root {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Root {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Classification of a lattice point relative to the root system.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootClass {
    /// A real positive root: a consecutive pair of the `F` sequence with both
    /// entries positive.
    RealPositive,
    /// An imaginary reduced positive root.
    ImaginaryPositive,
    /// Not a root: the quadratic form exceeds 1.
    NotRoot,
    /// A root (or the zero vector) that is not a reduced positive root:
    /// an entry is nonpositive or the entries share a factor.
    NotReduced,
}

impl fmt::Display for RootClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            RootClass::RealPositive => "real positive",
            RootClass::ImaginaryPositive => "imaginary positive",
            RootClass::NotRoot => "not a root",
            RootClass::NotReduced => "not reduced",
        };
        f.write_str(name)
    }
}

/// The quadratic form `a^2 + b^2 - m*a*b`.
pub fn form_value(m: i64, r: &Root) -> BigInt {
    let a = r.a();
    let b = r.b();
    a * a + b * b - BigInt::from(m) * a * b
}

/// Tests root membership: `a^2 + b^2 - m*a*b <= 1`.
///
/// # Errors
///
/// Rejects `m < 2`.
///
/// ```
/// use rigidroots::roots::{is_root, Root};
///
/// assert!(is_root(3, &Root::new(5, 3)).unwrap());
/// assert!(!is_root(3, &Root::new(1, 5)).unwrap());
/// ```
pub fn is_root(m: i64, r: &Root) -> Result<bool> {
    if m < 2 {
        return Err(Error::UnsupportedM { m, min: 2 });
    }
    Ok(form_value(m, r) <= BigInt::one())
}

/// Tests whether `[a, b]` is reduced: `gcd(a, b) = 1` and `ab != 0`.
///
/// ```
/// use rigidroots::roots::{is_reduced, Root};
///
/// assert!(is_reduced(&Root::new(5, 3)));
/// assert!(!is_reduced(&Root::new(1, 0)));
/// assert!(!is_reduced(&Root::new(6, 4)));
/// ```
pub fn is_reduced(r: &Root) -> bool {
    !(r.a() * r.b()).is_zero() && r.a().gcd(r.b()).is_one()
}

/// The sequence `F_0 = 0, F_1 = 1, F_n = m*F_{n-1} - F_{n-2}`.
///
/// For `m = 2` this collapses to `F_n = n`.
///
/// ```
/// use num_bigint::BigInt;
/// use rigidroots::roots::fib;
///
/// let values: Vec<BigInt> = (0..6).map(|n| fib(3, n)).collect();
/// let expected: Vec<BigInt> = [0, 1, 3, 8, 21, 55].map(BigInt::from).into();
/// assert_eq!(values, expected);
/// ```
pub fn fib(m: i64, n: u32) -> BigInt {
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = BigInt::from(m) * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Consecutive pairs `(F_{n+1}, F_n)` generated until the larger member
/// exceeds `limit`. Stops early if the sequence stops growing (only possible
/// for `m < 2`), so it terminates for every `m`.
fn consecutive_f_pairs(m: i64, limit: &BigInt) -> Vec<(BigInt, BigInt)> {
    let mut pairs = Vec::new();
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    loop {
        pairs.push((cur.clone(), prev.clone()));
        if &cur > limit || cur <= prev {
            return pairs;
        }
        let next = BigInt::from(m) * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
}

/// Classifies a lattice point for the group parameter `m`.
///
/// The classes, in the order they are ruled out: [`RootClass::NotRoot`] when
/// the quadratic form exceeds 1; [`RootClass::RealPositive`] when the point
/// is a consecutive `F` pair with both entries positive;
/// [`RootClass::ImaginaryPositive`] when the point is a reduced root with
/// both entries positive; [`RootClass::NotReduced`] otherwise.
///
/// ```
/// use rigidroots::roots::{classify, Root, RootClass};
///
/// assert_eq!(classify(3, &Root::new(8, 3)), RootClass::RealPositive);
/// assert_eq!(classify(3, &Root::new(5, 3)), RootClass::ImaginaryPositive);
/// assert_eq!(classify(3, &Root::new(9, 2)), RootClass::NotRoot);
/// assert_eq!(classify(3, &Root::new(6, 4)), RootClass::NotReduced);
/// ```
pub fn classify(m: i64, r: &Root) -> RootClass {
    if form_value(m, r) > BigInt::one() {
        return RootClass::NotRoot;
    }
    if r.is_positive_pair() {
        let limit = r.a().max(r.b());
        let real = consecutive_f_pairs(m, limit)
            .iter()
            .any(|(hi, lo)| (hi == r.a() && lo == r.b()) || (hi == r.b() && lo == r.a()));
        if real {
            return RootClass::RealPositive;
        }
        if is_reduced(r) {
            return RootClass::ImaginaryPositive;
        }
    }
    RootClass::NotReduced
}

/// First simple reflection: `[a, b] -> [-a + m*b, b]`.
pub fn weyl_sigma1(m: i64, r: &Root) -> Root {
    Root {
        a: BigInt::from(m) * r.b() - r.a(),
        b: r.b().clone(),
    }
}

/// Second simple reflection: `[a, b] -> [a, -b + m*a]`.
pub fn weyl_sigma2(m: i64, r: &Root) -> Root {
    Root {
        a: r.a().clone(),
        b: BigInt::from(m) * r.a() - r.b(),
    }
}

/// The entry-sum minimum of an imaginary root's reflection orbit.
///
/// Starting from `r`, whichever single reflection strictly decreases the
/// entry sum is applied until neither does. The minimum satisfies
/// `2a <= m*b` and `2b <= m*a`; when the strict inequalities
/// `2a/m <= b < a` are satisfiable in the orbit at all, the minimum is that
/// representative. Orbits whose minimum is fixed by one reflection have no
/// element with `b < a`; for them the minimum itself (which then has
/// `a <= b`) is returned.
///
/// # Errors
///
/// Rejects inputs that are not imaginary reduced positive roots.
///
/// ```
/// use rigidroots::roots::{orbit_representative, Root};
///
/// assert_eq!(
///     orbit_representative(3, &Root::new(31, 12)).unwrap(),
///     Root::new(4, 3),
/// );
/// ```
pub fn orbit_representative(m: i64, r: &Root) -> Result<Root> {
    let class = classify(m, r);
    if class != RootClass::ImaginaryPositive {
        return Err(Error::NotImaginary {
            root: r.clone(),
            class,
        });
    }
    let mut cur = r.clone();
    loop {
        let sum = cur.sum();
        let next = [weyl_sigma1(m, &cur), weyl_sigma2(m, &cur)]
            .into_iter()
            .min_by_key(Root::sum)
            .expect("two candidates");
        if next.sum() < sum {
            cur = next;
        } else {
            return Ok(cur);
        }
    }
}

/// All reduced positive roots `[a, b]` with `a >= b >= 1` and
/// `a + b <= max_sum`, sorted lexicographically.
///
/// ```
/// use rigidroots::roots::{enumerate_reduced, Root};
///
/// assert_eq!(
///     enumerate_reduced(3, 4),
///     vec![Root::new(1, 1), Root::new(2, 1), Root::new(3, 1)],
/// );
/// ```
pub fn enumerate_reduced(m: i64, max_sum: u64) -> Vec<Root> {
    let mut out = Vec::new();
    for a in 1..max_sum {
        for b in 1..=a.min(max_sum - a) {
            if gcd_u64(a, b) != 1 {
                continue;
            }
            let form = i128::from(a) * i128::from(a) + i128::from(b) * i128::from(b)
                - i128::from(m) * i128::from(a) * i128::from(b);
            if form <= 1 {
                out.push(Root::new(a, b));
            }
        }
    }
    out
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}
