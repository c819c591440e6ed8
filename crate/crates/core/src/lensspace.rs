//! Lens spaces up to (possibly orientation-reversing) homeomorphism, and
//! slopes on a torus.
//!
//! `L(p,q)` is `-p/q` surgery on the unknot. Two lens spaces are homeomorphic
//! iff the orders agree and `q' = ±q^{±1} (mod p)`. Orientation is quotiented
//! out everywhere: `L(-p,q)`, `L(p,-q)` and `L(p,q)` all normalize to the same
//! value, so mirror images are identified.
//!
//! Two degenerate orders are kept as sentinels: `p = 0` is `S¹×S²` and `p = 1`
//! is `S³`. Both carry `q = 1`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A lens space in normal form: `p ≥ 0`, and for `p ≥ 2` the residue `q` is
/// the least element of the orbit `{±q, ±q⁻¹} mod p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct LensSpace {
    p: i64,
    q: i64,
}

impl LensSpace {
    pub const S3: LensSpace = LensSpace { p: 1, q: 1 };
    pub const S1_X_S2: LensSpace = LensSpace { p: 0, q: 1 };

    /// Normalize `L(p,q)`. Rejects non-coprime input.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        normalize(p, q)
    }

    /// Order of `H₁`; `0` for `S¹×S²`.
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn is_s3(&self) -> bool {
        self.p == 1
    }

    /// The residues `{q, -q, q⁻¹, -q⁻¹}` reduced into `[0, p)`, deduplicated.
    /// Empty for `p ≤ 1`.
    pub fn q_orbit(&self) -> Vec<i64> {
        if self.p < 2 {
            return Vec::new();
        }
        let mut orbit = four_orbit(self.p, self.q).to_vec();
        orbit.sort_unstable();
        orbit.dedup();
        orbit
    }
}

/// `(q, p - q, q⁻¹, p - q⁻¹)` modulo `p`, in that order. Requires `p ≥ 2` and
/// `gcd(p, q) = 1`.
pub(crate) fn four_orbit(p: i64, q: i64) -> [i64; 4] {
    let q = q.rem_euclid(p);
    let inv = mod_inverse(q, p).expect("residue is a unit");
    [q, (p - q) % p, inv, (p - inv) % p]
}

/// Inverse of `a` modulo `m > 0`, if it exists.
pub fn mod_inverse(a: i64, m: i64) -> Option<i64> {
    let e = a.rem_euclid(m).extended_gcd(&m);
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m))
}

/// Canonical representative of the homeomorphism class of `L(p,q)`.
pub fn normalize(p: i64, q: i64) -> Result<LensSpace> {
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    let p = p.abs();
    if p <= 1 {
        return Ok(LensSpace { p, q: 1 });
    }
    let q = *four_orbit(p, q).iter().min().expect("nonempty orbit");
    Ok(LensSpace { p, q })
}

/// Homeomorphism test straight from the classification: equal orders, and
/// `q_B` among `±q_A^{±1}`. Independent of [`normalize`]'s choice of
/// representative.
pub fn is_homeomorphic(a: &LensSpace, b: &LensSpace) -> bool {
    if a.p != b.p {
        return false;
    }
    if a.p <= 1 {
        return true;
    }
    let target = b.q.rem_euclid(b.p);
    four_orbit(a.p, a.q).contains(&target)
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

impl FromStr for LensSpace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let err = || Error::Parse { what: "lens space", input: s.to_string() };
        match t {
            "S3" => return Ok(LensSpace::S3),
            "S1xS2" => return Ok(LensSpace::S1_X_S2),
            _ => {}
        }
        let inner = t.strip_prefix("L(").and_then(|r| r.strip_suffix(')')).ok_or_else(err)?;
        let (p, q) = inner.split_once(',').ok_or_else(err)?;
        let p: i64 = p.trim().parse().map_err(|_| err())?;
        let q: i64 = q.trim().parse().map_err(|_| err())?;
        normalize(p, q)
    }
}

impl TryFrom<String> for LensSpace {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<LensSpace> for String {
    fn from(l: LensSpace) -> String {
        l.to_string()
    }
}

/// A slope `p/q` in lowest terms with `q ≥ 0`; `1/0` is the meridian `∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Slope {
    num: i64,
    den: i64,
}

#[allow(clippy::should_implement_trait)]
impl Slope {
    pub const INFINITY: Slope = Slope { num: 1, den: 0 };

    pub fn new(num: i64, den: i64) -> Result<Self> {
        if num == 0 && den == 0 {
            return Err(Error::IndeterminateSlope);
        }
        Ok(Self::reduce(num as i128, den as i128))
    }

    pub fn integer(n: i64) -> Self {
        Slope { num: n, den: 1 }
    }

    fn reduce(num: i128, den: i128) -> Self {
        debug_assert!(num != 0 || den != 0);
        if den == 0 {
            return Slope::INFINITY;
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        Slope {
            num: n.try_into().expect("slope numerator overflows i64"),
            den: d.try_into().expect("slope denominator overflows i64"),
        }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }

    /// `Some(n)` when the slope is the integer `n`.
    pub fn as_integer(&self) -> Option<i64> {
        (self.den == 1).then_some(self.num)
    }

    /// `1/x`, with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(self) -> Self {
        Self::reduce(self.den as i128, self.num as i128)
    }

    pub fn neg(self) -> Self {
        if self.is_infinite() {
            return self;
        }
        Slope { num: -self.num, den: self.den }
    }

    /// Exact difference. Anything involving `∞` is `∞`.
    pub fn sub(self, other: Slope) -> Self {
        if self.is_infinite() || other.is_infinite() {
            return Slope::INFINITY;
        }
        let (a, b) = (self.num as i128, self.den as i128);
        let (c, d) = (other.num as i128, other.den as i128);
        Self::reduce(a * d - c * b, b * d)
    }

    pub fn add(self, other: Slope) -> Self {
        self.sub(other.neg())
    }
}

/// Evaluate `a₁ - 1/(a₂ - 1/(⋯ - 1/aₙ))` exactly. A zero intermediate value
/// becomes `∞` at the next step rather than failing.
pub fn from_continued_fraction(coeffs: &[Slope]) -> Result<Slope> {
    let (last, rest) = coeffs.split_last().ok_or(Error::EmptyContinuedFraction)?;
    Ok(rest.iter().rev().fold(*last, |acc, &a| a.sub(acc.recip())))
}

/// Minimal geometric intersection number `|p_a q_b - p_b q_a|`.
pub fn slope_distance(a: Slope, b: Slope) -> u64 {
    let v = a.num as i128 * b.den as i128 - b.num as i128 * a.den as i128;
    v.unsigned_abs() as u64
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.den {
            0 => write!(f, "inf"),
            1 => write!(f, "{}", self.num),
            d => write!(f, "{}/{}", self.num, d),
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let err = || Error::Parse { what: "slope", input: s.to_string() };
        if t == "inf" || t == "∞" {
            return Ok(Slope::INFINITY);
        }
        match t.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| err())?;
                let d: i64 = d.trim().parse().map_err(|_| err())?;
                Slope::new(n, d)
            }
            None => Ok(Slope::integer(t.parse().map_err(|_| err())?)),
        }
    }
}

impl TryFrom<String> for Slope {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Slope> for String {
    fn from(s: Slope) -> String {
        s.to_string()
    }
}
