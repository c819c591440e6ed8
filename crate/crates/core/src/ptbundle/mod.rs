//! The mapping class group of the once-punctured torus, taken as `SL(2,Z)`.
//!
//! The twists act on `H₁` of the fiber by `τx ↦ [[1,1],[0,1]]` and
//! `τy ↦ [[1,0],[-1,1]]`. Words are evaluated left to right: the matrix of
//! `x y` is `X·Y`.

mod conjugacy;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linkcalc::AbelianGroup;

pub use conjugacy::{conjugacy_invariant, ConjugacyToken};

/// Integer matrix `[[a, b], [c, d]]` with `ad - bc = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SL2Matrix {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl SL2Matrix {
    pub const IDENTITY: SL2Matrix = SL2Matrix { a: 1, b: 0, c: 0, d: 1 };
    pub const X: SL2Matrix = SL2Matrix { a: 1, b: 1, c: 0, d: 1 };
    pub const Y: SL2Matrix = SL2Matrix { a: 1, b: 0, c: -1, d: 1 };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let det = a as i128 * d as i128 - b as i128 * c as i128;
        if det != 1 {
            return Err(Error::DeterminantNotOne(det.clamp(i64::MIN as i128, i64::MAX as i128) as i64));
        }
        Ok(SL2Matrix { a, b, c, d })
    }

    pub fn from_rows(m: [[i64; 2]; 2]) -> Result<Self> {
        Self::new(m[0][0], m[0][1], m[1][0], m[1][1])
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn trace(&self) -> i64 {
        self.a + self.d
    }

    pub fn neg(&self) -> Self {
        SL2Matrix { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }

    pub fn inverse(&self) -> Self {
        SL2Matrix { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    pub fn is_plus_minus_identity(&self) -> bool {
        *self == Self::IDENTITY || *self == Self::IDENTITY.neg()
    }

    pub fn mul(&self, o: &SL2Matrix) -> Self {
        let dot = |x: i64, y: i64, z: i64, w: i64| {
            x.checked_mul(y)
                .and_then(|p| z.checked_mul(w).and_then(|q| p.checked_add(q)))
                .expect("SL(2,Z) entry overflow")
        };
        SL2Matrix {
            a: dot(self.a, o.a, self.b, o.c),
            b: dot(self.a, o.b, self.b, o.d),
            c: dot(self.c, o.a, self.d, o.c),
            d: dot(self.c, o.b, self.d, o.d),
        }
    }

    /// `self^n` for any integer `n`.
    pub fn pow(&self, n: i64) -> Self {
        let mut base = if n < 0 { self.inverse() } else { *self };
        let mut e = n.unsigned_abs();
        let mut acc = Self::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `self - I` as a plain integer matrix.
    pub fn minus_identity(&self) -> [[i64; 2]; 2] {
        [[self.a - 1, self.b], [self.c, self.d - 1]]
    }
}

impl fmt::Display for SL2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl Serialize for SL2Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SL2Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = <[[i64; 2]; 2]>::deserialize(d)?;
        SL2Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    X,
    Y,
}

impl Generator {
    pub fn matrix(self) -> SL2Matrix {
        match self {
            Generator::X => SL2Matrix::X,
            Generator::Y => SL2Matrix::Y,
        }
    }

    fn letter(self) -> char {
        match self {
            Generator::X => 'x',
            Generator::Y => 'y',
        }
    }
}

/// A word in `τx, τy`, kept reduced: adjacent powers of one generator are
/// merged and zero exponents dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MappingWord {
    syllables: Vec<(Generator, i64)>,
}

impl MappingWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn from_syllables<I: IntoIterator<Item = (Generator, i64)>>(it: I) -> Self {
        let mut w = Self::identity();
        for (g, e) in it {
            w.push(g, e);
        }
        w
    }

    pub fn push(&mut self, g: Generator, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(last) = self.syllables.last_mut() {
            if last.0 == g {
                last.1 += e;
                if last.1 == 0 {
                    self.syllables.pop();
                }
                return;
            }
        }
        self.syllables.push((g, e));
    }

    pub fn syllables(&self) -> &[(Generator, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn concat(&self, other: &MappingWord) -> MappingWord {
        let mut w = self.clone();
        for &(g, e) in &other.syllables {
            w.push(g, e);
        }
        w
    }
}

impl fmt::Display for MappingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|&(g, e)| match e {
                1 => g.letter().to_string(),
                e => format!("{}^{e}", g.letter()),
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for MappingWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut w = MappingWord::identity();
        for tok in s.split_whitespace() {
            let err = || Error::Parse { what: "mapping word", input: tok.to_string() };
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, e.parse::<i64>().map_err(|_| err())?),
                None => (tok, 1),
            };
            let g = match base {
                "x" => Generator::X,
                "y" => Generator::Y,
                _ => return Err(err()),
            };
            w.push(g, exp);
        }
        Ok(w)
    }
}

impl Serialize for MappingWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MappingWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Nielsen–Thurston type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum NTClass {
    Periodic { order: u32 },
    Reducible,
    PseudoAnosov { trace: i64 },
}

impl fmt::Display for NTClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NTClass::Periodic { order } => write!(f, "periodic (order {order})"),
            NTClass::Reducible => write!(f, "reducible"),
            NTClass::PseudoAnosov { trace } => write!(f, "pseudo-Anosov (trace {trace})"),
        }
    }
}

pub fn evaluate(w: &MappingWord) -> SL2Matrix {
    w.syllables.iter().fold(SL2Matrix::IDENTITY, |acc, &(g, e)| acc.mul(&g.matrix().pow(e)))
}

/// Multiplicative order in `SL(2,Z)`, if finite. Finite orders are 1, 2, 3,
/// 4 and 6.
pub fn order(m: &SL2Matrix) -> Option<u32> {
    if m.trace().abs() >= 2 && !m.is_plus_minus_identity() {
        return None;
    }
    let mut p = *m;
    for k in 1..=12 {
        if p == SL2Matrix::IDENTITY {
            return Some(k);
        }
        p = p.mul(m);
    }
    None
}

pub fn classify(m: &SL2Matrix) -> NTClass {
    let t = m.trace();
    if t.abs() < 2 || m.is_plus_minus_identity() {
        NTClass::Periodic { order: order(m).expect("elliptic element has finite order") }
    } else if t.abs() == 2 {
        NTClass::Reducible
    } else {
        NTClass::PseudoAnosov { trace: t }
    }
}

/// `H₁` of the once-punctured-torus bundle with monodromy `w`:
/// `Z ⊕ coker(A - I)`.
pub fn bundle_h1(w: &MappingWord) -> AbelianGroup {
    let m = evaluate(w).minus_identity();
    AbelianGroup::from_i64_relations(&[m[0].to_vec(), m[1].to_vec()], 2).plus_z()
}

/// `x^k y² x^l y⁻¹`.
pub fn lens_filling_word(k: i64, l: i64) -> MappingWord {
    MappingWord::from_syllables([(Generator::X, k), (Generator::Y, 2), (Generator::X, l), (Generator::Y, -1)])
}
