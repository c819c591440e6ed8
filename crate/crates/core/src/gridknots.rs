//! Grid number one knots in `L(r,q)`.
//!
//! The meridians `m_a`, `m_b` of the two Heegaard solid tori meet in `r`
//! points, numbered `0..r` along `m_b`; along `m_a` they then appear as
//! `0, q, 2q, …`. A grid point is just its residue mod `r`.
//!
//! The `n`-th grid number one knot is taken to represent `n` times the class
//! of the core of `V_a`; this is a convention, fixed here and used
//! throughout.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lensspace::four_orbit;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Grid1Knot {
    r: i64,
    q: i64,
    n: i64,
}

impl Grid1Knot {
    /// The `n`-th grid number one knot in `L(r,q)`, with `1 ≤ n mod |r| ≤ |r|-1`.
    pub fn new(r: i64, q: i64, n: i64) -> Result<Self> {
        let r = r.abs();
        if r < 2 || q.gcd(&r) != 1 {
            return Err(Error::NotCoprime(r, q));
        }
        let n = n.rem_euclid(r);
        if n == 0 {
            return Err(Error::Parse { what: "grid separation", input: n.to_string() });
        }
        Ok(Grid1Knot { r, q: q.rem_euclid(r), n })
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// The separation read along `m_a` instead.
    pub fn along_ma(&self) -> i64 {
        (self.n * self.q).rem_euclid(self.r)
    }

    /// `r / gcd(n, r)`.
    pub fn order(&self) -> i64 {
        grid1_order(self.r, self.n)
    }
}

/// Order of `n` in `Z/r`: `|r| / gcd(n, r)`.
pub fn grid1_order(r: i64, n: i64) -> i64 {
    let r = r.abs();
    r / n.gcd(&r)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "failure", rename_all = "kebab-case")]
pub enum SequenceFailure {
    /// Preconditions violated (`r < 2`, `gcd(qdot, r) ≠ 1`, or a zero step count).
    InvalidInput,
    /// The walk did not return to 0; carries the final residue.
    NotClosed { last: i64 },
    /// A vertex was reached twice (or 0 early) at this position.
    Revisit { position: usize },
    /// No sign or inverse choice of `q` closes the loop.
    NoWitness,
}

/// Walk `da` steps of `+1` then `db` steps of `+qdot` mod `r`. Succeeds when
/// the walk closes at 0 without touching any vertex twice in between.
pub fn torus_knot_sequence(r: i64, qdot: i64, da: i64, db: i64) -> Result<Vec<i64>, SequenceFailure> {
    if r < 2 || da < 1 || db < 1 || qdot.gcd(&r) != 1 {
        return Err(SequenceFailure::InvalidInput);
    }
    let mut seq: Vec<i64> = (0..=da).map(|i| i.rem_euclid(r)).collect();
    for j in 1..=db {
        seq.push((da + j * qdot).rem_euclid(r));
    }
    let last = *seq.last().expect("nonempty");
    if last != 0 {
        return Err(SequenceFailure::NotClosed { last });
    }
    let interior = &seq[1..seq.len() - 1];
    let mut seen = vec![false; r as usize];
    for (i, &v) in interior.iter().enumerate() {
        if v == 0 || seen[v as usize] {
            return Err(SequenceFailure::Revisit { position: i + 1 });
        }
        seen[v as usize] = true;
    }
    Ok(seq)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusWitness {
    pub qdot: i64,
    pub sequence: Vec<i64>,
}

/// First `qdot` in the order `(q, r-q, q⁻¹, r-q⁻¹)` (mod `r`) for which
/// [`torus_knot_sequence`] succeeds.
pub fn find_torus_grid_witness(r: i64, q: i64, da: i64, db: i64) -> Result<TorusWitness, SequenceFailure> {
    let r = r.abs();
    if r < 2 || q.gcd(&r) != 1 {
        return Err(SequenceFailure::InvalidInput);
    }
    four_orbit(r, q)
        .into_iter()
        .find_map(|qdot| torus_knot_sequence(r, qdot, da, db).ok().map(|sequence| TorusWitness { qdot, sequence }))
        .ok_or(SequenceFailure::NoWitness)
}
