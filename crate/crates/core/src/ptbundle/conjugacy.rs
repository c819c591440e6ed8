//! Conjugacy classes of `SL(2,Z)` up to sign.
//!
//! Elliptic classes are told apart by trace and rotation direction,
//! parabolic ones by the signed translation length of their normal form
//! `[[1, n], [0, 1]]`, and hyperbolic ones by the cyclic word in
//! `R = [[1,1],[0,1]]`, `L = [[1,0],[1,1]]` of a nonnegative conjugate.

use std::fmt;

use num_integer::{Integer, Roots};
use serde::{Deserialize, Serialize};

use super::{order, SL2Matrix};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum ConjugacyToken {
    /// `±I`.
    Central,
    /// Representative chosen with `trace ≥ 0` (and `c > 0` at trace 0);
    /// `rotation` is the sign of its lower-left entry.
    Elliptic { trace: i64, order: u32, rotation: i8 },
    /// Conjugate to `±[[1, n], [0, 1]]`.
    Parabolic { n: i64 },
    /// Least rotation of the `R`/`L` word of a positive-trace conjugate.
    Hyperbolic { word: String },
}

impl fmt::Display for ConjugacyToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConjugacyToken::Central => write!(f, "central"),
            ConjugacyToken::Elliptic { trace, order, rotation } => {
                write!(f, "elliptic(trace {trace}, order {order}, rotation {rotation:+})")
            }
            ConjugacyToken::Parabolic { n } => write!(f, "parabolic({n})"),
            ConjugacyToken::Hyperbolic { word } => write!(f, "hyperbolic({word})"),
        }
    }
}

/// Complete invariant of the class of `±m` under `SL(2,Z)` conjugation.
pub fn conjugacy_invariant(m: &SL2Matrix) -> ConjugacyToken {
    if m.is_plus_minus_identity() {
        return ConjugacyToken::Central;
    }
    let m = if m.trace() < 0 { m.neg() } else { *m };
    let t = m.trace();
    match t {
        0 | 1 => {
            let m = if t == 0 && m.c < 0 { m.neg() } else { m };
            ConjugacyToken::Elliptic { trace: t, order: order(&m).expect("elliptic"), rotation: m.c.signum() as i8 }
        }
        2 => {
            let g = (m.a - 1).gcd(&m.b).gcd(&m.c);
            ConjugacyToken::Parabolic { n: (m.b - m.c).signum() * g }
        }
        _ => ConjugacyToken::Hyperbolic { word: least_rotation(&rl_word(&nonnegative_conjugate(&m))) },
    }
}

/// Sign of `alpha + √D` for a non-square `D > 0`.
fn sign_plus_sqrt(alpha: i128, disc: i128) -> i128 {
    if alpha >= 0 {
        1
    } else {
        (disc - alpha * alpha).signum()
    }
}

/// Sign of `alpha - √D` for a non-square `D > 0`.
fn sign_minus_sqrt(alpha: i128, disc: i128) -> i128 {
    -sign_plus_sqrt(-alpha, disc)
}

/// Conjugate of a hyperbolic `m` (trace > 2) with all entries positive.
///
/// The attracting fixed point `(P + √D)/Q` of `m` is pushed through its
/// continued fraction expansion until it becomes reduced (`x > 1`,
/// `-1 < x̄ < 0`). Conjugating by the accumulated partial-quotient matrices
/// then lands on a power of the positive period matrix.
fn nonnegative_conjugate(m: &SL2Matrix) -> SL2Matrix {
    let (a, b, c, d) = (m.a as i128, m.b as i128, m.c as i128, m.d as i128);
    let t = a + d;
    let disc = t * t - 4;
    let root = disc.sqrt();
    let (mut p, mut q) = (a - d, 2 * c);
    debug_assert!(q != 0 && (disc - p * p) % q == 0);

    // accumulated G = g_{a0} g_{a1} ⋯ with g_a = [[a, 1], [1, 0]]
    let mut g = [[1i128, 0], [0, 1]];
    loop {
        let qs = q.signum();
        let above_one = sign_plus_sqrt(p - q, disc) == qs;
        let conj_negative = sign_minus_sqrt(p, disc) == -qs;
        let conj_above_minus_one = sign_minus_sqrt(p + q, disc) == qs;
        if above_one && conj_negative && conj_above_minus_one {
            break;
        }
        let digit = if q > 0 { Integer::div_floor(&(p + root), &q) } else { -Integer::div_floor(&(p + root), &-q) - 1 };
        g = [[g[0][0] * digit + g[0][1], g[0][0]], [g[1][0] * digit + g[1][1], g[1][0]]];
        p = digit * q - p;
        q = (disc - p * p) / q;
    }

    let det_g = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    // G⁻¹ = det·[[g11, -g01], [-g10, g00]]
    let inv = [[det_g * g[1][1], -det_g * g[0][1]], [-det_g * g[1][0], det_g * g[0][0]]];
    let mm = [[a, b], [c, d]];
    let n = mul2(&mul2(&inv, &mm), &g);
    // an orientation-reversing G is corrected by J = [[0,1],[1,0]]
    let n = if det_g == 1 { n } else { [[n[1][1], n[1][0]], [n[0][1], n[0][0]]] };
    let narrow = |v: i128| i64::try_from(v).expect("conjugate entry overflow");
    SL2Matrix::new(narrow(n[0][0]), narrow(n[0][1]), narrow(n[1][0]), narrow(n[1][1])).expect("conjugate stays in SL2")
}

fn mul2(x: &[[i128; 2]; 2], y: &[[i128; 2]; 2]) -> [[i128; 2]; 2] {
    [
        [x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]],
        [x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]],
    ]
}

/// Factor a nonnegative element of `SL(2,Z)` as a positive word in `R, L`.
fn rl_word(m: &SL2Matrix) -> String {
    let (mut a, mut b, mut c, mut d) = (m.a, m.b, m.c, m.d);
    assert!(a >= 0 && b >= 0 && c >= 0 && d >= 0, "not a nonnegative matrix: {m}");
    let mut word = String::new();
    while !(a == 1 && b == 0 && c == 0 && d == 1) {
        if a >= c && b >= d {
            word.push('R');
            a -= c;
            b -= d;
        } else {
            assert!(c >= a && d >= b, "no dominating row");
            word.push('L');
            c -= a;
            d -= b;
        }
    }
    word
}

fn least_rotation(w: &str) -> String {
    (0..w.len().max(1)).map(|i| format!("{}{}", &w[i..], &w[..i])).min().unwrap_or_default()
}
