//! Invariant factors of an integer matrix by Smith normal form.
//!
//! Arithmetic is on `BigInt` throughout. Only the diagonal is kept; the
//! unimodular transforms are not tracked.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Nonzero invariant factors `d₁ | d₂ | ⋯` (all positive) of the
/// `rows × ncols` matrix. Units are included, so `len()` is the rank.
#[allow(clippy::needless_range_loop)]
pub fn invariant_factors(rows: &[Vec<BigInt>], ncols: usize) -> Vec<BigInt> {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    for r in &m {
        assert_eq!(r.len(), ncols, "ragged relation matrix");
    }
    let nrows = m.len();
    let mut diag = Vec::new();

    for t in 0..nrows.min(ncols) {
        let Some((pi, pj)) = min_nonzero(&m, t, ncols) else { break };
        m.swap(t, pi);
        swap_cols(&mut m, t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..nrows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                for j in t..ncols {
                    let v = &m[t][j] * &q;
                    m[i][j] -= v;
                }
                clean &= m[i][t].is_zero();
            }
            for j in t + 1..ncols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for i in t..nrows {
                    let v = &m[i][t] * &q;
                    m[i][j] -= v;
                }
                clean &= m[t][j].is_zero();
            }
            if !clean {
                // a remainder is now smaller than the pivot; restart with it
                let (pi, pj) = min_nonzero(&m, t, ncols).expect("nonzero remainder");
                m.swap(t, pi);
                swap_cols(&mut m, t, pj);
                continue;
            }
            // pivot must divide the rest of the block
            let bad = (t + 1..nrows)
                .flat_map(|i| (t + 1..ncols).map(move |j| (i, j)))
                .find(|&(i, j)| !m[i][j].is_multiple_of(&m[t][t]));
            match bad {
                Some((i, _)) => {
                    for j in t..ncols {
                        let v = m[i][j].clone();
                        m[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
    }
    diag
}

fn min_nonzero(m: &[Vec<BigInt>], t: usize, ncols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, v) in row.iter().enumerate().take(ncols).skip(t) {
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < m[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}
