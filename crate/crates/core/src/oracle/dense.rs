//! Dense exact rank, kept separate from the sparse elimination used by the
//! homology code so the oracle shares no arithmetic with the engine.

use num_bigint::BigInt;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Zero};

use crate::field::FieldSpec;

/// Bareiss fraction-free elimination; every entry stays an exact minor, so
/// each division is exact. `None` when `T` overflows.
fn bareiss_rank<T>(mut m: Vec<Vec<T>>) -> Option<usize>
where
    T: Clone + Zero + One + CheckedMul + CheckedSub + CheckedDiv,
{
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            let factor = m[i][c].clone();
            for j in c + 1..cols {
                let a = m[i][j].checked_mul(&m[r][c])?;
                let b = factor.checked_mul(&m[r][j])?;
                m[i][j] = a.checked_sub(&b)?.checked_div(&prev)?;
            }
            m[i][c] = T::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    Some(r)
}

fn modular_rank(m: &[Vec<i64>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .map(|row| row.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let inv = |x: u64| {
        let (mut r, mut b, mut e) = (1u64, x, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let iv = inv(a[r][c]);
        for i in r + 1..rows {
            if a[i][c] == 0 {
                continue;
            }
            let f = a[i][c] * iv % p;
            for j in c..cols {
                a[i][j] = (a[i][j] + p - f * a[r][j] % p) % p;
            }
        }
        r += 1;
    }
    r
}

pub(super) fn dense_rank(m: &[Vec<i64>], field: FieldSpec) -> usize {
    if m.is_empty() || m[0].is_empty() {
        return 0;
    }
    match field {
        FieldSpec::Prime(p) => modular_rank(m, p as u64),
        FieldSpec::Rationals => {
            let small: Vec<Vec<i128>> = m
                .iter()
                .map(|r| r.iter().map(|&v| v as i128).collect())
                .collect();
            bareiss_rank(small).unwrap_or_else(|| {
                let big = m
                    .iter()
                    .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                    .collect();
                bareiss_rank::<BigInt>(big).expect("big integers do not overflow")
            })
        }
    }
}
