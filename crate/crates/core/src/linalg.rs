//! Exact rank of sparse integer matrices over a field.
//!
//! Rows are sparse vectors of `(column, value)` sorted by column. Over
//! `GF(p)` the elimination is ordinary modular Gaussian elimination. Over the
//! rationals it is fraction-free: a row is replaced by
//! `pivot * row - row[col] * pivot_row` and divided by the gcd of its
//! entries. This runs in `i64` first and falls back to big integers when an
//! intermediate overflows.
//!
//! Pivots are chosen Markowitz-style: the sparsest remaining row, and within
//! it the column that currently occurs in the fewest rows.

use std::cell::Cell;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::field::FieldSpec;

pub type SparseRow = Vec<(u32, i64)>;

trait Domain {
    type Elem: Clone;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, e: &Self::Elem) -> bool;
    /// Eliminates the pivot column from `row` using `pivot`. `None` on overflow.
    fn eliminate(
        &self,
        pivot: &[(u32, Self::Elem)],
        pivot_val: &Self::Elem,
        row: &[(u32, Self::Elem)],
        row_val: &Self::Elem,
    ) -> Option<Vec<(u32, Self::Elem)>>;
}

struct ModP(u64);

impl ModP {
    fn inv(&self, a: u64) -> u64 {
        let mut result = 1u64;
        let mut base = a % self.0;
        let mut exp = self.0 - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result * base % self.0;
            }
            base = base * base % self.0;
            exp >>= 1;
        }
        result
    }
}

impl Domain for ModP {
    type Elem = u64;

    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }

    fn is_zero(&self, e: &u64) -> bool {
        *e == 0
    }

    fn eliminate(
        &self,
        pivot: &[(u32, u64)],
        pv: &u64,
        row: &[(u32, u64)],
        rv: &u64,
    ) -> Option<Vec<(u32, u64)>> {
        let p = self.0;
        // row - f * pivot with f = rv / pv
        let f = rv * self.inv(*pv) % p;
        let neg_f = (p - f) % p;
        Some(merge(
            row,
            pivot,
            |a| *a,
            |b| b * neg_f % p,
            |a, b| (a + b * neg_f) % p,
            |e| *e == 0,
        ))
    }
}

struct Ints;

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Domain for Ints {
    type Elem = i64;

    fn from_i64(&self, v: i64) -> i64 {
        v
    }

    fn is_zero(&self, e: &i64) -> bool {
        *e == 0
    }

    fn eliminate(
        &self,
        pivot: &[(u32, i64)],
        pv: &i64,
        row: &[(u32, i64)],
        rv: &i64,
    ) -> Option<Vec<(u32, i64)>> {
        let overflow = Cell::new(false);
        let flag = |v: Option<i64>| {
            v.unwrap_or_else(|| {
                overflow.set(true);
                0
            })
        };
        let mut out = merge(
            row,
            pivot,
            |a| flag(a.checked_mul(*pv)),
            |b| flag(b.checked_mul(*rv).and_then(i64::checked_neg)),
            |a, b| {
                flag(
                    a.checked_mul(*pv)
                        .zip(b.checked_mul(*rv))
                        .and_then(|(x, y)| x.checked_sub(y)),
                )
            },
            |e| *e == 0,
        );
        if overflow.get() {
            return None;
        }
        let g = out
            .iter()
            .fold(0u64, |g, (_, v)| gcd_u64(g, v.unsigned_abs()));
        if g > 1 {
            for (_, v) in out.iter_mut() {
                *v /= g as i64;
            }
        }
        Some(out)
    }
}

struct BigInts;

impl Domain for BigInts {
    type Elem = BigInt;

    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn is_zero(&self, e: &BigInt) -> bool {
        e.is_zero()
    }

    fn eliminate(
        &self,
        pivot: &[(u32, BigInt)],
        pv: &BigInt,
        row: &[(u32, BigInt)],
        rv: &BigInt,
    ) -> Option<Vec<(u32, BigInt)>> {
        let mut out = merge(
            row,
            pivot,
            |a| a * pv,
            |b| -(b * rv),
            |a, b| a * pv - b * rv,
            BigInt::is_zero,
        );
        let g = out
            .iter()
            .fold(BigInt::zero(), |g, (_, v)| num_integer_gcd(&g, v));
        if g > BigInt::from(1) {
            for (_, v) in out.iter_mut() {
                *v = &*v / &g;
            }
        }
        Some(out)
    }
}

fn num_integer_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let t = &a % &b;
        a = b;
        b = t;
    }
    a
}

/// Sorted merge of two sparse rows; `both` combines entries present in both.
fn merge<E: Clone>(
    row: &[(u32, E)],
    pivot: &[(u32, E)],
    mut only_row: impl FnMut(&E) -> E,
    mut only_pivot: impl FnMut(&E) -> E,
    mut both: impl FnMut(&E, &E) -> E,
    is_zero: impl Fn(&E) -> bool,
) -> Vec<(u32, E)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let (c, e) = if j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
            let r = (row[i].0, only_row(&row[i].1));
            i += 1;
            r
        } else if i == row.len() || pivot[j].0 < row[i].0 {
            let r = (pivot[j].0, only_pivot(&pivot[j].1));
            j += 1;
            r
        } else {
            let r = (row[i].0, both(&row[i].1, &pivot[j].1));
            i += 1;
            j += 1;
            r
        };
        if !is_zero(&e) {
            out.push((c, e));
        }
    }
    out
}

fn rank_in<D: Domain>(dom: &D, rows: &[SparseRow], ncols: usize) -> Option<usize> {
    let mut active: Vec<Vec<(u32, D::Elem)>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&(c, v)| (c, dom.from_i64(v)))
                .filter(|(_, v)| !dom.is_zero(v))
                .collect::<Vec<_>>()
        })
        .filter(|r| !r.is_empty())
        .collect();
    let mut col_count = vec![0u32; ncols];
    for r in &active {
        for (c, _) in r {
            col_count[*c as usize] += 1;
        }
    }
    let mut rank = 0;
    while !active.is_empty() {
        let pi = (0..active.len()).min_by_key(|&i| active[i].len()).unwrap();
        let pivot = active.swap_remove(pi);
        let (pc, pv) = pivot
            .iter()
            .min_by_key(|(c, _)| col_count[*c as usize])
            .map(|(c, v)| (*c, v.clone()))
            .unwrap();
        for (c, _) in &pivot {
            col_count[*c as usize] -= 1;
        }
        rank += 1;
        let mut k = 0;
        while k < active.len() {
            let hit = active[k].binary_search_by_key(&pc, |(c, _)| *c);
            if let Ok(pos) = hit {
                let rv = active[k][pos].1.clone();
                let new_row = dom.eliminate(&pivot, &pv, &active[k], &rv)?;
                for (c, _) in &active[k] {
                    col_count[*c as usize] -= 1;
                }
                for (c, _) in &new_row {
                    col_count[*c as usize] += 1;
                }
                if new_row.is_empty() {
                    active.swap_remove(k);
                    continue;
                }
                active[k] = new_row;
            }
            k += 1;
        }
    }
    Some(rank)
}

/// Rank over `field` of the integer matrix whose rows are `rows`; every
/// column index must be below `ncols`.
pub fn rank(rows: &[SparseRow], ncols: usize, field: FieldSpec) -> usize {
    match field {
        FieldSpec::Prime(p) => {
            rank_in(&ModP(p as u64), rows, ncols).expect("modular elimination cannot overflow")
        }
        FieldSpec::Rationals => rank_in(&Ints, rows, ncols)
            .or_else(|| rank_in(&BigInts, rows, ncols))
            .expect("big-integer elimination cannot overflow"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> Vec<SparseRow> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| **v != 0)
                    .map(|(c, v)| (c as u32, *v))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn small_ranks() {
        let m = dense(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, -1]]);
        assert_eq!(rank(&m, 3, FieldSpec::Rationals), 2);
        let m = dense(&[&[2, 0], &[0, 3]]);
        assert_eq!(rank(&m, 2, FieldSpec::Rationals), 2);
        assert_eq!(rank(&m, 2, FieldSpec::Prime(2)), 1);
        assert_eq!(rank(&m, 2, FieldSpec::Prime(3)), 1);
        assert_eq!(rank(&m, 2, FieldSpec::Prime(5)), 2);
        assert_eq!(rank(&[], 4, FieldSpec::Rationals), 0);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = 4_000_000_000i64;
        // det = big^2 - (big+1)^2 = -2 big - 1
        let m = dense(&[&[big, big + 1], &[big + 1, big]]);
        assert!(rank_in(&Ints, &m, 2).is_none());
        assert_eq!(rank(&m, 2, FieldSpec::Rationals), 2);
        let singular = dense(&[&[big, big], &[big + 1, big + 1]]);
        assert_eq!(rank(&singular, 2, FieldSpec::Rationals), 1);
    }
}
