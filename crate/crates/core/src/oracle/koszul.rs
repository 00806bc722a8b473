//! `Tor_i^S(S/I_Δ, k)_j` as the homology of the Koszul complex
//! `K(x_1..x_n) ⊗ S/I_Δ` in internal degree `j`.
//!
//! A basis of position `i` in degree `j` is `e_T ⊗ m` with `|T| = i`,
//! `deg m = j - i` and `m` a standard monomial (its support is a face of `Δ`).
//! The differential is `e_T ⊗ m ↦ Σ_{t ∈ T} ±e_{T∖t} ⊗ x_t m`, with terms whose
//! monomial falls into `I_Δ` dropped. Both the strand and the differential
//! are homogeneous for the fine `N^n` grading, so a degree-`j` strand is
//! computed as a direct sum over exponent vectors of total degree `j`.

use std::collections::HashMap;

use crate::complex::SimplicialComplex;
use crate::error::{range, Result};
use crate::field::FieldSpec;
use crate::vertex_set::VertexSet;

use super::dense::dense_rank;

pub const MAX_KOSZUL_VERTICES: usize = 10;

fn support(a: &[u8]) -> VertexSet {
    a.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(v, _)| v)
        .collect()
}

/// Exponent vectors of length `n` and total degree `j`, in lexicographic order.
fn compositions(n: usize, j: usize) -> Vec<Vec<u8>> {
    fn rec(n: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() + 1 == n {
            cur.push(left as u8);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e as u8);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if j == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, j, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Sign of removing `t` from the ordered set `T`: `(-1)^{position of t}`.
fn koszul_sign(t_set: VertexSet, t: usize) -> i64 {
    if t_set.rank_of(t).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Tor dimensions at every position for the fine degree `a`.
fn fine_strand(cx: &SimplicialComplex, a: &[u8], field: FieldSpec) -> Vec<u64> {
    let n = a.len();
    let supp = support(a);
    let twice: VertexSet = a
        .iter()
        .enumerate()
        .filter(|(_, &e)| e >= 2)
        .map(|(v, _)| v)
        .collect();
    // basis[i]: the sets T with |T| = i such that a - 1_T is standard.
    let mut basis: Vec<Vec<VertexSet>> = vec![Vec::new(); n + 1];
    for t in supp.subsets() {
        let monomial_support = supp.difference(t.difference(twice));
        if cx.is_face(monomial_support) {
            basis[t.len()].push(t);
        }
    }
    let index: Vec<HashMap<VertexSet, usize>> = basis
        .iter()
        .map(|b| b.iter().enumerate().map(|(k, t)| (*t, k)).collect())
        .collect();
    // rank of d_i : C_i -> C_{i-1}
    let rank_at = |i: usize| -> usize {
        if i == 0 || basis[i].is_empty() || basis[i - 1].is_empty() {
            return 0;
        }
        let mut m = vec![vec![0i64; basis[i - 1].len()]; basis[i].len()];
        for (r, t) in basis[i].iter().enumerate() {
            for v in t.iter() {
                if let Some(&c) = index[i - 1].get(&t.without(v)) {
                    m[r][c] = koszul_sign(*t, v);
                }
            }
        }
        dense_rank(&m, field)
    };
    let ranks: Vec<usize> = (0..=n + 1)
        .map(|i| if i > n { 0 } else { rank_at(i) })
        .collect();
    (0..=n)
        .map(|i| (basis[i].len() - ranks[i] - ranks[i + 1]) as u64)
        .collect()
}

fn check(cx: &SimplicialComplex) -> Result<()> {
    cx.require_nonvoid()?;
    if cx.n() > MAX_KOSZUL_VERTICES {
        return range(format!(
            "Koszul oracle supports at most {MAX_KOSZUL_VERTICES} vertices, got {}",
            cx.n()
        ));
    }
    Ok(())
}

/// `dim Tor_i(S/I_Δ, k)_j` for `i = 0..=n`.
pub fn koszul_strand(cx: &SimplicialComplex, field: FieldSpec, j: usize) -> Result<Vec<u64>> {
    check(cx)?;
    let n = cx.n();
    let mut out = vec![0u64; n + 1];
    for a in compositions(n, j) {
        for (i, d) in fine_strand(cx, &a, field).into_iter().enumerate() {
            out[i] += d;
        }
    }
    Ok(out)
}

/// `dim Tor_i(S/I_Δ, k)_j`.
pub fn koszul_tor(cx: &SimplicialComplex, field: FieldSpec, i: usize, j: usize) -> Result<u64> {
    Ok(koszul_strand(cx, field, j)?.get(i).copied().unwrap_or(0))
}

/// `table[i][j]` for `0 ≤ i ≤ n`, `0 ≤ j ≤ max_degree`.
pub fn koszul_table(
    cx: &SimplicialComplex,
    field: FieldSpec,
    max_degree: usize,
) -> Result<Vec<Vec<u64>>> {
    check(cx)?;
    let n = cx.n();
    let mut table = vec![vec![0u64; max_degree + 1]; n + 1];
    for j in 0..=max_degree {
        for (i, d) in koszul_strand(cx, field, j)?.into_iter().enumerate() {
            table[i][j] = d;
        }
    }
    Ok(table)
}

/// The same strand computed on the whole coarse degree-`j` piece at once,
/// without splitting by exponent vector. Returns `(chain dimensions,
/// homology dimensions)` by position. Only practical for a handful of
/// vertices.
pub fn koszul_strand_unsplit(
    cx: &SimplicialComplex,
    field: FieldSpec,
    j: usize,
) -> Result<(Vec<u64>, Vec<u64>)> {
    check(cx)?;
    let n = cx.n();
    // basis[i]: (T, monomial exponents) with |T| = i, deg = j - i, standard.
    let mut basis: Vec<Vec<(VertexSet, Vec<u8>)>> = vec![Vec::new(); n + 1];
    for (i, slot) in basis.iter_mut().enumerate().take(j.min(n) + 1) {
        let monomials: Vec<Vec<u8>> = compositions(n, j - i)
            .into_iter()
            .filter(|m| cx.is_face(support(m)))
            .collect();
        for t in crate::betti::subsets_of_size(n, i) {
            for m in &monomials {
                slot.push((t, m.clone()));
            }
        }
    }
    let index: Vec<HashMap<(VertexSet, Vec<u8>), usize>> = basis
        .iter()
        .map(|b| b.iter().cloned().enumerate().map(|(k, e)| (e, k)).collect())
        .collect();
    let rank_at = |i: usize| -> usize {
        if i == 0 || i > n || basis[i].is_empty() || basis[i - 1].is_empty() {
            return 0;
        }
        let mut m = vec![vec![0i64; basis[i - 1].len()]; basis[i].len()];
        for (r, (t, mono)) in basis[i].iter().enumerate() {
            for v in t.iter() {
                let mut target = mono.clone();
                target[v] += 1;
                if let Some(&c) = index[i - 1].get(&(t.without(v), target)) {
                    m[r][c] = koszul_sign(*t, v);
                }
            }
        }
        dense_rank(&m, field)
    };
    let ranks: Vec<usize> = (0..=n + 1).map(rank_at).collect();
    let chains: Vec<u64> = basis.iter().map(|b| b.len() as u64).collect();
    let homology = (0..=n)
        .map(|i| (basis[i].len() - ranks[i] - ranks[i + 1]) as u64)
        .collect();
    Ok((chains, homology))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn compositions_are_counted_by_stars_and_bars() {
        assert_eq!(compositions(3, 2).len(), 6);
        assert_eq!(compositions(5, 5).len(), 126);
        assert_eq!(compositions(1, 4), vec![vec![4]]);
        assert_eq!(compositions(0, 0).len(), 1);
        assert!(compositions(0, 1).is_empty());
    }

    #[test]
    fn tor_zero_is_the_field() {
        for cx in [
            SimplicialComplex::simplex(3),
            SimplicialComplex::empty_face(2),
            SimplicialComplex::cycle(4),
        ] {
            assert_eq!(koszul_tor(&cx, Q, 0, 0).unwrap(), 1);
            assert_eq!(koszul_tor(&cx, Q, 0, 1).unwrap(), 0);
        }
    }

    #[test]
    fn fixture_values() {
        let b = SimplicialComplex::simplex_boundary(4);
        assert_eq!(koszul_tor(&b, Q, 1, 4).unwrap(), 1);
        assert_eq!(koszul_tor(&b, Q, 1, 3).unwrap(), 0);
        let two_edges = SimplicialComplex::from_lists(4, [[0, 1], [2, 3]]).unwrap();
        let total: u64 = (0..=6)
            .map(|j| koszul_tor(&two_edges, Q, 2, j).unwrap())
            .sum();
        assert_eq!(total, 4);
        assert!(koszul_tor(&SimplicialComplex::new(2, []).unwrap(), Q, 0, 0).is_err());
    }

    #[test]
    fn split_and_unsplit_strands_agree() {
        let cxs = [
            SimplicialComplex::path(4),
            SimplicialComplex::from_lists(4, [[0, 1], [2, 3]]).unwrap(),
            SimplicialComplex::from_lists(4, [vec![0, 1, 2], vec![3]]).unwrap(),
        ];
        for cx in &cxs {
            for j in 0..=5 {
                let (_, unsplit) = koszul_strand_unsplit(cx, Q, j).unwrap();
                assert_eq!(
                    unsplit,
                    koszul_strand(cx, Q, j).unwrap(),
                    "{cx:?} degree {j}"
                );
            }
        }
    }

    #[test]
    fn strand_euler_characteristic() {
        let cx = SimplicialComplex::from_lists(4, [vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]])
            .unwrap();
        for j in 0..=5 {
            let (chains, homology) = koszul_strand_unsplit(&cx, Q, j).unwrap();
            let alt = |v: &[u64]| {
                v.iter()
                    .enumerate()
                    .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
                    .sum::<i64>()
            };
            assert_eq!(alt(&chains), alt(&homology));
        }
    }
}
