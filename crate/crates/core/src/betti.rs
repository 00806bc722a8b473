//! Graded Betti numbers of `S/I_Δ` from Hochster's formula
//!
//! `b_{i,j}(S/I_Δ) = Σ_{|W|=j} dim H̃_{j-i-1}(Δ|_W)`
//!
//! and the invariants built on them: modified type, type defect, the
//! closed-form graph type and the Alexander-dual form of the type.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{domain, Error, Result};
use crate::field::FieldSpec;
use crate::homology::{homology_of_facets, HomologyProfile};
use crate::vertex_set::VertexSet;

/// Largest ground set for which a full `2^n` subset sweep is attempted.
pub const MAX_SWEEP_VERTICES: usize = 24;

/// Below this many vertices the subset sweep runs on the calling thread.
const PARALLEL_THRESHOLD: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub n: usize,
    pub codim: usize,
    pub field: FieldSpec,
    /// `entries[i][j] = b_{i,j}` for `0 ≤ i, j ≤ n`.
    pub entries: Vec<Vec<u64>>,
}

impl BettiTable {
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries
            .get(i)
            .and_then(|r| r.get(j))
            .copied()
            .unwrap_or(0)
    }

    /// `b_i = Σ_j b_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.get(i).map_or(0, |r| r.iter().sum())
    }

    pub fn totals(&self) -> Vec<u64> {
        (0..=self.n).map(|i| self.total(i)).collect()
    }

    /// `Σ_{j > c} b_{c,j}`.
    pub fn modified_type(&self) -> u64 {
        self.entries[self.codim][self.codim + 1..].iter().sum()
    }

    pub fn projective_dimension(&self) -> usize {
        (0..=self.n).rev().find(|&i| self.total(i) > 0).unwrap_or(0)
    }

    /// Non-zero entries `(i, j, b_{i,j})` in row-major order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, b)| **b > 0)
                .map(move |(j, b)| (i, j, *b))
        })
    }
}

/// Macaulay2-style display: column `i`, row `j - i`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = self.projective_dimension();
        let top = self.nonzero().map(|(i, j, _)| j - i).max().unwrap_or(0);
        write!(f, "{:>6}", "")?;
        for i in 0..=pd {
            write!(f, " {i:>5}")?;
        }
        writeln!(f)?;
        write!(f, "{:>6}", "total:")?;
        for i in 0..=pd {
            write!(f, " {:>5}", self.total(i))?;
        }
        writeln!(f)?;
        for r in 0..=top {
            write!(f, "{:>5}:", r)?;
            for i in 0..=pd {
                let b = self.get(i, i + r);
                if b == 0 {
                    write!(f, " {:>5}", ".")?;
                } else {
                    write!(f, " {b:>5}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Next subset with the same popcount (Gosper's hack); `None` past `limit`.
#[inline]
fn next_same_popcount(x: u64, limit: u64) -> Option<u64> {
    if x == 0 {
        return None;
    }
    let c = x & x.wrapping_neg();
    let r = x.wrapping_add(c);
    if r == 0 {
        return None;
    }
    let next = (((r ^ x) >> 2) / c) | r;
    (next < limit).then_some(next)
}

/// All `j`-subsets of `{0, .., n-1}` in increasing numeric order.
pub(crate) fn subsets_of_size(n: usize, j: usize) -> impl Iterator<Item = VertexSet> {
    let limit = if n >= 64 { u64::MAX } else { 1u64 << n };
    let first = if j > n {
        None
    } else if j == 0 {
        Some(0)
    } else {
        Some(VertexSet::full(j).bits())
    };
    let mut cur = first;
    let mut done_empty = false;
    std::iter::from_fn(move || {
        let x = cur?;
        if x == 0 {
            if done_empty {
                return None;
            }
            done_empty = true;
            cur = None;
            return Some(VertexSet::EMPTY);
        }
        cur = next_same_popcount(x, limit);
        Some(VertexSet::from_bits(x))
    })
}

/// Homology of `Δ|_W`, short-circuiting the two cheap cases: `W` a face
/// (a cone, acyclic unless `W = ∅`).
pub(crate) fn induced_homology(
    cx: &SimplicialComplex,
    w: VertexSet,
    field: FieldSpec,
) -> HomologyProfile {
    if w.is_empty() {
        return HomologyProfile { dims: vec![1] };
    }
    if cx.is_face(w) {
        return HomologyProfile {
            dims: vec![0; w.len() + 1],
        };
    }
    homology_of_facets(&cx.restricted_facets(w), field)
}

fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn check_sweep_size(n: usize, sizes: impl Iterator<Item = usize>) -> Result<()> {
    let total: u128 = sizes.map(|j| binomial_u128(n, j)).sum();
    if n > MAX_SWEEP_VERTICES && total > 1u128 << MAX_SWEEP_VERTICES {
        return Err(Error::Capacity(format!(
            "{total} induced subcomplexes on {n} vertices exceed the sweep bound"
        )));
    }
    Ok(())
}

/// Column `j` of the Betti table: contributions of every `W` with `|W| = j`.
fn betti_column(cx: &SimplicialComplex, j: usize, field: FieldSpec) -> Vec<u64> {
    let n = cx.n();
    let mut col = vec![0u64; n + 1];
    for w in subsets_of_size(n, j) {
        let h = induced_homology(cx, w, field);
        for (k, &dim) in h.dims.iter().enumerate() {
            // k = (j - i - 1) + 1
            if dim > 0 && k <= j {
                col[j - k] += dim as u64;
            }
        }
    }
    col
}

/// The graded Betti table of `S/I_Δ`, one homology computation per subset.
pub fn betti_table(cx: &SimplicialComplex, field: FieldSpec) -> Result<BettiTable> {
    let codim = cx.codimension()?;
    let n = cx.n();
    check_sweep_size(n, 0..=n)?;
    let columns: Vec<Vec<u64>> = if n >= PARALLEL_THRESHOLD {
        (0..=n)
            .into_par_iter()
            .map(|j| betti_column(cx, j, field))
            .collect()
    } else {
        (0..=n).map(|j| betti_column(cx, j, field)).collect()
    };
    let entries = (0..=n)
        .map(|i| (0..=n).map(|j| columns[j][i]).collect())
        .collect();
    Ok(BettiTable {
        n,
        codim,
        field,
        entries,
    })
}

pub fn total_betti(cx: &SimplicialComplex, field: FieldSpec, i: usize) -> Result<u64> {
    Ok(betti_table(cx, field)?.total(i))
}

/// `type(Δ) = Σ_{j>c} b_{c,j}`, sweeping only the subsets with `|W| > c`.
pub fn modified_type(cx: &SimplicialComplex, field: FieldSpec) -> Result<u64> {
    let c = cx.codimension()?;
    let n = cx.n();
    check_sweep_size(n, c + 1..=n)?;
    let row_entry = |j: usize| -> u64 {
        let want = (j - c - 1) as isize;
        subsets_of_size(n, j)
            .map(|w| induced_homology(cx, w, field).get(want) as u64)
            .sum()
    };
    Ok(if n >= PARALLEL_THRESHOLD {
        (c + 1..=n).into_par_iter().map(row_entry).sum()
    } else {
        (c + 1..=n).map(row_entry).sum()
    })
}

/// `td(Δ) = type(Δ) - codim(Δ)`.
pub fn type_defect(cx: &SimplicialComplex, field: FieldSpec) -> Result<i64> {
    Ok(modified_type(cx, field)? as i64 - cx.codimension()? as i64)
}

pub(crate) fn adjacency(g: &SimplicialComplex) -> Vec<VertexSet> {
    let mut adj = vec![VertexSet::EMPTY; g.n()];
    for f in g.facets().iter().filter(|f| f.len() == 2) {
        let mut it = f.iter();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        adj[a].insert(b);
        adj[b].insert(a);
    }
    adj
}

/// Connected components of the graph restricted to `vertices`.
pub(crate) fn component_count(adj: &[VertexSet], vertices: VertexSet) -> usize {
    let mut left = vertices;
    let mut count = 0;
    while let Some(start) = left.min() {
        count += 1;
        let mut frontier = VertexSet::singleton(start);
        let mut seen = frontier;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(adj[v]);
            }
            next = next.intersection(vertices).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        left = left.difference(seen);
    }
    count
}

/// Checks that `g` is a graph: dimension at most one and every ground-set
/// vertex a face.
pub(crate) fn require_graph(g: &SimplicialComplex) -> Result<()> {
    if g.dimension()? > 1 {
        return domain("expected a graph (complex of dimension at most 1)");
    }
    let unused = g.ground_set().difference(g.used_vertices());
    if !unused.is_empty() {
        return domain(format!("vertices {unused} are not faces; not a graph"));
    }
    Ok(())
}

/// The closed form `type(G) = e - n + C(G) + Σ_v (C(G - v) - 1)` for a graph
/// with at least one edge. An edgeless graph on `n` vertices is a
/// zero-dimensional complex whose type is `dim H̃_0 = n - 1`.
pub fn graph_type(g: &SimplicialComplex) -> Result<u64> {
    require_graph(g)?;
    let n = g.n();
    let adj = adjacency(g);
    let e: usize = adj.iter().map(|a| a.len()).sum::<usize>() / 2;
    if e == 0 {
        return Ok(n.saturating_sub(1) as u64);
    }
    let all = g.ground_set();
    let mut total = e as i64 - n as i64 + component_count(&adj, all) as i64;
    for v in 0..n {
        total += component_count(&adj, all.without(v)) as i64 - 1;
    }
    Ok(total as u64)
}

/// The type from the Alexander-dual side:
/// `Σ_{j>0} Σ_{|W|=c+j, W ∉ Δ} dim H̃_{c-2}(lk_{Δ^∨}(V \ W))`.
pub fn dual_type(cx: &SimplicialComplex, field: FieldSpec) -> Result<u64> {
    let c = cx.codimension()?;
    if c == 0 {
        return domain("the full simplex has a void Alexander dual");
    }
    let dual = cx.alexander_dual()?;
    let n = cx.n();
    check_sweep_size(n, c + 1..=n)?;
    let want = c as isize - 2;
    let mut total = 0u64;
    for j in c + 1..=n {
        for w in subsets_of_size(n, j) {
            if cx.is_face(w) {
                continue;
            }
            let lk = dual.link_facets(w.complement(n));
            total += homology_of_facets(&lk, field).get(want) as u64;
        }
    }
    Ok(total)
}

/// Largest ground set for [`induced_type_defects`], which walks every pair
/// `U ⊆ W ⊆ V`.
pub const MAX_INDUCED_SWEEP_VERTICES: usize = 16;

/// `td(Δ|_W)` for every `W ⊆ V`, indexed by the bit pattern of `W`. Each
/// induced subcomplex has its homology computed once and is then shared by
/// the Hochster sums of all its supersets.
pub fn induced_type_defects(cx: &SimplicialComplex, field: FieldSpec) -> Result<Vec<i64>> {
    cx.require_nonvoid()?;
    let n = cx.n();
    if n > MAX_INDUCED_SWEEP_VERTICES {
        return Err(Error::Capacity(format!(
            "induced type-defect sweep supports at most {MAX_INDUCED_SWEEP_VERTICES} vertices, got {n}"
        )));
    }
    let subsets = 0..1u64 << n;
    let profile = |bits: u64| induced_homology(cx, VertexSet::from_bits(bits), field);
    let profiles: Vec<HomologyProfile> = if n >= PARALLEL_THRESHOLD {
        subsets.into_par_iter().map(profile).collect()
    } else {
        subsets.map(profile).collect()
    };
    let td = |bits: u64| -> i64 {
        let w = VertexSet::from_bits(bits);
        let d = profiles[bits as usize].dims.len() - 1;
        let c = w.len() - d;
        let ty: usize = w
            .subsets()
            .filter(|u| u.len() > c)
            .map(|u| profiles[u.bits() as usize].get((u.len() - c - 1) as isize))
            .sum();
        ty as i64 - c as i64
    };
    Ok(if n >= PARALLEL_THRESHOLD {
        (0..1u64 << n).into_par_iter().map(td).collect()
    } else {
        (0..1u64 << n).map(td).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn two_edges() -> SimplicialComplex {
        SimplicialComplex::from_lists(4, [[0, 1], [2, 3]]).unwrap()
    }

    #[test]
    fn induced_sweep_matches_direct_type_defects() {
        for cx in [
            SimplicialComplex::cycle(5),
            SimplicialComplex::complete_graph(4),
            SimplicialComplex::from_lists(
                6,
                [vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4], vec![2, 4, 5]],
            )
            .unwrap(),
            SimplicialComplex::from_lists(5, [vec![0, 1], vec![2, 3]]).unwrap(),
        ] {
            let all = induced_type_defects(&cx, Q).unwrap();
            for w in cx.ground_set().subsets() {
                let sub = cx.induced(w).unwrap().complex;
                assert_eq!(
                    all[w.bits() as usize],
                    type_defect(&sub, Q).unwrap(),
                    "{cx:?} on {w}"
                );
            }
        }
    }

    #[test]
    fn subset_enumeration_counts() {
        assert_eq!(subsets_of_size(5, 0).count(), 1);
        assert_eq!(subsets_of_size(5, 2).count(), 10);
        assert_eq!(subsets_of_size(5, 5).count(), 1);
        assert_eq!(subsets_of_size(5, 6).count(), 0);
        assert_eq!(subsets_of_size(64, 63).count(), 64);
        assert!(subsets_of_size(6, 3).all(|w| w.len() == 3 && w.within(6)));
    }

    #[test]
    fn betti_tables_of_fixtures() {
        let full = betti_table(&SimplicialComplex::simplex(4), Q).unwrap();
        assert_eq!(full.nonzero().collect::<Vec<_>>(), vec![(0, 0, 1)]);
        let b = betti_table(&SimplicialComplex::simplex_boundary(4), Q).unwrap();
        assert_eq!(b.nonzero().collect::<Vec<_>>(), vec![(0, 0, 1), (1, 4, 1)]);
        let t = betti_table(&two_edges(), Q).unwrap();
        assert_eq!(t.total(2), 4);
        assert_eq!(t.totals(), vec![1, 4, 4, 1, 0]);
    }

    #[test]
    fn totals_and_types() {
        let p4 = SimplicialComplex::path(4);
        assert_eq!(total_betti(&p4, Q, 1).unwrap(), 3);
        assert_eq!(total_betti(&p4, Q, 0).unwrap(), 1);
        assert_eq!(total_betti(&SimplicialComplex::cycle(4), Q, 2).unwrap(), 1);
        assert_eq!(modified_type(&SimplicialComplex::simplex(3), Q).unwrap(), 0);
        assert_eq!(modified_type(&two_edges(), Q).unwrap(), 4);
        for d in 2..=6 {
            assert_eq!(
                modified_type(&SimplicialComplex::simplex_boundary(d + 1), Q).unwrap(),
                1
            );
        }
    }

    #[test]
    fn type_defects() {
        assert_eq!(type_defect(&SimplicialComplex::path(5), Q).unwrap(), 0);
        assert_eq!(
            type_defect(&SimplicialComplex::complete_graph(4), Q).unwrap(),
            1
        );
        assert_eq!(type_defect(&SimplicialComplex::cycle(4), Q).unwrap(), -1);
        assert_eq!(type_defect(&SimplicialComplex::cycle(7), Q).unwrap(), -4);
    }

    #[test]
    fn graph_type_closed_form() {
        assert_eq!(graph_type(&SimplicialComplex::path(3)).unwrap(), 1);
        assert_eq!(graph_type(&two_edges()).unwrap(), 4);
        // 2-connected: e - n + 1
        assert_eq!(graph_type(&SimplicialComplex::cycle(6)).unwrap(), 1);
        assert_eq!(
            graph_type(&SimplicialComplex::complete_graph(5)).unwrap(),
            10 - 5 + 1
        );
        assert_eq!(
            graph_type(&SimplicialComplex::graph(3, &[]).unwrap()).unwrap(),
            2
        );
        assert_eq!(
            graph_type(&SimplicialComplex::graph(1, &[]).unwrap()).unwrap(),
            0
        );
        assert!(graph_type(&SimplicialComplex::simplex(3)).is_err());
        let unused = SimplicialComplex::from_lists(3, [[0, 1]]).unwrap();
        assert!(graph_type(&unused).is_err());
    }

    #[test]
    fn dual_type_examples() {
        assert_eq!(dual_type(&two_edges(), Q).unwrap(), 4);
        assert_eq!(
            dual_type(&SimplicialComplex::simplex_boundary(4), Q).unwrap(),
            1
        );
        assert!(dual_type(&SimplicialComplex::simplex(3), Q).is_err());
    }

    #[test]
    fn betti_display_has_total_row() {
        let s = betti_table(&two_edges(), Q).unwrap().to_string();
        assert!(s.contains("total:"));
        assert!(s.lines().count() >= 3);
    }
}
