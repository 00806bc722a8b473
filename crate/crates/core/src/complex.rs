//! Simplicial complexes stored as antichains of facets over a ground set of
//! at most 64 vertices.
//!
//! Vertices of the ground set need not lie in any facet. Such unused vertices
//! are non-faces and contribute linear generators to the Stanley-Reisner
//! ideal, so the ground-set size `n` is part of the value, not derived from
//! the facets.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{domain, range, Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

/// `entries[k]` is the number of faces of cardinality `k`, so `entries[0]`
/// is `f_{-1} = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVector {
    pub entries: Vec<u64>,
}

/// `entries[k]` is `h_k`, for `k = 0..=d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HVector {
    pub entries: Vec<i64>,
}

/// An induced subcomplex re-indexed onto `0..W.len()`; `vertices[i]` is the
/// original index of new vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub complex: SimplicialComplex,
    pub vertices: Vec<usize>,
}

/// Keeps the inclusion-maximal sets, sorted by bit pattern.
pub(crate) fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// All faces generated by `facets`, sorted by (cardinality, bit pattern).
pub(crate) fn faces_of(facets: &[VertexSet]) -> Vec<VertexSet> {
    let mut all: Vec<u64> = Vec::new();
    for f in facets {
        all.extend(f.subsets().map(VertexSet::bits));
    }
    all.sort_unstable_by_key(|b| (b.count_ones(), *b));
    all.dedup();
    all.into_iter().map(VertexSet::from_bits).collect()
}

pub(crate) fn binomial_i128(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

impl SimplicialComplex {
    /// The complex generated by `faces` on the ground set `{0, .., n-1}`.
    ///
    /// An empty face list gives the void complex, which is a legal value but
    /// is rejected by every invariant-computing operation.
    pub fn new(n: usize, faces: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if n > MAX_VERTICES {
            return range(format!("ground set of {n} vertices exceeds {MAX_VERTICES}"));
        }
        let faces: Vec<VertexSet> = faces.into_iter().collect();
        if let Some(bad) = faces.iter().find(|f| !f.within(n)) {
            return range(format!(
                "face {bad} is not inside the ground set of size {n}"
            ));
        }
        Ok(SimplicialComplex {
            n,
            facets: maximal_sets(faces),
        })
    }

    /// Convenience constructor from vertex lists.
    pub fn from_lists<I, F>(n: usize, faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[usize]>,
    {
        let mut sets = Vec::new();
        for f in faces {
            let f = f.as_ref();
            if let Some(&v) = f.iter().find(|&&v| v >= n) {
                return range(format!(
                    "vertex {v} is not inside the ground set of size {n}"
                ));
            }
            sets.push(f.iter().copied().collect());
        }
        Self::new(n, sets)
    }

    pub(crate) fn from_facets_unchecked(n: usize, facets: Vec<VertexSet>) -> Self {
        debug_assert!(facets.windows(2).all(|w| w[0] < w[1]));
        SimplicialComplex { n, facets }
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::full(n)],
        }
    }

    /// The boundary of the simplex on `n` vertices (a sphere of dimension `n-2`).
    pub fn simplex_boundary(n: usize) -> Self {
        let full = VertexSet::full(n);
        let facets = if n == 0 {
            Vec::new()
        } else {
            (0..n).map(|v| full.without(v)).collect()
        };
        SimplicialComplex {
            n,
            facets: maximal_sets(facets),
        }
    }

    /// The complex `{∅}` on `n` unused vertices.
    pub fn empty_face(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::EMPTY],
        }
    }

    /// A graph on `n` vertices: every vertex is a face, plus the given edges.
    pub fn graph(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut faces: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
        for &(a, b) in edges {
            if a >= n || b >= n {
                return range(format!("edge ({a},{b}) leaves the ground set of size {n}"));
            }
            if a == b {
                return domain(format!("loop at vertex {a}"));
            }
            faces.push(VertexSet::singleton(a).with(b));
        }
        Self::new(n, faces)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::graph(n, &edges).expect("path edges are in range")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::graph(n, &edges).expect("cycle edges are in range")
    }

    pub fn complete_graph(n: usize) -> Self {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        Self::graph(n, &edges).expect("complete graph edges are in range")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    #[inline]
    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub(crate) fn require_nonvoid(&self) -> Result<()> {
        if self.is_void() {
            domain("the void complex has no invariants")
        } else {
            Ok(())
        }
    }

    pub fn ground_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Vertices that lie in some facet.
    pub fn used_vertices(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    /// `d`, the maximum facet cardinality.
    pub fn facet_size(&self) -> Result<usize> {
        self.require_nonvoid()?;
        Ok(self.facets.iter().map(|f| f.len()).max().unwrap_or(0))
    }

    /// `d - 1`; the complex `{∅}` has dimension `-1`.
    pub fn dimension(&self) -> Result<isize> {
        Ok(self.facet_size()? as isize - 1)
    }

    /// `n - d`.
    pub fn codimension(&self) -> Result<usize> {
        Ok(self.n - self.facet_size()?)
    }

    /// True iff `Δ` has exactly one facet.
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    #[inline]
    pub fn is_face(&self, s: VertexSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    /// All faces sorted by cardinality, then bit pattern. Includes `∅`.
    pub fn faces(&self) -> Vec<VertexSet> {
        faces_of(&self.facets)
    }

    pub fn f_vector(&self) -> Result<FVector> {
        let d = self.facet_size()?;
        let mut entries = vec![0u64; d + 1];
        for f in self.faces() {
            entries[f.len()] += 1;
        }
        Ok(FVector { entries })
    }

    pub fn h_vector(&self) -> Result<HVector> {
        Ok(self.f_vector()?.to_h())
    }

    /// Restriction to `w` without re-indexing (same ground set).
    pub(crate) fn restricted_facets(&self, w: VertexSet) -> Vec<VertexSet> {
        maximal_sets(self.facets.iter().map(|f| f.intersection(w)).collect())
    }

    /// The induced subcomplex `Δ|_W`, re-indexed densely in increasing
    /// vertex order.
    pub fn induced(&self, w: VertexSet) -> Result<Induced> {
        if !w.within(self.n) {
            return range(format!(
                "{w} is not inside the ground set of size {}",
                self.n
            ));
        }
        let vertices = w.to_vec();
        let facets = self
            .restricted_facets(w)
            .into_iter()
            .map(|f| compress(f, w))
            .collect::<Vec<_>>();
        Ok(Induced {
            complex: SimplicialComplex::new(vertices.len(), facets)?,
            vertices,
        })
    }

    /// `Δ - v`, i.e. `Δ` induced on the ground set without `v`.
    pub fn delete_vertex(&self, v: usize) -> Result<SimplicialComplex> {
        if v >= self.n {
            return range(format!(
                "vertex {v} is not inside the ground set of size {}",
                self.n
            ));
        }
        Ok(self.induced(self.ground_set().without(v))?.complex)
    }

    /// `lk F = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`, kept on the same ground set.
    pub fn link(&self, face: VertexSet) -> Result<SimplicialComplex> {
        self.require_nonvoid()?;
        if !self.is_face(face) {
            return domain(format!("{face} is not a face"));
        }
        Ok(SimplicialComplex {
            n: self.n,
            facets: self.link_facets(face),
        })
    }

    pub(crate) fn link_facets(&self, face: VertexSet) -> Vec<VertexSet> {
        maximal_sets(
            self.facets
                .iter()
                .filter(|f| face.is_subset(**f))
                .map(|f| f.difference(face))
                .collect(),
        )
    }

    /// `Δ1 * Δ2` on the concatenated ground set (vertices of `other` are
    /// shifted by `self.n()`).
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return range(format!("join needs {n} vertices"));
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                facets.push(a.union(VertexSet::from_bits(b.bits() << self.n)));
            }
        }
        SimplicialComplex::new(n, facets)
    }

    /// Inclusion-minimal non-faces, sorted by bit pattern. These index the
    /// minimal monomial generators of the Stanley-Reisner ideal.
    pub fn minimal_nonfaces(&self) -> Result<Vec<VertexSet>> {
        self.require_nonvoid()?;
        let mut out = Vec::new();
        for g in self.faces() {
            let start = g.iter().last().map_or(0, |m| m + 1);
            for v in start..self.n {
                let s = g.with(v);
                if self.is_face(s) {
                    continue;
                }
                if g.iter().all(|u| self.is_face(s.without(u))) {
                    out.push(s);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// The Alexander dual: faces are complements of non-faces. The dual of
    /// the full simplex is the void complex.
    pub fn alexander_dual(&self) -> Result<SimplicialComplex> {
        let facets = self
            .minimal_nonfaces()?
            .into_iter()
            .map(|s| s.complement(self.n))
            .collect::<Vec<_>>();
        SimplicialComplex::new(self.n, facets)
    }

    pub fn is_pure(&self) -> bool {
        self.facets
            .first()
            .is_none_or(|f0| self.facets.iter().all(|f| f.len() == f0.len()))
    }

    /// Every minimal non-face has cardinality two.
    pub fn is_flag(&self) -> Result<bool> {
        Ok(self.minimal_nonfaces()?.iter().all(|s| s.len() == 2))
    }

    /// The sub-complex of faces of dimension at most `k`.
    pub fn skeleton(&self, k: isize) -> Result<SimplicialComplex> {
        self.require_nonvoid()?;
        let size = (k + 1).max(0) as usize;
        let mut faces = Vec::new();
        for f in &self.facets {
            if f.len() <= size {
                faces.push(*f);
            } else {
                faces.extend(f.subsets().filter(|s| s.len() == size));
            }
        }
        SimplicialComplex::new(self.n, faces)
    }

    /// The clique complex of a graph (a complex of dimension at most one).
    /// Only vertices that are faces of `g` can belong to cliques.
    pub fn clique_complex(g: &SimplicialComplex) -> Result<SimplicialComplex> {
        if g.dimension()? > 1 {
            return domain("clique complex needs a graph (dimension at most 1)");
        }
        let vertices = g.used_vertices();
        let mut adj = vec![VertexSet::EMPTY; g.n];
        for f in g.facets.iter().filter(|f| f.len() == 2) {
            let v: Vec<usize> = f.to_vec();
            adj[v[0]].insert(v[1]);
            adj[v[1]].insert(v[0]);
        }
        let mut cliques = Vec::new();
        bron_kerbosch(
            &adj,
            VertexSet::EMPTY,
            vertices,
            VertexSet::EMPTY,
            &mut cliques,
        );
        if cliques.is_empty() {
            cliques.push(VertexSet::EMPTY);
        }
        SimplicialComplex::new(g.n, cliques)
    }

    /// True iff the facet graph (facets adjacent when they meet in a face of
    /// codimension one) is connected. Requires a pure complex.
    pub fn is_strongly_facet_connected(&self) -> Result<bool> {
        self.require_nonvoid()?;
        if !self.is_pure() {
            return domain("strong facet connectivity is defined for pure complexes");
        }
        let k = self.facets.len();
        let size = self.facets[0].len();
        let mut seen = vec![false; k];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut count = 1;
        while let Some(i) = queue.pop_front() {
            for j in 0..k {
                if !seen[j] && self.facets[i].intersection(self.facets[j]).len() + 1 == size {
                    seen[j] = true;
                    count += 1;
                    queue.push_back(j);
                }
            }
        }
        Ok(count == k)
    }

    /// Relabels vertices through `map` (old index -> new index) onto a ground
    /// set of size `n`.
    pub fn relabel(&self, n: usize, map: &[usize]) -> Result<SimplicialComplex> {
        if map.len() != self.n {
            return Err(Error::Domain(format!(
                "relabel map has {} entries for {} vertices",
                map.len(),
                self.n
            )));
        }
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().map(|v| map[v]).collect::<VertexSet>())
            .collect::<Vec<_>>();
        SimplicialComplex::new(n, facets)
    }
}

/// Maps the members of `f` (a subset of `w`) to their positions inside `w`.
pub(crate) fn compress(f: VertexSet, w: VertexSet) -> VertexSet {
    f.iter().map(|v| w.rank_of(v)).collect()
}

fn bron_kerbosch(
    adj: &[VertexSet],
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() {
        if x.is_empty() && !r.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| adj[u].intersection(p).len())
        .unwrap();
    for v in p.difference(adj[pivot]).iter() {
        bron_kerbosch(
            adj,
            r.with(v),
            p.intersection(adj[v]),
            x.intersection(adj[v]),
            out,
        );
        p.remove(v);
        x.insert(v);
    }
}

impl FVector {
    /// `d`, the number of vertices of a largest face.
    pub fn facet_size(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn to_h(&self) -> HVector {
        let d = self.facet_size() as i64;
        let entries = (0..=d)
            .map(|k| {
                (0..=k)
                    .map(|i| {
                        let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                        sign * binomial_i128(d - i, k - i) * self.entries[i as usize] as i128
                    })
                    .sum::<i128>() as i64
            })
            .collect();
        HVector { entries }
    }

    /// Reduced Euler characteristic `-f_{-1} + f_0 - f_1 + ...`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { -(f as i64) } else { f as i64 })
            .sum()
    }
}

impl HVector {
    /// `h_i`, zero outside `0..=d`.
    pub fn get(&self, i: usize) -> i64 {
        self.entries.get(i).copied().unwrap_or(0)
    }

    pub fn to_f(&self) -> FVector {
        let d = self.entries.len() as i64 - 1;
        let entries = (0..=d)
            .map(|k| {
                (0..=k)
                    .map(|i| binomial_i128(d - i, k - i) * self.entries[i as usize] as i128)
                    .sum::<i128>() as u64
            })
            .collect();
        FVector { entries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn heredity_example() -> SimplicialComplex {
        SimplicialComplex::from_lists(6, [[0, 1, 2], [1, 2, 3], [2, 3, 4], [2, 4, 5]]).unwrap()
    }

    #[test]
    fn make_complex_absorbs_and_sorts() {
        let c = SimplicialComplex::from_lists(3, [vec![0, 1], vec![0], vec![0, 1, 2]]).unwrap();
        assert_eq!(c.facets(), &[set(&[0, 1, 2])]);
        let c = SimplicialComplex::from_lists(4, [[0, 1], [2, 3]]).unwrap();
        assert_eq!(c.facets(), &[set(&[0, 1]), set(&[2, 3])]);
        let h = heredity_example();
        assert_eq!(h.facets().len(), 4);
        assert_eq!(h.dimension().unwrap(), 2);
        assert!(matches!(
            SimplicialComplex::from_lists(3, [[0, 3]]),
            Err(Error::Range(_))
        ));
        let void = SimplicialComplex::new(3, []).unwrap();
        assert!(void.is_void());
        assert!(matches!(void.dimension(), Err(Error::Domain(_))));
    }

    #[test]
    fn dimension_and_codimension() {
        assert_eq!(SimplicialComplex::simplex(4).dimension().unwrap(), 3);
        assert_eq!(SimplicialComplex::empty_face(3).dimension().unwrap(), -1);
        assert_eq!(SimplicialComplex::simplex(5).codimension().unwrap(), 0);
        assert_eq!(
            SimplicialComplex::simplex_boundary(4)
                .codimension()
                .unwrap(),
            1
        );
        let two_edges = SimplicialComplex::from_lists(4, [[0, 1], [2, 3]]).unwrap();
        assert_eq!(two_edges.codimension().unwrap(), 2);
    }

    #[test]
    fn induced_subcomplexes() {
        let h = heredity_example();
        assert_eq!(h.induced(h.ground_set()).unwrap().complex, h);
        let ind = h.induced(set(&[0, 1, 2, 4, 5])).unwrap();
        assert_eq!(ind.vertices, vec![0, 1, 2, 4, 5]);
        // {0,1,2} and {2,4,5} re-indexed to {0,1,2} and {2,3,4}
        assert_eq!(ind.complex.facets(), &[set(&[0, 1, 2]), set(&[2, 3, 4])]);
        let c4 = SimplicialComplex::cycle(4);
        assert_eq!(
            c4.induced(set(&[0, 1, 2])).unwrap().complex,
            SimplicialComplex::path(3)
        );
    }

    #[test]
    fn delete_link_join() {
        let b = SimplicialComplex::simplex_boundary(4);
        let lk = b.link(VertexSet::singleton(0)).unwrap();
        assert_eq!(lk.facets(), &[set(&[1, 2]), set(&[1, 3]), set(&[2, 3])]);
        let e = SimplicialComplex::simplex(2);
        assert_eq!(e.join(&e).unwrap(), SimplicialComplex::simplex(4));
        let p3 = SimplicialComplex::path(3);
        assert_eq!(p3.delete_vertex(0).unwrap(), SimplicialComplex::path(2));
        assert!(matches!(b.link(VertexSet::full(4)), Err(Error::Domain(_))));
    }

    #[test]
    fn minimal_nonfaces_examples() {
        assert!(SimplicialComplex::simplex(5)
            .minimal_nonfaces()
            .unwrap()
            .is_empty());
        let two_edges = SimplicialComplex::from_lists(4, [[0, 1], [2, 3]]).unwrap();
        assert_eq!(
            two_edges.minimal_nonfaces().unwrap(),
            vec![set(&[0, 2]), set(&[1, 2]), set(&[0, 3]), set(&[1, 3])]
        );
        let p4 = SimplicialComplex::path(4);
        assert_eq!(
            p4.minimal_nonfaces().unwrap(),
            vec![set(&[0, 2]), set(&[0, 3]), set(&[1, 3])]
        );
        let unused = SimplicialComplex::from_lists(3, [[0, 1]]).unwrap();
        assert_eq!(unused.minimal_nonfaces().unwrap(), vec![set(&[2])]);
    }

    #[test]
    fn alexander_duals() {
        let b = SimplicialComplex::simplex_boundary(4);
        assert_eq!(
            b.alexander_dual().unwrap(),
            SimplicialComplex::empty_face(4)
        );
        let p4 = SimplicialComplex::path(4);
        let dual = p4.alexander_dual().unwrap();
        assert_eq!(dual.facets(), &[set(&[0, 2]), set(&[1, 2]), set(&[1, 3])]);
        assert_eq!(dual.alexander_dual().unwrap(), p4);
        assert!(SimplicialComplex::simplex(3)
            .alexander_dual()
            .unwrap()
            .is_void());
    }

    #[test]
    fn f_and_h_vectors() {
        let b = SimplicialComplex::simplex_boundary(4);
        assert_eq!(b.f_vector().unwrap().entries, vec![1, 4, 6, 4]);
        assert_eq!(b.h_vector().unwrap().entries, vec![1, 1, 1, 1]);
        assert_eq!(
            SimplicialComplex::simplex(5).h_vector().unwrap().entries,
            vec![1, 0, 0, 0, 0, 0]
        );
        let c4 = SimplicialComplex::cycle(4);
        assert_eq!(c4.f_vector().unwrap().entries, vec![1, 4, 4]);
        assert_eq!(c4.h_vector().unwrap().entries, vec![1, 2, 1]);
        assert_eq!(c4.h_vector().unwrap().to_f(), c4.f_vector().unwrap());
    }

    #[test]
    fn flag_and_cliques() {
        let k4 = SimplicialComplex::complete_graph(4);
        assert_eq!(
            SimplicialComplex::clique_complex(&k4).unwrap(),
            SimplicialComplex::simplex(4)
        );
        assert!(SimplicialComplex::cycle(4).is_flag().unwrap());
        assert!(!SimplicialComplex::simplex_boundary(4).is_flag().unwrap());
        let tri = SimplicialComplex::simplex(3);
        assert!(matches!(
            SimplicialComplex::clique_complex(&tri),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn strong_facet_connectivity() {
        assert!(SimplicialComplex::simplex(4)
            .is_strongly_facet_connected()
            .unwrap());
        let two_edges = SimplicialComplex::from_lists(4, [[0, 1], [2, 3]]).unwrap();
        assert!(!two_edges.is_strongly_facet_connected().unwrap());
        let ind = heredity_example()
            .induced(set(&[0, 1, 2, 4, 5]))
            .unwrap()
            .complex;
        assert!(ind.is_pure());
        assert!(!ind.is_strongly_facet_connected().unwrap());
        let mixed = SimplicialComplex::from_lists(3, [vec![0, 1], vec![2]]).unwrap();
        assert!(matches!(
            mixed.is_strongly_facet_connected(),
            Err(Error::Domain(_))
        ));
    }
}
