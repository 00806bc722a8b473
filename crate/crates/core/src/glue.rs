//! Gluing complexes along identified faces, the gluing type identities, and
//! treeish complexes (construction and recognition).

use std::collections::HashSet;

use num_integer::binomial;
use serde::Serialize;

use crate::betti::{modified_type, type_defect};
use crate::cm::{is_cohen_macaulay, MAX_SEARCH_FACETS};
use crate::complex::SimplicialComplex;
use crate::error::{domain, Error, Result};
use crate::field::FieldSpec;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// `Δ1 ⊔_{E1=E2} Δ2`. Vertices of `Δ1` keep their indices; the vertices of
/// `Δ2` outside `E2` are appended in increasing order, and the `i`-th
/// smallest vertex of `E2` is identified with the `i`-th smallest of `E1`.
pub fn glue(
    d1: &SimplicialComplex,
    e1: VertexSet,
    d2: &SimplicialComplex,
    e2: VertexSet,
) -> Result<SimplicialComplex> {
    d1.require_nonvoid()?;
    d2.require_nonvoid()?;
    if !d1.is_face(e1) {
        return domain(format!("{e1} is not a face of the first complex"));
    }
    if !d2.is_face(e2) {
        return domain(format!("{e2} is not a face of the second complex"));
    }
    if e1.len() != e2.len() {
        return domain(format!("cannot identify {e1} with {e2}: sizes differ"));
    }
    let n = d1.n() + d2.n() - e1.len();
    if n > MAX_VERTICES {
        return Err(Error::Range(format!("glued complex needs {n} vertices")));
    }
    let mut map = vec![0; d2.n()];
    for (a, b) in e2.iter().zip(e1.iter()) {
        map[a] = b;
    }
    for (k, v) in d2.ground_set().difference(e2).iter().enumerate() {
        map[v] = d1.n() + k;
    }
    let moved = d2.relabel(n, &map)?;
    SimplicialComplex::new(n, d1.facets().iter().chain(moved.facets()).copied())
}

/// Both sides of the gluing identities
///
/// `type(Δ1 ⊔ Δ2) = type(Δ1) + type(Δ2) + C(n-ℓ, c+1)`
/// `td(Δ1 ⊔ Δ2) = td(Δ1) + td(Δ2) - d + ℓ + C(n-ℓ, c+1)`
///
/// where `n`, `c` belong to the glued complex and `ℓ = |E1|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlueReport {
    pub p: usize,
    pub m: usize,
    pub n: usize,
    pub ell: usize,
    pub d: usize,
    pub c: usize,
    pub binomial_term: u64,
    pub type_glued: u64,
    pub type_first: u64,
    pub type_second: u64,
    pub type_predicted: u64,
    pub type_identity_holds: bool,
    pub td_glued: i64,
    pub td_first: i64,
    pub td_second: i64,
    pub td_predicted: i64,
    pub td_identity_holds: bool,
    /// `ℓ >= d - 1`, where the type defect is additive.
    pub additive_case: bool,
    pub additivity_holds: bool,
    pub first_cm: bool,
    pub second_cm: bool,
}

impl GlueReport {
    pub fn holds(&self) -> bool {
        self.type_identity_holds
            && self.td_identity_holds
            && (!self.additive_case || self.additivity_holds)
    }
}

/// Computes every quantity in the gluing identities from scratch. Refuses
/// inputs outside the hypotheses (both CM, same dimension) unless
/// `allow_non_cm` is set, in which case only the dimension is enforced.
pub fn verify_glue_type(
    d1: &SimplicialComplex,
    e1: VertexSet,
    d2: &SimplicialComplex,
    e2: VertexSet,
    field: FieldSpec,
    allow_non_cm: bool,
) -> Result<GlueReport> {
    let d = d1.facet_size()?;
    if d2.facet_size()? != d {
        return Err(Error::Precondition {
            hypothesis: format!(
                "complexes must have equal dimension, got {} and {}",
                d as isize - 1,
                d2.facet_size()? as isize - 1
            ),
        });
    }
    let first_cm = is_cohen_macaulay(d1, field)?;
    let second_cm = is_cohen_macaulay(d2, field)?;
    if !allow_non_cm {
        for (cm, which) in [(first_cm, "first"), (second_cm, "second")] {
            if !cm {
                return Err(Error::Precondition {
                    hypothesis: format!("the {which} complex is not Cohen-Macaulay over {field}"),
                });
            }
        }
    }
    let glued = glue(d1, e1, d2, e2)?;
    let (p, m, n, ell) = (d1.n(), d2.n(), glued.n(), e1.len());
    let c = glued.codimension()?;
    let binomial_term = binomial((n - ell) as u64, (c + 1) as u64);
    let type_first = modified_type(d1, field)?;
    let type_second = modified_type(d2, field)?;
    let type_glued = modified_type(&glued, field)?;
    let type_predicted = type_first + type_second + binomial_term;
    let td_first = type_defect(d1, field)?;
    let td_second = type_defect(d2, field)?;
    let td_glued = type_defect(&glued, field)?;
    let td_predicted = td_first + td_second - d as i64 + ell as i64 + binomial_term as i64;
    Ok(GlueReport {
        p,
        m,
        n,
        ell,
        d,
        c,
        binomial_term,
        type_glued,
        type_first,
        type_second,
        type_predicted,
        type_identity_holds: type_glued == type_predicted,
        td_glued,
        td_first,
        td_second,
        td_predicted,
        td_identity_holds: td_glued == td_predicted,
        additive_case: ell + 1 >= d,
        additivity_holds: td_glued == td_first + td_second,
        first_cm,
        second_cm,
    })
}

/// Starting piece of a treeish complex of facet size `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TreeishBase {
    /// One `(d-1)`-simplex on `d` vertices.
    Simplex,
    /// The boundary of a `d`-simplex on `d + 1` vertices.
    SimplexBoundary,
}

/// One gluing step; `face` is a face of the complex built so far.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TreeishMove {
    /// Glue a new `(d-1)`-simplex along `face`, which must have `d - 1`
    /// vertices; one new vertex is added.
    AttachSimplex { face: VertexSet },
    /// Glue the boundary of a new `d`-simplex along `face`, which must have
    /// `d - 1` or `d` vertices; the missing vertices are new.
    AttachBoundary { face: VertexSet },
}

/// Every intermediate complex of a treeish construction, base first.
pub fn build_treeish_steps(
    d: usize,
    base: TreeishBase,
    moves: &[TreeishMove],
) -> Result<Vec<SimplicialComplex>> {
    if d == 0 {
        return domain("treeish complexes need facet size at least 1");
    }
    let start = match base {
        TreeishBase::Simplex => SimplicialComplex::simplex(d),
        TreeishBase::SimplexBoundary => SimplicialComplex::simplex_boundary(d + 1),
    };
    let mut steps = vec![start];
    for (index, mv) in moves.iter().enumerate() {
        let current = steps.last().unwrap();
        let (face, allowed) = match *mv {
            TreeishMove::AttachSimplex { face } => (face, face.len() + 1 == d),
            TreeishMove::AttachBoundary { face } => (face, face.len() + 1 == d || face.len() == d),
        };
        if !allowed || !current.is_face(face) {
            return domain(format!(
                "move {index}: {face} is not an admissible gluing face"
            ));
        }
        let fresh = match mv {
            TreeishMove::AttachSimplex { .. } => d - face.len(),
            TreeishMove::AttachBoundary { .. } => d + 1 - face.len(),
        };
        let n = current.n() + fresh;
        if n > MAX_VERTICES {
            return Err(Error::Range(format!(
                "move {index}: complex would need {n} vertices"
            )));
        }
        let u = face.union(VertexSet::full(n).difference(VertexSet::full(current.n())));
        let mut facets = current.facets().to_vec();
        match mv {
            TreeishMove::AttachSimplex { .. } => facets.push(u),
            TreeishMove::AttachBoundary { .. } => facets.extend(u.iter().map(|v| u.without(v))),
        }
        steps.push(SimplicialComplex::new(n, facets)?);
    }
    Ok(steps)
}

pub fn build_treeish_complex(
    d: usize,
    base: TreeishBase,
    moves: &[TreeishMove],
) -> Result<SimplicialComplex> {
    Ok(build_treeish_steps(d, base, moves)?.pop().unwrap())
}

/// Reverse search over treeish constructions. A state is the set of
/// remaining facets; a step removes either a facet glued along a single
/// codimension-one face, or the facets of a simplex boundary whose
/// private vertices can be split off along a face of size `d - 1` or `d`.
pub fn is_treeish_complex(cx: &SimplicialComplex) -> Result<bool> {
    cx.require_nonvoid()?;
    if !cx.is_pure() {
        return domain("treeish recognition needs a pure complex");
    }
    let facets = cx.facets();
    if facets.len() > MAX_SEARCH_FACETS {
        return Err(Error::Capacity(format!(
            "treeish search supports at most {MAX_SEARCH_FACETS} facets, got {}",
            facets.len()
        )));
    }
    let d = facets[0].len();
    let search = TreeishSearch { facets, d };
    Ok(search.run((1u32 << facets.len()) - 1, &mut HashSet::new()))
}

struct TreeishSearch<'a> {
    facets: &'a [VertexSet],
    d: usize,
}

impl TreeishSearch<'_> {
    fn index_of(&self, f: VertexSet) -> Option<usize> {
        self.facets.binary_search(&f).ok()
    }

    fn vertices(&self, mask: u32) -> VertexSet {
        self.members(mask).fold(VertexSet::EMPTY, VertexSet::union)
    }

    fn members(&self, mask: u32) -> impl Iterator<Item = VertexSet> + '_ {
        (0..self.facets.len())
            .filter(move |i| mask >> i & 1 == 1)
            .map(|i| self.facets[i])
    }

    /// Mask of the boundary of `u` when every `d`-subset of `u` is present.
    fn boundary_mask(&self, u: VertexSet, left: u32) -> Option<u32> {
        let mut mask = 0;
        for v in u.iter() {
            let i = self.index_of(u.without(v))?;
            if left >> i & 1 == 0 {
                return None;
            }
            mask |= 1 << i;
        }
        Some(mask)
    }

    fn is_base(&self, left: u32) -> bool {
        if left.count_ones() == 1 {
            return true;
        }
        let u = self.vertices(left);
        u.len() == self.d + 1 && self.boundary_mask(u, left) == Some(left)
    }

    fn run(&self, left: u32, dead: &mut HashSet<u32>) -> bool {
        if self.is_base(left) {
            return true;
        }
        if dead.contains(&left) {
            return false;
        }
        for next in self.peel_moves(left) {
            if self.run(next, dead) {
                return true;
            }
        }
        dead.insert(left);
        false
    }

    fn peel_moves(&self, left: u32) -> Vec<u32> {
        let d = self.d;
        let mut out = Vec::new();
        for i in 0..self.facets.len() {
            if left >> i & 1 == 0 {
                continue;
            }
            let f = self.facets[i];
            let rest = left & !(1 << i);
            // A single facet attached along one codimension-one face.
            let mut meets: Vec<VertexSet> = self.members(rest).map(|g| f.intersection(g)).collect();
            meets.sort_unstable_by_key(|s| std::cmp::Reverse(s.len()));
            if let Some(&top) = meets.first() {
                if top.len() + 1 == d && meets.iter().all(|s| s.is_subset(top)) {
                    out.push(rest);
                }
            }
        }
        // Simplex boundaries: every pair of facets meeting in d - 1 vertices
        // spans a candidate `U` of size d + 1.
        let mut seen = HashSet::new();
        for i in 0..self.facets.len() {
            for j in i + 1..self.facets.len() {
                if left >> i & 1 == 0 || left >> j & 1 == 0 {
                    continue;
                }
                let u = self.facets[i].union(self.facets[j]);
                if u.len() != d + 1 || !seen.insert(u) {
                    continue;
                }
                let Some(bmask) = self.boundary_mask(u, left) else {
                    continue;
                };
                let outside = left & !bmask;
                let outside_vertices = self.vertices(outside);
                // Glued along a facet E = U - {w}: E stays, w is private.
                for w in u.difference(outside_vertices).iter() {
                    let keep = self.index_of(u.without(w)).unwrap();
                    out.push(outside | 1 << keep);
                }
                // Glued along E of size d - 1: both vertices of U - E are private
                // and E is a face of what remains.
                if outside != 0 {
                    let private = u.difference(outside_vertices);
                    for a in private.iter() {
                        for b in private.iter().filter(|&b| b > a) {
                            let e = u.without(a).without(b);
                            if self.members(outside).any(|g| e.is_subset(g)) {
                                out.push(outside);
                            }
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::betti_table;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn cx(n: usize, faces: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(n, faces.iter().map(|f| f.to_vec())).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn gluing_two_triangles() {
        let t = SimplicialComplex::simplex(3);
        let g = glue(&t, set(&[1, 2]), &t, set(&[0, 1])).unwrap();
        assert_eq!(g, cx(4, &[&[0, 1, 2], &[1, 2, 3]]));
        assert_eq!(g.codimension().unwrap(), 1);
        assert_eq!(type_defect(&g, Q).unwrap(), 0);
        let r = verify_glue_type(&t, set(&[1, 2]), &t, set(&[0, 1]), Q, false).unwrap();
        assert!(r.holds());
        assert_eq!((r.p, r.m, r.n, r.ell), (3, 3, 4, 2));
        assert!(glue(&t, set(&[1]), &t, set(&[0, 1])).is_err());
        assert!(glue(&cx(3, &[&[0, 1]]), set(&[0, 2]), &t, set(&[0, 1])).is_err());
    }

    #[test]
    fn simplices_along_codimension_one() {
        for d in 1..=5 {
            let s = SimplicialComplex::simplex(d);
            let e = VertexSet::full(d - 1);
            let r = verify_glue_type(&s, e, &s, e, Q, false).unwrap();
            assert!(r.holds(), "{r:?}");
            assert_eq!(r.td_glued, 0);
        }
    }

    #[test]
    fn non_cm_input() {
        let two = cx(4, &[&[0, 1], &[2, 3]]);
        let edge = SimplicialComplex::simplex(2);
        let err = verify_glue_type(&two, set(&[0]), &edge, set(&[0]), Q, false).unwrap_err();
        assert!(matches!(err, Error::Precondition { .. }));
        let r = verify_glue_type(&two, set(&[0]), &edge, set(&[0]), Q, true).unwrap();
        assert!(!r.type_identity_holds);
        assert_eq!((r.type_predicted, r.type_glued), (5, 6));
        // the same complex with one unused vertex: Tor_3 over the larger ring
        let padded = cx(5, &[&[0, 1], &[2, 3]]);
        assert_eq!(betti_table(&padded, Q).unwrap().total(3), 5);
    }

    #[test]
    fn treeish_construction_and_recognition() {
        let moves = [
            TreeishMove::AttachSimplex { face: set(&[1, 2]) },
            TreeishMove::AttachBoundary { face: set(&[2, 3]) },
            TreeishMove::AttachBoundary {
                face: set(&[3, 4, 5]),
            },
        ];
        let steps = build_treeish_steps(3, TreeishBase::Simplex, &moves).unwrap();
        assert_eq!(steps.len(), 4);
        for s in &steps {
            assert_eq!(type_defect(s, Q).unwrap(), 0, "{s:?}");
            assert!(is_treeish_complex(s).unwrap(), "{s:?}");
        }
        assert!(build_treeish_complex(
            3,
            TreeishBase::Simplex,
            &[TreeishMove::AttachSimplex { face: set(&[0]) }]
        )
        .is_err());
        let bad = build_treeish_complex(
            3,
            TreeishBase::SimplexBoundary,
            &[TreeishMove::AttachSimplex {
                face: set(&[0, 1, 2]),
            }],
        );
        assert!(matches!(bad, Err(Error::Domain(m)) if m.starts_with("move 0")));
        let b = build_treeish_complex(3, TreeishBase::SimplexBoundary, &[]).unwrap();
        assert_eq!(b, SimplicialComplex::simplex_boundary(4));
        assert_eq!(type_defect(&b, Q).unwrap(), 0);
    }

    #[test]
    fn treeish_recognition_examples() {
        assert!(!is_treeish_complex(&cx(4, &[&[0, 1], &[2, 3]])).unwrap());
        let four = cx(6, &[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4], &[2, 4, 5]]);
        assert!(is_treeish_complex(&four).unwrap());
        let w = set(&[0, 1, 2, 4, 5]);
        let sub = four.induced(w).unwrap().complex;
        assert!(!sub.is_strongly_facet_connected().unwrap());
        assert!(!is_treeish_complex(&sub).unwrap());
        assert_ne!(type_defect(&sub, Q).unwrap(), 0);
        assert!(!is_treeish_complex(&SimplicialComplex::cycle(4)).unwrap());
        assert!(is_treeish_complex(&SimplicialComplex::cycle(3)).unwrap());
    }
}
