//! Cohen-Macaulay type classifications: Reisner's criterion, 2-CM,
//! Gorenstein, shellability and facet constructibility.

use std::collections::HashSet;

use crate::betti::betti_table;
use crate::complex::SimplicialComplex;
use crate::error::{domain, Error, Result};
use crate::field::FieldSpec;
use crate::homology::homology_of_facets;
use crate::vertex_set::VertexSet;

/// Facet-count bound for the shelling and constructibility searches.
pub const MAX_SEARCH_FACETS: usize = 20;

/// Reisner: for every face `F`, including `∅`, `H̃_i(lk F) = 0` for all
/// `i < dim lk F`.
pub fn is_cohen_macaulay(cx: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    cx.require_nonvoid()?;
    Ok(cx.faces().into_iter().all(|face| {
        let link = cx.link_facets(face);
        let h = homology_of_facets(&link, field);
        // dims[k] is H̃_{k-1}; dims.len() - 1 is the largest link face size.
        let top = h.dims.len() - 1;
        h.dims[..top].iter().all(|&x| x == 0)
    }))
}

/// CM, and `Δ - v` is CM of the same dimension for every vertex `v`.
pub fn is_2cm(cx: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    if !is_cohen_macaulay(cx, field)? {
        return Ok(false);
    }
    let dim = cx.dimension()?;
    for v in 0..cx.n() {
        let minus = cx.delete_vertex(v)?;
        if minus.is_void() || minus.dimension()? != dim || !is_cohen_macaulay(&minus, field)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// CM with a one-dimensional last module in the resolution (`b_c = 1`).
pub fn is_gorenstein(cx: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    if !is_cohen_macaulay(cx, field)? {
        return Ok(false);
    }
    let c = cx.codimension()?;
    Ok(betti_table(cx, field)?.total(c) == 1)
}

fn require_searchable(cx: &SimplicialComplex, what: &str) -> Result<()> {
    cx.require_nonvoid()?;
    if !cx.is_pure() {
        return domain(format!("{what} is only decided for pure complexes"));
    }
    if cx.facets().len() > MAX_SEARCH_FACETS {
        return Err(Error::Capacity(format!(
            "{what} search supports at most {MAX_SEARCH_FACETS} facets, got {}",
            cx.facets().len()
        )));
    }
    Ok(())
}

/// Inclusion-maximal members of `{f ∩ g : g ∈ others}`.
fn maximal_intersections(f: VertexSet, others: impl Iterator<Item = VertexSet>) -> Vec<VertexSet> {
    let mut meets: Vec<VertexSet> = others.map(|g| f.intersection(g)).collect();
    meets.sort_unstable_by_key(|s| std::cmp::Reverse(s.len()));
    let mut out: Vec<VertexSet> = Vec::new();
    for s in meets {
        if !out.iter().any(|t| s.is_subset(*t)) {
            out.push(s);
        }
    }
    out
}

fn members(facets: &[VertexSet], mask: u32) -> impl Iterator<Item = VertexSet> + '_ {
    (0..facets.len())
        .filter(move |i| mask >> i & 1 == 1)
        .map(|i| facets[i])
}

/// True iff some facet order is a shelling: each facet after the first
/// meets the union of its predecessors in a pure subcomplex of codimension
/// one in that facet.
pub fn is_shellable(cx: &SimplicialComplex) -> Result<bool> {
    require_searchable(cx, "shellability")?;
    let facets = cx.facets();
    let d = facets[0].len();
    let full = (1u32 << facets.len()) - 1;
    fn extend(
        facets: &[VertexSet],
        d: usize,
        used: u32,
        full: u32,
        dead: &mut HashSet<u32>,
    ) -> bool {
        if used == full {
            return true;
        }
        if dead.contains(&used) {
            return false;
        }
        for i in 0..facets.len() {
            if used >> i & 1 == 1 {
                continue;
            }
            let ok = used == 0
                || maximal_intersections(facets[i], members(facets, used))
                    .iter()
                    .all(|s| s.len() + 1 == d);
            if ok && extend(facets, d, used | 1 << i, full, dead) {
                return true;
            }
        }
        dead.insert(used);
        false
    }
    Ok(extend(facets, d, 0, full, &mut HashSet::new()))
}

/// True iff the complex is a simplex, or arises from a facet constructible
/// complex by attaching a full simplex along exactly one codimension-one
/// face. Decided by peeling facets that meet the rest in a single
/// codimension-one face.
pub fn is_facet_constructible(cx: &SimplicialComplex) -> Result<bool> {
    require_searchable(cx, "facet constructibility")?;
    let facets = cx.facets();
    let d = facets[0].len();
    fn peel(facets: &[VertexSet], d: usize, left: u32, dead: &mut HashSet<u32>) -> bool {
        if left.count_ones() == 1 {
            return true;
        }
        if dead.contains(&left) {
            return false;
        }
        for i in 0..facets.len() {
            if left >> i & 1 == 0 {
                continue;
            }
            let rest = left & !(1 << i);
            let meet = maximal_intersections(facets[i], members(facets, rest));
            if meet.len() == 1 && meet[0].len() + 1 == d && peel(facets, d, rest, dead) {
                return true;
            }
        }
        dead.insert(left);
        false
    }
    Ok(peel(
        facets,
        d,
        (1u32 << facets.len()) - 1,
        &mut HashSet::new(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::type_defect;
    use crate::oracle::corpus;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn cx(n: usize, faces: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_lists(n, faces.iter().map(|f| f.to_vec())).unwrap()
    }

    #[test]
    fn reisner_examples() {
        assert!(is_cohen_macaulay(&SimplicialComplex::simplex(4), Q).unwrap());
        assert!(!is_cohen_macaulay(&cx(4, &[&[0, 1], &[2, 3]]), Q).unwrap());
        assert!(is_cohen_macaulay(&SimplicialComplex::cycle(4), Q).unwrap());
        assert!(is_cohen_macaulay(&SimplicialComplex::empty_face(3), Q).unwrap());
        // a triangle with a pendant edge is not pure, hence not CM
        assert!(!is_cohen_macaulay(&cx(4, &[&[0, 1, 2], &[2, 3]]), Q).unwrap());
        assert!(is_cohen_macaulay(&SimplicialComplex::new(2, []).unwrap(), Q).is_err());
    }

    #[test]
    fn projective_plane_depends_on_the_field() {
        let rp2 = cx(
            6,
            &[
                &[0, 1, 2],
                &[0, 2, 3],
                &[0, 3, 4],
                &[0, 4, 5],
                &[0, 1, 5],
                &[1, 2, 4],
                &[2, 3, 5],
                &[1, 3, 4],
                &[1, 3, 5],
                &[2, 4, 5],
            ],
        );
        assert!(is_cohen_macaulay(&rp2, Q).unwrap());
        assert!(!is_cohen_macaulay(&rp2, FieldSpec::Prime(2)).unwrap());
    }

    #[test]
    fn two_cm_and_gorenstein() {
        assert!(is_2cm(&SimplicialComplex::simplex_boundary(4), Q).unwrap());
        assert!(!is_2cm(&SimplicialComplex::simplex(3), Q).unwrap());
        assert!(is_2cm(&SimplicialComplex::complete_graph(4), Q).unwrap());
        assert!(is_gorenstein(&SimplicialComplex::simplex(3), Q).unwrap());
        for n in 3..7 {
            assert!(is_gorenstein(&SimplicialComplex::simplex_boundary(n), Q).unwrap());
        }
        assert!(!is_gorenstein(&cx(4, &[&[0, 1], &[2, 3]]), Q).unwrap());
        assert!(is_gorenstein(&SimplicialComplex::cycle(6), Q).unwrap());
        assert!(!is_gorenstein(&SimplicialComplex::path(4), Q).unwrap());
    }

    #[test]
    fn shelling_and_constructibility_examples() {
        assert!(is_shellable(&SimplicialComplex::simplex(3)).unwrap());
        assert!(is_shellable(&SimplicialComplex::simplex_boundary(4)).unwrap());
        assert!(!is_shellable(&cx(4, &[&[0, 1], &[2, 3]])).unwrap());
        assert!(is_facet_constructible(&SimplicialComplex::simplex(3)).unwrap());
        assert!(is_facet_constructible(&cx(4, &[&[0, 1, 2], &[1, 2, 3]])).unwrap());
        assert!(!is_facet_constructible(&SimplicialComplex::simplex_boundary(4)).unwrap());
        assert!(is_shellable(&cx(3, &[&[0], &[1], &[2]])).unwrap());
        assert!(matches!(
            is_shellable(&cx(4, &[&[0, 1, 2], &[2, 3]])),
            Err(Error::Domain(_))
        ));
        let many = SimplicialComplex::graph(
            8,
            &(0..7)
                .flat_map(|a| (a + 1..8).map(move |b| (a, b)))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(matches!(is_shellable(&many), Err(Error::Capacity(_))));
    }

    #[test]
    fn implications_on_small_corpus() {
        for cx in corpus(4).unwrap() {
            let cm = is_cohen_macaulay(&cx, Q).unwrap();
            if type_defect(&cx, Q).unwrap() <= 0 {
                assert!(cm, "{cx:?}");
            }
            if cx.is_pure() {
                let sh = is_shellable(&cx).unwrap();
                let fc = is_facet_constructible(&cx).unwrap();
                assert!(!sh || cm, "{cx:?}");
                assert!(!fc || sh, "{cx:?}");
            }
            if is_2cm(&cx, Q).unwrap() {
                assert!(cm);
            }
        }
    }
}
