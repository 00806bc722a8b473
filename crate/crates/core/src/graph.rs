//! Graphs as one-dimensional complexes: simplicial vertices, chordality,
//! triangle and cycle counts, and the three treeish predicates.

use crate::betti::{adjacency, component_count, induced_type_defects, require_graph};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::vertex_set::VertexSet;

/// Bound for the connected-subgraph sweep behind [`treeish_by_td`].
pub const MAX_TREEISH_TD_VERTICES: usize = 14;
/// Bound for the induced-subgraph sweep behind [`chordality_via_td`].
pub const MAX_CHORDAL_TD_VERTICES: usize = 16;

fn is_clique(adj: &[VertexSet], s: VertexSet) -> bool {
    s.iter().all(|v| s.without(v).is_subset(adj[v]))
}

/// Lowest vertex of `alive` whose neighbourhood inside `alive` is complete.
fn simplicial_within(adj: &[VertexSet], alive: VertexSet) -> Option<usize> {
    alive
        .iter()
        .find(|&v| is_clique(adj, adj[v].intersection(alive)))
}

/// The lowest-index simplicial vertex of `g`, if any.
pub fn find_simplicial_vertex(g: &SimplicialComplex) -> Result<Option<usize>> {
    require_graph(g)?;
    Ok(simplicial_within(&adjacency(g), g.ground_set()))
}

/// Repeatedly removes the lowest simplicial vertex. Returns the removal
/// order when it exhausts the graph, `None` when a simplicial-free induced
/// subgraph is reached.
pub fn perfect_elimination_order(g: &SimplicialComplex) -> Result<Option<Vec<usize>>> {
    require_graph(g)?;
    let adj = adjacency(g);
    let mut alive = g.ground_set();
    let mut order = Vec::with_capacity(g.n());
    while !alive.is_empty() {
        match simplicial_within(&adj, alive) {
            Some(v) => {
                order.push(v);
                alive.remove(v);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(order))
}

pub fn is_chordal(g: &SimplicialComplex) -> Result<bool> {
    Ok(perfect_elimination_order(g)?.is_some())
}

fn induced_connected(adj: &[VertexSet], w: VertexSet) -> bool {
    !w.is_empty() && component_count(adj, w) == 1
}

fn check_size(g: &SimplicialComplex, max: usize, what: &str) -> Result<()> {
    if g.n() > max {
        return Err(Error::Capacity(format!(
            "{what} supports at most {max} vertices, got {}",
            g.n()
        )));
    }
    Ok(())
}

/// True iff `td(G|_W) >= 0` for every `W ⊆ V`.
pub fn chordality_via_td(g: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    require_graph(g)?;
    check_size(g, MAX_CHORDAL_TD_VERTICES, "chordality via type defect")?;
    Ok(induced_type_defects(g, field)?.iter().all(|&td| td >= 0))
}

/// True iff `td(G|_W) >= 0` for every `W` with `G|_W` connected.
pub fn chordality_via_connected_td(g: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    require_graph(g)?;
    check_size(g, MAX_CHORDAL_TD_VERTICES, "chordality via type defect")?;
    let adj = adjacency(g);
    let tds = induced_type_defects(g, field)?;
    Ok(g.ground_set()
        .subsets()
        .filter(|&w| induced_connected(&adj, w))
        .all(|w| tds[w.bits() as usize] >= 0))
}

fn edge_count(adj: &[VertexSet]) -> usize {
    adj.iter().map(|a| a.len()).sum::<usize>() / 2
}

/// Number of triangles, counted through common neighbourhoods of edges.
pub fn triangle_count(g: &SimplicialComplex) -> Result<usize> {
    require_graph(g)?;
    let adj = adjacency(g);
    let mut count = 0;
    for u in 0..g.n() {
        for v in adj[u].iter().filter(|&v| v > u) {
            count += adj[u]
                .intersection(adj[v])
                .iter()
                .filter(|&w| w > v)
                .count();
        }
    }
    Ok(count)
}

/// `e - n + C(G)`, the rank of the cycle space.
pub fn cycle_space_dim(g: &SimplicialComplex) -> Result<usize> {
    require_graph(g)?;
    let adj = adjacency(g);
    Ok(edge_count(&adj) + component_count(&adj, g.ground_set()) - g.n())
}

/// Chordal, with as many triangles as independent cycles.
pub fn is_treeish_graph(g: &SimplicialComplex) -> Result<bool> {
    Ok(is_chordal(g)? && triangle_count(g)? == cycle_space_dim(g)?)
}

/// Undoes the recursive construction: strips isolated vertices, leaves and
/// degree-two vertices with adjacent neighbours until nothing is left. Each
/// connected component is judged separately, so forests of treeish graphs
/// are accepted.
pub fn treeish_by_construction(g: &SimplicialComplex) -> Result<bool> {
    require_graph(g)?;
    let adj = adjacency(g);
    let mut alive = g.ground_set();
    while !alive.is_empty() {
        let removable = alive.iter().find(|&v| {
            let nb = adj[v].intersection(alive);
            match nb.len() {
                0 | 1 => true,
                2 => is_clique(&adj, nb),
                _ => false,
            }
        });
        match removable {
            Some(v) => alive.remove(v),
            None => return Ok(false),
        }
    }
    Ok(true)
}

/// True iff `td(G|_W) = 0` for every `W` with `G|_W` connected.
pub fn treeish_by_td(g: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    require_graph(g)?;
    check_size(g, MAX_TREEISH_TD_VERTICES, "treeish via type defect")?;
    let adj = adjacency(g);
    let tds = induced_type_defects(g, field)?;
    Ok(g.ground_set()
        .subsets()
        .filter(|&w| induced_connected(&adj, w))
        .all(|w| tds[w.bits() as usize] == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::reduced_homology;
    use crate::oracle::{random_graph, random_tree};

    const Q: FieldSpec = FieldSpec::Rationals;

    /// A triangle chain 0-1-2, 1-2-3, 2-3-4 with pendant edges at 0 and 4.
    fn triangle_chain() -> SimplicialComplex {
        SimplicialComplex::graph(
            7,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (1, 3),
                (2, 3),
                (2, 4),
                (3, 4),
                (0, 5),
                (4, 6),
            ],
        )
        .unwrap()
    }

    #[test]
    fn simplicial_vertices() {
        let t = random_tree(9, 4).unwrap();
        let v = find_simplicial_vertex(&t).unwrap().unwrap();
        assert_eq!(adjacency(&t)[v].len(), 1);
        assert_eq!(
            find_simplicial_vertex(&SimplicialComplex::cycle(4)).unwrap(),
            None
        );
        assert_eq!(
            find_simplicial_vertex(&SimplicialComplex::complete_graph(5)).unwrap(),
            Some(0)
        );
        assert!(find_simplicial_vertex(&SimplicialComplex::simplex(3)).is_err());
        assert!(
            find_simplicial_vertex(&SimplicialComplex::from_lists(3, [vec![0, 1]]).unwrap())
                .is_err()
        );
    }

    #[test]
    fn chordality() {
        for seed in 0..10 {
            assert!(is_chordal(&random_tree(10, seed).unwrap()).unwrap());
        }
        for m in 4..9 {
            let c = SimplicialComplex::cycle(m);
            assert!(!is_chordal(&c).unwrap());
            assert!(!chordality_via_td(&c, Q).unwrap());
            assert!(!chordality_via_connected_td(&c, Q).unwrap());
        }
        assert!(is_chordal(&triangle_chain()).unwrap());
        let order = perfect_elimination_order(&triangle_chain())
            .unwrap()
            .unwrap();
        assert_eq!(order.len(), 7);
        let c4 = SimplicialComplex::cycle(4);
        let tds = induced_type_defects(&c4, Q).unwrap();
        assert_eq!(tds[0b1111], -1);
    }

    #[test]
    fn counts() {
        let k4 = SimplicialComplex::complete_graph(4);
        assert_eq!(
            (triangle_count(&k4).unwrap(), cycle_space_dim(&k4).unwrap()),
            (4, 3)
        );
        let t = random_tree(8, 1).unwrap();
        assert_eq!(
            (triangle_count(&t).unwrap(), cycle_space_dim(&t).unwrap()),
            (0, 0)
        );
        let c3 = SimplicialComplex::cycle(3);
        assert_eq!(
            (triangle_count(&c3).unwrap(), cycle_space_dim(&c3).unwrap()),
            (1, 1)
        );
        for seed in 0..20 {
            let g = random_graph(7, 0.4, seed).unwrap();
            let h = reduced_homology(&g, Q).unwrap();
            assert_eq!(cycle_space_dim(&g).unwrap(), h.get(1));
        }
    }

    #[test]
    fn treeish_predicates() {
        let all = |g: &SimplicialComplex| {
            [
                is_treeish_graph(g).unwrap(),
                treeish_by_construction(g).unwrap(),
                treeish_by_td(g, Q).unwrap(),
            ]
        };
        assert_eq!(all(&triangle_chain()), [true; 3]);
        assert_eq!(all(&SimplicialComplex::cycle(3)), [true; 3]);
        assert_eq!(all(&SimplicialComplex::cycle(4)), [false; 3]);
        assert_eq!(all(&SimplicialComplex::complete_graph(4)), [false; 3]);
        assert_eq!(all(&random_tree(9, 2).unwrap()), [true; 3]);
        for seed in 0..40 {
            let g = random_graph(7, 0.35, seed).unwrap();
            let v = all(&g);
            assert!(v.iter().all(|&x| x == v[0]), "{g:?}: {v:?}");
            if v[0] {
                assert!(is_chordal(&g).unwrap());
            }
        }
    }
}
