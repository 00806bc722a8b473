use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{maximal_sets, SimplicialComplex};
use crate::error::{range, Result};
use crate::vertex_set::VertexSet;

pub const MAX_ENUMERATION_VERTICES: usize = 5;

/// Every simplicial complex on the labeled ground set `{0, .., n-1}`
/// (unused vertices allowed, the void complex excluded), each exactly once.
///
/// Complexes are enumerated as down-closed families: subsets are visited in
/// (cardinality, bit pattern) order and a subset may be included only when
/// all of its codimension-one subsets are.
pub fn enumerate_complexes(n: usize) -> Result<Vec<SimplicialComplex>> {
    if n > MAX_ENUMERATION_VERTICES {
        return range(format!(
            "exhaustive enumeration supports at most {MAX_ENUMERATION_VERTICES} vertices, got {n}"
        ));
    }
    let mut order: Vec<VertexSet> = (0..1u64 << n).map(VertexSet::from_bits).collect();
    order.sort_unstable_by_key(|s| (s.len(), s.bits()));
    let mut included = vec![false; 1 << n];
    let mut out = Vec::new();
    fn rec(
        k: usize,
        n: usize,
        order: &[VertexSet],
        included: &mut [bool],
        chosen: &mut Vec<VertexSet>,
        out: &mut Vec<SimplicialComplex>,
    ) {
        if k == order.len() {
            if !chosen.is_empty() {
                out.push(SimplicialComplex::from_facets_unchecked(
                    n,
                    maximal_sets(chosen.clone()),
                ));
            }
            return;
        }
        let s = order[k];
        let allowed = s.iter().all(|v| included[s.without(v).bits() as usize]);
        if allowed {
            included[s.bits() as usize] = true;
            chosen.push(s);
            rec(k + 1, n, order, included, chosen, out);
            chosen.pop();
            included[s.bits() as usize] = false;
        }
        rec(k + 1, n, order, included, chosen, out);
    }
    rec(0, n, &order, &mut included, &mut Vec::new(), &mut out);
    Ok(out)
}

/// All complexes on `1..=max_n` vertices.
pub fn corpus(max_n: usize) -> Result<Vec<SimplicialComplex>> {
    let mut all = Vec::new();
    for n in 1..=max_n {
        all.extend(enumerate_complexes(n)?);
    }
    Ok(all)
}

/// Random complex generator: draw `facets` random subsets, each vertex kept
/// independently with probability `vertex_probability`, and take the
/// complex they generate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomComplexParams {
    pub facets: usize,
    pub vertex_probability: f64,
}

pub fn random_complex(
    n: usize,
    params: RandomComplexParams,
    seed: u64,
) -> Result<SimplicialComplex> {
    if !(1..=12).contains(&n) {
        return range(format!("random complexes need 1..=12 vertices, got {n}"));
    }
    if !(0.0..=1.0).contains(&params.vertex_probability) {
        return range("vertex probability must lie in [0, 1]");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let faces: Vec<VertexSet> = (0..params.facets.max(1))
        .map(|_| {
            (0..n)
                .filter(|_| rng.gen_bool(params.vertex_probability))
                .collect()
        })
        .collect();
    SimplicialComplex::new(n, faces)
}

/// Erdős–Rényi graph: every vertex is a face, each edge present with
/// probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<SimplicialComplex> {
    if n > 16 {
        return range(format!(
            "random graphs support at most 16 vertices, got {n}"
        ));
    }
    if !(0.0..=1.0).contains(&p) {
        return range("edge probability must lie in [0, 1]");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    SimplicialComplex::graph(n, &edges)
}

/// Uniformly relabeled random recursive tree on `n` vertices.
pub fn random_tree(n: usize, seed: u64) -> Result<SimplicialComplex> {
    if !(1..=64).contains(&n) {
        return range(format!("random trees need 1..=64 vertices, got {n}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(&mut rng);
    let edges: Vec<(usize, usize)> = (1..n)
        .map(|v| (labels[rng.gen_range(0..v)], labels[v]))
        .collect();
    SimplicialComplex::graph(n, &edges)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    let mut out = Vec::new();
    rec(0, &mut (0..n).collect(), &mut out);
    out
}

/// One representative per isomorphism class of non-empty families of
/// `s`-subsets of `[n]`, i.e. of complexes whose minimal non-faces all have
/// size `s`. Classes are found by marking whole orbits under the symmetric
/// group, so every family is visited once.
pub fn equigenerated_families(n: usize, s: usize) -> Result<Vec<Vec<VertexSet>>> {
    let members: Vec<VertexSet> = crate::betti::subsets_of_size(n, s).collect();
    let k = members.len();
    if n > 8 || k > 24 {
        return range(format!(
            "families of {s}-subsets of {n} vertices are too many to classify"
        ));
    }
    let position = |set: VertexSet| members.binary_search(&set).unwrap();
    let actions: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .map(|p| {
            members
                .iter()
                .map(|m| position(m.iter().map(|v| p[v]).collect()))
                .collect()
        })
        .collect();
    let mut seen = vec![false; 1usize << k];
    let mut out = Vec::new();
    for mask in 1usize..1 << k {
        if seen[mask] {
            continue;
        }
        for action in &actions {
            let image = (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .fold(0usize, |acc, i| acc | 1 << action[i]);
            seen[image] = true;
        }
        out.push(
            (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| members[i])
                .collect(),
        );
    }
    Ok(out)
}
