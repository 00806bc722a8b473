//! Stanley-Reisner ideals with a linear resolution: detection, the
//! Eagon-Reiner correspondence, the sharp Betti lower bounds with their
//! equality classification, h-vector consequences and the chordal-graph
//! classification.

use num_bigint::BigUint;
use num_integer::binomial;
use serde::{Serialize, Serializer};

use crate::betti::{betti_table, induced_homology, BettiTable};
use crate::cm::{is_cohen_macaulay, is_facet_constructible, is_shellable};
use crate::complex::{binomial_i128, SimplicialComplex};
use crate::error::{domain, range, Error, Result};
use crate::field::FieldSpec;
use crate::graph::is_chordal;
use crate::vertex_set::VertexSet;

/// The common size of all minimal non-faces, if there is one.
pub fn generating_degree(cx: &SimplicialComplex) -> Result<Option<usize>> {
    let nonfaces = cx.minimal_nonfaces()?;
    let Some(first) = nonfaces.first() else {
        return domain("the Stanley-Reisner ideal of a full simplex is zero");
    };
    let s = first.len();
    Ok(nonfaces.iter().all(|f| f.len() == s).then_some(s))
}

/// True iff `b_{i,j} != 0` forces `j = i + s - 1` for every `i >= 1`.
///
/// Through Hochster's formula this says that for every non-empty `W` the
/// only possibly non-zero reduced homology of `Δ|_W` sits in degree
/// `s - 2`, which is checked subset by subset with early exit.
pub fn has_linear_resolution(cx: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    let Some(s) = generating_degree(cx)? else {
        return Ok(false);
    };
    let want = s as isize - 2;
    let n = cx.n();
    for j in 1..=n {
        for w in crate::betti::subsets_of_size(n, j) {
            let h = induced_homology(cx, w, field);
            let bad = h
                .dims
                .iter()
                .enumerate()
                .any(|(k, &x)| x != 0 && k as isize - 1 != want);
            if bad {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The same predicate read off a computed Betti table.
pub fn table_is_linear(table: &BettiTable, s: usize) -> bool {
    table.nonzero().all(|(i, j, _)| i == 0 || j == i + s - 1)
}

fn require_nonvoid_nonsimplex(cx: &SimplicialComplex) -> Result<()> {
    cx.require_nonvoid()?;
    if cx.minimal_nonfaces()?.is_empty() {
        return domain("the full simplex has a zero Stanley-Reisner ideal");
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EagonReinerReport {
    pub linear_resolution: bool,
    pub dual_cohen_macaulay: bool,
    /// `b_j = Σ_{i >= j-1} C(i, j-1) h_i(Δ^∨)` for every `j`, evaluated
    /// only when the resolution is linear.
    pub coefficient_identity: Option<bool>,
}

impl EagonReinerReport {
    pub fn holds(&self) -> bool {
        self.linear_resolution == self.dual_cohen_macaulay
            && self.coefficient_identity != Some(false)
    }
}

/// Compares linearity of the resolution of `I_Δ` with Cohen-Macaulayness of
/// the Alexander dual, each computed on its own.
pub fn eagon_reiner_check(cx: &SimplicialComplex, field: FieldSpec) -> Result<EagonReinerReport> {
    require_nonvoid_nonsimplex(cx)?;
    let linear_resolution = has_linear_resolution(cx, field)?;
    let dual = cx.alexander_dual()?;
    let dual_cohen_macaulay = is_cohen_macaulay(&dual, field)?;
    let coefficient_identity = if linear_resolution {
        let table = betti_table(cx, field)?;
        let h = dual.h_vector()?;
        let ok = (1..=cx.n()).all(|j| {
            let predicted: i128 = (j - 1..h.entries.len())
                .map(|i| binomial_i128(i as i64, j as i64 - 1) * h.entries[i] as i128)
                .sum();
            predicted == table.total(j) as i128
        });
        Some(ok)
    } else {
        None
    };
    Ok(EagonReinerReport {
        linear_resolution,
        dual_cohen_macaulay,
        coefficient_identity,
    })
}

/// `C(s+j-2, j-1) Σ_{i=j-1}^{c-1} C(s+i-1, s+j-2)`.
///
/// Generating degree one is accepted: it only arises from unused vertices,
/// where the ideal is generated by variables and the bound is `C(c, j)`.
pub fn betti_lower_bound(s: usize, c: usize, j: usize) -> Result<BigUint> {
    if s == 0 || c == 0 || j == 0 || j > c {
        return range(format!(
            "bound needs s >= 1, c >= 1 and 1 <= j <= c; got s={s}, c={c}, j={j}"
        ));
    }
    let big = |x: usize| BigUint::from(x);
    let lead = binomial(big(s + j - 2), big(j - 1));
    let sum: BigUint = (j - 1..c)
        .map(|i| binomial(big(s + i - 1), big(s + j - 2)))
        .sum();
    Ok(lead * sum)
}

/// Big integers are emitted as decimal strings.
fn decimal<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub j: usize,
    #[serde(serialize_with = "decimal")]
    pub bound: BigUint,
    pub actual: u64,
    pub equal: bool,
}

/// Everything in the lower-bound theorem for one complex with linear
/// resolution. Each of the four equality conditions is computed on its own.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinResReport {
    pub has_linear_resolution: bool,
    pub n: usize,
    pub s: usize,
    pub c: usize,
    pub bounds: Vec<BoundRow>,
    pub bounds_hold: bool,
    pub equality_for_some_j: bool,
    pub equality_for_all_j: bool,
    pub cohen_macaulay: bool,
    pub facets_of_size_d: usize,
    #[serde(serialize_with = "decimal")]
    pub expected_facets: BigUint,
    pub facet_count_matches: bool,
    pub minimal_nonfaces: usize,
    #[serde(serialize_with = "decimal")]
    pub expected_nonfaces: BigUint,
    pub nonface_count_matches: bool,
}

impl LinResReport {
    /// The four conditions (and equality for all `j`) agree.
    pub fn conditions_agree(&self) -> bool {
        let v = [
            self.equality_for_some_j,
            self.equality_for_all_j,
            self.cohen_macaulay,
            self.facet_count_matches,
            self.nonface_count_matches,
        ];
        v.iter().all(|&x| x == v[0])
    }

    pub fn holds(&self) -> bool {
        self.bounds_hold && self.conditions_agree()
    }
}

fn require_linear(cx: &SimplicialComplex, field: FieldSpec) -> Result<usize> {
    let s = generating_degree(cx)?;
    match s {
        Some(s) if has_linear_resolution(cx, field)? => Ok(s),
        _ => Err(Error::Precondition {
            hypothesis: "the Stanley-Reisner ideal does not have a linear resolution".into(),
        }),
    }
}

pub fn classify_equality(cx: &SimplicialComplex, field: FieldSpec) -> Result<LinResReport> {
    let s = require_linear(cx, field)?;
    let c = cx.codimension()?;
    let d = cx.facet_size()?;
    let table = betti_table(cx, field)?;
    let mut bounds = Vec::with_capacity(c);
    for j in 1..=c {
        let bound = betti_lower_bound(s, c, j)?;
        let actual = table.total(j);
        bounds.push(BoundRow {
            j,
            equal: BigUint::from(actual) == bound,
            bound,
            actual,
        });
    }
    let bounds_hold = bounds.iter().all(|r| BigUint::from(r.actual) >= r.bound);
    let facets_of_size_d = cx.facets().iter().filter(|f| f.len() == d).count();
    let expected_facets = binomial(BigUint::from(s + c - 1), BigUint::from(c));
    let minimal_nonfaces = cx.minimal_nonfaces()?.len();
    let expected_nonfaces = binomial(BigUint::from(s + c - 1), BigUint::from(s));
    Ok(LinResReport {
        has_linear_resolution: true,
        n: cx.n(),
        s,
        c,
        bounds_hold,
        equality_for_some_j: bounds.iter().any(|r| r.equal),
        equality_for_all_j: bounds.iter().all(|r| r.equal),
        bounds,
        cohen_macaulay: is_cohen_macaulay(cx, field)?,
        facet_count_matches: BigUint::from(facets_of_size_d) == expected_facets,
        facets_of_size_d,
        expected_facets,
        nonface_count_matches: BigUint::from(minimal_nonfaces) == expected_nonfaces,
        minimal_nonfaces,
        expected_nonfaces,
    })
}

/// h-vector consequences of the Hilbert series of a linear resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HPredictionReport {
    pub s: usize,
    pub c: usize,
    pub h: Vec<i64>,
    /// `h_i = C(c+i-1, i)` for every `i < s`.
    pub low_degrees_match: bool,
    pub h_s: i64,
    /// `C(c+s-1, s) - b_1`.
    pub h_s_predicted: i64,
    pub h_s_nonpositive: bool,
    pub cohen_macaulay: bool,
    /// `h_s = 0` exactly when the complex is Cohen-Macaulay.
    pub equality_law: bool,
    /// `K(t) = h(t) (1-t)^c` with `K(t) = 1 - b_1 t^s + b_2 t^{s+1} - ...`.
    pub hilbert_identity: bool,
}

impl HPredictionReport {
    pub fn holds(&self) -> bool {
        self.low_degrees_match
            && self.h_s == self.h_s_predicted
            && self.h_s_nonpositive
            && self.equality_law
            && self.hilbert_identity
    }
}

/// Numerator `K(t)` of the Hilbert series read off a Betti table.
fn k_polynomial(table: &BettiTable) -> Vec<i128> {
    let mut k = vec![0i128; table.n + 1];
    for (i, j, b) in table.nonzero() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        k[j] += sign * b as i128;
    }
    k
}

fn multiply(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trimmed(mut p: Vec<i128>) -> Vec<i128> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn h_vector_prediction(cx: &SimplicialComplex, field: FieldSpec) -> Result<HPredictionReport> {
    let s = require_linear(cx, field)?;
    let c = cx.codimension()?;
    let h = cx.h_vector()?.entries;
    let h_at = |i: usize| h.get(i).copied().unwrap_or(0);
    let table = betti_table(cx, field)?;
    let low_degrees_match =
        (0..s).all(|i| h_at(i) as i128 == binomial_i128((c + i) as i64 - 1, i as i64));
    let h_s = h_at(s);
    let h_s_predicted =
        (binomial_i128((c + s) as i64 - 1, s as i64) - table.total(1) as i128) as i64;
    let cohen_macaulay = is_cohen_macaulay(cx, field)?;
    let one_minus_t_c = (0..=c)
        .map(|k| binomial_i128(c as i64, k as i64) * if k % 2 == 0 { 1 } else { -1 })
        .collect::<Vec<_>>();
    let h_poly: Vec<i128> = h.iter().map(|&x| x as i128).collect();
    let hilbert_identity =
        trimmed(k_polynomial(&table)) == trimmed(multiply(&h_poly, &one_minus_t_c));
    Ok(HPredictionReport {
        s,
        c,
        low_degrees_match,
        h_s,
        h_s_predicted,
        h_s_nonpositive: h_s <= 0,
        cohen_macaulay,
        equality_law: (h_s == 0) == cohen_macaulay,
        hilbert_identity,
        h,
    })
}

/// With generating degree two and a linear resolution, the complex is the
/// clique complex of its (chordal) 1-skeleton.
pub fn froberg_check(cx: &SimplicialComplex) -> Result<bool> {
    let skeleton = cx.skeleton(1)?;
    Ok(cx.is_flag()?
        && &SimplicialComplex::clique_complex(&skeleton)? == cx
        && is_chordal(&skeleton)?)
}

/// The conditions of the chordal-graph classification, evaluated
/// independently on the clique complex `Δ` of `G` (with `d` the largest
/// clique size).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SevenConditionReport {
    pub n: usize,
    pub d: usize,
    /// (1) exactly `n - d + 1` facets of size `d`.
    pub facet_count: bool,
    /// (2) `(d-1)(2n-d)/2` edges.
    pub edge_count: bool,
    /// (3) Cohen-Macaulay.
    pub cohen_macaulay: bool,
    /// (4) facet constructible (false for non-pure complexes).
    pub facet_constructible: bool,
    /// (5) `h_2 >= 0`.
    pub h2_nonnegative: bool,
    /// (7) shellable (false for non-pure complexes).
    pub shellable: bool,
}

impl SevenConditionReport {
    /// Conditions (1), (2), (3), (4) and (7) agree.
    pub fn core_agree(&self) -> bool {
        let v = [
            self.facet_count,
            self.edge_count,
            self.cohen_macaulay,
            self.facet_constructible,
            self.shellable,
        ];
        v.iter().all(|&x| x == v[0])
    }

    pub fn all_agree(&self) -> bool {
        self.core_agree() && self.h2_nonnegative == self.cohen_macaulay
    }
}

pub fn seven_condition_check(
    g: &SimplicialComplex,
    field: FieldSpec,
) -> Result<SevenConditionReport> {
    if !is_chordal(g)? {
        return Err(Error::Precondition {
            hypothesis: "the graph is not chordal".into(),
        });
    }
    let cx = SimplicialComplex::clique_complex(g)?;
    let n = g.n();
    let d = cx.facet_size()?;
    let edges = g.facets().iter().filter(|f| f.len() == 2).count();
    let pure = cx.is_pure();
    let h = cx.h_vector()?;
    Ok(SevenConditionReport {
        n,
        d,
        facet_count: cx.facets().iter().filter(|f| f.len() == d).count() + d == n + 1,
        edge_count: 2 * edges == (d - 1) * (2 * n - d),
        cohen_macaulay: is_cohen_macaulay(&cx, field)?,
        facet_constructible: pure && is_facet_constructible(&cx)?,
        h2_nonnegative: h.get(2) >= 0,
        shellable: pure && is_shellable(&cx)?,
    })
}

/// Facets of the complex obtained from `nonfaces` (an antichain of subsets
/// of `[n]`) by taking every set that contains none of them.
pub fn complex_from_nonfaces(n: usize, nonfaces: &[VertexSet]) -> Result<SimplicialComplex> {
    let faces = VertexSet::full(n)
        .subsets()
        .filter(|s| !nonfaces.iter().any(|m| m.is_subset(*s)))
        .collect::<Vec<_>>();
    SimplicialComplex::new(n, faces)
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
    fn generating_degrees() {
        assert_eq!(
            generating_degree(&SimplicialComplex::simplex_boundary(4)).unwrap(),
            Some(4)
        );
        assert_eq!(
            generating_degree(&cx(4, &[&[0, 1], &[2, 3]])).unwrap(),
            Some(2)
        );
        assert_eq!(
            generating_degree(&cx(4, &[&[0, 1], &[1, 2], &[0, 2], &[0, 3]])).unwrap(),
            None
        );
        assert!(generating_degree(&SimplicialComplex::simplex(3)).is_err());
        assert_eq!(generating_degree(&cx(3, &[&[0, 1]])).unwrap(), Some(1));
    }

    #[test]
    fn linearity_matches_table_on_corpus() {
        for cx in corpus(4).unwrap() {
            let Ok(s) = generating_degree(&cx) else {
                continue;
            };
            let by_table = s.is_some_and(|s| table_is_linear(&betti_table(&cx, Q).unwrap(), s));
            assert_eq!(has_linear_resolution(&cx, Q).unwrap(), by_table, "{cx:?}");
        }
    }

    #[test]
    fn bounds() {
        assert_eq!(betti_lower_bound(2, 2, 1).unwrap(), BigUint::from(3u32));
        for c in 1..8 {
            for j in 1..=c {
                let expected = j as u64 * binomial(c as u64 + 1, j as u64 + 1);
                assert_eq!(betti_lower_bound(2, c, j).unwrap(), BigUint::from(expected));
                assert_eq!(
                    betti_lower_bound(1, c, j).unwrap(),
                    BigUint::from(binomial(c as u64, j as u64))
                );
            }
        }
        for (s, c, j) in [(0, 2, 1), (2, 0, 1), (2, 2, 0), (2, 2, 3)] {
            assert!(betti_lower_bound(s, c, j).is_err());
        }
    }

    #[test]
    fn path_example() {
        let p4 = SimplicialComplex::path(4);
        let r = classify_equality(&p4, Q).unwrap();
        assert!(r.has_linear_resolution && r.holds());
        assert_eq!((r.s, r.c), (2, 2));
        assert!(
            r.bounds[0].equal
                && r.cohen_macaulay
                && r.facet_count_matches
                && r.nonface_count_matches
        );
        let h = h_vector_prediction(&p4, Q).unwrap();
        assert!(h.holds());
        assert_eq!(h.h, vec![1, 2, 0]);
        let er = eagon_reiner_check(&p4, Q).unwrap();
        assert!(er.holds() && er.linear_resolution && er.coefficient_identity == Some(true));
        let seven = seven_condition_check(&p4, Q).unwrap();
        assert!(seven.all_agree() && seven.cohen_macaulay);
        let k4 = seven_condition_check(&SimplicialComplex::complete_graph(4), Q).unwrap();
        assert!(k4.all_agree() && k4.facet_count);
        let mixed = seven_condition_check(
            &SimplicialComplex::graph(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap(),
            Q,
        )
        .unwrap();
        assert!(mixed.all_agree() && !mixed.cohen_macaulay);
        assert!(seven_condition_check(&SimplicialComplex::cycle(4), Q).is_err());
    }

    #[test]
    fn non_cm_linear_example() {
        // two disjoint edges: I = (xz, xw, yz, yw) is the edge ideal of C_4,
        // whose complement is chordal, so the resolution is linear
        let two = cx(4, &[&[0, 1], &[2, 3]]);
        let r = classify_equality(&two, Q).unwrap();
        assert!(r.holds());
        assert!(!r.cohen_macaulay && !r.equality_for_some_j);
        assert!(h_vector_prediction(&two, Q).unwrap().h_s < 0);
        assert!(eagon_reiner_check(&two, Q).unwrap().holds());
        assert!(matches!(
            classify_equality(&SimplicialComplex::cycle(5), Q),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn small_corpus_sweep() {
        for cx in corpus(4).unwrap() {
            if cx.minimal_nonfaces().unwrap().is_empty() {
                continue;
            }
            assert!(eagon_reiner_check(&cx, Q).unwrap().holds(), "{cx:?}");
            if !has_linear_resolution(&cx, Q).unwrap() {
                continue;
            }
            let r = classify_equality(&cx, Q).unwrap();
            assert!(r.holds(), "{r:?}");
            assert!(h_vector_prediction(&cx, Q).unwrap().holds(), "{cx:?}");
            if r.s >= 2 {
                assert!(type_defect(&cx, Q).unwrap() >= 0);
            }
            if r.s == 2 {
                assert!(froberg_check(&cx).unwrap());
            }
        }
    }

    #[test]
    fn nonface_construction() {
        let c = complex_from_nonfaces(
            4,
            &[[0, 2].into_iter().collect(), [1, 3].into_iter().collect()],
        )
        .unwrap();
        assert_eq!(c, SimplicialComplex::cycle(4));
    }
}
