//! Named, seeded verification sweeps. Each suite checks one family of
//! statements over exhaustive corpora and seeded random instances and
//! reports every violation together with the offending complex.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use num_bigint::BigUint;
use num_integer::binomial;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::betti::{
    betti_table, dual_type, graph_type, induced_type_defects, modified_type, type_defect,
};
use crate::cm::{
    is_2cm, is_cohen_macaulay, is_facet_constructible, is_gorenstein, is_shellable,
    MAX_SEARCH_FACETS,
};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::glue::{
    build_treeish_steps, is_treeish_complex, verify_glue_type, TreeishBase, TreeishMove,
};
use crate::graph::{
    chordality_via_connected_td, chordality_via_td, cycle_space_dim, is_chordal, is_treeish_graph,
    treeish_by_construction, treeish_by_td,
};
use crate::homology::reduced_homology;
use crate::linres::{
    classify_equality, complex_from_nonfaces, eagon_reiner_check, froberg_check, generating_degree,
    h_vector_prediction, has_linear_resolution, seven_condition_check,
};
use crate::oracle::{
    corpus, equigenerated_families, koszul_table, random_complex, random_graph, random_tree,
    RandomComplexParams, MAX_ENUMERATION_VERTICES,
};
use crate::vertex_set::VertexSet;

/// Bumped whenever a suite changes what it checks or how it draws samples.
pub const SUITE_VERSION: u32 = 1;

pub const SUITE_NAMES: [&str; 8] = [
    "oracle",
    "fixtures",
    "chordal-td",
    "treeish-graphs",
    "glue",
    "td-cm",
    "linres",
    "treeish-complexes",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub field: FieldSpec,
    pub seed: u64,
    /// Largest ground set; exhaustive parts are additionally capped by what
    /// each suite can enumerate.
    pub max_vertices: usize,
    /// Number of random instances; `None` picks the suite default.
    pub samples: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            field: FieldSpec::Rationals,
            seed: 0,
            max_vertices: 6,
            samples: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub description: String,
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl Violation {
    pub fn complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_lists(self.n, self.facets.clone())
            .expect("recorded complexes are valid")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub version: u32,
    pub field: FieldSpec,
    pub seed: u64,
    pub max_vertices: usize,
    pub samples: usize,
    /// Number of individual assertions evaluated.
    pub checked: usize,
    /// Hash of every number the suite computed, for comparing runs.
    pub digest: String,
    pub violations: Vec<Violation>,
    /// Recorded witnesses and counts that are informative but not failures.
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Assertions and computed values for one complex.
#[derive(Default)]
struct Local {
    checks: usize,
    values: Vec<i64>,
    failures: Vec<String>,
}

impl Local {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn value(&mut self, v: impl TryInto<i64>) {
        self.values.push(v.try_into().unwrap_or(i64::MAX));
    }
}

struct Recorder {
    checked: usize,
    hasher: DefaultHasher,
    violations: Vec<Violation>,
    notes: Vec<String>,
}

impl Recorder {
    fn new() -> Self {
        Recorder {
            checked: 0,
            hasher: DefaultHasher::new(),
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn merge(&mut self, cx: &SimplicialComplex, local: Local) {
        self.checked += local.checks;
        local.values.hash(&mut self.hasher);
        for description in local.failures {
            self.violations.push(Violation {
                description,
                n: cx.n(),
                facets: cx.facets().iter().map(|f| f.to_vec()).collect(),
            });
        }
    }

    /// Runs `f` over `items` (in parallel) and merges in input order.
    fn sweep<F>(&mut self, items: &[SimplicialComplex], f: F) -> Result<()>
    where
        F: Fn(&SimplicialComplex) -> Result<Local> + Sync,
    {
        let locals = items.par_iter().map(&f).collect::<Result<Vec<_>>>()?;
        for (cx, local) in items.iter().zip(locals) {
            self.merge(cx, local);
        }
        Ok(())
    }

    fn single(
        &mut self,
        cx: &SimplicialComplex,
        f: impl FnOnce(&mut Local) -> Result<()>,
    ) -> Result<()> {
        let mut local = Local::default();
        f(&mut local)?;
        self.merge(cx, local);
        Ok(())
    }

    /// A check about the sweep as a whole rather than one complex.
    fn global(&mut self, ok: bool, description: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(Violation {
                description: description(),
                n: 0,
                facets: Vec::new(),
            });
        }
    }

    fn finish(self, name: &str, config: &SuiteConfig, samples: usize) -> SuiteOutcome {
        SuiteOutcome {
            suite: name.to_string(),
            version: SUITE_VERSION,
            field: config.field,
            seed: config.seed,
            max_vertices: config.max_vertices,
            samples,
            checked: self.checked,
            digest: format!("{:016x}", self.hasher.finish()),
            violations: self.violations,
            notes: self.notes,
        }
    }
}

pub fn default_samples(suite: &str) -> usize {
    match suite {
        "oracle" | "td-cm" => 1000,
        "fixtures" | "treeish-complexes" => 200,
        "chordal-td" | "glue" => 500,
        _ => 0,
    }
}

pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<SuiteOutcome> {
    let samples = config.samples.unwrap_or_else(|| default_samples(name));
    // Each suite draws from its own stream so that suites are reproducible
    // independently of one another.
    let salt = SUITE_NAMES.iter().position(|s| *s == name).unwrap_or(0) as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt);
    let mut rec = Recorder::new();
    let field = config.field;
    match name {
        "oracle" => oracle_suite(&mut rec, config, samples, &mut rng)?,
        "fixtures" => fixtures_suite(&mut rec, field, samples, &mut rng)?,
        "chordal-td" => chordal_suite(&mut rec, config, samples, &mut rng)?,
        "treeish-graphs" => treeish_graph_suite(&mut rec, config, samples, &mut rng)?,
        "glue" => glue_suite(&mut rec, config, samples, &mut rng)?,
        "td-cm" => td_cm_suite(&mut rec, config, samples, &mut rng)?,
        "linres" => linres_suite(&mut rec, config)?,
        "treeish-complexes" => treeish_complex_suite(&mut rec, config, samples, &mut rng)?,
        other => {
            return Err(Error::Domain(format!(
                "unknown suite `{other}`; expected one of {}",
                SUITE_NAMES.join(", ")
            )))
        }
    }
    Ok(rec.finish(name, config, samples))
}

fn exhaustive(max_vertices: usize) -> Result<Vec<SimplicialComplex>> {
    corpus(max_vertices.min(MAX_ENUMERATION_VERTICES))
}

/// `samples` random complexes on `lo..=max_vertices` vertices (none when
/// `max_vertices < lo`).
fn random_complexes(
    rng: &mut ChaCha8Rng,
    lo: usize,
    max_vertices: usize,
    samples: usize,
) -> Result<Vec<SimplicialComplex>> {
    if max_vertices < lo {
        return Ok(Vec::new());
    }
    (0..samples)
        .map(|_| {
            let n = rng.gen_range(lo..=max_vertices.min(12));
            let params = RandomComplexParams {
                facets: rng.gen_range(1..=7),
                vertex_probability: rng.gen_range(0.25..0.75),
            };
            random_complex(n, params, rng.gen())
        })
        .collect()
}

fn all_graphs(n: usize) -> Vec<SimplicialComplex> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            SimplicialComplex::graph(n, &edges).unwrap()
        })
        .collect()
}

fn graphs_for(
    config: &SuiteConfig,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<SimplicialComplex>> {
    let mut graphs: Vec<SimplicialComplex> = (1..=config.max_vertices.min(6))
        .flat_map(all_graphs)
        .collect();
    if config.max_vertices >= 7 {
        for _ in 0..samples {
            let n = rng.gen_range(7..=config.max_vertices.min(16));
            graphs.push(random_graph(n, rng.gen_range(0.2..0.8), rng.gen())?);
        }
    }
    Ok(graphs)
}

fn oracle_suite(
    rec: &mut Recorder,
    config: &SuiteConfig,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let field = config.field;
    let mut items = exhaustive(config.max_vertices)?;
    items.extend(random_complexes(
        rng,
        6,
        config.max_vertices.min(7),
        samples,
    )?);
    rec.sweep(&items, |cx| {
        let mut local = Local::default();
        let table = betti_table(cx, field)?;
        let koszul = koszul_table(cx, field, cx.n())?;
        for (i, row) in koszul.iter().enumerate() {
            for (j, &k) in row.iter().enumerate() {
                let h = table.get(i, j);
                local.value(h);
                local.check(h == k, || {
                    format!("b_{{{i},{j}}}: Hochster {h}, Koszul {k}")
                });
            }
        }
        let ty = modified_type(cx, field)?;
        local.check(ty == table.modified_type(), || {
            "modified type differs from the table".into()
        });
        if table.codim > 0 {
            let dual = dual_type(cx, field)?;
            local.check(dual == ty, || {
                format!("type {ty} but Alexander-dual form gives {dual}")
            });
        }
        Ok(local)
    })
}

fn fixtures_suite(
    rec: &mut Recorder,
    field: FieldSpec,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let two_edges = SimplicialComplex::from_lists(4, [vec![0, 1], vec![2, 3]])?;
    rec.single(&two_edges, |l| {
        let ty = modified_type(&two_edges, field)?;
        l.value(ty);
        l.check(ty == 4, || {
            format!("type of two disjoint edges is {ty}, expected 4")
        });
        let k = koszul_table(&two_edges, field, 4)?;
        let tor2: u64 = k[2].iter().sum();
        l.check(tor2 == 4, || {
            format!("Koszul Tor_2 total {tor2}, expected 4")
        });
        Ok(())
    })?;
    for n in 3..=8 {
        let kn = SimplicialComplex::complete_graph(n);
        rec.single(&kn, |l| {
            let td = type_defect(&kn, field)?;
            let expected = (n * (n - 1) / 2) as i64 - 2 * n as i64 + 3;
            l.value(td);
            l.check(td == expected, || {
                format!("td(K_{n}) = {td}, expected {expected}")
            });
            l.check(graph_type(&kn)? == modified_type(&kn, field)?, || {
                "graph type formula".into()
            });
            Ok(())
        })?;
    }
    for _ in 0..samples {
        let t = random_tree(rng.gen_range(1..=16), rng.gen())?;
        rec.single(&t, |l| {
            let td = type_defect(&t, field)?;
            l.value(td);
            l.check(td == 0, || format!("td of a tree is {td}"));
            l.check(graph_type(&t)? == modified_type(&t, field)?, || {
                "graph type formula".into()
            });
            Ok(())
        })?;
    }
    for m in 4..=10 {
        let c = SimplicialComplex::cycle(m);
        rec.single(&c, |l| {
            let td = type_defect(&c, field)?;
            l.value(td);
            l.check(td == 3 - m as i64, || {
                format!("td(C_{m}) = {td}, expected {}", 3 - m as i64)
            });
            Ok(())
        })?;
    }
    for d in 2..=6 {
        let s = SimplicialComplex::simplex(d);
        rec.single(&s, |l| {
            let (ty, td) = (modified_type(&s, field)?, type_defect(&s, field)?);
            l.value(ty);
            l.check(ty == 0 && td == 0, || {
                format!("simplex on {d} vertices: type {ty}, td {td}")
            });
            Ok(())
        })?;
        let b = SimplicialComplex::simplex_boundary(d + 1);
        rec.single(&b, |l| {
            let (ty, td) = (modified_type(&b, field)?, type_defect(&b, field)?);
            l.value(ty);
            l.check(ty == 1 && td == 0, || {
                format!("boundary of the {d}-simplex: type {ty}, td {td}")
            });
            Ok(())
        })?;
    }
    join_checks(rec, field)
}

/// `td(Δ1 * simplex) = td(Δ1)`, and `td(Δ1 * Δ2) >= td(Δ1) + td(Δ2) - 1`
/// with equality exactly when both factors are CM non-simplices and one of
/// them is Gorenstein.
fn join_checks(rec: &mut Recorder, field: FieldSpec) -> Result<()> {
    let small: Vec<SimplicialComplex> = corpus(3)?
        .into_iter()
        .filter(|cx| !cx.is_void() && cx.n() > 0 && cx.used_vertices() == cx.ground_set())
        .collect();
    let (mut misclassified, mut refuted_with_simplex) = (0, 0);
    let mut pairs = Vec::new();
    for a in &small {
        for b in &small {
            pairs.push(a.join(b)?);
        }
    }
    let mut idx = 0;
    for a in &small {
        for b in &small {
            let joined = &pairs[idx];
            idx += 1;
            let mut local = Local::default();
            let (ta, tb, tj) = (
                type_defect(a, field)?,
                type_defect(b, field)?,
                type_defect(joined, field)?,
            );
            local.value(tj);
            if b.is_simplex() && b.used_vertices() == b.ground_set() {
                local.check(tj == ta, || {
                    format!("join with a simplex: td {tj}, factor td {ta}")
                });
            }
            local.check(tj >= ta + tb - 1, || {
                format!("join td {tj} below {ta} + {tb} - 1")
            });
            let (cma, cmb) = (is_cohen_macaulay(a, field)?, is_cohen_macaulay(b, field)?);
            let (ga, gb) = (is_gorenstein(a, field)?, is_gorenstein(b, field)?);
            let simplex =
                |x: &SimplicialComplex| x.is_simplex() && x.used_vertices() == x.ground_set();
            let (sa, sb) = (simplex(a), simplex(b));
            let corrected = cma && cmb && !sa && !sb && (ga || gb);
            local.check((tj == ta + tb - 1) == corrected, || {
                format!(
                    "join equality {} but predicted {corrected}",
                    tj == ta + tb - 1
                )
            });
            let unrestricted = cma && cmb && ((ga && !sa) || (gb && !sb));
            if unrestricted != (tj == ta + tb - 1) {
                misclassified += 1;
                refuted_with_simplex += (sa || sb) as usize;
            }
            rec.merge(joined, local);
        }
    }
    rec.notes.push(format!(
        "join equality: the condition `both CM and one Gorenstein non-simplex` misclassifies {misclassified} \
         of {} joins on at most 3+3 vertices, {refuted_with_simplex} of them with a simplex factor",
        pairs.len()
    ));
    Ok(())
}

fn chordal_suite(
    rec: &mut Recorder,
    config: &SuiteConfig,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let field = config.field;
    let graphs = graphs_for(config, samples, rng)?;
    rec.sweep(&graphs, |g| {
        let mut l = Local::default();
        let dirac = is_chordal(g)?;
        let all = chordality_via_td(g, field)?;
        let connected = chordality_via_connected_td(g, field)?;
        l.value(dirac as i64);
        l.check(dirac == all && all == connected, || {
            format!("chordal {dirac}, td >= 0 on induced {all}, on connected induced {connected}")
        });
        let clique = SimplicialComplex::clique_complex(g)?;
        let flag = induced_type_defects(&clique, field)?
            .iter()
            .all(|&t| t >= 0);
        l.check(flag == dirac, || {
            format!("clique complex td >= 0 everywhere is {flag}, chordal {dirac}")
        });
        let ty = modified_type(g, field)?;
        l.value(ty);
        l.check(graph_type(g)? == ty, || {
            "closed-form graph type differs".into()
        });
        if g.n() >= 3 && is_two_connected(g) {
            let e = g.facets().iter().filter(|f| f.len() == 2).count() as i64;
            let td = type_defect(g, field)?;
            l.check(td == e - 2 * g.n() as i64 + 3, || {
                format!("2-connected graph: td {td}")
            });
        }
        Ok(l)
    })
}

fn is_two_connected(g: &SimplicialComplex) -> bool {
    let adj = crate::betti::adjacency(g);
    let all = g.ground_set();
    crate::betti::component_count(&adj, all) == 1
        && (0..g.n()).all(|v| crate::betti::component_count(&adj, all.without(v)) == 1)
}

fn treeish_graph_suite(
    rec: &mut Recorder,
    config: &SuiteConfig,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let field = config.field;
    let mut graphs = graphs_for(config, samples, rng)?;
    graphs.retain(|g| g.n() <= crate::graph::MAX_TREEISH_TD_VERTICES);
    rec.sweep(&graphs, |g| {
        let mut l = Local::default();
        let a = is_treeish_graph(g)?;
        let b = treeish_by_construction(g)?;
        let c = treeish_by_td(g, field)?;
        l.value(a as i64);
        l.check(a == b && b == c, || {
            format!("chordal-and-counts {a}, construction {b}, td {c}")
        });
        if a {
            l.check(is_chordal(g)?, || "treeish graph is not chordal".into());
            let h1 = reduced_homology(g, field)?.get(1);
            l.check(h1 == cycle_space_dim(g)?, || {
                "cycle space dimension differs from H_1".into()
            });
        }
        Ok(l)
    })
}

/// A random CM complex with facet size `d` on at most `max_n` vertices,
/// every vertex used.
fn random_cm(
    rng: &mut ChaCha8Rng,
    d: usize,
    max_n: usize,
    field: FieldSpec,
) -> Result<SimplicialComplex> {
    loop {
        let roll = rng.gen_range(0..10);
        if roll == 0 || max_n == d {
            return Ok(SimplicialComplex::simplex(d));
        }
        if roll == 1 {
            return Ok(SimplicialComplex::simplex_boundary(d + 1));
        }
        let n = rng.gen_range(d + 1..=max_n);
        let k = rng.gen_range(2..=7);
        let mut verts: Vec<usize> = (0..n).collect();
        let faces: Vec<VertexSet> = (0..k)
            .map(|_| {
                verts.shuffle(rng);
                verts[..d].iter().copied().collect()
            })
            .collect();
        let cx = SimplicialComplex::new(n, faces)?;
        let used = cx.used_vertices();
        let cx = cx.induced(used)?.complex;
        if cx.is_pure() && is_cohen_macaulay(&cx, field)? {
            return Ok(cx);
        }
    }
}

fn random_face(rng: &mut ChaCha8Rng, cx: &SimplicialComplex, size: usize) -> VertexSet {
    let f = *cx.facets().choose(rng).unwrap();
    let mut vs = f.to_vec();
    vs.shuffle(rng);
    vs[..size].iter().copied().collect()
}

fn glue_suite(
    rec: &mut Recorder,
    config: &SuiteConfig,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let field = config.field;
    let max_side = config.max_vertices.clamp(2, 6);
    let mut additive = 0;
    let mut seen = std::collections::BTreeSet::new();
    for _ in 0..samples {
        let d = rng.gen_range(2..=4.min(max_side - 1).max(2));
        let a = random_cm(rng, d, max_side, field)?;
        let b = random_cm(rng, d, max_side, field)?;
        let ell = rng.gen_range(1..=d);
        let (e1, e2) = (random_face(rng, &a, ell), random_face(rng, &b, ell));
        let report = verify_glue_type(&a, e1, &b, e2, field, false)?;
        additive += report.additive_case as usize;
        seen.insert((d, ell));
        let glued = crate::glue::glue(&a, e1, &b, e2)?;
        let mut l = Local::default();
        l.value(report.type_glued);
        l.value(report.td_glued);
        l.check(report.type_identity_holds, || {
            format!("type identity fails: {report:?}")
        });
        l.check(report.td_identity_holds, || {
            format!("type-defect identity fails: {report:?}")
        });
        if report.additive_case {
            l.check(report.additivity_holds, || {
                format!("additivity fails: {report:?}")
            });
        }
        rec.merge(&glued, l);
    }
    rec.notes.push(format!(
        "{samples} CM pairs glued, {additive} with ℓ >= d - 1"
    ));
    if samples >= 100 {
        let top = 4.min(max_side - 1).max(2);
        let missing: Vec<_> = (2..=top)
            .flat_map(|d| (1..=d).map(move |ell| (d, ell)))
            .filter(|k| !seen.contains(k))
            .collect();
        rec.global(missing.is_empty(), || {
            format!("facet size and shared-face size pairs never sampled: {missing:?}")
        });
    }
    // Two disjoint edges with one extra unused vertex.
    let padded = SimplicialComplex::from_lists(5, [vec![0, 1], vec![2, 3]])?;
    rec.single(&padded, |l| {
        let tor3 = betti_table(&padded, field)?.total(3);
        let koszul3: u64 = koszul_table(&padded, field, 5)?[3].iter().sum();
        l.value(tor3);
        l.check(tor3 == 5 && koszul3 == 5, || {
            format!("Tor_3 over five variables: {tor3} / {koszul3}, expected 5")
        });
        Ok(())
    })?;
    let two = SimplicialComplex::from_lists(4, [vec![0, 1], vec![2, 3]])?;
    let edge = SimplicialComplex::simplex(2);
    let one = VertexSet::singleton(0);
    let raw = verify_glue_type(&two, one, &edge, one, field, true)?;
    let refused = matches!(
        verify_glue_type(&two, one, &edge, one, field, false),
        Err(Error::Precondition { .. })
    );
    rec.single(&two, |l| {
        l.check(refused, || "non-CM input was not refused".into());
        l.check(!raw.type_identity_holds, || {
            "gluing identity unexpectedly holds without CM".into()
        });
        Ok(())
    })?;
    rec.notes.push(format!(
        "non-CM gluing of two disjoint edges with an edge at a vertex: predicted type {}, actual {}",
        raw.type_predicted, raw.type_glued
    ));
    Ok(())
}

fn is_full_simplex(cx: &SimplicialComplex) -> bool {
    cx.is_simplex() && cx.used_vertices() == cx.ground_set()
}

/// Cone over the boundary of a simplex: pure of codimension one with every vertex
/// used, so the ideal is generated by one monomial of degree at least two.
fn is_boundary_cone(cx: &SimplicialComplex) -> Result<bool> {
    Ok(!cx.is_void()
        && cx.is_pure()
        && cx.used_vertices() == cx.ground_set()
        && cx.codimension()? == 1)
}

fn td_cm_suite(
    rec: &mut Recorder,
    config: &SuiteConfig,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let field = config.field;
    let mut items = exhaustive(config.max_vertices)?;
    let exhaustive_len = items.len();
    items.extend(random_complexes(
        rng,
        6,
        config.max_vertices.min(7),
        samples,
    )?);
    let corpus_part = &items[..exhaustive_len];
    rec.sweep(&items, |cx| {
        let mut l = Local::default();
        let td = type_defect(cx, field)?;
        let cm = is_cohen_macaulay(cx, field)?;
        l.value(td);
        l.value(cm as i64);
        if td <= 0 {
            l.check(cm, || format!("td = {td} but not Cohen-Macaulay"));
        }
        Ok(l)
    })?;
    rec.sweep(corpus_part, |cx| {
        let mut l = Local::default();
        let cm = is_cohen_macaulay(cx, field)?;
        if cx.is_pure() && cx.facets().len() <= MAX_SEARCH_FACETS {
            let sh = is_shellable(cx)?;
            let fc = is_facet_constructible(cx)?;
            l.value(sh as i64 * 2 + fc as i64);
            l.check(!sh || cm, || "shellable but not CM".into());
            l.check(!fc || sh, || "facet constructible but not shellable".into());
        }
        let two = is_2cm(cx, field)?;
        l.check(!two || cm, || "2-CM but not CM".into());
        let table = betti_table(cx, field)?;
        let ty = table.modified_type();
        if two && cx.used_vertices() == cx.ground_set() {
            let d = cx.facet_size()?;
            let top = reduced_homology(cx, field)?.get(d as isize - 1) as u64;
            l.check(ty == top, || format!("2-CM: type {ty}, top homology {top}"));
        }
        let simplex = is_full_simplex(cx);
        l.check((ty < table.total(table.codim)) == cx.is_simplex(), || "type below b_c".into());
        let gor_td0 = is_gorenstein(cx, field)? && ty as i64 == table.codim as i64;
        l.value(gor_td0 as i64);
        let expected = simplex || is_boundary_cone(cx)?;
        l.check(gor_td0 == expected, || {
            format!("Gorenstein with td = 0 is {gor_td0}, simplex or cone over a boundary is {expected}")
        });
        Ok(l)
    })?;
    let k4 = SimplicialComplex::complete_graph(4);
    let (cm, td) = (is_cohen_macaulay(&k4, field)?, type_defect(&k4, field)?);
    rec.single(&k4, |l| {
        l.check(cm && td == 1, || format!("K_4: CM {cm}, td {td}"));
        Ok(())
    })?;
    rec.notes.push(format!(
        "converse witness K_4: Cohen-Macaulay {cm}, td {td}"
    ));
    Ok(())
}

/// Complexes for the linear-resolution suite: the labeled exhaustive corpus
/// plus one complex per isomorphism class of equigenerated minimal
/// non-face families on six vertices.
fn linres_items(max_vertices: usize) -> Result<Vec<SimplicialComplex>> {
    let mut items: Vec<SimplicialComplex> = exhaustive(max_vertices)?
        .into_iter()
        .filter(|cx| !cx.minimal_nonfaces().unwrap().is_empty())
        .collect();
    if max_vertices >= 6 {
        for s in 1..=6 {
            for family in equigenerated_families(6, s)? {
                items.push(complex_from_nonfaces(6, &family)?);
            }
        }
    }
    Ok(items)
}

fn linres_suite(rec: &mut Recorder, config: &SuiteConfig) -> Result<()> {
    let field = config.field;
    let items = linres_items(config.max_vertices)?;
    let locals = items
        .par_iter()
        .map(|cx| linres_item(cx, field))
        .collect::<Result<Vec<_>>>()?;
    let (mut linear, mut corollary_witnesses, mut tree_witnesses, mut h2_witnesses) = (0, 0, 0, 0);
    let mut witnesses_codim_one_s3 = 0;
    let mut first_witness: Option<String> = None;
    for (cx, (local, flags)) in items.iter().zip(locals) {
        rec.merge(cx, local);
        linear += flags.linear as usize;
        corollary_witnesses += flags.literal_corollary_fails as usize;
        tree_witnesses += flags.literal_tree_fails as usize;
        h2_witnesses += flags.literal_h2_fails as usize;
        let witness = flags.literal_corollary_fails || flags.literal_tree_fails;
        witnesses_codim_one_s3 += (witness && flags.codim_one_s3) as usize;
        if witness && first_witness.is_none() {
            first_witness = Some(format!(
                "{:?}",
                cx.facets().iter().map(|f| f.to_vec()).collect::<Vec<_>>()
            ));
        }
    }
    rec.notes.push(format!(
        "{} complexes checked, {linear} with linear resolution",
        items.len()
    ));
    rec.notes.push(format!(
        "`equality iff clique complex of a chordal graph with c+1 maximal cliques` fails on {corollary_witnesses} \
         complexes; `td = 0 iff tree of simplices` fails on {tree_witnesses}; {witnesses_codim_one_s3} of the \
         witnesses have codimension one and s >= 3 (first witness: facets {})",
        first_witness.unwrap_or_else(|| "none".into())
    ));
    rec.notes.push(format!(
        "condition `h_2 >= 0` disagrees with CM on {h2_witnesses} chordal clique complexes"
    ));
    Ok(())
}

#[derive(Default)]
struct LinresFlags {
    linear: bool,
    literal_corollary_fails: bool,
    literal_tree_fails: bool,
    codim_one_s3: bool,
    literal_h2_fails: bool,
}

fn linres_item(cx: &SimplicialComplex, field: FieldSpec) -> Result<(Local, LinresFlags)> {
    let mut l = Local::default();
    let mut flags = LinresFlags::default();
    let er = eagon_reiner_check(cx, field)?;
    l.value(er.linear_resolution as i64);
    l.check(er.holds(), || format!("Eagon-Reiner: {er:?}"));
    let seven_applies = cx.used_vertices() == cx.ground_set() && cx.is_flag()? && {
        let g = cx.skeleton(1)?;
        is_chordal(&g)? && SimplicialComplex::clique_complex(&g)? == *cx
    };
    if seven_applies {
        let r = seven_condition_check(&cx.skeleton(1)?, field)?;
        l.check(r.core_agree(), || {
            format!("chordal classification disagrees: {r:?}")
        });
        flags.literal_h2_fails = r.h2_nonnegative != r.cohen_macaulay;
    }
    if !er.linear_resolution {
        return Ok((l, flags));
    }
    flags.linear = true;
    let linear_again = has_linear_resolution(cx, field)?;
    l.check(linear_again, || "linear resolution not reproducible".into());
    let r = classify_equality(cx, field)?;
    for row in &r.bounds {
        l.value(row.actual);
    }
    l.check(r.bounds_hold, || format!("lower bound violated: {r:?}"));
    l.check(r.conditions_agree(), || {
        format!("equality conditions disagree: {r:?}")
    });
    let h = h_vector_prediction(cx, field)?;
    l.check(h.holds(), || format!("h-vector prediction fails: {h:?}"));
    let (s, c) = (r.s, r.c);
    let td = type_defect(cx, field)?;
    let b1 = r.bounds[0].actual;
    flags.codim_one_s3 = c == 1 && s >= 3;
    if s == 1 {
        l.check(td == -(c as i64), || {
            format!(
                "generators of degree one: td {td}, expected {}",
                -(c as i64)
            )
        });
        return Ok((l, flags));
    }
    l.check(td >= 0, || format!("linear resolution with td {td}"));
    // Bounds for s = 2, which every s >= 2 dominates.
    let mut s2_equal_somewhere = false;
    for row in &r.bounds {
        let j = row.j;
        let s2 = BigUint::from(j as u64 * binomial(c as u64 + 1, j as u64 + 1));
        if s == 2 {
            l.check(row.bound == s2, || {
                format!("s = 2 bound at j = {j} is {}, expected {s2}", row.bound)
            });
        }
        l.check(BigUint::from(row.actual) >= s2, || {
            format!("b_{j} below j C(c+1, j+1)")
        });
        s2_equal_somewhere |= BigUint::from(row.actual) == s2;
    }
    let corrected = (s == 2 && r.cohen_macaulay) || (c == 1 && b1 == 1);
    l.check(s2_equal_somewhere == corrected, || {
        format!("equality with j C(c+1, j+1) is {s2_equal_somewhere}, expected {corrected}")
    });
    let chordal_clique_with_c_plus_1 = cx.is_flag()?
        && froberg_check(cx)?
        && cx.facets().iter().filter(|f| f.len() == cx.n() - c).count() == c + 1
        && cx.facets().len() == c + 1;
    flags.literal_corollary_fails = s2_equal_somewhere != chordal_clique_with_c_plus_1;
    if s == 2 {
        l.check(froberg_check(cx)?, || {
            "s = 2 linear resolution but not a chordal clique complex".into()
        });
    }
    let fc = cx.is_pure() && cx.facets().len() <= MAX_SEARCH_FACETS && is_facet_constructible(cx)?;
    let tree_corrected = fc || (c == 1 && b1 == 1);
    l.check((td == 0) == tree_corrected, || {
        format!("td = {td} but tree-of-simplices-or-hypersurface {tree_corrected}")
    });
    flags.literal_tree_fails = (td == 0) != fc;
    let gd = generating_degree(cx)?;
    l.check(gd == Some(s), || "generating degree changed".into());
    Ok((l, flags))
}

/// A random admissible treeish construction with facet size `d` on at most
/// `max_n` vertices and at most 20 facets.
fn random_treeish(
    rng: &mut ChaCha8Rng,
    d: usize,
    max_n: usize,
) -> Result<(TreeishBase, Vec<TreeishMove>)> {
    let base = if max_n > d && rng.gen_bool(0.3) {
        TreeishBase::SimplexBoundary
    } else {
        TreeishBase::Simplex
    };
    let mut moves = Vec::new();
    let mut current = build_treeish_steps(d, base, &[])?.pop().unwrap();
    for _ in 0..rng.gen_range(0..=6) {
        let room = max_n - current.n();
        let facets = current.facets().len();
        let mut options = Vec::new();
        if room >= 1 && facets < MAX_SEARCH_FACETS {
            options.push(0);
        }
        if room >= 1 && facets + d <= MAX_SEARCH_FACETS {
            options.push(1);
        }
        if room >= 2 && facets + d < MAX_SEARCH_FACETS {
            options.push(2);
        }
        let Some(&kind) = options.choose(rng) else {
            break;
        };
        let mv = match kind {
            0 => TreeishMove::AttachSimplex {
                face: random_face(rng, &current, d - 1),
            },
            1 => TreeishMove::AttachBoundary {
                face: random_face(rng, &current, d),
            },
            _ => TreeishMove::AttachBoundary {
                face: random_face(rng, &current, d - 1),
            },
        };
        moves.push(mv);
        current = build_treeish_steps(d, base, &moves)?.pop().unwrap();
    }
    Ok((base, moves))
}

fn treeish_complex_suite(
    rec: &mut Recorder,
    config: &SuiteConfig,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Result<()> {
    let field = config.field;
    let max_n = config.max_vertices.clamp(3, 10);
    let mut heredity_checked = 0usize;
    let mut sequences = Vec::with_capacity(samples);
    for _ in 0..samples {
        let d = rng.gen_range(2..=4.min(max_n - 1));
        sequences.push((d, random_treeish(rng, d, max_n)?));
    }
    let locals = sequences
        .par_iter()
        .map(
            |(d, (base, moves))| -> Result<(SimplicialComplex, Local, usize)> {
                let mut l = Local::default();
                let steps = build_treeish_steps(*d, *base, moves)?;
                for (k, step) in steps.iter().enumerate() {
                    let td = type_defect(step, field)?;
                    l.value(td);
                    l.check(td == 0, || format!("step {k}: td {td}"));
                    l.check(is_treeish_complex(step)?, || {
                        format!("step {k} not recognised as treeish")
                    });
                }
                let last = steps.last().unwrap().clone();
                let tds = induced_type_defects(&last, field)?;
                let mut checked = 0;
                for w in last.ground_set().subsets().filter(|w| !w.is_empty()) {
                    let sub = last.induced(w)?.complex;
                    if !sub.is_pure() || !sub.is_strongly_facet_connected()? {
                        continue;
                    }
                    checked += 1;
                    let td = tds[w.bits() as usize];
                    l.check(td == 0, || {
                        format!("induced on {w}: strongly facet-connected with td {td}")
                    });
                    l.check(is_treeish_complex(&sub)?, || {
                        format!("induced on {w}: not treeish")
                    });
                }
                Ok((last, l, checked))
            },
        )
        .collect::<Result<Vec<_>>>()?;
    for (cx, l, checked) in locals {
        heredity_checked += checked;
        rec.merge(&cx, l);
    }
    rec.notes.push(format!("{samples} construction sequences, {heredity_checked} strongly facet-connected induced subcomplexes"));
    let four = SimplicialComplex::from_lists(
        6,
        [vec![0, 1, 2], vec![1, 2, 3], vec![2, 3, 4], vec![2, 4, 5]],
    )?;
    let w: VertexSet = [0, 1, 2, 4, 5].into_iter().collect();
    let sub = four.induced(w)?.complex;
    let td = type_defect(&sub, field)?;
    let sfc = sub.is_strongly_facet_connected()?;
    rec.single(&four, |l| {
        l.check(is_treeish_complex(&four)?, || {
            "four-facet example is not treeish".into()
        });
        l.check(td != 0, || "restriction to W has td 0".into());
        l.check(!sfc, || {
            "restriction to W is strongly facet-connected".into()
        });
        Ok(())
    })?;
    rec.notes.push(format!("four-facet example restricted to W = {{1,2,3,5,6}}: td {td}, strongly facet-connected {sfc}"));
    Ok(())
}
