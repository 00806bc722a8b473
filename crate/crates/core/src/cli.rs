//! Command-line front end. `run_command` is the whole program minus process
//! plumbing, so tests can drive it with in-memory writers.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::betti::{betti_table, dual_type, modified_type, type_defect, BettiTable};
use crate::cm::{
    is_2cm, is_cohen_macaulay, is_facet_constructible, is_gorenstein, is_shellable,
    MAX_SEARCH_FACETS,
};
use crate::complex::SimplicialComplex;
use crate::document::ComplexDocument;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::glue::{glue, is_treeish_complex, verify_glue_type, GlueReport};
use crate::graph::{
    chordality_via_connected_td, chordality_via_td, is_chordal, is_treeish_graph,
    perfect_elimination_order, treeish_by_construction, treeish_by_td,
};
use crate::linres::{
    betti_lower_bound, classify_equality, eagon_reiner_check, generating_degree,
    h_vector_prediction, has_linear_resolution, EagonReinerReport, HPredictionReport, LinResReport,
};
use crate::report::{invariant_report, InvariantReport};
use crate::suites::{run_suite, SuiteConfig, SuiteOutcome, SUITE_NAMES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(
    name = "typedefect",
    version,
    about = "Betti numbers, type defect and Cohen-Macaulay classifications of simplicial complexes"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Coefficient field: `q` for the rationals or `gf<p>` for a prime p < 2^31.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    field: FieldSpec,
    /// Report format; `structured` prints one JSON object per report.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Summary of every invariant.
    Info(FileArg),
    /// Graded Betti table of the Stanley-Reisner ring.
    Betti(FileArg),
    /// Modified type: the number of top-degree syzygies beyond the linear strand.
    Type(FileArg),
    /// Type defect: modified type minus codimension.
    Td(FileArg),
    /// Cohen-Macaulay, 2-CM, shellable and facet-constructible tests.
    Cm(FileArg),
    /// Gorenstein test.
    Gorenstein(FileArg),
    /// Chordality of a graph by elimination and by type defects.
    Chordal(FileArg),
    /// Treeish tests for a graph or a pure complex.
    Treeish(FileArg),
    /// Alexander dual, printed in the input format.
    Dual(FileArg),
    /// Glue two complexes along faces and check the type identities.
    Glue(GlueArgs),
    /// Lower bounds and equality classification for linear resolutions.
    Linres(FileArg),
    /// Table of the Betti lower bounds for given s and c.
    Bounds(BoundsArgs),
    /// Run named, seeded verification suites.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
struct FileArg {
    /// Complex file (`-` for standard input).
    file: PathBuf,
}

#[derive(Debug, Args)]
struct GlueArgs {
    first: PathBuf,
    second: PathBuf,
    /// Face of the first complex, as labels separated by commas or spaces.
    #[arg(long)]
    face1: String,
    /// Face of the second complex; its vertices are identified in order with those of `--face1`.
    #[arg(long)]
    face2: String,
    /// Report the identities even when an input is not Cohen-Macaulay.
    #[arg(long)]
    allow_non_cm: bool,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    /// Degree of the generators (s >= 1).
    #[arg(long)]
    s: usize,
    /// Codimension (c >= 1).
    #[arg(long)]
    c: usize,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 6)]
    max_vertices: usize,
    /// Random instances per suite (default depends on the suite).
    #[arg(long)]
    samples: Option<usize>,
    /// Directory receiving one complex file per violation.
    #[arg(long)]
    reproducer_dir: Option<PathBuf>,
}

fn parse_field(s: &str) -> std::result::Result<FieldSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run_command<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
                _ => {
                    let _ = write!(err, "{e}\n{}", Cli::command().render_long_help());
                    EXIT_USAGE
                }
            };
        }
    };
    // Reports are buffered so that the command can run on a worker pool.
    let buffered = |cli: &Cli| {
        let mut buf = Vec::new();
        execute(cli, &mut buf).map(|code| (code, buf))
    };
    let result = match cli.global.jobs {
        Some(0) => Err(Error::Range("--jobs must be at least 1".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| buffered(&cli)),
            Err(e) => Err(Error::Domain(format!(
                "cannot start {n} worker threads: {e}"
            ))),
        },
        None => buffered(&cli),
    };
    let result = result.and_then(|(code, buf)| {
        out.write_all(&buf)
            .map_err(|e| Error::Domain(format!("cannot write output: {e}")))?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

struct Loaded {
    doc: ComplexDocument,
    cx: SimplicialComplex,
}

fn load(path: &Path) -> Result<Loaded> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Domain(format!("cannot read standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?
    };
    let doc = ComplexDocument::parse(&text).map_err(|e| match e {
        Error::Parse {
            line,
            column,
            message,
        } => Error::Parse {
            line,
            column,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })?;
    let cx = doc.to_complex()?;
    Ok(Loaded { doc, cx })
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    command: &'a str,
    field: FieldSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<&'a str>,
    #[serde(flatten)]
    report: T,
}

struct Printer<'a> {
    out: &'a mut dyn Write,
    format: Format,
    field: FieldSpec,
}

impl Printer<'_> {
    /// Writes `report` as one JSON line, or `text` preceded by the field.
    fn emit<T: Serialize>(
        &mut self,
        command: &str,
        name: Option<&str>,
        report: T,
        text: &str,
    ) -> Result<()> {
        let name = name.filter(|n| !n.is_empty());
        let io = |e: std::io::Error| Error::Domain(format!("cannot write output: {e}"));
        match self.format {
            Format::Structured => {
                let env = Envelope {
                    command,
                    field: self.field,
                    name,
                    report,
                };
                let line = serde_json::to_string(&env).map_err(|e| Error::Domain(e.to_string()))?;
                writeln!(self.out, "{line}").map_err(io)
            }
            Format::Text => {
                if let Some(n) = name {
                    writeln!(self.out, "name: {n}").map_err(io)?;
                }
                writeln!(self.out, "field: {}", self.field).map_err(io)?;
                write!(self.out, "{text}").map_err(io)
            }
        }
    }
}

fn labels_of(doc: &ComplexDocument, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
    vs.into_iter().map(|v| doc.labels[v].clone()).collect()
}

fn face_labels(spec: &str) -> Vec<&str> {
    spec.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect()
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let field = cli.global.field;
    let mut p = Printer {
        out,
        format: cli.global.format,
        field,
    };
    match &cli.command {
        Command::Info(a) => {
            let l = load(&a.file)?;
            let r = invariant_report(&l.cx, field)?;
            let text = info_text(&r);
            p.emit("info", Some(&l.doc.name), r, &text)?;
        }
        Command::Betti(a) => {
            let l = load(&a.file)?;
            let table = betti_table(&l.cx, field)?;
            let text = format!("{table}type = {}\n", table.modified_type());
            p.emit("betti", Some(&l.doc.name), BettiOut::new(table), &text)?;
        }
        Command::Type(a) => {
            let l = load(&a.file)?;
            let t = modified_type(&l.cx, field)?;
            #[derive(Serialize)]
            struct Out {
                modified_type: u64,
            }
            p.emit(
                "type",
                Some(&l.doc.name),
                Out { modified_type: t },
                &format!("type = {t}\n"),
            )?;
        }
        Command::Td(a) => {
            let l = load(&a.file)?;
            let td = type_defect(&l.cx, field)?;
            #[derive(Serialize)]
            struct Out {
                type_defect: i64,
                codimension: usize,
            }
            let c = l.cx.codimension()?;
            let text = format!("td = {td}\n");
            p.emit(
                "td",
                Some(&l.doc.name),
                Out {
                    type_defect: td,
                    codimension: c,
                },
                &text,
            )?;
        }
        Command::Cm(a) => {
            let l = load(&a.file)?;
            let r = cm_report(&l.cx, field)?;
            let mut text = format!("cohen-macaulay: {}\n2-cm: {}\n", r.cohen_macaulay, r.two_cm);
            let opt = |b: Option<bool>| b.map_or("n/a".to_string(), |b| b.to_string());
            writeln!(text, "shellable: {}", opt(r.shellable)).unwrap();
            writeln!(text, "facet-constructible: {}", opt(r.facet_constructible)).unwrap();
            p.emit("cm", Some(&l.doc.name), r, &text)?;
        }
        Command::Gorenstein(a) => {
            let l = load(&a.file)?;
            let table = betti_table(&l.cx, field)?;
            #[derive(Serialize)]
            struct Out {
                gorenstein: bool,
                cohen_macaulay: bool,
                last_total_betti: u64,
                modified_type: u64,
            }
            let r = Out {
                gorenstein: is_gorenstein(&l.cx, field)?,
                cohen_macaulay: is_cohen_macaulay(&l.cx, field)?,
                last_total_betti: table.total(table.codim),
                modified_type: table.modified_type(),
            };
            let text = format!(
                "gorenstein: {}\ncohen-macaulay: {}\nb_c = {}\ntype = {}\n",
                r.gorenstein, r.cohen_macaulay, r.last_total_betti, r.modified_type
            );
            p.emit("gorenstein", Some(&l.doc.name), r, &text)?;
        }
        Command::Chordal(a) => {
            let l = load(&a.file)?;
            #[derive(Serialize)]
            struct Out {
                chordal: bool,
                elimination_order: Option<Vec<String>>,
                td_nonnegative_on_induced: bool,
                td_nonnegative_on_connected_induced: bool,
                agree: bool,
            }
            let chordal = is_chordal(&l.cx)?;
            let peo = perfect_elimination_order(&l.cx)?.map(|o| labels_of(&l.doc, o));
            let all = chordality_via_td(&l.cx, field)?;
            let conn = chordality_via_connected_td(&l.cx, field)?;
            let agree = chordal == all && all == conn;
            let mut text = format!("chordal: {chordal}\n");
            if let Some(o) = &peo {
                writeln!(text, "elimination order: {}", o.join(" ")).unwrap();
            }
            writeln!(text, "td >= 0 on every induced subgraph: {all}").unwrap();
            writeln!(text, "td >= 0 on every connected induced subgraph: {conn}").unwrap();
            let r = Out {
                chordal,
                elimination_order: peo,
                td_nonnegative_on_induced: all,
                td_nonnegative_on_connected_induced: conn,
                agree,
            };
            p.emit("chordal", Some(&l.doc.name), r, &text)?;
            if !agree {
                return Ok(EXIT_VIOLATION);
            }
        }
        Command::Treeish(a) => {
            let l = load(&a.file)?;
            return treeish(&mut p, &l);
        }
        Command::Dual(a) => {
            let l = load(&a.file)?;
            let dual = l.cx.alexander_dual()?;
            let name = if l.doc.name.is_empty() {
                "dual".to_string()
            } else {
                format!("{} dual", l.doc.name)
            };
            let doc = ComplexDocument::from_complex(&name, Some(l.doc.labels.clone()), &dual)?;
            #[derive(Serialize)]
            struct Out {
                document: String,
                modified_type_via_dual: Option<u64>,
            }
            let via = if l.cx.codimension()? > 0 {
                Some(dual_type(&l.cx, field)?)
            } else {
                None
            };
            let mut text = doc.emit();
            if let Some(t) = via {
                writeln!(text, "# type of the original via the dual: {t}").unwrap();
            }
            p.emit(
                "dual",
                None,
                Out {
                    document: doc.emit(),
                    modified_type_via_dual: via,
                },
                &text,
            )?;
        }
        Command::Glue(a) => {
            let first = load(&a.first)?;
            let second = load(&a.second)?;
            let e1 = first.doc.vertex_set(&face_labels(&a.face1))?;
            let e2 = second.doc.vertex_set(&face_labels(&a.face2))?;
            let r = verify_glue_type(&first.cx, e1, &second.cx, e2, field, a.allow_non_cm)?;
            let glued = glue(&first.cx, e1, &second.cx, e2)?;
            let mut labels = first.doc.labels.clone();
            for v in (0..second.cx.n()).filter(|&v| !e2.contains(v)) {
                let mut label = second.doc.labels[v].clone();
                while labels.contains(&label) {
                    label.push('\'');
                }
                labels.push(label);
            }
            let doc = ComplexDocument::from_complex("glued", Some(labels), &glued)?;
            let text = format!("{}{}", glue_text(&r), doc.emit());
            let violated = r.first_cm && r.second_cm && !r.holds();
            #[derive(Serialize)]
            struct Out {
                #[serde(flatten)]
                report: GlueReport,
                holds: bool,
                glued: String,
            }
            let holds = r.holds();
            p.emit(
                "glue",
                None,
                Out {
                    report: r,
                    holds,
                    glued: doc.emit(),
                },
                &text,
            )?;
            if violated {
                return Ok(EXIT_VIOLATION);
            }
        }
        Command::Linres(a) => {
            let l = load(&a.file)?;
            return linres(&mut p, &l);
        }
        Command::Bounds(a) => {
            #[derive(Serialize)]
            struct Row {
                j: usize,
                bound: String,
            }
            #[derive(Serialize)]
            struct Out {
                s: usize,
                c: usize,
                bounds: Vec<Row>,
            }
            let mut rows = Vec::new();
            let mut text = format!("s = {}, c = {}\n", a.s, a.c);
            if a.c == 0 {
                return Err(Error::Range("c must be at least 1".into()));
            }
            for j in 1..=a.c {
                let b = betti_lower_bound(a.s, a.c, j)?;
                writeln!(text, "b_{j} >= {b}").unwrap();
                rows.push(Row {
                    j,
                    bound: b.to_string(),
                });
            }
            p.emit(
                "bounds",
                None,
                Out {
                    s: a.s,
                    c: a.c,
                    bounds: rows,
                },
                &text,
            )?;
        }
        Command::Sweep(a) => return sweep(&mut p, a),
    }
    Ok(EXIT_OK)
}

fn info_text(r: &InvariantReport) -> String {
    let join = |v: &[i64]| {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    let f: Vec<i64> = r.f_vector.iter().map(|&x| x as i64).collect();
    let mut t = String::new();
    writeln!(t, "vertices: {}", r.vertices).unwrap();
    writeln!(t, "facets: {}", r.facets).unwrap();
    writeln!(t, "dimension: {}", r.dimension).unwrap();
    writeln!(t, "codimension: {}", r.codimension).unwrap();
    writeln!(t, "f-vector: {}", join(&f)).unwrap();
    writeln!(t, "h-vector: {}", join(&r.h_vector)).unwrap();
    writeln!(t, "type = {}", r.modified_type).unwrap();
    writeln!(t, "td = {}", r.type_defect).unwrap();
    writeln!(t, "cohen-macaulay: {}", r.cohen_macaulay).unwrap();
    writeln!(t, "gorenstein: {}", r.gorenstein).unwrap();
    writeln!(t, "2-cm: {}", r.two_cm).unwrap();
    match r.generating_degree {
        Some(s) => writeln!(t, "generating degree: {s}").unwrap(),
        None => writeln!(t, "generating degree: none").unwrap(),
    }
    writeln!(t, "linear resolution: {}", r.linear_resolution).unwrap();
    t
}

#[derive(Serialize)]
struct BettiOut {
    n: usize,
    codimension: usize,
    entries: Vec<Vec<u64>>,
    totals: Vec<u64>,
    modified_type: u64,
}

impl BettiOut {
    fn new(t: BettiTable) -> Self {
        BettiOut {
            n: t.n,
            codimension: t.codim,
            totals: t.totals(),
            modified_type: t.modified_type(),
            entries: t.entries,
        }
    }
}

#[derive(Serialize)]
struct CmOut {
    cohen_macaulay: bool,
    two_cm: bool,
    /// `None` when the complex is not pure or has too many facets to search.
    shellable: Option<bool>,
    facet_constructible: Option<bool>,
}

fn cm_report(cx: &SimplicialComplex, field: FieldSpec) -> Result<CmOut> {
    let searchable = cx.is_pure() && !cx.is_void() && cx.facets().len() <= MAX_SEARCH_FACETS;
    Ok(CmOut {
        cohen_macaulay: is_cohen_macaulay(cx, field)?,
        two_cm: is_2cm(cx, field)?,
        shellable: if searchable {
            Some(is_shellable(cx)?)
        } else {
            None
        },
        facet_constructible: if searchable {
            Some(is_facet_constructible(cx)?)
        } else {
            None
        },
    })
}

fn treeish(p: &mut Printer<'_>, l: &Loaded) -> Result<i32> {
    #[derive(Serialize)]
    struct Out {
        graph: Option<GraphTreeish>,
        complex: Option<bool>,
    }
    #[derive(Serialize)]
    struct GraphTreeish {
        chordal_with_counts: bool,
        by_construction: bool,
        by_type_defect: bool,
    }
    let cx = &l.cx;
    let is_graph = !cx.is_void() && cx.facets().iter().all(|f| f.len() <= 2);
    let mut text = String::new();
    let graph = if is_graph {
        let g = GraphTreeish {
            chordal_with_counts: is_treeish_graph(cx)?,
            by_construction: treeish_by_construction(cx)?,
            by_type_defect: treeish_by_td(cx, p.field)?,
        };
        writeln!(
            text,
            "treeish graph (chordal, triangle and cycle counts): {}",
            g.chordal_with_counts
        )
        .unwrap();
        writeln!(text, "treeish graph (construction): {}", g.by_construction).unwrap();
        writeln!(
            text,
            "treeish graph (td = 0 on connected induced subgraphs): {}",
            g.by_type_defect
        )
        .unwrap();
        Some(g)
    } else {
        None
    };
    let complex = if cx.is_pure() && !cx.is_void() && cx.facet_size()? >= 2 {
        let t = is_treeish_complex(cx)?;
        writeln!(text, "treeish complex: {t}").unwrap();
        Some(t)
    } else {
        None
    };
    if graph.is_none() && complex.is_none() {
        return Err(Error::Domain(
            "treeish tests need a graph or a pure complex of dimension at least one".into(),
        ));
    }
    let disagree = graph.as_ref().is_some_and(|g| {
        g.chordal_with_counts != g.by_construction || g.by_construction != g.by_type_defect
    });
    p.emit("treeish", Some(&l.doc.name), Out { graph, complex }, &text)?;
    Ok(if disagree { EXIT_VIOLATION } else { EXIT_OK })
}

fn glue_text(r: &GlueReport) -> String {
    let mut t = String::new();
    writeln!(
        t,
        "p = {}, m = {}, n = {}, l = {}, d = {}, c = {}",
        r.p, r.m, r.n, r.ell, r.d, r.c
    )
    .unwrap();
    writeln!(t, "inputs cohen-macaulay: {} {}", r.first_cm, r.second_cm).unwrap();
    writeln!(
        t,
        "type: glued {}, parts {} + {}, predicted {} ({})",
        r.type_glued,
        r.type_first,
        r.type_second,
        r.type_predicted,
        if r.type_identity_holds {
            "holds"
        } else {
            "fails"
        }
    )
    .unwrap();
    writeln!(
        t,
        "td: glued {}, parts {} + {}, predicted {} ({})",
        r.td_glued,
        r.td_first,
        r.td_second,
        r.td_predicted,
        if r.td_identity_holds {
            "holds"
        } else {
            "fails"
        }
    )
    .unwrap();
    if r.additive_case {
        writeln!(t, "additive: {}", r.additivity_holds).unwrap();
    }
    t
}

fn linres(p: &mut Printer<'_>, l: &Loaded) -> Result<i32> {
    #[derive(Serialize)]
    struct Out {
        generating_degree: Option<usize>,
        has_linear_resolution: bool,
        eagon_reiner: EagonReinerReport,
        #[serde(skip_serializing_if = "Option::is_none")]
        bounds: Option<LinResReport>,
        #[serde(skip_serializing_if = "Option::is_none")]
        h_vector: Option<HPredictionReport>,
        #[serde(skip_serializing_if = "Option::is_none")]
        type_defect: Option<i64>,
        holds: bool,
    }
    let cx = &l.cx;
    let field = p.field;
    let s = generating_degree(cx)?;
    let linear = s.is_some() && has_linear_resolution(cx, field)?;
    let er = eagon_reiner_check(cx, field)?;
    let mut text = String::new();
    match s {
        Some(s) => writeln!(text, "generating degree: {s}").unwrap(),
        None => writeln!(text, "generating degree: mixed").unwrap(),
    }
    writeln!(text, "linear resolution: {linear}").unwrap();
    writeln!(
        text,
        "alexander dual cohen-macaulay: {}",
        er.dual_cohen_macaulay
    )
    .unwrap();
    let mut out = Out {
        generating_degree: s,
        has_linear_resolution: linear,
        holds: er.holds(),
        eagon_reiner: er,
        bounds: None,
        h_vector: None,
        type_defect: None,
    };
    if linear {
        let b = classify_equality(cx, field)?;
        let h = h_vector_prediction(cx, field)?;
        let td = type_defect(cx, field)?;
        writeln!(text, "s = {}, c = {}, td = {td}", b.s, b.c).unwrap();
        for row in &b.bounds {
            let mark = if row.equal { "=" } else { ">" };
            writeln!(text, "b_{} = {} {mark} {}", row.j, row.actual, row.bound).unwrap();
        }
        writeln!(text, "equality conditions agree: {}", b.conditions_agree()).unwrap();
        writeln!(text, "cohen-macaulay: {}", b.cohen_macaulay).unwrap();
        writeln!(text, "h_s = {} (predicted {})", h.h_s, h.h_s_predicted).unwrap();
        writeln!(text, "h-vector predictions hold: {}", h.holds()).unwrap();
        out.holds = out.holds && b.holds() && h.holds();
        out.bounds = Some(b);
        out.h_vector = Some(h);
        out.type_defect = Some(td);
    }
    if let Some(c) = out.eagon_reiner.coefficient_identity {
        writeln!(text, "betti numbers from the dual h-vector: {c}").unwrap();
    }
    let holds = out.holds;
    p.emit("linres", Some(&l.doc.name), out, &text)?;
    Ok(if holds { EXIT_OK } else { EXIT_VIOLATION })
}

fn sweep(p: &mut Printer<'_>, a: &SweepArgs) -> Result<i32> {
    let names: Vec<&str> = if a.suite == "all" {
        SUITE_NAMES.to_vec()
    } else if SUITE_NAMES.contains(&a.suite.as_str()) {
        vec![a.suite.as_str()]
    } else {
        return Err(Error::Domain(format!(
            "unknown suite `{}`; expected `all` or one of {}",
            a.suite,
            SUITE_NAMES.join(", ")
        )));
    };
    let config = SuiteConfig {
        field: p.field,
        seed: a.seed,
        max_vertices: a.max_vertices,
        samples: a.samples,
    };
    let mut failed = false;
    for name in names {
        let outcome = run_suite(name, &config)?;
        failed |= !outcome.passed();
        let reproducers = reproducers(&outcome)?;
        if let Some(dir) = &a.reproducer_dir {
            std::fs::create_dir_all(dir)
                .map_err(|e| Error::Domain(format!("cannot create {}: {e}", dir.display())))?;
            for (k, text) in reproducers.iter().enumerate() {
                let path = dir.join(format!("{name}-{k}.complex"));
                std::fs::write(&path, text)
                    .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display())))?;
            }
        }
        let text = sweep_text(&outcome, &reproducers);
        #[derive(Serialize)]
        struct Out<'a> {
            #[serde(flatten)]
            outcome: &'a SuiteOutcome,
            passed: bool,
            reproducers: &'a [String],
        }
        p.emit(
            "sweep",
            None,
            Out {
                outcome: &outcome,
                passed: outcome.passed(),
                reproducers: &reproducers,
            },
            &text,
        )?;
    }
    Ok(if failed { EXIT_VIOLATION } else { EXIT_OK })
}

fn reproducers(outcome: &SuiteOutcome) -> Result<Vec<String>> {
    outcome
        .violations
        .iter()
        .map(|v| {
            let doc = ComplexDocument::from_complex(
                &format!("{} violation", outcome.suite),
                None,
                &v.complex(),
            )?;
            Ok(format!("# {}\n{}", v.description, doc.emit()))
        })
        .collect()
}

fn sweep_text(o: &SuiteOutcome, reproducers: &[String]) -> String {
    let mut t = String::new();
    writeln!(
        t,
        "suite {} v{}: seed {}, max vertices {}, samples {}",
        o.suite, o.version, o.seed, o.max_vertices, o.samples
    )
    .unwrap();
    writeln!(t, "checked {} assertions, digest {}", o.checked, o.digest).unwrap();
    for note in &o.notes {
        writeln!(t, "note: {note}").unwrap();
    }
    if o.passed() {
        writeln!(t, "result: pass").unwrap();
    } else {
        writeln!(t, "result: FAIL ({} violations)", o.violations.len()).unwrap();
        for r in reproducers {
            t.push_str(r);
        }
    }
    t
}
