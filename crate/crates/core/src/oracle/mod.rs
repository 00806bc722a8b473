//! Independent verification machinery: a Koszul-complex computation of
//! `Tor^S(S/I_Δ, k)` that never touches induced subcomplexes, and the
//! exhaustive and seeded random complex generators used by the sweeps.

mod corpus;
mod dense;
mod koszul;

pub use corpus::{
    corpus, enumerate_complexes, equigenerated_families, random_complex, random_graph, random_tree,
    RandomComplexParams, MAX_ENUMERATION_VERTICES,
};
pub use koszul::{
    koszul_strand, koszul_strand_unsplit, koszul_table, koszul_tor, MAX_KOSZUL_VERTICES,
};
