//! One-stop summary of the invariants of a complex.

use serde::Serialize;

use crate::betti::modified_type;
use crate::cm::{is_2cm, is_cohen_macaulay, is_gorenstein};
use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::field::FieldSpec;
use crate::linres::{generating_degree, has_linear_resolution};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub field: FieldSpec,
    pub vertices: usize,
    pub facets: usize,
    pub dimension: isize,
    pub codimension: usize,
    pub f_vector: Vec<u64>,
    pub h_vector: Vec<i64>,
    pub modified_type: u64,
    pub type_defect: i64,
    pub cohen_macaulay: bool,
    pub gorenstein: bool,
    pub two_cm: bool,
    /// `None` for the full simplex (zero ideal) and for ideals with
    /// minimal generators of several degrees.
    pub generating_degree: Option<usize>,
    pub linear_resolution: bool,
}

pub fn invariant_report(cx: &SimplicialComplex, field: FieldSpec) -> Result<InvariantReport> {
    let modified_type = modified_type(cx, field)?;
    let codimension = cx.codimension()?;
    let zero_ideal = cx.minimal_nonfaces()?.is_empty();
    Ok(InvariantReport {
        field,
        vertices: cx.n(),
        facets: cx.facets().len(),
        dimension: cx.dimension()?,
        codimension,
        f_vector: cx.f_vector()?.entries,
        h_vector: cx.h_vector()?.entries,
        modified_type,
        type_defect: modified_type as i64 - codimension as i64,
        cohen_macaulay: is_cohen_macaulay(cx, field)?,
        gorenstein: is_gorenstein(cx, field)?,
        two_cm: is_2cm(cx, field)?,
        generating_degree: if zero_ideal {
            None
        } else {
            generating_degree(cx)?
        },
        linear_resolution: !zero_ideal && has_linear_resolution(cx, field)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_for_a_path() {
        let r = invariant_report(&SimplicialComplex::path(4), FieldSpec::Rationals).unwrap();
        assert_eq!(
            (r.vertices, r.facets, r.dimension, r.codimension),
            (4, 3, 1, 2)
        );
        assert_eq!(r.f_vector, vec![1, 4, 3]);
        assert_eq!(r.h_vector, vec![1, 2, 0]);
        assert_eq!((r.modified_type, r.type_defect), (2, 0));
        assert!(r.cohen_macaulay && !r.gorenstein && !r.two_cm);
        assert_eq!(r.generating_degree, Some(2));
        assert!(r.linear_resolution);
        let s = invariant_report(&SimplicialComplex::simplex(3), FieldSpec::Rationals).unwrap();
        assert_eq!(
            (s.generating_degree, s.linear_resolution, s.type_defect),
            (None, false, 0)
        );
    }
}
