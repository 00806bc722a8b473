//! Reduced simplicial homology over a field.
//!
//! Faces are oriented by increasing vertex index and
//! `∂[v_0..v_i] = Σ_p (-1)^p [v_0..v̂_p..v_i]`. The augmentation `∂_0` sends
//! every vertex to the empty face, so `{∅}` has `H̃_{-1} = k`.

use serde::Serialize;

use crate::complex::{faces_of, SimplicialComplex};
use crate::error::{range, Result};
use crate::field::FieldSpec;
use crate::linalg::{rank, SparseRow};
use crate::vertex_set::VertexSet;

/// `dims[k] = dim H̃_{k-1}`, for `k = 0..=dim Δ + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub dims: Vec<usize>,
}

impl HomologyProfile {
    /// `dim H̃_i`; zero outside the stored range.
    #[inline]
    pub fn get(&self, i: isize) -> usize {
        if i < -1 {
            return 0;
        }
        self.dims.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// `Σ_i (-1)^i dim H̃_i`, starting at `i = -1`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &h)| if k % 2 == 0 { -(h as i64) } else { h as i64 })
            .sum()
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&h| h == 0)
    }
}

/// The boundary map `∂_i` from `i`-faces to `(i-1)`-faces, stored column by
/// column: `columns[c]` lists the signed `(i-1)`-faces of the `c`-th `i`-face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub row_faces: Vec<VertexSet>,
    pub col_faces: Vec<VertexSet>,
    pub columns: Vec<SparseRow>,
}

impl BoundaryMatrix {
    pub fn nrows(&self) -> usize {
        self.row_faces.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_faces.len()
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        rank(&self.columns, self.nrows(), field)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.ncols()]; self.nrows()];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                m[r as usize][c] = v;
            }
        }
        m
    }
}

/// Faces bucketed by cardinality; each bucket sorted by bit pattern.
struct FaceTable {
    by_size: Vec<Vec<VertexSet>>,
}

impl FaceTable {
    fn new(facets: &[VertexSet]) -> Self {
        let faces = faces_of(facets);
        let top = faces.last().map_or(0, |f| f.len());
        let mut by_size = vec![Vec::new(); top + 1];
        for f in faces {
            by_size[f.len()].push(f);
        }
        FaceTable { by_size }
    }

    fn count(&self, size: usize) -> usize {
        self.by_size.get(size).map_or(0, Vec::len)
    }

    /// Columns of the boundary map out of the faces of cardinality `size`.
    fn boundary_columns(&self, size: usize) -> Vec<SparseRow> {
        let lower = &self.by_size[size - 1];
        self.by_size[size]
            .iter()
            .map(|f| {
                let mut col: SparseRow = f
                    .iter()
                    .enumerate()
                    .map(|(p, v)| {
                        let idx = lower
                            .binary_search(&f.without(v))
                            .expect("faces are closed under taking subsets");
                        (idx as u32, if p % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect()
    }

    /// Rank of the boundary map out of faces of cardinality `size`.
    fn boundary_rank(&self, size: usize, field: FieldSpec) -> usize {
        match size {
            0 => 0,
            1 => usize::from(self.count(1) > 0),
            _ if self.count(size) == 0 => 0,
            _ => rank(&self.boundary_columns(size), self.count(size - 1), field),
        }
    }
}

/// `∂_i` for `-1 ≤ i ≤ dim Δ`.
pub fn boundary_matrix(cx: &SimplicialComplex, i: isize) -> Result<BoundaryMatrix> {
    let dim = cx.dimension()?;
    if i < -1 || i > dim {
        return range(format!("boundary index {i} outside -1..={dim}"));
    }
    let table = FaceTable::new(cx.facets());
    let size = (i + 1) as usize;
    let col_faces = table.by_size[size].clone();
    let (row_faces, columns) = match size {
        0 => (Vec::new(), vec![Vec::new()]),
        1 => (vec![VertexSet::EMPTY], vec![vec![(0, 1)]; col_faces.len()]),
        _ => (
            table.by_size[size - 1].clone(),
            table.boundary_columns(size),
        ),
    };
    Ok(BoundaryMatrix {
        row_faces,
        col_faces,
        columns,
    })
}

/// Reduced homology of the complex generated by `facets` (non-empty list).
pub(crate) fn homology_of_facets(facets: &[VertexSet], field: FieldSpec) -> HomologyProfile {
    debug_assert!(!facets.is_empty());
    let table = FaceTable::new(facets);
    let top = table.by_size.len() - 1;
    let ranks: Vec<usize> = (0..=top + 1)
        .map(|s| {
            if s > top {
                0
            } else {
                table.boundary_rank(s, field)
            }
        })
        .collect();
    let dims = (0..=top)
        .map(|s| table.count(s) - ranks[s] - ranks[s + 1])
        .collect();
    HomologyProfile { dims }
}

pub fn reduced_homology(cx: &SimplicialComplex, field: FieldSpec) -> Result<HomologyProfile> {
    cx.require_nonvoid()?;
    Ok(homology_of_facets(cx.facets(), field))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let inner = b.len();
        let cols = b.first().map_or(0, Vec::len);
        a.iter()
            .map(|row| {
                (0..cols)
                    .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn boundary_squares_to_zero() {
        let cx = SimplicialComplex::simplex(5);
        for i in 0..=4 {
            let lo = boundary_matrix(&cx, i - 1).unwrap();
            let hi = boundary_matrix(&cx, i).unwrap();
            let prod = matmul(&lo.to_dense(), &hi.to_dense());
            assert!(prod.iter().flatten().all(|&x| x == 0), "∂∂ ≠ 0 at {i}");
        }
    }

    #[test]
    fn small_boundary_maps() {
        let c3 = SimplicialComplex::cycle(3);
        let d1 = boundary_matrix(&c3, 1).unwrap();
        assert_eq!((d1.nrows(), d1.ncols()), (3, 3));
        assert_eq!(d1.rank(FieldSpec::Rationals), 2);
        let edge = SimplicialComplex::simplex(2);
        let d0 = boundary_matrix(&edge, 0).unwrap();
        assert_eq!(d0.to_dense(), vec![vec![1, 1]]);
        assert_eq!(d0.rank(FieldSpec::Rationals), 1);
        assert!(boundary_matrix(&edge, 2).is_err());
        assert!(boundary_matrix(&edge, -2).is_err());
    }

    #[test]
    fn homology_examples() {
        let q = FieldSpec::Rationals;
        let e = reduced_homology(&SimplicialComplex::empty_face(3), q).unwrap();
        assert_eq!(e.dims, vec![1]);
        for d in 1..=6 {
            let h = reduced_homology(&SimplicialComplex::simplex_boundary(d + 1), q).unwrap();
            let mut want = vec![0; d + 1];
            want[d] = 1;
            assert_eq!(h.dims, want, "boundary of the {d}-simplex");
        }
        let two_edges = SimplicialComplex::from_lists(4, [[0, 1], [2, 3]]).unwrap();
        assert_eq!(reduced_homology(&two_edges, q).unwrap().dims, vec![0, 1, 0]);
        assert!(reduced_homology(&SimplicialComplex::new(2, []).unwrap(), q).is_err());
    }

    #[test]
    fn euler_characteristic_matches_f_vector() {
        let cx = SimplicialComplex::from_lists(
            6,
            [vec![0, 1, 2], vec![2, 3], vec![3, 4], vec![4, 2], vec![5]],
        )
        .unwrap();
        let h = reduced_homology(&cx, FieldSpec::Rationals).unwrap();
        assert_eq!(
            h.reduced_euler_characteristic(),
            cx.f_vector().unwrap().reduced_euler_characteristic()
        );
        assert_eq!(h.dims, vec![0, 1, 1, 0]);
    }

    #[test]
    fn projective_plane_sees_the_characteristic() {
        // 6-vertex RP^2: torsion Z/2 in H_1 shows up over GF(2) only.
        let rp2 = SimplicialComplex::from_lists(
            6,
            [
                [0, 1, 2],
                [0, 2, 3],
                [0, 3, 4],
                [0, 4, 5],
                [0, 1, 5],
                [1, 2, 4],
                [2, 3, 5],
                [1, 3, 4],
                [2, 4, 5],
                [1, 3, 5],
            ],
        )
        .unwrap();
        let q = reduced_homology(&rp2, FieldSpec::Rationals).unwrap();
        assert!(q.is_acyclic());
        let f2 = reduced_homology(&rp2, FieldSpec::Prime(2)).unwrap();
        assert_eq!(f2.dims, vec![0, 0, 1, 1]);
        let big = reduced_homology(&rp2, FieldSpec::fast()).unwrap();
        assert!(big.is_acyclic());
    }
}
