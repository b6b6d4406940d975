//! Homology of finite complexes over the integers and over prime fields.

use serde::Serialize;

use crate::complexes::CellComplex;
use crate::matrix::{smith_normal_form, ExactMatrix};
use crate::ring::Ring;

/// One homology group: free rank and torsion coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<i128>,
}

impl HomologyGroup {
    pub fn free(betti: usize) -> Self {
        HomologyGroup { betti, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// The matrix of the boundary from `dim`-chains to `(dim-1)`-chains, with
/// cell labels attached.
pub fn boundary_matrix<X: CellComplex>(complex: &X, dim: usize) -> ExactMatrix {
    let cols = complex.cells(dim);
    let rows = if dim == 0 { &[] } else { complex.cells(dim - 1) };
    let mut m = ExactMatrix::zero(rows.len(), cols.len());
    for (j, cell) in cols.iter().enumerate() {
        for (coeff, face) in complex.boundary_cell(cell) {
            let i = rows.binary_search(&face).unwrap_or_else(|_| {
                panic!("face {face} of {cell} missing from the basis")
            });
            m[(i, j)] += coeff;
        }
    }
    m.row_labels = rows.iter().map(|c| c.to_string()).collect();
    m.col_labels = cols.iter().map(|c| c.to_string()).collect();
    m
}

/// Homology in every degree. Over the integers this reports free ranks and
/// torsion from the Smith normal form; over `Z/p` it reports dimensions.
pub fn homology<X: CellComplex>(complex: &X, ring: Ring) -> Vec<HomologyGroup> {
    let top = complex.max_dim();
    match ring {
        Ring::Int => {
            let snfs: Vec<_> =
                (0..=top + 1).map(|d| smith_normal_form(&boundary_matrix(complex, d))).collect();
            (0..=top)
                .map(|d| {
                    let cells = complex.cells(d).len();
                    let rank_in = snfs[d].rank();
                    let rank_out = snfs[d + 1].rank();
                    let torsion: Vec<i128> = snfs[d + 1]
                        .invariant_factors()
                        .into_iter()
                        .filter(|f| *f > 1)
                        .collect();
                    HomologyGroup { betti: cells - rank_in - rank_out, torsion }
                })
                .collect()
        }
        Ring::Mod(p) => (0..=top)
            .map(|d| {
                let cells = complex.cells(d).len();
                let rank_in = boundary_matrix(complex, d).rank_mod(p);
                let rank_out = boundary_matrix(complex, d + 1).rank_mod(p);
                HomologyGroup::free(cells - rank_in - rank_out)
            })
            .collect(),
    }
}

/// Homology of the mapping cone of a chain map, for checking that the map is
/// a quasi-isomorphism: the cone is acyclic exactly when the map induces an
/// isomorphism in every degree.
///
/// `map(dim, j)` gives the image of the `j`-th `dim`-cell of `source` in the
/// `dim`-cells of `target`, as (coefficient, target index) pairs.
pub fn cone_homology<S: CellComplex, T: CellComplex>(
    source: &S,
    target: &T,
    map: impl Fn(usize, usize) -> Vec<(i128, usize)>,
) -> Vec<HomologyGroup> {
    struct Cone {
        // cells in degree d: target cells of degree d, then source cells of degree d-1
        sizes: Vec<(usize, usize)>,
        boundaries: Vec<ExactMatrix>,
    }
    impl Cone {
        fn betti(&self) -> Vec<HomologyGroup> {
            let snfs: Vec<_> = self.boundaries.iter().map(smith_normal_form).collect();
            (0..self.sizes.len())
                .map(|d| {
                    let cells = self.sizes[d].0 + self.sizes[d].1;
                    let rank_in = snfs[d].rank();
                    let rank_out = if d + 1 < snfs.len() { snfs[d + 1].rank() } else { 0 };
                    let torsion = if d + 1 < snfs.len() {
                        snfs[d + 1].invariant_factors().into_iter().filter(|f| *f > 1).collect()
                    } else {
                        Vec::new()
                    };
                    HomologyGroup { betti: cells - rank_in - rank_out, torsion }
                })
                .collect()
        }
    }

    let top = source.max_dim().max(target.max_dim()) + 1;
    let mut sizes = Vec::new();
    for d in 0..=top {
        let t = target.cells(d).len();
        let s = if d == 0 { 0 } else { source.cells(d - 1).len() };
        sizes.push((t, s));
    }
    let mut boundaries = Vec::new();
    for d in 0..=top {
        let (t_d, s_d) = sizes[d];
        let (t_lo, s_lo) = if d == 0 { (0, 0) } else { sizes[d - 1] };
        let mut m = ExactMatrix::zero(t_lo + s_lo, t_d + s_d);
        // target boundary block
        let bt = boundary_matrix(target, d);
        for i in 0..bt.rows() {
            for j in 0..bt.cols() {
                m[(i, j)] = bt[(i, j)];
            }
        }
        if d >= 1 {
            // map block: source (d-1)-cells land in target (d-1)-cells
            for j in 0..s_d {
                for (coeff, i) in map(d - 1, j) {
                    m[(i, t_d + j)] += coeff;
                }
            }
            // negated source boundary block
            if d >= 1 && s_d > 0 {
                let bs = boundary_matrix(source, d - 1);
                for i in 0..bs.rows() {
                    for j in 0..bs.cols() {
                        m[(t_lo + i, t_d + j)] = -bs[(i, j)];
                    }
                }
            }
        }
        boundaries.push(m);
    }
    Cone { sizes, boundaries }.betti()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{LatticeCube, LatticeCubicalComplex, SimplicialComplex};

    fn cube(v: Vec<(i64, i64)>) -> LatticeCube {
        LatticeCube::new(v).unwrap()
    }

    #[test]
    fn point() {
        let x = LatticeCubicalComplex::new(1, vec![cube(vec![(0, 0)])]).unwrap();
        assert_eq!(homology(&x, Ring::Int), vec![HomologyGroup::free(1)]);
    }

    #[test]
    fn hollow_square_is_a_circle() {
        let x = LatticeCubicalComplex::new(
            2,
            vec![
                cube(vec![(0, 1), (0, 0)]),
                cube(vec![(0, 1), (1, 1)]),
                cube(vec![(0, 0), (0, 1)]),
                cube(vec![(1, 1), (0, 1)]),
            ],
        )
        .unwrap();
        assert_eq!(
            homology(&x, Ring::Int),
            vec![HomologyGroup::free(1), HomologyGroup::free(1)]
        );
        // the rank of the edge boundary matrix is 3
        assert_eq!(smith_normal_form(&boundary_matrix(&x, 1)).rank(), 3);
    }

    #[test]
    fn projective_plane_torsion() {
        let rp2 = SimplicialComplex::new(vec![
            vec![1, 2, 3],
            vec![1, 3, 4],
            vec![1, 4, 5],
            vec![1, 5, 6],
            vec![1, 2, 6],
            vec![2, 3, 5],
            vec![2, 4, 5],
            vec![2, 4, 6],
            vec![3, 4, 6],
            vec![3, 5, 6],
        ])
        .unwrap();
        let h = homology(&rp2, Ring::Int);
        assert_eq!(h[0], HomologyGroup::free(1));
        assert_eq!(h[1], HomologyGroup { betti: 0, torsion: vec![2] });
        assert_eq!(h[2], HomologyGroup::free(0));
        // over Z/2 both H_1 and H_2 are one-dimensional
        let h2 = homology(&rp2, Ring::Mod(2));
        assert_eq!(h2.iter().map(|g| g.betti).collect::<Vec<_>>(), vec![1, 1, 1]);
        // over Z/3 the torsion is invisible
        let h3 = homology(&rp2, Ring::Mod(3));
        assert_eq!(h3.iter().map(|g| g.betti).collect::<Vec<_>>(), vec![1, 0, 0]);
    }

    #[test]
    fn display_of_groups() {
        assert_eq!(HomologyGroup::free(2).to_string(), "Z^2");
        assert_eq!(HomologyGroup { betti: 0, torsion: vec![2] }.to_string(), "Z/2");
        assert_eq!(HomologyGroup::free(0).to_string(), "0");
    }
}
