//! Cubical complexes embedded in the integer lattice.

use std::collections::BTreeSet;
use std::fmt;

use serde::Deserialize;

use crate::chain::{FreeElement, TensorWord};
use crate::cubical::{CubeSymbol, CubeWord};
use crate::error::Error;
use crate::ring::Ring;
use crate::terms::{evaluate, CoopTerm, Element};

use super::CellComplex;

/// An elementary cube: a product of `d` intervals, each either degenerate
/// `[k, k]` or unit `[k, k+1]`. The dimension is the number of unit factors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct LatticeCube(Vec<(i64, i64)>);

impl LatticeCube {
    pub fn new(intervals: Vec<(i64, i64)>) -> Result<Self, Error> {
        for &(lo, hi) in &intervals {
            if hi != lo && hi != lo + 1 {
                return Err(Error::InvalidComplex(format!(
                    "[{lo},{hi}] is not an elementary interval"
                )));
            }
        }
        Ok(LatticeCube(intervals))
    }

    pub fn ambient(&self) -> usize {
        self.0.len()
    }

    pub fn dim(&self) -> usize {
        self.0.iter().filter(|(lo, hi)| hi > lo).count()
    }

    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.0
    }

    /// Indices of the nondegenerate axes, in increasing order.
    fn free_axes(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, (lo, hi))| hi > lo)
            .map(|(a, _)| a)
            .collect()
    }

    /// Restrict the word's symbols onto the free axes: `[0]` picks the lower
    /// endpoint, `[1]` the upper, `[01]` keeps the interval.
    pub fn restrict(&self, word: &CubeWord) -> LatticeCube {
        let axes = self.free_axes();
        assert_eq!(word.ambient(), axes.len(), "word length must match cell dimension");
        let mut intervals = self.0.clone();
        for (j, &axis) in axes.iter().enumerate() {
            let (lo, hi) = intervals[axis];
            intervals[axis] = match word.0[j] {
                CubeSymbol::E0 => (lo, lo),
                CubeSymbol::E1 => (hi, hi),
                CubeSymbol::I => (lo, hi),
            };
        }
        LatticeCube(intervals)
    }

    /// The corner vertices, each as a lattice point.
    pub fn vertices(&self) -> Vec<Vec<i64>> {
        let axes = self.free_axes();
        let mut out = Vec::with_capacity(1 << axes.len());
        for mask in 0u64..(1 << axes.len()) {
            let mut v: Vec<i64> = self.0.iter().map(|(lo, _)| *lo).collect();
            for (j, &axis) in axes.iter().enumerate() {
                if (mask >> j) & 1 == 1 {
                    v[axis] = self.0[axis].1;
                }
            }
            out.push(v);
        }
        out
    }

    /// Lower corner.
    pub fn min_vertex(&self) -> Vec<i64> {
        self.0.iter().map(|(lo, _)| *lo).collect()
    }
}

impl fmt::Display for LatticeCube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (lo, hi)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "[{lo},{hi}]")?;
        }
        Ok(())
    }
}

/// A finite face-closed set of elementary cubes in `Z^d`.
pub struct LatticeCubicalComplex {
    ambient: usize,
    cells: Vec<Vec<LatticeCube>>,
}

#[derive(Deserialize)]
struct LatticeInput {
    dim: usize,
    cubes: Vec<Vec<[i64; 2]>>,
}

impl LatticeCubicalComplex {
    /// Build from the top cells; the face closure is computed.
    pub fn new(ambient: usize, top: Vec<LatticeCube>) -> Result<Self, Error> {
        let mut seen: BTreeSet<LatticeCube> = BTreeSet::new();
        let mut stack = Vec::new();
        for cube in top {
            if cube.ambient() != ambient {
                return Err(Error::InvalidComplex(format!(
                    "cube {cube} does not live in dimension {ambient}"
                )));
            }
            if seen.insert(cube.clone()) {
                stack.push(cube);
            }
        }
        while let Some(cube) = stack.pop() {
            for axis in cube.free_axes() {
                let (lo, hi) = cube.0[axis];
                for v in [lo, hi] {
                    let mut intervals = cube.0.clone();
                    intervals[axis] = (v, v);
                    let face = LatticeCube(intervals);
                    if seen.insert(face.clone()) {
                        stack.push(face);
                    }
                }
            }
        }
        let max_dim = seen.iter().map(LatticeCube::dim).max().unwrap_or(0);
        let mut cells = vec![Vec::new(); max_dim + 1];
        for cube in seen {
            let d = cube.dim();
            cells[d].push(cube);
        }
        Ok(LatticeCubicalComplex { ambient, cells })
    }

    pub fn from_json(src: &str) -> Result<Self, Error> {
        let input: LatticeInput = serde_json::from_str(src)
            .map_err(|e| Error::InvalidComplex(format!("lattice complex: {e}")))?;
        let mut top = Vec::new();
        for cube in input.cubes {
            if cube.len() != input.dim {
                return Err(Error::InvalidComplex(format!(
                    "cube with {} intervals in ambient dimension {}",
                    cube.len(),
                    input.dim
                )));
            }
            top.push(LatticeCube::new(cube.into_iter().map(|[a, b]| (a, b)).collect())?);
        }
        Self::new(input.dim, top)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }
}

impl CellComplex for LatticeCubicalComplex {
    type Cell = LatticeCube;

    fn max_dim(&self) -> usize {
        self.cells.len().saturating_sub(1)
    }

    fn cells(&self, dim: usize) -> &[LatticeCube] {
        self.cells.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    fn dim_of(&self, cell: &LatticeCube) -> usize {
        cell.dim()
    }

    fn boundary_cell(&self, cell: &LatticeCube) -> Vec<(i128, LatticeCube)> {
        let mut out = Vec::new();
        for (j, axis) in cell.free_axes().into_iter().enumerate() {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let (lo, hi) = cell.0[axis];
            let mut upper = cell.0.clone();
            upper[axis] = (hi, hi);
            let mut lower = cell.0.clone();
            lower[axis] = (lo, lo);
            out.push((sign, LatticeCube(upper)));
            out.push((-sign, LatticeCube(lower)));
        }
        out
    }

    fn pushforward_cell(
        &self,
        term: &CoopTerm,
        cell: &LatticeCube,
        ring: Ring,
    ) -> Result<FreeElement<TensorWord<LatticeCube>>, Error> {
        let n = cell.dim();
        let top: Element<CubeWord> =
            Element::basis(ring, TensorWord::single(CubeWord::top(n)));
        let value = evaluate(term, &top)?;
        Ok(value.map_basis(|tw| {
            let cells: Vec<LatticeCube> = tw.0.iter().map(|w| cell.restrict(w)).collect();
            Some((1, TensorWord(cells)))
        }))
    }
}
