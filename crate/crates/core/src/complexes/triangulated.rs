//! Staircase triangulation of lattice cubical complexes.
//!
//! The simplices of the triangulated complex are strictly increasing chains
//! of lattice vertices inside a common cell; an `n`-cell contributes `n!`
//! top simplices, one per order in which its axes step from the lower to the
//! upper corner, and shared faces are identified automatically because the
//! vertex chains are geometric.

use std::collections::BTreeSet;
use std::fmt;

use crate::chain::{FreeElement, TensorWord};
use crate::error::Error;
use crate::ring::Ring;
use crate::simplicial::SimplexWord;
use crate::terms::{evaluate, CoopTerm, Element};

use super::lattice::{LatticeCube, LatticeCubicalComplex};
use super::CellComplex;

/// A simplex of the triangulation: a strictly increasing chain of lattice
/// points, consecutive points differing by a 0/1 vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct TxSimplex(pub Vec<Vec<i64>>);

impl TxSimplex {
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }
}

impl fmt::Display for TxSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "<")?;
            }
            write!(f, "(")?;
            for (j, x) in v.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// The triangulation of a lattice cubical complex.
pub struct TriangulatedComplex {
    simplices: Vec<Vec<TxSimplex>>,
}

/// All strictly increasing chains among the corner vertices of a cell.
fn chains_in_cell(cell: &LatticeCube) -> Vec<TxSimplex> {
    let verts = cell.vertices();
    let leq = |a: &Vec<i64>, b: &Vec<i64>| a.iter().zip(b).all(|(x, y)| x <= y);
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..verts.len()).map(|i| vec![i]).collect();
    while let Some(chain) = stack.pop() {
        out.push(TxSimplex(chain.iter().map(|i| verts[*i].clone()).collect()));
        let last = *chain.last().expect("chains are nonempty");
        for next in 0..verts.len() {
            if next != last && leq(&verts[last], &verts[next]) {
                let mut c = chain.clone();
                c.push(next);
                stack.push(c);
            }
        }
    }
    out
}

/// The triangulation functor on lattice complexes.
pub fn triangulate(complex: &LatticeCubicalComplex) -> TriangulatedComplex {
    let mut seen: BTreeSet<TxSimplex> = BTreeSet::new();
    for d in 0..=complex.max_dim() {
        for cell in complex.cells(d) {
            for s in chains_in_cell(cell) {
                seen.insert(s);
            }
        }
    }
    let max_dim = seen.iter().map(TxSimplex::dim).max().unwrap_or(0);
    let mut simplices = vec![Vec::new(); max_dim + 1];
    for s in seen {
        let d = s.dim();
        simplices[d].push(s);
    }
    TriangulatedComplex { simplices }
}

impl CellComplex for TriangulatedComplex {
    type Cell = TxSimplex;

    fn max_dim(&self) -> usize {
        self.simplices.len().saturating_sub(1)
    }

    fn cells(&self, dim: usize) -> &[TxSimplex] {
        self.simplices.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    fn dim_of(&self, cell: &TxSimplex) -> usize {
        cell.dim()
    }

    fn boundary_cell(&self, cell: &TxSimplex) -> Vec<(i128, TxSimplex)> {
        if cell.0.len() == 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for i in 0..cell.0.len() {
            let mut v = cell.0.clone();
            v.remove(i);
            out.push((if i % 2 == 0 { 1 } else { -1 }, TxSimplex(v)));
        }
        out
    }

    fn pushforward_cell(
        &self,
        term: &CoopTerm,
        cell: &TxSimplex,
        ring: Ring,
    ) -> Result<FreeElement<TensorWord<TxSimplex>>, Error> {
        let m = cell.dim();
        let top: Element<SimplexWord> =
            Element::basis(ring, TensorWord::single(SimplexWord::top(m as u32)));
        let value = evaluate(term, &top)?;
        Ok(value.map_basis(|tw| {
            let cells: Vec<TxSimplex> = tw
                .0
                .iter()
                .map(|w| TxSimplex(w.0.iter().map(|a| cell.0[*a as usize].clone()).collect()))
                .collect();
            Some((1, TensorWord(cells)))
        }))
    }
}
