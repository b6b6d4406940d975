//! Abstract simplicial complexes given by facet lists over integer vertices.

use std::collections::BTreeSet;
use std::fmt;

use serde::Deserialize;

use crate::chain::{FreeElement, TensorWord};
use crate::error::Error;
use crate::ring::Ring;
use crate::simplicial::SimplexWord;
use crate::terms::{evaluate, CoopTerm, Element};

use super::CellComplex;

/// A simplex of the complex: strictly increasing global vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct SimplexCell(pub Vec<u32>);

impl SimplexCell {
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }
}

impl fmt::Display for SimplexCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

#[derive(Deserialize)]
struct SimplicialInput {
    facets: Vec<Vec<u32>>,
}

/// All faces of the given facets.
pub struct SimplicialComplex {
    cells: Vec<Vec<SimplexCell>>,
}

impl SimplicialComplex {
    pub fn new(facets: Vec<Vec<u32>>) -> Result<Self, Error> {
        let mut seen: BTreeSet<SimplexCell> = BTreeSet::new();
        for facet in facets {
            let mut verts = facet.clone();
            verts.sort_unstable();
            let before = verts.len();
            verts.dedup();
            if verts.len() != before {
                return Err(Error::InvalidComplex(format!(
                    "facet {facet:?} repeats a vertex"
                )));
            }
            if verts.is_empty() {
                return Err(Error::InvalidComplex("empty facet".into()));
            }
            // all nonempty subsets
            let k = verts.len();
            for mask in 1u64..(1 << k) {
                let sub: Vec<u32> =
                    (0..k).filter(|i| (mask >> i) & 1 == 1).map(|i| verts[i]).collect();
                seen.insert(SimplexCell(sub));
            }
        }
        let max_dim = seen.iter().map(SimplexCell::dim).max().unwrap_or(0);
        let mut cells = vec![Vec::new(); max_dim + 1];
        for s in seen {
            let d = s.dim();
            cells[d].push(s);
        }
        Ok(SimplicialComplex { cells })
    }

    pub fn from_json(src: &str) -> Result<Self, Error> {
        let input: SimplicialInput = serde_json::from_str(src)
            .map_err(|e| Error::InvalidComplex(format!("simplicial complex: {e}")))?;
        Self::new(input.facets)
    }
}

impl CellComplex for SimplicialComplex {
    type Cell = SimplexCell;

    fn max_dim(&self) -> usize {
        self.cells.len().saturating_sub(1)
    }

    fn cells(&self, dim: usize) -> &[SimplexCell] {
        self.cells.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    fn dim_of(&self, cell: &SimplexCell) -> usize {
        cell.dim()
    }

    fn boundary_cell(&self, cell: &SimplexCell) -> Vec<(i128, SimplexCell)> {
        if cell.0.len() == 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for i in 0..cell.0.len() {
            let mut v = cell.0.clone();
            v.remove(i);
            out.push((if i % 2 == 0 { 1 } else { -1 }, SimplexCell(v)));
        }
        out
    }

    fn pushforward_cell(
        &self,
        term: &CoopTerm,
        cell: &SimplexCell,
        ring: Ring,
    ) -> Result<FreeElement<TensorWord<SimplexCell>>, Error> {
        let m = cell.dim();
        let top: Element<SimplexWord> =
            Element::basis(ring, TensorWord::single(SimplexWord::top(m as u32)));
        let value = evaluate(term, &top)?;
        Ok(value.map_basis(|tw| {
            let cells: Vec<SimplexCell> = tw
                .0
                .iter()
                .map(|w| SimplexCell(w.0.iter().map(|a| cell.0[*a as usize]).collect()))
                .collect();
            Some((1, TensorWord(cells)))
        }))
    }
}
