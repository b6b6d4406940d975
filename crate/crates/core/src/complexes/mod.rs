//! Finite complexes and the chain-level structure they carry.
//!
//! Three input models are supported: lattice cubical complexes (products of
//! elementary intervals in `Z^d`), presented cubical sets (cells with
//! explicit face tables) and simplicial complexes (facet lists). Each model
//! exposes its chain complex and the per-cell pushforward of cooperation
//! terms: a term of arity `(1, r)` is evaluated on the top word of a cell's
//! representable and the output words are carried along the cell's faces.

mod lattice;
mod presented;
mod simplicial_complex;
mod triangulated;

pub use lattice::{LatticeCube, LatticeCubicalComplex};
pub use presented::{DegenElem, PresentedCubicalSet};
pub use simplicial_complex::{SimplexCell, SimplicialComplex};
pub use triangulated::{triangulate, TriangulatedComplex, TxSimplex};

use crate::chain::{FreeElement, TensorWord};
use crate::error::Error;
use crate::ring::Ring;
use crate::terms::CoopTerm;

/// A finite complex with an ordered cell basis in each degree.
pub trait CellComplex {
    type Cell: Ord + Clone + std::fmt::Display + std::fmt::Debug;

    fn max_dim(&self) -> usize;

    /// Cells of the given dimension, sorted; empty above `max_dim`.
    fn cells(&self, dim: usize) -> &[Self::Cell];

    fn boundary_cell(&self, cell: &Self::Cell) -> Vec<(i128, Self::Cell)>;

    /// Per-cell pushforward of an arity `(1, r)` cooperation.
    fn pushforward_cell(
        &self,
        term: &CoopTerm,
        cell: &Self::Cell,
        ring: Ring,
    ) -> Result<FreeElement<TensorWord<Self::Cell>>, Error>;

    fn dim_of(&self, cell: &Self::Cell) -> usize;

    /// Linear extension of the boundary.
    fn boundary(&self, chain: &FreeElement<Self::Cell>) -> FreeElement<Self::Cell> {
        chain.bind(|c| FreeElement::from_terms(chain.ring(), self.boundary_cell(c)))
    }

    /// Linear extension of the pushforward; checks the term has one input.
    fn pushforward(
        &self,
        term: &CoopTerm,
        chain: &FreeElement<Self::Cell>,
    ) -> Result<FreeElement<TensorWord<Self::Cell>>, Error> {
        let sig = term.signature()?;
        if sig.inputs != 1 {
            return Err(Error::ArityMismatch {
                context: "cooperation pushforward",
                expected: 1,
                found: sig.inputs,
            });
        }
        let mut out = FreeElement::zero(chain.ring());
        for (cell, coeff) in chain.iter() {
            let v = self.pushforward_cell(term, cell, chain.ring())?;
            out = out.try_add(&v.scale(coeff))?;
        }
        Ok(out)
    }

    fn euler_characteristic(&self) -> i64 {
        let mut chi = 0i64;
        for d in 0..=self.max_dim() {
            let n = self.cells(d).len() as i64;
            chi += if d % 2 == 0 { n } else { -n };
        }
        chi
    }
}

/// Any of the three supported input models, as loaded from JSON.
pub enum AnyComplex {
    Lattice(LatticeCubicalComplex),
    Presented(PresentedCubicalSet),
    Simplicial(SimplicialComplex),
}

impl AnyComplex {
    /// Detect and load a complex from its JSON description.
    pub fn from_json(src: &str) -> Result<AnyComplex, Error> {
        let value: serde_json::Value = serde_json::from_str(src)
            .map_err(|e| Error::InvalidComplex(format!("malformed JSON: {e}")))?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::InvalidComplex("expected a JSON object".into()))?;
        if obj.contains_key("cubes") {
            LatticeCubicalComplex::from_json(src).map(AnyComplex::Lattice)
        } else if obj.contains_key("cells") {
            PresentedCubicalSet::from_json(src).map(AnyComplex::Presented)
        } else if obj.contains_key("facets") {
            SimplicialComplex::from_json(src).map(AnyComplex::Simplicial)
        } else {
            Err(Error::InvalidComplex(
                "expected one of the keys `cubes`, `cells`, `facets`".into(),
            ))
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            AnyComplex::Lattice(_) => "lattice cubical complex",
            AnyComplex::Presented(_) => "presented cubical set",
            AnyComplex::Simplicial(_) => "simplicial complex",
        }
    }

    pub fn max_dim(&self) -> usize {
        match self {
            AnyComplex::Lattice(x) => x.max_dim(),
            AnyComplex::Presented(x) => x.max_dim(),
            AnyComplex::Simplicial(x) => x.max_dim(),
        }
    }
}
