//! Cubical sets presented by explicit face tables.
//!
//! A presentation lists the nondegenerate cells with their dimensions and,
//! for each `n`-cell, the `2n` faces as possibly degenerate cells: a target
//! cell together with a degeneracy word in normal form. Faces of degenerate
//! elements are computed through the cubical identities, so validation and
//! transport never need the full cubical set.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Deserialize;

use crate::chain::{FreeElement, TensorWord};
use crate::cubical::{CubeSymbol, CubeWord};
use crate::error::Error;
use crate::ring::Ring;
use crate::terms::{evaluate, CoopTerm, Element};

use super::CellComplex;

/// A possibly degenerate element: `degens` lists the degeneracy indices in
/// application order, outermost first, kept in the strictly decreasing
/// normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegenElem {
    pub degens: Vec<usize>,
    pub cell: usize,
}

impl DegenElem {
    pub fn nondegenerate(cell: usize) -> Self {
        DegenElem { degens: Vec::new(), cell }
    }

    pub fn is_degenerate(&self) -> bool {
        !self.degens.is_empty()
    }
}

/// Rewrite a degeneracy word into the strictly decreasing normal form using
/// `s_a s_b = s_(b+1) s_a` for `a <= b` (outer index first).
fn normalize_degens(mut v: Vec<usize>) -> Vec<usize> {
    loop {
        let mut changed = false;
        for t in 0..v.len().saturating_sub(1) {
            if v[t] <= v[t + 1] {
                let (a, b) = (v[t], v[t + 1]);
                v[t] = b + 1;
                v[t + 1] = a;
                changed = true;
            }
        }
        if !changed {
            return v;
        }
    }
}

#[derive(Deserialize)]
struct PresentedInput {
    cells: Vec<CellInput>,
    #[serde(default)]
    faces: HashMap<String, Vec<FaceInput>>,
}

#[derive(Deserialize)]
struct CellInput {
    id: String,
    dim: usize,
}

#[derive(Deserialize)]
struct FaceInput {
    i: usize,
    e: u8,
    target: String,
    #[serde(default)]
    degens: Vec<usize>,
}

/// A finite presented cubical set.
pub struct PresentedCubicalSet {
    names: Vec<String>,
    dims: Vec<usize>,
    /// `(cell, i, e) -> face`, `i` 1-indexed.
    faces: BTreeMap<(usize, usize, u8), DegenElem>,
    /// Cells per dimension, sorted by name.
    by_dim: Vec<Vec<PresentedCell>>,
}

impl PresentedCubicalSet {
    pub fn from_json(src: &str) -> Result<Self, Error> {
        let input: PresentedInput = serde_json::from_str(src)
            .map_err(|e| Error::InvalidComplex(format!("presented cubical set: {e}")))?;
        let mut names = Vec::new();
        let mut dims = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        for cell in &input.cells {
            if index.contains_key(&cell.id) {
                return Err(Error::InvalidComplex(format!("duplicate cell id `{}`", cell.id)));
            }
            index.insert(cell.id.clone(), names.len());
            names.push(cell.id.clone());
            dims.push(cell.dim);
        }
        let mut faces = BTreeMap::new();
        for (cell_id, entries) in &input.faces {
            let cell = *index
                .get(cell_id)
                .ok_or_else(|| Error::InvalidComplex(format!("unknown cell `{cell_id}`")))?;
            for entry in entries {
                let target = *index.get(&entry.target).ok_or_else(|| {
                    Error::InvalidComplex(format!("unknown face target `{}`", entry.target))
                })?;
                if entry.e > 1 {
                    return Err(Error::InvalidComplex(format!(
                        "face side {} of `{cell_id}` is not 0 or 1",
                        entry.e
                    )));
                }
                let elem = DegenElem {
                    degens: normalize_degens(entry.degens.clone()),
                    cell: target,
                };
                if faces.insert((cell, entry.i, entry.e), elem).is_some() {
                    return Err(Error::InvalidComplex(format!(
                        "duplicate face ({}, {}) of `{cell_id}`",
                        entry.i, entry.e
                    )));
                }
            }
        }
        let set = PresentedCubicalSet::assemble(names, dims, faces)?;
        set.validate()?;
        Ok(set)
    }

    /// Build directly; used by tests and by the JSON loader.
    pub fn assemble(
        names: Vec<String>,
        dims: Vec<usize>,
        faces: BTreeMap<(usize, usize, u8), DegenElem>,
    ) -> Result<Self, Error> {
        let max_dim = dims.iter().copied().max().unwrap_or(0);
        let mut by_dim: Vec<Vec<PresentedCell>> = vec![Vec::new(); max_dim + 1];
        let mut order: Vec<usize> = (0..names.len()).collect();
        order.sort_by(|a, b| names[*a].cmp(&names[*b]));
        for i in order {
            by_dim[dims[i]].push(PresentedCell { index: i, name: names[i].clone() });
        }
        Ok(PresentedCubicalSet { names, dims, faces, by_dim })
    }

    pub fn name(&self, cell: usize) -> &str {
        &self.names[cell]
    }

    pub fn cell_named(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn dim_of_elem(&self, elem: &DegenElem) -> usize {
        self.dims[elem.cell] + elem.degens.len()
    }

    /// Face of a possibly degenerate element, via the cubical identities
    /// `d_i s_j = s_(j-1) d_i` (i < j), `d_j s_j = id`, `d_i s_j = s_j d_(i-1)`
    /// (i > j).
    pub fn face_elem(&self, elem: &DegenElem, mut i: usize, e: u8) -> Result<DegenElem, Error> {
        let n = self.dim_of_elem(elem);
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, limit: n });
        }
        let mut kept: Vec<usize> = Vec::new();
        for (pos, &j) in elem.degens.iter().enumerate() {
            if i < j {
                kept.push(j - 1);
            } else if i == j {
                kept.extend_from_slice(&elem.degens[pos + 1..]);
                return Ok(DegenElem { degens: normalize_degens(kept), cell: elem.cell });
            } else {
                kept.push(j);
                i -= 1;
            }
        }
        let face = self
            .faces
            .get(&(elem.cell, i, e))
            .ok_or_else(|| {
                Error::InvalidComplex(format!(
                    "missing face ({i}, {e}) of cell `{}`",
                    self.names[elem.cell]
                ))
            })?
            .clone();
        kept.extend(face.degens.iter());
        Ok(DegenElem { degens: normalize_degens(kept), cell: face.cell })
    }

    /// Check dimensions, completeness of the face tables and the cubical
    /// face identities on every cell.
    pub fn validate(&self) -> Result<(), Error> {
        for cell in 0..self.names.len() {
            let n = self.dims[cell];
            for i in 1..=n {
                for e in [0u8, 1] {
                    let face = self.faces.get(&(cell, i, e)).ok_or_else(|| {
                        Error::InvalidComplex(format!(
                            "cell `{}` of dimension {n} is missing face ({i}, {e})",
                            self.names[cell]
                        ))
                    })?;
                    let fd = self.dims[face.cell] + face.degens.len();
                    if fd + 1 != n {
                        return Err(Error::InvalidComplex(format!(
                            "face ({i}, {e}) of `{}` has dimension {fd}, expected {}",
                            self.names[cell],
                            n - 1
                        )));
                    }
                    // degeneracy indices must be applicable
                    let mut d = self.dims[face.cell];
                    for &j in face.degens.iter().rev() {
                        if j == 0 || j > d + 1 {
                            return Err(Error::InvalidComplex(format!(
                                "degeneracy index {j} out of range on face ({i}, {e}) of `{}`",
                                self.names[cell]
                            )));
                        }
                        d += 1;
                    }
                }
            }
            // face identities d_i^e d_j^w = d_(j-1)^w d_i^e for i < j
            let elem = DegenElem::nondegenerate(cell);
            for j in 2..=n {
                for i in 1..j {
                    for e in [0u8, 1] {
                        for w in [0u8, 1] {
                            let lhs = self.face_elem(&self.face_elem(&elem, j, w)?, i, e)?;
                            let rhs = self.face_elem(&self.face_elem(&elem, i, e)?, j - 1, w)?;
                            if lhs != rhs {
                                return Err(Error::InvalidComplex(format!(
                                    "cubical identity fails on `{}`: d_{i}^{e} d_{j}^{w} != d_{}^{w} d_{i}^{e}",
                                    self.names[cell],
                                    j - 1
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Carry a word of the cell's representable along its faces: constant
    /// slots are faces, intervals are kept; a degenerate result is zero in
    /// the normalized chains.
    pub fn transport(&self, cell: usize, word: &CubeWord) -> Result<Option<usize>, Error> {
        assert_eq!(word.ambient(), self.dims[cell], "word length must match cell dimension");
        let mut elem = DegenElem::nondegenerate(cell);
        for (pos, symbol) in word.0.iter().enumerate().rev() {
            match symbol {
                CubeSymbol::I => {}
                CubeSymbol::E0 => elem = self.face_elem(&elem, pos + 1, 0)?,
                CubeSymbol::E1 => elem = self.face_elem(&elem, pos + 1, 1)?,
            }
        }
        Ok(if elem.is_degenerate() { None } else { Some(elem.cell) })
    }
}

/// A cell of a presented cubical set, ordered and displayed by name.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PresentedCell {
    pub index: usize,
    name: String,
}

impl PartialOrd for PresentedCell {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PresentedCell {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.name.cmp(&other.name).then(self.index.cmp(&other.index))
    }
}

impl fmt::Display for PresentedCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

impl PresentedCubicalSet {
    fn wrap(&self, index: usize) -> PresentedCell {
        PresentedCell { index, name: self.names[index].clone() }
    }
}

impl CellComplex for PresentedCubicalSet {
    type Cell = PresentedCell;

    fn max_dim(&self) -> usize {
        self.by_dim.len().saturating_sub(1)
    }

    fn cells(&self, dim: usize) -> &[PresentedCell] {
        self.by_dim.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    fn dim_of(&self, cell: &PresentedCell) -> usize {
        self.dims[cell.index]
    }

    fn boundary_cell(&self, cell: &PresentedCell) -> Vec<(i128, PresentedCell)> {
        let n = self.dims[cell.index];
        let mut out = Vec::new();
        for i in 1..=n {
            let sign = if (i - 1) % 2 == 0 { 1 } else { -1 };
            for (e, s) in [(1u8, sign), (0u8, -sign)] {
                let face = &self.faces[&(cell.index, i, e)];
                if !face.is_degenerate() {
                    out.push((s, self.wrap(face.cell)));
                }
            }
        }
        out
    }

    fn pushforward_cell(
        &self,
        term: &CoopTerm,
        cell: &PresentedCell,
        ring: Ring,
    ) -> Result<FreeElement<TensorWord<PresentedCell>>, Error> {
        let n = self.dims[cell.index];
        let top: Element<CubeWord> = Element::basis(ring, TensorWord::single(CubeWord::top(n)));
        let value = evaluate(term, &top)?;
        let mut out = FreeElement::zero(ring);
        'terms: for (tw, c) in value.iter() {
            let mut cells = Vec::with_capacity(tw.0.len());
            for w in &tw.0 {
                match self.transport(cell.index, w)? {
                    None => continue 'terms,
                    Some(target) => cells.push(self.wrap(target)),
                }
            }
            out.add_term(c, TensorWord(cells));
        }
        Ok(out)
    }
}
