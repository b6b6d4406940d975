//! The subdivision and projection maps between cubes and simplices.
//!
//! The subdivision map sends a cube word to the signed sum of the staircase
//! simplices of its interval axes; the projection map sends a cube word to a
//! single simplex read off from its interval positions, or to zero. Both are
//! chain maps and coproduct maps, which the test suites verify exhaustively.

use crate::chain::{FreeElement, Graded};
use crate::complexes::{LatticeCube, TxSimplex};
use crate::cubical::{CubeSymbol, CubeWord};
use crate::ring::Ring;
use crate::simplicial::{ProductSimplex, SimplexWord};

fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..m).collect();
    fn go(items: &mut Vec<usize>, l: usize, out: &mut Vec<Vec<usize>>) {
        if l == items.len() {
            out.push(items.clone());
            return;
        }
        for i in l..items.len() {
            items.swap(l, i);
            go(items, l + 1, out);
            items.swap(l, i);
        }
    }
    go(&mut items, 0, &mut out);
    out
}

fn perm_sign(p: &[usize]) -> i128 {
    let mut sign = 1i128;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Subdivision of a cube word into simplices of the simplicial cube: one
/// staircase per order of the interval axes, signed by the permutation; the
/// constant axes contribute constant columns.
pub fn ez_word(w: &CubeWord, ring: Ring) -> FreeElement<ProductSimplex> {
    let n = w.ambient();
    let intervals = w.interval_positions();
    let m = intervals.len();
    let base: Vec<u8> = w
        .0
        .iter()
        .map(|s| match s {
            CubeSymbol::E1 => 1u8,
            _ => 0u8,
        })
        .collect();
    let mut out = FreeElement::zero(ring);
    for tau in permutations(m) {
        let mut columns = Vec::with_capacity(m + 1);
        let mut current = base.clone();
        columns.push(current.clone());
        for step in 0..m {
            // flip the interval axis chosen at this step
            current[intervals[tau[step]] - 1] = 1;
            columns.push(current.clone());
        }
        let simplex = ProductSimplex::from_columns(columns)
            .expect("staircase columns are monotone 0/1 vectors");
        out.add_term(perm_sign(&tau), simplex);
    }
    debug_assert!(n >= m);
    out
}

/// Subdivision of a lattice cell into the staircase simplices of the
/// triangulated complex.
pub fn ez_cell(cell: &LatticeCube, ring: Ring) -> FreeElement<TxSimplex> {
    let intervals = cell.intervals();
    let free: Vec<usize> = intervals
        .iter()
        .enumerate()
        .filter(|(_, (lo, hi))| hi > lo)
        .map(|(a, _)| a)
        .collect();
    let m = free.len();
    let mut out = FreeElement::zero(ring);
    for tau in permutations(m) {
        let mut current = cell.min_vertex();
        let mut chain = Vec::with_capacity(m + 1);
        chain.push(current.clone());
        for step in 0..m {
            let axis = free[tau[step]];
            current[axis] = intervals[axis].1;
            chain.push(current.clone());
        }
        out.add_term(perm_sign(&tau), TxSimplex(chain));
    }
    out
}

/// Pushforward of a cooperation onto the chains of a simplicial cube: the
/// term is evaluated on the representable simplex of matching dimension and
/// the output words are carried along the simplex's vertex columns, with
/// degenerate images dropped.
pub fn pushforward_product(
    term: &crate::terms::CoopTerm,
    p: &ProductSimplex,
    ring: Ring,
) -> Result<FreeElement<crate::chain::TensorWord<ProductSimplex>>, crate::error::Error> {
    let m = p.degree();
    let top = crate::terms::Element::basis(
        ring,
        crate::chain::TensorWord::single(SimplexWord::top(m as u32)),
    );
    let value = crate::terms::evaluate(term, &top)?;
    let mut out = FreeElement::zero(ring);
    'terms: for (tw, c) in value.iter() {
        let mut parts = Vec::with_capacity(tw.0.len());
        for w in &tw.0 {
            let idx: Vec<usize> = w.0.iter().map(|a| *a as usize).collect();
            match p.select_columns(&idx) {
                None => continue 'terms,
                Some(q) => parts.push(q),
            }
        }
        out.add_term(c, crate::chain::TensorWord(parts));
    }
    Ok(out)
}

/// Projection of a cube word onto the simplex: zero when some `[0]` factor
/// precedes the last interval, otherwise the simplex on the shifted interval
/// positions capped by the first `[0]` position.
pub fn cs_word(w: &CubeWord, ring: Ring) -> FreeElement<SimplexWord> {
    let n = w.ambient();
    let intervals = w.interval_positions();
    let first_zero = w.0.iter().position(|s| *s == CubeSymbol::E0).map(|i| i + 1);
    if let (Some(&last), Some(p)) = (intervals.last(), first_zero) {
        if p < last {
            return FreeElement::zero(ring);
        }
    }
    let p = first_zero.unwrap_or(n + 1);
    let mut verts: Vec<u32> = intervals.iter().map(|q| (*q - 1) as u32).collect();
    verts.push((p - 1) as u32);
    FreeElement::basis(ring, SimplexWord::new(verts).expect("vertices strictly increase"))
}
