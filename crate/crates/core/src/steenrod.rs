//! Mod-2 cohomology of finite complexes, cup products, Steenrod squares via
//! cup-i pushforwards, and the integral Bockstein used as an independent
//! cross-check of the first square.

use serde::Serialize;

use crate::complexes::CellComplex;
use crate::error::Error;
use crate::f2::{kernel_basis, Echelon, F2Vec};
use crate::homology::{homology, HomologyGroup};
use crate::ring::Ring;
use crate::terms::cup_i_closed;
use crate::terms::CoopTerm;

struct DegreeData {
    cells: usize,
    /// Coboundary span (untagged) extended by the class representatives
    /// (tagged with their index).
    reducer: Echelon,
    reps: Vec<F2Vec>,
}

/// The mod-2 cohomology of a complex, with a fixed echelon basis in every
/// degree. Representatives are canonical: each is reduced against the
/// coboundary space and all earlier representatives, with pivots in cell
/// order.
pub struct Mod2Cohomology<'a, X: CellComplex> {
    complex: &'a X,
    degrees: Vec<DegreeData>,
}

impl<'a, X: CellComplex> Mod2Cohomology<'a, X> {
    pub fn new(complex: &'a X) -> Self {
        let top = complex.max_dim();
        let mut degrees = Vec::with_capacity(top + 1);
        for n in 0..=top {
            let cells = complex.cells(n).len();
            // coboundary span: one vector per (n-1)-cell, recording which
            // n-cells it bounds against
            let mut reducer = Echelon::new();
            if n > 0 {
                for low in complex.cells(n - 1) {
                    let mut v = F2Vec::zero(cells);
                    for (j, cell) in complex.cells(n).iter().enumerate() {
                        let parity = complex
                            .boundary_cell(cell)
                            .into_iter()
                            .filter(|(c, f)| c % 2 != 0 && f == low)
                            .count();
                        if parity % 2 == 1 {
                            v.set(j, true);
                        }
                    }
                    reducer.insert(v, None);
                }
            }
            // cocycles: kernel of the coboundary into degree n+1
            let dual_rows: Vec<F2Vec> = complex
                .cells(n + 1)
                .iter()
                .map(|c| {
                    let mut v = F2Vec::zero(cells);
                    for (coeff, face) in complex.boundary_cell(c) {
                        if coeff % 2 != 0 {
                            let j = complex
                                .cells(n)
                                .binary_search(&face)
                                .expect("face in basis");
                            v.set(j, !v.get(j));
                        }
                    }
                    v
                })
                .collect();
            let mut reps = Vec::new();
            for z in kernel_basis(&dual_rows, cells) {
                let (rem, _) = reducer.reduce(z);
                if !rem.is_zero() {
                    let tag = reps.len();
                    reps.push(rem.clone());
                    reducer.insert(rem, Some(tag));
                }
            }
            degrees.push(DegreeData { cells, reducer, reps });
        }
        Mod2Cohomology { complex, degrees }
    }

    pub fn complex(&self) -> &X {
        self.complex
    }

    pub fn max_dim(&self) -> usize {
        self.degrees.len() - 1
    }

    /// Dimension of the cohomology in the given degree.
    pub fn rank(&self, degree: usize) -> usize {
        self.degrees.get(degree).map(|d| d.reps.len()).unwrap_or(0)
    }

    pub fn representative(&self, degree: usize, index: usize) -> &F2Vec {
        &self.degrees[degree].reps[index]
    }

    /// The zero cochain in the given degree.
    pub fn zero_cochain(&self, degree: usize) -> F2Vec {
        let cells = self.degrees.get(degree).map(|d| d.cells).unwrap_or(0);
        F2Vec::zero(cells)
    }

    pub fn is_cocycle(&self, degree: usize, v: &F2Vec) -> bool {
        for c in self.complex.cells(degree + 1) {
            let mut parity = false;
            for (coeff, face) in self.complex.boundary_cell(c) {
                if coeff % 2 != 0 {
                    let j = self.complex.cells(degree).binary_search(&face).expect("face");
                    parity ^= v.get(j);
                }
            }
            if parity {
                return false;
            }
        }
        true
    }

    /// Coordinates of a cocycle in the chosen basis.
    pub fn express(&self, degree: usize, v: &F2Vec) -> Result<Vec<usize>, Error> {
        if degree >= self.degrees.len() {
            if v.is_zero() {
                return Ok(Vec::new());
            }
            return Err(Error::NotACocycle);
        }
        if !self.is_cocycle(degree, v) {
            return Err(Error::NotACocycle);
        }
        let (rem, used) = self.degrees[degree].reducer.reduce(v.clone());
        if !rem.is_zero() {
            return Err(Error::NotACocycle);
        }
        Ok(used)
    }

    /// Evaluate `(alpha x beta)` against the pushforward of a binary
    /// cooperation on every cell of the given degree.
    fn pair_against(
        &self,
        term: &CoopTerm,
        out_degree: usize,
        a_deg: usize,
        alpha: &F2Vec,
        b_deg: usize,
        beta: &F2Vec,
    ) -> Result<F2Vec, Error> {
        let mut out = self.zero_cochain(out_degree);
        for (j, cell) in self.complex.cells(out_degree).iter().enumerate() {
            let push = self.complex.pushforward_cell(term, cell, Ring::Mod(2))?;
            let mut acc = false;
            for (tw, c) in push.iter() {
                debug_assert!(c == 1);
                let (x, y) = (&tw.0[0], &tw.0[1]);
                if self.complex.dim_of(x) != a_deg || self.complex.dim_of(y) != b_deg {
                    continue;
                }
                let xi = self.complex.cells(a_deg).binary_search(x).expect("cell");
                let yi = self.complex.cells(b_deg).binary_search(y).expect("cell");
                acc ^= alpha.get(xi) && beta.get(yi);
            }
            if acc {
                out.set(j, true);
            }
        }
        Ok(out)
    }

    /// Cup product of cochains, via the coproduct pushforward.
    pub fn cup(
        &self,
        a_deg: usize,
        alpha: &F2Vec,
        b_deg: usize,
        beta: &F2Vec,
    ) -> Result<F2Vec, Error> {
        self.pair_against(&CoopTerm::Cop, a_deg + b_deg, a_deg, alpha, b_deg, beta)
    }

    /// Steenrod square of a degree-`n` cocycle: pair `(alpha x alpha)`
    /// against the cup-(n-k) coproduct on `(n+k)`-cells. Vanishes for
    /// `k > n`.
    pub fn sq(&self, k: usize, degree: usize, alpha: &F2Vec) -> Result<F2Vec, Error> {
        if !self.is_cocycle(degree, alpha) {
            return Err(Error::NotACocycle);
        }
        if k > degree {
            return Ok(self.zero_cochain(degree + k));
        }
        let term = cup_i_closed(degree - k);
        self.pair_against(&term, degree + k, degree, alpha, degree, alpha)
    }

    /// The Bockstein of a mod-2 cocycle: lift to integers, take the integral
    /// coboundary, halve, reduce mod 2.
    pub fn bockstein(&self, degree: usize, alpha: &F2Vec) -> Result<F2Vec, Error> {
        let mut out = self.zero_cochain(degree + 1);
        for (j, cell) in self.complex.cells(degree + 1).iter().enumerate() {
            let mut total = 0i128;
            for (coeff, face) in self.complex.boundary_cell(cell) {
                let i = self.complex.cells(degree).binary_search(&face).expect("face");
                if alpha.get(i) {
                    total += coeff;
                }
            }
            if total.rem_euclid(2) != 0 {
                return Err(Error::NotACocycle);
            }
            if (total / 2).rem_euclid(2) == 1 {
                out.set(j, true);
            }
        }
        Ok(out)
    }

    /// Matrix of `Sq^k : H^degree -> H^(degree+k)`: one row per basis class
    /// of the source, with its coordinates in the target basis.
    pub fn sq_matrix(&self, k: usize, degree: usize) -> Result<Vec<Vec<u8>>, Error> {
        let target = self.rank(degree + k);
        let mut rows = Vec::with_capacity(self.rank(degree));
        for index in 0..self.rank(degree) {
            let image = self.sq(k, degree, &self.degrees[degree].reps[index].clone())?;
            let coords = self.express(degree + k, &image)?;
            let mut row = vec![0u8; target];
            for c in coords {
                row[c] = 1;
            }
            rows.push(row);
        }
        Ok(rows)
    }
}

/// Entry of the per-degree report: integral homology plus the matrix of the
/// requested square out of this degree.
#[derive(Serialize)]
pub struct SqReport {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<i128>,
    pub sq: SqEntry,
}

#[derive(Serialize)]
pub struct SqEntry {
    pub k: usize,
    /// `matrix[r]` holds the coordinates of the square of the `r`-th basis
    /// class of `H^degree` in the basis of `H^(degree+k)`, mod 2.
    pub matrix: Vec<Vec<u8>>,
}

/// Integral homology together with the `Sq^k` matrices in every degree.
pub fn steenrod_report<X: CellComplex>(complex: &X, k: usize) -> Result<Vec<SqReport>, Error> {
    let integral: Vec<HomologyGroup> = homology(complex, Ring::Int);
    let cohomology = Mod2Cohomology::new(complex);
    let mut out = Vec::new();
    for (degree, group) in integral.iter().enumerate() {
        out.push(SqReport {
            degree,
            betti: group.betti,
            torsion: group.torsion.clone(),
            sq: SqEntry { k, matrix: cohomology.sq_matrix(k, degree)? },
        });
    }
    Ok(out)
}
