//! Bit vectors and Gaussian elimination over the field with two elements.

/// A vector over Z/2 packed into 64-bit blocks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct F2Vec {
    len: usize,
    bits: Vec<u64>,
}

impl F2Vec {
    pub fn zero(len: usize) -> Self {
        F2Vec { len, bits: vec![0; len.div_ceil(64)] }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        (self.bits[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        let mask = 1u64 << (i % 64);
        if value {
            self.bits[i / 64] |= mask;
        } else {
            self.bits[i / 64] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &F2Vec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|b| *b == 0)
    }

    /// Index of the first set bit.
    pub fn leading(&self) -> Option<usize> {
        for (block, b) in self.bits.iter().enumerate() {
            if *b != 0 {
                return Some(block * 64 + b.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Parity of the intersection.
    pub fn dot(&self, other: &F2Vec) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.bits.iter().zip(&other.bits).fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones()) & 1
            == 1
    }

    pub fn ones(&self) -> Vec<usize> {
        (0..self.len).filter(|i| self.get(*i)).collect()
    }

    pub fn from_ones(len: usize, ones: &[usize]) -> Self {
        let mut v = Self::zero(len);
        for &i in ones {
            v.set(i, true);
        }
        v
    }
}

/// An echelon basis over Z/2: rows with distinct leading bits, each row
/// optionally tagged. Reduction against the basis is deterministic, with
/// pivots in increasing index order.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(F2Vec, Option<usize>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the basis; returns the remainder and the tags of
    /// the tagged rows used.
    pub fn reduce(&self, mut v: F2Vec) -> (F2Vec, Vec<usize>) {
        let mut used = Vec::new();
        loop {
            let Some(lead) = v.leading() else { break };
            let Some((row, tag)) = self.rows.iter().find(|(r, _)| r.leading() == Some(lead))
            else {
                break;
            };
            v.xor_assign(row);
            if let Some(t) = tag {
                used.push(*t);
            }
        }
        used.sort_unstable();
        used.dedup();
        (v, used)
    }

    /// Insert after reduction; returns false when the vector was dependent.
    pub fn insert(&mut self, v: F2Vec, tag: Option<usize>) -> bool {
        let (rem, _) = self.reduce(v);
        if rem.is_zero() {
            return false;
        }
        self.rows.push((rem, tag));
        self.rows.sort_by_key(|(r, _)| r.leading());
        true
    }

    pub fn contains(&self, v: &F2Vec) -> bool {
        self.reduce(v.clone()).0.is_zero()
    }
}

/// Kernel of a matrix given by rows, acting on column vectors, as a
/// deterministic echelon basis of column-space vectors.
pub fn kernel_basis(rows: &[F2Vec], ncols: usize) -> Vec<F2Vec> {
    // column reduction: work with the transpose as column vectors
    let work: Vec<F2Vec> = rows.to_vec();
    let nrows = work.len();
    // companion records the column operations applied to the identity
    let mut companion: Vec<F2Vec> =
        (0..ncols).map(|j| F2Vec::from_ones(ncols, &[j])).collect();
    // represent columns for elimination
    let mut cols: Vec<F2Vec> = (0..ncols)
        .map(|j| {
            let ones: Vec<usize> = (0..nrows).filter(|i| work[*i].get(j)).collect();
            F2Vec::from_ones(nrows.max(1), &ones)
        })
        .collect();
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; nrows.max(1)];
    let mut kernel = Vec::new();
    for j in 0..ncols {
        loop {
            let Some(lead) = cols[j].leading() else { break };
            match pivot_of_row[lead] {
                None => {
                    pivot_of_row[lead] = Some(j);
                    break;
                }
                Some(p) => {
                    let (c, comp) = {
                        let c = cols[p].clone();
                        let comp = companion[p].clone();
                        (c, comp)
                    };
                    cols[j].xor_assign(&c);
                    companion[j].xor_assign(&comp);
                }
            }
        }
        if cols[j].is_zero() {
            kernel.push(companion[j].clone());
        }
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_and_insert() {
        let mut e = Echelon::new();
        assert!(e.insert(F2Vec::from_ones(4, &[0, 1]), None));
        assert!(e.insert(F2Vec::from_ones(4, &[1, 2]), None));
        assert!(!e.insert(F2Vec::from_ones(4, &[0, 2]), None));
        assert!(e.contains(&F2Vec::from_ones(4, &[0, 2])));
        assert!(!e.contains(&F2Vec::from_ones(4, &[3])));
    }

    #[test]
    fn kernel_of_a_small_matrix() {
        // rows of the matrix [1 1 0; 0 1 1] acting on F2^3: kernel = (1,1,1)
        let rows = vec![F2Vec::from_ones(3, &[0, 1]), F2Vec::from_ones(3, &[1, 2])];
        let k = kernel_basis(&rows, 3);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].ones(), vec![0, 1, 2]);
    }

    #[test]
    fn kernel_members_annihilate() {
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..100 {
            let r = (next() % 5 + 1) as usize;
            let c = (next() % 6 + 1) as usize;
            let rows: Vec<F2Vec> = (0..r)
                .map(|_| {
                    let ones: Vec<usize> = (0..c).filter(|_| next() % 2 == 0).collect();
                    F2Vec::from_ones(c, &ones)
                })
                .collect();
            let kernel = kernel_basis(&rows, c);
            // each kernel vector pairs to zero with every row
            for k in &kernel {
                for row in &rows {
                    assert!(!row.dot(k));
                }
            }
            // rank-nullity
            let mut e = Echelon::new();
            let mut col_rank = 0;
            for j in 0..c {
                let ones: Vec<usize> = (0..r).filter(|i| rows[*i].get(j)).collect();
                if e.insert(F2Vec::from_ones(r.max(1), &ones), None) {
                    col_rank += 1;
                }
            }
            assert_eq!(col_rank + kernel.len(), c);
        }
    }

    #[test]
    fn dot_parity() {
        let a = F2Vec::from_ones(5, &[0, 2, 4]);
        let b = F2Vec::from_ones(5, &[2, 4]);
        assert!(!a.dot(&b));
        let c = F2Vec::from_ones(5, &[2]);
        assert!(a.dot(&c));
    }
}
