//! Dense integer matrices and the Smith normal form.

/// A dense matrix of exact integers with optional basis labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
            row_labels: Vec::new(),
            col_labels: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i128>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
            row_labels: Vec::new(),
            col_labels: Vec::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = ExactMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a.checked_mul(other[(k, j)]).expect("overflow in matrix product");
                    out[(i, j)] = out[(i, j)].checked_add(add).expect("overflow in matrix product");
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row_a += q * row_b`
    fn add_row(&mut self, a: usize, b: usize, q: i128) {
        for j in 0..self.cols {
            let add = q.checked_mul(self[(b, j)]).expect("overflow in row operation");
            self[(a, j)] = self[(a, j)].checked_add(add).expect("overflow in row operation");
        }
    }

    fn add_col(&mut self, a: usize, b: usize, q: i128) {
        for i in 0..self.rows {
            let add = q.checked_mul(self[(i, b)]).expect("overflow in column operation");
            self[(i, a)] = self[(i, a)].checked_add(add).expect("overflow in column operation");
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            self[(a, j)] = -self[(a, j)];
        }
    }

    /// Rank over the field `Z/p`.
    pub fn rank_mod(&self, p: u32) -> usize {
        let p = p as i128;
        let mut m: Vec<Vec<i128>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].rem_euclid(p)).collect())
            .collect();
        let mut rank = 0usize;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|i| m[*i][col] % p != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = mod_inverse(m[rank][col], p);
            for x in m[rank].iter_mut() {
                *x = (*x * inv).rem_euclid(p);
            }
            for i in 0..self.rows {
                if i != rank && m[i][col] != 0 {
                    let f = m[i][col];
                    for j in 0..self.cols {
                        m[i][j] = (m[i][j] - f * m[rank][j]).rem_euclid(p);
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

fn mod_inverse(a: i128, p: i128) -> i128 {
    // p is prime and a nonzero mod p
    let mut result = 1i128;
    let mut base = a.rem_euclid(p);
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = i128;
    fn index(&self, (i, j): (usize, usize)) -> &i128 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i128 {
        &mut self.data[i * self.cols + j]
    }
}

/// `u * m * v = d` with `d` diagonal, its entries nonnegative and each
/// dividing the next; `u` and `v` are products of elementary operations.
pub struct SmithDecomposition {
    pub u: ExactMatrix,
    pub d: ExactMatrix,
    pub v: ExactMatrix,
}

impl SmithDecomposition {
    /// The nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<i128> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)]).filter(|x| *x != 0).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Smith normal form by pivoting on entries of minimal absolute value.
pub fn smith_normal_form(m: &ExactMatrix) -> SmithDecomposition {
    let mut d = m.clone();
    let mut u = ExactMatrix::identity(m.rows());
    let mut v = ExactMatrix::identity(m.cols());
    let limit = m.rows().min(m.cols());
    let mut k = 0usize;
    while k < limit {
        // locate a pivot of minimal absolute value in the trailing block
        let mut pivot: Option<(usize, usize, i128)> = None;
        for i in k..m.rows() {
            for j in k..m.cols() {
                let x = d[(i, j)];
                if x != 0 && pivot.map(|(_, _, p)| x.abs() < p.abs()).unwrap_or(true) {
                    pivot = Some((i, j, x));
                }
            }
        }
        let Some((pi, pj, _)) = pivot else {
            break;
        };
        d.swap_rows(k, pi);
        u.swap_rows(k, pi);
        d.swap_cols(k, pj);
        v.swap_cols(k, pj);
        // clear the pivot row and column; restart when a remainder survives
        let mut dirty = true;
        while dirty {
            dirty = false;
            for i in k + 1..m.rows() {
                if d[(i, k)] != 0 {
                    let q = d[(i, k)].div_euclid(d[(k, k)]);
                    d.add_row(i, k, -q);
                    u.add_row(i, k, -q);
                    if d[(i, k)] != 0 {
                        // remainder became the smaller pivot
                        d.swap_rows(k, i);
                        u.swap_rows(k, i);
                        dirty = true;
                    }
                }
            }
            for j in k + 1..m.cols() {
                if d[(k, j)] != 0 {
                    let q = d[(k, j)].div_euclid(d[(k, k)]);
                    d.add_col(j, k, -q);
                    v.add_col(j, k, -q);
                    if d[(k, j)] != 0 {
                        d.swap_cols(k, j);
                        v.swap_cols(k, j);
                        dirty = true;
                    }
                }
            }
            if !dirty {
                // enforce divisibility of the trailing block by the pivot
                'search: for i in k + 1..m.rows() {
                    for j in k + 1..m.cols() {
                        if d[(i, j)] % d[(k, k)] != 0 {
                            d.add_row(k, i, 1);
                            u.add_row(k, i, 1);
                            dirty = true;
                            break 'search;
                        }
                    }
                }
            }
        }
        if d[(k, k)] < 0 {
            d.negate_row(k);
            u.negate_row(k);
        }
        k += 1;
    }
    SmithDecomposition { u, d, v }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(entries: &[i128]) -> ExactMatrix {
        let n = entries.len();
        let mut m = ExactMatrix::zero(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = *e;
        }
        m
    }

    fn check(m: &ExactMatrix) -> SmithDecomposition {
        let snf = smith_normal_form(m);
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.d, "u m v != d");
        let factors = snf.invariant_factors();
        for w in factors.windows(2) {
            assert_eq!(w[1] % w[0], 0, "divisibility chain broken: {factors:?}");
        }
        for f in &factors {
            assert!(*f > 0);
        }
        // off-diagonal zero
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    assert_eq!(snf.d[(i, j)], 0);
                }
            }
        }
        snf
    }

    #[test]
    fn two_three_becomes_one_six() {
        let snf = check(&diag(&[2, 3]));
        assert_eq!(snf.invariant_factors(), vec![1, 6]);
    }

    #[test]
    fn zero_matrix() {
        let snf = check(&ExactMatrix::zero(3, 2));
        assert!(snf.invariant_factors().is_empty());
    }

    #[test]
    fn textbook_example() {
        let m = ExactMatrix::from_rows(vec![
            vec![2, 4, 4],
            vec![-6, 6, 12],
            vec![10, 4, 16],
        ]);
        let snf = check(&m);
        assert_eq!(snf.invariant_factors(), vec![2, 2, 156]);
    }

    #[test]
    fn random_small_matrices() {
        let mut state = 0x853c49e6748fea9bu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..150 {
            let r = (next() % 5 + 1) as usize;
            let c = (next() % 5 + 1) as usize;
            let mut m = ExactMatrix::zero(r, c);
            for i in 0..r {
                for j in 0..c {
                    m[(i, j)] = (next() % 15) as i128 - 7;
                }
            }
            check(&m);
        }
    }

    #[test]
    fn rank_mod_p() {
        let m = ExactMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]);
        assert_eq!(m.rank_mod(2), 1);
        assert_eq!(m.rank_mod(3), 1);
        assert_eq!(m.rank_mod(5), 2);
    }
}
