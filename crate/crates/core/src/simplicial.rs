//! Normalized chains of representable simplices and of simplicial cubes.
//!
//! Simplex words are strictly increasing vertex lists; the coproduct is the
//! Alexander-Whitney front/back splitting and the degree-1 product is the
//! join. Product simplices (tuples of monotone 0/1 vertex words) model the
//! simplicial cube, the target of the subdivision map.

use std::fmt;

use crate::chain::Graded;
use crate::error::Error;

/// A nondegenerate simplex `[v_0, ..., v_m]` with strictly increasing vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct SimplexWord(pub Vec<u32>);

impl Graded for SimplexWord {
    fn degree(&self) -> usize {
        self.0.len() - 1
    }
}

impl SimplexWord {
    pub fn new(vertices: Vec<u32>) -> Result<Self, Error> {
        if vertices.is_empty() {
            return Err(Error::BadArgument("a simplex needs at least one vertex".into()));
        }
        if !vertices.windows(2).all(|p| p[0] < p[1]) {
            return Err(Error::BadArgument(format!(
                "vertices {vertices:?} are not strictly increasing"
            )));
        }
        Ok(SimplexWord(vertices))
    }

    /// The top simplex `[0, ..., n]` of the `n`-simplex.
    pub fn top(n: u32) -> Self {
        SimplexWord((0..=n).collect())
    }

    /// All nondegenerate simplices of the standard `n`-simplex.
    pub fn all(n: u32) -> Vec<SimplexWord> {
        let mut out = Vec::new();
        for mask in 1u64..(1u64 << (n + 1)) {
            let verts: Vec<u32> = (0..=n).filter(|v| (mask >> v) & 1 == 1).collect();
            out.push(SimplexWord(verts));
        }
        out.sort();
        out
    }

    /// Alternating sum of vertex deletions.
    pub fn boundary(&self) -> Vec<(i128, SimplexWord)> {
        if self.0.len() == 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for i in 0..self.0.len() {
            let mut v = self.0.clone();
            v.remove(i);
            let sign = if i % 2 == 0 { 1 } else { -1 };
            out.push((sign, SimplexWord(v)));
        }
        out
    }

    pub fn counit(&self) -> i128 {
        if self.0.len() == 1 {
            1
        } else {
            0
        }
    }

    /// Alexander-Whitney coproduct: front faces tensor back faces.
    pub fn coproduct(&self) -> Vec<(i128, SimplexWord, SimplexWord)> {
        (0..self.0.len())
            .map(|i| {
                (1, SimplexWord(self.0[..=i].to_vec()), SimplexWord(self.0[i..].to_vec()))
            })
            .collect()
    }

    /// Join: zero when a vertex repeats, otherwise the ordered union with the
    /// sign `(-1)^(p + inversions)` of the ordering permutation, `p` being the
    /// degree of the first factor.
    pub fn star(&self, other: &SimplexWord) -> Result<Vec<(i128, SimplexWord)>, Error> {
        let p = self.degree();
        let mut concat: Vec<u32> = self.0.iter().chain(other.0.iter()).copied().collect();
        // count inversions of the concatenation, bailing out on a repeat
        let mut inv = 0usize;
        for i in 0..concat.len() {
            for j in i + 1..concat.len() {
                if concat[i] == concat[j] {
                    return Ok(Vec::new());
                }
                if concat[i] > concat[j] {
                    inv += 1;
                }
            }
        }
        concat.sort_unstable();
        let sign = if (p + inv).is_multiple_of(2) { 1 } else { -1 };
        Ok(vec![(sign, SimplexWord(concat))])
    }
}

impl fmt::Display for SimplexWord {
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

impl SimplexWord {
    /// Parse `[0,1,2]`.
    pub fn parse(src: &str) -> Result<SimplexWord, Error> {
        let s = src.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or(Error::Parse {
                pos: 0,
                expected: "`[v0,v1,...]`".into(),
                found: s.into(),
            })?;
        let mut verts = Vec::new();
        for part in inner.split(',') {
            let v: u32 = part.trim().parse().map_err(|_| Error::Parse {
                pos: 0,
                expected: "a vertex number".into(),
                found: part.trim().into(),
            })?;
            verts.push(v);
        }
        SimplexWord::new(verts)
    }
}

/// An `m`-simplex of a product of 1-simplices, stored as its `m+1` vertex
/// columns; each column is a 0/1 vector of length `k` and consecutive columns
/// are coordinatewise nondecreasing.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct ProductSimplex {
    columns: Vec<Vec<u8>>,
}

impl Graded for ProductSimplex {
    fn degree(&self) -> usize {
        self.columns.len() - 1
    }
}

impl ProductSimplex {
    pub fn from_columns(columns: Vec<Vec<u8>>) -> Result<Self, Error> {
        if columns.is_empty() {
            return Err(Error::BadArgument("a product simplex needs a vertex".into()));
        }
        let k = columns[0].len();
        for c in &columns {
            if c.len() != k || c.iter().any(|x| *x > 1) {
                return Err(Error::BadArgument("columns must be 0/1 vectors of equal length".into()));
            }
        }
        for pair in columns.windows(2) {
            if pair[0].iter().zip(&pair[1]).any(|(a, b)| a > b) {
                return Err(Error::BadArgument("vertex columns must be monotone".into()));
            }
        }
        Ok(ProductSimplex { columns })
    }

    /// Build from the factorwise vertex words, e.g. `011 x 001`.
    pub fn from_words(words: &[Vec<u8>]) -> Result<Self, Error> {
        if words.is_empty() {
            return Err(Error::BadArgument("a product simplex needs a factor".into()));
        }
        let m1 = words[0].len();
        if words.iter().any(|w| w.len() != m1) || m1 == 0 {
            return Err(Error::BadArgument("factor words must share a positive length".into()));
        }
        let columns = (0..m1).map(|j| words.iter().map(|w| w[j]).collect()).collect();
        Self::from_columns(columns)
    }

    /// Number of 1-simplex factors.
    pub fn factors(&self) -> usize {
        self.columns[0].len()
    }

    pub fn columns(&self) -> &[Vec<u8>] {
        &self.columns
    }

    pub fn column(&self, i: usize) -> &[u8] {
        &self.columns[i]
    }

    /// Degenerate iff two consecutive vertex columns coincide.
    pub fn is_degenerate(&self) -> bool {
        self.columns.windows(2).any(|p| p[0] == p[1])
    }

    /// The sub-simplex on the given column indices, or `None` when degenerate.
    pub fn select_columns(&self, idx: &[usize]) -> Option<ProductSimplex> {
        let cols: Vec<Vec<u8>> = idx.iter().map(|i| self.columns[*i].clone()).collect();
        let p = ProductSimplex { columns: cols };
        if p.is_degenerate() {
            None
        } else {
            Some(p)
        }
    }

    /// Alternating sum of column deletions, degenerate faces dropped.
    pub fn boundary(&self) -> Vec<(i128, ProductSimplex)> {
        if self.columns.len() == 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        for i in 0..self.columns.len() {
            let idx: Vec<usize> = (0..self.columns.len()).filter(|j| *j != i).collect();
            if let Some(face) = self.select_columns(&idx) {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                out.push((sign, face));
            }
        }
        out
    }

    pub fn counit(&self) -> i128 {
        if self.columns.len() == 1 {
            1
        } else {
            0
        }
    }

    /// Alexander-Whitney coproduct by front/back column truncation, with
    /// degenerate parts dropped.
    pub fn coproduct(&self) -> Vec<(i128, ProductSimplex, ProductSimplex)> {
        let m1 = self.columns.len();
        let mut out = Vec::new();
        for i in 0..m1 {
            let front: Vec<usize> = (0..=i).collect();
            let back: Vec<usize> = (i..m1).collect();
            if let (Some(a), Some(b)) = (self.select_columns(&front), self.select_columns(&back)) {
                out.push((1, a, b));
            }
        }
        out
    }
}

impl fmt::Display for ProductSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for factor in 0..self.factors() {
            if factor > 0 {
                write!(f, "x")?;
            }
            for col in &self.columns {
                write!(f, "{}", col[factor])?;
            }
        }
        Ok(())
    }
}

impl ProductSimplex {
    /// Parse `011x001`.
    pub fn parse(src: &str) -> Result<ProductSimplex, Error> {
        let s = src.trim();
        let mut words = Vec::new();
        for part in s.split('x') {
            let mut w = Vec::new();
            for (i, ch) in part.trim().char_indices() {
                match ch {
                    '0' => w.push(0u8),
                    '1' => w.push(1u8),
                    other => {
                        return Err(Error::Parse {
                            pos: i,
                            expected: "`0` or `1`".into(),
                            found: other.to_string(),
                        })
                    }
                }
            }
            words.push(w);
        }
        // monotonicity of each factor word
        for w in &words {
            if w.windows(2).any(|p| p[0] > p[1]) {
                return Err(Error::BadArgument(format!("factor word in {s} is not monotone")));
            }
        }
        Self::from_words(&words)
    }
}
