//! Formal linear combinations over an ordered basis, and graded tensor words.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::ring::Ring;

/// Anything with a homological degree.
pub trait Graded {
    fn degree(&self) -> usize;
}

/// A finite formal sum of basis elements with nonzero coefficients in a fixed ring.
///
/// Zero coefficients are never stored, so two elements are equal exactly when
/// their term maps agree. Iteration order is the basis order, which makes every
/// printed or serialized output reproducible.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeElement<B: Ord + Clone> {
    ring: Ring,
    terms: BTreeMap<B, i128>,
}

impl<B: Ord + Clone> FreeElement<B> {
    pub fn zero(ring: Ring) -> Self {
        FreeElement { ring, terms: BTreeMap::new() }
    }

    pub fn basis(ring: Ring, b: B) -> Self {
        Self::term(ring, 1, b)
    }

    pub fn term(ring: Ring, coeff: i128, b: B) -> Self {
        let mut e = Self::zero(ring);
        e.add_term(coeff, b);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (i128, B)>>(ring: Ring, it: I) -> Self {
        let mut e = Self::zero(ring);
        for (c, b) in it {
            e.add_term(c, b);
        }
        e
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> i128 {
        self.terms.get(b).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, i128)> {
        self.terms.iter().map(|(b, c)| (b, *c))
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    /// Accumulate `coeff * b`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, coeff: i128, b: B) {
        let c = self.ring.normalize(coeff);
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(b);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = self.ring.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Coefficientwise sum. Errors when the rings differ.
    pub fn try_add(&self, other: &Self) -> Result<Self, Error> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut out = self.clone();
        for (b, c) in other.iter() {
            out.add_term(c, b.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: i128) -> Self {
        let mut out = Self::zero(self.ring);
        for (b, a) in self.iter() {
            out.add_term(self.ring.mul(a, c), b.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.ring);
        for (b, a) in self.iter() {
            out.add_term(self.ring.neg(a), b.clone());
        }
        out
    }

    /// Linear extension of a map on basis elements.
    pub fn bind<B2: Ord + Clone>(&self, mut f: impl FnMut(&B) -> FreeElement<B2>) -> FreeElement<B2> {
        let mut out = FreeElement::zero(self.ring);
        for (b, c) in self.iter() {
            for (b2, c2) in f(b).iter() {
                out.add_term(self.ring.mul(c, c2), b2.clone());
            }
        }
        out
    }

    /// Like [`bind`](Self::bind) for maps sending each basis element to a
    /// single signed basis element or to zero.
    pub fn map_basis<B2: Ord + Clone>(
        &self,
        mut f: impl FnMut(&B) -> Option<(i128, B2)>,
    ) -> FreeElement<B2> {
        let mut out = FreeElement::zero(self.ring);
        for (b, c) in self.iter() {
            if let Some((s, b2)) = f(b) {
                out.add_term(self.ring.mul(c, s), b2);
            }
        }
        out
    }

    /// The same element with coefficients reduced into `ring`.
    pub fn reduce(&self, ring: Ring) -> FreeElement<B> {
        let mut out = FreeElement::zero(ring);
        for (b, c) in self.iter() {
            out.add_term(c, b.clone());
        }
        out
    }
}

impl<B: Ord + Clone> std::ops::Add for &FreeElement<B> {
    type Output = FreeElement<B>;
    fn add(self, rhs: Self) -> FreeElement<B> {
        self.try_add(rhs).expect("ring mismatch in +")
    }
}

impl<B: Ord + Clone> std::ops::Sub for &FreeElement<B> {
    type Output = FreeElement<B>;
    fn sub(self, rhs: Self) -> FreeElement<B> {
        self.try_add(&rhs.neg()).expect("ring mismatch in -")
    }
}

impl<B: Ord + Clone + fmt::Display> fmt::Display for FreeElement<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.iter().enumerate() {
            if i == 0 {
                if c == -1 {
                    write!(f, "-")?;
                } else if c != 1 {
                    write!(f, "{c}")?;
                }
            } else if c == 1 {
                write!(f, " + ")?;
            } else if c == -1 {
                write!(f, " - ")?;
            } else if c < 0 {
                write!(f, " - {}", -c)?;
            } else {
                write!(f, " + {c}")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// A tensor word: an ordered tuple of graded basis factors.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct TensorWord<B>(pub Vec<B>);

impl<B: Graded> Graded for TensorWord<B> {
    fn degree(&self) -> usize {
        self.0.iter().map(Graded::degree).sum()
    }
}

impl<B> TensorWord<B> {
    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn single(b: B) -> Self {
        TensorWord(vec![b])
    }
}

impl<B: fmt::Display> fmt::Display for TensorWord<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " \u{2297} ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Tensor product of two elements, with no sign: the factors of `b` are
/// appended to those of `a`. Koszul signs enter only when maps move past
/// elements, not in the product of elements itself.
pub fn tensor_concat<B: Ord + Clone>(
    a: &FreeElement<TensorWord<B>>,
    b: &FreeElement<TensorWord<B>>,
) -> FreeElement<TensorWord<B>> {
    let mut out = FreeElement::zero(a.ring());
    for (wa, ca) in a.iter() {
        for (wb, cb) in b.iter() {
            let mut v = wa.0.clone();
            v.extend(wb.0.iter().cloned());
            out.add_term(a.ring().mul(ca, cb), TensorWord(v));
        }
    }
    out
}

/// Graded Leibniz boundary of a tensor word, given the boundary of a single factor.
pub fn boundary_tensor<B>(
    w: &TensorWord<B>,
    ring: Ring,
    mut bd: impl FnMut(&B) -> Vec<(i128, B)>,
) -> FreeElement<TensorWord<B>>
where
    B: Ord + Clone + Graded,
{
    let mut out = FreeElement::zero(ring);
    let mut prefix_deg = 0usize;
    for (i, factor) in w.0.iter().enumerate() {
        let sign = if prefix_deg.is_multiple_of(2) { 1 } else { -1 };
        for (c, db) in bd(factor) {
            let mut v = w.0.clone();
            v[i] = db;
            out.add_term(sign * c, TensorWord(v));
        }
        prefix_deg += factor.degree();
    }
    out
}
