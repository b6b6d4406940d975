//! Permutations in one-line notation and the Koszul sign of their action on
//! graded tensor factors.

use std::fmt;

use crate::chain::{Graded, TensorWord};
use crate::error::Error;

/// A permutation of `{1..k}` in one-line notation: `one_line[l-1]` is the
/// image of `l`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation((1..=k).collect())
    }

    /// Build from one-line notation, checking bijectivity on `{1..k}`.
    pub fn from_one_line(v: Vec<usize>) -> Result<Self, Error> {
        let k = v.len();
        let mut seen = vec![false; k];
        for &x in &v {
            if x == 0 || x > k || seen[x - 1] {
                return Err(Error::NotAPermutation(v));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation(v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Image of `l` (1-indexed).
    pub fn apply(&self, l: usize) -> usize {
        self.0[l - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// Composition `self after other`: `(self \u{2218} other)(l) = self(other(l))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, Error> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { expected: self.len(), found: other.len() });
        }
        Ok(Permutation(other.0.iter().map(|&l| self.0[l - 1]).collect()))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0usize; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// Sign as a permutation (all factors odd).
    pub fn sign(&self) -> i128 {
        let degrees = vec![1usize; self.len()];
        koszul_sign(self, &degrees).expect("lengths agree")
    }

    /// Is this a `(parts[0], ..., parts[r-1])`-shuffle: ascending on each block?
    pub fn is_shuffle(&self, parts: &[usize]) -> bool {
        if parts.iter().sum::<usize>() != self.len() || parts.contains(&0) {
            return false;
        }
        let mut start = 1usize;
        for &k in parts {
            for l in start..start + k - 1 {
                if self.apply(l) >= self.apply(l + 1) {
                    return false;
                }
            }
            start += k;
        }
        true
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// The deck-interleaving shuffle in S_k: the first `ceil(k/2)` slots map to
/// the odd positions `1, 3, 5, ...` and the remaining slots to the even
/// positions `2, 4, ...`. For `k = 2n` this is the permutation mediating
/// between the factorwise coproduct and the two output decks.
pub fn shuffle_sigma(k: usize) -> Permutation {
    let half = k.div_ceil(2);
    let one_line = (1..=k)
        .map(|l| if l <= half { 2 * l - 1 } else { 2 * (l - half) })
        .collect();
    Permutation::from_one_line(one_line).expect("the deck interleaving is a bijection")
}

/// The Koszul sign of letting `sigma` act on factors of the given degrees:
/// each pair of odd-degree factors that crosses contributes a factor -1.
pub fn koszul_sign(sigma: &Permutation, degrees: &[usize]) -> Result<i128, Error> {
    if degrees.len() != sigma.len() {
        return Err(Error::LengthMismatch { expected: sigma.len(), found: degrees.len() });
    }
    let k = sigma.len();
    let mut sign = 1i128;
    for i in 1..=k {
        for j in i + 1..=k {
            if sigma.apply(i) > sigma.apply(j) && degrees[i - 1] % 2 == 1 && degrees[j - 1] % 2 == 1 {
                sign = -sign;
            }
        }
    }
    Ok(sign)
}

/// Move the factor at input slot `l` to output slot `sigma(l)`, scaling by
/// the Koszul sign. This is a left group action on signed words.
pub fn permute_factors<B: Clone + Graded>(
    sigma: &Permutation,
    word: &TensorWord<B>,
) -> Result<(i128, TensorWord<B>), Error> {
    if word.arity() != sigma.len() {
        return Err(Error::ArityMismatch {
            context: "permutation of tensor factors",
            expected: sigma.len(),
            found: word.arity(),
        });
    }
    let degrees: Vec<usize> = word.0.iter().map(Graded::degree).collect();
    let sign = koszul_sign(sigma, &degrees)?;
    let mut out: Vec<Option<B>> = vec![None; word.arity()];
    for (l, b) in word.0.iter().enumerate() {
        out[sigma.apply(l + 1) - 1] = Some(b.clone());
    }
    Ok((sign, TensorWord(out.into_iter().map(|b| b.expect("bijection")).collect())))
}

#[cfg(test)]
mod tests {
    use super::*;

    impl Graded for usize {
        fn degree(&self) -> usize {
            *self
        }
    }

    /// Oracle: realize sigma by adjacent transpositions on the word and
    /// multiply the local signs (-1)^{d_a d_b} as factors swap.
    fn koszul_oracle(sigma: &Permutation, degrees: &[usize]) -> i128 {
        // slots[i] holds the input index currently at position i
        let mut slots: Vec<usize> = (1..=sigma.len()).collect();
        let target: Vec<usize> = {
            // target[i] = input index that must end at position i
            let inv = sigma.inverse();
            (1..=sigma.len()).map(|pos| inv.apply(pos)).collect()
        };
        let mut sign = 1i128;
        for pos in 0..slots.len() {
            let cur = slots.iter().position(|&x| x == target[pos]).unwrap();
            for j in (pos..cur).rev() {
                // swap j and j+1
                let (a, b) = (slots[j], slots[j + 1]);
                if degrees[a - 1] % 2 == 1 && degrees[b - 1] % 2 == 1 {
                    sign = -sign;
                }
                slots.swap(j, j + 1);
            }
        }
        sign
    }

    fn all_perms(k: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut items: Vec<usize> = (1..=k).collect();
        fn go(items: &mut Vec<usize>, l: usize, out: &mut Vec<Permutation>) {
            if l == items.len() {
                out.push(Permutation::from_one_line(items.clone()).unwrap());
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

    #[test]
    fn identity_sign_is_plus() {
        let id = Permutation::identity(4);
        assert_eq!(koszul_sign(&id, &[1, 0, 3, 2]).unwrap(), 1);
    }

    #[test]
    fn transposition_signs() {
        let swap = Permutation::from_one_line(vec![2, 1]).unwrap();
        assert_eq!(koszul_sign(&swap, &[1, 1]).unwrap(), -1);
        assert_eq!(koszul_sign(&swap, &[1, 0]).unwrap(), 1);
        assert_eq!(koszul_sign(&swap, &[0, 0]).unwrap(), 1);
    }

    #[test]
    fn koszul_matches_bubble_sort_oracle() {
        for k in 1..=5 {
            for sigma in all_perms(k) {
                // a few degree patterns per permutation
                for pattern in 0..(1u32 << k) {
                    let degrees: Vec<usize> =
                        (0..k).map(|i| ((pattern >> i) & 1) as usize).collect();
                    assert_eq!(
                        koszul_sign(&sigma, &degrees).unwrap(),
                        koszul_oracle(&sigma, &degrees),
                        "sigma={sigma} degrees={degrees:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn koszul_is_a_cocycle() {
        // sign(s t, d) = sign(s, t.d) sign(t, d), where (t.d)_{t(l)} = d_l
        for k in 1..=5 {
            let perms = all_perms(k);
            for s in &perms {
                for t in &perms {
                    for pattern in [0u32, 1, (1 << k) - 1, 0b1010 & ((1 << k) - 1)] {
                        let d: Vec<usize> = (0..k).map(|i| ((pattern >> i) & 1) as usize).collect();
                        let mut td = vec![0usize; k];
                        for l in 1..=k {
                            td[t.apply(l) - 1] = d[l - 1];
                        }
                        let st = s.compose(t).unwrap();
                        assert_eq!(
                            koszul_sign(&st, &d).unwrap(),
                            koszul_sign(s, &td).unwrap() * koszul_sign(t, &d).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn koszul_cocycle_at_size_six() {
        // seeded pairs in S_6 with random degree patterns
        let mut state = 0x1234_5678_9abc_def0u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let k = 6;
        let mut random_perm = |next: &mut dyn FnMut() -> u64| {
            let mut v: Vec<usize> = (1..=k).collect();
            for i in (1..k).rev() {
                let j = (next() % (i as u64 + 1)) as usize;
                v.swap(i, j);
            }
            Permutation::from_one_line(v).unwrap()
        };
        for _ in 0..300 {
            let s = random_perm(&mut next);
            let t = random_perm(&mut next);
            let d: Vec<usize> = (0..k).map(|_| (next() % 2) as usize).collect();
            let mut td = vec![0usize; k];
            for l in 1..=k {
                td[t.apply(l) - 1] = d[l - 1];
            }
            assert_eq!(
                koszul_sign(&s.compose(&t).unwrap(), &d).unwrap(),
                koszul_sign(&s, &td).unwrap() * koszul_sign(&t, &d).unwrap()
            );
        }
    }

    #[test]
    fn permute_factors_examples() {
        // swap two degree-1 factors: sign -1
        let swap = Permutation::from_one_line(vec![2, 1]).unwrap();
        let w = TensorWord(vec![1usize, 1usize]);
        let (s, out) = permute_factors(&swap, &w).unwrap();
        assert_eq!(s, -1);
        assert_eq!(out, w);
        // degree-0 factor crossing: sign +1 and factors exchanged
        let w = TensorWord(vec![0usize, 1usize]);
        let (s, out) = permute_factors(&swap, &w).unwrap();
        assert_eq!(s, 1);
        assert_eq!(out, TensorWord(vec![1usize, 0usize]));
    }

    #[test]
    fn permute_factors_is_a_group_action() {
        let perms = all_perms(4);
        let w = TensorWord(vec![1usize, 0, 1, 2]);
        for s in &perms {
            for t in &perms {
                let (sig_t, wt) = permute_factors(t, &w).unwrap();
                let (sig_s, wst) = permute_factors(s, &wt).unwrap();
                let (sig_direct, w_direct) = permute_factors(&s.compose(t).unwrap(), &w).unwrap();
                assert_eq!(sig_direct, sig_s * sig_t);
                assert_eq!(w_direct, wst);
            }
        }
    }

    #[test]
    fn deck_shuffle_values() {
        assert!(shuffle_sigma(2).is_identity());
        assert_eq!(shuffle_sigma(3).one_line(), &[1, 3, 2]);
        assert_eq!(shuffle_sigma(4).one_line(), &[1, 3, 2, 4]);
        assert_eq!(shuffle_sigma(5).one_line(), &[1, 3, 5, 2, 4]);
        for k in 2..=8 {
            let s = shuffle_sigma(k);
            assert!(s.is_shuffle(&[k.div_ceil(2), k / 2]));
        }
    }

    #[test]
    fn shuffle_recognition() {
        // (1,3,2) is a (2,1)-shuffle; (3,1,2) is not
        let s = Permutation::from_one_line(vec![1, 3, 2]).unwrap();
        assert!(s.is_shuffle(&[2, 1]));
        let t = Permutation::from_one_line(vec![3, 1, 2]).unwrap();
        assert!(!t.is_shuffle(&[2, 1]));
        assert!(t.is_shuffle(&[1, 2]));
    }
}
