//! Cooperation terms: the expression language over the generators
//! counit / coproduct / product together with identities, tensor products,
//! compositions and signed permutations of factors.
//!
//! Terms are evaluated into the endomorphisms of cubical or simplicial
//! chains; relations between cooperations are checked by evaluation on basis
//! words rather than by symbolic rewriting.

use std::fmt;

use crate::chain::{tensor_concat, FreeElement, Graded, TensorWord};
use crate::error::Error;
use crate::perm::{permute_factors, Permutation};
pub use crate::perm::shuffle_sigma;
use crate::ring::Ring;

/// A graded basis carrying the counit, the coproduct and the degree-1
/// product, together with its differential. Cube words and simplex words
/// both implement this.
pub trait BialgebraBasis: Clone + Ord + Graded + fmt::Display {
    fn counit(&self) -> i128;
    fn coproduct(&self) -> Vec<(i128, Self, Self)>;
    fn star(&self, other: &Self) -> Result<Vec<(i128, Self)>, Error>;
    fn boundary(&self) -> Vec<(i128, Self)>;
    /// Ambient dimension when the species has one (cubes); used to reject
    /// mixed-dimension tensor inputs.
    fn ambient(&self) -> Option<usize> {
        None
    }
}

impl BialgebraBasis for crate::cubical::CubeWord {
    fn counit(&self) -> i128 {
        crate::cubical::CubeWord::counit(self)
    }
    fn coproduct(&self) -> Vec<(i128, Self, Self)> {
        crate::cubical::CubeWord::coproduct(self)
    }
    fn star(&self, other: &Self) -> Result<Vec<(i128, Self)>, Error> {
        crate::cubical::CubeWord::star(self, other)
    }
    fn boundary(&self) -> Vec<(i128, Self)> {
        crate::cubical::CubeWord::boundary(self)
    }
    fn ambient(&self) -> Option<usize> {
        Some(self.ambient())
    }
}

impl BialgebraBasis for crate::simplicial::SimplexWord {
    fn counit(&self) -> i128 {
        crate::simplicial::SimplexWord::counit(self)
    }
    fn coproduct(&self) -> Vec<(i128, Self, Self)> {
        crate::simplicial::SimplexWord::coproduct(self)
    }
    fn star(&self, other: &Self) -> Result<Vec<(i128, Self)>, Error> {
        crate::simplicial::SimplexWord::star(self, other)
    }
    fn boundary(&self) -> Vec<(i128, Self)> {
        crate::simplicial::SimplexWord::boundary(self)
    }
}

/// An element of a tensor power of the chains, as a formal sum of tensor words.
pub type Element<B> = FreeElement<TensorWord<B>>;

/// Inputs, outputs and homological degree of a term.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Signature {
    pub inputs: usize,
    pub outputs: usize,
    pub degree: usize,
}

/// A cooperation term.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CoopTerm {
    /// Identity on `k >= 1` factors.
    Id(usize),
    /// The counit, one input and no outputs.
    Counit,
    /// The coproduct, one input and two outputs.
    Cop,
    /// The degree-1 product, two inputs and one output.
    Prod,
    /// Signed permutation of factors.
    Perm(Permutation),
    /// `f` after `g`.
    Compose(Box<CoopTerm>, Box<CoopTerm>),
    /// Side-by-side tensor of terms.
    Tensor(Vec<CoopTerm>),
}

impl CoopTerm {
    /// Arity and degree inference; rejects ill-formed composites.
    pub fn signature(&self) -> Result<Signature, Error> {
        match self {
            CoopTerm::Id(k) => {
                if *k == 0 {
                    return Err(Error::BadArgument("id needs at least one factor".into()));
                }
                Ok(Signature { inputs: *k, outputs: *k, degree: 0 })
            }
            CoopTerm::Counit => Ok(Signature { inputs: 1, outputs: 0, degree: 0 }),
            CoopTerm::Cop => Ok(Signature { inputs: 1, outputs: 2, degree: 0 }),
            CoopTerm::Prod => Ok(Signature { inputs: 2, outputs: 1, degree: 1 }),
            CoopTerm::Perm(p) => {
                if p.is_empty() {
                    return Err(Error::BadArgument("perm needs at least one entry".into()));
                }
                Ok(Signature { inputs: p.len(), outputs: p.len(), degree: 0 })
            }
            CoopTerm::Compose(f, g) => {
                let sf = f.signature()?;
                let sg = g.signature()?;
                if sg.outputs != sf.inputs {
                    return Err(Error::ArityMismatch {
                        context: "composition",
                        expected: sf.inputs,
                        found: sg.outputs,
                    });
                }
                Ok(Signature {
                    inputs: sg.inputs,
                    outputs: sf.outputs,
                    degree: sf.degree + sg.degree,
                })
            }
            CoopTerm::Tensor(fs) => {
                if fs.is_empty() {
                    return Err(Error::BadArgument("tensor needs at least one factor".into()));
                }
                let mut sig = Signature { inputs: 0, outputs: 0, degree: 0 };
                for f in fs {
                    let s = f.signature()?;
                    sig.inputs += s.inputs;
                    sig.outputs += s.outputs;
                    sig.degree += s.degree;
                }
                Ok(sig)
            }
        }
    }

    /// Does this term act as the identity?
    fn is_identity_term(&self) -> bool {
        match self {
            CoopTerm::Id(_) => true,
            CoopTerm::Perm(p) => p.is_identity(),
            CoopTerm::Tensor(fs) => fs.iter().all(CoopTerm::is_identity_term),
            _ => false,
        }
    }
}

/// Composition that drops identity factors, so derived constructors reduce
/// to the generators in the base cases.
pub fn compose(f: CoopTerm, g: CoopTerm) -> CoopTerm {
    if f.is_identity_term() {
        return g;
    }
    if g.is_identity_term() {
        return f;
    }
    CoopTerm::Compose(Box::new(f), Box::new(g))
}

/// Tensor that collapses all-identity lists and unwraps singletons.
pub fn tensor(fs: Vec<CoopTerm>) -> CoopTerm {
    if fs.len() == 1 {
        return fs.into_iter().next().expect("length checked");
    }
    if fs.iter().all(CoopTerm::is_identity_term) {
        let total: usize =
            fs.iter().map(|f| f.signature().map(|s| s.inputs).unwrap_or(0)).sum();
        if total > 0 {
            return CoopTerm::Id(total);
        }
    }
    CoopTerm::Tensor(fs)
}

/// The iterated coproduct comb with `k + 1` outputs.
pub fn iterated_coproduct(k: usize) -> CoopTerm {
    match k {
        0 => CoopTerm::Id(1),
        1 => CoopTerm::Cop,
        _ => compose(
            tensor(vec![iterated_coproduct(k - 1), CoopTerm::Id(1)]),
            CoopTerm::Cop,
        ),
    }
}

/// The `k`-input product comb, leaning left: one input is the identity, two
/// inputs the product, and each step grafts a new root product whose right
/// argument is the fresh input.
pub fn iterated_product(k: usize) -> Result<CoopTerm, Error> {
    match k {
        0 => Err(Error::BadArgument("the product comb needs at least one input".into())),
        1 => Ok(CoopTerm::Id(1)),
        2 => Ok(CoopTerm::Prod),
        _ => Ok(compose(
            CoopTerm::Prod,
            tensor(vec![iterated_product(k - 1)?, CoopTerm::Id(1)]),
        )),
    }
}

/// Cup-i coproduct in recursive form: the base case is the coproduct and
/// each step applies the coproduct once more and grafts a single product.
/// Which output comb receives the graft cycles with the step's residue
/// mod 4; this placement is the one that keeps every stage equal to
/// [`cup_i_closed`] with exact signs on all basis words.
pub fn cup_i_recursive(i: usize) -> CoopTerm {
    if i == 0 {
        return CoopTerm::Cop;
    }
    let prev = cup_i_recursive(i - 1);
    let swap23 = Permutation::from_one_line(vec![1, 3, 2]).expect("valid one-line");
    if i % 2 == 1 {
        // (star x id) . (23) . (cup_{i-1} x id) . delta
        compose(
            tensor(vec![CoopTerm::Prod, CoopTerm::Id(1)]),
            compose(
                CoopTerm::Perm(swap23),
                compose(tensor(vec![prev, CoopTerm::Id(1)]), CoopTerm::Cop),
            ),
        )
    } else if i % 4 == 2 {
        // (star x id) . (23) . (id x cup_{i-1}) . delta
        compose(
            tensor(vec![CoopTerm::Prod, CoopTerm::Id(1)]),
            compose(
                CoopTerm::Perm(swap23),
                compose(tensor(vec![CoopTerm::Id(1), prev]), CoopTerm::Cop),
            ),
        )
    } else {
        // (id x star) . (cup_{i-1} x id) . delta
        compose(
            tensor(vec![CoopTerm::Id(1), CoopTerm::Prod]),
            compose(tensor(vec![prev, CoopTerm::Id(1)]), CoopTerm::Cop),
        )
    }
}

/// Cup-i coproduct in closed form: two product combs of sizes
/// `ceil((i+2)/2)` and `floor((i+2)/2)` after the inverse deck shuffle of the
/// iterated coproduct.
pub fn cup_i_closed(i: usize) -> CoopTerm {
    let a = (i + 2).div_ceil(2);
    let b = (i + 2) / 2;
    let combs = tensor(vec![
        iterated_product(a).expect("a >= 1"),
        iterated_product(b).expect("b >= 1"),
    ]);
    let sigma_inv = shuffle_sigma(i + 2).inverse();
    compose(combs, compose(CoopTerm::Perm(sigma_inv), iterated_coproduct(i + 1)))
}

/// Part sizes and a shuffle permutation, the data of a shuffle graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShuffleSpec {
    parts: Vec<usize>,
    sigma: Permutation,
}

impl ShuffleSpec {
    /// Checks that `sigma` really is a `(parts)`-shuffle.
    pub fn new(parts: Vec<usize>, sigma: Permutation) -> Result<Self, Error> {
        if !sigma.is_shuffle(&parts) {
            return Err(Error::NotAShuffle {
                parts,
                one_line: sigma.one_line().to_vec(),
            });
        }
        Ok(ShuffleSpec { parts, sigma })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// The cooperation of a shuffle graph: product combs over each part, after
/// the inverse shuffle of the iterated coproduct. Arity `(1, r)` and degree
/// `k - r` for `r` parts summing to `k`.
pub fn shuffle_graph(spec: &ShuffleSpec) -> CoopTerm {
    let k = spec.total();
    let combs = tensor(
        spec.parts
            .iter()
            .map(|p| iterated_product(*p).expect("parts are positive"))
            .collect(),
    );
    compose(
        combs,
        compose(CoopTerm::Perm(spec.sigma.inverse()), iterated_coproduct(k - 1)),
    )
}

/// All `(k_1, ..., k_r)`-shuffles for the given parts, in lexicographic order.
pub fn all_shuffles(parts: &[usize]) -> Vec<Permutation> {
    let k: usize = parts.iter().sum();
    let mut out = Vec::new();
    // choose the image sets block by block
    fn go(parts: &[usize], free: &mut Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if parts.is_empty() {
            out.push(Permutation::from_one_line(acc.clone()).expect("constructed bijective"));
            return;
        }
        let take = parts[0];
        let n = free.len();
        let mut idx: Vec<usize> = (0..take).collect();
        loop {
            let chosen: Vec<usize> = idx.iter().map(|i| free[*i]).collect();
            let rest: Vec<usize> =
                (0..n).filter(|i| !idx.contains(i)).map(|i| free[i]).collect();
            acc.extend(&chosen);
            let mut rest_v = rest;
            go(&parts[1..], &mut rest_v, acc, out);
            acc.truncate(acc.len() - take);
            // next combination
            let mut i = take;
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                if idx[i] != i + n - take {
                    idx[i] += 1;
                    for j in i + 1..take {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    return;
                }
            }
        }
    }
    let mut free: Vec<usize> = (1..=k).collect();
    go(parts, &mut free, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.one_line().cmp(b.one_line()));
    out.dedup();
    out
}

/// Evaluate a term on an element of the matching tensor power.
pub fn evaluate<B: BialgebraBasis>(
    term: &CoopTerm,
    input: &Element<B>,
) -> Result<Element<B>, Error> {
    let sig = term.signature()?;
    let ring = input.ring();
    let mut out = Element::zero(ring);
    for (w, c) in input.iter() {
        if w.arity() != sig.inputs {
            return Err(Error::ArityMismatch {
                context: "term application",
                expected: sig.inputs,
                found: w.arity(),
            });
        }
        let mut ambient: Option<usize> = None;
        for b in &w.0 {
            if let Some(n) = b.ambient() {
                match ambient {
                    None => ambient = Some(n),
                    Some(m) if m != n => {
                        return Err(Error::DimensionMismatch { expected: m, found: n })
                    }
                    _ => {}
                }
            }
        }
        let v = eval_word(term, w, ring)?;
        out = out.try_add(&v.scale(c))?;
    }
    Ok(out)
}

fn eval_word<B: BialgebraBasis>(
    term: &CoopTerm,
    w: &TensorWord<B>,
    ring: Ring,
) -> Result<Element<B>, Error> {
    match term {
        CoopTerm::Id(_) => Ok(Element::basis(ring, w.clone())),
        CoopTerm::Counit => {
            Ok(Element::term(ring, w.0[0].counit(), TensorWord(Vec::new())))
        }
        CoopTerm::Cop => {
            let mut out = Element::zero(ring);
            for (c, a, b) in w.0[0].coproduct() {
                out.add_term(c, TensorWord(vec![a, b]));
            }
            Ok(out)
        }
        CoopTerm::Prod => {
            let mut out = Element::zero(ring);
            for (c, s) in w.0[0].star(&w.0[1])? {
                out.add_term(c, TensorWord(vec![s]));
            }
            Ok(out)
        }
        CoopTerm::Perm(p) => {
            let (sign, permuted) = permute_factors(p, w)?;
            Ok(Element::term(ring, sign, permuted))
        }
        CoopTerm::Compose(f, g) => {
            let mid = eval_word(g, w, ring)?;
            let mut out = Element::zero(ring);
            for (v, c) in mid.iter() {
                out = out.try_add(&eval_word(f, v, ring)?.scale(c))?;
            }
            Ok(out)
        }
        CoopTerm::Tensor(fs) => {
            // split the input word into chunks and accumulate the Koszul sign
            // of moving each map past the earlier chunks
            let mut chunks = Vec::with_capacity(fs.len());
            let mut offset = 0usize;
            let mut sign = 1i128;
            let mut prefix_deg = 0usize;
            for f in fs {
                let s = f.signature()?;
                let chunk = TensorWord(w.0[offset..offset + s.inputs].to_vec());
                if s.degree % 2 == 1 && prefix_deg % 2 == 1 {
                    sign = -sign;
                }
                prefix_deg += chunk.degree();
                offset += s.inputs;
                chunks.push((f, chunk));
            }
            let mut out = Element::term(ring, sign, TensorWord(Vec::new()));
            for (f, chunk) in chunks {
                let v = eval_word(f, &chunk, ring)?;
                out = tensor_concat(&out, &v);
            }
            Ok(out)
        }
    }
}

/// Graded Leibniz boundary on tensor elements.
pub fn boundary_element<B: BialgebraBasis>(e: &Element<B>) -> Element<B> {
    let ring = e.ring();
    let mut out = Element::zero(ring);
    for (w, c) in e.iter() {
        let bd = crate::chain::boundary_tensor(w, ring, |b| b.boundary());
        out = out.try_add(&bd.scale(c)).expect("same ring");
    }
    out
}

impl fmt::Display for CoopTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoopTerm::Id(k) => write!(f, "id({k})"),
            CoopTerm::Counit => write!(f, "eps"),
            CoopTerm::Cop => write!(f, "delta"),
            CoopTerm::Prod => write!(f, "star"),
            CoopTerm::Perm(p) => {
                write!(f, "perm(")?;
                for (i, x) in p.one_line().iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            CoopTerm::Compose(a, b) => write!(f, "comp({a},{b})"),
            CoopTerm::Tensor(fs) => {
                write!(f, "ten(")?;
                for (i, t) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, ")")
            }
        }
    }
}

// ---------------------------------------------------------------------------
// term DSL
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
enum Token {
    Ident(String),
    Int(usize),
    LParen,
    RParen,
    Comma,
    Semi,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "`{s}`"),
            Token::Int(n) => write!(f, "`{n}`"),
            Token::LParen => write!(f, "`(`"),
            Token::RParen => write!(f, "`)`"),
            Token::Comma => write!(f, "`,`"),
            Token::Semi => write!(f, "`;`"),
        }
    }
}

struct Lexer {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Lexer {
    fn new(src: &str) -> Result<Lexer, Error> {
        let bytes = src.as_bytes();
        let mut tokens = Vec::new();
        let mut i = 0usize;
        while i < bytes.len() {
            let c = bytes[i] as char;
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_alphabetic() {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                    i += 1;
                }
                tokens.push((start, Token::Ident(src[start..i].to_string())));
            } else if c.is_ascii_digit() {
                let start = i;
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                let n: usize = src[start..i].parse().map_err(|_| Error::Parse {
                    pos: start,
                    expected: "an integer".into(),
                    found: src[start..i].into(),
                })?;
                tokens.push((start, Token::Int(n)));
            } else {
                let t = match c {
                    '(' => Token::LParen,
                    ')' => Token::RParen,
                    ',' => Token::Comma,
                    ';' => Token::Semi,
                    other => {
                        return Err(Error::Parse {
                            pos: i,
                            expected: "a term".into(),
                            found: other.to_string(),
                        })
                    }
                };
                tokens.push((i, t));
                i += 1;
            }
        }
        Ok(Lexer { tokens, pos: 0, end: src.len() })
    }

    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self, expected: &str) -> Result<(usize, Token), Error> {
        let t = self.tokens.get(self.pos).cloned().ok_or(Error::Parse {
            pos: self.end,
            expected: expected.into(),
            found: "end of input".into(),
        })?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, want: Token, expected: &str) -> Result<(), Error> {
        let (pos, t) = self.next(expected)?;
        if t != want {
            return Err(Error::Parse { pos, expected: expected.into(), found: t.to_string() });
        }
        Ok(())
    }

    fn int(&mut self) -> Result<usize, Error> {
        let (pos, t) = self.next("an integer")?;
        match t {
            Token::Int(n) => Ok(n),
            other => {
                Err(Error::Parse { pos, expected: "an integer".into(), found: other.to_string() })
            }
        }
    }

    fn int_list(&mut self) -> Result<Vec<usize>, Error> {
        let mut out = vec![self.int()?];
        while matches!(self.peek(), Some((_, Token::Comma))) {
            self.pos += 1;
            out.push(self.int()?);
        }
        Ok(out)
    }
}

impl CoopTerm {
    /// Parse the term DSL. Errors carry the byte position and the expected
    /// tokens. The returned term has already passed arity validation.
    pub fn parse(src: &str) -> Result<CoopTerm, Error> {
        let mut lx = Lexer::new(src)?;
        let term = parse_term(&mut lx)?;
        if let Some((pos, t)) = lx.peek() {
            return Err(Error::Parse {
                pos: *pos,
                expected: "end of input".into(),
                found: t.to_string(),
            });
        }
        term.signature()?;
        Ok(term)
    }
}

fn parse_term(lx: &mut Lexer) -> Result<CoopTerm, Error> {
    let (pos, tok) = lx.next("a term")?;
    let name = match tok {
        Token::Ident(s) => s,
        other => {
            return Err(Error::Parse {
                pos,
                expected: "one of `id`, `eps`, `delta`, `star`, `perm`, `comp`, `ten`, `cup`, `itdelta`, `itstar`, `shuffle`".into(),
                found: other.to_string(),
            })
        }
    };
    match name.as_str() {
        "eps" => Ok(CoopTerm::Counit),
        "delta" => Ok(CoopTerm::Cop),
        "star" => Ok(CoopTerm::Prod),
        "id" => {
            lx.expect(Token::LParen, "`(`")?;
            let k = lx.int()?;
            lx.expect(Token::RParen, "`)`")?;
            Ok(CoopTerm::Id(k))
        }
        "perm" => {
            lx.expect(Token::LParen, "`(`")?;
            let one_line = lx.int_list()?;
            lx.expect(Token::RParen, "`)`")?;
            Ok(CoopTerm::Perm(Permutation::from_one_line(one_line)?))
        }
        "comp" => {
            lx.expect(Token::LParen, "`(`")?;
            let f = parse_term(lx)?;
            lx.expect(Token::Comma, "`,`")?;
            let g = parse_term(lx)?;
            lx.expect(Token::RParen, "`)`")?;
            Ok(compose(f, g))
        }
        "ten" => {
            lx.expect(Token::LParen, "`(`")?;
            let mut fs = vec![parse_term(lx)?];
            while matches!(lx.peek(), Some((_, Token::Comma))) {
                lx.pos += 1;
                fs.push(parse_term(lx)?);
            }
            lx.expect(Token::RParen, "`)`")?;
            Ok(tensor(fs))
        }
        "cup" => {
            lx.expect(Token::LParen, "`(`")?;
            let i = lx.int()?;
            lx.expect(Token::RParen, "`)`")?;
            Ok(cup_i_closed(i))
        }
        "itdelta" => {
            lx.expect(Token::LParen, "`(`")?;
            let k = lx.int()?;
            lx.expect(Token::RParen, "`)`")?;
            Ok(iterated_coproduct(k))
        }
        "itstar" => {
            lx.expect(Token::LParen, "`(`")?;
            let k = lx.int()?;
            lx.expect(Token::RParen, "`)`")?;
            iterated_product(k)
        }
        "shuffle" => {
            lx.expect(Token::LParen, "`(`")?;
            let parts = lx.int_list()?;
            lx.expect(Token::Semi, "`;`")?;
            let one_line = lx.int_list()?;
            lx.expect(Token::RParen, "`)`")?;
            let sigma = Permutation::from_one_line(one_line)?;
            Ok(shuffle_graph(&ShuffleSpec::new(parts, sigma)?))
        }
        other => Err(Error::Parse {
            pos,
            expected: "one of `id`, `eps`, `delta`, `star`, `perm`, `comp`, `ten`, `cup`, `itdelta`, `itstar`, `shuffle`".into(),
            found: format!("`{other}`"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubical::CubeWord;
    use crate::simplicial::SimplexWord;

    fn cw(s: &str) -> CubeWord {
        CubeWord::parse(s).unwrap()
    }

    fn celt(s: &str) -> Element<CubeWord> {
        Element::basis(Ring::Int, TensorWord::single(cw(s)))
    }

    fn selt(s: &str) -> Element<SimplexWord> {
        Element::basis(Ring::Int, TensorWord::single(SimplexWord::parse(s).unwrap()))
    }

    fn pair(a: &str, b: &str) -> TensorWord<CubeWord> {
        TensorWord(vec![cw(a), cw(b)])
    }

    #[test]
    fn signatures_of_generators() {
        assert_eq!(
            CoopTerm::Cop.signature().unwrap(),
            Signature { inputs: 1, outputs: 2, degree: 0 }
        );
        assert_eq!(
            CoopTerm::Prod.signature().unwrap(),
            Signature { inputs: 2, outputs: 1, degree: 1 }
        );
        let t = CoopTerm::Compose(Box::new(CoopTerm::Counit), Box::new(CoopTerm::Prod));
        assert_eq!(t.signature().unwrap(), Signature { inputs: 2, outputs: 0, degree: 1 });
        // ill-arity composite: the product comb cannot follow a single output
        let bad = CoopTerm::Compose(Box::new(CoopTerm::Prod), Box::new(CoopTerm::Prod));
        assert!(bad.signature().is_err());
    }

    #[test]
    fn constructors_reduce_to_generators() {
        assert_eq!(iterated_coproduct(0), CoopTerm::Id(1));
        assert_eq!(iterated_coproduct(1), CoopTerm::Cop);
        assert_eq!(iterated_product(1).unwrap(), CoopTerm::Id(1));
        assert_eq!(iterated_product(2).unwrap(), CoopTerm::Prod);
        assert!(iterated_product(0).is_err());
        assert_eq!(cup_i_recursive(0), CoopTerm::Cop);
        assert_eq!(cup_i_closed(0), CoopTerm::Cop);
    }

    #[test]
    fn closed_cup_one_has_the_expected_shape() {
        let expected = compose(
            tensor(vec![CoopTerm::Prod, CoopTerm::Id(1)]),
            compose(
                CoopTerm::Perm(Permutation::from_one_line(vec![1, 3, 2]).unwrap()),
                iterated_coproduct(2),
            ),
        );
        assert_eq!(cup_i_closed(1), expected);
    }

    #[test]
    fn evaluate_identity_and_coproduct() {
        let x = celt("[01]");
        assert_eq!(evaluate(&CoopTerm::Id(1), &x).unwrap(), x);
        let got = evaluate(&CoopTerm::Cop, &x).unwrap();
        let expected = Element::from_terms(
            Ring::Int,
            [(1, pair("[0]", "[01]")), (1, pair("[01]", "[1]"))],
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn counitality_as_a_term() {
        let left = compose(tensor(vec![CoopTerm::Counit, CoopTerm::Id(1)]), CoopTerm::Cop);
        let right = compose(tensor(vec![CoopTerm::Id(1), CoopTerm::Counit]), CoopTerm::Cop);
        for n in 0..=3 {
            for w in CubeWord::all(n) {
                let x = Element::basis(Ring::Int, TensorWord::single(w));
                assert_eq!(evaluate(&left, &x).unwrap(), x);
                assert_eq!(evaluate(&right, &x).unwrap(), x);
            }
        }
    }

    #[test]
    fn cup_one_on_the_square_is_the_four_term_sum() {
        let expected = Element::from_terms(
            Ring::Int,
            [
                (1, pair("[0][01]", "[01][01]")),
                (1, pair("[01][1]", "[01][01]")),
                (-1, pair("[01][01]", "[01][0]")),
                (-1, pair("[01][01]", "[1][01]")),
            ],
        );
        let x = celt("[01][01]");
        assert_eq!(evaluate(&cup_i_closed(1), &x).unwrap(), expected);
        assert_eq!(evaluate(&cup_i_recursive(1), &x).unwrap(), expected);
    }

    #[test]
    fn cup_one_on_the_triangle() {
        let expected = Element::from_terms(
            Ring::Int,
            [
                (-1, TensorWord(vec![
                    SimplexWord::parse("[0,1,2]").unwrap(),
                    SimplexWord::parse("[0,1]").unwrap(),
                ])),
                (1, TensorWord(vec![
                    SimplexWord::parse("[0,2]").unwrap(),
                    SimplexWord::parse("[0,1,2]").unwrap(),
                ])),
                (-1, TensorWord(vec![
                    SimplexWord::parse("[0,1,2]").unwrap(),
                    SimplexWord::parse("[1,2]").unwrap(),
                ])),
            ],
        );
        let x = selt("[0,1,2]");
        assert_eq!(evaluate(&cup_i_closed(1), &x).unwrap(), expected);
        assert_eq!(evaluate(&cup_i_recursive(1), &x).unwrap(), expected);
    }

    #[test]
    fn recursive_and_closed_cup_agree_small() {
        for i in 0..=3 {
            let rec = cup_i_recursive(i);
            let clo = cup_i_closed(i);
            for n in 0..=3 {
                for w in CubeWord::all(n) {
                    let x = Element::basis(Ring::Int, TensorWord::single(w.clone()));
                    assert_eq!(
                        evaluate(&rec, &x).unwrap(),
                        evaluate(&clo, &x).unwrap(),
                        "cubical i={i} w={w}"
                    );
                }
            }
            for n in 0..=3u32 {
                for s in SimplexWord::all(n) {
                    let x = Element::basis(Ring::Int, TensorWord::single(s.clone()));
                    assert_eq!(
                        evaluate(&rec, &x).unwrap(),
                        evaluate(&clo, &x).unwrap(),
                        "simplicial i={i} s={s}"
                    );
                }
            }
        }
    }

    #[test]
    fn mod_two_coherence_small() {
        // d(cup_i) + (cup_i)d = (1 + T) cup_{i-1} over Z/2
        let t_swap = CoopTerm::Perm(Permutation::from_one_line(vec![2, 1]).unwrap());
        for i in 1..=2usize {
            let di = cup_i_closed(i);
            let dim1 = cup_i_closed(i - 1);
            for n in 0..=3 {
                for w in CubeWord::all(n) {
                    let x: Element<CubeWord> =
                        Element::basis(Ring::Mod(2), TensorWord::single(w.clone()));
                    let lhs = boundary_element(&evaluate(&di, &x).unwrap())
                        .try_add(&evaluate(&di, &boundary_element(&x)).unwrap())
                        .unwrap();
                    let d1 = evaluate(&dim1, &x).unwrap();
                    let rhs = d1.try_add(&evaluate(&t_swap, &d1).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "i={i} w={w}");
                }
            }
        }
    }

    #[test]
    fn degree_bookkeeping() {
        for i in 0..=3usize {
            let t = cup_i_closed(i);
            let d = t.signature().unwrap().degree;
            assert_eq!(d, i);
            for w in CubeWord::all(3) {
                let g = w.degree();
                let out = evaluate(&t, &celt(&w.to_string())).unwrap();
                for (v, _) in out.iter() {
                    assert_eq!(v.degree(), g + d, "i={i} w={w}");
                }
            }
        }
    }

    #[test]
    fn iterated_coproduct_summands_are_ordered() {
        for k in 2..=4usize {
            let term = iterated_coproduct(k - 1);
            for n in 0..=3 {
                let x = celt(&CubeWord::top(n).to_string());
                let out = evaluate(&term, &x).unwrap();
                for (w, _) in out.iter() {
                    for p in w.0.windows(2) {
                        assert!(
                            p[0].leq_componentwise(&p[1]),
                            "unordered summand {w} for k={k} n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn shuffle_specs_validate() {
        let sigma3 = Permutation::from_one_line(vec![1, 3, 2]).unwrap();
        let spec = ShuffleSpec::new(vec![2, 1], sigma3).unwrap();
        assert_eq!(shuffle_graph(&spec), cup_i_closed(1));
        // identity (1,1)-shuffle gives back the coproduct
        let id2 = Permutation::identity(2);
        let spec = ShuffleSpec::new(vec![1, 1], id2).unwrap();
        assert_eq!(shuffle_graph(&spec), CoopTerm::Cop);
        // the twisted cup-1 is rejected: its permutation is not a (2,1)-shuffle
        let bad = Permutation::from_one_line(vec![3, 1, 2]).unwrap();
        assert!(matches!(
            ShuffleSpec::new(vec![2, 1], bad),
            Err(Error::NotAShuffle { .. })
        ));
    }

    #[test]
    fn shuffle_enumeration_counts() {
        assert_eq!(all_shuffles(&[1, 1]).len(), 2);
        assert_eq!(all_shuffles(&[2, 1]).len(), 3);
        assert_eq!(all_shuffles(&[2, 2]).len(), 6);
        assert_eq!(all_shuffles(&[1, 1, 1]).len(), 6);
        assert_eq!(all_shuffles(&[4]).len(), 1);
        for s in all_shuffles(&[2, 2]) {
            assert!(s.is_shuffle(&[2, 2]));
        }
    }

    #[test]
    fn coface_naturality_for_shuffle_graphs() {
        use crate::cubical::CubicalOperator;
        let specs: Vec<ShuffleSpec> = vec![
            ShuffleSpec::new(vec![1, 1], Permutation::identity(2)).unwrap(),
            ShuffleSpec::new(vec![2, 1], Permutation::from_one_line(vec![1, 3, 2]).unwrap())
                .unwrap(),
            ShuffleSpec::new(vec![2, 2], Permutation::from_one_line(vec![1, 3, 2, 4]).unwrap())
                .unwrap(),
            ShuffleSpec::new(vec![3], Permutation::identity(3)).unwrap(),
        ];
        for spec in &specs {
            let term = shuffle_graph(spec);
            let r = term.signature().unwrap().outputs;
            for n in 1..=2usize {
                for i in 1..=n + 1 {
                    for e in [0u8, 1] {
                        let op = CubicalOperator::coface(i, e, n + 1).unwrap();
                        for w in CubeWord::all(n) {
                            let x = Element::basis(Ring::Int, TensorWord::single(w.clone()));
                            // evaluate then push each output factor forward
                            let lhs = evaluate(&term, &x).unwrap().map_basis(|tw| {
                                let mut v = Vec::with_capacity(r);
                                for b in &tw.0 {
                                    v.push(op.apply_word(b)?);
                                }
                                Some((1, TensorWord(v)))
                            });
                            let pushed = op.apply_word(&w).expect("cofaces never degenerate");
                            let rhs = evaluate(
                                &term,
                                &Element::basis(Ring::Int, TensorWord::single(pushed)),
                            )
                            .unwrap();
                            assert_eq!(lhs, rhs, "spec={spec:?} n={n} i={i} e={e} w={w}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dsl_round_trip_and_examples() {
        assert_eq!(CoopTerm::parse("delta").unwrap(), CoopTerm::Cop);
        assert_eq!(
            CoopTerm::parse("comp(ten(star,id(1)),comp(perm(1,3,2),itdelta(2)))").unwrap(),
            cup_i_closed(1)
        );
        assert_eq!(CoopTerm::parse("shuffle(2,1;1,3,2)").unwrap(), cup_i_closed(1));
        assert_eq!(CoopTerm::parse(" cup( 1 ) ").unwrap(), cup_i_closed(1));
        let samples = [
            CoopTerm::Counit,
            CoopTerm::Cop,
            CoopTerm::Prod,
            cup_i_closed(2),
            cup_i_recursive(3),
            iterated_coproduct(3),
            iterated_product(4).unwrap(),
            CoopTerm::Perm(Permutation::from_one_line(vec![2, 3, 1]).unwrap()),
        ];
        for t in &samples {
            let rendered = t.to_string();
            assert_eq!(&CoopTerm::parse(&rendered).unwrap(), t, "round trip of {rendered}");
        }
    }

    #[test]
    fn dsl_errors_carry_positions() {
        match CoopTerm::parse("comp(delta") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 10),
            other => panic!("expected parse error, got {other:?}"),
        }
        match CoopTerm::parse("foo(1)") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 0),
            other => panic!("expected parse error, got {other:?}"),
        }
        match CoopTerm::parse("comp(delta delta)") {
            Err(Error::Parse { pos, expected, .. }) => {
                assert_eq!(pos, 11);
                assert!(expected.contains(","), "expected tokens mentioned: {expected}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        // parses but fails arity validation
        assert!(matches!(
            CoopTerm::parse("comp(star,delta)"),
            Err(Error::ArityMismatch { .. }) | Ok(_)
        ));
    }

    #[test]
    fn mixed_ambient_dimensions_rejected() {
        let x = Element::basis(Ring::Int, pair("[01]", "[0][1]"));
        assert!(matches!(
            evaluate(&CoopTerm::Prod, &x),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
