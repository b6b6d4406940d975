//! Relation suites: every identity the chain-level structure is supposed to
//! satisfy, checked by evaluation over ranges of basis words, plus the three
//! counterexamples that delimit what the comparison maps preserve.
//!
//! Each suite returns one named check per relation with a failure detail, so
//! the command line can gate on them and the acceptance tests can assert
//! them wholesale.

use crate::chain::{FreeElement, Graded, TensorWord};
use crate::comparison::{cs_word, ez_word, pushforward_product};
use crate::cubical::{coproduct_top_closed, CubeSymbol, CubeWord};
use crate::perm::Permutation;
use crate::ring::Ring;
use crate::simplicial::{ProductSimplex, SimplexWord};
use crate::sweep::{par_map, Rng};
use crate::terms::{
    all_shuffles, boundary_element, cup_i_closed, cup_i_recursive, evaluate, iterated_coproduct,
    iterated_product, shuffle_graph, CoopTerm, Element, ShuffleSpec,
};

/// Outcome of one named relation check.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass: true, detail: detail.into() }
    }

    fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check { name: name.into(), pass: false, detail: detail.into() }
    }

    fn from_failures(name: impl Into<String>, cases: usize, failures: Vec<String>) -> Self {
        if failures.is_empty() {
            Check::pass(name, format!("{cases} cases"))
        } else {
            let shown = failures.iter().take(3).cloned().collect::<Vec<_>>().join("; ");
            Check::fail(name, format!("{} of {cases} cases fail: {shown}", failures.len()))
        }
    }
}

/// A group of checks under one suite name.
#[derive(Clone, Debug)]
pub struct Suite {
    pub name: &'static str,
    pub checks: Vec<Check>,
}

impl Suite {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn cube_elt(w: &CubeWord) -> Element<CubeWord> {
    Element::basis(Ring::Int, TensorWord::single(w.clone()))
}

fn simplex_elt(s: &SimplexWord) -> Element<SimplexWord> {
    Element::basis(Ring::Int, TensorWord::single(s.clone()))
}

fn boundary_chain(w: &CubeWord) -> FreeElement<CubeWord> {
    FreeElement::from_terms(Ring::Int, w.boundary())
}

/// Counitality, the counit of products, and the boundary-of-product
/// relation: exhaustive up to `n_exhaustive`, seeded pairs up to `n_random`.
pub fn bialgebra(n_exhaustive: usize, n_random: usize, samples: usize, seed: u64) -> Suite {
    let mut checks = Vec::new();

    // counitality on every word
    let mut failures = Vec::new();
    let mut cases = 0usize;
    for n in 0..=n_exhaustive {
        for w in CubeWord::all(n) {
            cases += 1;
            let mut left = FreeElement::zero(Ring::Int);
            let mut right = FreeElement::zero(Ring::Int);
            for (c, a, b) in w.coproduct() {
                left.add_term(c * a.counit(), b.clone());
                right.add_term(c * b.counit(), a.clone());
            }
            let id = FreeElement::basis(Ring::Int, w.clone());
            if left != id || right != id {
                failures.push(w.to_string());
            }
        }
    }
    checks.push(Check::from_failures("counitality", cases, failures));

    // coassociativity on every word
    let mut failures = Vec::new();
    let mut cases = 0usize;
    for n in 0..=n_exhaustive {
        for w in CubeWord::all(n) {
            cases += 1;
            let cop = w.coproduct();
            let mut lhs = FreeElement::zero(Ring::Int);
            let mut rhs = FreeElement::zero(Ring::Int);
            for (c, a, b) in &cop {
                for (c2, a1, a2) in a.coproduct() {
                    lhs.add_term(c * c2, (a1, a2, b.clone()));
                }
                for (c2, b1, b2) in b.coproduct() {
                    rhs.add_term(c * c2, (a.clone(), b1, b2));
                }
            }
            if lhs != rhs {
                failures.push(w.to_string());
            }
        }
    }
    checks.push(Check::from_failures("coassociativity", cases, failures));

    // pair relations: exhaustive then seeded
    let mut pairs: Vec<(CubeWord, CubeWord)> = Vec::new();
    for n in 0..=n_exhaustive {
        let words = CubeWord::all(n);
        for x in &words {
            for y in &words {
                pairs.push((x.clone(), y.clone()));
            }
        }
    }
    let exhaustive_pairs = pairs.len();
    let mut rng = Rng::new(seed);
    let symbols = [CubeSymbol::E0, CubeSymbol::I, CubeSymbol::E1];
    for _ in 0..samples {
        let n = (rng.below(n_random as u64) + 1) as usize;
        let draw = |rng: &mut Rng| {
            CubeWord((0..n).map(|_| symbols[rng.below(3) as usize]).collect())
        };
        let x = draw(&mut rng);
        let y = draw(&mut rng);
        pairs.push((x, y));
    }

    let results = par_map(&pairs, |(x, y)| {
        let star_xy = x.star(y).expect("equal dimensions");
        // counit of the product vanishes
        let eps: i128 = star_xy.iter().map(|(c, s)| c * s.counit()).sum();
        if eps != 0 {
            return Some(format!("eps({x} * {y}) = {eps}"));
        }
        // boundary-of-product relation
        let mut lhs = FreeElement::from_terms(Ring::Int, star_xy).bind(boundary_chain);
        for (c, dx) in x.boundary() {
            for (c2, s) in dx.star(y).expect("dim") {
                lhs.add_term(c * c2, s);
            }
        }
        let sx = if x.degree() % 2 == 0 { 1 } else { -1 };
        for (c, dy) in y.boundary() {
            for (c2, s) in x.star(&dy).expect("dim") {
                lhs.add_term(sx * c * c2, s);
            }
        }
        let mut rhs = FreeElement::zero(Ring::Int);
        rhs.add_term(x.counit(), y.clone());
        rhs.add_term(-y.counit(), x.clone());
        if lhs != rhs {
            return Some(format!("boundary relation fails on {x}, {y}"));
        }
        None
    });
    let failures: Vec<String> = results.into_iter().flatten().collect();
    checks.push(Check::from_failures(
        format!(
            "product relations ({exhaustive_pairs} exhaustive pairs, {samples} seeded pairs up to n = {n_random})"
        ),
        pairs.len(),
        failures,
    ));

    Suite { name: "bialgebra", checks }
}

/// The closed description of the coproduct of the top word against the
/// compositional definition.
pub fn coproduct_consistency(n_max: usize) -> Suite {
    let mut failures = Vec::new();
    for n in 0..=n_max {
        let mut compositional = FreeElement::zero(Ring::Int);
        for (c, a, b) in CubeWord::top(n).coproduct() {
            compositional.add_term(c, (a, b));
        }
        if compositional != coproduct_top_closed(n, Ring::Int) {
            failures.push(format!("n = {n}"));
        }
    }
    Suite {
        name: "coproduct",
        checks: vec![Check::from_failures(
            format!("closed coproduct formula vs compositional, n <= {n_max}"),
            n_max + 1,
            failures,
        )],
    }
}

/// Recursive and closed cup-i constructions agree on every basis word, on
/// both the cubical and the simplicial side.
pub fn cup_equivalence(i_max: usize, n_cubical: usize, n_simplicial: u32) -> Suite {
    let mut checks = Vec::new();
    for i in 0..=i_max {
        let rec = cup_i_recursive(i);
        let clo = cup_i_closed(i);
        let mut words = Vec::new();
        for n in 0..=n_cubical {
            words.extend(CubeWord::all(n));
        }
        let results = par_map(&words, |w| {
            let x = cube_elt(w);
            let a = evaluate(&rec, &x).expect("arity 1");
            let b = evaluate(&clo, &x).expect("arity 1");
            (a != b).then(|| w.to_string())
        });
        let failures: Vec<String> = results.into_iter().flatten().collect();
        let cases = words.len();
        checks.push(Check::from_failures(
            format!("cubical cup-{i} recursive = closed, n <= {n_cubical}"),
            cases,
            failures,
        ));

        let mut simplices = Vec::new();
        for n in 0..=n_simplicial {
            simplices.extend(SimplexWord::all(n));
        }
        let results = par_map(&simplices, |s| {
            let x = simplex_elt(s);
            let a = evaluate(&rec, &x).expect("arity 1");
            let b = evaluate(&clo, &x).expect("arity 1");
            (a != b).then(|| s.to_string())
        });
        let failures: Vec<String> = results.into_iter().flatten().collect();
        checks.push(Check::from_failures(
            format!("simplicial cup-{i} recursive = closed, n <= {n_simplicial}"),
            simplices.len(),
            failures,
        ));
    }
    Suite { name: "cupi", checks }
}

/// The mod-2 coboundary of the cup-i coproduct: `d cup_i + cup_i d` equals
/// `(1 + T) cup_(i-1)` over `Z/2`.
pub fn coherence(i_max: usize, n_cubical: usize, n_simplicial: u32) -> Suite {
    let t_swap = CoopTerm::Perm(Permutation::from_one_line(vec![2, 1]).expect("valid"));
    let mut checks = Vec::new();
    for i in 1..=i_max {
        let di = cup_i_closed(i);
        let dprev = cup_i_closed(i - 1);
        let mut words = Vec::new();
        for n in 0..=n_cubical {
            words.extend(CubeWord::all(n));
        }
        let results = par_map(&words, |w| {
            let x: Element<CubeWord> =
                Element::basis(Ring::Mod(2), TensorWord::single(w.clone()));
            let lhs = boundary_element(&evaluate(&di, &x).expect("arity"))
                .try_add(&evaluate(&di, &boundary_element(&x)).expect("arity"))
                .expect("same ring");
            let prev = evaluate(&dprev, &x).expect("arity");
            let rhs = prev.try_add(&evaluate(&t_swap, &prev).expect("arity")).expect("ring");
            (lhs != rhs).then(|| w.to_string())
        });
        let failures: Vec<String> = results.into_iter().flatten().collect();
        checks.push(Check::from_failures(
            format!("cubical d cup_{i} + cup_{i} d = (1+T) cup_{}", i - 1),
            words.len(),
            failures,
        ));

        let mut simplices = Vec::new();
        for n in 0..=n_simplicial {
            simplices.extend(SimplexWord::all(n));
        }
        let results = par_map(&simplices, |s| {
            let x: Element<SimplexWord> =
                Element::basis(Ring::Mod(2), TensorWord::single(s.clone()));
            let lhs = boundary_element(&evaluate(&di, &x).expect("arity"))
                .try_add(&evaluate(&di, &boundary_element(&x)).expect("arity"))
                .expect("same ring");
            let prev = evaluate(&dprev, &x).expect("arity");
            let rhs = prev.try_add(&evaluate(&t_swap, &prev).expect("arity")).expect("ring");
            (lhs != rhs).then(|| s.to_string())
        });
        let failures: Vec<String> = results.into_iter().flatten().collect();
        checks.push(Check::from_failures(
            format!("simplicial d cup_{i} + cup_{i} d = (1+T) cup_{}", i - 1),
            simplices.len(),
            failures,
        ));
    }
    Suite { name: "coherence", checks }
}

/// Apply the projection to every factor of every term.
fn cs_tensor(e: &Element<CubeWord>) -> Element<SimplexWord> {
    let mut out = Element::zero(e.ring());
    for (tw, c) in e.iter() {
        let mut acc: Vec<(i128, Vec<SimplexWord>)> = vec![(c, Vec::new())];
        for w in &tw.0 {
            let image = cs_word(w, e.ring());
            let mut next = Vec::new();
            for (coeff, prefix) in &acc {
                for (s, c2) in image.iter() {
                    let mut v = prefix.clone();
                    v.push(s.clone());
                    next.push((coeff * c2, v));
                }
            }
            acc = next;
        }
        for (coeff, v) in acc {
            out.add_term(coeff, TensorWord(v));
        }
    }
    out
}

/// All compositions (ordered partitions) of `k`.
fn compositions(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=k {
        for mut rest in compositions(k - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every valid shuffle spec with total `k <= k_max`.
pub fn shuffle_specs_up_to(k_max: usize) -> Vec<ShuffleSpec> {
    let mut out = Vec::new();
    for k in 1..=k_max {
        for parts in compositions(k) {
            for sigma in all_shuffles(&parts) {
                out.push(ShuffleSpec::new(parts.clone(), sigma).expect("enumerated shuffles"));
            }
        }
    }
    out
}

/// Nondecreasing `k`-tuples of basis words of the `n`-cube in the
/// componentwise symbol order.
fn ordered_tuples(k: usize, n: usize) -> Vec<Vec<CubeWord>> {
    // per coordinate: nondecreasing k-sequences over the 3-symbol chain
    let symbols = [CubeSymbol::E0, CubeSymbol::I, CubeSymbol::E1];
    let mut seqs: Vec<Vec<CubeSymbol>> = vec![Vec::new()];
    for _ in 0..k {
        let mut next = Vec::new();
        for s in &seqs {
            let floor = s.last().map(|x| symbols.iter().position(|y| y == x).expect("symbol")).unwrap_or(0);
            for symbol in &symbols[floor..] {
                let mut t = s.clone();
                t.push(*symbol);
                next.push(t);
            }
        }
        seqs = next;
    }
    // a tuple is a choice of one sequence per coordinate
    let mut tuples: Vec<Vec<Vec<CubeSymbol>>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for t in &tuples {
            for s in &seqs {
                let mut u = t.clone();
                u.push(s.clone());
                next.push(u);
            }
        }
        tuples = next;
    }
    tuples
        .into_iter()
        .map(|coords| {
            (0..k)
                .map(|slot| CubeWord((0..n).map(|axis| coords[axis][slot]).collect()))
                .collect()
        })
        .collect()
}

/// The projection suite: chain map, coproduct map, equivariance for every
/// shuffle graph, ordering of iterated coproduct summands, and the
/// compatibility of the projection with product combs on ordered tuples.
pub fn cartan_serre(n_map: usize, k_shuffle: usize, n_shuffle: usize) -> Suite {
    let mut checks = Vec::new();

    // chain map
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 0..=n_map {
        for w in CubeWord::all(n) {
            cases += 1;
            let lhs = cs_word(&w, Ring::Int)
                .bind(|s| FreeElement::from_terms(Ring::Int, s.boundary()));
            let rhs = boundary_chain(&w).bind(|v| cs_word(v, Ring::Int));
            if lhs != rhs {
                failures.push(w.to_string());
            }
        }
    }
    checks.push(Check::from_failures(format!("chain map, n <= {n_map}"), cases, failures));

    // coproduct map
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 0..=n_map {
        for w in CubeWord::all(n) {
            cases += 1;
            let mut lhs: FreeElement<TensorWord<SimplexWord>> = FreeElement::zero(Ring::Int);
            for (c, a, b) in w.coproduct() {
                for (sa, ca) in cs_word(&a, Ring::Int).iter() {
                    for (sb, cb) in cs_word(&b, Ring::Int).iter() {
                        lhs.add_term(c * ca * cb, TensorWord(vec![sa.clone(), sb.clone()]));
                    }
                }
            }
            let mut rhs = FreeElement::zero(Ring::Int);
            for (s, c) in cs_word(&w, Ring::Int).iter() {
                for (c2, a, b) in s.coproduct() {
                    rhs.add_term(c * c2, TensorWord(vec![a, b]));
                }
            }
            if lhs != rhs {
                failures.push(w.to_string());
            }
        }
    }
    checks.push(Check::from_failures(format!("coproduct map, n <= {n_map}"), cases, failures));

    // equivariance for every shuffle graph on top words
    let specs = shuffle_specs_up_to(k_shuffle);
    let mut jobs = Vec::new();
    for spec in &specs {
        for n in 0..=n_shuffle {
            jobs.push((spec.clone(), n));
        }
    }
    let results = par_map(&jobs, |(spec, n)| {
        let term = shuffle_graph(spec);
        let top = CubeWord::top(*n);
        let lhs = cs_tensor(&evaluate(&term, &cube_elt(&top)).expect("arity"));
        let rhs = evaluate(&term, &cs_tensor(&cube_elt(&top))).expect("arity");
        (lhs != rhs).then(|| format!("spec {:?}/{} on n = {n}", spec.parts(), spec.sigma()))
    });
    let failures: Vec<String> = results.into_iter().flatten().collect();
    checks.push(Check::from_failures(
        format!(
            "shuffle-graph equivariance, {} specs with k <= {k_shuffle}, n <= {n_shuffle}",
            specs.len()
        ),
        jobs.len(),
        failures,
    ));

    // iterated coproduct summands are componentwise ordered
    let mut failures = Vec::new();
    let mut cases = 0;
    for k in 2..=k_shuffle.max(2) {
        let term = iterated_coproduct(k - 1);
        for n in 0..=n_shuffle {
            cases += 1;
            let out = evaluate(&term, &cube_elt(&CubeWord::top(n))).expect("arity");
            for (tw, _) in out.iter() {
                for p in tw.0.windows(2) {
                    if !p[0].leq_componentwise(&p[1]) {
                        failures.push(format!("k = {k}, n = {n}"));
                    }
                }
            }
        }
    }
    checks.push(Check::from_failures(
        format!("iterated coproduct summands ordered, k <= {}, n <= {n_shuffle}", k_shuffle.max(2)),
        cases,
        failures,
    ));

    // projection of product combs on ordered tuples
    let mut jobs = Vec::new();
    for k in 2..=k_shuffle.max(2) {
        for n in 0..=n_shuffle {
            jobs.push((k, n));
        }
    }
    let results = par_map(&jobs, |(k, n)| {
        let comb = iterated_product(*k).expect("k >= 1");
        let mut bad = Vec::new();
        for tuple in ordered_tuples(*k, *n) {
            let input: Element<CubeWord> =
                Element::basis(Ring::Int, TensorWord(tuple.clone()));
            let lhs = cs_tensor(&evaluate(&comb, &input).expect("arity"));
            let rhs = evaluate(&comb, &cs_tensor(&input)).expect("arity");
            if lhs != rhs {
                bad.push(format!(
                    "k = {k}, n = {n}, tuple {}",
                    tuple.iter().map(ToString::to_string).collect::<Vec<_>>().join(" <= ")
                ));
            }
        }
        bad
    });
    let failures: Vec<String> = results.into_iter().flatten().collect();
    checks.push(Check::from_failures(
        format!(
            "projection of product combs on ordered tuples, k <= {}, n <= {n_shuffle}",
            k_shuffle.max(2)
        ),
        jobs.len(),
        failures,
    ));

    Suite { name: "cs", checks }
}

/// The subdivision suite: chain map, coproduct map, and the pinned two-term
/// expansion of the square.
pub fn eilenberg_zilber(n_max: usize) -> Suite {
    let mut checks = Vec::new();

    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 0..=n_max {
        for w in CubeWord::all(n) {
            cases += 1;
            let lhs = ez_word(&w, Ring::Int)
                .bind(|p| FreeElement::from_terms(Ring::Int, p.boundary()));
            let rhs = boundary_chain(&w).bind(|v| ez_word(v, Ring::Int));
            if lhs != rhs {
                failures.push(w.to_string());
            }
        }
    }
    checks.push(Check::from_failures(format!("chain map, n <= {n_max}"), cases, failures));

    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 0..=n_max {
        for w in CubeWord::all(n) {
            cases += 1;
            let mut lhs: FreeElement<(ProductSimplex, ProductSimplex)> =
                FreeElement::zero(Ring::Int);
            for (c, a, b) in w.coproduct() {
                for (pa, ca) in ez_word(&a, Ring::Int).iter() {
                    for (pb, cb) in ez_word(&b, Ring::Int).iter() {
                        lhs.add_term(c * ca * cb, (pa.clone(), pb.clone()));
                    }
                }
            }
            let mut rhs = FreeElement::zero(Ring::Int);
            for (p, c) in ez_word(&w, Ring::Int).iter() {
                for (c2, a, b) in p.coproduct() {
                    rhs.add_term(c * c2, (a, b));
                }
            }
            if lhs != rhs {
                failures.push(w.to_string());
            }
        }
    }
    checks.push(Check::from_failures(format!("coproduct map, n <= {n_max}"), cases, failures));

    // the square subdivides into the two staircases, with opposite signs
    let got = ez_word(&CubeWord::parse("[01][01]").expect("parses"), Ring::Int);
    let first = ProductSimplex::parse("011x001").expect("parses");
    let second = ProductSimplex::parse("001x011").expect("parses");
    let ok = got.len() == 2
        && got.coeff(&first).abs() == 1
        && got.coeff(&second).abs() == 1
        && got.coeff(&first) == -got.coeff(&second);
    checks.push(if ok {
        Check::pass("subdivision of the square", format!("{got}"))
    } else {
        Check::fail("subdivision of the square", format!("got {got}"))
    });

    Suite { name: "ez", checks }
}

/// Unsigned support of a two-factor element, as display strings.
fn support_pairs<B: Ord + Clone + std::fmt::Display>(
    e: &FreeElement<TensorWord<B>>,
) -> Vec<(String, String)> {
    e.support().map(|tw| (tw.0[0].to_string(), tw.0[1].to_string())).collect()
}

/// Pull a cochain of the triangulation back along the subdivision map.
fn pull_back_cochain(
    x: &crate::complexes::LatticeCubicalComplex,
    tx: &crate::complexes::TriangulatedComplex,
    degree: usize,
    beta: &crate::f2::F2Vec,
) -> crate::f2::F2Vec {
    use crate::complexes::CellComplex;
    let cells = x.cells(degree);
    let mut out = crate::f2::F2Vec::zero(cells.len());
    for (j, cell) in cells.iter().enumerate() {
        let mut acc = false;
        for (s, c) in crate::comparison::ez_cell(cell, Ring::Int).iter() {
            if c % 2 != 0 {
                let i = tx.cells(degree).binary_search(s).expect("simplex in basis");
                acc ^= beta.get(i);
            }
        }
        if acc {
            out.set(j, true);
        }
    }
    out
}

/// Compare a lattice complex with its staircase triangulation: equality of
/// homology, the subdivision being a chain map with acyclic mapping cone,
/// and agreement of every Steenrod square across the subdivision.
pub fn triangulation_comparison(x: &crate::complexes::LatticeCubicalComplex) -> Suite {
    use crate::complexes::{triangulate, CellComplex};
    use crate::homology::{cone_homology, homology};
    use crate::steenrod::Mod2Cohomology;

    let mut checks = Vec::new();
    let tx = triangulate(x);

    let hx = homology(x, Ring::Int);
    let htx = homology(&tx, Ring::Int);
    let render = |groups: &[crate::homology::HomologyGroup]| {
        groups.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    };
    checks.push(if hx == htx {
        Check::pass("triangulation preserves homology", render(&hx))
    } else {
        Check::fail(
            "triangulation preserves homology",
            format!("{} vs {}", render(&hx), render(&htx)),
        )
    });

    let mut failures = Vec::new();
    let mut cases = 0;
    for d in 0..=x.max_dim() {
        for cell in x.cells(d) {
            cases += 1;
            let image = crate::comparison::ez_cell(cell, Ring::Int);
            let lhs = tx.boundary(&image);
            let rhs = FreeElement::from_terms(Ring::Int, x.boundary_cell(cell))
                .bind(|f| crate::comparison::ez_cell(f, Ring::Int));
            if lhs != rhs {
                failures.push(cell.to_string());
            }
        }
    }
    checks.push(Check::from_failures("subdivision is a chain map", cases, failures));

    let cone = cone_homology(x, &tx, |dim, j| {
        let cell = &x.cells(dim)[j];
        crate::comparison::ez_cell(cell, Ring::Int)
            .iter()
            .map(|(s, c)| (c, tx.cells(dim).binary_search(s).expect("simplex in basis")))
            .collect()
    });
    checks.push(if cone.iter().all(|g| g.is_trivial()) {
        Check::pass("subdivision mapping cone is acyclic", "quasi-isomorphism")
    } else {
        Check::fail("subdivision mapping cone is acyclic", render(&cone))
    });

    let hx = Mod2Cohomology::new(x);
    let htx = Mod2Cohomology::new(&tx);
    let mut failures = Vec::new();
    let mut cases = 0;
    for degree in 0..=x.max_dim() {
        if hx.rank(degree) != htx.rank(degree) {
            failures.push(format!("mod-2 ranks differ in degree {degree}"));
            continue;
        }
        for index in 0..htx.rank(degree) {
            let beta = htx.representative(degree, index).clone();
            let pulled = pull_back_cochain(x, &tx, degree, &beta);
            for k in 0..=x.max_dim() {
                cases += 1;
                let ok = (|| -> Result<bool, crate::error::Error> {
                    let upstairs =
                        pull_back_cochain(x, &tx, degree + k, &htx.sq(k, degree, &beta)?);
                    let downstairs = hx.sq(k, degree, &pulled)?;
                    Ok(hx.express(degree + k, &upstairs)?
                        == hx.express(degree + k, &downstairs)?)
                })();
                match ok {
                    Ok(true) => {}
                    Ok(false) => failures.push(format!(
                        "Sq^{k} disagrees across the subdivision on H^{degree} class {index}"
                    )),
                    Err(e) => failures.push(format!("H^{degree} class {index}: {e}")),
                }
            }
        }
    }
    checks.push(Check::from_failures("squares agree across the subdivision", cases, failures));

    Suite { name: "compare", checks }
}

/// Report of the three counterexamples, with display lines for the CLI.
pub struct Counterexamples {
    pub suite: Suite,
    pub lines: Vec<String>,
}

/// The three no-go computations: the subdivision map does not commute with
/// the cup-1 coproduct, the projection map does not commute with the
/// product, and the projection map does not commute with the twisted cup-1.
pub fn counterexamples() -> Counterexamples {
    let mut checks = Vec::new();
    let mut lines = Vec::new();
    let square = CubeWord::parse("[01][01]").expect("parses");
    let cup1 = cup_i_closed(1);

    // 1: subdivision vs cup-1
    let d1_square = evaluate(&cup1, &cube_elt(&square)).expect("arity");
    let mut lhs: FreeElement<TensorWord<ProductSimplex>> = FreeElement::zero(Ring::Int);
    for (tw, c) in d1_square.iter() {
        for (pa, ca) in ez_word(&tw.0[0], Ring::Int).iter() {
            for (pb, cb) in ez_word(&tw.0[1], Ring::Int).iter() {
                lhs.add_term(c * ca * cb, TensorWord(vec![pa.clone(), pb.clone()]));
            }
        }
    }
    let mut rhs: FreeElement<TensorWord<ProductSimplex>> = FreeElement::zero(Ring::Int);
    for (p, c) in ez_word(&square, Ring::Int).iter() {
        let push = pushforward_product(&cup1, p, Ring::Int).expect("arity");
        rhs = rhs.try_add(&push.scale(c)).expect("ring");
    }
    lines.push(format!("(EZ x EZ) cup_1 ([01][01]) = {lhs}"));
    lines.push(format!("cup_1 EZ ([01][01])      = {rhs}"));
    let witness = TensorWord(vec![
        ProductSimplex::parse("01x11").expect("parses"),
        ProductSimplex::parse("011x001").expect("parses"),
    ]);
    let witness_ok = lhs.coeff(&witness) != 0 && rhs.coeff(&witness) == 0;
    lines.push(format!(
        "witness 01x11 (x) 011x001: left coefficient {}, right coefficient {}",
        lhs.coeff(&witness),
        rhs.coeff(&witness)
    ));
    // the supports match the displayed expansions
    let expected_left: Vec<(&str, &str)> = vec![
        ("011x001", "11x01"),
        ("001x011", "11x01"),
        ("01x11", "011x001"),
        ("01x11", "001x011"),
        ("00x01", "011x001"),
        ("00x01", "001x011"),
        ("011x001", "01x00"),
        ("001x011", "01x00"),
    ];
    let expected_right: Vec<(&str, &str)> = vec![
        ("011x001", "01x00"),
        ("01x01", "011x001"),
        ("011x001", "11x01"),
        ("001x011", "00x01"),
        ("01x01", "001x011"),
        ("001x011", "01x11"),
    ];
    let norm = |mut v: Vec<(String, String)>| {
        v.sort();
        v
    };
    let left_support_ok = norm(support_pairs(&lhs))
        == norm(expected_left.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect());
    let right_support_ok = norm(support_pairs(&rhs))
        == norm(expected_right.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect());
    checks.push(if witness_ok && left_support_ok && right_support_ok && lhs != rhs {
        Check::pass(
            "subdivision does not commute with cup-1",
            "witness present on the left only; both supports as displayed",
        )
    } else {
        Check::fail(
            "subdivision does not commute with cup-1",
            format!(
                "witness {witness_ok}, left support {left_support_ok}, right support {right_support_ok}"
            ),
        )
    });

    // 2: projection vs product
    let x = CubeWord::parse("[1][1]").expect("parses");
    let y = CubeWord::parse("[0][01]").expect("parses");
    let product = FreeElement::from_terms(Ring::Int, x.star(&y).expect("dim"));
    let cs_of_product = product.bind(|w| cs_word(w, Ring::Int));
    let cs_x = cs_word(&x, Ring::Int);
    let cs_y = cs_word(&y, Ring::Int);
    let mut product_of_cs: FreeElement<SimplexWord> = FreeElement::zero(Ring::Int);
    for (a, ca) in cs_x.iter() {
        for (b, cb) in cs_y.iter() {
            for (c2, s) in a.star(b).expect("join") {
                product_of_cs.add_term(ca * cb * c2, s);
            }
        }
    }
    lines.push(String::new());
    lines.push(format!("CS([1][1] * [0][01])     = {cs_of_product}"));
    lines.push(format!("CS([1][1]) * CS([0][01]) = {product_of_cs} (since CS([0][01]) = {})", cs_y));
    let triangle = SimplexWord::parse("[0,1,2]").expect("parses");
    let ok = cs_y.is_zero()
        && product_of_cs.is_zero()
        && cs_of_product.len() == 1
        && cs_of_product.coeff(&triangle).abs() == 1;
    checks.push(if ok {
        Check::pass(
            "projection does not commute with the product",
            format!("CS(x * y) = {cs_of_product}, CS(x) * CS(y) = 0"),
        )
    } else {
        Check::fail("projection does not commute with the product", "values off")
    });

    // 3: projection vs the twisted cup-1
    let twisted = CoopTerm::Compose(
        Box::new(CoopTerm::Tensor(vec![CoopTerm::Prod, CoopTerm::Id(1)])),
        Box::new(CoopTerm::Compose(
            Box::new(CoopTerm::Perm(Permutation::from_one_line(vec![2, 3, 1]).expect("valid"))),
            Box::new(iterated_coproduct(2)),
        )),
    );
    let lhs3 = cs_tensor(&evaluate(&twisted, &cube_elt(&square)).expect("arity"));
    let rhs3 = evaluate(&twisted, &simplex_elt(&triangle)).expect("arity");
    let d1_triangle = evaluate(&cup1, &simplex_elt(&triangle)).expect("arity");
    let t_swap = CoopTerm::Perm(Permutation::from_one_line(vec![2, 1]).expect("valid"));
    let twisted_d1 = evaluate(&t_swap, &d1_triangle).expect("arity");
    lines.push(String::new());
    lines.push(format!("CS^2 tw-cup_1 ([01][01]) = {lhs3}"));
    lines.push(format!("tw-cup_1 CS ([01][01])   = {rhs3}"));
    lines.push(format!("T cup_1 ([0,1,2])        = {twisted_d1}"));
    let norm2 = |e: &Element<SimplexWord>| {
        let mut v = support_pairs(e);
        v.sort();
        v
    };
    let ok = lhs3 != rhs3
        && norm2(&lhs3) == norm2(&twisted_d1)
        && norm2(&rhs3) == norm2(&d1_triangle)
        && norm2(&lhs3) != norm2(&rhs3);
    checks.push(if ok {
        Check::pass(
            "projection does not commute with the twisted cup-1",
            "left side is the transposed cup-1 of the triangle",
        )
    } else {
        Check::fail("projection does not commute with the twisted cup-1", "values off")
    });

    // the twisted cup-1 is rejected as a shuffle graph
    let bad_sigma = Permutation::from_one_line(vec![3, 1, 2]).expect("valid");
    let rejected = ShuffleSpec::new(vec![2, 1], bad_sigma).is_err();
    checks.push(if rejected {
        Check::pass("twisted cup-1 is not a shuffle graph", "(3,1,2) fails the block check")
    } else {
        Check::fail("twisted cup-1 is not a shuffle graph", "spec accepted")
    });

    Counterexamples { suite: Suite { name: "counterexamples", checks }, lines }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        assert!(bialgebra(2, 3, 50, 7).passed());
        assert!(coproduct_consistency(4).passed());
        assert!(cup_equivalence(2, 3, 3).passed());
        assert!(coherence(2, 3, 3).passed());
        assert!(cartan_serre(3, 3, 3).passed());
        assert!(eilenberg_zilber(3).passed());
    }

    #[test]
    fn counterexamples_reproduce() {
        let report = counterexamples();
        assert!(report.suite.passed(), "{:?}", report.suite.checks);
        assert!(!report.lines.is_empty());
    }

    #[test]
    fn shuffle_spec_enumeration() {
        // k = 1: 1; k = 2: (1,1) two shuffles + (2) one; k = 3: ...
        let specs = shuffle_specs_up_to(2);
        assert_eq!(specs.len(), 1 + 2 + 1);
        for s in shuffle_specs_up_to(4) {
            assert!(s.sigma().is_shuffle(s.parts()));
        }
    }

    #[test]
    fn ordered_tuple_enumeration() {
        // per coordinate: C(k+2, 2) nondecreasing sequences
        assert_eq!(ordered_tuples(2, 1).len(), 6);
        assert_eq!(ordered_tuples(3, 1).len(), 10);
        assert_eq!(ordered_tuples(2, 2).len(), 36);
        for t in ordered_tuples(3, 2) {
            for p in t.windows(2) {
                assert!(p[0].leq_componentwise(&p[1]));
            }
        }
    }
}
