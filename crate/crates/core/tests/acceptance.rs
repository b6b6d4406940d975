//! Acceptance suite: the guarantees the library makes, each checked at its
//! stated range and printing one line. Run with `--nocapture` to see them:
//!
//! ```text
//! cargo test -p einfty --test acceptance -- --nocapture
//! ```

use std::time::Instant;

use einfty::chain::FreeElement;
use einfty::complexes::{
    triangulate, AnyComplex, CellComplex, LatticeCubicalComplex, PresentedCubicalSet,
    SimplicialComplex,
};
use einfty::cubical::CubeWord;
use einfty::homology::{homology, HomologyGroup};
use einfty::ring::Ring;
use einfty::steenrod::Mod2Cohomology;
use einfty::suites;
use einfty::Error;

const HOLLOW_SQUARE: &str = include_str!("../../../data/hollow_square.json");
const SOLID_SQUARE: &str = include_str!("../../../data/solid_square.json");
const HOLLOW_CUBE: &str = include_str!("../../../data/hollow_cube.json");
const TORUS: &str = include_str!("../../../data/torus.json");
const RP2: &str = include_str!("../../../data/rp2.json");
const SPHERE: &str = include_str!("../../../data/sphere.json");

fn report(number: usize, name: &str, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE {number:2}  {name}: {verdict}  ({detail})");
    assert!(pass, "criterion {number} ({name}) failed: {detail}");
}

fn suite_detail(suite: &suites::Suite) -> String {
    suite
        .checks
        .iter()
        .map(|c| format!("{} {}", c.name, if c.pass { "ok" } else { &c.detail }))
        .collect::<Vec<_>>()
        .join("; ")
}

fn lattice(src: &str) -> LatticeCubicalComplex {
    match AnyComplex::from_json(src).expect("fixture parses") {
        AnyComplex::Lattice(x) => x,
        _ => panic!("fixture is not a lattice complex"),
    }
}

fn presented(src: &str) -> PresentedCubicalSet {
    match AnyComplex::from_json(src).expect("fixture parses") {
        AnyComplex::Presented(x) => x,
        _ => panic!("fixture is not a presented cubical set"),
    }
}

fn simplicial(src: &str) -> SimplicialComplex {
    match AnyComplex::from_json(src).expect("fixture parses") {
        AnyComplex::Simplicial(x) => x,
        _ => panic!("fixture is not a simplicial complex"),
    }
}

#[test]
fn criterion_01_bialgebra_relations() {
    let start = Instant::now();
    let suite = suites::bialgebra(3, 6, 1000, 0x5eed);
    let elapsed = start.elapsed();
    let pass = suite.passed() && elapsed.as_secs_f64() < 5.0;
    report(
        1,
        "bialgebra relation suite",
        pass,
        &format!("{}; {:.2?}", suite_detail(&suite), elapsed),
    );
}

#[test]
fn criterion_02_worked_boundary_example() {
    let w = |s: &str| CubeWord::parse(s).expect("parses");
    let x = w("[0][0][0]");
    let y = w("[1][1][1]");
    let product = FreeElement::from_terms(Ring::Int, x.star(&y).expect("dim"));
    let expected = FreeElement::from_terms(
        Ring::Int,
        [(1, w("[01][1][1]")), (1, w("[0][01][1]")), (1, w("[0][0][01]"))],
    );
    let boundary =
        product.bind(|v| FreeElement::from_terms(Ring::Int, v.boundary()));
    let expected_boundary =
        FreeElement::from_terms(Ring::Int, [(1, w("[1][1][1]")), (-1, w("[0][0][0]"))]);
    report(
        2,
        "worked boundary example",
        product == expected && boundary == expected_boundary,
        &format!("product {product}; boundary {boundary}"),
    );
}

#[test]
fn criterion_03_coproduct_consistency() {
    let start = Instant::now();
    let suite = suites::coproduct_consistency(6);
    let elapsed = start.elapsed();
    let pass = suite.passed() && elapsed.as_secs_f64() < 5.0;
    report(3, "coproduct closed formula", pass, &format!("{}; {:.2?}", suite_detail(&suite), elapsed));
}

#[test]
fn criterion_04_cup_equivalence() {
    let suite = suites::cup_equivalence(4, 5, 5);
    report(4, "cup-i recursive = closed", suite.passed(), &suite_detail(&suite));
}

#[test]
fn criterion_05_mod_two_coherence() {
    let suite = suites::coherence(3, 5, 5);
    report(5, "mod-2 coboundary relation", suite.passed(), &suite_detail(&suite));
}

#[test]
fn criterion_06_cartan_serre() {
    let suite = suites::cartan_serre(5, 4, 4);
    report(6, "projection map suite", suite.passed(), &suite_detail(&suite));
}

#[test]
fn criterion_07_counterexamples() {
    let report_cx = suites::counterexamples();
    report(7, "counterexample reproduction", report_cx.suite.passed(), &suite_detail(&report_cx.suite));
}

#[test]
fn criterion_08_eilenberg_zilber() {
    let suite = suites::eilenberg_zilber(4);
    report(8, "subdivision map suite", suite.passed(), &suite_detail(&suite));
}

#[test]
fn criterion_09_homology_oracles() {
    let free = |ranks: &[usize]| -> Vec<HomologyGroup> {
        ranks.iter().map(|b| HomologyGroup::free(*b)).collect()
    };
    let mut failures: Vec<String> = Vec::new();

    let hollow_square = lattice(HOLLOW_SQUARE);
    if homology(&hollow_square, Ring::Int) != free(&[1, 1]) {
        failures.push("hollow square".into());
    }
    let hollow_cube = lattice(HOLLOW_CUBE);
    if homology(&hollow_cube, Ring::Int) != free(&[1, 0, 1]) {
        failures.push("hollow cube surface".into());
    }
    let solid_square = lattice(SOLID_SQUARE);
    if homology(&solid_square, Ring::Int) != free(&[1, 0, 0]) {
        failures.push("solid square".into());
    }
    let torus = presented(TORUS);
    if homology(&torus, Ring::Int) != free(&[1, 2, 1]) {
        failures.push("torus".into());
    }
    let rp2 = simplicial(RP2);
    let h = homology(&rp2, Ring::Int);
    if h != vec![
        HomologyGroup::free(1),
        HomologyGroup { betti: 0, torsion: vec![2] },
        HomologyGroup::free(0),
    ] {
        failures.push(format!("projective plane: {h:?}"));
    }

    // triangulation preserves homology and the subdivision map realizes
    // the isomorphism
    for (name, x) in [
        ("hollow square", &hollow_square),
        ("solid square", &solid_square),
        ("hollow cube", &hollow_cube),
    ] {
        let suite = suites::triangulation_comparison(x);
        for check in suite.checks.iter().take(3) {
            if !check.pass {
                failures.push(format!("{name}: {} ({})", check.name, check.detail));
            }
        }
    }

    report(
        9,
        "homology oracles",
        failures.is_empty(),
        &if failures.is_empty() { "all spaces as classified".to_string() } else { failures.join("; ") },
    );
}

/// Squares on a complex: naturality of the first square against the
/// integral Bockstein, vanishing above the degree, and the cup square in
/// the top case.
fn square_checks<X: CellComplex>(name: &str, x: &X, failures: &mut Vec<String>) {
    let h = Mod2Cohomology::new(x);
    let top = x.max_dim();
    for degree in 0..=top {
        for index in 0..h.rank(degree) {
            let alpha = h.representative(degree, index).clone();
            // first square against the integral lift
            let sq1 = h.sq(1, degree, &alpha).expect("cocycle");
            let bock = h.bockstein(degree, &alpha).expect("cocycle");
            let a = h.express(degree + 1, &sq1).expect("cocycle");
            let b = h.express(degree + 1, &bock).expect("cocycle");
            if a != b {
                failures.push(format!("{name}: Sq^1 != Bockstein on H^{degree} class {index}"));
            }
            // vanishing above the degree
            for k in degree + 1..=degree + 2 {
                let v = h.sq(k, degree, &alpha).expect("cocycle");
                if !h.express(degree + k, &v).expect("cocycle").is_empty() {
                    failures.push(format!("{name}: Sq^{k} nonzero on H^{degree}"));
                }
            }
            // the top square is the cup square
            let square = h.sq(degree, degree, &alpha).expect("cocycle");
            let cup = h.cup(degree, &alpha, degree, &alpha).expect("cocycle");
            if h.express(2 * degree, &square).expect("cocycle")
                != h.express(2 * degree, &cup).expect("cocycle")
            {
                failures.push(format!("{name}: Sq^{degree} != cup square on H^{degree}"));
            }
        }
    }
}

#[test]
fn criterion_10_steenrod_oracles() -> Result<(), Error> {
    let mut failures: Vec<String> = Vec::new();

    let hollow_square = lattice(HOLLOW_SQUARE);
    let solid_square = lattice(SOLID_SQUARE);
    let hollow_cube = lattice(HOLLOW_CUBE);
    let torus = presented(TORUS);
    let sphere = presented(SPHERE);
    let rp2 = simplicial(RP2);

    square_checks("hollow square", &hollow_square, &mut failures);
    square_checks("collapsed-boundary sphere", &sphere, &mut failures);
    square_checks("solid square", &solid_square, &mut failures);
    square_checks("hollow cube", &hollow_cube, &mut failures);
    square_checks("torus", &torus, &mut failures);
    square_checks("projective plane", &rp2, &mut failures);
    for (name, x) in [("hollow square", &hollow_square), ("hollow cube", &hollow_cube)] {
        let tx = triangulate(x);
        square_checks(&format!("triangulated {name}"), &tx, &mut failures);
    }

    // the projective plane's first square is an isomorphism in degree one
    let h = Mod2Cohomology::new(&rp2);
    if h.sq_matrix(1, 1)? != vec![vec![1]] {
        failures.push("projective plane: Sq^1 on H^1 is not an isomorphism".into());
    }

    // the torus: vanishing first square, nondegenerate cup pairing
    let h = Mod2Cohomology::new(&torus);
    if h.sq_matrix(1, 1)? != vec![vec![0u8]; 2] {
        failures.push("torus: Sq^1 on H^1 nonzero".into());
    }
    let mut pairing = [[false; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            let prod = h.cup(1, h.representative(1, i), 1, h.representative(1, j))?;
            pairing[i][j] = !h.express(2, &prod)?.is_empty();
        }
    }
    let det = (pairing[0][0] & pairing[1][1]) ^ (pairing[0][1] & pairing[1][0]);
    if !det {
        failures.push(format!("torus: cup pairing degenerate: {pairing:?}"));
    }

    // squares agree across the subdivision map
    for (name, x) in [("hollow square", &hollow_square), ("hollow cube", &hollow_cube)] {
        let suite = suites::triangulation_comparison(x);
        if !suite.passed() {
            for check in suite.checks.iter().filter(|c| !c.pass) {
                failures.push(format!("{name}: {} ({})", check.name, check.detail));
            }
        }
    }

    report(
        10,
        "Steenrod oracles",
        failures.is_empty(),
        &if failures.is_empty() {
            "first squares, vanishing, cup squares and subdivision agreement".to_string()
        } else {
            failures.join("; ")
        },
    );
    Ok(())
}
