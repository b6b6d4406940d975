//! Command dispatch for the `einfty` binary.
//!
//! Every command is a pure function of its arguments (and the input files it
//! names), so the whole surface is exercised by the integration tests
//! without spawning processes. Exit codes: 0 on success, 1 when a relation
//! that should hold fails or a counterexample fails to reproduce, 2 on
//! input errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use einfty::chain::TensorWord;
use einfty::complexes::{triangulate, AnyComplex, CellComplex};
use einfty::cubical::CubeWord;
use einfty::error::Error;
use einfty::homology::{homology, HomologyGroup};
use einfty::ring::{parse_ring, Ring};
use einfty::simplicial::SimplexWord;
use einfty::steenrod::{steenrod_report, Mod2Cohomology};
use einfty::suites::{self, Suite};
use einfty::terms::{evaluate, CoopTerm, Element};

pub const USAGE: &str = "\
einfty: chain-level algebra on cubical and simplicial complexes

usage: einfty <command> [flags]

commands:
  homology         --input PATH [--ring Z|Z/p] [--json]
  cohomology       --input PATH [--json]
  sq               --input PATH [--k INT] [--json]
  eval             --term STR --input WORD [--side cubical|simplicial] [--ring Z|Z/p] [--json]
  verify           --suite NAME [--n INT] [--i INT] [--k INT] [--seed INT] [--json]
  triangulate      --input PATH [--json]
  compare          --input PATH [--json]
  counterexamples  [--json]

verify suites: bialgebra, coproduct, cupi, coherence, cs, ez, counterexamples, all.
Complexes are JSON files: lattice cubical ({\"dim\", \"cubes\"}), presented
cubical ({\"cells\", \"faces\"}), simplicial ({\"facets\"}). Tensor factors in
eval inputs are separated by `|`. EINFTY_THREADS caps parallelism.
";

struct Args {
    command: String,
    options: BTreeMap<String, String>,
    json: bool,
}

fn parse_args(argv: &[String]) -> Result<Args, String> {
    let mut it = argv.iter();
    let command = it.next().cloned().ok_or_else(|| "missing command".to_string())?;
    let mut options = BTreeMap::new();
    let mut json = false;
    while let Some(arg) = it.next() {
        let Some(name) = arg.strip_prefix("--") else {
            return Err(format!("unexpected argument `{arg}`"));
        };
        if name == "json" {
            json = true;
            continue;
        }
        let value = it.next().ok_or_else(|| format!("flag --{name} needs a value"))?;
        options.insert(name.to_string(), value.clone());
    }
    Ok(Args { command, options, json })
}

impl Args {
    fn required(&self, name: &str) -> Result<&str, String> {
        self.options.get(name).map(String::as_str).ok_or_else(|| format!("missing --{name}"))
    }

    fn usize_or(&self, name: &str, default: usize) -> Result<usize, String> {
        match self.options.get(name) {
            None => Ok(default),
            Some(v) => v.parse().map_err(|_| format!("--{name} expects an integer, got `{v}`")),
        }
    }

    fn u64_or(&self, name: &str, default: u64) -> Result<u64, String> {
        match self.options.get(name) {
            None => Ok(default),
            Some(v) => v.parse().map_err(|_| format!("--{name} expects an integer, got `{v}`")),
        }
    }

    fn ring(&self) -> Result<Ring, Error> {
        match self.options.get("ring") {
            None => Ok(Ring::Int),
            Some(spec) => parse_ring(spec),
        }
    }
}

fn load_complex(path: &str) -> Result<AnyComplex, String> {
    let src = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    AnyComplex::from_json(&src).map_err(|e| e.to_string())
}

fn render_suite(suite: &Suite, out: &mut String) {
    let _ = writeln!(out, "suite {}", suite.name);
    for check in &suite.checks {
        let mark = if check.pass { "ok  " } else { "FAIL" };
        let _ = writeln!(out, "  [{mark}] {} ({})", check.name, check.detail);
    }
}

fn suites_json(suites: &[Suite]) -> serde_json::Value {
    serde_json::json!(suites
        .iter()
        .map(|s| {
            serde_json::json!({
                "suite": s.name,
                "passed": s.passed(),
                "checks": s.checks.iter().map(|c| serde_json::json!({
                    "name": c.name, "pass": c.pass, "detail": c.detail,
                })).collect::<Vec<_>>(),
            })
        })
        .collect::<Vec<_>>())
}

fn homology_json(groups: &[HomologyGroup]) -> serde_json::Value {
    serde_json::json!(groups
        .iter()
        .enumerate()
        .map(|(degree, g)| {
            serde_json::json!({
                "degree": degree,
                "betti": g.betti,
                "torsion": g.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect::<Vec<_>>())
}

fn cmd_homology(args: &Args, out: &mut String) -> Result<i32, String> {
    let complex = load_complex(args.required("input")?)?;
    let ring = args.ring().map_err(|e| e.to_string())?;
    let groups = match &complex {
        AnyComplex::Lattice(x) => homology(x, ring),
        AnyComplex::Presented(x) => homology(x, ring),
        AnyComplex::Simplicial(x) => homology(x, ring),
    };
    if args.json {
        let value = serde_json::json!({
            "kind": complex.kind(),
            "ring": ring.to_string(),
            "homology": homology_json(&groups),
        });
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        let _ = writeln!(out, "{} over {}", complex.kind(), ring);
        for (degree, g) in groups.iter().enumerate() {
            match ring {
                Ring::Int => {
                    let _ = writeln!(out, "H_{degree} = {g}");
                }
                Ring::Mod(p) => {
                    let _ = match g.betti {
                        0 => writeln!(out, "H_{degree} = 0"),
                        1 => writeln!(out, "H_{degree} = Z/{p}"),
                        b => writeln!(out, "H_{degree} = (Z/{p})^{b}"),
                    };
                }
            }
        }
    }
    Ok(0)
}

fn cohomology_lines<X: CellComplex>(x: &X, json: bool, out: &mut String) {
    let h = Mod2Cohomology::new(x);
    if json {
        let degrees: Vec<serde_json::Value> = (0..=h.max_dim())
            .map(|degree| {
                let reps: Vec<Vec<String>> = (0..h.rank(degree))
                    .map(|i| {
                        h.representative(degree, i)
                            .ones()
                            .into_iter()
                            .map(|j| x.cells(degree)[j].to_string())
                            .collect()
                    })
                    .collect();
                serde_json::json!({
                    "degree": degree,
                    "dim": h.rank(degree),
                    "representatives": reps,
                })
            })
            .collect();
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&serde_json::json!(degrees)).expect("serializable")
        );
    } else {
        for degree in 0..=h.max_dim() {
            let _ = writeln!(out, "dim H^{degree}(X; Z/2) = {}", h.rank(degree));
            for i in 0..h.rank(degree) {
                let cells: Vec<String> = h
                    .representative(degree, i)
                    .ones()
                    .into_iter()
                    .map(|j| x.cells(degree)[j].to_string())
                    .collect();
                let _ = writeln!(out, "  class {i}: {}", cells.join(" + "));
            }
        }
    }
}

fn cmd_cohomology(args: &Args, out: &mut String) -> Result<i32, String> {
    let complex = load_complex(args.required("input")?)?;
    match &complex {
        AnyComplex::Lattice(x) => cohomology_lines(x, args.json, out),
        AnyComplex::Presented(x) => cohomology_lines(x, args.json, out),
        AnyComplex::Simplicial(x) => cohomology_lines(x, args.json, out),
    }
    Ok(0)
}

fn cmd_sq(args: &Args, out: &mut String) -> Result<i32, String> {
    let complex = load_complex(args.required("input")?)?;
    let k = args.usize_or("k", 1)?;
    let report = match &complex {
        AnyComplex::Lattice(x) => steenrod_report(x, k),
        AnyComplex::Presented(x) => steenrod_report(x, k),
        AnyComplex::Simplicial(x) => steenrod_report(x, k),
    }
    .map_err(|e| e.to_string())?;
    if args.json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&serde_json::json!(report
                .iter()
                .map(|r| serde_json::json!({
                    "degree": r.degree,
                    "betti": r.betti,
                    "torsion": r.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    "sq": {"k": r.sq.k, "matrix": r.sq.matrix},
                }))
                .collect::<Vec<_>>()))
            .expect("serializable")
        );
    } else {
        for r in &report {
            let group = HomologyGroup { betti: r.betti, torsion: r.torsion.clone() };
            let _ = writeln!(
                out,
                "degree {}: H_{} = {group}; Sq^{}: H^{} -> H^{} mod 2 has matrix {:?}",
                r.degree,
                r.degree,
                r.sq.k,
                r.degree,
                r.degree + r.sq.k,
                r.sq.matrix
            );
        }
    }
    Ok(0)
}

fn parse_factors(input: &str) -> Vec<&str> {
    input
        .split(['|', '\u{2297}'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect()
}

fn eval_json<B: Ord + Clone + std::fmt::Display>(e: &Element<B>) -> serde_json::Value {
    serde_json::json!(e
        .iter()
        .map(|(tw, c)| {
            serde_json::json!({
                "coeff": c.to_string(),
                "factors": tw.0.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })
        })
        .collect::<Vec<_>>())
}

fn cmd_eval(args: &Args, out: &mut String) -> Result<i32, String> {
    let term = CoopTerm::parse(args.required("term")?).map_err(|e| e.to_string())?;
    let ring = args.ring().map_err(|e| e.to_string())?;
    let input = args.required("input")?;
    let side = args.options.get("side").map(String::as_str).unwrap_or("cubical");
    let rendered = match side {
        "cubical" => {
            let factors = parse_factors(input)
                .into_iter()
                .map(CubeWord::parse)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            let element = Element::basis(ring, TensorWord(factors));
            let value = evaluate(&term, &element).map_err(|e| e.to_string())?;
            if args.json {
                serde_json::to_string_pretty(&eval_json(&value)).expect("serializable")
            } else {
                value.to_string()
            }
        }
        "simplicial" => {
            let factors = parse_factors(input)
                .into_iter()
                .map(SimplexWord::parse)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            let element = Element::basis(ring, TensorWord(factors));
            let value = evaluate(&term, &element).map_err(|e| e.to_string())?;
            if args.json {
                serde_json::to_string_pretty(&eval_json(&value)).expect("serializable")
            } else {
                value.to_string()
            }
        }
        other => return Err(format!("--side must be cubical or simplicial, got `{other}`")),
    };
    let _ = writeln!(out, "{rendered}");
    Ok(0)
}

fn cmd_verify(args: &Args, out: &mut String) -> Result<i32, String> {
    let name = args.required("suite")?;
    let seed = args.u64_or("seed", 0)?;
    let run_one = |name: &str, args: &Args| -> Result<Vec<Suite>, String> {
        match name {
            "bialgebra" => {
                let n = args.usize_or("n", 3)?;
                Ok(vec![suites::bialgebra(n, n.max(6), 1000, seed)])
            }
            "coproduct" => Ok(vec![suites::coproduct_consistency(args.usize_or("n", 6)?)]),
            "cupi" => {
                let n = args.usize_or("n", 5)?;
                Ok(vec![suites::cup_equivalence(args.usize_or("i", 4)?, n, n as u32)])
            }
            "coherence" => {
                let n = args.usize_or("n", 5)?;
                Ok(vec![suites::coherence(args.usize_or("i", 3)?, n, n as u32)])
            }
            "cs" => {
                let n = args.usize_or("n", 5)?;
                Ok(vec![suites::cartan_serre(n, args.usize_or("k", 4)?, n.min(4))])
            }
            "ez" => Ok(vec![suites::eilenberg_zilber(args.usize_or("n", 4)?)]),
            "counterexamples" => Ok(vec![suites::counterexamples().suite]),
            other => Err(format!("unknown suite `{other}`")),
        }
    };
    let suites: Vec<Suite> = if name == "all" {
        let mut all = Vec::new();
        for n in ["bialgebra", "coproduct", "cupi", "coherence", "cs", "ez", "counterexamples"] {
            all.extend(run_one(n, args)?);
        }
        all
    } else {
        run_one(name, args)?
    };
    let passed = suites.iter().all(Suite::passed);
    if args.json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&suites_json(&suites)).expect("serializable")
        );
    } else {
        for suite in &suites {
            render_suite(suite, out);
        }
        let _ = writeln!(out, "{}", if passed { "all relations hold" } else { "FAILURES above" });
    }
    Ok(if passed { 0 } else { 1 })
}

fn cmd_triangulate(args: &Args, out: &mut String) -> Result<i32, String> {
    let complex = load_complex(args.required("input")?)?;
    let AnyComplex::Lattice(x) = complex else {
        return Err("triangulate expects a lattice cubical complex".into());
    };
    let tx = triangulate(&x);
    if args.json {
        let dims: Vec<usize> = (0..=tx.max_dim()).map(|d| tx.cells(d).len()).collect();
        let simplices: Vec<Vec<String>> = (0..=tx.max_dim())
            .map(|d| tx.cells(d).iter().map(ToString::to_string).collect())
            .collect();
        let value = serde_json::json!({"counts": dims, "simplices": simplices});
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        for d in 0..=tx.max_dim() {
            let _ = writeln!(out, "dimension {d}: {} simplices", tx.cells(d).len());
            for s in tx.cells(d) {
                let _ = writeln!(out, "  {s}");
            }
        }
    }
    Ok(0)
}

fn cmd_compare(args: &Args, out: &mut String) -> Result<i32, String> {
    let complex = load_complex(args.required("input")?)?;
    let AnyComplex::Lattice(x) = complex else {
        return Err("compare expects a lattice cubical complex".into());
    };
    let suite = suites::triangulation_comparison(&x);
    let passed = suite.passed();
    if args.json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&suites_json(&[suite])).expect("serializable")
        );
    } else {
        render_suite(&suite, out);
        let _ = writeln!(out, "{}", if passed { "comparison holds" } else { "FAILURES above" });
    }
    Ok(if passed { 0 } else { 1 })
}

fn cmd_counterexamples(args: &Args, out: &mut String) -> Result<i32, String> {
    let report = suites::counterexamples();
    let passed = report.suite.passed();
    if args.json {
        let value = serde_json::json!({
            "displays": report.lines,
            "checks": suites_json(&[report.suite]),
        });
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        for line in &report.lines {
            let _ = writeln!(out, "{line}");
        }
        let _ = writeln!(out);
        render_suite(&report.suite, out);
        let _ = writeln!(
            out,
            "{}",
            if passed { "all counterexamples reproduce" } else { "FAILURES above" }
        );
    }
    Ok(if passed { 0 } else { 1 })
}

/// Run a command line; returns the exit status and appends all output.
pub fn run(argv: &[String], out: &mut String) -> i32 {
    let args = match parse_args(argv) {
        Ok(args) => args,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            let _ = write!(out, "{USAGE}");
            return 2;
        }
    };
    let result = match args.command.as_str() {
        "homology" => cmd_homology(&args, out),
        "cohomology" => cmd_cohomology(&args, out),
        "sq" => cmd_sq(&args, out),
        "eval" => cmd_eval(&args, out),
        "verify" => cmd_verify(&args, out),
        "triangulate" => cmd_triangulate(&args, out),
        "compare" => cmd_compare(&args, out),
        "counterexamples" => cmd_counterexamples(&args, out),
        "help" | "--help" | "-h" => {
            let _ = write!(out, "{USAGE}");
            Ok(0)
        }
        other => Err(format!("unknown command `{other}`")),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(out, "error: {message}");
            2
        }
    }
}
