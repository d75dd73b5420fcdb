//! Command-line parsing and dispatch.
//!
//! Exit codes: 0 on success, 1 when `--assert` was given and a checked
//! property is false, 2 on malformed input or usage errors.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use edgewise::catalog;
use edgewise::cm::{CmError, CmVerdict, EdgewiseLevel, Route};
use edgewise::complex::order_complex;
use edgewise::homology::FieldSpec;
use edgewise::poset::{Interval, Poset};
use edgewise::shelling::{
    is_edgewise_strongly_shellable, is_shellable, ShellingError, DEFAULT_SHELLING_BUDGET,
};
use edgewise::Analyzer;

use crate::dot::export_dot;
use crate::format::{fingerprint, parse_poset_doc, PosetDoc};
use crate::report::{describe_witness, AnalysisReport};
use crate::search::{render_summary, run_search, Question, SearchOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERT_FAILED: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;

const USAGE: &str = "\
usage: edgewise <command> [args]

commands:
  gen <family> [params...] [--proper] [-o FILE]
      generate a catalog poset as a poset document (stdout by default);
      families: boolean N, chain N, antichain K, stacked N K, ngon N,
      tetrahedron, octahedron, cube, partition N, divisor M, fig1,
      fig2-standin, remark36-q, sec5-lattice
  check [FILE] --props LIST [--field q|2|P] [--route link|interval|both]
        [--proper] [--assert] [--report FILE]
      property checks; LIST is a comma list of
      cm, 2cm, kcm=K, gorenstein, edgewise=K, edgewise=strong
  connectivity [FILE] [--field ...] [--proper] [--report FILE]
      print the edgewise Cohen-Macaulay connectivity
  homology [FILE] [--open-interval LO HI] [--field ...] [--proper]
        [--report FILE]
      reduced Betti numbers of the order complex
  shelling [FILE] [--edgewise] [--budget N] [--proper] [--report FILE]
      shellability search, or the edgewise strong shellability sweep
  export-dot [FILE] [-o FILE]
      Hasse diagram in DOT format, covers drawn bottom to top
  search <mobius-nowhere-zero|geometric-strong-ecm> --seed S -o DIR
        [--trials N] [--max-elements M] [--field ...]
      counterexample search; violations are written as replayable
      certificates next to a run manifest

FILE defaults to standard input ('-' works too).";

struct Ctx {
    assert_failed: bool,
}

pub fn run(argv: &[String]) -> i32 {
    let mut ctx = Ctx {
        assert_failed: false,
    };
    match dispatch(argv, &mut ctx) {
        Ok(()) => {
            if ctx.assert_failed {
                EXIT_ASSERT_FAILED
            } else {
                EXIT_OK
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_BAD_INPUT
        }
    }
}

fn dispatch(argv: &[String], ctx: &mut Ctx) -> Result<(), String> {
    let Some(command) = argv.first() else {
        return Err(format!("missing command\n{USAGE}"));
    };
    let rest = &argv[1..];
    match command.as_str() {
        "gen" => cmd_gen(rest),
        "check" => cmd_check(rest, ctx, argv),
        "connectivity" => cmd_connectivity(rest, argv),
        "homology" => cmd_homology(rest, argv),
        "shelling" => cmd_shelling(rest, argv),
        "export-dot" => cmd_export_dot(rest),
        "search" => cmd_search(rest, argv),
        "help" | "--help" | "-h" => {
            println!("{USAGE}");
            Ok(())
        }
        other => Err(format!("unknown command {other:?}\n{USAGE}")),
    }
}

/// Minimal flag scanner: flags named in `takes_value` consume the next
/// argument (twice for `takes_two`); everything else that starts with "--"
/// or equals "-o" is a switch; the rest are positional.
struct Parsed {
    positional: Vec<String>,
    values: Vec<(String, Vec<String>)>,
    switches: Vec<String>,
}

impl Parsed {
    fn value(&self, flag: &str) -> Option<&str> {
        self.values
            .iter()
            .rev()
            .find(|(f, _)| f == flag)
            .map(|(_, v)| v[0].as_str())
    }

    fn pair(&self, flag: &str) -> Option<(&str, &str)> {
        self.values
            .iter()
            .rev()
            .find(|(f, _)| f == flag)
            .map(|(_, v)| (v[0].as_str(), v[1].as_str()))
    }

    fn switch(&self, flag: &str) -> bool {
        self.switches.iter().any(|s| s == flag)
    }
}

fn scan(
    args: &[String],
    takes_value: &[&str],
    takes_two: &[&str],
    switches: &[&str],
) -> Result<Parsed, String> {
    let mut parsed = Parsed {
        positional: Vec::new(),
        values: Vec::new(),
        switches: Vec::new(),
    };
    let mut i = 0;
    while i < args.len() {
        let a = args[i].as_str();
        if takes_value.contains(&a) {
            let v = args
                .get(i + 1)
                .ok_or_else(|| format!("flag {a} needs a value"))?;
            parsed.values.push((a.to_owned(), vec![v.clone()]));
            i += 2;
        } else if takes_two.contains(&a) {
            let v1 = args
                .get(i + 1)
                .ok_or_else(|| format!("flag {a} needs two values"))?;
            let v2 = args
                .get(i + 2)
                .ok_or_else(|| format!("flag {a} needs two values"))?;
            parsed
                .values
                .push((a.to_owned(), vec![v1.clone(), v2.clone()]));
            i += 3;
        } else if switches.contains(&a) {
            parsed.switches.push(a.to_owned());
            i += 1;
        } else if a.starts_with("--") {
            return Err(format!("unknown flag {a}"));
        } else {
            parsed.positional.push(a.to_owned());
            i += 1;
        }
    }
    Ok(parsed)
}

fn read_input(file: Option<&str>) -> Result<String, String> {
    match file {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("reading stdin: {e}"))?;
            Ok(buf)
        }
        Some(path) => fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}")),
    }
}

fn write_output(file: Option<&str>, content: &str) -> Result<(), String> {
    match file {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => fs::write(path, content).map_err(|e| format!("writing {path}: {e}")),
    }
}

/// Load the input document and apply `--proper` if requested.
fn load_poset(parsed: &Parsed) -> Result<(String, String, Poset), String> {
    let text = read_input(parsed.positional.first().map(|s| s.as_str()))?;
    let (doc, poset) = parse_poset_doc(&text).map_err(|e| e.to_string())?;
    let print = fingerprint(&doc.to_json());
    if parsed.switch("--proper") {
        let proper = poset
            .proper_part()
            .map_err(|e| format!("--proper: {e}"))?;
        Ok((format!("{} (proper part)", doc.name), print, proper))
    } else {
        Ok((doc.name, print, poset))
    }
}

fn parse_field(parsed: &Parsed) -> Result<FieldSpec, String> {
    match parsed.value("--field") {
        None | Some("q") | Some("Q") => Ok(FieldSpec::Rationals),
        Some(text) => {
            let p: u32 = text
                .parse()
                .map_err(|_| format!("--field must be q or a prime, got {text:?}"))?;
            FieldSpec::prime_field(p).map_err(|e| e.to_string())
        }
    }
}

fn parse_route(parsed: &Parsed) -> Result<Route, String> {
    match parsed.value("--route") {
        None | Some("both") => Ok(Route::Both),
        Some("link") => Ok(Route::LinkCondition),
        Some("interval") => Ok(Route::IntervalCondition),
        Some(other) => Err(format!("--route must be link, interval or both, got {other:?}")),
    }
}

fn maybe_write_report(parsed: &Parsed, report: &AnalysisReport) -> Result<(), String> {
    if let Some(path) = parsed.value("--report") {
        fs::write(path, report.to_json()).map_err(|e| format!("writing {path}: {e}"))?;
    }
    Ok(())
}

fn cmd_gen(args: &[String]) -> Result<(), String> {
    let parsed = scan(args, &["-o"], &[], &["--proper"])?;
    let Some(family) = parsed.positional.first() else {
        return Err("gen needs a family name".to_owned());
    };
    let params: Vec<u64> = parsed.positional[1..]
        .iter()
        .map(|s| {
            s.parse::<u64>()
                .map_err(|_| format!("parameter {s:?} is not an integer"))
        })
        .collect::<Result<_, _>>()?;
    let mut poset = catalog::generate(family, &params).map_err(|e| e.to_string())?;
    let mut name = std::iter::once(family.clone())
        .chain(params.iter().map(|p| p.to_string()))
        .collect::<Vec<_>>()
        .join("_");
    if parsed.switch("--proper") {
        poset = poset
            .proper_part()
            .map_err(|e| format!("--proper: {e}"))?;
        name.push_str("_proper");
    }
    let doc = PosetDoc::from_poset(&name, &poset);
    write_output(parsed.value("-o"), &format!("{}\n", doc.to_json()))
}

#[derive(Debug, Clone, Copy)]
enum PropSpec {
    Cm,
    Gorenstein,
    KCm(u32),
    Edgewise(EdgewiseLevel),
}

fn parse_props(list: &str) -> Result<Vec<PropSpec>, String> {
    list.split(',')
        .map(|token| match token {
            "cm" => Ok(PropSpec::Cm),
            "gorenstein" => Ok(PropSpec::Gorenstein),
            "2cm" => Ok(PropSpec::KCm(2)),
            _ => {
                if let Some(k) = token.strip_prefix("kcm=") {
                    let k: u32 = k
                        .parse()
                        .map_err(|_| format!("bad kcm level {k:?}"))?;
                    Ok(PropSpec::KCm(k))
                } else if let Some(level) = token.strip_prefix("edgewise=") {
                    if level == "strong" {
                        Ok(PropSpec::Edgewise(EdgewiseLevel::Strong))
                    } else {
                        let k: u32 = level
                            .parse()
                            .map_err(|_| format!("bad edgewise level {level:?}"))?;
                        Ok(PropSpec::Edgewise(EdgewiseLevel::K(k)))
                    }
                } else {
                    Err(format!("unknown property {token:?}"))
                }
            }
        })
        .collect()
}

impl PropSpec {
    fn run(&self, analyzer: &Analyzer, p: &Poset, route: Route) -> Result<CmVerdict, CmError> {
        match self {
            PropSpec::Cm => analyzer.is_cm(p, route),
            PropSpec::Gorenstein => analyzer.is_gorenstein_star(p),
            PropSpec::KCm(k) => analyzer.is_k_cm(p, *k),
            PropSpec::Edgewise(level) => analyzer.is_edgewise_k_cm(p, *level),
        }
    }
}

fn cmd_check(args: &[String], ctx: &mut Ctx, _argv: &[String]) -> Result<(), String> {
    let parsed = scan(
        args,
        &["--props", "--field", "--route", "--report"],
        &[],
        &["--proper", "--assert"],
    )?;
    let Some(props_list) = parsed.value("--props") else {
        return Err("check needs --props".to_owned());
    };
    let props = parse_props(props_list)?;
    let (name, print, poset) = load_poset(&parsed)?;
    let field = parse_field(&parsed)?;
    let route = parse_route(&parsed)?;
    let analyzer = Analyzer::new(field.clone());
    let mut report = AnalysisReport::new(&name, print, &field);
    for prop in &props {
        let start = Instant::now();
        let verdict = prop
            .run(&analyzer, &poset, route)
            .map_err(|e| e.to_string())?;
        let wall_ms = start.elapsed().as_secs_f64() * 1e3;
        report.push(
            verdict.property.clone(),
            serde_json::Value::Bool(verdict.holds),
            verdict.witness,
            wall_ms,
        );
    }
    print!("{}", report.render_text());
    maybe_write_report(&parsed, &report)?;
    if parsed.switch("--assert") && report.any_failure() {
        ctx.assert_failed = true;
    }
    Ok(())
}

fn cmd_connectivity(args: &[String], _argv: &[String]) -> Result<(), String> {
    let parsed = scan(args, &["--field", "--report"], &[], &["--proper"])?;
    let (name, print, poset) = load_poset(&parsed)?;
    let field = parse_field(&parsed)?;
    let analyzer = Analyzer::new(field.clone());
    let start = Instant::now();
    let connectivity = analyzer.edgewise_connectivity(&poset);
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    println!("{connectivity}");
    let mut report = AnalysisReport::new(&name, print, &field);
    report.push(
        "edgewise-cm-connectivity",
        serde_json::json!(connectivity),
        None,
        wall_ms,
    );
    maybe_write_report(&parsed, &report)
}

fn cmd_homology(args: &[String], _argv: &[String]) -> Result<(), String> {
    let parsed = scan(
        args,
        &["--field", "--report"],
        &["--open-interval"],
        &["--proper"],
    )?;
    let (name, print, poset) = load_poset(&parsed)?;
    let field = parse_field(&parsed)?;
    let (target, subject) = match parsed.pair("--open-interval") {
        None => (poset.clone(), name.clone()),
        Some((lo, hi)) => {
            let lo_i = poset
                .index_of(lo)
                .ok_or_else(|| format!("unknown element {lo:?}"))?;
            let hi_i = poset
                .index_of(hi)
                .ok_or_else(|| format!("unknown element {hi:?}"))?;
            let sub = poset
                .interval(Interval::Open { lo: lo_i, hi: hi_i })
                .map_err(|e| e.to_string())?;
            (sub, format!("{name} open interval ({lo}, {hi})"))
        }
    };
    let analyzer = Analyzer::new(field.clone());
    let complex = order_complex(&target);
    let start = Instant::now();
    let betti = analyzer.betti(&complex);
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    for (d, v) in betti.iter_indexed() {
        println!("b_{d} = {v}");
    }
    let values: Vec<u64> = betti.iter_indexed().map(|(_, v)| v).collect();
    let mut report = AnalysisReport::new(&subject, print, &field);
    report.push(
        "reduced-betti-from-dim-minus-one",
        serde_json::json!(values),
        None,
        wall_ms,
    );
    maybe_write_report(&parsed, &report)
}

fn cmd_shelling(args: &[String], _argv: &[String]) -> Result<(), String> {
    let parsed = scan(
        args,
        &["--budget", "--report"],
        &[],
        &["--proper", "--edgewise"],
    )?;
    let (name, print, poset) = load_poset(&parsed)?;
    let budget: u64 = match parsed.value("--budget") {
        None => DEFAULT_SHELLING_BUDGET,
        Some(text) => text
            .parse()
            .map_err(|_| format!("bad budget {text:?}"))?,
    };
    let mut report = AnalysisReport::new(&name, print, "n/a");
    if parsed.switch("--edgewise") {
        let start = Instant::now();
        match is_edgewise_strongly_shellable(&poset, budget) {
            Ok(verdict) => {
                let wall_ms = start.elapsed().as_secs_f64() * 1e3;
                if verdict.holds {
                    println!("edgewise strongly shellable");
                } else {
                    println!(
                        "not edgewise strongly shellable: {}",
                        describe_witness(verdict.witness.as_ref().unwrap())
                    );
                }
                report.push(
                    verdict.property.clone(),
                    serde_json::Value::Bool(verdict.holds),
                    verdict.witness,
                    wall_ms,
                );
            }
            Err(ShellingError::BudgetExceeded { nodes, interval }) => {
                println!(
                    "inconclusive: budget of {nodes} nodes exceeded{}",
                    interval
                        .map(|(lo, hi)| format!(" on interval [{lo}, {hi}]"))
                        .unwrap_or_default()
                );
                report.push(
                    "edgewise-strongly-shellable",
                    serde_json::json!("budget-exceeded"),
                    None,
                    0.0,
                );
            }
            Err(e) => return Err(e.to_string()),
        }
    } else {
        let complex = order_complex(&poset);
        let start = Instant::now();
        match is_shellable(&complex, budget) {
            Ok(Some(order)) => {
                let wall_ms = start.elapsed().as_secs_f64() * 1e3;
                let facets = complex.facet_labels();
                let listed: Vec<String> = order
                    .iter()
                    .map(|&i| format!("{{{}}}", facets[i].join(",")))
                    .collect();
                println!("shellable; order: {}", listed.join(" "));
                report.push(
                    "shellable",
                    serde_json::Value::Bool(true),
                    None,
                    wall_ms,
                );
            }
            Ok(None) => {
                let wall_ms = start.elapsed().as_secs_f64() * 1e3;
                println!("not shellable");
                report.push("shellable", serde_json::Value::Bool(false), None, wall_ms);
            }
            Err(ShellingError::BudgetExceeded { nodes, .. }) => {
                println!("inconclusive: budget of {nodes} nodes exceeded");
                report.push("shellable", serde_json::json!("budget-exceeded"), None, 0.0);
            }
            Err(e) => return Err(e.to_string()),
        }
    }
    maybe_write_report(&parsed, &report)
}

fn cmd_export_dot(args: &[String]) -> Result<(), String> {
    let parsed = scan(args, &["-o"], &[], &["--proper"])?;
    let (name, _, poset) = load_poset(&parsed)?;
    write_output(parsed.value("-o"), &export_dot(&name, &poset))
}

fn cmd_search(args: &[String], argv: &[String]) -> Result<(), String> {
    let parsed = scan(
        args,
        &["--seed", "--trials", "--max-elements", "--field", "-o"],
        &[],
        &[],
    )?;
    let Some(question_name) = parsed.positional.first() else {
        return Err("search needs a question name".to_owned());
    };
    let question = Question::parse(question_name)
        .ok_or_else(|| format!("unknown question {question_name:?}"))?;
    let seed: u64 = parsed
        .value("--seed")
        .ok_or("search needs --seed")?
        .parse()
        .map_err(|_| "bad --seed".to_owned())?;
    let out_dir = PathBuf::from(parsed.value("-o").ok_or("search needs -o DIR")?);
    let trials: u64 = match parsed.value("--trials") {
        None => 100,
        Some(t) => t.parse().map_err(|_| "bad --trials".to_owned())?,
    };
    let max_elements: usize = match parsed.value("--max-elements") {
        None => match question {
            Question::MobiusNowhereZero => 8,
            Question::GeometricStrongEcm => 32,
        },
        Some(t) => t.parse().map_err(|_| "bad --max-elements".to_owned())?,
    };
    if question == Question::MobiusNowhereZero && max_elements > 12 {
        return Err("mobius-nowhere-zero accepts --max-elements up to 12".to_owned());
    }
    let field = parse_field(&parsed)?;
    let opts = SearchOptions {
        question,
        seed,
        trials,
        max_elements,
        field,
        out_dir,
        argv: argv.to_vec(),
    };
    let summary = run_search(&opts).map_err(|e| e.to_string())?;
    print!("{}", render_summary(&summary));
    Ok(())
}
