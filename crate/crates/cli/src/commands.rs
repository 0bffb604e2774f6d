use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use log::{debug, info};
use platjones::braid::{format_orientations, parse_orientations, plat_orientations};
use platjones::calibration::calibrate;
use platjones::spinnet::{growth_check, growth_check_twists};
use platjones::verify::{run_suite, Suite, SuiteReport, VerifyOptions};
use platjones::{Automaton, Catalog, CouplingGraph, Error, PlatSpec, Spin};
use serde_json::{json, Value};

use crate::{Command, Format, PlatArgs, SuiteChoice};

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Syntax { .. } | Error::GeneratorOutOfRange { .. }) { 2 } else { 3 };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

/// Rounds to 12 significant digits so that output is stable across platforms.
/// Magnitudes below 1e-12 are rounding noise and print as zero.
fn sig12(x: f64) -> f64 {
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r.abs() < 1e-12 {
        0.0
    } else {
        r
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value serializes"));
}

/// Plat data before a level is fixed.
struct Template {
    strands: usize,
    colors: Option<Vec<Spin>>,
    orientations: Option<Vec<i8>>,
    word: String,
    level: Option<u32>,
}

impl Template {
    fn from_args(args: &PlatArgs) -> Result<Self, Failure> {
        if let Some(path) = &args.spec {
            let text = read(path)?;
            let spec = PlatSpec::from_json(&text)?;
            return Ok(Template {
                strands: spec.strands,
                colors: Some(spec.colors.clone()),
                orientations: spec.orientations.clone(),
                word: spec.braid_word()?.to_string(),
                level: Some(spec.level),
            });
        }
        let colors = args
            .colors
            .as_deref()
            .map(|c| c.split(',').map(str::parse).collect::<Result<Vec<Spin>, _>>())
            .transpose()?;
        let orientations = args.orientations.as_deref().map(parse_orientations).transpose()?;
        let (strands, word) = match &args.link {
            Some(name) => {
                let catalog = match &args.catalog {
                    Some(path) => Catalog::parse(&read(path)?)?,
                    None => Catalog::builtin(),
                };
                let entry = catalog.get(name)?;
                (entry.strands, entry.word.clone())
            }
            None => (args.strands.ok_or_else(|| usage("--strands, --link or --spec is required"))?, args.word.clone()),
        };
        Ok(Template { strands, colors, orientations, word, level: None })
    }

    fn at(&self, k: u32) -> Result<PlatSpec, Failure> {
        let colors = self.colors.clone().unwrap_or_else(|| vec![Spin::HALF; self.strands / 2]);
        let spec = PlatSpec::new(self.strands, colors, self.orientations.clone(), k, &self.word)?;
        spec.braid_word()?;
        Ok(spec)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

struct Evaluation {
    spec: PlatSpec,
    orientations: Vec<i8>,
    re: f64,
    im: f64,
    jones_re: f64,
    jones_im: f64,
    probability: f64,
    moves: usize,
    bound: f64,
    writhe: i64,
    word_length: usize,
}

fn evaluate(spec: PlatSpec, acceptor: Option<Vec<usize>>) -> Result<Evaluation, Failure> {
    let word = spec.braid_word()?;
    let mut automaton = Automaton::new(&spec)?;
    if let Some(perm) = acceptor {
        automaton = automaton.with_acceptor(perm)?;
    }
    let report = automaton.run(&word)?;
    let raw = report.amplitude() * automaton.dimension_factor();
    let value = calibrate(raw, spec.colors[0], report.writhe, automaton.context());
    let orientations = plat_orientations(&spec, &word)?;
    debug!("k={} word='{}' moves={} writhe={}", spec.level, word, report.moves, report.writhe);
    Ok(Evaluation {
        orientations,
        re: raw.re,
        im: raw.im,
        jones_re: value.re,
        jones_im: value.im,
        probability: report.probability,
        moves: report.moves,
        bound: report.bound,
        writhe: report.writhe,
        word_length: report.word_length,
        spec,
    })
}

fn parse_acceptor(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',').map(|p| p.trim().parse::<usize>().map_err(|_| usage(format!("bad acceptor entry `{p}`")))).collect()
}

pub fn run(command: Command) -> Result<ExitCode, Failure> {
    match command {
        Command::Eval { plat, level, acceptor, format } => {
            let template = Template::from_args(&plat)?;
            let k = level.or(template.level).ok_or_else(|| usage("--level is required"))?;
            let acceptor = acceptor.as_deref().map(parse_acceptor).transpose()?;
            let e = evaluate(template.at(k)?, acceptor)?;
            match format {
                Format::Json => print_json(&json!({
                    "schema": 1,
                    "strands": e.spec.strands,
                    "colors": e.spec.colors.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "orientations": format_orientations(&e.orientations),
                    "level": e.spec.level,
                    "word": e.spec.braid_word()?.to_string(),
                    "re": sig12(e.re),
                    "im": sig12(e.im),
                    "jones_re": sig12(e.jones_re),
                    "jones_im": sig12(e.jones_im),
                    "probability": sig12(e.probability),
                    "moves": e.moves,
                    "bound": sig12(e.bound),
                    "writhe": e.writhe,
                    "wordLength": e.word_length,
                })),
                Format::Text => {
                    println!("value        {} {:+}i", sig12(e.re), sig12(e.im));
                    println!("normalized   {} {:+}i", sig12(e.jones_re), sig12(e.jones_im));
                    println!("probability  {}", sig12(e.probability));
                    println!("moves        {} (bound {})", e.moves, sig12(e.bound));
                    println!("writhe       {}", e.writhe);
                }
                Format::Csv => return Err(usage("eval supports --format json or text")),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep { plat, k_min, k_max, format } => {
            if k_min > k_max {
                return Err(usage("--k-min must not exceed --k-max"));
            }
            let template = Template::from_args(&plat)?;
            let specs = (k_min..=k_max).map(|k| template.at(k)).collect::<Result<Vec<_>, _>>()?;
            let start = Instant::now();
            let rows: Vec<Result<Evaluation, Failure>> = std::thread::scope(|s| {
                let handles: Vec<_> = specs.into_iter().map(|spec| s.spawn(move || evaluate(spec, None))).collect();
                handles.into_iter().map(|h| h.join().expect("sweep worker panicked")).collect()
            });
            let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
            info!("swept {} levels in {:?}", rows.len(), start.elapsed());
            match format {
                Format::Csv => {
                    let mut out = String::from("k,re,im,jones_re,jones_im\n");
                    for e in &rows {
                        let _ = writeln!(
                            out,
                            "{},{},{},{},{}",
                            e.spec.level,
                            sig12(e.re),
                            sig12(e.im),
                            sig12(e.jones_re),
                            sig12(e.jones_im)
                        );
                    }
                    print!("{out}");
                }
                Format::Json => print_json(&json!({
                    "schema": 1,
                    "rows": rows.iter().map(|e| json!({
                        "k": e.spec.level,
                        "re": sig12(e.re),
                        "im": sig12(e.im),
                        "jones_re": sig12(e.jones_re),
                        "jones_im": sig12(e.jones_im),
                    })).collect::<Vec<_>>(),
                })),
                Format::Text => return Err(usage("sweep supports --format csv or json")),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, max_crossings, seed, format } => {
            let suites: Vec<Suite> = match suite {
                SuiteChoice::All => Suite::ALL.to_vec(),
                SuiteChoice::One(s) => vec![s],
            };
            let opts = VerifyOptions { max_crossings, seed };
            let reports = suites.iter().map(|&s| run_suite(s, &opts)).collect::<Result<Vec<SuiteReport>, _>>()?;
            let passed = reports.iter().all(|r| r.passed);
            match format {
                Format::Text => {
                    for r in &reports {
                        for c in &r.checks {
                            let mark = if c.passed { "PASS" } else { "FAIL" };
                            println!(
                                "{mark} {}/{}: {:.3e} (limit {:.1e}) {}",
                                r.suite, c.name, c.value, c.limit, c.detail
                            );
                        }
                        println!("suite {}: {} in {:.2}s", r.suite, if r.passed { "PASS" } else { "FAIL" }, r.seconds);
                    }
                }
                Format::Json => print_json(&json!({ "schema": 1, "passed": passed, "suites": reports })),
                Format::Csv => return Err(usage("verify supports --format text or json")),
            }
            Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Graph { n, twists, growth, format } => {
            let start = Instant::now();
            if growth {
                let table = if twists { growth_check_twists(n)? } else { growth_check(n)? };
                match format {
                    Format::Csv => print!("{}", table.to_csv()),
                    Format::Json => print_json(&json!({
                        "schema": 1,
                        "twists": twists,
                        "fitted_c": sig12(table.fitted_c),
                        "spread": sig12(table.spread),
                        "rows": table.rows.iter().map(|r| json!({
                            "n": r.n,
                            "vertices": r.vertices,
                            "diameter": r.diameter,
                            "ratio": sig12(r.ratio),
                            "bound": sig12(r.bound),
                        })).collect::<Vec<_>>(),
                    })),
                    Format::Text => return Err(usage("graph supports --format csv or json")),
                }
            } else {
                let g = CouplingGraph::build(n, twists)?;
                let diameter = g.diameter_by_symmetry();
                match format {
                    Format::Csv => {
                        println!("n,twists,vertices,edges,diameter");
                        println!("{n},{twists},{},{},{diameter}", g.vertex_count(), g.edge_count());
                    }
                    Format::Json => print_json(&json!({
                        "schema": 1,
                        "n": n,
                        "twists": twists,
                        "vertices": g.vertex_count(),
                        "edges": g.edge_count(),
                        "diameter": diameter,
                    })),
                    Format::Text => return Err(usage("graph supports --format csv or json")),
                }
            }
            info!("graph done in {:?}", start.elapsed());
            Ok(ExitCode::SUCCESS)
        }
    }
}
