use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use unavoid::construct::{coltight, d2_report, star_colouring, tourtight_report};
use unavoid::detect::{
    find_unavoidable_colouring, find_unavoidable_colouring_with, find_unavoidable_tournament_with,
    Budget,
};
use unavoid::extremal::{
    bipartite_free_greedy, contains_biclique, polarity_graph, zarankiewicz_extremal,
};
use unavoid::farness::{
    colour_farness, min_backward_edges_exact, min_backward_edges_exact_with_cap,
    min_backward_edges_heuristic, FarnessReport, EXACT_CAP,
};
use unavoid::io::{self, Instance};
use unavoid::proofsim::{
    density_increment, dependent_random_choice, long_lemma_iterate, long_lemma_step, Interval,
};
use unavoid::search::{ramsey_colouring_lower, ramsey_table, ramsey_tournament_lower, RamseyKind};
use unavoid::{Colour, Ordering, Rational, Tournament};

use crate::{
    Command, ConstructCommand, DetectArgs, FarnessArgs, InstanceKind, LemmaCommand, OrderingArgs,
    OrderingSource, RamseyCommand, TableKind,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_CAP: u8 = 4;
pub const EXIT_VERIFY: u8 = 5;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum Failure {
    #[error("{0}")]
    Core(#[from] unavoid::Error),
    #[error("{path}: {source}")]
    InFile {
        path: String,
        source: unavoid::Error,
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(String),
    #[error("cannot serialize output: {0}")]
    Json(#[from] serde_json::Error),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        let core = match self {
            Failure::Core(e) | Failure::InFile { source: e, .. } => e,
            Failure::Io { .. } | Failure::Input(_) | Failure::Json(_) => return EXIT_INPUT,
        };
        match core {
            unavoid::Error::BudgetExhausted { .. } => EXIT_BUDGET,
            unavoid::Error::CapExceeded { .. } => EXIT_CAP,
            _ => EXIT_INPUT,
        }
    }
}

type Outcome = Result<u8, Failure>;

pub fn run(command: Command) -> Outcome {
    match command {
        Command::Detect(args) => detect(args),
        Command::Farness(args) => farness(args),
        Command::Construct(c) => construct(c),
        Command::Lemma(c) => lemma(c),
        Command::Ramsey(c) => ramsey(c),
    }
}

/// Prints `payload` as one JSON document tagged with the schema version and
/// command name.
fn emit(command: &str, payload: impl Serialize) -> Result<(), Failure> {
    let mut value = serde_json::to_value(payload)?;
    let object = value.as_object_mut().expect("payloads are objects");
    object.insert("schema_version".into(), json!(SCHEMA_VERSION));
    object.insert("command".into(), json!(command));
    let text = serde_json::to_string_pretty(&value)?;
    writeln!(std::io::stdout().lock(), "{text}").map_err(|source| Failure::Io {
        path: "stdout".into(),
        source,
    })
}

fn verdict(command: &str, payload: Value, passed: bool, summary: String) -> Outcome {
    emit(command, payload)?;
    eprintln!(
        "{command}: {summary} [{}]",
        if passed {
            "verified"
        } else {
            "VERIFICATION FAILED"
        }
    );
    Ok(if passed { EXIT_OK } else { EXIT_VERIFY })
}

fn read_instance(path: &Path) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path).map_err(|source| Failure::Io {
        path: path.display().to_string(),
        source,
    })?;
    io::decode(&text).map_err(|source| Failure::InFile {
        path: path.display().to_string(),
        source,
    })
}

fn read_tournament(path: &Path) -> Result<Tournament, Failure> {
    match read_instance(path)? {
        Instance::Tournament(t) => Ok(t),
        _ => Err(Failure::Input(format!(
            "{}: expected a tournament file",
            path.display()
        ))),
    }
}

fn write_output(path: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    if let Some(path) = path {
        fs::write(path, text).map_err(|source| Failure::Io {
            path: path.display().to_string(),
            source,
        })?;
    }
    Ok(())
}

fn parse_rational(name: &str, text: &str) -> Result<Rational, Failure> {
    text.trim()
        .parse::<Rational>()
        .map_err(|_| Failure::Input(format!("--{name}: expected a rational p/q, got {text:?}")))
}

fn parse_interval(name: &str, text: &str) -> Result<Interval, Failure> {
    let bad = || Failure::Input(format!("--{name}: expected start..end, got {text:?}"));
    let (start, end) = text.split_once("..").ok_or_else(bad)?;
    let start: usize = start.trim().parse().map_err(|_| bad())?;
    let end: usize = end.trim().parse().map_err(|_| bad())?;
    if start > end {
        return Err(bad());
    }
    Ok(Interval::new(start, end))
}

fn detect(args: DetectArgs) -> Outcome {
    let mut budget = Budget::new(args.budget);
    let (n, witness, valid) = match (args.kind, read_instance(&args.input)?) {
        (InstanceKind::Colouring, Instance::Colouring(c)) => {
            let w = find_unavoidable_colouring_with(&c, args.t, &mut budget)?;
            let valid = w.as_ref().is_none_or(|w| w.verify_colouring(&c, args.t));
            (c.n(), w, valid)
        }
        (InstanceKind::Tournament, Instance::Tournament(tour)) => {
            let w = find_unavoidable_tournament_with(&tour, args.t, &mut budget)?;
            let valid = w
                .as_ref()
                .is_none_or(|w| w.verify_tournament(&tour, args.t));
            (tour.n(), w, valid)
        }
        _ => {
            return Err(Failure::Input(format!(
                "{}: file contents do not match --kind",
                args.input.display()
            )))
        }
    };
    let summary = format!(
        "n = {n}, t = {}, pattern {} after {} nodes",
        args.t,
        if witness.is_some() { "found" } else { "absent" },
        budget.used()
    );
    let mut payload = json!({
        "found": witness.is_some(),
        "n": n,
        "t": args.t,
        "nodes_explored": budget.used(),
    });
    if let Some(w) = witness {
        payload["witness"] = serde_json::to_value(w)?;
    }
    verdict("detect", payload, valid, summary)
}

fn farness_payload(report: &FarnessReport) -> Value {
    json!({
        "numerator": report.numerator,
        "n": report.n,
        "delta": report.delta().to_string(),
        "kind": report.kind,
        "ordering": report.ordering().map(Ordering::into_vec),
        "certificate": report.certificate,
    })
}

fn farness(args: FarnessArgs) -> Outcome {
    let report = match read_instance(&args.input)? {
        Instance::Colouring(c) => colour_farness(&c),
        Instance::Tournament(tour) => {
            if args.heuristic || (!args.exact && tour.n() > args.cap) {
                min_backward_edges_heuristic(&tour, args.seed, args.restarts)
            } else {
                min_backward_edges_exact_with_cap(&tour, args.cap)?
            }
        }
        _ => {
            return Err(Failure::Input(format!(
                "{}: expected a colouring or tournament file",
                args.input.display()
            )))
        }
    };
    eprintln!(
        "farness: n = {}, numerator = {}, delta = {} ({:?})",
        report.n,
        report.numerator,
        report.delta(),
        report.kind
    );
    emit("farness", farness_payload(&report))?;
    Ok(EXIT_OK)
}

fn construct(command: ConstructCommand) -> Outcome {
    match command {
        ConstructCommand::Coltight {
            n,
            t,
            seed,
            budget,
            output,
        } => {
            let built = coltight(n, t, seed, budget)?;
            let text = io::encode_colouring(&built.colouring);
            write_output(&output, &text)?;
            let r = &built.report;
            let summary = format!(
                "n = {n}, t = {t}, ex = {} (exhaustive: {}), red = {}, blue = {}",
                r.extremal_edges, r.extremal_exhaustive, r.red, r.blue
            );
            let passed = r.passed();
            let payload = json!({
                "construction": "coltight",
                "report": r,
                "passed": passed,
                "instance": text,
            });
            verdict("construct coltight", payload, passed, summary)
        }
        ConstructCommand::Tourtight {
            input,
            a,
            b,
            t,
            seed,
            restarts,
            output,
        } => {
            let h = match &input {
                Some(path) => match read_instance(path)? {
                    Instance::Bipartite(h) => h,
                    _ => {
                        return Err(Failure::Input(format!(
                            "{}: expected a bipartite file",
                            path.display()
                        )))
                    }
                },
                None => bipartite_free_greedy(a, b, t.div_ceil(2), t, seed, restarts)?,
            };
            let (tour, sigma, report) = tourtight_report(&h, t)?;
            let text = io::encode_tournament(&tour);
            write_output(&output, &text)?;
            let summary = format!(
                "|A| = {}, |B| = {}, e(H) = {}, backward = {}, fas = {:?}",
                report.a_size, report.b_size, report.h_edges, report.backward, report.fas_exact
            );
            let passed = report.passed();
            let payload = json!({
                "construction": "tourtight",
                "report": report,
                "passed": passed,
                "bipartite": io::encode_bipartite(&h),
                "ordering": sigma.into_vec(),
                "instance": text,
            });
            verdict("construct tourtight", payload, passed, summary)
        }
        ConstructCommand::Star { n, t, output } => {
            let c = star_colouring(n)?;
            let text = io::encode_colouring(&c);
            write_output(&output, &text)?;
            let pattern_free = n < 2 * t || find_unavoidable_colouring(&c, t)?.is_none();
            let farness = colour_farness(&c);
            let expected = Rational::new(n as i64 - 1, (n * n) as i64);
            let farness_matches = farness.delta() == expected;
            let passed = pattern_free && farness_matches;
            let payload = json!({
                "construction": "star",
                "n": n,
                "t": t,
                "pattern_free": pattern_free,
                "numerator": farness.numerator,
                "delta": farness.delta().to_string(),
                "farness_matches": farness_matches,
                "passed": passed,
                "instance": text,
            });
            verdict(
                "construct star",
                payload,
                passed,
                format!("n = {n}, delta = {}", farness.delta()),
            )
        }
        ConstructCommand::D2rec { depth, output } => {
            let (tour, report) = d2_report(depth)?;
            let text = io::encode_tournament(&tour);
            write_output(&output, &text)?;
            let passed = report.passed();
            let summary = format!(
                "depth = {depth}, n = {}, fas = {:?}",
                report.n, report.fas_exact
            );
            let mut payload = serde_json::to_value(&report)?;
            payload["construction"] = json!("d2rec");
            payload["passed"] = json!(passed);
            payload["instance"] = json!(text);
            verdict("construct d2rec", payload, passed, summary)
        }
        ConstructCommand::Polarity { q, output } => {
            let g = polarity_graph(q)?;
            let text = io::encode_graph(&g);
            write_output(&output, &text)?;
            let expected_n = (q * q + q + 1) as usize;
            let c4_free = !contains_biclique(&g, 2, 2)?;
            let passed = c4_free && g.n() == expected_n;
            let payload = json!({
                "construction": "polarity",
                "q": q,
                "n": g.n(),
                "edge_count": g.edge_count(),
                "c4_free": c4_free,
                "passed": passed,
                "instance": text,
            });
            let summary = format!("q = {q}, n = {}, edges = {}", g.n(), g.edge_count());
            verdict("construct polarity", payload, passed, summary)
        }
        ConstructCommand::Zarankiewicz {
            n,
            a,
            b,
            budget,
            output,
        } => {
            let record = zarankiewicz_extremal(n, a, b, budget)?;
            let text = io::encode_graph(&record.graph);
            write_output(&output, &text)?;
            let free = !contains_biclique(&record.graph, a, b)?;
            let passed = free && record.graph.edge_count() == record.edge_count;
            let summary = format!(
                "ex({n}, K_{{{a},{b}}}) {} {}",
                if record.exhaustive { "=" } else { ">=" },
                record.edge_count
            );
            let mut payload = serde_json::to_value(&record)?;
            payload["construction"] = json!("zarankiewicz");
            payload["biclique_free"] = json!(free);
            payload["passed"] = json!(passed);
            payload["instance"] = json!(text);
            verdict("construct zarankiewicz", payload, passed, summary)
        }
    }
}

fn ordering_for(
    tour: &Tournament,
    args: &OrderingArgs,
) -> Result<(Ordering, &'static str), Failure> {
    let report = match args.order {
        OrderingSource::Identity => return Ok((Ordering::identity(tour.n()), "identity")),
        OrderingSource::Exact => min_backward_edges_exact(tour)?,
        OrderingSource::Heuristic => min_backward_edges_heuristic(tour, args.seed, args.restarts),
        OrderingSource::Auto if tour.n() <= EXACT_CAP => min_backward_edges_exact(tour)?,
        OrderingSource::Auto => min_backward_edges_heuristic(tour, args.seed, args.restarts),
    };
    let name = match report.kind {
        unavoid::farness::Exactness::Exact => "exact",
        unavoid::farness::Exactness::HeuristicUpperBound => "heuristic",
    };
    Ok((report.ordering().expect("tournament ordering"), name))
}

fn lemma(command: LemmaCommand) -> Outcome {
    match command {
        LemmaCommand::LongStep {
            input,
            alpha,
            ordering,
        } => {
            let tour = read_tournament(&input)?;
            let alpha = parse_rational("alpha", &alpha)?;
            let (sigma, source) = ordering_for(&tour, &ordering)?;
            let certificate = long_lemma_step(&tour, &sigma, alpha)?;
            let payload = json!({
                "n": tour.n(),
                "alpha": alpha.to_string(),
                "ordering_source": source,
                "ordering": sigma.as_slice(),
                "certificate": certificate,
            });
            let summary = format!("n = {}, alpha = {alpha}", tour.n());
            verdict("lemma long-step", payload, true, summary)
        }
        LemmaCommand::LongIter {
            input,
            c,
            r,
            seed,
            restarts,
        } => {
            let tour = read_tournament(&input)?;
            let c = parse_rational("c", &c)?;
            let result = long_lemma_iterate(&tour, c, r, seed, restarts)?;
            let summary = format!(
                "n = {}, {} step(s), outcome {:?}",
                tour.n(),
                result.trace.len(),
                result.outcome
            );
            let mut payload = serde_json::to_value(&result)?;
            payload["n"] = json!(tour.n());
            payload["c"] = json!(c.to_string());
            payload["r"] = json!(r);
            verdict("lemma long-iter", payload, true, summary)
        }
        LemmaCommand::DensityInc {
            input,
            i,
            j,
            epsilon,
            ordering,
        } => {
            let tour = read_tournament(&input)?;
            let i = parse_interval("i", &i)?;
            let j = parse_interval("j", &j)?;
            let epsilon = parse_rational("epsilon", &epsilon)?;
            let (sigma, source) = ordering_for(&tour, &ordering)?;
            let certificate = density_increment(&tour, &sigma, i, j, epsilon)?;
            let payload = json!({
                "n": tour.n(),
                "i": i,
                "j": j,
                "epsilon": epsilon.to_string(),
                "ordering_source": source,
                "ordering": sigma.as_slice(),
                "certificate": certificate,
            });
            verdict(
                "lemma density-inc",
                payload,
                true,
                format!("n = {}", tour.n()),
            )
        }
        LemmaCommand::Drc {
            input,
            colour,
            k,
            t,
            seed,
            tries,
        } => {
            let g = match read_instance(&input)? {
                Instance::Graph(g) => g,
                Instance::Colouring(c) => match colour.as_str() {
                    "red" => c.colour_class(Colour::Red),
                    "blue" => c.colour_class(Colour::Blue),
                    other => {
                        return Err(Failure::Input(format!(
                            "--colour: expected red or blue, got {other:?}"
                        )))
                    }
                },
                _ => {
                    return Err(Failure::Input(format!(
                        "{}: expected a graph or colouring file",
                        input.display()
                    )))
                }
            };
            let certificate = dependent_random_choice(&g, k, t, seed, tries)?;
            let summary = format!(
                "n = {}, K = {k}, t = {t}: {}",
                g.n(),
                if certificate.is_some() {
                    "set found"
                } else {
                    "no set"
                }
            );
            let payload = json!({
                "n": g.n(),
                "k": k,
                "t": t,
                "found": certificate.is_some(),
                "certificate": certificate,
            });
            verdict("lemma drc", payload, true, summary)
        }
    }
}

fn ramsey_kind(kind: TableKind) -> RamseyKind {
    match kind {
        TableKind::C => RamseyKind::C,
        TableKind::D => RamseyKind::D,
    }
}

fn ramsey(command: RamseyCommand) -> Outcome {
    match command {
        RamseyCommand::Exact {
            kind,
            t,
            n,
            witness_dir,
        } => {
            let table = ramsey_table(ramsey_kind(kind), t, &n)?;
            let mut payload = serde_json::to_value(&table)?;
            if let Some(dir) = &witness_dir {
                fs::create_dir_all(dir).map_err(|source| Failure::Io {
                    path: dir.display().to_string(),
                    source,
                })?;
                for (row, value) in table
                    .rows
                    .iter()
                    .zip(payload["rows"].as_array_mut().expect("rows"))
                {
                    let path = dir.join(format!("ramsey-{:?}-t{}-n{}.txt", row.kind, row.t, row.n));
                    write_output(&Some(path.clone()), &row.witness)?;
                    value["witness_path"] = json!(path.display().to_string());
                }
            }
            for row in &table.rows {
                eprintln!(
                    "ramsey: {:?} t = {} n = {}: m* = {} ({})",
                    row.kind, row.t, row.n, row.m_star, row.delta
                );
            }
            emit("ramsey exact", payload)?;
            Ok(EXIT_OK)
        }
        RamseyCommand::Mine {
            kind,
            t,
            n,
            target,
            seed,
            budget,
            initial,
        } => {
            let initial = match &initial {
                Some(path) => Some(read_instance(path)?),
                None => None,
            };
            let result = match (kind, initial) {
                (TableKind::C, None) => ramsey_colouring_lower(t, n, target, seed, budget, None)?,
                (TableKind::C, Some(Instance::Colouring(c))) => {
                    ramsey_colouring_lower(t, n, target, seed, budget, Some(&c))?
                }
                (TableKind::D, None) => ramsey_tournament_lower(t, n, target, seed, budget, None)?,
                (TableKind::D, Some(Instance::Tournament(tour))) => {
                    ramsey_tournament_lower(t, n, target, seed, budget, Some(&tour))?
                }
                _ => return Err(Failure::Input("--initial does not match --kind".into())),
            };
            let summary = format!(
                "{:?} t = {t} n = {n}: best {} after {} iterations (target {target})",
                result.kind, result.best_value, result.iterations
            );
            let found = result.found;
            emit("ramsey mine", &result)?;
            eprintln!(
                "ramsey: {summary}{}",
                if found { ", target reached" } else { "" }
            );
            Ok(EXIT_OK)
        }
    }
}
