use std::process::ExitCode;

use clap::{Parser, Subcommand};
use spectral_chroma::bounds::{full_report, round_display, sweep, BoundId, GraphSpectra};
use spectral_chroma::certify::{build_conversion, verify_loan_identity, verify_majorization_step, Coloring};
use spectral_chroma::experiments::{
    comparison_csv, corpus_check, default_named, named_comparison, random_table, random_table_csv, report_json,
    ORACLE_LIMIT,
};
use spectral_chroma::graph::{resolve_input, GraphMatrixKind};
use spectral_chroma::oracle::{chromatic_number, greedy_coloring, k_coloring};
use spectral_chroma::Error;

const EXIT_USAGE: u8 = 1;
const EXIT_COMPUTE: u8 = 2;
const EXIT_VERIFY: u8 = 3;

/// Spectral lower bounds on the chromatic number.
///
/// Graph inputs are a graph6 string, `@file` (graph6 or edge list), or
/// `gen:family(args)`, e.g. `gen:circulant(16;1,7,8)`.
#[derive(Parser)]
#[command(name = "spectral-chroma", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Every bound for one graph.
    Bounds {
        input: String,
        /// Full-precision JSON instead of the one-decimal table.
        #[arg(long)]
        json: bool,
    },
    /// Per-m values of a generalized bound, as CSV.
    Sweep {
        input: String,
        #[arg(long)]
        bound: BoundId,
    },
    /// Builds and checks the conversion, majorization and LOAN certificates.
    Certify {
        input: String,
        /// Use an exact coloring with this many colors instead of greedy.
        #[arg(long)]
        colors: Option<usize>,
        /// Print the conversion certificate as JSON after the residuals.
        #[arg(long)]
        export: bool,
    },
    /// Exact chromatic number with a witness coloring.
    Chromatic { input: String },
    /// Averages of Hoffman / Kolotilina bounds over G(n, p) samples.
    RandomTable {
        /// Comma-separated `n:p` pairs.
        #[arg(long, default_value = "20:0.5,20:0.7,20:0.9,50:0.5,50:0.7,50:0.9")]
        rows: String,
        #[arg(long, default_value_t = 15)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Bounds and χ for a list of graphs.
    Compare {
        /// `default` selects the built-in list.
        #[arg(long)]
        named: Option<String>,
        /// Extra graph inputs, compared after the named list.
        #[arg(long = "graph")]
        graphs: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Soundness, certification and dominance over all small graphs.
    CorpusCheck {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
}

enum Failure {
    Usage(String),
    Compute(Error),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

type Outcome = Result<(), Failure>;

fn json_line(text: serde_json::Result<String>) -> Outcome {
    println!("{}", text.expect("reports contain only finite numbers and string keys"));
    Ok(())
}

fn bounds(input: &str, json: bool) -> Outcome {
    let g = resolve_input(input)?;
    let report = full_report(&g)?;
    let chi = if g.n() <= ORACLE_LIMIT { Some(chromatic_number(&g)?.chi) } else { None };
    if json {
        return json_line(serde_json::to_string_pretty(&report_json(input, &report, chi)));
    }
    println!("graph {}  n {}  edges {}", report.graph, report.n, report.edges);
    if let Some(chi) = chi {
        println!("chi {chi}");
    }
    for (b, d) in report.bounds.iter().zip(&report.rounded_display) {
        let shown = d.map_or("-".to_string(), |v| format!("{v:.1}"));
        let head = format!("{} {shown}", b.id);
        if b.valid {
            println!("{head:<26} m={:<3} {:.9}", b.best_m, b.value);
        } else {
            println!("{head:<26} invalid");
        }
    }
    Ok(())
}

fn sweep_cmd(input: &str, bound: BoundId) -> Outcome {
    let g = resolve_input(input)?;
    let spectra = GraphSpectra::compute(&g)?;
    let entries = sweep(bound, &spectra)?;
    println!("m,numerator,denominator,value,display");
    for e in entries {
        let (v, d) = e.value.map_or((String::new(), String::new()), |v| (v.to_string(), format!("{:.1}", round_display(v))));
        println!("{},{},{},{v},{d}", e.m, e.numerator, e.denominator);
    }
    Ok(())
}

fn certify(input: &str, colors: Option<usize>, export: bool) -> Outcome {
    let g = resolve_input(input)?;
    let col = match colors {
        None => greedy_coloring(&g),
        Some(k) => {
            let found = k_coloring(&g, k)?.ok_or_else(|| Error::Domain(format!("graph has no proper {k}-coloring")))?;
            Coloring::new(found.colors().to_vec(), k)?
        }
    };
    let a = g.matrix(GraphMatrixKind::Adjacency)?;
    let mut breaches = Vec::new();
    println!("colors {}  c {}", col.colors().iter().map(usize::to_string).collect::<Vec<_>>().join(" "), col.c());

    let cert = build_conversion(&a, &col)?;
    println!("conversion residual {:e} (tolerance {:e})", cert.residual, cert.tolerance);
    if !cert.passes() {
        breaches.push("conversion");
    }

    let d: Vec<f64> = g.degrees().iter().map(|&x| x as f64).collect();
    let neg: Vec<f64> = d.iter().map(|x| -x).collect();
    for (label, b) in [("0", vec![0.0; g.n()]), ("D", d), ("-D", neg)] {
        let r = verify_majorization_step(&a, &b, &col)?;
        println!(
            "majorization B={label:<2} residual {:e} (tolerance {:e}) min slack {:e}",
            r.identity_residual,
            r.identity_tolerance,
            r.spectral_slack()
        );
        if !r.passes() {
            breaches.push("majorization");
        }
    }

    let loan = verify_loan_identity(&g, &col)?;
    println!("loan residual {:e} (tolerance {:e})", loan.identity_residual, loan.identity_tolerance);
    println!(
        "loan average degree {} quadratic {} delta_n {:e}",
        loan.average_degree, loan.average_degree_quadratic, loan.delta_min
    );
    if !loan.passes() {
        breaches.push("loan");
    }

    if export {
        json_line(serde_json::to_string_pretty(&cert.export()))?;
    }
    if breaches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verify(format!("failed checks: {}", breaches.join(", "))))
    }
}

fn chromatic(input: &str) -> Outcome {
    let g = resolve_input(input)?;
    let r = chromatic_number(&g)?;
    println!("chi {}", r.chi);
    println!("witness {}", r.witness.colors().iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
    Ok(())
}

fn parse_rows(spec: &str) -> Result<Vec<(usize, f64)>, Failure> {
    spec.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|item| {
            let bad = || Failure::Usage(format!("row `{item}` is not `n:p`"));
            let (n, p) = item.trim().split_once(':').ok_or_else(bad)?;
            Ok((n.parse().map_err(|_| bad())?, p.parse().map_err(|_| bad())?))
        })
        .collect()
}

fn random_table_cmd(rows: &str, samples: usize, seed: u64, json: bool) -> Outcome {
    let rows = parse_rows(rows)?;
    let table = random_table(&rows, samples, seed)?;
    if json {
        json_line(serde_json::to_string_pretty(&table))
    } else {
        print!("{}", random_table_csv(&table));
        Ok(())
    }
}

fn compare(named: Option<&str>, graphs: &[String], json: bool) -> Outcome {
    let mut items: Vec<(String, String)> = match named {
        None => Vec::new(),
        Some("default") => default_named().into_iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        Some(other) => return Err(Failure::Usage(format!("unknown named list `{other}`"))),
    };
    items.extend(graphs.iter().map(|g| (g.clone(), g.clone())));
    if items.is_empty() {
        return Err(Failure::Usage("nothing to compare: pass --named default or --graph".into()));
    }
    let rows = named_comparison(&items);
    if json {
        let out: Vec<serde_json::Value> = rows
            .iter()
            .map(|r| match &r.report {
                Some(rep) => serde_json::to_value(report_json(&r.name, rep, r.chi)).expect("report serializes"),
                None => serde_json::json!({ "graph": r.name, "error": r.error }),
            })
            .collect();
        json_line(serde_json::to_string_pretty(&out))
    } else {
        print!("{}", comparison_csv(&rows));
        Ok(())
    }
}

fn corpus(max_n: usize) -> Outcome {
    let s = corpus_check(max_n)?;
    println!("graphs {}  certified {}  bound checks {}", s.graphs, s.certified, s.bound_checks);
    for f in &s.failures {
        println!("FAIL {:?} {} {}", f.kind, f.graph, f.detail);
    }
    if s.passes() {
        println!("all checks passed");
        Ok(())
    } else {
        Err(Failure::Verify(format!("{} failures", s.failures.len())))
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("SPECTRAL_CHROMA_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        if n > 0 {
            // only fails if a pool already exists, which cannot happen this early
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    configure_threads();
    let outcome = match &cli.command {
        Command::Bounds { input, json } => bounds(input, *json),
        Command::Sweep { input, bound } => sweep_cmd(input, *bound),
        Command::Certify { input, colors, export } => certify(input, *colors, *export),
        Command::Chromatic { input } => chromatic(input),
        Command::RandomTable { rows, samples, seed, json } => random_table_cmd(rows, *samples, *seed, *json),
        Command::Compare { named, graphs, json } => compare(named.as_deref(), graphs, *json),
        Command::CorpusCheck { max_n } => corpus(*max_n),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_COMPUTE)
        }
        Err(Failure::Verify(m)) => {
            eprintln!("verification failed: {m}");
            ExitCode::from(EXIT_VERIFY)
        }
    }
}
