//! `szw`: compute Szeged/Wiener invariant reports, build extremal families,
//! and scan graph streams against the named theorem checks.
//!
//! Exit codes: 0 = all pass, 1 = counterexample or prediction mismatch,
//! 2 = usage or input error.

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use szw_core::checks::{evaluate, CheckId, CheckOutcome, CheckStatus};
use szw_core::enumeration::{builtin_enumerate, stream_graph6, GraphFilter};
use szw_core::families::{
    build, eta_c4_trees, eta_c5_trees, eta_knt_special, eta_star_c3_trees_q4, FamilySpec,
};
use szw_core::invariants::{eta, eta_star_q4, full_report};
use szw_core::scan::{scan, ScanReport};
use szw_core::{encode_graph6, parse_edge_list, Graph};

#[derive(Parser)]
#[command(
    name = "szw",
    version,
    about = "Exact Szeged-Wiener difference toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant report (W, Sz, 4Sz*, eta, 4eta*, c, h) per input graph.
    Compute(ComputeArgs),
    /// Build a family member; optionally compare closed form vs measurement.
    Family(FamilyArgs),
    /// Run one check over a builtin enumeration or a graph6 stream.
    Scan(ScanArgs),
    /// Run one check over each graph of a file, reporting every outcome.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Input format.
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    /// Input path, or - for stdin.
    #[arg(long = "in", value_name = "FILE", default_value = "-")]
    input: String,
    /// Report format.
    #[arg(long, value_enum, default_value = "json")]
    out: Output,
}

#[derive(Args)]
struct FamilyArgs {
    /// One of complete:n, cycle:k, knt:n,t, ctrees:k:s1,...,sk.
    spec: String,
    /// Also print the closed-form prediction and the measured value.
    #[arg(long)]
    predict: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["n", "input"])))]
struct ScanArgs {
    /// Built-in enumeration order (1..=8).
    #[arg(long, value_name = "N")]
    n: Option<usize>,
    /// graph6 stream path, or - for stdin.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<String>,
    /// Check name from the registry.
    #[arg(long, value_name = "ID")]
    check: CheckIdArg,
    /// Comma-separated filter tokens (builtin source only): connected,
    /// 2connected, bipartite, noncomplete, mingirth=K, order=N.
    #[arg(long, value_name = "LIST", conflicts_with = "input")]
    filter: Option<String>,
    /// Worker threads; the report is identical for any count.
    #[arg(long, value_name = "K")]
    workers: Option<usize>,
    /// Apply conjecture4's bound at every order, not just n >= 10.
    #[arg(long)]
    relaxed: bool,
    /// Fail unless the stream carries exactly this many valid records.
    #[arg(long, value_name = "N", conflicts_with = "n")]
    expected_count: Option<u64>,
    /// Count and skip malformed lines instead of aborting.
    #[arg(long, conflicts_with = "n")]
    lenient: bool,
    /// Report format.
    #[arg(long, value_enum, default_value = "json")]
    out: Output,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check name from the registry.
    #[arg(long, value_name = "ID")]
    check: CheckIdArg,
    /// Input path, or - for stdin.
    #[arg(long = "in", value_name = "FILE", default_value = "-")]
    input: String,
    /// Input format.
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    /// Apply conjecture4's bound at every order.
    #[arg(long)]
    relaxed: bool,
    /// Report format.
    #[arg(long, value_enum, default_value = "json")]
    out: Output,
}

/// clap adapter for the registry names.
#[derive(Clone)]
struct CheckIdArg(CheckId);

impl std::str::FromStr for CheckIdArg {
    type Err = szw_core::Error;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        s.parse().map(CheckIdArg)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Compute(args) => compute(args),
        Command::Family(args) => family(args),
        Command::Scan(args) => run_scan(args),
        Command::Verify(args) => verify(args),
    }
}

fn open_input(path: &str) -> Result<Box<dyn BufRead + Send>> {
    if path == "-" {
        Ok(Box::new(BufReader::new(std::io::stdin())))
    } else {
        let file = File::open(path).with_context(|| format!("cannot open {path}"))?;
        Ok(Box::new(BufReader::new(file)))
    }
}

fn read_graphs(path: &str, format: Format) -> Result<Vec<Graph>> {
    let mut reader = open_input(path)?;
    match format {
        Format::Graph6 => {
            let mut out = Vec::new();
            for item in stream_graph6(reader) {
                out.push(item?);
            }
            Ok(out)
        }
        Format::Edgelist => {
            let mut text = String::new();
            reader.read_to_string(&mut text)?;
            Ok(vec![parse_edge_list(&text)?])
        }
    }
}

fn compute(args: ComputeArgs) -> Result<u8> {
    let graphs = read_graphs(&args.input, args.format)?;
    if args.out == Output::Csv {
        println!("graph6,n,m,w,sz,sz4,eta,eta4");
    }
    for g in &graphs {
        let report = full_report(g)?;
        let graph6 = encode_graph6(g);
        match args.out {
            Output::Json => {
                let mut value = serde_json::to_value(&report)?;
                value
                    .as_object_mut()
                    .expect("report serializes to an object")
                    .insert("graph6".into(), graph6.into());
                println!("{}", serde_json::to_string(&value)?);
            }
            Output::Csv => {
                println!(
                    "{graph6},{},{},{},{},{},{},{}",
                    report.n, report.m, report.w, report.sz, report.sz4, report.eta, report.eta4
                );
            }
        }
    }
    Ok(0)
}

/// Closed-form prediction for a spec, when the bounds give one:
/// the value name ("eta" or "eta4") and the predicted number.
fn prediction(spec: &FamilySpec) -> Option<(&'static str, i64)> {
    match spec {
        FamilySpec::Complete(_) => Some(("eta", 0)),
        FamilySpec::Knt { n, t } if *n >= 4 && (*t == 2 || *t == n - 2) => {
            Some(("eta", eta_knt_special(*n, *t).ok()?))
        }
        FamilySpec::Knt { .. } => None,
        FamilySpec::Cycle(3) => Some(("eta4", eta_star_c3_trees_q4([1, 1, 1]))),
        FamilySpec::Cycle(4) => Some(("eta", eta_c4_trees([1, 1, 1, 1]))),
        FamilySpec::Cycle(5) => Some(("eta", eta_c5_trees([1, 1, 1, 1, 1]))),
        FamilySpec::Cycle(_) => None,
        FamilySpec::CycleWithTrees { k, sizes } => {
            let t: Vec<i64> = sizes.iter().map(|&s| s as i64).collect();
            match k {
                3 => Some(("eta4", eta_star_c3_trees_q4([t[0], t[1], t[2]]))),
                4 => Some(("eta", eta_c4_trees([t[0], t[1], t[2], t[3]]))),
                5 => Some(("eta", eta_c5_trees([t[0], t[1], t[2], t[3], t[4]]))),
                _ => None,
            }
        }
    }
}

fn family(args: FamilyArgs) -> Result<u8> {
    let spec: FamilySpec = args.spec.parse()?;
    let g = build(&spec)?;
    println!("{}", encode_graph6(&g));
    if !args.predict {
        return Ok(0);
    }
    match prediction(&spec) {
        Some((name, predicted)) => {
            let measured = match name {
                "eta4" => eta_star_q4(&g)?,
                _ => eta(&g)?,
            };
            println!("predicted {name} = {predicted}");
            println!("measured {name} = {measured}");
            Ok(u8::from(measured != predicted))
        }
        None => {
            println!("predicted: none (no closed form for {spec})");
            println!("measured eta = {}", eta(&g)?);
            Ok(0)
        }
    }
}

fn print_scan_report(report: &ScanReport, out: Output) -> Result<()> {
    match out {
        Output::Json => println!("{}", serde_json::to_string_pretty(report)?),
        Output::Csv => {
            println!("graph6,check,status,eta,bound");
            for ce in &report.counterexamples {
                println!(
                    "{},{},fail,{},{}",
                    ce.graph6,
                    report.check,
                    csv_field(&ce.observed, &["eta", "eta4", "c_min", "min_diff"]),
                    csv_field(
                        &ce.observed,
                        &["bound", "floor", "expected", "refined_bound"]
                    ),
                );
            }
        }
    }
    Ok(())
}

fn csv_field(observed: &std::collections::BTreeMap<String, i64>, keys: &[&str]) -> String {
    keys.iter()
        .find_map(|k| observed.get(*k).map(|v| v.to_string()))
        .unwrap_or_default()
}

fn run_scan(args: ScanArgs) -> Result<u8> {
    let check = args.check.0;
    let workers = args
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()));
    let mut report = match (args.n, &args.input) {
        (Some(n), None) => {
            let filter: GraphFilter = args.filter.as_deref().unwrap_or("").parse()?;
            let graphs = builtin_enumerate(n, &filter)?;
            scan(graphs.into_iter().map(Ok), check, args.relaxed, workers)?
        }
        (None, Some(path)) => {
            let stream = stream_graph6(open_input(path)?).lenient(args.lenient);
            let skipped = stream.skipped_counter();
            let mut report = scan(stream, check, args.relaxed, workers)?;
            report.skipped_lines = skipped.load(std::sync::atomic::Ordering::Relaxed);
            report
        }
        _ => unreachable!("clap enforces exactly one source"),
    };
    if let Some(expected) = args.expected_count {
        if report.total != expected {
            bail!(
                "stream cardinality mismatch: expected {expected} graphs, examined {} \
                 (skipped {})",
                report.total,
                report.skipped_lines
            );
        }
    }
    report
        .counterexamples
        .sort_by(|a, b| a.graph6.cmp(&b.graph6));
    print_scan_report(&report, args.out)?;
    Ok(u8::from(!report.clean()))
}

fn outcome_json(graph6: &str, out: &CheckOutcome) -> Result<String> {
    let value = serde_json::json!({
        "graph6": graph6,
        "check": out.check,
        "status": out.status,
        "observed": out.observed,
        "trace": out.trace,
    });
    Ok(serde_json::to_string(&value)?)
}

fn verify(args: VerifyArgs) -> Result<u8> {
    let check = args.check.0;
    let graphs = read_graphs(&args.input, args.format)?;
    if args.out == Output::Csv {
        println!("graph6,check,status,eta,bound");
    }
    let mut any_fail = false;
    for g in &graphs {
        let graph6 = encode_graph6(g);
        let outcome = evaluate(check, g, args.relaxed)
            .map_err(|e| anyhow!("check {check} on {graph6}: {e}"))?;
        any_fail |= outcome.status == CheckStatus::Fail;
        match args.out {
            Output::Json => println!("{}", outcome_json(&graph6, &outcome)?),
            Output::Csv => {
                let status = match outcome.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Fail => "fail",
                    CheckStatus::NotApplicable => "not_applicable",
                };
                println!(
                    "{graph6},{check},{status},{},{}",
                    csv_field(&outcome.observed, &["eta", "eta4", "c_min", "min_diff"]),
                    csv_field(
                        &outcome.observed,
                        &["bound", "floor", "expected", "refined_bound"]
                    ),
                );
            }
        }
    }
    Ok(u8::from(any_fail))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn predictions_match_spec_families() {
        let spec: FamilySpec = "ctrees:5:3,1,1,1,1".parse().unwrap();
        assert_eq!(prediction(&spec), Some(("eta", 9)));
        let spec: FamilySpec = "knt:7,2".parse().unwrap();
        assert_eq!(prediction(&spec), Some(("eta", 8)));
        let spec: FamilySpec = "knt:7,3".parse().unwrap();
        assert_eq!(prediction(&spec), None);
        let spec: FamilySpec = "ctrees:3:2,1,1".parse().unwrap();
        assert_eq!(prediction(&spec), Some(("eta4", 26)));
        let spec: FamilySpec = "cycle:5".parse().unwrap();
        assert_eq!(prediction(&spec), Some(("eta", 5)));
    }
}
