//! `gyro`: graph invariants, coloring-base searches, gyrochromatic bounds and
//! certificate checking.
//!
//! Exit codes: 0 success, 1 invalid certificate (or a failed reproduction), 2 input
//! error, 3 budget exceeded (results are still printed, flagged inexact).

mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use gyro_core::certs::{
    discretize, figure1_certificate, g5_certificate, parse_any, serialize_certificate,
    verify_gyrocoloring, CertificateFile,
};
use gyro_core::graphs::{random_graph, read_graph, to_edge_list, AbelianGroup, Graph};
use gyro_core::gyro::{
    bounds, sigma_group_exact, verify_base, BaseCertificate, BoundsOptions, SigmaOptions,
    ValidityReport,
};
use gyro_core::invariants::{
    chromatic_number, circular_chromatic_budgeted, clique_number, fractional_chromatic,
    independence_number,
};
use gyro_core::reproduce::{reproduce, Fault, ReproduceOptions, Status};
use gyro_core::Error;
use output::{rational, render, Format};

#[derive(Parser, Debug)]
#[command(
    name = "gyro",
    version,
    about = "Gyrochromatic bounds and coloring-base certificates"
)]
struct Cli {
    /// Output format; tables are formatted from the JSON report.
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: Format,
    /// Write the main artifact (edge list or certificate JSON) to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// More log output (repeatable).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct SearchArgs {
    /// Node budget for each homomorphism search.
    #[arg(long, default_value_t = SigmaOptions::default().budget, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Worker threads for base searches.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    threads: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a graph as an edge list.
    Gen {
        /// Graph spec: generator string (e.g. `kneser:5,2`), edge-list file or `-`.
        #[arg(long, required_unless_present = "random")]
        graph: Option<String>,
        /// Instead of --graph, a random G(n, p) graph on this many vertices.
        #[arg(long, conflicts_with = "graph")]
        random: Option<usize>,
        /// Edge probability for --random.
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// α, ω, χ, χ_f and χ_c with witnesses.
    Invariants {
        #[arg(long)]
        graph: String,
        /// Node budget for each χ_c homomorphism test.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        budget: Option<u64>,
        /// Maximal independent sets allowed in the χ_f linear program.
        #[arg(long, default_value_t = 20_000)]
        column_cap: usize,
    },
    /// χ_f ≤ [lower, upper] ≤ χ_c for the gyrochromatic number.
    Bounds {
        #[arg(long)]
        graph: String,
        /// Search Z_2 … Z_nmax.
        #[arg(long, default_value_t = 10)]
        nmax: usize,
        /// Additional groups to search, e.g. `5x5` (repeatable).
        #[arg(long)]
        group: Vec<String>,
        /// Seed certificates: a JSON file or `builtin:g5` / `builtin:figure1` (repeatable).
        #[arg(long)]
        cert: Vec<String>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Best coloring base over a single group.
    Search {
        #[arg(long)]
        graph: String,
        /// `N` for Z_N or `m1xm2x…` for a product of cyclic groups.
        #[arg(long)]
        group: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Check a base certificate or a continuous gyrocolouring against a graph.
    Verify {
        #[arg(long)]
        graph: String,
        /// A JSON file or `builtin:g5` / `builtin:figure1`.
        #[arg(long)]
        cert: String,
    },
    /// Run the reproduction suite and print expected vs computed values.
    Reproduce {
        /// Skip the random corpora and the exhaustive G5 searches.
        #[arg(long)]
        skip_slow: bool,
        #[arg(long, default_value_t = ReproduceOptions::default().seed)]
        seed: u64,
        #[command(flatten)]
        search: SearchArgs,
        /// Corrupt the built-in certificates first (exercises the failure path).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Budget { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Report plus exit code for outcomes that still print a result.
struct Outcome {
    report: Value,
    code: u8,
}

fn write_out(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| input_error(format!("writing {}: {e}", path.display())))
}

fn load_certificate(spec: &str) -> CliResult<CertificateFile> {
    match spec {
        "builtin:g5" => Ok(CertificateFile::Base(g5_certificate())),
        "builtin:figure1" => Ok(CertificateFile::Continuous(figure1_certificate())),
        path => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| input_error(format!("reading {path}: {e}")))?;
            Ok(parse_any(&text)?)
        }
    }
}

fn as_base(cert: &CertificateFile) -> CliResult<BaseCertificate> {
    match cert {
        CertificateFile::Base(c) => Ok(c.clone()),
        CertificateFile::Continuous(c) => Ok(discretize(c)?),
    }
}

fn sigma_options(args: &SearchArgs) -> SigmaOptions {
    SigmaOptions {
        budget: args.budget,
        threads: args.threads as usize,
        ..SigmaOptions::default()
    }
}

fn certificate_json(cert: &BaseCertificate) -> CliResult<Value> {
    let text = serialize_certificate(cert)?;
    Ok(serde_json::from_str(&text).expect("serialised certificate is JSON"))
}

fn cmd_gen(
    graph: Option<&str>,
    random: Option<usize>,
    density: f64,
    seed: u64,
    out: Option<&Path>,
) -> CliResult<String> {
    let g = match (graph, random) {
        (Some(spec), _) => read_graph(spec)?,
        (None, Some(n)) => {
            if !(0.0..=1.0).contains(&density) {
                return Err(input_error("--density must lie in [0, 1]"));
            }
            random_graph(n, density, &mut ChaCha8Rng::seed_from_u64(seed))?
        }
        (None, None) => return Err(input_error("need --graph or --random")),
    };
    let text = to_edge_list(&g);
    if let Some(path) = out {
        write_out(path, &text)?;
    }
    Ok(text)
}

fn cmd_invariants(g: &Graph, budget: Option<u64>, column_cap: usize) -> CliResult<Outcome> {
    let (alpha, alpha_set) = independence_number(g);
    let colouring = chromatic_number(g);
    let circ = circular_chromatic_budgeted(g, budget);
    let mut code = 0;
    let chi_f = match fractional_chromatic(g, column_cap) {
        Ok(w) => {
            let weights = w
                .primal
                .iter()
                .map(|(set, weight)| Ok(json!({ "set": set, "weight": rational(weight)? })))
                .collect::<gyro_core::Result<Vec<_>>>()?;
            json!({
                "value": rational(&w.value)?,
                "method": format!("{:?}", w.method),
                "cover": weights,
            })
        }
        Err(e @ Error::Budget { .. }) => {
            code = 3;
            json!({ "value": null, "error": e.to_string() })
        }
        Err(e) => return Err(e.into()),
    };
    if !circ.exact {
        code = 3;
    }
    let report = json!({
        "graph": g.label(),
        "vertices": g.n(),
        "edges": g.edge_count(),
        "alpha": { "value": alpha, "witness": alpha_set },
        "omega": clique_number(g),
        "chi": { "value": colouring.k, "colouring": colouring.colours },
        "chi_f": chi_f,
        "chi_c": {
            "value": rational(&circ.colouring.value)?,
            "exact": circ.exact,
            "p": circ.colouring.p,
            "q": circ.colouring.q,
            "map": circ.colouring.map,
        },
    });
    Ok(Outcome { report, code })
}

fn parse_group(spec: &str) -> CliResult<AbelianGroup> {
    Ok(AbelianGroup::parse(spec)?)
}

fn report_violation(report: &ValidityReport) {
    if let Some(v) = &report.violation {
        eprintln!(
            "invalid: translates of vertices {} and {} share the element {}",
            v.u, v.v, v.element
        );
    }
}

fn cmd_bounds(
    g: &Graph,
    nmax: usize,
    groups: &[String],
    certs: &[String],
    search: &SearchArgs,
    out: Option<&Path>,
) -> CliResult<Outcome> {
    let extra_groups = groups
        .iter()
        .map(|s| parse_group(s))
        .collect::<CliResult<Vec<_>>>()?;
    let mut seeds = Vec::new();
    for spec in certs {
        let mut cert = as_base(&load_certificate(spec)?)?;
        cert.graph_label = g.label().to_string();
        let report = verify_base(g, &cert)?;
        if !report.is_valid() {
            report_violation(&report);
            return Err(Failure {
                code: 1,
                message: format!("seed certificate {spec} is not valid for {}", g.label()),
            });
        }
        seeds.push(cert);
    }
    let opts = BoundsOptions {
        nmax,
        extra_groups,
        seeds,
        circular_budget: Some(search.budget),
        sigma: sigma_options(search),
        ..BoundsOptions::default()
    };
    let b = bounds(g, &opts)?;
    let cert_text = serialize_certificate(&b.upper.certificate)?;
    let cert_path = match out {
        Some(path) => {
            write_out(path, &cert_text)?;
            Value::String(path.display().to_string())
        }
        None => Value::Null,
    };
    let exact = b.exact && b.chi_c_exact;
    let report = json!({
        "graph": g.label(),
        "chi_f": match &b.chi_f { Some(v) => rational(v)?, None => Value::Null },
        "gyro_lower": rational(&b.lower.value)?,
        "lower_provenance": b.lower.provenance.as_str(),
        "gyro_upper": rational(&b.upper.value)?,
        "upper_source": format!("{:?}", b.upper.source),
        "chi_c": rational(&b.chi_c)?,
        "chi_c_exact": b.chi_c_exact,
        "chi": b.chi,
        "tight": b.is_tight(),
        "exact": exact,
        "certificate_file": cert_path,
        "certificate": certificate_json(&b.upper.certificate)?,
    });
    Ok(Outcome {
        report,
        code: if exact { 0 } else { 3 },
    })
}

fn cmd_search(
    g: &Graph,
    group: &str,
    search: &SearchArgs,
    out: Option<&Path>,
) -> CliResult<Outcome> {
    let group = parse_group(group)?;
    let r = sigma_group_exact(g, &group, &sigma_options(search))?;
    let certificate = match &r.certificate {
        Some(cert) => {
            if let Some(path) = out {
                write_out(path, &serialize_certificate(cert)?)?;
            }
            certificate_json(cert)?
        }
        None => Value::Null,
    };
    let report = json!({
        "graph": g.label(),
        "group": group.label(),
        "sigma": rational(&r.value)?,
        "exact": r.exact,
        "candidates_tested": r.tests,
        "certificate": certificate,
    });
    Ok(Outcome {
        report,
        code: if r.exact { 0 } else { 3 },
    })
}

fn cmd_verify(g: &Graph, spec: &str) -> CliResult<Outcome> {
    let cert = load_certificate(spec)?;
    let (kind, report) = match &cert {
        CertificateFile::Base(c) => ("base", verify_base(g, c)?),
        CertificateFile::Continuous(c) => ("gyrocolouring", verify_gyrocoloring(g, c)?),
    };
    report_violation(&report);
    let violation = report
        .violation
        .as_ref()
        .map(|v| json!({ "u": v.u, "v": v.v, "element": v.element.to_string() }));
    let mut out = json!({
        "graph": g.label(),
        "kind": kind,
        "valid": report.is_valid(),
        "density": rational(&report.density)?,
        "violation": violation,
    });
    if let CertificateFile::Continuous(c) = &cert {
        out["z"] = rational(&c.z)?;
    }
    Ok(Outcome {
        report: out,
        code: if report.is_valid() { 0 } else { 1 },
    })
}

fn cmd_reproduce(
    skip_slow: bool,
    seed: u64,
    search: &SearchArgs,
    inject_fault: bool,
) -> CliResult<Outcome> {
    let opts = ReproduceOptions {
        skip_slow,
        seed,
        threads: search.threads as usize,
        budget: search.budget,
        fault: inject_fault.then_some(Fault::CorruptBuiltinCertificates),
    };
    let outcomes = reproduce(&opts)?;
    let all_pass = outcomes.iter().all(|o| o.passed());
    let report = json!({
        "criteria": outcomes,
        "passed": outcomes.iter().filter(|o| matches!(o.status, Status::Pass | Status::Flagged)).count(),
        "failed": outcomes.iter().filter(|o| o.status == Status::Fail).count(),
        "skipped": outcomes.iter().filter(|o| o.status == Status::Skipped).count(),
    });
    Ok(Outcome {
        report,
        code: if all_pass { 0 } else { 1 },
    })
}

/// Table view of the reproduction report: one line per criterion, failing checks
/// listed underneath as expected-versus-computed diffs.
fn reproduce_table(report: &Value) -> String {
    let mut text = String::new();
    for c in report["criteria"].as_array().into_iter().flatten() {
        let status = c["status"].as_str().unwrap_or("?").to_uppercase();
        text.push_str(&format!(
            "{:>2}  {:<7}  {:>7.2}s  {}\n",
            c["id"].as_u64().unwrap_or(0),
            status,
            c["seconds"].as_f64().unwrap_or(0.0),
            c["title"].as_str().unwrap_or("")
        ));
        for check in c["checks"].as_array().into_iter().flatten() {
            let ok = check["ok"].as_bool().unwrap_or(false);
            if !ok || status != "PASS" {
                text.push_str(&format!(
                    "      {} {}: expected {}, computed {}\n",
                    if ok { "ok  " } else { "DIFF" },
                    check["label"].as_str().unwrap_or(""),
                    check["expected"].as_str().unwrap_or(""),
                    check["computed"].as_str().unwrap_or("")
                ));
            }
        }
        if let Some(note) = c["note"].as_str() {
            if status != "PASS" {
                text.push_str(&format!("      note: {note}\n"));
            }
        }
    }
    text.push_str(&format!(
        "passed {}, failed {}, skipped {}\n",
        report["passed"], report["failed"], report["skipped"]
    ));
    text
}

fn run(cli: &Cli) -> CliResult<(String, u8)> {
    let out = cli.out.as_deref();
    let outcome = match &cli.command {
        Command::Gen {
            graph,
            random,
            density,
            seed,
        } => {
            let text = cmd_gen(graph.as_deref(), *random, *density, *seed, out)?;
            return Ok((text, 0));
        }
        Command::Invariants {
            graph,
            budget,
            column_cap,
        } => cmd_invariants(&read_graph(graph)?, *budget, *column_cap)?,
        Command::Bounds {
            graph,
            nmax,
            group,
            cert,
            search,
        } => cmd_bounds(&read_graph(graph)?, *nmax, group, cert, search, out)?,
        Command::Search {
            graph,
            group,
            search,
        } => cmd_search(&read_graph(graph)?, group, search, out)?,
        Command::Verify { graph, cert } => cmd_verify(&read_graph(graph)?, cert)?,
        Command::Reproduce {
            skip_slow,
            seed,
            search,
            inject_fault,
        } => {
            let outcome = cmd_reproduce(*skip_slow, *seed, search, *inject_fault)?;
            let text = match cli.format {
                Format::Json => render(&outcome.report, Format::Json),
                Format::Table => reproduce_table(&outcome.report),
            };
            return Ok((text, outcome.code));
        }
    };
    Ok((render(&outcome.report, cli.format), outcome.code))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match run(&cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
