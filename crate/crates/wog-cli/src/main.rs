//! Command-line interface over the decision engine: decide unmixedness and
//! Cohen-Macaulayness of weighted oriented edge ideals, inspect covers,
//! matchings, and generators, and fuzz the deciders against the
//! strong-cover oracle.

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use wog_cli::format::{self, GraphFile};
use wog_cli::report::Report;
use serde::Serialize;
use std::path::PathBuf;
use std::time::Instant;
use wog::criteria::{self, ComponentDetail, DecideConfig, Decision, RejectionReason};
use wog::graph::NormalizationEvent;
use wog::oracle::{self, CampaignConfig, Family, OracleUnmixed};
use wog::{covers, matching};
use wog::{VertexSet, WeightedOrientedGraph};

fn bound_default() -> usize {
    std::env::var("WOG_ORACLE_BOUND")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(wog::DEFAULT_BOUND)
}

#[derive(Parser)]
#[command(
    name = "wog",
    version,
    about = "Unmixedness and Cohen-Macaulayness of weighted oriented edge ideals"
)]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Refuse instances with more vertices than this; enumeration work is
    /// exponential in it. Defaults to WOG_ORACLE_BOUND or 24.
    #[arg(long, global = true, default_value_t = bound_default())]
    bound: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Certify Cohen-Macaulayness from the first perfect matching instead
    /// of scanning all of them. Sound only on instances where the
    /// conditions are matching-independent; the fuzz command watches for
    /// violations of exactly that.
    #[arg(long, global = true)]
    first_matching_only: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Hypotheses, both decisions, the oracle verdict, and their agreement.
    Analyze { file: PathBuf },
    /// Decide unmixedness of the edge ideal.
    Unmixed {
        file: PathBuf,
        /// Decide by strong cover enumeration instead of matching criteria.
        #[arg(long)]
        oracle: bool,
    },
    /// Decide Cohen-Macaulayness of the edge ideal.
    Cm { file: PathBuf },
    /// List strong covers with their partitions, or minimal covers.
    Covers {
        file: PathBuf,
        /// Strong covers (the default).
        #[arg(long, conflicts_with = "minimal")]
        strong: bool,
        /// Minimal covers instead.
        #[arg(long)]
        minimal: bool,
    },
    /// List perfect matchings of the underlying graph.
    Matchings {
        file: PathBuf,
        /// Evaluate the exchange property on each matching.
        #[arg(long)]
        check_p: bool,
    },
    /// Print the monomial generators of the edge ideal.
    Ideal { file: PathBuf },
    /// Generate random instances and cross-check the deciders against the
    /// oracle. Prints one record per instance; exits with status 3 on any
    /// disagreement, after writing a shrunken counterexample file.
    Fuzz {
        /// whisker | bipartite | girth<k> | unrestricted
        #[arg(long, default_value = "unrestricted")]
        family: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest instance size; sizes are drawn from 4..=max-n.
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let opts = &cli.opts;
    match cli.command {
        Command::Analyze { file } => analyze(&format::load_graph(&file)?, opts),
        Command::Unmixed { file, oracle } => unmixed(&format::load_graph(&file)?, oracle, opts),
        Command::Cm { file } => cm(&format::load_graph(&file)?, opts),
        Command::Covers { file, strong, minimal } => {
            covers_cmd(&format::load_graph(&file)?, strong || !minimal, opts)
        }
        Command::Matchings { file, check_p } => {
            matchings_cmd(&format::load_graph(&file)?, check_p, opts)
        }
        Command::Ideal { file } => ideal(&format::load_graph(&file)?, opts),
        Command::Fuzz { family, count, seed, max_n } => {
            fuzz(&family, count, seed, max_n, opts)
        }
    }
}

fn decide_config(opts: &GlobalOpts) -> DecideConfig {
    DecideConfig { bound: opts.bound, first_matching_only: opts.first_matching_only }
}

fn set_text(d: &WeightedOrientedGraph, s: VertexSet) -> String {
    s.iter().map(|v| d.label(v).to_owned()).collect::<Vec<_>>().join(" ")
}

fn matching_text(d: &WeightedOrientedGraph, edges: &[(usize, usize)]) -> String {
    edges
        .iter()
        .map(|&(u, v)| format!("{}-{}", d.label(u), d.label(v)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn rejection_text(d: &WeightedOrientedGraph, reason: &RejectionReason) -> String {
    match reason {
        RejectionReason::PropertyP { violation } => format!(
            "exchange property fails: {} and {} matched to {} and {}, but {} {} not adjacent",
            d.label(violation.b),
            d.label(violation.b_prime),
            d.label(violation.a),
            d.label(violation.a_prime),
            d.label(violation.a),
            d.label(violation.a_prime),
        ),
        RejectionReason::FourCycle { cycle } => format!(
            "4-cycle {} {} {} {} uses two matched edges",
            d.label(cycle.a),
            d.label(cycle.b),
            d.label(cycle.c),
            d.label(cycle.d),
        ),
        RejectionReason::OutNeighborhood { violation } => format!(
            "out-neighborhood condition fails: ({}, {}) is an edge, {} is matched to {}, and {} is a neighbor of {} outside N+({})",
            d.label(violation.weighted_vertex),
            d.label(violation.out_neighbor),
            d.label(violation.out_neighbor),
            d.label(violation.partner),
            d.label(violation.offending),
            d.label(violation.partner),
            d.label(violation.weighted_vertex),
        ),
    }
}

fn push_decision_text(out: &mut String, d: &WeightedOrientedGraph, title: &str, dec: &Decision) {
    out.push_str(&format!("{title}: {}  [{}]\n", dec.verdict, dec.theorem));
    if !dec.trace.isolated.is_empty() {
        out.push_str(&format!(
            "  isolated vertices set aside: {}\n",
            set_text(d, dec.trace.isolated)
        ));
    }
    for comp in &dec.trace.components {
        let scope = if dec.trace.components.len() > 1 {
            format!("component {{{}}}: ", set_text(d, comp.vertices))
        } else {
            String::new()
        };
        match &comp.detail {
            ComponentDetail::GateFailed => {
                out.push_str(&format!("  {scope}not decided: no criterion hypothesis holds\n"));
            }
            ComponentDetail::NoPerfectMatching => {
                out.push_str(&format!("  {scope}refuted: no perfect matching\n"));
            }
            ComponentDetail::PropertyPFailed { matching, violation } => {
                out.push_str(&format!(
                    "  {scope}refuted by matching {}: {}\n",
                    matching_text(d, matching),
                    rejection_text(d, &RejectionReason::PropertyP { violation: *violation }),
                ));
            }
            ComponentDetail::OutNeighborhoodFailed { matching, violation } => {
                out.push_str(&format!(
                    "  {scope}refuted by matching {}: {}\n",
                    matching_text(d, matching),
                    rejection_text(
                        d,
                        &RejectionReason::OutNeighborhood { violation: *violation }
                    ),
                ));
            }
            ComponentDetail::AllMatchingsRejected { examined, rejected } => {
                out.push_str(&format!(
                    "  {scope}refuted: all {examined} perfect matchings rejected\n"
                ));
                for r in rejected.iter().take(3) {
                    out.push_str(&format!(
                        "    {}: {}\n",
                        matching_text(d, &r.matching),
                        rejection_text(d, &r.reason)
                    ));
                }
            }
            ComponentDetail::Certified { matching, single_matching_shortcut } => {
                let suffix = if *single_matching_shortcut { " (first matching only)" } else { "" };
                out.push_str(&format!(
                    "  {scope}certified by matching {}{suffix}\n",
                    matching_text(d, matching)
                ));
            }
        }
    }
}

fn hypotheses_text(h: &criteria::Hypotheses) -> String {
    format!(
        "konig={} no-3-5-7-cycles={} no-3-5-cycles={} no-4-cycles={} girth={} girth>7={} very-well-covered={}",
        h.konig, h.no_3_5_7_cycles, h.no_3_5_cycles, h.no_4_cycles, h.girth, h.girth_gt_7, h.very_well_covered
    )
}

fn oracle_text(o: &OracleUnmixed) -> String {
    format!(
        "oracle: {}; strong cover sizes {:?}",
        if o.unmixed { "unmixed" } else { "mixed" },
        o.histogram
    )
}

fn normalization_text(d: &WeightedOrientedGraph, events: &[NormalizationEvent]) -> String {
    if events.is_empty() {
        return String::new();
    }
    let parts: Vec<String> = events
        .iter()
        .map(|e| format!("{} ({}) weight {} -> 1", d.label(e.vertex), e.role, e.original_weight))
        .collect();
    format!("normalized: {}\n", parts.join("; "))
}

#[derive(Serialize)]
struct AnalyzeResult {
    normalization_events: Vec<NormalizationEvent>,
    hypotheses: criteria::Hypotheses,
    unmixed: Decision,
    cohen_macaulay: Decision,
    oracle: OracleUnmixed,
    agreement: Vec<oracle::AgreementEntry>,
    anomalies: Vec<oracle::Anomaly>,
    consistent: bool,
}

fn analyze(d: &WeightedOrientedGraph, opts: &GlobalOpts) -> anyhow::Result<i32> {
    let start = Instant::now();
    let cfg = decide_config(opts);
    let unmixed = criteria::decide_unmixed(d, &cfg)?;
    let cohen_macaulay = criteria::decide_cm(d, &cfg)?;
    let check = oracle::cross_check(d, opts.bound)?;
    let elapsed = start.elapsed().as_millis();
    let consistent = check.consistent();
    let result = AnalyzeResult {
        normalization_events: d.normalization_log().to_vec(),
        hypotheses: unmixed.hypotheses,
        unmixed,
        cohen_macaulay,
        oracle: check.oracle_unmixed,
        agreement: check.agreement,
        anomalies: check.anomalies,
        consistent,
    };
    match opts.format {
        Format::Json => Report::new("analyze", d.digest(), result, elapsed).print_json()?,
        Format::Text => {
            let mut out = String::new();
            out.push_str(&format!(
                "{}: {} vertices, {} edges\n",
                d.name().unwrap_or("graph"),
                d.vertex_count(),
                d.edges().len()
            ));
            out.push_str(&normalization_text(d, &result.normalization_events));
            out.push_str(&format!("hypotheses: {}\n", hypotheses_text(&result.hypotheses)));
            push_decision_text(&mut out, d, "unmixed", &result.unmixed);
            push_decision_text(&mut out, d, "cohen-macaulay", &result.cohen_macaulay);
            out.push_str(&format!("{}\n", oracle_text(&result.oracle)));
            out.push_str(&format!(
                "cross-check: {} ({} comparisons, {} anomalies)\n",
                if result.consistent { "consistent" } else { "INCONSISTENT" },
                result.agreement.len(),
                result.anomalies.len()
            ));
            out.push_str(&format!("elapsed: {elapsed} ms\n"));
            print!("{out}");
        }
    }
    Ok(0)
}

fn unmixed(d: &WeightedOrientedGraph, by_oracle: bool, opts: &GlobalOpts) -> anyhow::Result<i32> {
    let start = Instant::now();
    if by_oracle {
        let result = oracle::unmixed_by_strong_covers(d, opts.bound)?;
        let elapsed = start.elapsed().as_millis();
        match opts.format {
            Format::Json => Report::new("unmixed", d.digest(), result, elapsed).print_json()?,
            Format::Text => println!("{}", oracle_text(&result)),
        }
        return Ok(0);
    }
    let result = criteria::decide_unmixed(d, &decide_config(opts))?;
    let elapsed = start.elapsed().as_millis();
    match opts.format {
        Format::Json => Report::new("unmixed", d.digest(), result, elapsed).print_json()?,
        Format::Text => {
            let mut out = String::new();
            push_decision_text(&mut out, d, "unmixed", &result);
            print!("{out}");
        }
    }
    Ok(0)
}

fn cm(d: &WeightedOrientedGraph, opts: &GlobalOpts) -> anyhow::Result<i32> {
    let start = Instant::now();
    let result = criteria::decide_cm(d, &decide_config(opts))?;
    let elapsed = start.elapsed().as_millis();
    match opts.format {
        Format::Json => Report::new("cm", d.digest(), result, elapsed).print_json()?,
        Format::Text => {
            let mut out = String::new();
            push_decision_text(&mut out, d, "cohen-macaulay", &result);
            print!("{out}");
        }
    }
    Ok(0)
}

fn labels_of(d: &WeightedOrientedGraph, s: VertexSet) -> Vec<String> {
    s.iter().map(|v| d.label(v).to_owned()).collect()
}

#[derive(Serialize)]
struct StrongCoverOut {
    cover: Vec<String>,
    l1: Vec<String>,
    l2: Vec<String>,
    l3: Vec<String>,
    witnesses: Vec<(String, String)>,
}

fn covers_cmd(d: &WeightedOrientedGraph, strong: bool, opts: &GlobalOpts) -> anyhow::Result<i32> {
    let start = Instant::now();
    if strong {
        let result: Vec<StrongCoverOut> = covers::enumerate_strong_covers(d, opts.bound)?
            .into_iter()
            .map(|a| StrongCoverOut {
                cover: labels_of(d, a.cover),
                l1: labels_of(d, a.l1),
                l2: labels_of(d, a.l2),
                l3: labels_of(d, a.l3),
                witnesses: a
                    .witnesses
                    .iter()
                    .map(|&(y, x)| (d.label(y).to_owned(), d.label(x).to_owned()))
                    .collect(),
            })
            .collect();
        let elapsed = start.elapsed().as_millis();
        match opts.format {
            Format::Json => Report::new("covers", d.digest(), result, elapsed).print_json()?,
            Format::Text => {
                println!("{} strong covers", result.len());
                for c in &result {
                    let witnesses = c
                        .witnesses
                        .iter()
                        .map(|(y, x)| format!("{y}->{x}"))
                        .collect::<Vec<_>>()
                        .join(" ");
                    println!(
                        "{{{}}}  L1={{{}}} L2={{{}}} L3={{{}}}{}",
                        c.cover.join(" "),
                        c.l1.join(" "),
                        c.l2.join(" "),
                        c.l3.join(" "),
                        if witnesses.is_empty() { String::new() } else { format!("  witnesses: {witnesses}") },
                    );
                }
            }
        }
        return Ok(0);
    }
    let result: Vec<Vec<String>> = covers::enumerate_minimal_covers(&d.underlying(), opts.bound)?
        .into_iter()
        .map(|c| labels_of(d, c))
        .collect();
    let elapsed = start.elapsed().as_millis();
    match opts.format {
        Format::Json => Report::new("covers", d.digest(), result, elapsed).print_json()?,
        Format::Text => {
            println!("{} minimal covers", result.len());
            for c in &result {
                println!("{{{}}}", c.join(" "));
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct MatchingOut {
    edges: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    exchange_property: Option<bool>,
}

fn matchings_cmd(d: &WeightedOrientedGraph, check_p: bool, opts: &GlobalOpts) -> anyhow::Result<i32> {
    let start = Instant::now();
    let g = d.underlying();
    let result: Vec<MatchingOut> = matching::enumerate_perfect_matchings(&g, opts.bound)?
        .into_iter()
        .map(|m| MatchingOut {
            edges: m
                .edges()
                .iter()
                .map(|&(u, v)| (d.label(u).to_owned(), d.label(v).to_owned()))
                .collect(),
            exchange_property: check_p.then(|| matching::has_property_p(&g, &m)),
        })
        .collect();
    let elapsed = start.elapsed().as_millis();
    match opts.format {
        Format::Json => Report::new("matchings", d.digest(), result, elapsed).print_json()?,
        Format::Text => {
            println!("{} perfect matchings", result.len());
            for m in &result {
                let edges =
                    m.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ");
                match m.exchange_property {
                    Some(p) => println!("{edges}  exchange property: {}", if p { "yes" } else { "no" }),
                    None => println!("{edges}"),
                }
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct GeneratorOut {
    tail: String,
    head: String,
    exponent: u32,
    monomial: String,
}

fn ideal(d: &WeightedOrientedGraph, opts: &GlobalOpts) -> anyhow::Result<i32> {
    let start = Instant::now();
    let labels = d.labels();
    let result: Vec<GeneratorOut> = d
        .edge_ideal_generators()
        .into_iter()
        .map(|g| GeneratorOut {
            tail: labels[g.tail].clone(),
            head: labels[g.head].clone(),
            exponent: g.exponent,
            monomial: g.render(labels),
        })
        .collect();
    let elapsed = start.elapsed().as_millis();
    match opts.format {
        Format::Json => Report::new("ideal", d.digest(), result, elapsed).print_json()?,
        Format::Text => {
            for g in &result {
                println!("{}", g.monomial);
            }
        }
    }
    Ok(0)
}

fn fuzz(family: &str, count: usize, seed: u64, max_n: usize, opts: &GlobalOpts) -> anyhow::Result<i32> {
    let family: Family = family.parse()?;
    let cfg = CampaignConfig { family, count, base_seed: seed, max_n, bound: opts.bound };
    let runs = oracle::run_campaign(&cfg)?;
    let mut disagreements = 0usize;
    for run in &runs {
        match opts.format {
            Format::Text => println!("{}", run.summary_line()),
            Format::Json => println!("{}", serde_json::to_string(run)?),
        }
        if run.report.consistent() {
            continue;
        }
        disagreements += 1;
        let (_, instance) = oracle::campaign_instance(&cfg, run.index)?;
        let shrunk = oracle::shrink(&instance, |g| {
            oracle::cross_check(g, opts.bound).map(|r| !r.consistent()).unwrap_or(false)
        });
        let path = PathBuf::from(format!("counterexample_{family}_{}.json", run.seed));
        GraphFile::from_graph(&shrunk)
            .save(&path)
            .with_context(|| "persisting the shrunken counterexample")?;
        eprintln!(
            "disagreement on seed {}: shrunk to {} vertices, written to {}",
            run.seed,
            shrunk.vertex_count(),
            path.display()
        );
    }
    if opts.format == Format::Text {
        println!("{count} instances checked, {disagreements} disagreements");
    }
    Ok(if disagreements > 0 { 3 } else { 0 })
}
