//! Command line front end. JSON (or text) reports go to stdout,
//! diagnostics to stderr. Exit codes: 0 success, 1 input error, 2 a
//! supplied plan failed verification, 3 a budget or cap made the
//! request infeasible.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pcopt::{
    analyze, conjecture_probe, construct_plan, default_budget, exact_pc_opt, generate,
    independence_number, parse_family_spec, verify, AnalysisLimits, ColoringPlan, Error, Family,
    Graph, ProbeReport, ProbeStatus, Result, SolveResult, SolveStatus, StructureReport,
    VerifyReport, DEFAULT_VERTEX_CAP,
};

#[derive(Parser)]
#[command(name = "pcopt", version, about = "Optimal proper-connection recoloring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report the structural decomposition behind the constructions
    Analyze {
        #[command(flatten)]
        common: Common,
    },
    /// Construct a verified recoloring plan
    Color {
        #[command(flatten)]
        common: Common,
        /// Keep the construction trace in the output
        #[arg(long)]
        trace: bool,
    },
    /// Check a saved plan against a graph
    Verify {
        #[command(flatten)]
        common: Common,
        /// Plan file produced by `color` (JSON)
        #[arg(long, value_name = "FILE")]
        plan: String,
        /// Include one certifying path per vertex pair
        #[arg(long)]
        witnesses: bool,
    },
    /// Search for the exact optimum
    Exact {
        #[command(flatten)]
        common: Common,
        /// Largest total cost to try; defaults to floor((5a - 1) / 2)
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Sweep a family, comparing constructed plans against the exact optimum
    Bench {
        /// Family to sweep: tree, star, cycle, path, or complete_bipartite
        #[arg(long)]
        family: String,
        /// Largest instance size (vertices; leaves for star; total order
        /// split across both sides for complete_bipartite)
        #[arg(long, value_name = "N")]
        max_n: usize,
        /// Seed for random families
        #[arg(long)]
        seed: Option<u64>,
        /// Vertex cap for the exponential analyses
        #[arg(long, env = "PCOPT_VERTEX_CAP", default_value_t = DEFAULT_VERTEX_CAP)]
        cap: usize,
        /// Output format (csv or json)
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Compare the exact optimum against the 2a - 2 target
    Probe {
        #[command(flatten)]
        common: Common,
        /// Largest total cost to try; defaults to floor((5a - 1) / 2)
        #[arg(long)]
        budget: Option<usize>,
    },
}

#[derive(Args)]
struct Common {
    /// Graph file, or a family spec like cycle(7) or random_tree(9)
    #[arg(value_name = "GRAPH")]
    input: String,
    /// Seed for random families
    #[arg(long)]
    seed: Option<u64>,
    /// Vertex cap for the exponential analyses
    #[arg(long, env = "PCOPT_VERTEX_CAP", default_value_t = DEFAULT_VERTEX_CAP)]
    cap: usize,
    /// Candidate cap for the exact minimum-core search
    #[arg(long, value_name = "N", default_value_t = DEFAULT_VERTEX_CAP)]
    subgraph_cap: usize,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

impl Common {
    fn limits(&self) -> AnalysisLimits {
        AnalysisLimits {
            vertex_cap: self.cap,
            subgraph_cap: self.subgraph_cap,
        }
    }

    fn graph(&self) -> Result<Graph> {
        load_graph(&self.input, self.seed)
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded { .. } | Error::TooLarge { .. } | Error::ResampleLimit { .. } => 3,
                _ => 1,
            }
        }
    };
    std::process::exit(code);
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Analyze { common } => cmd_analyze(&common),
        Command::Color { common, trace } => cmd_color(&common, trace),
        Command::Verify {
            common,
            plan,
            witnesses,
        } => cmd_verify(&common, &plan, witnesses),
        Command::Exact { common, budget } => cmd_exact(&common, budget),
        Command::Bench {
            family,
            max_n,
            seed,
            cap,
            format,
        } => cmd_bench(&family, max_n, seed, cap, format),
        Command::Probe { common, budget } => cmd_probe(&common, budget),
    }
}

/// Resolves the positional argument: anything with parentheses is a
/// family spec, anything else a path to an edge-list file.
fn load_graph(input: &str, seed: Option<u64>) -> Result<Graph> {
    if input.contains('(') {
        generate(&parse_family_spec(input)?, seed)
    } else {
        let text = std::fs::read_to_string(input)
            .map_err(|e| Error::InvalidParameter(format!("cannot read {input}: {e}")))?;
        Graph::parse(&text)
    }
}

fn reject_csv(format: Format) -> Result<()> {
    if format == Format::Csv {
        return Err(Error::InvalidParameter(
            "csv output is only available for bench".into(),
        ));
    }
    Ok(())
}

/// Writes to stdout, treating a closed pipe as a normal early exit.
fn print_out(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(s.as_bytes()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write to stdout: {e}");
        std::process::exit(1);
    }
}

fn emit_json<T: Serialize>(value: &T) -> Result<()> {
    let s = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Internal(format!("serialization failed: {e}")))?;
    print_out(&s);
    print_out("\n");
    Ok(())
}

fn cmd_analyze(common: &Common) -> Result<i32> {
    reject_csv(common.format)?;
    let g = common.graph()?;
    let report = analyze(&g, common.limits())?;
    match common.format {
        Format::Json => emit_json(&report)?,
        _ => print_out(&analyze_text(&report)),
    }
    Ok(0)
}

fn cmd_color(common: &Common, trace: bool) -> Result<i32> {
    reject_csv(common.format)?;
    let g = common.graph()?;
    let mut plan = construct_plan(&g, common.limits())?;
    if !trace {
        plan.trace = None;
    }
    match common.format {
        Format::Json => emit_json(&plan)?,
        _ => print_out(&plan_text(&plan)),
    }
    Ok(0)
}

fn cmd_verify(common: &Common, plan_path: &str, witnesses: bool) -> Result<i32> {
    reject_csv(common.format)?;
    let g = common.graph()?;
    let text = std::fs::read_to_string(plan_path)
        .map_err(|e| Error::InvalidParameter(format!("cannot read {plan_path}: {e}")))?;
    let plan: ColoringPlan = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidPlan(format!("unreadable plan file: {e}")))?;
    let coloring = plan.apply(&g)?;
    let report = verify(&coloring, witnesses);
    match common.format {
        Format::Json => emit_json(&report)?,
        _ => print_out(&verify_text(&report)),
    }
    Ok(if report.ok { 0 } else { 2 })
}

fn cmd_exact(common: &Common, budget: Option<usize>) -> Result<i32> {
    reject_csv(common.format)?;
    let g = common.graph()?;
    if g.order() > common.cap {
        return Err(Error::CapExceeded {
            n: g.order(),
            cap: common.cap,
        });
    }
    let budget = match budget {
        Some(b) => b,
        None => default_budget(independence_number(&g, common.cap)?),
    };
    let result = exact_pc_opt(&g, budget)?;
    match common.format {
        Format::Json => emit_json(&result)?,
        _ => print_out(&exact_text(&result)),
    }
    Ok(match result.status {
        SolveStatus::Exact => 0,
        SolveStatus::BudgetExceeded => 3,
    })
}

fn cmd_probe(common: &Common, budget: Option<usize>) -> Result<i32> {
    reject_csv(common.format)?;
    let g = common.graph()?;
    let report = conjecture_probe(&g, common.limits(), budget)?;
    match common.format {
        Format::Json => emit_json(&report)?,
        _ => print_out(&probe_text(&report)),
    }
    Ok(match report.status {
        ProbeStatus::Inconclusive => 3,
        _ => 0,
    })
}

#[derive(Serialize)]
struct BenchRow {
    instance: String,
    alpha: usize,
    bound: usize,
    constructed_cost: usize,
    exact_cost: usize,
    time_ms: u128,
}

/// Cost ceiling the construction pipeline promises for a given
/// independence number.
fn guaranteed_bound(alpha: usize) -> usize {
    match alpha {
        0 | 1 => 0,
        2 => 3,
        3 => 4,
        a => (5 * a - 1) / 2,
    }
}

fn cmd_bench(family: &str, max_n: usize, seed: Option<u64>, cap: usize, format: Format) -> Result<i32> {
    let limits = AnalysisLimits {
        vertex_cap: cap,
        subgraph_cap: cap,
    };
    let mut instances: Vec<(String, Graph)> = Vec::new();
    match family {
        "tree" => {
            let seed0 = seed.ok_or_else(|| Error::SeedRequired("random_tree".into()))?;
            for (i, n) in (2..=max_n).enumerate() {
                let s = seed0 + i as u64;
                let g = generate(&Family::RandomTree { n }, Some(s))?;
                instances.push((format!("random_tree({n})#{s}"), g));
            }
        }
        "star" => {
            for m in 2..=max_n {
                instances.push((format!("star({m})"), generate(&Family::Star(m), None)?));
            }
        }
        "cycle" => {
            for n in 3..=max_n {
                instances.push((format!("cycle({n})"), generate(&Family::Cycle(n), None)?));
            }
        }
        "path" => {
            for n in 2..=max_n {
                instances.push((format!("path({n})"), generate(&Family::Path(n), None)?));
            }
        }
        "complete_bipartite" => {
            for small in 2..=max_n / 2 {
                let big = max_n - small;
                instances.push((
                    format!("complete_bipartite({big},{small})"),
                    generate(&Family::CompleteBipartite(big, small), None)?,
                ));
            }
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown bench family {other}; expected tree, star, cycle, path, or complete_bipartite"
            )))
        }
    }
    let mut rows = Vec::new();
    for (instance, g) in &instances {
        let start = Instant::now();
        let alpha = independence_number(g, cap)?;
        let plan = construct_plan(g, limits)?;
        let exact = exact_pc_opt(g, default_budget(alpha))?;
        let value = exact
            .value
            .ok_or_else(|| Error::Internal("exact search exhausted its default budget".into()))?;
        rows.push(BenchRow {
            instance: instance.clone(),
            alpha,
            bound: guaranteed_bound(alpha),
            constructed_cost: plan.cost,
            exact_cost: value,
            time_ms: start.elapsed().as_millis(),
        });
    }
    match format {
        Format::Json => emit_json(&rows)?,
        _ => {
            let mut csv = String::from("instance,alpha,bound,constructed_cost,exact_cost,time_ms\n");
            for r in &rows {
                let _ = writeln!(
                    csv,
                    "{},{},{},{},{},{}",
                    r.instance, r.alpha, r.bound, r.constructed_cost, r.exact_cost, r.time_ms
                );
            }
            print_out(&csv);
        }
    }
    Ok(0)
}

fn seq(xs: &[usize]) -> String {
    if xs.is_empty() {
        "-".into()
    } else {
        xs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
    }
}

fn edges(es: &[(usize, usize)]) -> String {
    if es.is_empty() {
        "-".into()
    } else {
        es.iter()
            .map(|&(u, v)| format!("({u},{v})"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn analyze_text(r: &StructureReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "alpha: {}", r.alpha);
    let _ = writeln!(s, "mis: {}", seq(&r.max_independent_set));
    let _ = writeln!(s, "h_vertices: {}", seq(&r.min_subgraph));
    let _ = writeln!(s, "tree_edges: {}", edges(&r.spanning_tree));
    let _ = writeln!(s, "delta: {}", r.tree_max_degree);
    let _ = writeln!(s, "center: {}", r.center.map_or("-".into(), |c| c.to_string()));
    let _ = writeln!(s, "chosen_set: {}", seq(&r.chosen_set));
    let _ = writeln!(s, "h_exact: {}", r.h_exact);
    s
}

fn plan_text(p: &ColoringPlan) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "method: {}", p.method);
    let _ = writeln!(s, "cost: {}", p.cost);
    let _ = writeln!(s, "palette: {}", p.palette);
    let rec = if p.recolored.is_empty() {
        "-".into()
    } else {
        p.recolored
            .iter()
            .map(|e| format!("({},{})->{}", e.u, e.v, e.color))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let _ = writeln!(s, "recolored: {rec}");
    if let Some(t) = &p.trace {
        let _ = writeln!(s, "branch: {}", t.branch);
        for note in &t.notes {
            let _ = writeln!(s, "note: {note}");
        }
    }
    s
}

fn verify_text(r: &VerifyReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "ok: {}", r.ok);
    if let Some((u, v)) = r.failing_pair {
        let _ = writeln!(s, "failing_pair: ({u}, {v})");
    }
    let _ = writeln!(s, "p: {}", r.p);
    let _ = writeln!(s, "q: {}", r.q);
    let _ = writeln!(s, "cost: {}", r.cost);
    if let Some(ws) = &r.witnesses {
        for w in ws {
            let _ = writeln!(s, "witness ({}, {}): {}", w.pair.0, w.pair.1, seq(&w.path));
        }
    }
    s
}

fn exact_text(r: &SolveResult) -> String {
    let mut s = String::new();
    let status = match r.status {
        SolveStatus::Exact => "exact",
        SolveStatus::BudgetExceeded => "budget_exceeded",
    };
    let _ = writeln!(s, "status: {status}");
    let _ = writeln!(s, "value: {}", r.value.map_or("-".into(), |v| v.to_string()));
    let _ = writeln!(s, "explored: {}", r.explored);
    let _ = writeln!(s, "budget: {}", r.budget);
    if let Some(plan) = &r.plan {
        s.push_str(&plan_text(plan));
    }
    s
}

fn probe_text(r: &ProbeReport) -> String {
    let mut s = String::new();
    let status = match r.status {
        ProbeStatus::Ok => "ok",
        ProbeStatus::Violation => "violation",
        ProbeStatus::Inconclusive => "inconclusive",
    };
    let _ = writeln!(s, "alpha: {}", r.alpha);
    let _ = writeln!(s, "bound: {}", r.bound);
    let _ = writeln!(s, "constructed_cost: {}", r.constructed_cost);
    let _ = writeln!(s, "exact: {}", r.exact.map_or("-".into(), |v| v.to_string()));
    let _ = writeln!(s, "explored: {}", r.explored);
    let _ = writeln!(s, "status: {status}");
    s
}
