//! `cstar` — generate and check verified embeddings between graph algebras.
//!
//! Exit codes: 0 success (and verified, where applicable); 1 a verification
//! or admissibility check failed, with the report emitted; 2 invalid input
//! or unsatisfied congruence.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cstar_core::cuntz::{self, EmbedOptions};
use cstar_core::error::Error;
use cstar_core::graph::Graph;
use cstar_core::json::{
    self, element_to_json, embedding_to_json, star_report_to_json, CanonInput, GraphJson,
    MorphismJson,
};
use cstar_core::morphism::{check_graph_hom, check_path_hom, PathHom, Report};
use cstar_core::starhom::induce_covariant;
use cstar_core::{dot, latex};

#[derive(Parser)]
#[command(name = "cstar", version, about = "exact symbolic engine for graph algebra embeddings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Rose,
    Line,
    G,
    F,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the verified unital embedding O_p -> M_k(O_q)
    Embed(EmbedArgs),
    /// Print the Kawamura path homomorphism rose(m) -> rose(n) and the
    /// generator formulas of the induced embedding O_m -> O_n
    Kawamura(KawamuraArgs),
    /// Check a graph homomorphism (JSON file) for admissibility
    CheckGraphHom(CheckArgs),
    /// Check a path homomorphism (JSON file) for admissibility
    CheckPathHom(CheckArgs),
    /// Canonicalize an element (JSON file with graph and element)
    Canon(CanonArgs),
    /// Emit a graph of one of the built-in families
    Graphs(GraphsArgs),
    /// Run the full embedding grid (acceptance utility)
    #[command(hide = true)]
    Grid(GridArgs),
}

#[derive(Args)]
struct EmbedArgs {
    #[arg(long)]
    p: u32,
    #[arg(long)]
    q: u32,
    #[arg(long)]
    k: u32,
    /// Congruence parameter; must equal (p-1)k/(q-1) when given
    #[arg(long)]
    s: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Skip relation verification (formulas print unverified)
    #[arg(long)]
    no_verify: bool,
}

#[derive(Args)]
struct KawamuraArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    file: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct CanonArgs {
    file: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct GraphsArgs {
    #[arg(long, value_enum, ignore_case = true)]
    family: Family,
    /// Comma-separated family parameters: rose n, line k, G m,k, F m,n
    #[arg(long)]
    params: String,
    #[arg(long, value_enum, default_value = "json")]
    format: GraphFormat,
}

#[derive(Args)]
struct GridArgs {
    #[arg(long, default_value_t = 6)]
    p_max: u32,
    #[arg(long, default_value_t = 6)]
    q_max: u32,
    #[arg(long, default_value_t = 4)]
    k_max: u32,
}

fn fail_input(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn exit_for(err: &Error) -> ExitCode {
    match err {
        Error::Inadmissible(_) => ExitCode::from(1),
        _ => ExitCode::from(2),
    }
}

fn run_embed(args: &EmbedArgs) -> ExitCode {
    let opts = EmbedOptions {
        s: args.s,
        verify: !args.no_verify,
    };
    let result = match cuntz::embed_with(args.p, args.q, args.k, opts) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_for(&e);
        }
    };
    match args.format {
        Format::Text => print!("{}", result.render_text()),
        Format::Latex => print!("{}", result.render_latex()),
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&embedding_to_json(&result)).expect("serializable")
            );
        }
    }
    ExitCode::SUCCESS
}

/// Insert a prime after the alphabetic prefix: `e12` becomes `e'12`.
fn primed(id: &str) -> String {
    match id.find(|c: char| c.is_ascii_digit()) {
        Some(i) => format!("{}'{}", &id[..i], &id[i..]),
        None => format!("{id}'"),
    }
}

fn kawamura_text(h: &PathHom, m: u32, n: u32) -> String {
    let src = h.source();
    let tgt = h.target();
    let k = (m - 1) / (n - 1);
    let mut out = format!("kawamura embedding O_{m} -> O_{n}   (m={m}, n={n}, k={k})\n");
    for v in src.vertices() {
        out.push_str(&format!(
            "{} -> {}\n",
            src.vertex_name(v),
            primed(tgt.vertex_name(h.vertex_image(v)))
        ));
    }
    for e in src.edges() {
        let word: Vec<String> = h
            .edge_image(e)
            .edges()
            .iter()
            .map(|&x| primed(tgt.edge_name(x)))
            .collect();
        out.push_str(&format!("{} -> {}\n", src.edge_name(e), word.join(" ")));
    }
    out
}

fn run_kawamura(args: &KawamuraArgs) -> ExitCode {
    let h = match cuntz::kawamura(args.m, args.n) {
        Ok(h) => h,
        Err(e) => return fail_input(e),
    };
    let hom = match induce_covariant(&h) {
        Ok(hom) => hom,
        Err(report) => {
            eprintln!("error: kawamura morphism failed admissibility");
            emit_admissibility(&report, args.format);
            return ExitCode::from(1);
        }
    };
    let report = hom.verify();
    match args.format {
        Format::Text => {
            print!("{}", kawamura_text(&h, args.m, args.n));
            println!("induced on generators:");
            for e in hom.source().edges() {
                println!(
                    "S_{} -> {}",
                    e.index() + 1,
                    hom.edge_image(e).render_cuntz()
                );
            }
            println!(
                "verification: relations {} ({} records)",
                if report.pass { "PASS" } else { "FAIL" },
                report.records.len()
            );
        }
        Format::Latex => {
            for e in hom.source().edges() {
                println!(
                    "\\[ S_{{{}}} \\mapsto {} \\]",
                    e.index() + 1,
                    latex::element_cuntz(hom.edge_image(e))
                );
            }
        }
        Format::Json => {
            let images: std::collections::BTreeMap<String, json::ElementJson> = hom
                .source()
                .edges()
                .map(|e| {
                    (
                        format!("S_{}", e.index() + 1),
                        element_to_json(hom.edge_image(e)),
                    )
                })
                .collect();
            let payload = serde_json::json!({
                "morphism": MorphismJson::from_path_hom(&h),
                "images": images,
                "report": star_report_to_json(&report),
            });
            println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
        }
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn emit_admissibility(report: &Report, format: Format) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(report).expect("serializable"));
        }
        _ => {
            for rec in &report.records {
                let verdict = if rec.pass { "pass" } else { "FAIL" };
                match &rec.witness {
                    Some(w) => println!(
                        "{}: {} [{}] witness: {}",
                        rec.clause.as_str(),
                        verdict,
                        rec.subject,
                        serde_json::to_string(w).expect("serializable")
                    ),
                    None => println!("{}: {} [{}]", rec.clause.as_str(), verdict, rec.subject),
                }
            }
            println!("overall: {}", if report.pass { "PASS" } else { "FAIL" });
        }
    }
}

fn run_check(args: &CheckArgs, graph_hom: bool) -> ExitCode {
    let text = match fs::read_to_string(&args.file) {
        Ok(t) => t,
        Err(e) => return fail_input(format_args!("cannot read {}: {e}", args.file)),
    };
    let parsed: MorphismJson = match serde_json::from_str(&text) {
        Ok(p) => p,
        Err(e) => return fail_input(format_args!("cannot parse {}: {e}", args.file)),
    };
    let report = if graph_hom {
        let h = match parsed.to_graph_hom() {
            Ok(h) => h,
            Err(e) => return fail_input(e),
        };
        if !h.is_valid() {
            return fail_input("not a graph homomorphism: source/target maps do not intertwine");
        }
        check_graph_hom(&h)
    } else {
        let f = match parsed.to_path_hom() {
            Ok(f) => f,
            Err(e) => return fail_input(e),
        };
        if !f.is_valid() {
            return fail_input("not a path homomorphism: edge images do not respect endpoints");
        }
        check_path_hom(&f)
    };
    emit_admissibility(&report, args.format);
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_canon(args: &CanonArgs) -> ExitCode {
    let text = match fs::read_to_string(&args.file) {
        Ok(t) => t,
        Err(e) => return fail_input(format_args!("cannot read {}: {e}", args.file)),
    };
    let input: CanonInput = match serde_json::from_str(&text) {
        Ok(p) => p,
        Err(e) => return fail_input(format_args!("cannot parse {}: {e}", args.file)),
    };
    let graph = match input.graph.to_graph() {
        Ok(g) => g,
        Err(e) => return fail_input(e),
    };
    let element = match json::element_from_json(&graph, &input.element) {
        Ok(x) => x,
        Err(e) => return fail_input(e),
    };
    let canonical = element.canonical_form();
    match args.format {
        Format::Text => println!("{}", canonical.render()),
        Format::Latex => println!("{}", latex::element(&canonical)),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&element_to_json(&canonical)).expect("serializable")
        ),
    }
    ExitCode::SUCCESS
}

fn parse_params(text: &str, arity: usize) -> Result<Vec<u32>, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != arity {
        return Err(format!("expected {arity} comma-separated parameters, got {}", parts.len()));
    }
    parts
        .iter()
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| format!("`{p}` is not a positive integer"))
        })
        .collect()
}

fn run_graphs(args: &GraphsArgs) -> ExitCode {
    let built = match args.family {
        Family::Rose => parse_params(&args.params, 1).map(|p| Graph::rose(p[0])),
        Family::Line => parse_params(&args.params, 1).map(|p| Graph::line(p[0])),
        Family::G => parse_params(&args.params, 2).map(|p| Graph::matrix_rose(p[0], p[1])),
        Family::F => parse_params(&args.params, 2).map(|p| Graph::pivot(p[0], p[1])),
    };
    let graph = match built {
        Ok(Ok(g)) => g,
        Ok(Err(e)) => return fail_input(e),
        Err(e) => return fail_input(e),
    };
    match args.format {
        GraphFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(&GraphJson::from_graph(&graph)).expect("serializable")
        ),
        GraphFormat::Dot => print!("{}", dot::to_dot(&graph)),
    }
    ExitCode::SUCCESS
}

fn run_grid(args: &GridArgs) -> ExitCode {
    let mut all_pass = true;
    for p in 2..=args.p_max {
        for q in 2..=args.q_max {
            for k in 1..=args.k_max {
                match cuntz::congruence(p, q, k) {
                    Err(_) => println!("p={p} q={q} k={k} SKIP (congruence unsatisfied)"),
                    Ok(w) => match cuntz::embed(p, q, k) {
                        Ok(r) => {
                            let verified = r
                                .reports
                                .as_ref()
                                .map(|rep| rep.star.pass && rep.star.unital && rep.matrix.pass);
                            let verdict = match verified {
                                Some(true) => "PASS",
                                _ => "FAIL",
                            };
                            if verdict != "PASS" {
                                all_pass = false;
                            }
                            println!("p={p} q={q} k={k} s={} m={} {verdict}", w.s, r.m);
                        }
                        Err(e) => {
                            all_pass = false;
                            println!("p={p} q={q} k={k} FAIL ({e})");
                        }
                    },
                }
            }
        }
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Embed(args) => run_embed(args),
        Command::Kawamura(args) => run_kawamura(args),
        Command::CheckGraphHom(args) => run_check(args, true),
        Command::CheckPathHom(args) => run_check(args, false),
        Command::Canon(args) => run_canon(args),
        Command::Graphs(args) => run_graphs(args),
        Command::Grid(args) => run_grid(args),
    }
}
