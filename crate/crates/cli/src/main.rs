//! Command-line front-end for the exact real double Hurwitz number engines.
//!
//! Exit codes: 2 for parse errors, 3 for infeasible queries, 4 for engine
//! disagreement, 5 for on-wall genus-0 evaluation, 1 for anything else.

mod cache;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hurwitz_core::cayley::{
    count_walks, egf_coefficient, min_paths_bfs, min_paths_formula, Series, WalkQuery,
};
use hurwitz_core::genus0::{f_value, wall_crossing, walls, Wall};
use hurwitz_core::oracle::{hurwitz_oracle_with_cap, HurwitzQuery, SearchCap};
use hurwitz_core::symgrp::{Matching, Partition, Permutation};
use hurwitz_core::tropical::{enumerate_graphs, tropical_hurwitz};
use hurwitz_core::{Dyadic, Error};

#[derive(Parser)]
#[command(name = "hurwitz", version, about = "Exact real double Hurwitz numbers with positive real branch points")]
struct Cli {
    /// Worker threads for the engines (default: machine parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Bypass the result cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a real double Hurwitz number.
    Compute(ComputeArgs),
    /// Emit all colored monodromy-graph classes with o and the multiplicity.
    Graphs(GraphsArgs),
    /// Genus-zero structure function, walls, and wall-crossings.
    #[command(subcommand)]
    Genus0(Genus0Command),
    /// Restricted Cayley graph walk and path counts.
    #[command(subcommand)]
    Cayley(CayleyCommand),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Oracle,
    Tropical,
    Both,
}

impl Engine {
    fn as_str(self) -> &'static str {
        match self {
            Engine::Oracle => "oracle",
            Engine::Tropical => "tropical",
            Engine::Both => "both",
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    genus: usize,
    /// Ramification profile over 0, comma-separated (normalized to
    /// decreasing order).
    #[arg(long)]
    mu: Partition,
    /// Ramification profile over infinity.
    #[arg(long)]
    nu: Partition,
    /// Count covers together with a real structure (the default).
    #[arg(long, conflicts_with = "no_structure")]
    structure: bool,
    /// Count covers without the real structure.
    #[arg(long)]
    no_structure: bool,
    #[arg(long, value_enum, default_value = "tropical")]
    engine: Engine,
    /// Feasibility cap on the degree for the enumeration oracle.
    #[arg(long, default_value_t = 6)]
    max_degree: usize,
    /// Feasibility cap on the number of simple branch points for the oracle.
    #[arg(long, default_value_t = 6)]
    max_branch_points: usize,
}

#[derive(Args)]
struct GraphsArgs {
    #[arg(long)]
    genus: usize,
    #[arg(long)]
    mu: Partition,
    #[arg(long)]
    nu: Partition,
    #[arg(long, value_enum, default_value = "json")]
    format: GraphFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Genus0Command {
    /// Evaluate the piecewise-constant structure function; emits a CSV row.
    #[command(name = "F", alias = "f")]
    F {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// List the walls for the given numbers of parts, as JSON (1-indexed).
    Walls {
        #[arg(long)]
        lmu: usize,
        #[arg(long)]
        lnu: usize,
    },
    /// Wall-crossing difference between two adjacent chambers.
    Crossing {
        /// The wall as `I:J`, e.g. `1:1,2` for mu_1 = nu_1 + nu_2 (1-indexed).
        #[arg(long)]
        wall: String,
        /// Point on the positive side, as `mu/nu`, e.g. `10,1/5,4,2`.
        #[arg(long)]
        plus: String,
        /// Point on the negative side.
        #[arg(long)]
        minus: String,
    },
}

#[derive(Subcommand)]
enum CayleyCommand {
    /// Count and measure minimum paths between two matchings.
    Minpaths {
        /// Matching as 1-indexed pairs, e.g. `1-2,3-4` (`-` for empty).
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Degree d; defaults to the largest point mentioned.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, value_enum, default_value = "both")]
        method: MinPathMethod,
    },
    /// Count walks of a fixed length between two matchings.
    Walks {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        length: usize,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Coefficient of x^n/n! in sec+tan (`P`) or x·tan(x)/2 (`C`).
    Egf {
        #[arg(long)]
        series: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MinPathMethod {
    Formula,
    Bfs,
    Both,
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(&cli) {
        Ok(output) => {
            println!("{output}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

/// A CLI-level failure: either a core error or an engine disagreement.
enum CliError {
    Core(Error),
    Disagreement(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Disagreement(msg) => write!(f, "engine disagreement: {msg}"),
        }
    }
}

fn exit_code(err: &CliError) -> u8 {
    match err {
        CliError::Disagreement(_) => 4,
        CliError::Core(e) => match e {
            Error::Parse(_) | Error::InvalidQuery(_) => 2,
            Error::Infeasible { .. } | Error::TooManyEnds(..) => 3,
            Error::OnWall => 5,
            _ => 1,
        },
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Compute(args) => run_compute(cli, args),
        Command::Graphs(args) => run_graphs(cli, args),
        Command::Genus0(cmd) => run_genus0(cli, cmd),
        Command::Cayley(cmd) => run_cayley(cli, cmd),
    }
}

fn run_compute(cli: &Cli, args: &ComputeArgs) -> Result<String, CliError> {
    let with_structure = !args.no_structure;
    let query = HurwitzQuery::new(args.mu.clone(), args.nu.clone(), args.genus, with_structure)?;
    let cap = SearchCap {
        max_degree: args.max_degree,
        max_branch_points: args.max_branch_points,
    };
    let key = format!(
        "compute genus={} mu={} nu={} structure={}",
        args.genus, args.mu, args.nu, with_structure
    );
    let pick = |engine: Engine| -> Result<Dyadic, Error> {
        match engine {
            Engine::Oracle => hurwitz_oracle_with_cap(&query, cap),
            Engine::Tropical => Ok(tropical_hurwitz(&query)),
            Engine::Both => unreachable!(),
        }
    };
    if args.engine == Engine::Both {
        let oracle = pick(Engine::Oracle).map_err(CliError::Core)?;
        let tropical = pick(Engine::Tropical).map_err(CliError::Core)?;
        if oracle != tropical {
            return Err(CliError::Disagreement(format!(
                "{key}: oracle = {oracle}, tropical = {tropical}"
            )));
        }
        let rendered = oracle.to_string();
        return Ok(cache::cached(cli.no_cache, "both", &key, || Ok(rendered.clone()))?);
    }
    Ok(cache::cached(cli.no_cache, args.engine.as_str(), &key, || {
        pick(args.engine).map(|v| v.to_string())
    })?)
}

fn run_graphs(cli: &Cli, args: &GraphsArgs) -> Result<String, CliError> {
    let query = HurwitzQuery::new(args.mu.clone(), args.nu.clone(), args.genus, true)?;
    let key = format!(
        "graphs genus={} mu={} nu={} format={}",
        args.genus,
        args.mu,
        args.nu,
        match args.format {
            GraphFormat::Json => "json",
            GraphFormat::Dot => "dot",
        }
    );
    Ok(cache::cached(cli.no_cache, "tropical", &key, || {
        let classes = enumerate_graphs(&query);
        match args.format {
            GraphFormat::Json => {
                let items: Vec<serde_json::Value> = classes
                    .iter()
                    .map(|c| {
                        serde_json::json!({
                            "graph": c.graph.to_json(),
                            "orderings": c.orderings,
                            "multiplicity": c.graph
                                .multiplicity_with_structure()
                                .expect("enumerated graphs are valid")
                                .to_string(),
                        })
                    })
                    .collect();
                Ok(serde_json::Value::Array(items).to_string())
            }
            GraphFormat::Dot => {
                let mut out = String::new();
                for (i, c) in classes.iter().enumerate() {
                    let m = c.graph.multiplicity_with_structure().unwrap();
                    let _ = writeln!(out, "// class {i}: orderings={} multiplicity={m}", c.orderings);
                    out.push_str(&c.graph.to_dot(&format!("class_{i}")));
                }
                Ok(out.trim_end().to_string())
            }
        }
    })?)
}

fn run_genus0(cli: &Cli, cmd: &Genus0Command) -> Result<String, CliError> {
    match cmd {
        Genus0Command::F { mu, nu } => {
            let key = format!("genus0-f mu={mu} nu={nu}");
            Ok(cache::cached(cli.no_cache, "genus0", &key, || {
                let f = f_value(mu, nu)?;
                Ok(format!("mu,nu,F\n\"{mu}\",\"{nu}\",{f}"))
            })?)
        }
        Genus0Command::Walls { lmu, lnu } => {
            let key = format!("genus0-walls lmu={lmu} lnu={lnu}");
            Ok(cache::cached(cli.no_cache, "genus0", &key, || {
                let items: Vec<serde_json::Value> = walls(*lmu, *lnu)
                    .iter()
                    .map(|w| {
                        serde_json::json!({
                            "I": w.in_set.iter().map(|i| i + 1).collect::<Vec<_>>(),
                            "J": w.out_set.iter().map(|j| j + 1).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                Ok(serde_json::Value::Array(items).to_string())
            })?)
        }
        Genus0Command::Crossing { wall, plus, minus } => {
            let wall = parse_wall(wall)?;
            let (plus_mu, plus_nu) = parse_point(plus)?;
            let (minus_mu, minus_nu) = parse_point(minus)?;
            let key = format!(
                "genus0-crossing wall={:?}:{:?} plus={plus_mu}/{plus_nu} minus={minus_mu}/{minus_nu}",
                wall.in_set, wall.out_set
            );
            Ok(cache::cached(cli.no_cache, "genus0", &key, || {
                let value = wall_crossing(&wall, (&plus_mu, &plus_nu), (&minus_mu, &minus_nu))?;
                Ok(value.to_string())
            })?)
        }
    }
}

fn parse_wall(s: &str) -> Result<Wall, Error> {
    let (i, j) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("wall `{s}` must look like I:J, e.g. 1:1,2")))?;
    let parse_set = |part: &str| -> Result<Vec<usize>, Error> {
        part.split(',')
            .map(|tok| {
                let v: usize = tok
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad index `{tok}` in wall `{s}`")))?;
                if v == 0 {
                    return Err(Error::Parse("wall indices are 1-indexed".into()));
                }
                Ok(v - 1)
            })
            .collect()
    };
    Ok(Wall { in_set: parse_set(i)?, out_set: parse_set(j)? })
}

fn parse_point(s: &str) -> Result<(Partition, Partition), Error> {
    let (mu, nu) = s
        .split_once('/')
        .ok_or_else(|| Error::Parse(format!("point `{s}` must look like mu/nu, e.g. 10,1/5,4,2")))?;
    Ok((mu.parse()?, nu.parse()?))
}

/// A matching argument: either a pair list like `1-2,3-4` or an involution
/// in cycle notation like `(1 2)(3 4)`.
fn parse_one_matching(s: &str, degree: usize) -> Result<Matching, Error> {
    let s = s.trim();
    if s == "id" || s.starts_with('(') {
        Matching::of_involution(&Permutation::parse(s, degree)?)
    } else {
        Matching::parse(s, degree)
    }
}

fn parse_matchings(from: &str, to: &str, degree: Option<usize>) -> Result<(Matching, Matching), Error> {
    let max_point = |s: &str| {
        s.split(|c: char| !c.is_ascii_digit())
            .filter_map(|tok| tok.parse::<usize>().ok())
            .max()
            .unwrap_or(0)
    };
    let d = match degree {
        Some(d) => d,
        None => {
            let d = max_point(from).max(max_point(to));
            if d == 0 {
                return Err(Error::Parse(
                    "two empty matchings need an explicit --degree".into(),
                ));
            }
            d
        }
    };
    Ok((parse_one_matching(from, d)?, parse_one_matching(to, d)?))
}

fn run_cayley(cli: &Cli, cmd: &CayleyCommand) -> Result<String, CliError> {
    match cmd {
        CayleyCommand::Minpaths { from, to, degree, method } => {
            let (s, t) = parse_matchings(from, to, *degree)?;
            let key = format!("minpaths d={} from={s} to={t}", s.degree());
            let method = *method;
            Ok(cache::cached(cli.no_cache, method_name(method), &key, move || {
                let (length, count) = match method {
                    MinPathMethod::Formula => min_paths_formula(&s, &t)?,
                    MinPathMethod::Bfs => min_paths_bfs(&s, &t)?,
                    MinPathMethod::Both => {
                        let formula = min_paths_formula(&s, &t)?;
                        let bfs = min_paths_bfs(&s, &t)?;
                        if formula != bfs {
                            // conventions differ on shared pairs; report both
                            return Ok(format!(
                                "{{\"formula\":{{\"length\":{},\"count\":{}}},\"bfs\":{{\"length\":{},\"count\":{}}}}}",
                                formula.0, formula.1, bfs.0, bfs.1
                            ));
                        }
                        formula
                    }
                };
                Ok(format!("{{\"length\":{length},\"count\":{count}}}"))
            })?)
        }
        CayleyCommand::Walks { from, to, length, degree } => {
            let (s, t) = parse_matchings(from, to, *degree)?;
            let key = format!("walks d={} from={s} to={t} length={length}", s.degree());
            let length = *length;
            Ok(cache::cached(cli.no_cache, "walks", &key, move || {
                let count = count_walks(&WalkQuery::new(s, t, length)?);
                Ok(format!("{{\"length\":{length},\"count\":{count}}}"))
            })?)
        }
        CayleyCommand::Egf { series, n } => {
            let series = match series.trim() {
                "P" | "p" => Series::Paths,
                "C" | "c" => Series::Cycles,
                other => {
                    return Err(CliError::Core(Error::Parse(format!(
                        "series must be P or C, got `{other}`"
                    ))))
                }
            };
            let key = format!(
                "egf series={} n={n}",
                if series == Series::Paths { "P" } else { "C" }
            );
            let n = *n;
            Ok(cache::cached(cli.no_cache, "egf", &key, move || {
                Ok(egf_coefficient(series, n).to_string())
            })?)
        }
    }
}

fn method_name(m: MinPathMethod) -> &'static str {
    match m {
        MinPathMethod::Formula => "formula",
        MinPathMethod::Bfs => "bfs",
        MinPathMethod::Both => "minpaths-both",
    }
}
