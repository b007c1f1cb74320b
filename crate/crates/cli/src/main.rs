use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use gasket_core::coloring::{three_coloring, validate_coloring};
use gasket_core::domination::{
    efficiency, gamma_closed_form, gamma_k, helped_dominating_set, helper_sets, min_dominating_set,
    validate_domination,
};
use gasket_core::graph::{edge_count, vertex_count, DEFAULT_MAX_LEVEL};
use gasket_core::hamilton::{
    as_coords, avoiding_path_of_length, cycle_of_length, ham_cycle, ham_path, ham_path_avoid,
    path_of_length,
};
use gasket_core::io::{export, from_json, ExportFormat};
use gasket_core::pebbling::{
    cover_pebbling_number, distances, gasket_diameter, lambda_recursive, pebbling_number_search,
    replay, ConfigSpec, Goal, PebbleSolver, SearchBudget, VertexRef,
};
use gasket_core::verify::{run_suite, Outcome, Suite};
use gasket_core::{
    generate_with_max, Adjacency, Coord, Corner, GasketError, GasketGraph, SmallGraph,
};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

/// Sierpinski gasket graphs: generation, certificates, domination and pebbling.
#[derive(Parser)]
#[command(name = "gasket", version)]
struct Cli {
    /// Print a single JSON document instead of the text report
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Level {
    /// Level of the gasket graph S_n
    #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
    n: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Export S_n as dot, json or an edge list
    Gen {
        #[command(flatten)]
        level: Level,
        #[arg(long, default_value = "json")]
        format: ExportFormat,
        /// Write to a file instead of stdout
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Vertex and edge counts and the degree census
    Stats {
        #[command(flatten)]
        level: Level,
    },
    /// The proper 3-coloring (a + 2b) mod 3
    Color {
        #[command(flatten)]
        level: Level,
    },
    /// Hamiltonian or length-targeted corner-to-corner path
    Hampath {
        #[command(flatten)]
        level: Level,
        #[arg(long)]
        from: Corner,
        #[arg(long)]
        to: Corner,
        /// Number of edges
        #[arg(long)]
        len: Option<usize>,
        /// Keep away from the third corner
        #[arg(long)]
        avoid: bool,
        /// Print coordinates instead of vertex indices
        #[arg(long)]
        coords: bool,
    },
    /// Hamiltonian cycle, or a cycle of the given length
    Hamcycle {
        #[command(flatten)]
        level: Level,
        #[arg(long)]
        len: Option<usize>,
        #[arg(long)]
        coords: bool,
    },
    /// Minimum dominating set, optionally with k corner helpers
    Dominate {
        #[command(flatten)]
        level: Level,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=3))]
        helpers: Option<u8>,
    },
    /// Domination numbers and efficiency for levels 1..=max
    GammaTable {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=4096))]
        max: u32,
    },
    /// Distances, stacking values and pebbling
    Pebble {
        #[command(subcommand)]
        command: PebbleCommand,
    },
    /// Run the invariant suites
    Verify {
        /// Level to generate; optional with --graph
        #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
        n: Option<u32>,
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Check a graph loaded from a JSON export instead of a generated one
        #[arg(long)]
        graph: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum PebbleCommand {
    /// Stacking value ST(v) = sum_u 2^d(u, v)
    St {
        #[command(flatten)]
        level: Level,
        /// Corner name or vertex index
        #[arg(long, default_value = "L")]
        vertex: VertexRef,
    },
    /// Cover pebbling number
    Lambda {
        #[command(flatten)]
        level: Level,
        /// Also evaluate max ST by breadth-first search
        #[arg(long)]
        check: bool,
    },
    /// Diameter
    Diam {
        #[command(flatten)]
        level: Level,
    },
    /// Decide cover-solvability (or reachability) of a configuration
    Solve {
        #[command(flatten)]
        level: Level,
        /// JSON file {"index": count} or stack:VERTEX:t
        #[arg(long)]
        config: String,
        /// Ask for a pebble on this vertex instead of covering everything
        #[arg(long)]
        target: Option<VertexRef>,
        #[arg(long, default_value_t = SearchBudget::default().max_weight)]
        max_weight: u32,
    },
    /// Pebbling number by exhaustive search
    Pi {
        #[arg(short = 'n', value_parser = clap::value_parser!(u32).range(1..))]
        n: Option<u32>,
        /// Oracle graph instead of S_n: path:K or complete:K
        #[arg(long)]
        graph: Option<String>,
    },
}

struct Report {
    text: String,
    json: Value,
    exit: u8,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            exit: 0,
        }
    }
}

enum Failure {
    Usage(String),
    Core(GasketError),
}

impl From<GasketError> for Failure {
    fn from(e: GasketError) -> Self {
        Failure::Core(e)
    }
}

type CmdResult = std::result::Result<Report, Failure>;

fn max_level() -> std::result::Result<u32, Failure> {
    match std::env::var("GASKET_MAX_LEVEL") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("GASKET_MAX_LEVEL={v:?} is not a level"))),
        Err(_) => Ok(DEFAULT_MAX_LEVEL),
    }
}

fn build(n: u32) -> std::result::Result<GasketGraph, Failure> {
    Ok(generate_with_max(n, max_level()?)?)
}

fn coord_json(c: Coord) -> Value {
    json!([c.a, c.b])
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn vertex_listing(g: &GasketGraph, vertices: &[usize], coords: bool) -> (String, Value) {
    if coords {
        let cs = as_coords(g, vertices);
        (
            join(&cs),
            Value::Array(cs.into_iter().map(coord_json).collect()),
        )
    } else {
        (join(vertices), json!(vertices))
    }
}

fn cmd_gen(level: Level, format: ExportFormat, output: Option<PathBuf>) -> CmdResult {
    let g = build(level.n)?;
    let mut bytes = Vec::new();
    export(&g, format, &mut bytes)?;
    match output {
        Some(path) => {
            std::fs::write(&path, &bytes).map_err(GasketError::from)?;
            Ok(Report::ok(
                format!("wrote S{} as {format} to {}\n", level.n, path.display()),
                json!({"level": level.n, "format": format.to_string(), "output": path.display().to_string()}),
            ))
        }
        None => Ok(Report::ok(
            String::from_utf8(bytes).expect("exports are UTF-8"),
            Value::Null,
        )),
    }
}

fn cmd_stats(level: Level) -> CmdResult {
    let g = build(level.n)?;
    let census = g.degree_census();
    let mut text = String::new();
    writeln!(text, "level      {}", g.level()).unwrap();
    writeln!(text, "side       {}", g.side()).unwrap();
    writeln!(text, "vertices   {}", g.vertex_count()).unwrap();
    writeln!(text, "edges      {}", g.edge_count()).unwrap();
    for (d, k) in &census {
        writeln!(text, "degree {d}   {k}").unwrap();
    }
    let corners: Vec<String> = Corner::ALL
        .iter()
        .map(|&c| format!("{c}={}", g.coord(g.corner(c))))
        .collect();
    writeln!(text, "corners    {}", corners.join(" ")).unwrap();
    if let Some(m) = g.middles() {
        writeln!(text, "middles    {}", join(m.iter().map(|&v| g.coord(v)))).unwrap();
    }
    let counts_ok = g.vertex_count() as u128 == vertex_count(g.level())
        && g.edge_count() as u128 == edge_count(g.level());
    writeln!(
        text,
        "closed form {}",
        if counts_ok { "agrees" } else { "DISAGREES" }
    )
    .unwrap();
    let json = json!({
        "level": g.level(),
        "side": g.side(),
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "degrees": census.iter().map(|(d, k)| (d.to_string(), json!(k))).collect::<serde_json::Map<_, _>>(),
        "corners": g.corners().iter().map(|&v| coord_json(g.coord(v))).collect::<Vec<_>>(),
        "closed_form_agrees": counts_ok,
    });
    Ok(Report {
        text,
        json,
        exit: if counts_ok { 0 } else { EXIT_VERIFY },
    })
}

fn cmd_color(level: Level) -> CmdResult {
    let g = build(level.n)?;
    let coloring = three_coloring(&g);
    let valid = validate_coloring(&g, &coloring);
    let mut text = String::new();
    writeln!(text, "class sizes {}", join(coloring.class_sizes())).unwrap();
    writeln!(text, "valid       {}", valid.is_ok()).unwrap();
    for v in 0..g.vertex_count() {
        writeln!(text, "{v} {} {}", g.coord(v), coloring.color(v)).unwrap();
    }
    let json = json!({
        "level": g.level(),
        "class_sizes": coloring.class_sizes(),
        "valid": valid.is_ok(),
        "colors": coloring.assignment(),
    });
    Ok(Report {
        text,
        json,
        exit: if valid.is_ok() { 0 } else { EXIT_VERIFY },
    })
}

fn certificate_report(
    g: &GasketGraph,
    kind: &str,
    length: usize,
    vertices: &[usize],
    coords: bool,
) -> Report {
    let (listing, values) = vertex_listing(g, vertices, coords);
    Report::ok(
        format!("{kind} of length {length}, valid\n{listing}\n"),
        json!({"kind": kind, "length": length, "vertices": values}),
    )
}

fn cmd_hampath(
    level: Level,
    from: Corner,
    to: Corner,
    len: Option<usize>,
    avoid: bool,
    coords: bool,
) -> CmdResult {
    if from == to {
        return Err(GasketError::InvalidCorners { from, to }.into());
    }
    let g = build(level.n)?;
    let path = match (len, avoid) {
        (None, false) => ham_path(&g, from, to)?,
        (None, true) => ham_path_avoid(&g, from, to)?,
        (Some(l), false) => path_of_length(&g, from, to, l)?,
        (Some(l), true) => avoiding_path_of_length(&g, from, to, l)?,
    };
    Ok(certificate_report(
        &g,
        "path",
        path.len(),
        &path.vertices,
        coords,
    ))
}

fn cmd_hamcycle(level: Level, len: Option<usize>, coords: bool) -> CmdResult {
    let g = build(level.n)?;
    let cycle = match len {
        None => ham_cycle(&g)?,
        Some(l) => cycle_of_length(&g, l)?,
    };
    Ok(certificate_report(
        &g,
        "cycle",
        cycle.len(),
        &cycle.vertices,
        coords,
    ))
}

fn cmd_dominate(level: Level, helpers: Option<u8>) -> CmdResult {
    let g = build(level.n)?;
    let (set, value) = match helpers {
        None => {
            let set = min_dominating_set(&g)?;
            let size = set.size();
            (set, size)
        }
        Some(k) => {
            let first = helper_sets(k as usize).remove(0);
            let value = gamma_k(&g, &first)?;
            (helped_dominating_set(&g, &first)?, value)
        }
    };
    let valid = validate_domination(&g, &set).is_ok();
    let witness: Vec<Coord> = set.members.iter().map(|&v| g.coord(v)).collect();
    let label = match helpers {
        None => "gamma".to_string(),
        Some(k) => format!("gamma^{k}"),
    };
    let helper_names = join(set.helpers.iter());
    let mut text = format!("{label} = {value}\n");
    if helpers.is_some() {
        writeln!(
            text,
            "helpers {}",
            if helper_names.is_empty() {
                "-"
            } else {
                &helper_names
            }
        )
        .unwrap();
    }
    writeln!(text, "witness {}", join(&witness)).unwrap();
    writeln!(text, "valid   {valid}").unwrap();
    let json = json!({
        "level": g.level(),
        "helpers": set.helpers.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "gamma": value,
        "witness": witness.into_iter().map(coord_json).collect::<Vec<_>>(),
        "valid": valid,
    });
    Ok(Report {
        text,
        json,
        exit: if valid { 0 } else { EXIT_VERIFY },
    })
}

fn cmd_gamma_table(max: u32) -> CmdResult {
    let mut text = String::from("n\tgamma\tefficiency\tdecimal\n");
    let mut rows = Vec::new();
    for n in 1..=max {
        let gamma = gamma_closed_form(n);
        let (ratio, decimal) = match efficiency(n) {
            Ok(e) => {
                let d = e.to_f64().unwrap_or(f64::NAN);
                (Some(e.to_string()), Some(d))
            }
            Err(_) => (None, None),
        };
        writeln!(
            text,
            "{n}\t{gamma}\t{}\t{}",
            ratio.as_deref().unwrap_or("-"),
            decimal.map_or("-".to_string(), |d| format!("{d:.6}"))
        )
        .unwrap();
        rows.push(json!({
            "n": n,
            "gamma": gamma.to_string(),
            "efficiency": ratio,
            "decimal": decimal,
        }));
    }
    Ok(Report::ok(text, Value::Array(rows)))
}

fn resolve_vertex(g: &GasketGraph, v: VertexRef) -> std::result::Result<usize, Failure> {
    match v {
        VertexRef::Corner(c) => Ok(g.corner(c)),
        VertexRef::Index(i) if i < g.vertex_count() => Ok(i),
        VertexRef::Index(i) => Err(GasketError::VertexOutOfRange {
            index: i,
            count: g.vertex_count(),
        }
        .into()),
    }
}

fn cmd_pebble(command: PebbleCommand) -> CmdResult {
    match command {
        PebbleCommand::St { level, vertex } => {
            let g = build(level.n)?;
            let v = resolve_vertex(&g, vertex)?;
            let profile = distances(&g, v)?;
            Ok(Report::ok(
                format!(
                    "ST{} = {}\nbeta {}\n",
                    g.coord(v),
                    profile.st_value,
                    join(&profile.beta)
                ),
                json!({
                    "level": g.level(),
                    "vertex": v,
                    "coord": coord_json(g.coord(v)),
                    "st": profile.st_value.to_string(),
                    "beta": profile.beta,
                }),
            ))
        }
        PebbleCommand::Lambda { level, check } => {
            let ceiling = max_level()?;
            if level.n > ceiling.min(31) {
                return Err(GasketError::LevelOutOfRange {
                    level: level.n,
                    max: ceiling.min(31),
                }
                .into());
            }
            let lambda = lambda_recursive(level.n);
            let mut text = format!("{lambda}\n");
            let mut json = json!({"level": level.n, "lambda": lambda.to_string()});
            let mut exit = 0;
            if check {
                let bfs = cover_pebbling_number(&build(level.n)?)?;
                let agrees = bfs == lambda;
                writeln!(
                    text,
                    "max ST by BFS {}",
                    if agrees { "agrees" } else { "DISAGREES" }
                )
                .unwrap();
                json["bfs"] = json!(bfs.to_string());
                json["agrees"] = json!(agrees);
                if !agrees {
                    exit = EXIT_VERIFY;
                }
            }
            Ok(Report { text, json, exit })
        }
        PebbleCommand::Diam { level } => {
            let g = build(level.n)?;
            let d = gasket_diameter(&g)?;
            Ok(Report::ok(
                format!("{d}\n"),
                json!({"level": g.level(), "diameter": d}),
            ))
        }
        PebbleCommand::Solve {
            level,
            config,
            target,
            max_weight,
        } => {
            let g = build(level.n)?;
            let text = if config.trim_start().starts_with("stack:") {
                config
            } else {
                std::fs::read_to_string(&config)
                    .map_err(|e| Failure::Usage(format!("cannot read {config}: {e}")))?
            };
            let start = text.parse::<ConfigSpec>()?.resolve(&g)?;
            let goal = match target {
                Some(t) => Goal::Reach(resolve_vertex(&g, t)?),
                None => Goal::Cover,
            };
            let budget = SearchBudget {
                max_weight,
                ..SearchBudget::default()
            };
            let mut solver = PebbleSolver::new(&g, goal, budget)?;
            let moves = solver.solve(&start)?;
            let goal_name = match goal {
                Goal::Cover => "cover".to_string(),
                Goal::Reach(t) => format!("reach {t}"),
            };
            let mut out = format!("goal     {goal_name}\nweight   {}\n", start.weight());
            match &moves {
                Some(m) => {
                    let end = replay(&g, &start, m)?;
                    writeln!(out, "solvable yes\nmoves    {}", m.len()).unwrap();
                    for mv in m {
                        writeln!(out, "{} -> {}", mv.from, mv.to).unwrap();
                    }
                    writeln!(out, "final    {}", join(end.counts())).unwrap();
                }
                None => writeln!(out, "solvable no").unwrap(),
            }
            let json = json!({
                "level": g.level(),
                "goal": goal_name,
                "weight": start.weight(),
                "solvable": moves.is_some(),
                "moves": moves,
            });
            Ok(Report::ok(out, json))
        }
        PebbleCommand::Pi { n, graph } => {
            let budget = SearchBudget::default();
            let (name, pi) = match (n, graph) {
                (_, Some(spec)) => {
                    let small = oracle_graph(&spec)?;
                    (spec, pebbling_number_search(&small, budget)?)
                }
                (Some(n), None) => {
                    let g = build(n)?;
                    (format!("S{n}"), pebbling_number_search(&g, budget)?)
                }
                (None, None) => return Err(Failure::Usage("pebble pi needs -n or --graph".into())),
            };
            Ok(Report::ok(
                format!("pi({name}) = {pi}\n"),
                json!({"graph": name, "pi": pi}),
            ))
        }
    }
}

fn oracle_graph(spec: &str) -> std::result::Result<SmallGraph, Failure> {
    let bad = || Failure::Usage(format!("expected path:K or complete:K, got {spec:?}"));
    let (kind, k) = spec.split_once(':').ok_or_else(bad)?;
    let k: usize = k.parse().map_err(|_| bad())?;
    if k == 0 {
        return Err(bad());
    }
    match kind {
        "path" => Ok(SmallGraph::path(k)),
        "complete" => Ok(SmallGraph::complete(k)),
        _ => Err(bad()),
    }
}

fn cmd_verify(n: Option<u32>, suite: Suite, graph: Option<PathBuf>) -> CmdResult {
    let g = match (graph, n) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let g = from_json(&text)?;
            if n.is_some_and(|n| n != g.level()) {
                return Err(Failure::Usage(format!(
                    "-n disagrees with the level {} stored in {}",
                    g.level(),
                    path.display()
                )));
            }
            g
        }
        (None, Some(n)) => build(n)?,
        (None, None) => return Err(Failure::Usage("verify needs -n or --graph".into())),
    };
    let results = run_suite(&g, suite);
    let failed = results.iter().filter(|r| !r.passed()).count();
    let mut text = String::new();
    for r in &results {
        let tag = match r.outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Skip => "SKIP",
        };
        writeln!(
            text,
            "{tag}  {:<10} {}: {}",
            r.suite.to_string(),
            r.name,
            r.detail
        )
        .unwrap();
    }
    writeln!(text, "{} checks, {failed} failed", results.len()).unwrap();
    let json = json!({
        "level": g.level(),
        "suite": suite.to_string(),
        "passed": failed == 0,
        "results": results.iter().map(|r| json!({
            "suite": r.suite.to_string(),
            "name": r.name,
            "outcome": format!("{:?}", r.outcome).to_lowercase(),
            "detail": r.detail,
        })).collect::<Vec<_>>(),
    });
    Ok(Report {
        text,
        json,
        exit: if failed == 0 { 0 } else { EXIT_VERIFY },
    })
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Gen {
            level,
            format,
            output,
        } => cmd_gen(level, format, output),
        Command::Stats { level } => cmd_stats(level),
        Command::Color { level } => cmd_color(level),
        Command::Hampath {
            level,
            from,
            to,
            len,
            avoid,
            coords,
        } => cmd_hampath(level, from, to, len, avoid, coords),
        Command::Hamcycle { level, len, coords } => cmd_hamcycle(level, len, coords),
        Command::Dominate { level, helpers } => cmd_dominate(level, helpers),
        Command::GammaTable { max } => cmd_gamma_table(max),
        Command::Pebble { command } => cmd_pebble(command),
        Command::Verify { n, suite, graph } => cmd_verify(n, suite, graph),
    }
}

fn exit_code_for(e: &GasketError) -> u8 {
    match e {
        e if e.is_resource_limit() => EXIT_RESOURCE,
        GasketError::Invariant(_) | GasketError::InvalidCertificate(_) => EXIT_VERIFY,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let written = if json && !report.json.is_null() {
                writeln!(out, "{}", report.json)
            } else {
                out.write_all(report.text.as_bytes())
            };
            if written.and_then(|_| out.flush()).is_err() {
                return ExitCode::from(EXIT_USAGE);
            }
            ExitCode::from(report.exit)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
