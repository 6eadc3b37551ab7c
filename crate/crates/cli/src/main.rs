use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use regmatch::report::{to_json, to_json_line, DecompositionReport};
use regmatch::{
    construct, construct_best_effort, decompose, exhaustive_graphs,
    exists_good_maximum_matching_within, fixture, gen_gadget_regular, gen_random_regular,
    is_maximum, parse_graph6, parse_matching_pairs, random_graphs, scan_graphs, shared_neighbour,
    write_graph6, write_matching, write_mel, Error, GraphFormat, Matching, Multigraph,
    RandomSource, DEFAULT_MAX_SUPPORT_EDGES,
};

#[derive(Parser)]
#[command(
    name = "regmatch",
    version,
    about = "Maximum matchings of regular (multi)graphs whose unsaturated vertices pairwise share no neighbour"
)]
struct Cli {
    /// Print JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a maximum matching whose unsaturated vertices share no neighbour.
    Construct {
        #[command(flatten)]
        input: GraphInput,
        /// Run the decomposition pipeline even outside the supported regimes.
        #[arg(long)]
        best_effort: bool,
    },
    /// Check a matching file against a graph.
    Verify {
        #[command(flatten)]
        input: GraphInput,
        /// File with one `u v` pair per line.
        #[arg(long)]
        matching: PathBuf,
    },
    /// Print the Gallai–Edmonds decomposition.
    Decompose {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Enumerate all maximum matchings by brute force.
    Oracle {
        #[command(flatten)]
        input: GraphInput,
        /// Refuse graphs with more adjacent pairs than this.
        #[arg(long, default_value_t = DEFAULT_MAX_SUPPORT_EDGES)]
        max_edges: usize,
    },
    /// Cross-check construct against the oracle over many graphs; JSON lines.
    Scan(ScanArgs),
    /// Generate a random regular graph or print a fixture.
    Gen(GenArgs),
}

#[derive(Args)]
struct GraphInput {
    /// Graph file, or `-` for standard input.
    #[arg(default_value = "-")]
    input: String,
    /// Input format; by default taken from the extension or sniffed.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Graph6,
    Mel,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Graph6 => GraphFormat::Graph6,
            FormatArg::Mel => GraphFormat::Mel,
        }
    }
}

#[derive(Args)]
struct ScanArgs {
    /// Exhaustive mode: every k-regular graph with at most this many vertices.
    #[arg(long, conflicts_with_all = ["trials", "input"])]
    n_max: Option<usize>,
    /// Random mode: number of graphs to draw.
    #[arg(long, conflicts_with = "input")]
    trials: Option<usize>,
    /// Read graph6 lines from this file (`-` for standard input) instead.
    #[arg(long)]
    input: Option<String>,
    #[arg(long, default_value_t = 3)]
    k: u32,
    /// Allow parallel edges.
    #[arg(long)]
    multi: bool,
    /// Base seed of random mode; graph i uses seed + i.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random mode: order of pairing-model graphs.
    #[arg(long, conflicts_with = "gadget_hubs")]
    n: Option<usize>,
    /// Random mode: build deficient graphs from odd gadgets around this many hubs.
    #[arg(long)]
    gadget_hubs: Option<usize>,
    /// Oracle limit on adjacent pairs.
    #[arg(long, default_value_t = DEFAULT_MAX_SUPPORT_EDGES)]
    max_edges: usize,
}

#[derive(Args)]
struct GenArgs {
    /// Number of vertices (pairing model).
    #[arg(long, required_unless_present_any = ["gadget_hubs", "fixture"], conflicts_with_all = ["gadget_hubs", "fixture"])]
    n: Option<usize>,
    #[arg(long, required_unless_present = "fixture")]
    k: Option<usize>,
    /// Print a named fixture instead (petersen, qt4, penta5, dtri, cubic16).
    #[arg(long, conflicts_with_all = ["gadget_hubs", "k", "multi", "seed"])]
    fixture: Option<String>,
    /// Allow parallel edges.
    #[arg(long)]
    multi: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Build from odd gadgets around this many hubs instead.
    #[arg(long)]
    gadget_hubs: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value = "mel")]
    format: FormatArg,
}

/// A failure together with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_theory_or_regime() { 2 } else { 1 },
            message: e.to_string(),
        }
    }
}

fn input_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

fn read_source(source: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if source == "-" {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| input_failure(format!("reading standard input: {e}")))?;
    } else {
        text = std::fs::read_to_string(source)
            .map_err(|e| input_failure(format!("reading {source}: {e}")))?;
    }
    Ok(text)
}

/// MEL lines contain whitespace; a graph6 line never does.
fn sniff_format(text: &str) -> GraphFormat {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(line) if !line.contains(char::is_whitespace) => GraphFormat::Graph6,
        _ => GraphFormat::Mel,
    }
}

fn load_graph(input: &GraphInput) -> Result<Multigraph, Failure> {
    let text = read_source(&input.input)?;
    let format = match input.format {
        Some(f) => f.into(),
        None => {
            GraphFormat::from_path(Path::new(&input.input)).unwrap_or_else(|| sniff_format(&text))
        }
    };
    Ok(format.parse(&text)?)
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, Failure> {
    let json = cli.json;
    let text = match cli.command {
        Command::Construct { input, best_effort } => {
            let g = load_graph(&input)?;
            let report = if best_effort {
                construct_best_effort(&g)?
            } else {
                construct(&g)?
            };
            if json {
                to_json("construction", &report)
            } else {
                format!(
                    "# regime {}\n# n {} k {} nu {} deficiency {}\n# unsaturated {:?}\n# property_holds {}\n{}",
                    report.regime.tag(),
                    report.n,
                    report.k,
                    report.nu,
                    report.deficiency,
                    report.unsaturated.as_slice(),
                    report.property_holds,
                    write_matching(&report.matching)
                )
                .trim_end()
                .to_string()
            }
        }
        Command::Verify { input, matching } => {
            let g = load_graph(&input)?;
            let pairs = parse_matching_pairs(&read_source(&matching.to_string_lossy())?)?;
            let m = Matching::from_pairs(&g, &pairs)?;
            let maximum = is_maximum(&g, &m)?;
            let shared = shared_neighbour(&g, &m);
            let holds = maximum && shared.is_none();
            let text = if json {
                to_json(
                    "verification",
                    &serde_json::json!({
                        "size": m.len(),
                        "maximum": maximum,
                        "unsaturated": m.unsaturated(),
                        "shared_neighbour": shared,
                        "property_holds": holds,
                    }),
                )
            } else {
                let mut t = format!("size {}\nmaximum {maximum}\n", m.len());
                if let Some((u, v, w)) = shared {
                    t.push_str(&format!(
                        "unsaturated {u} and {v} share the neighbour {w}\n"
                    ));
                }
                t.push_str(&format!("property_holds {holds}"));
                t
            };
            writeln!(out, "{text}").map_err(|e| input_failure(e.to_string()))?;
            return Ok(if holds { 0 } else { 1 });
        }
        Command::Decompose { input } => {
            let g = load_graph(&input)?;
            let ge = decompose(&g)?;
            let report = DecompositionReport::new(&g, &ge);
            if json {
                to_json("decomposition", &report)
            } else {
                let mut t = format!(
                    "regime {}\nn {}\ndeficiency {}\nD {:?}\nA {:?}\nC {:?}\n",
                    report.regime,
                    report.n,
                    report.deficiency,
                    ge.d.as_slice(),
                    ge.a.as_slice(),
                    ge.c.as_slice()
                );
                for (i, (q, good)) in ge.components.iter().zip(&report.good_vertices).enumerate() {
                    t.push_str(&format!(
                        "Q{i} {:?} good {:?}\n",
                        q.as_slice(),
                        good.as_slice()
                    ));
                }
                t.trim_end().to_string()
            }
        }
        Command::Oracle { input, max_edges } => {
            let g = load_graph(&input)?;
            let verdict = exists_good_maximum_matching_within(&g, max_edges)?;
            if json {
                to_json("oracle", &verdict)
            } else {
                let mut t = format!(
                    "nu {}\nmaximum_matchings {}\ngood_exists {}",
                    verdict.nu, verdict.maximum_matching_count, verdict.good_exists
                );
                if let Some(w) = &verdict.witness {
                    t.push('\n');
                    t.push_str(write_matching(w).trim_end());
                }
                t
            }
        }
        Command::Scan(args) => return scan(args, out),
        Command::Gen(args) => {
            let simple = !args.multi;
            let k = args.k.unwrap_or(0);
            let g = match (&args.fixture, args.gadget_hubs) {
                (Some(name), _) => fixture(name)?,
                (None, Some(hubs)) => gen_gadget_regular(k, simple, hubs, args.seed)?,
                (None, None) => gen_random_regular(args.n.unwrap_or(0), k, simple, args.seed)?,
            };
            match args.format {
                FormatArg::Mel => write_mel(&g).trim_end().to_string(),
                FormatArg::Graph6 => write_graph6(&g)?,
            }
        }
    };
    writeln!(out, "{text}").map_err(|e| input_failure(e.to_string()))?;
    Ok(0)
}

fn scan(args: ScanArgs, out: &mut impl Write) -> Result<u8, Failure> {
    let simple = !args.multi;
    let graphs = if let Some(n_max) = args.n_max {
        exhaustive_graphs(n_max, args.k, simple)?
    } else if let Some(source) = &args.input {
        read_source(source)?
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(parse_graph6)
            .collect::<Result<Vec<_>, _>>()?
    } else {
        let trials = args
            .trials
            .ok_or_else(|| input_failure("scan needs one of --n-max, --trials or --input"))?;
        let source = match (args.n, args.gadget_hubs) {
            (Some(n), _) => RandomSource::Pairing { n },
            (None, Some(hubs)) => RandomSource::Gadgets { hubs },
            (None, None) => return Err(input_failure("random scan needs --n or --gadget-hubs")),
        };
        random_graphs(source, args.k, simple, trials, args.seed)?
    };
    let report = scan_graphs(&graphs, args.max_edges);
    let write_err = |e: std::io::Error| input_failure(e.to_string());
    for record in &report.records {
        writeln!(out, "{}", to_json_line("scan-record", record)).map_err(write_err)?;
    }
    writeln!(out, "{}", to_json_line("scan-summary", &report.summary)).map_err(write_err)?;
    Ok(if report.summary.discrepancies > 0 {
        2
    } else {
        0
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    };
    if out.flush().is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
